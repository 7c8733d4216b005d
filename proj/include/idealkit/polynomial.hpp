/*
 * polynomial.hpp
 * --------------
 * Multivariate polynomials with exact coefficients.  Terms are kept in a
 * map sorted by degrevlex, so the canonical form is unique and the
 * leading term is the last entry.  Zero coefficients are never stored.
 */
#pragma once

#include <map>

#include "idealkit/field.hpp"
#include "idealkit/monomial.hpp"

namespace idealkit {

struct Polynomial {
  std::map<Monomial, Q, DegrevlexLess> terms;

  bool is_zero() const { return terms.empty(); }

  int nvars() const {
    return terms.empty() ? -1 : terms.begin()->first.nvars();
  }

  int degree() const {  // max total degree; -1 for the zero polynomial
    int d = -1;
    for (auto& [m, c] : terms) d = std::max(d, m.degree());
    return d;
  }

  int order() const {  // min total degree among terms; -1 for zero
    int d = -1;
    for (auto& [m, c] : terms) d = (d < 0) ? m.degree() : std::min(d, m.degree());
    return d;
  }

  const Monomial& lead_monomial() const {
    if (is_zero()) throw std::logic_error("lead of zero polynomial");
    return std::prev(terms.end())->first;
  }
  const Q& lead_coeff() const {
    if (is_zero()) throw std::logic_error("lead of zero polynomial");
    return std::prev(terms.end())->second;
  }

  bool operator==(const Polynomial& o) const { return terms == o.terms; }
  bool operator!=(const Polynomial& o) const { return terms != o.terms; }
  // Lexicographic over (monomial, coefficient) pairs; spelled out
  // because mpq_class does not synthesize operator<=>.
  bool operator<(const Polynomial& o) const {
    auto a = terms.begin(), b = o.terms.begin();
    for (; a != terms.end() && b != o.terms.end(); ++a, ++b) {
      Ordering c = compare_monomials(a->first, b->first);
      if (c != Ordering::equal) return c == Ordering::less;
      int cc = cmp(a->second, b->second);
      if (cc != 0) return cc < 0;
    }
    return a == terms.end() && b != o.terms.end();
  }

  std::string str(const std::vector<std::string>& vars) const;
};

Polynomial poly_zero();
Polynomial poly_constant(int nvars, const Q& c, const Field& F);
Polynomial poly_term(const Monomial& m, const Q& c, const Field& F);
Polynomial poly_from_monomial(const Monomial& m);

void poly_add_term(Polynomial& p, const Monomial& m, const Q& c, const Field& F);

Polynomial poly_add(const Polynomial& p, const Polynomial& q, const Field& F);
Polynomial poly_sub(const Polynomial& p, const Polynomial& q, const Field& F);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q, const Field& F);
Polynomial poly_scale(const Polynomial& p, const Q& c, const Field& F);
Polynomial poly_mul_monomial(const Polynomial& p, const Monomial& m);
Polynomial poly_monic(const Polynomial& p, const Field& F);

// Drops every term of total degree >= bound.
Polynomial poly_truncate(const Polynomial& p, int bound);

// Replaces x_var by value (a polynomial in the same variable set that
// does not mention x_var itself).
Polynomial poly_substitute(const Polynomial& p, int var,
                           const Polynomial& value, const Field& F);

// Removes coordinate var from every exponent vector; p must not use it.
Polynomial poly_project_out(const Polynomial& p, int var);

Q poly_eval(const Polynomial& p, const std::vector<Q>& point, const Field& F);

void check_same_context(const Polynomial& p, const Polynomial& q);

}  // namespace idealkit
