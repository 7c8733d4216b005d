#include "idealkit/polynomial.hpp"

namespace idealkit {

Polynomial poly_zero() { return Polynomial{}; }

Polynomial poly_constant(int nvars, const Q& c, const Field& F) {
  return poly_term(Monomial::one(nvars), c, F);
}

Polynomial poly_term(const Monomial& m, const Q& c, const Field& F) {
  Polynomial p;
  Q r = F.reduce(c);
  if (r != 0) p.terms.emplace(m, r);
  return p;
}

Polynomial poly_from_monomial(const Monomial& m) {
  Polynomial p;
  p.terms.emplace(m, Q(1));
  return p;
}

void check_same_context(const Polynomial& p, const Polynomial& q) {
  if (!p.is_zero() && !q.is_zero() && p.nvars() != q.nvars())
    throw std::invalid_argument("polynomials over different variable sets");
}

void poly_add_term(Polynomial& p, const Monomial& m, const Q& c, const Field& F) {
  auto it = p.terms.find(m);
  if (it == p.terms.end()) {
    Q r = F.reduce(c);
    if (r != 0) p.terms.emplace(m, r);
  } else {
    it->second = F.add(it->second, c);
    if (it->second == 0) p.terms.erase(it);
  }
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q, const Field& F) {
  check_same_context(p, q);
  Polynomial r = p;
  for (auto& [m, c] : q.terms) poly_add_term(r, m, c, F);
  return r;
}

Polynomial poly_sub(const Polynomial& p, const Polynomial& q, const Field& F) {
  check_same_context(p, q);
  Polynomial r = p;
  for (auto& [m, c] : q.terms) poly_add_term(r, m, F.neg(c), F);
  return r;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q, const Field& F) {
  check_same_context(p, q);
  Polynomial r;
  for (auto& [mp, cp] : p.terms)
    for (auto& [mq, cq] : q.terms) poly_add_term(r, mp * mq, F.mul(cp, cq), F);
  return r;
}

Polynomial poly_scale(const Polynomial& p, const Q& c, const Field& F) {
  Polynomial r;
  for (auto& [m, pc] : p.terms) {
    Q v = F.mul(pc, c);
    if (v != 0) r.terms.emplace(m, v);
  }
  return r;
}

Polynomial poly_mul_monomial(const Polynomial& p, const Monomial& m) {
  Polynomial r;
  for (auto& [pm, c] : p.terms) r.terms.emplace(pm * m, c);
  return r;
}

Polynomial poly_monic(const Polynomial& p, const Field& F) {
  if (p.is_zero()) return p;
  return poly_scale(p, F.inv(p.lead_coeff()), F);
}

Polynomial poly_truncate(const Polynomial& p, int bound) {
  Polynomial r;
  for (auto& [m, c] : p.terms)
    if (m.degree() < bound) r.terms.emplace(m, c);
  return r;
}

Polynomial poly_substitute(const Polynomial& p, int var,
                           const Polynomial& value, const Field& F) {
  if (!value.is_zero())
    for (auto& [m, c] : value.terms)
      if (m[var] != 0)
        throw std::invalid_argument("substitution value mentions the variable");
  Polynomial out;
  std::vector<Polynomial> powers;  // value^k, built on demand
  for (auto& [m, c] : p.terms) {
    const int k = m[var];
    Monomial rest = m;
    rest.e[var] = 0;
    Polynomial term = poly_term(rest, c, F);
    if (k > 0) {
      while (static_cast<int>(powers.size()) < k) {
        Polynomial next =
            powers.empty() ? value : poly_mul(powers.back(), value, F);
        powers.push_back(std::move(next));
      }
      term = poly_mul(term, powers[k - 1], F);
    }
    out = poly_add(out, term, F);
  }
  return out;
}

Polynomial poly_project_out(const Polynomial& p, int var) {
  Polynomial out;
  for (auto& [m, c] : p.terms) {
    if (m[var] != 0)
      throw std::invalid_argument("projected variable still present");
    Monomial small;
    small.e.reserve(m.e.size() - 1);
    for (size_t i = 0; i < m.e.size(); ++i)
      if (static_cast<int>(i) != var) small.e.push_back(m.e[i]);
    out.terms.emplace(std::move(small), c);
  }
  return out;
}

Q poly_eval(const Polynomial& p, const std::vector<Q>& point, const Field& F) {
  Q total = 0;
  for (auto& [m, c] : p.terms) {
    Q v = c;
    for (int i = 0; i < m.nvars(); ++i)
      for (int k = 0; k < m[i]; ++k) v = F.mul(v, point[i]);
    total = F.add(total, v);
  }
  return total;
}

std::string Polynomial::str(const std::vector<std::string>& vars) const {
  if (is_zero()) return "0";
  std::string s;
  // Print leading term first.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Q& c = it->second;
    std::string coeff = c.get_str();
    bool neg = coeff.size() && coeff[0] == '-';
    if (neg) coeff = coeff.substr(1);
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (it->first.is_one())
      s += coeff;
    else if (coeff == "1")
      s += it->first.str(vars);
    else
      s += coeff + "*" + it->first.str(vars);
  }
  return s;
}

}  // namespace idealkit
