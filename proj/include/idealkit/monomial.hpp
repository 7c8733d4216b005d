/*
 * monomial.hpp
 * ------------
 * Exponent vectors and the degrevlex term order.  The order is graded:
 * higher total degree wins; on equal degree the monomial with the
 * smaller exponent at the last differing variable (from the right) wins.
 */
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace idealkit {

struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {
    for (int x : e)
      if (x < 0) throw std::invalid_argument("negative exponent");
  }
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial var(int nvars, int i, int power = 1) {
    std::vector<int> v(nvars, 0);
    v[i] = power;
    return Monomial(std::move(v));
  }

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_one() const { return degree() == 0; }
  int operator[](int i) const { return e[i]; }

  bool divides(const Monomial& other) const {
    for (int i = 0; i < nvars(); ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    std::vector<int> v(e);
    for (int i = 0; i < nvars(); ++i) v[i] += o.e[i];
    return Monomial(std::move(v));
  }

  // Exact division; caller must ensure o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    std::vector<int> v(e);
    for (int i = 0; i < nvars(); ++i) v[i] -= o.e[i];
    return Monomial(std::move(v));
  }

  Monomial lcm(const Monomial& o) const {
    std::vector<int> v(e);
    for (int i = 0; i < nvars(); ++i)
      if (o.e[i] > v[i]) v[i] = o.e[i];
    return Monomial(std::move(v));
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  std::string str(const std::vector<std::string>& vars) const;
};

enum class Ordering { less, equal, greater };

// Degrevlex.  Both arguments must live in the same variable set.
Ordering compare_monomials(const Monomial& a, const Monomial& b);

struct DegrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b) == Ordering::less;
  }
};

// All monomials of the given exact total degree, in deterministic order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace idealkit
