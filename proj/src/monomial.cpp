#include "idealkit/monomial.hpp"

namespace idealkit {

Ordering compare_monomials(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("monomial dimension mismatch");
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? Ordering::greater : Ordering::less;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i])
      return a.e[i] < b.e[i] ? Ordering::greater : Ordering::less;
  }
  return Ordering::equal;
}

std::string Monomial::str(const std::vector<std::string>& vars) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

static void enumerate_rec(int nvars, int pos, int remaining, std::vector<int>& cur,
                          std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = k;
    enumerate_rec(nvars, pos + 1, remaining - k, cur, out);
  }
  cur[pos] = 0;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  std::vector<int> cur(nvars, 0);
  enumerate_rec(nvars, 0, degree, cur, out);
  return out;
}

}  // namespace idealkit
