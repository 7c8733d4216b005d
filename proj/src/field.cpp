#include "idealkit/field.hpp"

namespace idealkit {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(unsigned long p) {
  if (!is_prime(p))
    throw std::invalid_argument("GF(" + std::to_string(p) + "): not a prime");
  return Field{Kind::prime, p};
}

Q Field::reduce(const Q& a) const {
  if (kind == Kind::rationals) {
    Q r = a;
    r.canonicalize();
    return r;
  }
  // a = num/den with den invertible mod p; result is an integer residue.
  Z num = a.get_num();
  Z den = a.get_den();
  Z mod(static_cast<unsigned long>(p));
  Z dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible mod p");
  Z r = (num % mod) * dinv % mod;
  if (r < 0) r += mod;
  return Q(r);
}

Q Field::inv(const Q& a) const {
  if (a == 0) throw std::domain_error("division by zero");
  if (kind == Kind::rationals) return 1 / a;
  Z num = reduce(a).get_num();
  Z mod(static_cast<unsigned long>(p));
  Z r;
  if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::domain_error("element not invertible mod p");
  return Q(r);
}

std::string Field::describe() const {
  return kind == Kind::rationals ? "QQ" : "GF(" + std::to_string(p) + ")";
}

}  // namespace idealkit
