/*
 * field.hpp
 * ---------
 * Coefficient fields: arbitrary-precision rationals (GMP) and prime
 * fields GF(p).  All coefficient arithmetic in the project goes through
 * Field so that GF(p) values stay in canonical form [0, p).
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace idealkit {

using Q = mpq_class;
using Z = mpz_class;

struct Field {
  enum class Kind { rationals, prime };

  Kind kind = Kind::rationals;
  unsigned long p = 0;  // characteristic, prime-field only

  static Field rationals() { return Field{Kind::rationals, 0}; }
  static Field prime(unsigned long p);

  bool is_prime_field() const { return kind == Kind::prime; }
  unsigned long characteristic() const { return is_prime_field() ? p : 0; }

  // Canonical representative: identity over Q, residue in [0, p) over GF(p).
  Q reduce(const Q& a) const;

  Q add(const Q& a, const Q& b) const { return reduce(a + b); }
  Q sub(const Q& a, const Q& b) const { return reduce(a - b); }
  Q mul(const Q& a, const Q& b) const { return reduce(a * b); }
  Q neg(const Q& a) const { return reduce(-a); }
  Q inv(const Q& a) const;

  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string describe() const;
};

bool is_prime(unsigned long n);

}  // namespace idealkit
