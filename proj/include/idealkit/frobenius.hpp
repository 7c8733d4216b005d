/*
 * frobenius.hpp
 * -------------
 * Characteristic-p machinery: Frobenius bracket powers, nu_e ladders,
 * F-threshold estimates, and the dimension-two multiplicity bounds tied
 * to them.  Limits are never extrapolated: the artifact reports the
 * exact nu_e / p^e ladder plus the regular-case closed form ll(J) + 1.
 */
#pragma once

#include <map>

#include "idealkit/hilbert.hpp"

namespace idealkit {

struct NuSequence {
  IdealHandle a, J;
  unsigned long p = 0;
  std::map<int, long> entries;   // e -> nu_e
  std::map<int, Q> estimates;    // e -> nu_e / p^e
  // Regular-case closed form ll(J) + 1, when a = m and J is a monomial
  // parameter ideal; bracket_ok records the monotone bracket check.
  std::optional<long> closed_form;
  bool bracket_ok = false;
};

struct FrobeniusVerdict {
  std::string name;
  Q lhs, rhs;
  bool holds = false;
  std::map<std::string, long> details;
};

// q must be a power of the ring characteristic; generators are raised
// to the q-th power.
IdealHandle bracket_power(const IdealHandle& J, long q);

// Least N with a^N inside J^[p^e]; binary search over
// [1, (ll(J)+1) * p^e].
long nu(const IdealHandle& a, const IdealHandle& J, int e,
        const ModelOptions& opt = {});

NuSequence fthreshold_estimate(const IdealHandle& a, const IdealHandle& J,
                               int e_max, const ModelOptions& opt = {});

// e(J) <= (ll(J)+1)^2 / 4 for parameter ideals in dim-2 regular rings.
FrobeniusVerdict check_hmtw_dim2(const IdealHandle& J,
                                 const ModelOptions& opt = {});

// ll(closure(J)) <= ceil((th - ord(J)) / (d-1)), th = ll(J)+1, for
// monomial parameter ideals in regular rings.
FrobeniusVerdict check_crll(const IdealHandle& J,
                            const ModelOptions& opt = {});

// Characteristic-free numeric reading of the threshold bound:
// e(J) <= ((d + ll(J) - 1) / d)^d for monomial parameter ideals,
// d = 2 or 3, any coefficient field.  Reported as one possible reading,
// not asserted as the intended one.
FrobeniusVerdict check_charfree_bound(const IdealHandle& J);

}  // namespace idealkit
