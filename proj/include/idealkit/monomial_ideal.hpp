/*
 * monomial_ideal.hpp
 * ------------------
 * Monomial ideals in a regular polynomial ring: staircases, colengths,
 * Newton polyhedra, integral closures, normalized volumes, and the
 * enumeration of integrally closed two-variable staircases.
 */
#pragma once

#include <optional>
#include <vector>

#include "idealkit/monomial.hpp"
#include "idealkit/field.hpp"

namespace idealkit {

struct MonomialIdeal {
  int dim = 0;                  // number of variables
  std::vector<Monomial> gens;   // antichain, sorted (degrevlex)

  bool contains(const Monomial& m) const {
    for (auto& g : gens)
      if (g.divides(m)) return true;
    return false;
  }

  bool is_unit() const {
    return gens.size() == 1 && gens[0].is_one();
  }

  // m-primary iff every coordinate has a pure-power generator.
  bool is_m_primary() const;

  // Least e with x_i^e in the ideal, or -1 if none (not m-primary).
  int pure_power_bound(int i) const;

  bool operator==(const MonomialIdeal& o) const {
    return dim == o.dim && gens == o.gens;
  }
  bool operator<(const MonomialIdeal& o) const;
};

MonomialIdeal minimalize(int dim, std::vector<Monomial> gens);

// Number of standard monomials; nullopt means infinite (not m-primary).
std::optional<long> colength(const MonomialIdeal& I);

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, int n);

MonomialIdeal max_ideal(int dim);                 // (x_1, ..., x_d)
MonomialIdeal unit_ideal(int dim);

// ord and Loewy length read off the staircase (regular-ring case).
int monomial_ord(const MonomialIdeal& I);
int monomial_loewy(const MonomialIdeal& I);

struct NewtonMembershipCertificate {
  Monomial point;
  std::vector<Q> weights;  // convex coefficients over I.gens
  std::vector<Q> slack;    // point - sum(w_i * g_i), componentwise >= 0
  bool verify(const MonomialIdeal& I) const;
};

// Certificate iff point lies in conv(gens) + nonnegative orthant,
// decided by exact rational LP.
std::optional<NewtonMembershipCertificate> newton_member(
    const Monomial& v, const MonomialIdeal& I);

MonomialIdeal integral_closure(const MonomialIdeal& I);

// d! * vol(orthant minus Newton polyhedron), exact.  d <= 3.
Q normalized_volume(const MonomialIdeal& I);

// Two-variable staircases as weakly decreasing column heights.
MonomialIdeal staircase_from_heights(const std::vector<int>& heights);
std::vector<int> heights_from_staircase(const MonomialIdeal& I);

// Every m-primary, integrally closed monomial ideal in 2 variables with
// colength <= max_colength, each exactly once, in deterministic order
// (colength, then lexicographic height sequence).
std::vector<MonomialIdeal> enumerate_integrally_closed(int d, int max_colength,
                                                       int cap = 64);

}  // namespace idealkit
