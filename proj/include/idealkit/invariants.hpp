/*
 * invariants.hpp
 * --------------
 * Per-ideal invariants: minimal generators, Loewy length, order,
 * m-fullness, integral-closure check (monomial case), and hyperplane
 * sections for general-element arguments.
 */
#pragma once

#include <optional>
#include <random>

#include "idealkit/groebner.hpp"
#include "idealkit/monomial_ideal.hpp"

namespace idealkit {

struct IdealHandle {
  RingPresentation ring;
  std::vector<Polynomial> gens;

  bool monomial() const { return monomial_case(ring, gens); }
  // Valid only in the monomial case.
  MonomialIdeal as_monomial_ideal() const;
};

long ideal_length(const IdealHandle& I, const ModelOptions& opt = {});

// mu(I) = length(R/mI) - length(R/I).
long mu(const IdealHandle& I, const ModelOptions& opt = {});

// Least n with m^n inside I.
int loewy_length(const IdealHandle& I, const ModelOptions& opt = {});

// Largest s with I inside m^s.
int ord(const IdealHandle& I, const ModelOptions& opt = {});

// Generators of m*I.
std::vector<Polynomial> scale_by_max_ideal(const IdealHandle& I);

struct MFullResult {
  bool m_full = false;
  Polynomial witness;                 // successful z (when m_full)
  std::vector<Polynomial> tried;      // all candidates attempted
};

// Tries z = x_1 + ... + x_n first, then seeded random linear forms with
// coefficients in [-10, 10].  m-fullness is generic, so any success is
// a certificate; failure after all trials is probabilistic.
MFullResult is_m_full(const IdealHandle& I, int trials = 5,
                      unsigned long seed = 0, const ModelOptions& opt = {});

// Decides only for monomial ideals in regular rings; nullopt otherwise.
std::optional<bool> is_integrally_closed(const IdealHandle& I);

// R/(z) for a linear form z, with the dimension decremented.
RingPresentation section_ring(const RingPresentation& ring,
                              const Polynomial& z);

// Deterministic stream of candidate linear forms (index 0 is all-ones).
Polynomial linear_form_candidate(const RingPresentation& ring, int index,
                                 unsigned long seed);

}  // namespace idealkit
