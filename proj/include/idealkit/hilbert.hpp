/*
 * hilbert.hpp
 * -----------
 * Hilbert-Samuel tables and everything fitted from them: e(I), the
 * dimension-two coefficients (e, e1, e2), mixed multiplicities, fiber
 * and normal-fiber multiplicities, and associated-graded h-vectors.
 *
 * e is read off the d-th finite difference and only reported when the
 * difference is constant over a window of three; "unstabilized" is a
 * first-class status, never an extrapolation.
 */
#pragma once

#include "idealkit/invariants.hpp"

namespace idealkit {

struct HilbertSamuelTable {
  std::vector<long> values;  // n -> length(R/I^n), n = 0..n_max
  int dim = 0;
  bool stabilized = false;
  int stabilized_at = -1;    // least n with the d-th difference constant on
  long e = 0;                // valid iff stabilized
};

struct HilbertCoefficients {
  long e, e1, e2;  // dim-2 tail: l(R/I^{n+1}) = e*C(n+2,2) - e1*(n+1) + e2
};

int default_nmax(int dim);

// Generators of I^n as explicit products (n = 0 gives the unit ideal).
std::vector<Polynomial> power_gens(const IdealHandle& I, int n);

HilbertSamuelTable hs_table(const IdealHandle& I, int n_max = -1,
                            const ModelOptions& opt = {});

// Exact integer solve against three stabilized tail values, verified
// against a fourth; dim-2 only.
HilbertCoefficients hs_coefficients(const IdealHandle& I, int n_max = -1,
                                    const ModelOptions& opt = {});

// Multiplicity; throws when the table does not stabilize.
long multiplicity(const IdealHandle& I, int n_max = -1,
                  const ModelOptions& opt = {});

// Cross coefficient of e(I^r J^s), dim 2: (e(IJ) - e(I) - e(J)) / 2.
long mixed_multiplicity(const IdealHandle& I, const IdealHandle& J,
                        int n_max = -1, const ModelOptions& opt = {});

// Lemma-route mixed multiplicity: l(R/IJ) - l(R/I) - l(R/J).  The
// hypotheses (J normal with reduction number 1) are the caller's.
long rees_mixed(const IdealHandle& I, const IdealHandle& J,
                const ModelOptions& opt = {});

// Leading coefficient of the eventual polynomial mu(I^n), times (d-1)!.
long fiber_multiplicity(const IdealHandle& I, int n_max = -1,
                        const ModelOptions& opt = {});

// Same fit on mu(closure(I^n)); monomial ideals in regular rings only.
long normal_fiber_multiplicity(const MonomialIdeal& I, int n_max = 8);

struct HVector {
  std::vector<long> a;  // a_0..a_h, trailing zeros trimmed
  int d = 0;
  std::vector<long> h_window;  // observed l(m^n/m^{n+1})
};

HVector h_vector(const RingPresentation& ring, int window = 8,
                 const ModelOptions& opt = {});

struct UnstabilizedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace idealkit
