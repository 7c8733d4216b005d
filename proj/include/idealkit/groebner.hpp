/*
 * groebner.hpp
 * ------------
 * Length, membership, and colon computations in Artinian truncations
 * A = k[x]/(ideal lift + relations + m^N) via truncated Buchberger and
 * linear algebra over the standard monomials.
 *
 * Soundness of the truncation: a model is "certified" when every
 * monomial of degree N-1 reduces to zero.  Then m^{N-1} is contained in
 * the lifted ideal plus m^N, so by Nakayama m^{N-1} lies in the ideal
 * of the local ring and the standard-monomial count is the exact local
 * length for every larger truncation as well.
 */
#pragma once

#include <vector>

#include "idealkit/ring.hpp"

namespace idealkit {

struct NotMPrimaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArtinianModel {
  RingPresentation ring;
  std::vector<Polynomial> ideal_gens;
  int truncation = 0;
  std::vector<Polynomial> basis;        // interreduced, monic
  std::vector<Monomial> std_monomials;  // ascending degrevlex
  bool certified = false;

  long length() const { return static_cast<long>(std_monomials.size()); }
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const {
    return normal_form(p).is_zero();
  }
};

struct ModelOptions {
  int cap = 64;          // truncation-degree cap
  bool modcheck = false; // recompute length over a large prime and compare
};

ArtinianModel build_model(const RingPresentation& ring,
                          const std::vector<Polynomial>& gens, int N);

// Raises the truncation until the certificate holds; throws
// NotMPrimaryError when the cap is reached first.
ArtinianModel certified_model(const RingPresentation& ring,
                              const std::vector<Polynomial>& gens,
                              const ModelOptions& opt = {});

long length_of_quotient(const RingPresentation& ring,
                        const std::vector<Polynomial>& gens,
                        const ModelOptions& opt = {});

// Basis of {a in A : a*z = 0 in A} for A the model's quotient, i.e. of
// (ideal : z)/ideal, via the multiplication-by-z matrix.
std::vector<Polynomial> colon_space(const ArtinianModel& model,
                                    const Polynomial& z);

// True when the ring is regular and every generator is a single term;
// such ideals take the staircase fast paths.
bool monomial_case(const RingPresentation& ring,
                   const std::vector<Polynomial>& gens);

}  // namespace idealkit
