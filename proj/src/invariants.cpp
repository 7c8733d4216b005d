#include "idealkit/invariants.hpp"

namespace idealkit {

MonomialIdeal IdealHandle::as_monomial_ideal() const {
  if (!monomial()) throw std::logic_error("not a monomial ideal");
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.push_back(g.lead_monomial());
  return minimalize(ring.nvars(), std::move(ms));
}

long ideal_length(const IdealHandle& I, const ModelOptions& opt) {
  return length_of_quotient(I.ring, I.gens, opt);
}

std::vector<Polynomial> scale_by_max_ideal(const IdealHandle& I) {
  std::vector<Polynomial> out;
  for (int i = 0; i < I.ring.nvars(); ++i) {
    Polynomial xi = poly_from_monomial(Monomial::var(I.ring.nvars(), i));
    for (auto& g : I.gens) out.push_back(poly_mul(xi, g, I.ring.field));
  }
  return out;
}

long mu(const IdealHandle& I, const ModelOptions& opt) {
  IdealHandle mI{I.ring, scale_by_max_ideal(I)};
  return ideal_length(mI, opt) - ideal_length(I, opt);
}

int loewy_length(const IdealHandle& I, const ModelOptions& opt) {
  if (I.monomial()) return monomial_loewy(I.as_monomial_ideal());
  ArtinianModel model = certified_model(I.ring, I.gens, opt);
  int lower = 0;
  for (auto& s : model.std_monomials) lower = std::max(lower, s.degree() + 1);
  const int nvars = I.ring.nvars();
  for (int n = lower;; ++n) {
    bool inside = true;
    for (auto& m : monomials_of_degree(nvars, n)) {
      if (!model.contains(poly_from_monomial(m))) { inside = false; break; }
    }
    if (inside) return n;
    if (n >= model.truncation)
      throw std::logic_error("Loewy scan escaped a certified model");
  }
}

int ord(const IdealHandle& I, const ModelOptions& opt) {
  if (I.monomial()) return monomial_ord(I.as_monomial_ideal());
  const int nvars = I.ring.nvars();
  int s = 0;
  while (true) {
    std::vector<Polynomial> mpow;
    for (auto& m : monomials_of_degree(nvars, s + 1))
      mpow.push_back(poly_from_monomial(m));
    ArtinianModel model = certified_model(I.ring, mpow, opt);
    bool inside = true;
    for (auto& g : I.gens)
      if (!model.contains(g)) { inside = false; break; }
    if (!inside) return s;
    ++s;
    if (s > opt.cap) throw std::logic_error("ord scan exceeded cap");
  }
}

Polynomial linear_form_candidate(const RingPresentation& ring, int index,
                                 unsigned long seed) {
  const int n = ring.nvars();
  const Field& F = ring.field;
  if (index == 0) {
    Polynomial z;
    for (int i = 0; i < n; ++i)
      poly_add_term(z, Monomial::var(n, i), Q(1), F);
    return z;
  }
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<unsigned long>(index));
  std::uniform_int_distribution<int> coeff(-10, 10);
  while (true) {
    Polynomial z;
    for (int i = 0; i < n; ++i) {
      int c = coeff(rng);
      if (c != 0) poly_add_term(z, Monomial::var(n, i), Q(c), F);
    }
    if (!z.is_zero()) return z;
  }
}

MFullResult is_m_full(const IdealHandle& I, int trials, unsigned long seed,
                      const ModelOptions& opt) {
  IdealHandle mI{I.ring, scale_by_max_ideal(I)};
  ArtinianModel model_mI = certified_model(I.ring, mI.gens, opt);
  const long len_I = ideal_length(I, opt);
  const long len_mI = model_mI.length();
  MFullResult res;
  for (int t = 0; t < trials; ++t) {
    Polynomial z = linear_form_candidate(I.ring, t, seed);
    res.tried.push_back(z);
    // (mI : z) = I  iff  dim (mI:z)/mI equals length(R/mI) - length(R/I),
    // since z*I is always inside mI.
    long kernel_dim = static_cast<long>(colon_space(model_mI, z).size());
    if (len_mI - kernel_dim == len_I) {
      res.m_full = true;
      res.witness = z;
      return res;
    }
  }
  return res;
}

std::optional<bool> is_integrally_closed(const IdealHandle& I) {
  if (!I.monomial()) return std::nullopt;
  MonomialIdeal M = I.as_monomial_ideal();
  if (!M.is_m_primary()) return std::nullopt;
  return integral_closure(M) == M;
}

RingPresentation section_ring(const RingPresentation& ring,
                              const Polynomial& z) {
  if (z.is_zero() || z.degree() != 1 || z.order() != 1)
    throw std::invalid_argument("section element must be a linear form");
  RingPresentation s = ring;
  s.relations.push_back(z);
  s.declared_dim = ring.declared_dim - 1;
  return s;
}

}  // namespace idealkit
