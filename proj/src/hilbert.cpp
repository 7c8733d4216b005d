#include "idealkit/hilbert.hpp"

#include <algorithm>
#include <set>

namespace idealkit {

int default_nmax(int dim) { return dim <= 2 ? 8 : 6; }

std::vector<Polynomial> power_gens(const IdealHandle& I, int n) {
  const Field& F = I.ring.field;
  std::set<Polynomial> cur;
  cur.insert(poly_constant(I.ring.nvars(), Q(1), F));
  for (int k = 0; k < n; ++k) {
    std::set<Polynomial> next;
    for (auto& p : cur)
      for (auto& g : I.gens) next.insert(poly_mul(p, g, F));
    cur = std::move(next);
  }
  return std::vector<Polynomial>(cur.begin(), cur.end());
}

namespace {

long power_length(const IdealHandle& I, int n, const ModelOptions& opt) {
  if (n == 0) return 0;
  if (I.monomial()) {
    auto c = colength(power(I.as_monomial_ideal(), n));
    if (!c) throw NotMPrimaryError("monomial ideal is not m-primary");
    return *c;
  }
  IdealHandle P{I.ring, power_gens(I, n)};
  return ideal_length(P, opt);
}

// d-th finite differences of the value table.
std::vector<long> nth_difference(std::vector<long> v, int d) {
  for (int k = 0; k < d; ++k) {
    std::vector<long> w;
    for (size_t i = 0; i + 1 < v.size(); ++i) w.push_back(v[i + 1] - v[i]);
    v = std::move(w);
  }
  return v;
}

}  // namespace

HilbertSamuelTable hs_table(const IdealHandle& I, int n_max,
                            const ModelOptions& opt) {
  const int d = I.ring.declared_dim;
  if (n_max < 0) n_max = default_nmax(d);
  if (n_max < d + 3)
    throw std::invalid_argument("n_max must be at least dim + 3");
  HilbertSamuelTable t;
  t.dim = d;
  for (int n = 0; n <= n_max; ++n) t.values.push_back(power_length(I, n, opt));
  for (size_t n = 0; n + 1 < t.values.size(); ++n)
    if (t.values[n] >= t.values[n + 1])
      throw std::logic_error("Hilbert-Samuel values not strictly increasing");

  std::vector<long> dd = nth_difference(t.values, d);
  // Tail run of equal d-th differences; 3 agreements certify.
  int run = 1;
  for (int i = static_cast<int>(dd.size()) - 1; i > 0; --i) {
    if (dd[i - 1] != dd[i]) break;
    ++run;
  }
  if (run >= 3) {
    t.stabilized = true;
    t.stabilized_at = static_cast<int>(dd.size()) - run;
    t.e = dd.back();
  }
  return t;
}

long multiplicity(const IdealHandle& I, int n_max, const ModelOptions& opt) {
  HilbertSamuelTable t = hs_table(I, n_max, opt);
  if (!t.stabilized)
    throw UnstabilizedError("Hilbert-Samuel table unstabilized; raise n_max");
  return t.e;
}

HilbertCoefficients hs_coefficients(const IdealHandle& I, int n_max,
                                    const ModelOptions& opt) {
  if (I.ring.declared_dim != 2)
    throw std::invalid_argument("e1, e2 extraction is dimension-2 only");
  HilbertSamuelTable t = hs_table(I, n_max, opt);
  if (!t.stabilized)
    throw UnstabilizedError("Hilbert-Samuel table unstabilized; raise n_max");
  // l(R/I^{n+1}) = e*C(n+2,2) - e1*(n+1) + e2, solved from the last
  // three values and verified against the fourth-to-last.
  const int top = static_cast<int>(t.values.size()) - 1;
  if (top < 4) throw std::invalid_argument("n_max too small for the fit");
  auto predict = [](const HilbertCoefficients& c, long np1) {
    return c.e * (np1 + 1) * np1 / 2 - c.e1 * np1 + c.e2;
  };
  // Second difference of the tail gives e, first difference then e1.
  HilbertCoefficients c{};
  c.e = t.values[top] - 2 * t.values[top - 1] + t.values[top - 2];
  // l(n+1) - l(n) = e*(n+1) - e1 with l at indices top, top-1.
  c.e1 = c.e * top - (t.values[top] - t.values[top - 1]);
  c.e2 = t.values[top] - c.e * (top + 1) * top / 2 + c.e1 * top;
  if (c.e != t.e)
    throw UnstabilizedError("coefficient fit disagrees with table e");
  if (predict(c, top - 3) != t.values[top - 3])
    throw UnstabilizedError("fit residual nonzero at held-out tail value");
  return c;
}

long mixed_multiplicity(const IdealHandle& I, const IdealHandle& J, int n_max,
                        const ModelOptions& opt) {
  if (I.ring.declared_dim != 2)
    throw std::invalid_argument("mixed multiplicity is dimension-2 only");
  if (!I.ring.same_presentation(J.ring))
    throw std::invalid_argument("ideals live in different rings");
  std::vector<Polynomial> prod;
  {
    std::set<Polynomial> dedup;
    for (auto& a : I.gens)
      for (auto& b : J.gens) dedup.insert(poly_mul(a, b, I.ring.field));
    prod.assign(dedup.begin(), dedup.end());
  }
  IdealHandle IJ{I.ring, std::move(prod)};
  long sum = multiplicity(IJ, n_max, opt) - multiplicity(I, n_max, opt) -
             multiplicity(J, n_max, opt);
  if (sum % 2 != 0)
    throw std::logic_error("mixed multiplicity not integral: unstabilized fit");
  return sum / 2;
}

long rees_mixed(const IdealHandle& I, const IdealHandle& J,
                const ModelOptions& opt) {
  if (I.ring.declared_dim != 2)
    throw std::invalid_argument("rees_mixed is dimension-2 only");
  if (!I.ring.same_presentation(J.ring))
    throw std::invalid_argument("ideals live in different rings");
  std::set<Polynomial> dedup;
  for (auto& a : I.gens)
    for (auto& b : J.gens) dedup.insert(poly_mul(a, b, I.ring.field));
  IdealHandle IJ{I.ring, {dedup.begin(), dedup.end()}};
  return ideal_length(IJ, opt) - ideal_length(I, opt) - ideal_length(J, opt);
}

namespace {

long fit_leading(const std::vector<long>& seq, int d) {
  // seq holds f(1), f(2), ...; fit the (d-1)-th difference, window 3.
  std::vector<long> dd = nth_difference(seq, d - 1);
  int run = 1;
  for (int i = static_cast<int>(dd.size()) - 1; i > 0; --i) {
    if (dd[i - 1] != dd[i]) break;
    ++run;
  }
  if (run < 3)
    throw UnstabilizedError("fiber multiplicity fit unstabilized");
  return dd.back();
}

}  // namespace

long fiber_multiplicity(const IdealHandle& I, int n_max,
                        const ModelOptions& opt) {
  const int d = I.ring.declared_dim;
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (n_max < 0) n_max = default_nmax(d);
  std::vector<long> mus;
  for (int n = 1; n <= n_max; ++n) {
    IdealHandle P{I.ring, power_gens(I, n)};
    mus.push_back(mu(P, opt));
  }
  return fit_leading(mus, d);
}

long normal_fiber_multiplicity(const MonomialIdeal& I, int n_max) {
  if (!I.is_m_primary())
    throw std::invalid_argument("normal fiber: ideal is not m-primary");
  std::vector<long> mus;
  for (int n = 1; n <= n_max; ++n)
    mus.push_back(static_cast<long>(integral_closure(power(I, n)).gens.size()));
  return fit_leading(mus, I.dim);
}

HVector h_vector(const RingPresentation& ring, int window,
                 const ModelOptions& opt) {
  const int d = ring.declared_dim;
  HVector hv;
  hv.d = d;
  IdealHandle m{ring, {}};
  for (int i = 0; i < ring.nvars(); ++i)
    m.gens.push_back(poly_from_monomial(Monomial::var(ring.nvars(), i)));
  std::vector<long> lengths;  // l(R/m^n), n = 0..window+1
  for (int n = 0; n <= window + 1; ++n)
    lengths.push_back(power_length(m, n, opt));
  for (int n = 0; n <= window; ++n)
    hv.h_window.push_back(lengths[n + 1] - lengths[n]);

  // Multiply the Hilbert series by (1-t)^d.
  std::vector<long> binom(d + 1);
  binom[0] = 1;
  for (int j = 1; j <= d; ++j) binom[j] = binom[j - 1] * (d - j + 1) / j;
  std::vector<long> a(window + 1, 0);
  for (int i = 0; i <= window; ++i)
    for (int j = 0; j <= d && j <= i; ++j)
      a[i] += (j % 2 ? -1 : 1) * binom[j] * hv.h_window[i - j];

  // The numerator must terminate inside the window.
  int last_nonzero = -1;
  for (int i = 0; i <= window; ++i)
    if (a[i] != 0) last_nonzero = i;
  if (last_nonzero > window - d - 1)
    throw std::invalid_argument("h-vector window too small; raise window");
  a.resize(last_nonzero + 1);
  hv.a = std::move(a);

  // Regenerate the observed window from a as a consistency check.
  auto choose = [](long n, int k) {
    if (n < 0) return 0L;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
    return r;
  };
  for (int n = 0; n <= window; ++n) {
    long h = 0;
    for (size_t i = 0; i < hv.a.size(); ++i)
      if (n >= static_cast<int>(i))
        h += hv.a[i] * choose(n - static_cast<long>(i) + d - 1, d - 1);
    if (h != hv.h_window[n])
      throw std::logic_error("h-vector regeneration mismatch");
  }
  return hv;
}

}  // namespace idealkit
