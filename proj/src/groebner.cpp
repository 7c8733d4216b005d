#include "idealkit/groebner.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "idealkit/monomial_ideal.hpp"

namespace idealkit {

namespace {

// Full reduction modulo a monic basis, with terms of degree >= bound
// dropped on sight (they lie in m^N, which is part of the ideal).
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& G,
                       int bound, const Field& F) {
  Polynomial rem;
  while (!p.is_zero()) {
    auto lead = std::prev(p.terms.end());
    const Monomial m = lead->first;
    const Q c = lead->second;
    if (m.degree() >= bound) {
      p.terms.erase(lead);
      continue;
    }
    bool reduced = false;
    for (auto& g : G) {
      if (g.is_zero()) continue;
      const Monomial& lt = g.lead_monomial();
      if (!lt.divides(m)) continue;
      Polynomial sub = poly_mul_monomial(poly_scale(g, c, F), m / lt);
      p = poly_sub(p, sub, F);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.terms.emplace(m, c);
      p.terms.erase(m);
    }
  }
  return rem;
}

struct PairEntry {
  int lcm_deg;
  Monomial lcm;
  int i, j;
};

struct PairOrder {
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg > b.lcm_deg;
    Ordering o = compare_monomials(a.lcm, b.lcm);
    if (o != Ordering::equal) return o == Ordering::greater;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  }
};

constexpr long kWatchdogLimit = 200000;

}  // namespace

bool monomial_case(const RingPresentation& ring,
                   const std::vector<Polynomial>& gens) {
  if (!ring.regular()) return false;
  for (auto& g : gens)
    if (g.terms.size() != 1) return false;
  return !gens.empty();
}

ArtinianModel build_model(const RingPresentation& ring,
                          const std::vector<Polynomial>& gens, int N) {
  if (N < 1) throw std::invalid_argument("truncation must be >= 1");
  ring.validate();
  const Field& F = ring.field;
  const int nvars = ring.nvars();

  std::vector<Polynomial> G;
  std::priority_queue<PairEntry, std::vector<PairEntry>, PairOrder> pairs;
  long watchdog = 0;

  auto push_pairs = [&](int idx) {
    const Monomial& lt = G[idx].lead_monomial();
    for (int k = 0; k < idx; ++k) {
      if (G[k].is_zero()) continue;
      const Monomial& ltk = G[k].lead_monomial();
      if (lt.coprime(ltk)) continue;  // Buchberger's first criterion
      Monomial l = lt.lcm(ltk);
      if (l.degree() >= N) continue;  // S-poly lies in m^N
      pairs.push(PairEntry{l.degree(), l, k, idx});
    }
  };

  // Boundary interplay with the truncation monomials: for u any degree-N
  // monomial divisible by lt(g), the S-polynomial with u is (u/lt(g)) times
  // the tail of g; only sub-lead-degree tail terms survive truncation.
  std::vector<Polynomial> boundary;
  auto push_boundary = [&](int idx) {
    const Polynomial& g = G[idx];
    int lead_deg = g.lead_monomial().degree();
    Polynomial low;
    for (auto& [m, c] : g.terms)
      if (m.degree() < lead_deg) low.terms.emplace(m, c);
    if (low.is_zero()) return;  // graded element: all boundary products vanish
    for (auto& mfac : monomials_of_degree(nvars, N - lead_deg))
      boundary.push_back(poly_mul_monomial(low, mfac));
  };

  auto add_element = [&](Polynomial h) {
    if (h.is_zero()) return;
    if (++watchdog > kWatchdogLimit)
      throw std::logic_error("Buchberger watchdog tripped");
    G.push_back(poly_monic(h, F));
    push_pairs(static_cast<int>(G.size()) - 1);
    push_boundary(static_cast<int>(G.size()) - 1);
  };

  std::vector<Polynomial> inputs = gens;
  for (auto& r : ring.relations) inputs.push_back(r);
  for (auto& p : inputs)
    add_element(reduce_full(poly_truncate(p, N), G, N, F));

  while (!pairs.empty() || !boundary.empty()) {
    if (!pairs.empty()) {
      PairEntry e = pairs.top();
      pairs.pop();
      const Polynomial &gi = G[e.i], &gj = G[e.j];
      const Monomial &li = gi.lead_monomial(), &lj = gj.lead_monomial();
      Monomial l = li.lcm(lj);
      if (l != e.lcm) continue;  // element superseded meanwhile? keep honest
      Polynomial s = poly_sub(poly_mul_monomial(gi, l / li),
                              poly_mul_monomial(gj, l / lj), F);
      add_element(reduce_full(std::move(s), G, N, F));
    } else {
      Polynomial b = std::move(boundary.back());
      boundary.pop_back();
      add_element(reduce_full(std::move(b), G, N, F));
    }
  }

  // Minimal basis: drop leads divisible by another lead, then tail-reduce.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    const Monomial& lt = G[i].lead_monomial();
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lj = G[j].lead_monomial();
      if (lj.divides(lt) && (lj != lt || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial lead = poly_from_monomial(minimal[i].lead_monomial());
    Polynomial tail = poly_sub(minimal[i], lead, F);
    minimal[i] = poly_add(lead, reduce_full(tail, others, N, F), F);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return DegrevlexLess{}(a.lead_monomial(), b.lead_monomial());
            });

  ArtinianModel model;
  model.ring = ring;
  model.ideal_gens = gens;
  model.truncation = N;
  model.basis = std::move(minimal);

  for (int deg = 0; deg < N; ++deg) {
    for (auto& m : monomials_of_degree(nvars, deg)) {
      bool divisible = false;
      for (auto& g : model.basis)
        if (g.lead_monomial().divides(m)) { divisible = true; break; }
      if (!divisible) model.std_monomials.push_back(m);
    }
  }
  std::sort(model.std_monomials.begin(), model.std_monomials.end(),
            DegrevlexLess{});

  // Nakayama certificate: every monomial of degree N-1 must be in the
  // ideal (reducibility of the lead alone is not enough when relations
  // are inhomogeneous).
  model.certified = true;
  for (auto& m : monomials_of_degree(nvars, N - 1)) {
    if (!model.contains(poly_from_monomial(m))) {
      model.certified = false;
      break;
    }
  }
  return model;
}

Polynomial ArtinianModel::normal_form(const Polynomial& p) const {
  return reduce_full(poly_truncate(p, truncation), basis, truncation,
                     ring.field);
}

ArtinianModel certified_model(const RingPresentation& ring,
                              const std::vector<Polynomial>& gens,
                              const ModelOptions& opt) {
  int maxdeg = 1;
  for (auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
  for (auto& r : ring.relations) maxdeg = std::max(maxdeg, r.degree());
  int N = std::min(maxdeg + 1, opt.cap);
  while (true) {
    ArtinianModel model = build_model(ring, gens, N);
    if (model.certified) return model;
    if (N >= opt.cap)
      throw NotMPrimaryError("not m-primary up to truncation cap " +
                             std::to_string(opt.cap));
    N = std::min(opt.cap, std::max(N + 2, (3 * N) / 2));
  }
}

namespace {

long modular_length_check(const RingPresentation& ring,
                          const std::vector<Polynomial>& gens,
                          const ModelOptions& opt) {
  static const unsigned long primes[] = {2147483647UL, 2147483629UL,
                                         2147483587UL};
  for (unsigned long p : primes) {
    try {
      RingPresentation rp = ring;
      rp.field = Field::prime(p);
      std::vector<Polynomial> gp;
      for (auto& r : rp.relations) r = poly_add(poly_zero(), r, rp.field);
      for (auto& g : gens) gp.push_back(poly_add(poly_zero(), g, rp.field));
      ModelOptions o = opt;
      o.modcheck = false;
      return certified_model(rp, gp, o).length();
    } catch (const std::domain_error&) {
      continue;  // a coefficient denominator hit this prime; try the next
    } catch (const std::invalid_argument&) {
      continue;  // a relation degenerated mod this prime
    }
  }
  throw std::logic_error("modular check: all candidate primes degenerate");
}

// A relation with a pure degree-1 term c*x_j, where x_j appears in no
// other term, defines x_j = -(1/c) * rest; substituting it away gives a
// presentation of the same local ring in one variable fewer.  Length is
// an isomorphism invariant, so this is a pure speedup.
bool eliminate_one_linear(RingPresentation& ring,
                          std::vector<Polynomial>& gens) {
  const Field& F = ring.field;
  for (size_t ri = 0; ri < ring.relations.size(); ++ri) {
    const Polynomial& r = ring.relations[ri];
    for (int j = 0; j < ring.nvars(); ++j) {
      const Monomial xj = Monomial::var(ring.nvars(), j);
      auto it = r.terms.find(xj);
      if (it == r.terms.end()) continue;
      bool clean = true;
      for (auto& [m, c] : r.terms)
        if (m != xj && m[j] != 0) { clean = false; break; }
      if (!clean) continue;
      Polynomial rest = r;
      rest.terms.erase(xj);
      Polynomial value = poly_scale(rest, F.neg(F.inv(it->second)), F);
      std::vector<Polynomial> new_rels;
      for (size_t k = 0; k < ring.relations.size(); ++k) {
        if (k == ri) continue;
        Polynomial s = poly_substitute(ring.relations[k], j, value, F);
        if (!s.is_zero()) new_rels.push_back(poly_project_out(s, j));
      }
      for (auto& g : gens)
        g = poly_project_out(poly_substitute(g, j, value, F), j);
      ring.relations = std::move(new_rels);
      ring.variables.erase(ring.variables.begin() + j);
      return true;
    }
  }
  return false;
}

}  // namespace

long length_of_quotient(const RingPresentation& ring,
                        const std::vector<Polynomial>& gens,
                        const ModelOptions& opt) {
  bool linear_relation = false;
  for (auto& r : ring.relations)
    if (r.order() == 1) linear_relation = true;
  if (linear_relation) {
    RingPresentation rr = ring;
    std::vector<Polynomial> gg = gens;
    bool any = false;
    while (eliminate_one_linear(rr, gg)) any = true;
    if (any) {
      gg.erase(std::remove_if(gg.begin(), gg.end(),
                              [](const Polynomial& p) { return p.is_zero(); }),
               gg.end());
      return length_of_quotient(rr, gg, opt);
    }
  }
  if (monomial_case(ring, gens)) {
    std::vector<Monomial> ms;
    for (auto& g : gens) ms.push_back(g.lead_monomial());
    auto c = colength(minimalize(ring.nvars(), std::move(ms)));
    if (!c) throw NotMPrimaryError("monomial ideal is not m-primary");
    return *c;
  }
  long len = certified_model(ring, gens, opt).length();
  if (opt.modcheck && ring.field.kind == Field::Kind::rationals) {
    long alt = modular_length_check(ring, gens, opt);
    if (alt != len)
      throw std::logic_error("modular self-check mismatch: " +
                             std::to_string(len) + " vs " +
                             std::to_string(alt));
  }
  return len;
}

std::vector<Polynomial> colon_space(const ArtinianModel& model,
                                    const Polynomial& z) {
  const Field& F = model.ring.field;
  const auto& S = model.std_monomials;
  const int L = static_cast<int>(S.size());

  auto index_of = [&](const Monomial& m) {
    auto it = std::lower_bound(S.begin(), S.end(), m, DegrevlexLess{});
    return static_cast<int>(it - S.begin());
  };

  // Columns: images of the standard monomials under multiplication by z.
  std::vector<std::vector<Q>> col(L, std::vector<Q>(L, Q(0)));
  for (int j = 0; j < L; ++j) {
    Polynomial img = model.normal_form(poly_mul(poly_from_monomial(S[j]), z, F));
    for (auto& [m, c] : img.terms) col[j][index_of(m)] = c;
  }

  // Kernel via row reduction of the L x L matrix (rows = coordinates).
  std::vector<std::vector<Q>> A(L, std::vector<Q>(L));
  for (int r = 0; r < L; ++r)
    for (int j = 0; j < L; ++j) A[r][j] = col[j][r];

  std::vector<int> pivot_of_col(L, -1);
  int rank = 0;
  for (int j = 0; j < L && rank < L; ++j) {
    int pr = -1;
    for (int r = rank; r < L; ++r)
      if (A[r][j] != 0) { pr = r; break; }
    if (pr < 0) continue;
    std::swap(A[rank], A[pr]);
    Q inv = F.inv(A[rank][j]);
    for (int c = 0; c < L; ++c) A[rank][c] = F.mul(A[rank][c], inv);
    for (int r = 0; r < L; ++r) {
      if (r == rank || A[r][j] == 0) continue;
      Q f = A[r][j];
      for (int c = 0; c < L; ++c)
        A[r][c] = F.sub(A[r][c], F.mul(f, A[rank][c]));
    }
    pivot_of_col[j] = rank;
    ++rank;
  }

  std::vector<Polynomial> kernel;
  for (int j = 0; j < L; ++j) {
    if (pivot_of_col[j] >= 0) continue;
    Polynomial vec = poly_from_monomial(S[j]);
    for (int c = 0; c < L; ++c) {
      if (pivot_of_col[c] < 0) continue;
      Q coeff = A[pivot_of_col[c]][j];
      if (coeff != 0)
        poly_add_term(vec, S[c], F.neg(coeff), F);
    }
    kernel.push_back(std::move(vec));
  }
  return kernel;
}

}  // namespace idealkit
