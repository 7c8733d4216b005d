#include "idealkit/frobenius.hpp"

namespace idealkit {

namespace {

unsigned long require_prime_char(const RingPresentation& ring) {
  if (!ring.field.is_prime_field())
    throw std::invalid_argument("ring is not of prime characteristic");
  ring.validate();
  return ring.field.characteristic();
}

long pow_long(unsigned long p, int e) {
  long q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > (1L << 40)) throw std::overflow_error("p^e too large");
    q *= static_cast<long>(p);
  }
  return q;
}

bool is_power_of(long q, unsigned long p) {
  if (q < 1) return false;
  while (q % static_cast<long>(p) == 0) q /= static_cast<long>(p);
  return q == 1;
}

// One containment oracle N -> [a^N inside J^[q]], monotone in N.
struct ContainmentTest {
  const IdealHandle& a;
  std::optional<MonomialIdeal> a_mono;
  std::optional<MonomialIdeal> bracket_mono;
  std::optional<ArtinianModel> model;

  ContainmentTest(const IdealHandle& a_, const IdealHandle& bracket,
                  const ModelOptions& opt)
      : a(a_) {
    if (a.monomial() && bracket.monomial()) {
      a_mono = a.as_monomial_ideal();
      bracket_mono = bracket.as_monomial_ideal();
    } else {
      model = certified_model(bracket.ring, bracket.gens, opt);
    }
  }

  bool operator()(int N) const {
    if (a_mono) {
      for (auto& g : power(*a_mono, N).gens)
        if (!bracket_mono->contains(g)) return false;
      return true;
    }
    for (auto& g : power_gens(a, N))
      if (!model->contains(g)) return false;
    return true;
  }
};

}  // namespace

IdealHandle bracket_power(const IdealHandle& J, long q) {
  unsigned long p = require_prime_char(J.ring);
  if (!is_power_of(q, p))
    throw std::invalid_argument("bracket exponent is not a power of p");
  IdealHandle out{J.ring, {}};
  const Field& F = J.ring.field;
  for (auto& g : J.gens) {
    Polynomial r = poly_constant(J.ring.nvars(), Q(1), F);
    for (long i = 0; i < q; ++i) r = poly_mul(r, g, F);
    out.gens.push_back(std::move(r));
  }
  return out;
}

long nu(const IdealHandle& a, const IdealHandle& J, int e,
        const ModelOptions& opt) {
  unsigned long p = require_prime_char(J.ring);
  if (e < 0) throw std::invalid_argument("e must be nonnegative");
  const long q = pow_long(p, e);
  IdealHandle bracket = bracket_power(J, q);
  ContainmentTest contained(a, bracket, opt);
  long hi = (static_cast<long>(loewy_length(J, opt)) + 1) * q;
  if (!contained(static_cast<int>(hi)))
    throw std::runtime_error("nu search cap exceeded");
  long lo = 1;
  while (lo < hi) {
    long mid = lo + (hi - lo) / 2;
    if (contained(static_cast<int>(mid)))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

NuSequence fthreshold_estimate(const IdealHandle& a, const IdealHandle& J,
                               int e_max, const ModelOptions& opt) {
  unsigned long p = require_prime_char(J.ring);
  if (e_max < 0) throw std::invalid_argument("e_max must be nonnegative");
  NuSequence seq;
  seq.a = a;
  seq.J = J;
  seq.p = p;
  for (int e = 0; e <= e_max; ++e) {
    long v = nu(a, J, e, opt);
    seq.entries[e] = v;
    Q est(v, pow_long(p, e));
    est.canonicalize();
    seq.estimates[e] = est;
  }
  for (int e = 0; e < e_max; ++e) {
    if (seq.entries[e + 1] < static_cast<long>(p) * seq.entries[e])
      throw std::logic_error("nu ladder violates p-monotonicity");
    if (seq.estimates[e + 1] < seq.estimates[e])
      throw std::logic_error("nu estimates decreased");
  }
  const bool a_is_m =
      a.monomial() && a.as_monomial_ideal() == max_ideal(a.ring.nvars());
  const bool J_param = J.ring.regular() && J.monomial() &&
                       static_cast<int>(J.as_monomial_ideal().gens.size()) ==
                           J.ring.declared_dim;
  if (a_is_m && J_param) {
    const long th = static_cast<long>(loewy_length(J, opt)) + 1;
    seq.closed_form = th;
    seq.bracket_ok = true;
    const int d = J.ring.declared_dim;
    for (auto& [e, est] : seq.estimates) {
      Q gap = Q(th) - est;
      if (gap < 0) seq.bracket_ok = false;
      // The width bound d(1 - 1/p^e) is vacuous at e = 0, where the gap
      // is exactly 1 (nu_0 is the Loewy length, one below the limit).
      if (e == 0) continue;
      Q bound = Q(d) * (Q(1) - Q(1, pow_long(p, e)));
      bound.canonicalize();
      if (gap > bound) seq.bracket_ok = false;
    }
  }
  return seq;
}

FrobeniusVerdict check_hmtw_dim2(const IdealHandle& J,
                                 const ModelOptions& opt) {
  require_prime_char(J.ring);
  if (!J.ring.regular() || J.ring.declared_dim != 2 ||
      J.ring.nvars() != 2 || J.gens.size() != 2)
    throw std::invalid_argument(
        "hmtw check needs a 2-generator parameter ideal in a dim-2 "
        "regular ring");
  FrobeniusVerdict v;
  v.name = "hmtw_dim2";
  // Parameter ideal in a regular (hence Cohen-Macaulay) ring:
  // e(J) = length(R/J).
  const long e = ideal_length(J, opt);
  const long ll = loewy_length(J, opt);
  v.lhs = Q(e);
  v.rhs = Q((ll + 1) * (ll + 1), 4);
  v.rhs.canonicalize();
  v.holds = v.lhs <= v.rhs;
  v.details["e"] = e;
  v.details["loewy"] = ll;
  return v;
}

FrobeniusVerdict check_crll(const IdealHandle& J, const ModelOptions& opt) {
  require_prime_char(J.ring);
  const int d = J.ring.declared_dim;
  if (!J.ring.regular() || !J.monomial() || d < 2 ||
      static_cast<int>(J.gens.size()) != d)
    throw std::invalid_argument(
        "crll check needs a monomial parameter ideal in a regular ring "
        "of dimension at least 2");
  MonomialIdeal M = J.as_monomial_ideal();
  if (!M.is_m_primary())
    throw std::invalid_argument("crll check: ideal is not m-primary");
  const long th = static_cast<long>(monomial_loewy(M)) + 1;
  const long o = monomial_ord(M);
  const long llbar = monomial_loewy(integral_closure(M));
  FrobeniusVerdict v;
  v.name = "crll";
  v.lhs = Q(llbar);
  v.rhs = Q((th - o + (d - 1) - 1) / (d - 1));  // ceil((th - ord)/(d-1))
  v.holds = v.lhs <= v.rhs;
  v.details["th"] = th;
  v.details["ord"] = o;
  v.details["loewy_closure"] = llbar;
  (void)opt;
  return v;
}

FrobeniusVerdict check_charfree_bound(const IdealHandle& J) {
  const int d = J.ring.declared_dim;
  if (!J.ring.regular() || !J.monomial() || (d != 2 && d != 3) ||
      static_cast<int>(J.gens.size()) != d)
    throw std::invalid_argument(
        "characteristic-free check needs a monomial parameter ideal in "
        "a regular ring of dimension 2 or 3");
  MonomialIdeal M = J.as_monomial_ideal();
  auto len = colength(M);
  if (!len) throw std::invalid_argument("ideal is not m-primary");
  const long ll = monomial_loewy(M);
  FrobeniusVerdict v;
  v.name = "charfree_threshold_bound";
  v.lhs = Q(*len);  // parameter ideal in a regular ring: e(J) = colength
  Q base(d + ll - 1, d);
  base.canonicalize();
  v.rhs = 1;
  for (int i = 0; i < d; ++i) v.rhs *= base;
  v.holds = v.lhs <= v.rhs;
  v.details["loewy"] = ll;
  v.details["e"] = *len;
  return v;
}

}  // namespace idealkit
