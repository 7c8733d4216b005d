#include "idealkit/auditor.hpp"

#include <atomic>
#include <future>
#include <mutex>
#include <sstream>

#include "idealkit/session.hpp"

namespace idealkit {

namespace {

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string ring_descriptor(const RingPresentation& r) {
  std::string out = r.field.describe() + "[";
  for (size_t i = 0; i < r.variables.size(); ++i)
    out += (i ? "," : "") + r.variables[i];
  out += "]";
  if (!r.relations.empty()) {
    out += "/(";
    for (size_t i = 0; i < r.relations.size(); ++i)
      out += (i ? ", " : "") + r.relations[i].str(r.variables);
    out += ")";
  }
  out += " dim " + std::to_string(r.declared_dim);
  return out;
}

std::string ideal_descriptor(const IdealHandle& I) {
  std::string out = "(";
  for (size_t i = 0; i < I.gens.size(); ++i)
    out += (i ? ", " : "") + I.gens[i].str(I.ring.variables);
  return out + ")";
}

InequalityVerdict skipped(const std::string& name, const std::string& reason) {
  InequalityVerdict v;
  v.name = name;
  v.applicable = false;
  v.skip_reason = reason;
  return v;
}

InequalityVerdict decide(const std::string& name, const Q& lhs, const Q& rhs) {
  InequalityVerdict v;
  v.name = name;
  v.lhs = lhs;
  v.rhs = rhs;
  v.holds = lhs <= rhs;
  v.equality = lhs == rhs;
  return v;
}

}  // namespace

long ring_multiplicity(const RingPresentation& ring, const AuditConfig& cfg) {
  if (ring.regular()) return 1;
  static std::mutex mtx;
  static std::map<std::string, long> cache;
  const std::string key = ring_descriptor(ring);
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  IdealHandle m{ring, {}};
  for (int i = 0; i < ring.nvars(); ++i)
    m.gens.push_back(poly_from_monomial(Monomial::var(ring.nvars(), i)));
  long e = multiplicity(m, cfg.n_max, cfg.model);
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(key, e);
  return e;
}

const InequalityVerdict* AuditRecord::verdict(const std::string& name) const {
  for (auto& v : verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

AuditRecord audit_ideal(const IdealHandle& I, const AuditConfig& cfg) {
  AuditRecord rec;
  rec.ring_desc = ring_descriptor(I.ring);
  rec.ideal_desc = ideal_descriptor(I);
  rec.seed = cfg.seed;
  const int d = I.ring.declared_dim;
  rec.n_max = cfg.n_max >= 0 ? cfg.n_max : default_nmax(d);
  const long fact = factorial(d - 1);
  const bool cm_assumed = I.ring.regular() || I.ring.hypersurface();

  InvariantBundle& b = rec.bundle;
  b.colength = ideal_length(I, cfg.model);
  b.mu = mu(I, cfg.model);
  b.loewy = loewy_length(I, cfg.model);
  b.ord = ord(I, cfg.model);
  b.ring_e = ring_multiplicity(I.ring, cfg);
  b.integrally_closed = is_integrally_closed(I);
  MFullResult mf = is_m_full(I, cfg.trials, cfg.seed, cfg.model);
  b.m_full = mf.m_full;
  if (mf.m_full) b.m_full_witness = mf.witness.str(I.ring.variables);

  bool have_e = true;
  std::string e_failure;
  try {
    b.e = multiplicity(I, cfg.n_max, cfg.model);
  } catch (const UnstabilizedError& ex) {
    have_e = false;
    e_failure = ex.what();
  }

  auto need_e = [&](const std::string& name) {
    return skipped(name, "inconclusive: " + e_failure);
  };

  // (A) e(I) <= (d-1)! (mu - d + 1) ll(I).
  if (have_e) {
    auto v = decide("A", Q(b.e), Q(fact * (b.mu - d + 1) * b.loewy));
    v.hypotheses = {{"m_primary", true}};
    rec.verdicts.push_back(std::move(v));
  } else {
    rec.verdicts.push_back(need_e("A"));
  }

  // (B) e(I) <= (d-1)! e(R) ll(I) (mu - d + 1).
  if (have_e) {
    auto v =
        decide("B", Q(b.e), Q(fact * b.ring_e * b.loewy * (b.mu - d + 1)));
    v.hypotheses = {{"cohen_macaulay_assumed", cm_assumed}};
    rec.verdicts.push_back(std::move(v));
  } else {
    rec.verdicts.push_back(need_e("B"));
  }

  // (C) e(I R/(z)) <= (d-1)! e(R) (mu - d + 1) and
  // (D) mu - d + 1 <= e(I R/(z)), both for a general linear form z,
  // retried on violation so genericity failures do not masquerade as
  // counterexamples.
  if (d < 2) {
    rec.verdicts.push_back(skipped("C", "needs dimension >= 2"));
    rec.verdicts.push_back(skipped("D", "needs dimension >= 2"));
  } else {
    // Sections are tried lazily: an apparent violation triggers a retry
    // with a fresh element (so genericity failures do not masquerade as
    // counterexamples), but once both verdicts hold no further section
    // is computed.
    std::string section_failure = "no usable section element";
    InequalityVerdict best_c, best_d;
    for (int t = 0; t < cfg.trials; ++t) {
      Polynomial z = linear_form_candidate(I.ring, t, cfg.seed);
      try {
        RingPresentation S = section_ring(I.ring, z);
        IdealHandle IS{S, I.gens};
        long es = multiplicity(IS, cfg.n_max, cfg.model);
        std::string w = z.str(I.ring.variables);
        InequalityVerdict vc =
            decide("C", Q(es), Q(fact * b.ring_e * (b.mu - d + 1)));
        vc.witness = w;
        InequalityVerdict vd = decide("D", Q(b.mu - d + 1), Q(es));
        vd.witness = w;
        if (best_c.name.empty() || (vc.holds && !best_c.holds))
          best_c = std::move(vc);
        if (best_d.name.empty() || (vd.holds && !best_d.holds))
          best_d = std::move(vd);
        if (best_c.holds && best_d.holds) break;
      } catch (const std::exception& ex) {
        section_failure = ex.what();
      }
    }
    if (best_c.name.empty()) {
      rec.verdicts.push_back(skipped("C", section_failure));
      rec.verdicts.push_back(skipped("D", section_failure));
    } else {
      rec.verdicts.push_back(std::move(best_c));
      rec.verdicts.push_back(std::move(best_d));
    }
  }

  // (E) dim-2 refinement e(I) <= ll(I)(mu - 1) (= ll * ord when I is
  // integrally closed in a regular ring); off regular rings the ord
  // form is evaluated and flagged.
  if (d != 2) {
    rec.verdicts.push_back(skipped("E", "dimension-2 statement"));
  } else if (!have_e) {
    rec.verdicts.push_back(need_e("E"));
  } else {
    InequalityVerdict v;
    if (I.ring.regular())
      v = decide("E", Q(b.e), Q(static_cast<long>(b.loewy) * (b.mu - 1)));
    else
      v = decide("E", Q(b.e), Q(static_cast<long>(b.loewy) * b.ord));
    v.hypotheses = {{"regular", I.ring.regular()}};
    rec.verdicts.push_back(std::move(v));
  }

  // (F) dim-2 e(I) <= ll(I) e(I | m).
  if (d != 2 || !cfg.mixed) {
    rec.verdicts.push_back(
        skipped("F", d != 2 ? "dimension-2 statement" : "disabled"));
  } else if (!have_e) {
    rec.verdicts.push_back(need_e("F"));
  } else {
    try {
      IdealHandle m{I.ring, {}};
      for (int i = 0; i < I.ring.nvars(); ++i)
        m.gens.push_back(poly_from_monomial(Monomial::var(I.ring.nvars(), i)));
      long em = mixed_multiplicity(I, m, cfg.n_max, cfg.model);
      auto v = decide("F", Q(b.e), Q(static_cast<long>(b.loewy) * em));
      v.hypotheses = {{"class_membership_asserted", false}};
      rec.verdicts.push_back(std::move(v));
    } catch (const std::exception& ex) {
      rec.verdicts.push_back(skipped("F", ex.what()));
    }
  }

  // (G) mu(closure(m^n)) <= n e(R) + 1, for I a power of m in a dim-2
  // regular ring (closures computable there).
  bool is_m_power = d == 2 && I.ring.regular() && I.monomial();
  MonomialIdeal M;
  if (is_m_power) {
    M = I.as_monomial_ideal();
    is_m_power = M == power(max_ideal(I.ring.nvars()), b.ord);
  }
  if (!is_m_power) {
    rec.verdicts.push_back(
        skipped("G", "needs a power of m in a dim-2 regular ring"));
  } else {
    long mu_bar = static_cast<long>(integral_closure(M).gens.size());
    rec.verdicts.push_back(
        decide("G", Q(mu_bar), Q(b.ord * b.ring_e + 1)));
  }

  // (H) classical sandwich l(R/I) <= e(I) <= d! e(R) l(R/I).
  if (have_e) {
    auto lo = decide("H-lower", Q(b.colength), Q(b.e));
    lo.hypotheses = {{"cohen_macaulay_assumed", cm_assumed}};
    rec.verdicts.push_back(std::move(lo));
    rec.verdicts.push_back(decide(
        "H-upper", Q(b.e), Q(factorial(d) * b.ring_e * b.colength)));
  } else {
    rec.verdicts.push_back(need_e("H-lower"));
    rec.verdicts.push_back(need_e("H-upper"));
  }

  return rec;
}

FamilySummary audit_family(const std::vector<IdealHandle>& family,
                           const AuditConfig& cfg) {
  std::vector<AuditRecord> records(family.size());
  const int workers = std::max(1, cfg.workers);
  if (workers == 1) {
    for (size_t i = 0; i < family.size(); ++i)
      records[i] = audit_ideal(family[i], cfg);
  } else {
    std::vector<std::future<void>> tasks;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w)
      tasks.push_back(std::async(std::launch::async, [&] {
        for (size_t i = next++; i < family.size(); i = next++)
          records[i] = audit_ideal(family[i], cfg);
      }));
    for (auto& t : tasks) t.get();
  }

  FamilySummary s;
  s.audited = static_cast<long>(family.size());
  for (auto& rec : records) {
    bool violated_any = false;
    for (auto& v : rec.verdicts) {
      FamilyTally& t = s.tallies[v.name];
      if (!v.applicable) {
        ++t.skipped;
      } else if (!v.holds) {
        ++t.violated;
        violated_any = true;
      } else if (v.equality) {
        ++t.equality;
        ++t.holds;
      } else {
        ++t.holds;
      }
    }
    if (violated_any) s.violations.push_back(rec);
    const InequalityVerdict* e = rec.verdict("E");
    if (e && e->applicable && e->equality) s.equalities.push_back(rec);
  }
  return s;
}

namespace {

RingPresentation mk_ring(const std::vector<std::string>& vars,
                         const std::vector<std::string>& rels, int dim) {
  RingPresentation r;
  r.field = Field::rationals();
  r.variables = vars;
  for (auto& s : rels)
    r.relations.push_back(parse_polynomial(s, vars, r.field));
  r.declared_dim = dim;
  r.validate();
  return r;
}

std::vector<Polynomial> mk_gens(const RingPresentation& r,
                                const std::vector<std::string>& gs) {
  std::vector<Polynomial> out;
  for (auto& s : gs)
    out.push_back(parse_polynomial(s, r.variables, r.field));
  return out;
}

}  // namespace

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  {
    CorpusEntry e;
    e.label = "quadric-line";
    e.source = "documented double-line example: e = 8 beats (mu-1)ll = 5";
    e.ring = mk_ring({"x", "y", "z"}, {"x^2+y^2"}, 2);
    e.gens = mk_gens(e.ring, {"x", "z^4"});
    e.expected = {{"e", 8}, {"loewy", 5}, {"mu", 2}};
    e.expected_verdicts = {{"A", false}};
    out.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.label = "quintic-cusp";
    e.source = "documented example with m^3 inside I and (mu-1)ll = 12 < 15";
    e.ring = mk_ring({"x", "y", "z"}, {"x^2+y^5+z^5"}, 2);
    e.gens = mk_gens(e.ring, {"x", "y^3", "y^2*z", "y*z^2", "z^3"});
    e.expected = {{"e", 15}, {"mu", 5}, {"loewy", 3}};
    e.expected_verdicts = {{"A", false}};
    out.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.label = "e8-singularity";
    e.source = "documented example: the dim-2 refinement fails off regular "
               "rings while the main bound holds";
    e.ring = mk_ring({"x", "y", "z"}, {"x^2+y^3+z^5"}, 2);
    e.gens = mk_gens(e.ring, {"x", "y^2", "y*z^2", "z^4"});
    e.expected = {{"e", 10}, {"loewy", 4}, {"ord", 1}, {"mu", 4}};
    e.expected_verdicts = {{"A", true}, {"E", false}};
    out.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.label = "regular-equality";
    e.source = "closure of (x^3, y^4): equality e = ll * ord in the plane";
    e.ring = mk_ring({"x", "y"}, {}, 2);
    e.gens = mk_gens(e.ring, {"x^3", "x^2*y^2", "x*y^3", "y^4"});
    e.expected = {{"e", 12}, {"ord", 3}, {"loewy", 4}, {"mu", 4}};
    e.expected_verdicts = {{"A", true}, {"E", true}};
    e.expected_equalities = {{"E", true}};
    out.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.label = "nonrational-double-point";
    e.source = "documented example whose printed generator list repeats z^2; "
               "audited with the consistent completion (x, z^2, yz, y^2)";
    e.generators_ambiguous = true;
    e.ambiguity_note =
        "source lists (x, z^2, yz, z^2); the stored invariants force the "
        "fourth generator to be y^2";
    e.ring = mk_ring({"x", "y", "z"}, {"x^2+y^4+z^4"}, 2);
    e.gens = mk_gens(e.ring, {"x", "z^2", "y*z", "y^2"});
    e.expected = {{"mu", 4}, {"loewy", 2}, {"e", 8}};
    e.expected_verdicts = {{"A", false}};
    out.push_back(std::move(e));
  }
  return out;
}

CorpusReport corpus_run(const AuditConfig& cfg) {
  CorpusReport report;
  for (auto& entry : corpus()) {
    CorpusResult res;
    res.label = entry.label;
    IdealHandle I{entry.ring, entry.gens};
    res.record = audit_ideal(I, cfg);
    auto check = [&](const std::string& what, long expected, long actual) {
      if (expected != actual)
        res.diffs.push_back(what + ": expected " + std::to_string(expected) +
                            ", got " + std::to_string(actual));
    };
    for (auto& [name, value] : entry.expected) {
      if (name == "e")
        check("e", value, res.record.bundle.e);
      else if (name == "mu")
        check("mu", value, res.record.bundle.mu);
      else if (name == "loewy")
        check("loewy", value, res.record.bundle.loewy);
      else if (name == "ord")
        check("ord", value, res.record.bundle.ord);
      else if (name == "colength")
        check("colength", value, res.record.bundle.colength);
      else
        res.diffs.push_back("unknown expected invariant " + name);
    }
    for (auto& [name, expected] : entry.expected_verdicts) {
      const InequalityVerdict* v = res.record.verdict(name);
      if (!v || !v->applicable)
        res.diffs.push_back("verdict " + name + " missing or skipped");
      else if (v->holds != expected)
        res.diffs.push_back("verdict " + name + ": expected " +
                            (expected ? "holds" : "violated") + ", got " +
                            (v->holds ? "holds" : "violated"));
    }
    for (auto& [name, expected] : entry.expected_equalities) {
      const InequalityVerdict* v = res.record.verdict(name);
      if (!v || !v->applicable || v->equality != expected)
        res.diffs.push_back("equality of " + name + " not reproduced");
    }
    if (!res.diffs.empty()) report.ok = false;
    report.results.push_back(std::move(res));
  }
  return report;
}

HCriterion h_vector_criterion(const RingPresentation& ring, int window,
                              const ModelOptions& opt) {
  HCriterion c;
  c.hv = h_vector(ring, window, opt);
  const int d = c.hv.d;
  c.value = 0;
  for (size_t i = 0; i < c.hv.a.size(); ++i)
    c.value += Q((static_cast<long>(d - 1) * d) / 2 -
                 static_cast<long>(d - 1) * static_cast<long>(i)) *
               Q(c.hv.a[i]);
  c.holds = c.value >= 0;
  auto at = [&](long i) {
    return (i >= 0 && i < static_cast<long>(c.hv.a.size())) ? c.hv.a[i] : 0;
  };
  c.symmetric_ge = true;
  for (long i = 0; 2 * i <= d; ++i)
    if (at(i) < at(d - i)) c.symmetric_ge = false;
  if (d == 3) {
    bool sym = true;
    long top = std::max<long>(3, static_cast<long>(c.hv.a.size()) - 1);
    for (long i = 0; i <= top; ++i)
      if (at(i) != at(3 - i)) sym = false;
    c.dim3_symmetric = sym;
  }
  return c;
}

json InequalityVerdict_json(const InequalityVerdict& v) {
  json j;
  j["name"] = v.name;
  j["applicable"] = v.applicable;
  if (!v.applicable) {
    j["skip_reason"] = v.skip_reason;
    return j;
  }
  j["lhs"] = json_rational(v.lhs);
  j["rhs"] = json_rational(v.rhs);
  j["holds"] = v.holds;
  j["equality"] = v.equality;
  j["slack"] = json_rational(v.slack());
  if (!v.witness.empty()) j["witness"] = v.witness;
  json hyp = json::object();
  for (auto& [name, met] : v.hypotheses) hyp[name] = met;
  j["hypotheses"] = hyp;
  return j;
}

json AuditRecord::to_json() const {
  json j;
  j["ring"] = ring_desc;
  j["ideal"] = ideal_desc;
  json b;
  b["colength"] = json_integer(bundle.colength);
  b["mu"] = json_integer(bundle.mu);
  b["loewy"] = json_integer(long(bundle.loewy));
  b["ord"] = json_integer(long(bundle.ord));
  b["e"] = json_integer(bundle.e);
  b["ring_e"] = json_integer(bundle.ring_e);
  b["m_full"] = bundle.m_full;
  if (bundle.m_full) b["m_full_witness"] = bundle.m_full_witness;
  if (bundle.integrally_closed)
    b["integrally_closed"] = *bundle.integrally_closed;
  else
    b["integrally_closed"] = "undecidable here";
  j["invariants"] = b;
  json vs = json::array();
  for (auto& v : verdicts) vs.push_back(InequalityVerdict_json(v));
  j["verdicts"] = vs;
  j["meta"] = {{"n_max", n_max}, {"seed", seed}};
  return j;
}

json FamilySummary::to_json() const {
  json j;
  j["audited"] = json_integer(audited);
  json t = json::object();
  for (auto& [name, tally] : tallies)
    t[name] = {{"holds", json_integer(tally.holds)},
               {"equality", json_integer(tally.equality)},
               {"violated", json_integer(tally.violated)},
               {"skipped", json_integer(tally.skipped)}};
  j["tallies"] = t;
  json viol = json::array();
  for (auto& r : violations) viol.push_back(r.to_json());
  j["violations"] = viol;
  json eq = json::array();
  for (auto& r : equalities) eq.push_back(r.to_json());
  j["equalities_of_E"] = eq;
  return j;
}

json CorpusReport::to_json() const {
  json j;
  j["ok"] = ok;
  json rs = json::array();
  for (auto& r : results) {
    json e;
    e["label"] = r.label;
    e["diffs"] = r.diffs;
    e["record"] = r.record.to_json();
    rs.push_back(std::move(e));
  }
  j["entries"] = rs;
  return j;
}

json HCriterion::to_json() const {
  json j;
  json a = json::array();
  for (long v : hv.a) a.push_back(json_integer(v));
  j["a"] = a;
  j["d"] = hv.d;
  j["criterion_value"] = json_rational(value);
  j["holds"] = holds;
  j["symmetric_ge"] = symmetric_ge;
  if (dim3_symmetric) j["dim3_symmetric"] = *dim3_symmetric;
  return j;
}

}  // namespace idealkit
