/*
 * auditor.hpp
 * -----------
 * The inequality suite: evaluates every audited multiplicity bound on a
 * given ideal or family, maintains the regression corpus of documented
 * examples, and emits structured records with exact slack.
 *
 * All comparisons are exact (integers and rationals); "holds" always
 * means normalized slack rhs - lhs is nonnegative.
 */
#pragma once

#include <map>

#include "idealkit/frobenius.hpp"
#include "idealkit/report.hpp"

namespace idealkit {

struct InequalityVerdict {
  std::string name;
  Q lhs, rhs;
  bool holds = false;
  bool equality = false;
  bool applicable = true;
  std::string skip_reason;
  std::vector<std::pair<std::string, bool>> hypotheses;
  std::string witness;  // e.g. the general linear form used
  Q slack() const { return rhs - lhs; }
};

struct InvariantBundle {
  long colength = 0;
  long mu = 0;
  int loewy = 0;
  int ord = 0;
  long e = 0;
  long ring_e = 0;  // e(R) = e(m)
  bool m_full = false;
  std::string m_full_witness;
  std::optional<bool> integrally_closed;
};

struct AuditConfig {
  ModelOptions model;
  int n_max = -1;          // Hilbert-Samuel window (-1: dimension default)
  int trials = 5;          // general-element retries
  unsigned long seed = 0;
  int workers = 1;
  bool mixed = true;       // evaluate the mixed-multiplicity bound (F)
};

struct AuditRecord {
  std::string ring_desc;
  std::string ideal_desc;
  InvariantBundle bundle;
  std::vector<InequalityVerdict> verdicts;
  int n_max = 0;
  unsigned long seed = 0;

  const InequalityVerdict* verdict(const std::string& name) const;
  json to_json() const;
};

// e(R), computed as e(m) and cached per presentation.
long ring_multiplicity(const RingPresentation& ring,
                       const AuditConfig& cfg = {});

AuditRecord audit_ideal(const IdealHandle& I, const AuditConfig& cfg = {});

struct FamilyTally {
  long holds = 0, equality = 0, violated = 0, skipped = 0;
};

struct FamilySummary {
  std::map<std::string, FamilyTally> tallies;
  std::vector<AuditRecord> violations;
  std::vector<AuditRecord> equalities;  // of (E)
  long audited = 0;
  json to_json() const;
};

FamilySummary audit_family(const std::vector<IdealHandle>& family,
                           const AuditConfig& cfg = {});

struct CorpusEntry {
  std::string label;
  std::string source;  // provenance note for the expected values
  RingPresentation ring;
  std::vector<Polynomial> gens;
  std::map<std::string, long> expected;  // invariant name -> value
  std::map<std::string, bool> expected_verdicts;
  std::map<std::string, bool> expected_equalities;
  bool generators_ambiguous = false;
  std::string ambiguity_note;
};

std::vector<CorpusEntry> corpus();

struct CorpusResult {
  std::string label;
  AuditRecord record;
  std::vector<std::string> diffs;  // empty = entry reproduced
};

struct CorpusReport {
  std::vector<CorpusResult> results;
  bool ok = true;
  json to_json() const;
};

CorpusReport corpus_run(const AuditConfig& cfg = {});

struct HCriterion {
  HVector hv;
  Q value;       // sum ((d-1)d/2 - (d-1)i) a_i
  bool holds = false;        // value >= 0
  bool symmetric_ge = false; // a_i >= a_{d-i} for all i
  std::optional<bool> dim3_symmetric;  // a_i = a_{3-i}, d = 3 only
  json to_json() const;
};

HCriterion h_vector_criterion(const RingPresentation& ring, int window = 8,
                              const ModelOptions& opt = {});

}  // namespace idealkit
