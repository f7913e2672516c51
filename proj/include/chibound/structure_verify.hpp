#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/partition.hpp"

namespace chibound {

enum class LemmaId {
  PROP1_I,
  PROP1_II,
  PROP1_III,
  LEM_INDSET_I,
  LEM_INDSET_II,
  LEM_INDSET_III,
  LEM_V2_I,
  LEM_V2_II,
  LEM_V2_III,
  LEM_V2_IV,
  LEM_V2_V,
  THM_STRUCT,
  LEM_UT_I,
  LEM_UT_II,
  LEM_UT_III,
  LEM_UT_IV,
  LEM_UT_V,
};

std::string_view lemma_id_name(LemmaId id);
/// Accepts the names above, case-insensitive. Throws std::invalid_argument.
LemmaId parse_lemma_id(std::string_view name);
const std::vector<LemmaId>& all_lemma_ids();

/// `inapplicable` stands for an unmet hypothesis; `size_cap_exceeded` for a
/// check skipped because the enumeration would be too large.
enum class LemmaStatus { holds, violated, inapplicable, size_cap_exceeded };

std::string_view lemma_status_name(LemmaStatus s);

struct LemmaEvidence {
  std::string description;
  std::vector<Vertex> vertices;
};

struct LemmaReport {
  LemmaId lemma_id = LemmaId::PROP1_I;
  LemmaStatus status = LemmaStatus::holds;
  bool holds = true; // false iff a counterexample was found
  std::optional<LemmaEvidence> counterexample;
  std::string note;
};

struct VerifyOptions {
  /// When false, hypotheses are not checked and every item is evaluated;
  /// used to show that each check can detect a violation.
  bool enforce_hypotheses = true;
  /// |V2| limit for the independent-set lemma.
  int indset_cap = 25;
};

std::vector<LemmaReport> check_prop1(const Graph& g, const TwoLevelPartition& p, const VerifyOptions& o = {});
std::vector<LemmaReport> check_indep_subset_lemma(const Graph& g, const TwoLevelPartition& p,
                                                  const VerifyOptions& o = {});
std::vector<LemmaReport> check_v2_structure(const Graph& g, const TwoLevelPartition& p, const VerifyOptions& o = {});
std::vector<LemmaReport> check_ut_up_lemma(const Graph& g, const TwoLevelPartition& p, const VerifyOptions& o = {});
LemmaReport check_structural_theorem(const Graph& g, const TwoLevelPartition& p, const VerifyOptions& o = {});

/// Every check in LemmaId order.
std::vector<LemmaReport> verify_all(const Graph& g, const TwoLevelPartition& p, const VerifyOptions& o = {});

bool any_violation(const std::vector<LemmaReport>& reports);

} // namespace chibound
