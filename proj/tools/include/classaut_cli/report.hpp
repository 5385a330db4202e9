#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "classaut/catalog.hpp"
#include "classaut/predicates.hpp"

namespace classaut::cli {

using Json = nlohmann::ordered_json;

// Checks addressable from the command line: every TheoremId plus the
// catalog-level order-32 check "thm4.2".
struct CheckId {
  std::optional<TheoremId> theorem;  // empty means thm4.2

  std::string name() const;
  friend bool operator==(const CheckId&, const CheckId&) = default;
};

std::vector<CheckId> all_checks();
// "all" expands to every check; otherwise a comma list. Throws NOT_FOUND.
std::vector<CheckId> parse_checks(std::string_view text);

struct CheckResult {
  std::string check;
  bool applicable = false;
  bool lhs = false;
  bool rhs = false;
  std::string detail;
  std::optional<Witness> witness;

  bool passes() const { return !applicable || lhs == rhs; }
};

// thm4.2 on one entry: among non-abelian groups of order 32, Aut_c = Inn
// is expected exactly when the entry is not tagged autc-exception.
CheckResult check_order32(GroupFacts& facts, const CatalogEntry& entry);
CheckResult run_check(GroupFacts& facts, const CatalogEntry& entry, const CheckId& id);

struct AnalysisReport {
  std::string name;
  std::string catalog;
  std::int64_t order = 0;
  bool abelian = false;
  std::string abelian_invariants;  // abelian groups only

  // Empty optionals are rendered as null: a non-abelian subgroup or
  // quotient has no invariants, a non-p-group no Frattini via powers.
  std::string center_invariants;
  std::optional<std::string> derived_invariants;
  std::optional<std::string> central_quotient_invariants;
  std::string abelianization_invariants;
  std::optional<int> nilpotency_class;
  std::optional<std::int64_t> frattini_order;
  int rank = 0;
  std::vector<std::int64_t> class_sizes;  // sorted
  std::size_t inn_order = 0;
  std::size_t autz_order = 0;
  std::size_t autzz_order = 0;
  std::size_t autc_order = 0;
  std::optional<bool> purely_nonabelian;
  bool camina = false;
  bool camina_class2 = false;
  bool autc_eq_inn = false;
  bool autc_eq_autz = false;
  bool autz_eq_inn = false;

  std::vector<CheckResult> verdicts;
  std::optional<double> duration_ms;
};

AnalysisReport analyze_group(const FiniteGroup& g, const CatalogEntry& entry, const std::string& catalog,
                             const std::vector<CheckId>& checks, int max_order, bool timing);

Json to_json(const CheckResult& r, const FiniteGroup* g);
Json to_json(const AnalysisReport& r, const FiniteGroup* g);

std::string render_csv(const std::vector<AnalysisReport>& reports);
std::string render_markdown(const std::vector<AnalysisReport>& reports);

}  // namespace classaut::cli
