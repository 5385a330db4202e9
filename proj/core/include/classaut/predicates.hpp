#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "classaut/automorphisms.hpp"
#include "classaut/finite_group.hpp"
#include "classaut/structure.hpp"

namespace classaut {

// Purely non-abelian: non-abelian with no non-trivial abelian direct factor.
// Z(G) <= Phi(G) suffices; otherwise searches every non-trivial cyclic
// central subgroup for a normal complement (|G| <= 128, else TOO_LARGE).
// Throws NOT_PRIME_POWER.
bool is_purely_nonabelian(const FiniteGroup& g);

// Joins of normal closures of conjugacy classes. Throws TOO_LARGE above 128.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

// Throws BAD_SUBGROUP unless m is non-trivial, proper and normal.
bool is_camina_pair(const FiniteGroup& g, const Subgroup& m);
// Throws ABELIAN_INPUT.
bool is_camina_group(const FiniteGroup& g);
// Camina and of class 2. Throws CONSISTENCY_FAIL if such a group has
// gamma_2 != Z.
bool is_camina_class2(const FiniteGroup& g);

// For Z(G) not inside Phi(G): choose h in Z - M for a maximal subgroup M,
// z of order p in Z cap Phi, and return m h^i -> m h^i z^i. Throws
// HYPOTHESIS_FAIL when Z(G) <= Phi(G) or G is abelian.
Automorphism witness_central_not_class_preserving(const FiniteGroup& g);

enum class TheoremId { kT3_1, kT3_2, kT3_3, kT3_4, kL4_1, kT4_3, kT4_4, kT4_5, kAdneyYen, kMorigi };

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::kT3_1, TheoremId::kT3_2, TheoremId::kT3_3,     TheoremId::kT3_4, TheoremId::kL4_1,
    TheoremId::kT4_3, TheoremId::kT4_4, TheoremId::kT4_5, TheoremId::kAdneyYen, TheoremId::kMorigi};

std::string_view theorem_name(TheoremId id);  // "thm3.1", ..., "adney-yen", "morigi"
std::optional<TheoremId> parse_theorem_id(std::string_view text);

struct Witness {
  std::string description;
  std::optional<Automorphism> map;
  std::vector<Element> elements;  // e.g. the members of a subgroup
};

struct TheoremVerdict {
  TheoremId id = TheoremId::kT3_1;
  bool applicable = false;
  bool lhs = false;
  bool rhs = false;
  std::string detail;
  std::optional<Witness> witness;

  bool passes() const { return !applicable || lhs == rhs; }
};

// Lazily computed facts about one group, shared by the theorem checkers so a
// batch of checks enumerates each automorphism set once. Not thread-safe;
// use one instance per thread.
class GroupFacts {
 public:
  explicit GroupFacts(const FiniteGroup& g, int max_order = kDefaultMaxOrder)
      : g_(g), max_order_(max_order) {}

  const FiniteGroup& group() const { return g_; }
  std::optional<int> prime() const;
  const Subgroup& center();
  const Subgroup& derived();
  const Subgroup& frattini();
  const CentralSeriesData& series();
  const AbelianInvariants& center_invariants();
  const AbelianInvariants& derived_invariants();  // only when gamma_2 is abelian
  const FiniteGroup& central_quotient();
  const FiniteGroup& abelianization();
  const AutomorphismSet& inner();
  const CentralEnumeration& central();
  const AutomorphismSet& central_fixing_center();
  const AutomorphismSet& class_preserving();
  bool purely_nonabelian();
  bool camina();
  bool camina_class2();

 private:
  const FiniteGroup& g_;
  int max_order_;
  std::optional<Subgroup> center_, derived_, frattini_;
  std::optional<CentralSeriesData> series_;
  std::optional<AbelianInvariants> center_inv_, derived_inv_;
  std::optional<Quotient> central_quotient_, abelianization_;
  std::optional<AutomorphismSet> inner_, central_fixing_, class_preserving_;
  std::optional<CentralEnumeration> central_;
  std::optional<bool> pna_, camina_, camina2_;
};

TheoremVerdict check_theorem(GroupFacts& facts, TheoremId id);
TheoremVerdict check_theorem(const FiniteGroup& g, TheoremId id, int max_order = kDefaultMaxOrder);

}  // namespace classaut
