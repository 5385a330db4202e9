#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "classaut/finite_group.hpp"

namespace classaut {

// Multiset of prime-power cyclic orders, sorted ascending. The empty
// multiset is the trivial group.
class AbelianInvariants {
 public:
  AbelianInvariants() = default;
  // Throws BAD_INVARIANTS unless every entry is a prime power > 1.
  explicit AbelianInvariants(std::vector<std::int64_t> factors);

  std::span<const std::int64_t> factors() const noexcept { return factors_; }
  // Product of the factors; throws BAD_INVARIANTS on 64-bit overflow.
  std::uint64_t order() const;
  bool empty() const noexcept { return factors_.empty(); }
  std::int64_t exponent() const;  // lcm; 1 when empty
  bool is_cyclic() const;
  bool is_elementary() const;  // all factors prime (and a single prime)
  std::string to_string() const;  // "C4 x C2 x C2", "1" when trivial

  bool operator==(const AbelianInvariants&) const = default;

 private:
  std::vector<std::int64_t> factors_;
};

struct CentralSeriesData {
  // lower[0] = G, lower[i] = gamma_{i+1}, ending with the trivial subgroup.
  std::vector<Subgroup> lower;
  // upper[0] = 1, upper[i] = Z_i, ending with G.
  std::vector<Subgroup> upper;
  int nilpotency_class = 0;
};

std::optional<int> prime_of_prime_power(std::int64_t n);  // nullopt for 1 and non prime powers
int prime_of_group(const FiniteGroup& g);                  // throws NOT_PRIME_POWER

Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
// Throws NOT_NILPOTENT when the lower series stalls above the trivial group.
CentralSeriesData central_series(const FiniteGroup& g);
// G^p gamma_2(G). Throws NOT_PRIME_POWER (the trivial group is accepted).
Subgroup frattini_subgroup(const FiniteGroup& g);
int minimal_generating_rank(const FiniteGroup& g);
// Lexicographically least tuple of elements lifting a basis of G/Phi(G).
std::vector<Element> minimal_generating_set(const FiniteGroup& g);
// minimal_generating_set for p-groups, otherwise the greedy generating set.
std::vector<Element> search_generating_set(const FiniteGroup& g);

// Classes ordered by least member; each class sorted.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);
// class_index[e] is the position of e's class in conjugacy_classes().
std::vector<int> conjugacy_class_index(const FiniteGroup& g);
std::vector<Element> commutator_set(const FiniteGroup& g, Element x);

int exponent(const FiniteGroup& g);
int exponent(const Subgroup& s);

// Throws NOT_ABELIAN.
AbelianInvariants abelian_invariants(const FiniteGroup& g);
AbelianInvariants abelian_invariants(const Subgroup& s);
// From the element orders of an abelian group, by counting p^k-torsion.
AbelianInvariants abelian_invariants_from_orders(std::span<const std::int64_t> element_orders);

struct HomStructure {
  AbelianInvariants invariants;  // of Hom(A, B)
  std::uint64_t count = 1;
};
HomStructure hom_structure(const AbelianInvariants& a, const AbelianInvariants& b);

// Brute-force listing of Hom(A, B) for abelian A, B. Each map sends element
// indices of A to element indices of B and is verified on all pairs.
// Throws NOT_ABELIAN, TOO_LARGE (|A| or |B| above 256, or more than
// max_maps homomorphisms).
inline constexpr std::size_t kMaxListedHoms = std::size_t{1} << 16;
std::vector<std::vector<Element>> enumerate_homs(const FiniteGroup& a, const FiniteGroup& b,
                                                 std::size_t max_maps = kMaxListedHoms);

// The direct product C_{f1} x ... x C_{fk} as a table group; generator i is
// the unit vector of factor i.
FiniteGroup abelian_group(std::span<const std::int64_t> factors);

// Direct product of two table groups; generators of the left factor come first.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace classaut
