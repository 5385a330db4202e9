#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "classaut/word.hpp"

namespace classaut {

using Element = std::int32_t;

// BFS spanning tree of the Cayley graph for a chosen generating list:
// element e is reached as parent[e] * gens[letter[e]]. The root has parent -1;
// unreachable elements also have parent -1 and are absent from `order`.
struct WordTree {
  std::vector<Element> generators;
  std::vector<Element> parent;
  std::vector<int> letter;
  std::vector<Element> order;  // BFS visiting order, root first

  bool spans_group() const { return order.size() == parent.size(); }
};

// A finite group held as a dense multiplication table.
class FiniteGroup {
 public:
  // Validates identity, Latin-square rows and columns and generation.
  // Associativity is not checked here; see check_associativity().
  static FiniteGroup from_table(std::vector<Element> table, std::vector<Element> generators,
                                std::vector<std::string> symbols);

  // No validation at all. Only for fault-injection tests that need to feed
  // a corrupted table to downstream algorithms.
  static FiniteGroup from_table_unchecked(std::vector<Element> table, Element identity,
                                          std::vector<Element> generators,
                                          std::vector<std::string> symbols);

  int order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(b)];
  }
  Element inv(Element a) const noexcept { return inverse_[static_cast<std::size_t>(a)]; }
  bool is_abelian() const noexcept { return abelian_; }

  std::span<const Element> table() const noexcept { return table_; }
  std::span<const Element> generators() const noexcept { return generators_; }
  std::span<const std::string> generator_symbols() const noexcept { return symbols_; }

  // Shortest word in the distinguished generators (BFS over right
  // multiplication, ties by generator order).
  Word canonical_word(Element e) const;
  const WordTree& word_tree() const noexcept { return tree_; }

  bool operator==(const FiniteGroup& other) const {
    return n_ == other.n_ && table_ == other.table_ && generators_ == other.generators_;
  }

 private:
  FiniteGroup() = default;
  void finish_construction();

  int n_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Element> generators_;
  std::vector<std::string> symbols_;
  WordTree tree_;
  bool abelian_ = false;
};

class Subgroup {
 public:
  Subgroup() = default;
  // `members` must be closed; use subgroup_closure() otherwise.
  Subgroup(const FiniteGroup& parent, std::vector<Element> members);

  const FiniteGroup& parent() const { return *parent_; }
  int order() const noexcept { return static_cast<int>(members_.size()); }
  std::span<const Element> members() const noexcept { return members_; }
  bool contains(Element e) const { return mask_[static_cast<std::size_t>(e)]; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const { return order() == parent_->order(); }
  bool is_subset_of(const Subgroup& other) const;

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

 private:
  const FiniteGroup* parent_ = nullptr;
  std::vector<Element> members_;  // sorted
  std::vector<bool> mask_;
};

WordTree build_word_tree(const FiniteGroup& g, std::span<const Element> generators);

Element power(const FiniteGroup& g, Element x, std::int64_t k);
int element_order(const FiniteGroup& g, Element x);
// [a,b] = a^-1 b^-1 a b
Element commutator(const FiniteGroup& g, Element a, Element b);
Element conjugate(const FiniteGroup& g, Element x, Element by);  // by^-1 x by

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Element> seeds);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, Element x);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

struct Quotient {
  FiniteGroup group;
  std::vector<Element> projection;  // parent element -> coset index
};

// Cosets are numbered by least member index. Throws NOT_NORMAL.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

// Exhaustive associativity check, O(n^3).
bool check_associativity(const FiniteGroup& g);
bool check_group_axioms(const FiniteGroup& g);

std::uint64_t table_hash(const FiniteGroup& g);
// Regression snapshot: order, generator orders and table hash.
std::string dump(const FiniteGroup& g);

}  // namespace classaut
