#pragma once

// Brute-force reference computations for the tests. They read only the
// multiplication table (mul, order, identity) and never call the library's
// structural algorithms, so agreement is evidence rather than tautology.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "classaut/finite_group.hpp"

namespace oracle {

using classaut::Element;
using classaut::FiniteGroup;
using ElementSet = std::set<Element>;
using Map = std::vector<Element>;

Element inverse(const FiniteGroup& g, Element a);
std::int64_t order_of(const FiniteGroup& g, Element a);
Element commutator(const FiniteGroup& g, Element a, Element b);  // a^-1 b^-1 a b

ElementSet closure(const FiniteGroup& g, const std::vector<Element>& seeds);
ElementSet center(const FiniteGroup& g);
ElementSet derived(const FiniteGroup& g);
ElementSet conjugacy_class(const FiniteGroup& g, Element x);
ElementSet centralizer(const FiniteGroup& g, Element x);
std::int64_t exponent(const FiniteGroup& g, const ElementSet& s);

// Greedy: repeatedly add the element enlarging the closure the most.
std::vector<Element> generating_set(const FiniteGroup& g);

// Extends generator images to a map and returns it only if it is a bijective
// homomorphism, checked on all pairs.
std::optional<Map> automorphism_from(const FiniteGroup& g, const std::vector<Element>& gens,
                                     const std::vector<Element>& images);

std::set<Map> inner_automorphisms(const FiniteGroup& g);
std::set<Map> central_automorphisms(const FiniteGroup& g);
std::set<Map> class_preserving_automorphisms(const FiniteGroup& g);

// Abelian p-group invariants matched from |{x : x^(p^k) = 1}| against every
// partition of the exponent; returned ascending. Empty for the trivial group.
std::vector<std::int64_t> abelian_p_invariants(const FiniteGroup& g);

// Abelian group given by invariants, as an explicit mixed-radix table.
FiniteGroup abelian_table(const std::vector<std::int64_t>& factors);

// |Hom(A, B)| for abelian tables: finds a basis of A by search, then
// multiplies the number of solutions of b^{o_i} = 1 in B.
std::uint64_t hom_count_via_basis(const FiniteGroup& a, const FiniteGroup& b);

// True when some cyclic central C != 1 admits a retraction G -> C, i.e.
// G = ker x C.
bool has_abelian_direct_factor(const FiniteGroup& g);

// Camina: gamma_2 inside [y, G] for every y outside gamma_2.
bool is_camina(const FiniteGroup& g);

// Reference Hom(A, B) count by exhaustive search over images of a basis,
// checking all pairs. Only for tiny groups.
std::uint64_t hom_count_exhaustive(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace oracle
