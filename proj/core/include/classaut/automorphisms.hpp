#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "classaut/finite_group.hpp"
#include "classaut/structure.hpp"

namespace classaut {

// A map on the element indices of one fixed group. Equality and ordering
// are those of the image arrays.
struct Automorphism {
  std::vector<Element> images;

  Element operator()(Element e) const { return images[static_cast<std::size_t>(e)]; }
  auto operator<=>(const Automorphism&) const = default;
};

Automorphism identity_map(const FiniteGroup& g);
// (a * b)(x) = a(b(x))
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism inverse(const Automorphism& a);
bool is_bijective(const Automorphism& a);
// Exhaustive check over all pairs.
bool is_multiplicative(const FiniteGroup& g, const Automorphism& a);

enum class AutKind { kInner, kCentral, kCentralFixingCenter, kClassPreserving };
std::string_view aut_kind_name(AutKind kind);

class AutomorphismSet {
 public:
  AutomorphismSet(AutKind kind, std::vector<Automorphism> maps);  // sorts and dedups

  AutKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return maps_.size(); }
  std::span<const Automorphism> maps() const noexcept { return maps_; }
  bool contains(const Automorphism& a) const;
  bool is_subset_of(const AutomorphismSet& other) const;
  bool same_maps(const AutomorphismSet& other) const { return maps_ == other.maps_; }
  bool is_closed() const;   // under composition and inverse
  bool is_abelian() const;
  // Throws NOT_ABELIAN.
  AbelianInvariants abelian_invariants() const;

 private:
  AutKind kind_;
  std::vector<Automorphism> maps_;
};

AutomorphismSet inner_automorphisms(const FiniteGroup& g);

struct CentralEnumeration {
  AutomorphismSet automorphisms{AutKind::kCentral, {}};
  std::size_t homomorphisms = 0;  // |Hom(G/gamma_2, Z)|, counted directly
  std::size_t rejected = 0;       // g -> g tau(g) that failed to be bijective
  std::optional<Automorphism> first_rejected;
};

// Enumerates tau in Hom(G, Z(G)) (these kill gamma_2 since Z is abelian) by
// assigning images to a generating set with order-divisibility pruning,
// and keeps the bijective g -> g tau(g). Does not throw on rejections.
// Throws ABELIAN_INPUT.
CentralEnumeration enumerate_central_automorphisms(const FiniteGroup& g);

// As above; additionally throws CONSISTENCY_FAIL when a purely non-abelian
// group yields a rejected candidate.
AutomorphismSet central_automorphisms(const FiniteGroup& g);
AutomorphismSet central_automorphisms_fixing_center(const FiniteGroup& g);

inline constexpr int kDefaultMaxOrder = 256;

// Backtracking over images of a minimal generating set inside their
// conjugacy classes; every surviving candidate is checked to be a
// bijective homomorphism that preserves the class of every element.
// Throws TOO_LARGE when |G| > max_order.
AutomorphismSet class_preserving_automorphisms(const FiniteGroup& g,
                                               int max_order = kDefaultMaxOrder);

struct MapFlags {
  bool automorphism = false;
  bool central = false;
  bool class_preserving = false;
  bool inner = false;

  bool operator==(const MapFlags&) const = default;
};

MapFlags classify_map(const FiniteGroup& g, const Automorphism& candidate);

struct HomImage {
  Automorphism automorphism;
  // psi(gZ) = g^-1 mu(g), indexed by the element numbering of G/Z.
  std::vector<Element> psi;
};

struct AutCHomImages {
  std::vector<HomImage> images;
  std::uint64_t hom_count = 0;  // |Hom(G/Z, gamma_2)|
  bool onto() const { return images.size() == hom_count; }
};

// For class <= 2. Verifies each psi is well defined, lands in gamma_2 and
// is a homomorphism, and that mu -> psi is injective (CONSISTENCY_FAIL
// otherwise). Throws CLASS_TOO_HIGH.
AutCHomImages aut_c_hom_images(const FiniteGroup& g, int max_order = kDefaultMaxOrder);

}  // namespace classaut
