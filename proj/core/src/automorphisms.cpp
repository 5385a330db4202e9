#include "classaut/automorphisms.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "classaut/error.hpp"
#include "classaut/predicates.hpp"

namespace classaut {

Automorphism identity_map(const FiniteGroup& g) {
  Automorphism a;
  a.images.resize(static_cast<std::size_t>(g.order()));
  std::iota(a.images.begin(), a.images.end(), 0);
  return a;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism c;
  c.images.resize(b.images.size());
  for (std::size_t i = 0; i < b.images.size(); ++i) c.images[i] = a(b.images[i]);
  return c;
}

Automorphism inverse(const Automorphism& a) {
  Automorphism inv;
  inv.images.resize(a.images.size());
  for (std::size_t i = 0; i < a.images.size(); ++i) {
    inv.images[static_cast<std::size_t>(a.images[i])] = static_cast<Element>(i);
  }
  return inv;
}

bool is_bijective(const Automorphism& a) {
  std::vector<char> hit(a.images.size(), 0);
  for (Element e : a.images) {
    if (e < 0 || static_cast<std::size_t>(e) >= a.images.size() || hit[static_cast<std::size_t>(e)]) {
      return false;
    }
    hit[static_cast<std::size_t>(e)] = 1;
  }
  return true;
}

bool is_multiplicative(const FiniteGroup& g, const Automorphism& a) {
  if (a.images.size() != static_cast<std::size_t>(g.order())) return false;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      if (a(g.mul(x, y)) != g.mul(a(x), a(y))) return false;
    }
  }
  return true;
}

std::string_view aut_kind_name(AutKind kind) {
  switch (kind) {
    case AutKind::kInner: return "inner";
    case AutKind::kCentral: return "central";
    case AutKind::kCentralFixingCenter: return "central-fixing-center";
    case AutKind::kClassPreserving: return "class-preserving";
  }
  return "unknown";
}

AutomorphismSet::AutomorphismSet(AutKind kind, std::vector<Automorphism> maps)
    : kind_(kind), maps_(std::move(maps)) {
  std::sort(maps_.begin(), maps_.end());
  maps_.erase(std::unique(maps_.begin(), maps_.end()), maps_.end());
}

bool AutomorphismSet::contains(const Automorphism& a) const {
  return std::binary_search(maps_.begin(), maps_.end(), a);
}

bool AutomorphismSet::is_subset_of(const AutomorphismSet& other) const {
  return std::all_of(maps_.begin(), maps_.end(), [&](const auto& a) { return other.contains(a); });
}

bool AutomorphismSet::is_closed() const {
  for (const auto& a : maps_) {
    if (!contains(inverse(a))) return false;
    for (const auto& b : maps_) {
      if (!contains(compose(a, b))) return false;
    }
  }
  return true;
}

bool AutomorphismSet::is_abelian() const {
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    for (std::size_t j = i + 1; j < maps_.size(); ++j) {
      if (compose(maps_[i], maps_[j]) != compose(maps_[j], maps_[i])) return false;
    }
  }
  return true;
}

AbelianInvariants AutomorphismSet::abelian_invariants() const {
  if (!is_abelian()) throw Error(ErrorCode::kNotAbelian, "automorphism set is not abelian");
  std::vector<std::int64_t> orders;
  orders.reserve(maps_.size());
  for (const auto& a : maps_) {
    std::int64_t order = 1;
    std::vector<char> seen(a.images.size(), 0);
    for (std::size_t start = 0; start < a.images.size(); ++start) {
      if (seen[start]) continue;
      std::int64_t len = 0;
      for (std::size_t cur = start; !seen[cur]; cur = static_cast<std::size_t>(a.images[cur])) {
        seen[cur] = 1;
        ++len;
      }
      order = std::lcm(order, len);
    }
    orders.push_back(order);
  }
  return abelian_invariants_from_orders(orders);
}

namespace {

// Extends generator images along the word tree. Returns nullopt unless
// the result satisfies phi(h s) = phi(h) phi(s) for every h and generator s,
// which makes it a homomorphism.
std::optional<Automorphism> extend_homomorphism(const FiniteGroup& g, const WordTree& tree,
                                                std::span<const Element> images,
                                                const FiniteGroup& target) {
  if (!tree.spans_group()) return std::nullopt;
  Automorphism phi;
  phi.images.assign(static_cast<std::size_t>(g.order()), -1);
  phi.images[static_cast<std::size_t>(g.identity())] = target.identity();
  for (std::size_t k = 1; k < tree.order.size(); ++k) {
    const auto e = static_cast<std::size_t>(tree.order[k]);
    phi.images[e] = target.mul(phi.images[static_cast<std::size_t>(tree.parent[e])],
                               images[static_cast<std::size_t>(tree.letter[e])]);
  }
  for (Element h = 0; h < g.order(); ++h) {
    for (std::size_t i = 0; i < tree.generators.size(); ++i) {
      if (phi(g.mul(h, tree.generators[i])) != target.mul(phi(h), images[i])) return std::nullopt;
    }
  }
  return phi;
}

}  // namespace

AutomorphismSet inner_automorphisms(const FiniteGroup& g) {
  std::vector<Automorphism> maps;
  maps.reserve(static_cast<std::size_t>(g.order()));
  for (Element b = 0; b < g.order(); ++b) {
    Automorphism a;
    a.images.resize(static_cast<std::size_t>(g.order()));
    for (Element x = 0; x < g.order(); ++x) a.images[static_cast<std::size_t>(x)] = conjugate(g, x, b);
    maps.push_back(std::move(a));
  }
  return AutomorphismSet(AutKind::kInner, std::move(maps));
}

CentralEnumeration enumerate_central_automorphisms(const FiniteGroup& g) {
  if (g.is_abelian()) {
    throw Error(ErrorCode::kAbelianInput, "central automorphisms of an abelian group are all of Aut(G)");
  }
  const Subgroup z = center(g);
  const Subgroup derived = derived_subgroup(g);
  const std::vector<Element> gens = search_generating_set(g);
  const WordTree tree = build_word_tree(g, gens);

  // tau(g_i) must have order dividing that of g_i modulo gamma_2.
  std::vector<std::vector<Element>> options;
  for (Element s : gens) {
    int m = 1;
    for (Element acc = s; !derived.contains(acc); acc = g.mul(acc, s)) ++m;
    std::vector<Element> opts;
    for (Element c : z.members()) {
      if (m % element_order(g, c) == 0) opts.push_back(c);
    }
    options.push_back(std::move(opts));
  }

  CentralEnumeration result;
  std::vector<Automorphism> accepted;
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<Element> images(gens.size());
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = options[i][pick[i]];
    if (auto tau = extend_homomorphism(g, tree, images, g)) {
      ++result.homomorphisms;
      Automorphism phi;
      phi.images.resize(static_cast<std::size_t>(g.order()));
      for (Element x = 0; x < g.order(); ++x) {
        phi.images[static_cast<std::size_t>(x)] = g.mul(x, (*tau)(x));
      }
      if (is_bijective(phi)) {
        accepted.push_back(std::move(phi));
      } else {
        ++result.rejected;
        if (!result.first_rejected) result.first_rejected = std::move(phi);
      }
    }
    std::size_t i = 0;
    while (i < gens.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == gens.size()) break;
  }
  result.automorphisms = AutomorphismSet(AutKind::kCentral, std::move(accepted));
  return result;
}

AutomorphismSet central_automorphisms(const FiniteGroup& g) {
  CentralEnumeration e = enumerate_central_automorphisms(g);
  if (e.rejected > 0 && is_purely_nonabelian(g)) {
    throw Error(ErrorCode::kConsistencyFail,
                "purely non-abelian group produced " + std::to_string(e.rejected) +
                    " non-bijective central candidates");
  }
  return std::move(e.automorphisms);
}

AutomorphismSet central_automorphisms_fixing_center(const FiniteGroup& g) {
  AutomorphismSet all = central_automorphisms(g);
  const Subgroup z = center(g);
  std::vector<Automorphism> kept;
  for (const auto& a : all.maps()) {
    if (std::all_of(z.members().begin(), z.members().end(), [&](Element c) { return a(c) == c; })) {
      kept.push_back(a);
    }
  }
  return AutomorphismSet(AutKind::kCentralFixingCenter, std::move(kept));
}

AutomorphismSet class_preserving_automorphisms(const FiniteGroup& g, int max_order) {
  if (g.order() > max_order) {
    throw Error(ErrorCode::kTooLarge, "class-preserving search limited to order " +
                                          std::to_string(max_order));
  }
  if (g.is_abelian()) return AutomorphismSet(AutKind::kClassPreserving, {identity_map(g)});

  const auto classes = conjugacy_classes(g);
  const auto class_of = conjugacy_class_index(g);
  const std::vector<Element> gens = search_generating_set(g);
  const WordTree tree = build_word_tree(g, gens);

  std::vector<std::span<const Element>> options;
  for (Element s : gens) options.emplace_back(classes[static_cast<std::size_t>(class_of[static_cast<std::size_t>(s)])]);

  std::vector<Automorphism> found;
  std::vector<Element> images(gens.size());
  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = options[i][pick[i]];
    if (auto phi = extend_homomorphism(g, tree, images, g); phi && is_bijective(*phi)) {
      bool preserves = true;
      for (Element x = 0; x < g.order() && preserves; ++x) {
        preserves = class_of[static_cast<std::size_t>((*phi)(x))] == class_of[static_cast<std::size_t>(x)];
      }
      if (preserves) found.push_back(std::move(*phi));
    }
    std::size_t i = 0;
    while (i < gens.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == gens.size()) break;
  }
  return AutomorphismSet(AutKind::kClassPreserving, std::move(found));
}

MapFlags classify_map(const FiniteGroup& g, const Automorphism& candidate) {
  MapFlags flags;
  const auto n = static_cast<std::size_t>(g.order());
  if (candidate.images.size() != n ||
      std::any_of(candidate.images.begin(), candidate.images.end(),
                  [&](Element e) { return e < 0 || static_cast<std::size_t>(e) >= n; })) {
    return flags;
  }
  flags.automorphism = is_bijective(candidate) && is_multiplicative(g, candidate);
  const Subgroup z = center(g);
  const auto class_of = conjugacy_class_index(g);
  flags.central = true;
  flags.class_preserving = true;
  for (Element x = 0; x < g.order(); ++x) {
    if (!z.contains(g.mul(g.inv(x), candidate(x)))) flags.central = false;
    if (class_of[static_cast<std::size_t>(candidate(x))] != class_of[static_cast<std::size_t>(x)]) {
      flags.class_preserving = false;
    }
  }
  flags.inner = flags.automorphism && inner_automorphisms(g).contains(candidate);
  return flags;
}

AutCHomImages aut_c_hom_images(const FiniteGroup& g, int max_order) {
  const CentralSeriesData series = central_series(g);
  if (series.nilpotency_class > 2) {
    throw Error(ErrorCode::kClassTooHigh, "nilpotency class " +
                                              std::to_string(series.nilpotency_class) + " > 2");
  }
  const Subgroup z = center(g);
  const Subgroup derived = derived_subgroup(g);
  const Quotient q = quotient(g, z);
  const auto qn = static_cast<std::size_t>(q.group.order());

  AutCHomImages out;
  out.hom_count = hom_structure(abelian_invariants(q.group), abelian_invariants(derived)).count;
  const AutomorphismSet autc = class_preserving_automorphisms(g, max_order);
  std::vector<std::vector<Element>> seen;
  for (const auto& mu : autc.maps()) {
    HomImage img{mu, std::vector<Element>(qn, -1)};
    for (Element x = 0; x < g.order(); ++x) {
      const Element v = g.mul(g.inv(x), mu(x));
      Element& slot = img.psi[static_cast<std::size_t>(q.projection[static_cast<std::size_t>(x)])];
      if (slot >= 0 && slot != v) {
        throw Error(ErrorCode::kConsistencyFail, "psi_mu is not constant on a coset of Z(G)");
      }
      if (!derived.contains(v)) throw Error(ErrorCode::kConsistencyFail, "psi_mu leaves gamma_2");
      slot = v;
    }
    for (std::size_t a = 0; a < qn; ++a) {
      for (std::size_t b = 0; b < qn; ++b) {
        const Element ab = q.group.mul(static_cast<Element>(a), static_cast<Element>(b));
        if (img.psi[static_cast<std::size_t>(ab)] != g.mul(img.psi[a], img.psi[b])) {
          throw Error(ErrorCode::kConsistencyFail, "psi_mu is not a homomorphism");
        }
      }
    }
    seen.push_back(img.psi);
    out.images.push_back(std::move(img));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error(ErrorCode::kConsistencyFail, "mu -> psi_mu is not injective");
  }
  return out;
}

}  // namespace classaut
