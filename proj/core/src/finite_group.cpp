#include "classaut/finite_group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <utility>

#include "classaut/error.hpp"

namespace classaut {

namespace {

int table_side(std::size_t entries) {
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries))));
  if (n * n != entries || n == 0) {
    throw Error(ErrorCode::kConsistencyFail, "multiplication table is not square");
  }
  return static_cast<int>(n);
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<Element> table, std::vector<Element> generators,
                                    std::vector<std::string> symbols) {
  const int n = table_side(table.size());
  const auto un = static_cast<std::size_t>(n);
  for (Element e : table) {
    if (e < 0 || e >= n) throw Error(ErrorCode::kConsistencyFail, "table entry out of range");
  }
  // Locate the two-sided identity.
  Element identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = table[un * static_cast<std::size_t>(e) + static_cast<std::size_t>(x)] == x &&
           table[un * static_cast<std::size_t>(x) + static_cast<std::size_t>(e)] == x;
    }
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorCode::kConsistencyFail, "table has no identity");
  std::vector<char> seen(un);
  for (std::size_t r = 0; r < un; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < un; ++c) {
      auto v = static_cast<std::size_t>(table[r * un + c]);
      if (seen[v]) throw Error(ErrorCode::kConsistencyFail, "table row is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < un; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < un; ++r) {
      auto v = static_cast<std::size_t>(table[r * un + c]);
      if (seen[v]) throw Error(ErrorCode::kConsistencyFail, "table column is not a permutation");
      seen[v] = 1;
    }
  }
  for (Element g : generators) {
    if (g < 0 || g >= n) throw Error(ErrorCode::kConsistencyFail, "generator out of range");
  }
  FiniteGroup group = from_table_unchecked(std::move(table), identity, std::move(generators),
                                           std::move(symbols));
  if (!group.tree_.spans_group()) {
    throw Error(ErrorCode::kConsistencyFail, "generators do not generate the table");
  }
  return group;
}

FiniteGroup FiniteGroup::from_table_unchecked(std::vector<Element> table, Element identity,
                                              std::vector<Element> generators,
                                              std::vector<std::string> symbols) {
  FiniteGroup g;
  g.n_ = table_side(table.size());
  g.identity_ = identity;
  g.table_ = std::move(table);
  g.generators_ = std::move(generators);
  g.symbols_ = std::move(symbols);
  while (g.symbols_.size() < g.generators_.size()) {
    g.symbols_.push_back("g" + std::to_string(g.symbols_.size() + 1));
  }
  g.finish_construction();
  return g;
}

void FiniteGroup::finish_construction() {
  inverse_.assign(static_cast<std::size_t>(n_), identity_);
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      if (mul(a, b) == identity_) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
  }
  abelian_ = true;
  for (Element a = 0; a < n_ && abelian_; ++a) {
    for (Element b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
    }
  }
  tree_ = build_word_tree(*this, generators_);
}

Word FiniteGroup::canonical_word(Element e) const {
  std::vector<int> letters;
  for (Element cur = e; tree_.parent[static_cast<std::size_t>(cur)] >= 0;
       cur = tree_.parent[static_cast<std::size_t>(cur)]) {
    letters.push_back(tree_.letter[static_cast<std::size_t>(cur)]);
  }
  std::reverse(letters.begin(), letters.end());
  Word w;
  for (int l : letters) {
    if (!w.factors.empty() && w.factors.back().generator == l) {
      ++w.factors.back().exponent;
    } else {
      w = Word::product(std::move(w), Word::generator(l));
    }
  }
  return w;
}

WordTree build_word_tree(const FiniteGroup& g, std::span<const Element> generators) {
  WordTree t;
  const auto n = static_cast<std::size_t>(g.order());
  t.generators.assign(generators.begin(), generators.end());
  t.parent.assign(n, -1);
  t.letter.assign(n, -1);
  std::vector<char> seen(n, 0);
  t.order.push_back(g.identity());
  seen[static_cast<std::size_t>(g.identity())] = 1;
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    Element cur = t.order[head];
    for (std::size_t i = 0; i < generators.size(); ++i) {
      Element next = g.mul(cur, generators[i]);
      if (seen[static_cast<std::size_t>(next)]) continue;
      seen[static_cast<std::size_t>(next)] = 1;
      t.parent[static_cast<std::size_t>(next)] = cur;
      t.letter[static_cast<std::size_t>(next)] = static_cast<int>(i);
      t.order.push_back(next);
    }
  }
  return t;
}

Element power(const FiniteGroup& g, Element x, std::int64_t k) {
  const std::int64_t ord = element_order(g, x);
  k %= ord;
  if (k < 0) k += ord;
  Element acc = g.identity();
  for (std::int64_t i = 0; i < k; ++i) acc = g.mul(acc, x);
  return acc;
}

int element_order(const FiniteGroup& g, Element x) {
  int k = 1;
  Element acc = x;
  while (acc != g.identity()) {
    acc = g.mul(acc, x);
    if (++k > g.order()) return g.order();  // only reachable on corrupted tables
  }
  return k;
}

Element commutator(const FiniteGroup& g, Element a, Element b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

Element conjugate(const FiniteGroup& g, Element x, Element by) {
  return g.mul(g.mul(g.inv(by), x), by);
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Element> members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(static_cast<std::size_t>(parent.order()), false);
  for (Element e : members_) mask_[static_cast<std::size_t>(e)] = true;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element e) { return other.contains(e); });
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Element> seeds) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> in(n, 0);
  std::vector<Element> members{g.identity()};
  in[static_cast<std::size_t>(g.identity())] = 1;
  std::vector<Element> gens;
  for (Element s : seeds) {
    if (s != g.identity() && std::find(gens.begin(), gens.end(), s) == gens.end()) {
      gens.push_back(s);
    }
  }
  // Right-multiplying by generators reaches the whole subgroup in a finite group.
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Element s : gens) {
      Element next = g.mul(members[head], s);
      if (!in[static_cast<std::size_t>(next)]) {
        in[static_cast<std::size_t>(next)] = 1;
        members.push_back(next);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(static_cast<std::size_t>(g.order()));
  for (Element e = 0; e < g.order(); ++e) all[static_cast<std::size_t>(e)] = e;
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {g.identity()}); }

Subgroup centralizer(const FiniteGroup& g, Element x) {
  std::vector<Element> members;
  for (Element e = 0; e < g.order(); ++e) {
    if (g.mul(e, x) == g.mul(x, e)) members.push_back(e);
  }
  return Subgroup(g, std::move(members));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> members;
  for (Element e : a.members()) {
    if (b.contains(e)) members.push_back(e);
  }
  return Subgroup(a.parent(), std::move(members));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> seeds(a.members().begin(), a.members().end());
  seeds.insert(seeds.end(), b.members().begin(), b.members().end());
  return subgroup_closure(a.parent(), seeds);
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Element s : g.generators()) {
    for (Element x : h.members()) {
      if (!h.contains(conjugate(g, x, s))) return false;
    }
  }
  return true;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(ErrorCode::kNotNormal, "subgroup is not normal");
  const auto size = static_cast<std::size_t>(g.order());
  std::vector<Element> projection(size, -1);
  std::vector<Element> representative;
  for (Element e = 0; e < g.order(); ++e) {
    if (projection[static_cast<std::size_t>(e)] >= 0) continue;
    auto idx = static_cast<Element>(representative.size());
    representative.push_back(e);
    for (Element m : n.members()) projection[static_cast<std::size_t>(g.mul(e, m))] = idx;
  }
  const auto q = representative.size();
  std::vector<Element> table(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      table[a * q + b] =
          projection[static_cast<std::size_t>(g.mul(representative[a], representative[b]))];
    }
  }
  std::vector<Element> gens;
  for (Element s : g.generators()) gens.push_back(projection[static_cast<std::size_t>(s)]);
  std::vector<std::string> symbols(g.generator_symbols().begin(), g.generator_symbols().end());
  return Quotient{FiniteGroup::from_table(std::move(table), std::move(gens), std::move(symbols)),
                  std::move(projection)};
}

bool check_associativity(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < g.order(); ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return false;
      }
    }
  }
  return true;
}

bool check_group_axioms(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a) {
    if (g.mul(a, g.identity()) != a || g.mul(g.identity(), a) != a) return false;
    if (g.mul(a, g.inv(a)) != g.identity() || g.mul(g.inv(a), a) != g.identity()) return false;
  }
  return check_associativity(g);
}

std::uint64_t table_hash(const FiniteGroup& g) {
  // FNV-1a over the little-endian table entries.
  std::uint64_t h = 1469598103934665603ULL;
  for (Element e : g.table()) {
    auto v = static_cast<std::uint32_t>(e);
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

std::string dump(const FiniteGroup& g) {
  std::ostringstream out;
  out << "order " << g.order() << "\ngenerator orders";
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    out << ' ' << g.generator_symbols()[i] << '=' << element_order(g, g.generators()[i]);
  }
  out << "\ntable fnv1a " << std::hex << table_hash(g) << '\n';
  return out.str();
}

}  // namespace classaut
