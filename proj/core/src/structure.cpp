#include "classaut/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "classaut/error.hpp"

namespace classaut {

std::optional<int> prime_of_prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return static_cast<int>(p);
}

int prime_of_group(const FiniteGroup& g) {
  auto p = prime_of_prime_power(g.order());
  if (!p) {
    throw Error(ErrorCode::kNotPrimePower,
                "group order " + std::to_string(g.order()) + " is not a prime power");
  }
  return *p;
}

AbelianInvariants::AbelianInvariants(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
  for (auto f : factors_) {
    if (!prime_of_prime_power(f)) {
      throw Error(ErrorCode::kBadInvariants, std::to_string(f) + " is not a prime power > 1");
    }
  }
  std::sort(factors_.begin(), factors_.end());
}

std::uint64_t AbelianInvariants::order() const {
  std::uint64_t acc = 1;
  for (auto f : factors_) {
    if (__builtin_mul_overflow(acc, static_cast<std::uint64_t>(f), &acc)) {
      throw Error(ErrorCode::kBadInvariants, "group order overflows 64 bits");
    }
  }
  return acc;
}

std::int64_t AbelianInvariants::exponent() const {
  std::int64_t acc = 1;
  for (auto f : factors_) acc = std::lcm(acc, f);
  return acc;
}

bool AbelianInvariants::is_cyclic() const {
  // Prime-power factors: cyclic iff no prime repeats.
  std::vector<int> primes;
  for (auto f : factors_) primes.push_back(*prime_of_prime_power(f));
  std::sort(primes.begin(), primes.end());
  return std::adjacent_find(primes.begin(), primes.end()) == primes.end();
}

bool AbelianInvariants::is_elementary() const {
  if (factors_.empty()) return true;
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](std::int64_t f) { return f == factors_.front(); }) &&
         *prime_of_prime_power(factors_.front()) == factors_.front();
}

std::string AbelianInvariants::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    if (!s.empty()) s += " x ";
    s += "C" + std::to_string(*it);
  }
  return s;
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Element> members;
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element s = 0; s < g.order() && central; ++s) central = g.mul(z, s) == g.mul(s, z);
    if (central) members.push_back(z);
  }
  return Subgroup(g, std::move(members));
}

namespace {

// [A, G] for a subgroup A.
Subgroup commutator_with_group(const FiniteGroup& g, const Subgroup& a) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Element> seeds;
  for (Element x : a.members()) {
    for (Element y = 0; y < g.order(); ++y) {
      Element c = commutator(g, x, y);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        seeds.push_back(c);
      }
    }
  }
  return subgroup_closure(g, seeds);
}

}  // namespace

Subgroup derived_subgroup(const FiniteGroup& g) { return commutator_with_group(g, whole_group(g)); }

CentralSeriesData central_series(const FiniteGroup& g) {
  CentralSeriesData data;
  data.lower.push_back(whole_group(g));
  while (!data.lower.back().is_trivial()) {
    Subgroup next = commutator_with_group(g, data.lower.back());
    if (next == data.lower.back()) {
      throw Error(ErrorCode::kNotNilpotent, "lower central series stabilizes above 1");
    }
    data.lower.push_back(std::move(next));
  }
  data.upper.push_back(trivial_subgroup(g));
  while (!data.upper.back().is_whole()) {
    const Subgroup& prev = data.upper.back();
    std::vector<Element> members;
    for (Element x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Element y = 0; y < g.order() && ok; ++y) ok = prev.contains(commutator(g, x, y));
      if (ok) members.push_back(x);
    }
    Subgroup next(g, std::move(members));
    if (next == prev) throw Error(ErrorCode::kNotNilpotent, "upper central series stalls");
    data.upper.push_back(std::move(next));
  }
  data.nilpotency_class = static_cast<int>(data.lower.size()) - 1;
  if (data.upper.size() != data.lower.size()) {
    throw Error(ErrorCode::kConsistencyFail, "lower and upper central series lengths differ");
  }
  return data;
}

Subgroup frattini_subgroup(const FiniteGroup& g) {
  if (g.order() == 1) return trivial_subgroup(g);
  const int p = prime_of_group(g);
  std::vector<Element> seeds;
  for (Element x = 0; x < g.order(); ++x) seeds.push_back(power(g, x, p));
  Subgroup derived = derived_subgroup(g);
  seeds.insert(seeds.end(), derived.members().begin(), derived.members().end());
  return subgroup_closure(g, seeds);
}

std::vector<Element> minimal_generating_set(const FiniteGroup& g) {
  Subgroup span = frattini_subgroup(g);
  std::vector<Element> chosen;
  for (Element e = 0; e < g.order() && !span.is_whole(); ++e) {
    if (span.contains(e)) continue;
    chosen.push_back(e);
    std::vector<Element> seeds(span.members().begin(), span.members().end());
    seeds.push_back(e);
    span = subgroup_closure(g, seeds);
  }
  return chosen;
}

std::vector<Element> search_generating_set(const FiniteGroup& g) {
  if (g.order() == 1 || prime_of_prime_power(g.order())) return minimal_generating_set(g);
  Subgroup span = trivial_subgroup(g);
  std::vector<Element> chosen;
  for (Element e = 0; e < g.order() && !span.is_whole(); ++e) {
    if (span.contains(e)) continue;
    chosen.push_back(e);
    span = subgroup_closure(g, chosen);
  }
  return chosen;
}

int minimal_generating_rank(const FiniteGroup& g) {
  if (g.order() == 1) return 0;
  const int p = prime_of_group(g);
  const int index = g.order() / frattini_subgroup(g).order();
  int d = 0;
  for (int k = index; k > 1; k /= p) ++d;
  return d;
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    std::vector<Element> cls;
    for (Element y = 0; y < g.order(); ++y) {
      Element c = conjugate(g, x, y);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<int> conjugacy_class_index(const FiniteGroup& g) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  auto classes = conjugacy_classes(g);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Element e : classes[i]) index[static_cast<std::size_t>(e)] = static_cast<int>(i);
  }
  return index;
}

std::vector<Element> commutator_set(const FiniteGroup& g, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < g.order(); ++y) out.push_back(commutator(g, x, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int exponent(const FiniteGroup& g) { return exponent(whole_group(g)); }

int exponent(const Subgroup& s) {
  int acc = 1;
  for (Element x : s.members()) acc = std::lcm(acc, element_order(s.parent(), x));
  return acc;
}

AbelianInvariants abelian_invariants_from_orders(std::span<const std::int64_t> element_orders) {
  const auto n = static_cast<std::int64_t>(element_orders.size());
  std::vector<std::int64_t> factors;
  std::int64_t rest = n;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    // ranks[k] = log_p |{a : a^(p^k) = 1}|
    std::vector<int> ranks{0};
    for (std::int64_t pk = p;; pk *= p) {
      std::int64_t count = 0;
      for (auto o : element_orders) count += pk % o == 0 ? 1 : 0;
      int r = 0;
      std::int64_t c = count;
      while (c % p == 0 && c > 1) {
        c /= p;
        ++r;
      }
      if (c != 1) throw Error(ErrorCode::kConsistencyFail, "torsion count is not a prime power");
      if (r == ranks.back()) break;
      ranks.push_back(r);
    }
    // Factors of order >= p^k number ranks[k] - ranks[k-1].
    std::int64_t pk = 1;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
      pk *= p;
      const int at_least_k = ranks[k] - ranks[k - 1];
      const int at_least_next = k + 1 < ranks.size() ? ranks[k + 1] - ranks[k] : 0;
      for (int i = 0; i < at_least_k - at_least_next; ++i) factors.push_back(pk);
    }
  }
  return AbelianInvariants(std::move(factors));
}

AbelianInvariants abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw Error(ErrorCode::kNotAbelian, "group is not abelian");
  std::vector<std::int64_t> orders;
  for (Element x = 0; x < g.order(); ++x) orders.push_back(element_order(g, x));
  return abelian_invariants_from_orders(orders);
}

AbelianInvariants abelian_invariants(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  for (Element a : s.members()) {
    for (Element b : s.members()) {
      if (g.mul(a, b) != g.mul(b, a)) throw Error(ErrorCode::kNotAbelian, "subgroup is not abelian");
    }
  }
  std::vector<std::int64_t> orders;
  for (Element x : s.members()) orders.push_back(element_order(g, x));
  return abelian_invariants_from_orders(orders);
}

HomStructure hom_structure(const AbelianInvariants& a, const AbelianInvariants& b) {
  std::vector<std::int64_t> factors;
  for (auto x : a.factors()) {
    for (auto y : b.factors()) {
      auto d = std::gcd(x, y);
      if (d > 1) factors.push_back(d);
    }
  }
  HomStructure h{AbelianInvariants(std::move(factors)), 1};
  h.count = h.invariants.order();
  return h;
}

namespace {

void require_abelian(const FiniteGroup& g, const char* which) {
  if (!g.is_abelian()) throw Error(ErrorCode::kNotAbelian, std::string(which) + " is not abelian");
}

class HomSearch {
 public:
  HomSearch(const FiniteGroup& a, const FiniteGroup& b, std::size_t max_maps)
      : a_(a), b_(b), max_maps_(max_maps), gens_(search_generating_set(a)) {
    for (Element g : gens_) {
      const int ord = element_order(a, g);
      std::vector<Element> options;
      for (Element y = 0; y < b.order(); ++y) {
        if (ord % element_order(b, y) == 0) options.push_back(y);
      }
      candidates_.push_back(std::move(options));
    }
  }

  std::vector<std::vector<Element>> run() {
    std::vector<Element> image(static_cast<std::size_t>(a_.order()), -1);
    image[static_cast<std::size_t>(a_.identity())] = b_.identity();
    std::vector<Element> domain{a_.identity()};
    search(0, image, domain);
    return std::move(found_);
  }

 private:
  // image is a homomorphism on <gens_[0..level)> whose elements are `domain`.
  void search(std::size_t level, const std::vector<Element>& image,
              const std::vector<Element>& domain) {
    if (level == gens_.size()) {
      if (found_.size() >= max_maps_) {
        throw Error(ErrorCode::kTooLarge,
                    "more than " + std::to_string(max_maps_) + " homomorphisms");
      }
      found_.push_back(image);
      return;
    }
    const Element g = gens_[level];
    for (Element target : candidates_[level]) {
      std::vector<Element> next_image = image;
      std::vector<Element> next_domain = domain;
      if (extend(level, g, target, next_image, next_domain)) {
        search(level + 1, next_image, next_domain);
      }
    }
  }

  // Extends the partial map by g -> target and checks every edge
  // h -> h * gens_[i] (i <= level) inside the enlarged subgroup.
  bool extend(std::size_t level, Element g, Element target, std::vector<Element>& image,
              std::vector<Element>& domain) const {
    for (std::size_t head = 0; head < domain.size(); ++head) {
      const Element h = domain[head];
      const Element hg = a_.mul(h, g);
      const Element want = b_.mul(image[static_cast<std::size_t>(h)], target);
      Element& slot = image[static_cast<std::size_t>(hg)];
      if (slot < 0) {
        slot = want;
        domain.push_back(hg);
      } else if (slot != want) {
        return false;
      }
    }
    for (Element h : domain) {
      for (std::size_t i = 0; i <= level; ++i) {
        const Element s = gens_[i];
        const Element si = i == level ? target : image[static_cast<std::size_t>(s)];
        if (image[static_cast<std::size_t>(a_.mul(h, s))] !=
            b_.mul(image[static_cast<std::size_t>(h)], si)) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::size_t max_maps_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<std::vector<Element>> found_;
};

}  // namespace

std::vector<std::vector<Element>> enumerate_homs(const FiniteGroup& a, const FiniteGroup& b,
                                                 std::size_t max_maps) {
  require_abelian(a, "domain");
  require_abelian(b, "codomain");
  if (a.order() > 256 || b.order() > 256) {
    throw Error(ErrorCode::kTooLarge, "enumerate_homs is limited to groups of order <= 256");
  }
  auto maps = HomSearch(a, b, max_maps).run();
  // Every returned map is a homomorphism on all of A: the search checked
  // phi(h s) = phi(h) phi(s) for each h in A and each generator s.
  for (const auto& m : maps) {
    if (std::find(m.begin(), m.end(), -1) != m.end()) {
      throw Error(ErrorCode::kConsistencyFail, "homomorphism is not total");
    }
  }
  std::sort(maps.begin(), maps.end());
  return maps;
}

FiniteGroup abelian_group(std::span<const std::int64_t> factors) {
  std::int64_t n = 1;
  for (auto f : factors) {
    if (f < 1) throw Error(ErrorCode::kBadInvariants, "cyclic factor must be positive");
    n *= f;
    if (n > 4096) throw Error(ErrorCode::kTooLarge, "abelian group too large for a dense table");
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::int64_t> stride(factors.size(), 1);
  for (std::size_t i = factors.size(); i-- > 1;) stride[i - 1] = stride[i] * factors[i];
  auto digits = [&](std::int64_t e) {
    std::vector<std::int64_t> d(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) d[i] = (e / stride[i]) % factors[i];
    return d;
  };
  std::vector<Element> table(un * un);
  for (std::int64_t a = 0; a < n; ++a) {
    auto da = digits(a);
    for (std::int64_t b = 0; b < n; ++b) {
      auto db = digits(b);
      std::int64_t c = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) c += ((da[i] + db[i]) % factors[i]) * stride[i];
      table[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] = static_cast<Element>(c);
    }
  }
  std::vector<Element> gens;
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    gens.push_back(static_cast<Element>(stride[i] % n));
    symbols.push_back("e" + std::to_string(i + 1));
  }
  return FiniteGroup::from_table(std::move(table), std::move(gens), std::move(symbols));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto na = static_cast<std::size_t>(a.order());
  const auto nb = static_cast<std::size_t>(b.order());
  const std::size_t n = na * nb;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto l = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      auto r = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      table[x * n + y] = static_cast<Element>(static_cast<std::size_t>(l) * nb +
                                              static_cast<std::size_t>(r));
    }
  }
  std::vector<Element> gens;
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < a.generators().size(); ++i) {
    gens.push_back(static_cast<Element>(static_cast<std::size_t>(a.generators()[i]) * nb +
                                        static_cast<std::size_t>(b.identity())));
    symbols.push_back(a.generator_symbols()[i]);
  }
  for (std::size_t i = 0; i < b.generators().size(); ++i) {
    gens.push_back(static_cast<Element>(static_cast<std::size_t>(a.identity()) * nb +
                                        static_cast<std::size_t>(b.generators()[i])));
    symbols.push_back(b.generator_symbols()[i]);
  }
  return FiniteGroup::from_table(std::move(table), std::move(gens), std::move(symbols));
}

}  // namespace classaut
