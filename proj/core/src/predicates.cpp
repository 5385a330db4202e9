#include "classaut/predicates.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "classaut/error.hpp"

namespace classaut {

namespace {

Subgroup product_of_normals(const Subgroup& a, const Subgroup& b) {
  const FiniteGroup& g = a.parent();
  std::vector<Element> members;
  members.reserve(static_cast<std::size_t>(a.order()) * static_cast<std::size_t>(b.order()));
  for (Element x : a.members()) {
    for (Element y : b.members()) members.push_back(g.mul(x, y));
  }
  return Subgroup(g, std::move(members));
}

}  // namespace

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  if (g.order() > 128) {
    throw Error(ErrorCode::kTooLarge, "normal subgroup enumeration limited to order 128");
  }
  std::map<std::vector<Element>, Subgroup> found;
  auto add = [&](Subgroup s) {
    std::vector<Element> key(s.members().begin(), s.members().end());
    return found.emplace(std::move(key), std::move(s)).second;
  };
  add(trivial_subgroup(g));
  std::vector<Subgroup> closures;
  for (const auto& cls : conjugacy_classes(g)) {
    Subgroup s = subgroup_closure(g, cls);
    if (add(s)) closures.push_back(std::move(s));
  }
  // Every normal subgroup is a union of classes, hence a join of closures.
  std::vector<Subgroup> frontier;
  for (const auto& [key, s] : found) frontier.push_back(s);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier) {
      for (const auto& c : closures) {
        if (c.is_subset_of(s)) continue;
        Subgroup j = product_of_normals(s, c);
        if (add(j)) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (auto& [key, s] : found) out.push_back(std::move(s));
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
  return out;
}

bool is_purely_nonabelian(const FiniteGroup& g) {
  prime_of_group(g);
  if (g.is_abelian()) return false;
  const Subgroup z = center(g);
  if (z.is_subset_of(frattini_subgroup(g))) return true;
  if (g.order() > 128) {
    throw Error(ErrorCode::kTooLarge, "exact purely non-abelian test limited to order 128");
  }
  const auto normals = normal_subgroups(g);
  std::set<std::vector<Element>> cyclic_seen;
  for (Element c : z.members()) {
    if (c == g.identity()) continue;
    const Element seed[] = {c};
    Subgroup cyc = subgroup_closure(g, seed);
    if (!cyclic_seen.emplace(cyc.members().begin(), cyc.members().end()).second) continue;
    for (const auto& h : normals) {
      if (h.order() * cyc.order() != g.order()) continue;
      if (intersection(h, cyc).is_trivial()) return false;  // G = H x C
    }
  }
  return true;
}

bool is_camina_pair(const FiniteGroup& g, const Subgroup& m) {
  if (m.is_trivial() || m.is_whole() || !is_normal(g, m)) {
    throw Error(ErrorCode::kBadSubgroup, "Camina pair needs a non-trivial proper normal subgroup");
  }
  std::vector<char> hit(static_cast<std::size_t>(g.order()));
  for (Element y = 0; y < g.order(); ++y) {
    if (m.contains(y)) continue;
    std::fill(hit.begin(), hit.end(), 0);
    for (Element x = 0; x < g.order(); ++x) hit[static_cast<std::size_t>(commutator(g, y, x))] = 1;
    for (Element e : m.members()) {
      if (!hit[static_cast<std::size_t>(e)]) return false;
    }
  }
  return true;
}

bool is_camina_group(const FiniteGroup& g) {
  if (g.is_abelian()) throw Error(ErrorCode::kAbelianInput, "Camina group test needs a non-abelian group");
  return is_camina_pair(g, derived_subgroup(g));
}

bool is_camina_class2(const FiniteGroup& g) {
  if (!is_camina_group(g)) return false;
  int cls = 0;
  try {
    cls = central_series(g).nilpotency_class;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotNilpotent) return false;
    throw;
  }
  if (cls != 2) return false;
  if (!(derived_subgroup(g) == center(g))) {
    throw Error(ErrorCode::kConsistencyFail, "Camina group of class 2 with gamma_2 != Z");
  }
  return true;
}

Automorphism witness_central_not_class_preserving(const FiniteGroup& g) {
  if (g.is_abelian()) throw Error(ErrorCode::kHypothesisFail, "group is abelian");
  const int p = prime_of_group(g);
  const Subgroup z = center(g);
  const Subgroup phi = frattini_subgroup(g);
  Element h = -1;
  for (Element e : z.members()) {
    if (!phi.contains(e)) {
      h = e;
      break;
    }
  }
  if (h < 0) throw Error(ErrorCode::kHypothesisFail, "Z(G) is contained in Phi(G)");

  // Extend {h} to a basis of G/Phi; the other basis elements with Phi span
  // a maximal subgroup M missing h.
  std::vector<Element> seeds(phi.members().begin(), phi.members().end());
  seeds.push_back(h);
  Subgroup span = subgroup_closure(g, seeds);
  std::vector<Element> m_seeds(phi.members().begin(), phi.members().end());
  for (Element e = 0; e < g.order() && !span.is_whole(); ++e) {
    if (span.contains(e)) continue;
    m_seeds.push_back(e);
    std::vector<Element> s(span.members().begin(), span.members().end());
    s.push_back(e);
    span = subgroup_closure(g, s);
  }
  const Subgroup m = subgroup_closure(g, m_seeds);

  Element zp = -1;
  const Subgroup z_phi = intersection(z, phi);
  for (Element e : z_phi.members()) {
    if (element_order(g, e) == p) {
      zp = e;
      break;
    }
  }
  if (zp < 0) throw Error(ErrorCode::kHypothesisFail, "Z(G) cap Phi(G) has no element of order p");

  Automorphism mu;
  mu.images.assign(static_cast<std::size_t>(g.order()), -1);
  const Element h_inv = g.inv(h);
  for (Element x = 0; x < g.order(); ++x) {
    Element rest = x;  // x h^-i
    Element shift = g.identity();  // z^i
    for (int i = 0; i < p; ++i) {
      if (m.contains(rest)) {
        mu.images[static_cast<std::size_t>(x)] = g.mul(x, shift);
        break;
      }
      rest = g.mul(rest, h_inv);
      shift = g.mul(shift, zp);
    }
    if (mu.images[static_cast<std::size_t>(x)] < 0) {
      throw Error(ErrorCode::kConsistencyFail, "element outside M<h>");
    }
  }
  return mu;
}

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::kT3_1: return "thm3.1";
    case TheoremId::kT3_2: return "thm3.2";
    case TheoremId::kT3_3: return "thm3.3";
    case TheoremId::kT3_4: return "thm3.4";
    case TheoremId::kL4_1: return "lemma4.1";
    case TheoremId::kT4_3: return "thm4.3";
    case TheoremId::kT4_4: return "thm4.4";
    case TheoremId::kT4_5: return "thm4.5";
    case TheoremId::kAdneyYen: return "adney-yen";
    case TheoremId::kMorigi: return "morigi";
  }
  return "unknown";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  std::string s;
  for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  static const std::map<std::string, TheoremId> aliases = {
      {"thm3.1", TheoremId::kT3_1},   {"t3.1", TheoremId::kT3_1},
      {"thm3.2", TheoremId::kT3_2},   {"t3.2", TheoremId::kT3_2},
      {"thm3.3", TheoremId::kT3_3},   {"t3.3", TheoremId::kT3_3},
      {"thm3.4", TheoremId::kT3_4},   {"t3.4", TheoremId::kT3_4},
      {"lemma4.1", TheoremId::kL4_1}, {"l4.1", TheoremId::kL4_1},
      {"thm4.3", TheoremId::kT4_3},   {"t4.3", TheoremId::kT4_3},
      {"thm4.4", TheoremId::kT4_4},   {"t4.4", TheoremId::kT4_4},
      {"thm4.5", TheoremId::kT4_5},   {"t4.5", TheoremId::kT4_5},
      {"adney-yen", TheoremId::kAdneyYen}, {"adneyyen", TheoremId::kAdneyYen},
      {"morigi", TheoremId::kMorigi},
  };
  auto it = aliases.find(s);
  if (it == aliases.end()) return std::nullopt;
  return it->second;
}

std::optional<int> GroupFacts::prime() const { return prime_of_prime_power(g_.order()); }

const Subgroup& GroupFacts::center() {
  if (!center_) center_ = classaut::center(g_);
  return *center_;
}

const Subgroup& GroupFacts::derived() {
  if (!derived_) derived_ = derived_subgroup(g_);
  return *derived_;
}

const Subgroup& GroupFacts::frattini() {
  if (!frattini_) frattini_ = frattini_subgroup(g_);
  return *frattini_;
}

const CentralSeriesData& GroupFacts::series() {
  if (!series_) series_ = central_series(g_);
  return *series_;
}

const AbelianInvariants& GroupFacts::center_invariants() {
  if (!center_inv_) center_inv_ = abelian_invariants(center());
  return *center_inv_;
}

const AbelianInvariants& GroupFacts::derived_invariants() {
  if (!derived_inv_) derived_inv_ = abelian_invariants(derived());
  return *derived_inv_;
}

const FiniteGroup& GroupFacts::central_quotient() {
  if (!central_quotient_) central_quotient_ = quotient(g_, center());
  return central_quotient_->group;
}

const FiniteGroup& GroupFacts::abelianization() {
  if (!abelianization_) abelianization_ = quotient(g_, derived());
  return abelianization_->group;
}

const AutomorphismSet& GroupFacts::inner() {
  if (!inner_) inner_ = inner_automorphisms(g_);
  return *inner_;
}

const CentralEnumeration& GroupFacts::central() {
  if (!central_) central_ = enumerate_central_automorphisms(g_);
  return *central_;
}

const AutomorphismSet& GroupFacts::central_fixing_center() {
  if (!central_fixing_) {
    std::vector<Automorphism> kept;
    for (const auto& a : central().automorphisms.maps()) {
      const auto& zm = center().members();
      if (std::all_of(zm.begin(), zm.end(), [&](Element c) { return a(c) == c; })) kept.push_back(a);
    }
    central_fixing_ = AutomorphismSet(AutKind::kCentralFixingCenter, std::move(kept));
  }
  return *central_fixing_;
}

const AutomorphismSet& GroupFacts::class_preserving() {
  if (!class_preserving_) class_preserving_ = class_preserving_automorphisms(g_, max_order_);
  return *class_preserving_;
}

bool GroupFacts::purely_nonabelian() {
  if (!pna_) pna_ = is_purely_nonabelian(g_);
  return *pna_;
}

bool GroupFacts::camina() {
  if (!camina_) camina_ = is_camina_group(g_);
  return *camina_;
}

bool GroupFacts::camina_class2() {
  if (!camina2_) camina2_ = is_camina_class2(g_);
  return *camina2_;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// First map in exactly one of the two sets.
std::optional<Witness> difference_witness(const AutomorphismSet& a, std::string_view a_name,
                                          const AutomorphismSet& b, std::string_view b_name) {
  for (const auto& m : a.maps()) {
    if (!b.contains(m)) {
      return Witness{"automorphism in " + std::string(a_name) + " but not in " + std::string(b_name), m, {}};
    }
  }
  for (const auto& m : b.maps()) {
    if (!a.contains(m)) {
      return Witness{"automorphism in " + std::string(b_name) + " but not in " + std::string(a_name), m, {}};
    }
  }
  return std::nullopt;
}

Witness subgroup_witness(std::string description, const Subgroup& s) {
  return Witness{std::move(description), std::nullopt, {s.members().begin(), s.members().end()}};
}

int log_p(std::int64_t n, int p) {
  int k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace

TheoremVerdict check_theorem(GroupFacts& f, TheoremId id) {
  TheoremVerdict v;
  v.id = id;
  const FiniteGroup& g = f.group();
  const auto p = f.prime();
  const bool nonabelian_p = p.has_value() && !g.is_abelian();
  const int n = p ? log_p(g.order(), *p) : 0;

  // Aut_c = Aut_z, shared by most statements.
  auto autc_eq_autz = [&] { return f.class_preserving().same_maps(f.central().automorphisms); };
  auto gamma_eq_z = [&] { return f.derived() == f.center(); };
  auto lhs_witness_cz = [&]() -> std::optional<Witness> {
    return difference_witness(f.class_preserving(), "Aut_c", f.central().automorphisms, "Aut_z");
  };

  switch (id) {
    case TheoremId::kT3_1: {
      v.applicable = nonabelian_p;
      if (!v.applicable) break;
      v.lhs = autc_eq_autz();
      bool iso = false;
      if (gamma_eq_z()) {
        const auto& autc = f.class_preserving();
        const auto hom = hom_structure(abelian_invariants(f.central_quotient()), f.derived_invariants());
        iso = autc.is_abelian() && autc.abelian_invariants() == hom.invariants;
      }
      v.rhs = gamma_eq_z() && iso;
      v.detail = "|Aut_c|=" + std::to_string(f.class_preserving().size()) +
                 " |Aut_z|=" + std::to_string(f.central().automorphisms.size()) +
                 " gamma2=Z:" + yes_no(gamma_eq_z()) + " Aut_c~Hom(G/Z,gamma2):" + yes_no(iso);
      if (!v.passes()) {
        v.witness = v.lhs ? (gamma_eq_z() ? Witness{"Aut_c is not isomorphic to Hom(G/Z, gamma_2)", std::nullopt, {}}
                                          : subgroup_witness("Z(G) differs from gamma_2(G)", f.center()))
                          : lhs_witness_cz();
      }
      break;
    }
    case TheoremId::kT3_2: {
      v.applicable = nonabelian_p;
      if (!v.applicable) break;
      v.lhs = f.central().automorphisms.same_maps(f.inner());
      v.rhs = gamma_eq_z() && f.center_invariants().is_cyclic();
      v.detail = "|Aut_z|=" + std::to_string(f.central().automorphisms.size()) +
                 " |Inn|=" + std::to_string(f.inner().size()) + " gamma2=Z:" + yes_no(gamma_eq_z()) +
                 " Z=" + f.center_invariants().to_string();
      if (!v.passes()) {
        v.witness = v.lhs ? subgroup_witness("Z(G) is not a cyclic gamma_2(G)", f.center())
                          : difference_witness(f.central().automorphisms, "Aut_z", f.inner(), "Inn");
      }
      break;
    }
    case TheoremId::kT3_3: {
      v.applicable = nonabelian_p && f.center_invariants().is_elementary();
      if (!v.applicable) break;
      v.lhs = autc_eq_autz();
      v.rhs = f.camina_class2();
      v.detail = "|Aut_c|=" + std::to_string(f.class_preserving().size()) +
                 " |Aut_z|=" + std::to_string(f.central().automorphisms.size()) +
                 " camina_class2:" + yes_no(v.rhs);
      if (!v.passes()) {
        v.witness = v.lhs ? subgroup_witness("gamma_2(G) is not a Camina subgroup of class 2", f.derived())
                          : lhs_witness_cz();
      }
      break;
    }
    case TheoremId::kT3_4: {
      v.applicable = nonabelian_p && f.center_invariants().is_cyclic();
      if (!v.applicable) break;
      v.lhs = autc_eq_autz();
      v.rhs = gamma_eq_z();
      v.detail = "|Aut_c|=" + std::to_string(f.class_preserving().size()) +
                 " |Aut_z|=" + std::to_string(f.central().automorphisms.size()) +
                 " gamma2=Z:" + yes_no(v.rhs);
      if (!v.passes()) {
        v.witness = v.lhs ? subgroup_witness("Z(G) differs from gamma_2(G)", f.center()) : lhs_witness_cz();
      }
      break;
    }
    case TheoremId::kL4_1: {
      v.applicable = p.has_value() && n >= 3 && log_p(f.center().order(), *p) == n - 2;
      if (!v.applicable) break;
      v.lhs = f.class_preserving().same_maps(f.inner());
      v.rhs = true;
      v.detail = "|Aut_c|=" + std::to_string(f.class_preserving().size()) +
                 " |Inn|=" + std::to_string(f.inner().size());
      if (!v.passes()) v.witness = difference_witness(f.class_preserving(), "Aut_c", f.inner(), "Inn");
      break;
    }
    case TheoremId::kT4_3:
    case TheoremId::kT4_4:
    case TheoremId::kT4_5: {
      const auto [lo, hi] = id == TheoremId::kT4_3   ? std::pair{3, 5}
                            : id == TheoremId::kT4_4 ? std::pair{6, 6}
                                                     : std::pair{7, 7};
      v.applicable = nonabelian_p && n >= lo && n <= hi;
      if (!v.applicable) break;
      v.lhs = autc_eq_autz();
      const bool cyclic_case = gamma_eq_z() && f.center_invariants().is_cyclic();
      v.rhs = id == TheoremId::kT4_3 ? cyclic_case : cyclic_case || f.camina_class2();
      v.detail = "|Aut_c|=" + std::to_string(f.class_preserving().size()) +
                 " |Aut_z|=" + std::to_string(f.central().automorphisms.size()) +
                 " gamma2=Z cyclic:" + yes_no(cyclic_case);
      if (!v.passes()) {
        v.witness = v.lhs ? subgroup_witness("Z(G) fails the characterization", f.center()) : lhs_witness_cz();
      }
      break;
    }
    case TheoremId::kAdneyYen: {
      v.applicable = nonabelian_p && f.purely_nonabelian();
      if (!v.applicable) break;
      const auto& c = f.central();
      const auto hom = hom_structure(abelian_invariants(f.abelianization()), f.center_invariants());
      v.lhs = c.automorphisms.size() == hom.count && c.homomorphisms == hom.count && c.rejected == 0;
      v.rhs = true;
      v.detail = "|Aut_z|=" + std::to_string(c.automorphisms.size()) +
                 " |Hom(G/gamma2,Z)|=" + std::to_string(hom.count) +
                 " rejected=" + std::to_string(c.rejected);
      if (!v.passes()) {
        v.witness = c.first_rejected
                        ? Witness{"non-bijective central candidate", c.first_rejected, {}}
                        : Witness{"|Aut_z| differs from |Hom(G/gamma_2, Z)|", std::nullopt, {}};
      }
      break;
    }
    case TheoremId::kMorigi: {
      int cls = 0;
      try {
        cls = f.series().nilpotency_class;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotNilpotent) throw;
        cls = -1;
      }
      v.applicable = cls == 2;
      if (!v.applicable) break;
      const int exp_derived = exponent(f.derived());
      const int exp_quot = exponent(f.central_quotient());
      const auto inv = abelian_invariants(f.central_quotient());
      const auto factors = inv.factors();
      const auto top = factors.empty() ? 0 : factors.back();
      const auto mult = std::count(factors.begin(), factors.end(), top);
      v.lhs = exp_derived == exp_quot && mult >= 2;
      v.rhs = true;
      v.detail = "exp(gamma2)=" + std::to_string(exp_derived) + " exp(G/Z)=" + std::to_string(exp_quot) +
                 " G/Z=" + inv.to_string();
      if (!v.passes()) {
        v.witness = subgroup_witness("gamma_2(G) against G/Z(G): " + v.detail, f.derived());
      }
      break;
    }
  }
  if (!v.passes() && !v.witness) v.witness = Witness{"lhs and rhs disagree: " + v.detail, std::nullopt, {}};
  return v;
}

TheoremVerdict check_theorem(const FiniteGroup& g, TheoremId id, int max_order) {
  GroupFacts facts(g, max_order);
  return check_theorem(facts, id);
}

}  // namespace classaut
