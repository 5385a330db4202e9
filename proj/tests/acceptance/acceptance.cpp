// Acceptance gate: one PASS/FAIL line per criterion. argv[1], when given,
// is the path of the classaut executable used for the determinism check.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "classaut/automorphisms.hpp"
#include "classaut/catalog.hpp"
#include "classaut/error.hpp"
#include "classaut/predicates.hpp"
#include "classaut/structure.hpp"
#include "classaut_cli/commands.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace classaut;

namespace {

// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void expect_eq(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) {
      std::ostringstream s;
      s << what << " (got " << actual << ", expected " << expected << ")";
      failures_.push_back(s.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

Element word_element(const FiniteGroup& g, std::string_view word) {
  const auto gens = g.generators();
  const std::vector<Element> assignment(gens.begin(), gens.end());
  return evaluate_word(parse_word(word, g.generator_symbols()), assignment, g);
}

std::set<oracle::Map> maps_of(const AutomorphismSet& s) {
  std::set<oracle::Map> out;
  for (const auto& a : s.maps()) out.insert(a.images);
  return out;
}

// Relabels a closed subset as a standalone table group.
FiniteGroup subset_table(const FiniteGroup& g, const std::vector<Element>& members) {
  auto rank = [&](Element e) {
    return static_cast<Element>(std::lower_bound(members.begin(), members.end(), e) - members.begin());
  };
  std::vector<Element> table;
  for (Element a : members) {
    for (Element b : members) table.push_back(rank(g.mul(a, b)));
  }
  std::vector<Element> all(members.size());
  std::iota(all.begin(), all.end(), 0);
  return FiniteGroup::from_table(std::move(table), std::move(all), {});
}

std::vector<fixtures::NamedGroup> nonabelian_builtins() {
  auto all = fixtures::all_builtin_groups();
  std::erase_if(all, [](const fixtures::NamedGroup& n) { return n.group->is_abelian(); });
  return all;
}

// ---------------------------------------------------------------------------

void criterion1(Check& c) {
  const FiniteGroup& g = fixtures::paper32("G44");
  const Element x = word_element(g, "x"), y = word_element(g, "y"), z = word_element(g, "z");
  const auto zset = oracle::center(g);
  c.expect_eq(g.order(), 32, "|G|");
  c.expect_eq(zset.size(), 2u, "|Z|");
  c.expect(zset.count(word_element(g, "y^4")) == 1, "y^4 in Z");
  c.expect_eq(center(g).order(), 2, "library |Z|");
  c.expect_eq(oracle::derived(g).size(), 4u, "|gamma_2| (oracle)");
  c.expect_eq(derived_subgroup(g).order(), 4, "|gamma_2|");
  c.expect_eq(frattini_subgroup(g).order(), 4, "|Phi|");
  c.expect_eq(minimal_generating_rank(g), 3, "d(G)");
  const auto series = central_series(g);
  c.expect_eq(series.nilpotency_class, 3, "class");
  c.expect_eq(series.upper.size() > 2 ? series.upper[2].order() : -1, 8, "|Z_2|");
  c.expect_eq(oracle::centralizer(g, x).size(), 16u, "|C_G(x)|");
  c.expect_eq(oracle::centralizer(g, y).size(), 8u, "|C_G(y)|");
  c.expect_eq(oracle::centralizer(g, z).size(), 8u, "|C_G(z)|");
  c.expect_eq(oracle::conjugacy_class(g, x).size(), 2u, "|x^G|");
  c.expect_eq(oracle::conjugacy_class(g, y).size(), 4u, "|y^G|");
  c.expect_eq(oracle::conjugacy_class(g, z).size(), 4u, "|z^G|");
  const auto inn = inner_automorphisms(g);
  const auto autz = central_automorphisms(g);
  const auto autc = class_preserving_automorphisms(g);
  c.expect_eq(inn.size(), 16u, "|Inn|");
  c.expect_eq(autz.size(), 8u, "|Aut_z|");
  c.expect_eq(autc.size(), 32u, "|Aut_c|");
  c.expect(maps_of(autc) == oracle::class_preserving_automorphisms(g), "Aut_c agrees with oracle");
  c.expect(maps_of(autz) == oracle::central_automorphisms(g), "Aut_z agrees with oracle");
  c.expect(!autc.same_maps(inn), "Aut_c != Inn");
  c.expect(!autc.same_maps(autz), "Aut_c != Aut_z");
}

void criterion2(Check& c) {
  const auto& cat = fixtures::builtin(BuiltinCatalog::kPaper32);
  std::vector<std::string> violators;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const FiniteGroup& g = *cat.groups[i];
    const bool equal = maps_of(class_preserving_automorphisms(g)) == oracle::inner_automorphisms(g);
    if (!equal) violators.push_back(cat.entries[i].name);
  }
  c.expect_eq(cat.size(), 7u, "embedded order-32 groups");
  c.expect(violators == std::vector<std::string>{"G44"}, "only G44 has Aut_c != Inn");
  c.expect(cat.missing.size() == 1 && cat.missing[0].name == "G45" && cat.missing[0].missing_source(),
           "G45 reported missing-source");

  cli::Options o;
  o.builtins = {"paper32"};
  o.check = "thm4.2";
  std::ostringstream out, err;
  c.expect_eq(cli::run_verify(o, out, err), cli::kExitPass, "verify thm4.2 exit status");
  c.expect(out.str().find("\"status\": \"missing-source\"") != std::string::npos, "verify lists G45 as missing");
}

void criterion3(Check& c) {
  const auto& cat = fixtures::builtin(BuiltinCatalog::kPaper64);
  std::vector<std::string> camina2;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const FiniteGroup& g = *cat.groups[i];
    const bool lib = is_camina_class2(g);
    const bool orc = oracle::is_camina(g) && central_series(g).nilpotency_class == 2;
    c.expect_eq(lib, orc, cat.entries[i].name + " Camina class 2 vs oracle");
    if (lib) camina2.push_back(cat.entries[i].name);
  }
  c.expect(camina2 == std::vector<std::string>{"G183_13"}, "Camina class 2 exactly for G183_13");

  const FiniteGroup& g180 = fixtures::paper64("G180_12");
  const auto z180 = oracle::center(g180);
  c.expect_eq(z180.size(), 4u, "|Z(G180_12)|");
  c.expect(oracle::closure(g180, {word_element(g180, "a2")}) == z180, "Z(G180_12) = <a2>");
  c.expect(abelian_invariants(center(g180)).is_cyclic(), "Z(G180_12) cyclic");
  c.expect(oracle::derived(g180) == z180, "gamma_2 = Z in G180_12");
  const auto inn180 = oracle::inner_automorphisms(g180);
  c.expect_eq(inn180.size(), 16u, "|Inn(G180_12)|");
  c.expect(maps_of(class_preserving_automorphisms(g180)) == inn180, "Aut_c = Inn in G180_12");
  c.expect(maps_of(central_automorphisms(g180)) == inn180, "Aut_z = Inn in G180_12");

  const FiniteGroup& g183 = fixtures::paper64("G183_13");
  const auto autc = class_preserving_automorphisms(g183);
  c.expect_eq(autc.size(), 256u, "|Aut_c(G183_13)|");
  c.expect(maps_of(autc) == oracle::class_preserving_automorphisms(g183), "Aut_c(G183_13) agrees with oracle");
  c.expect(maps_of(autc) == oracle::central_automorphisms(g183), "Aut_c = Aut_z for G183_13 (oracle)");
  c.expect(autc.same_maps(central_automorphisms(g183)), "Aut_c = Aut_z for G183_13");
  c.expect_eq(oracle::hom_count_via_basis(oracle::abelian_table({2, 2, 2, 2}), oracle::abelian_table({2, 2})), 256u,
              "|Hom(C2^4, C2^2)|");
}

void criterion4(Check& c) {
  int checked = 0;
  for (const auto& [name, g] : nonabelian_builtins()) {
    const bool pna = is_purely_nonabelian(*g);
    c.expect_eq(pna, !oracle::has_abelian_direct_factor(*g), name + " purely non-abelian vs oracle");
    if (!pna) continue;
    ++checked;
    const auto e = enumerate_central_automorphisms(*g);
    const auto dset = oracle::derived(*g);
    const Quotient ab = quotient(*g, Subgroup(*g, {dset.begin(), dset.end()}));
    const auto zset = oracle::center(*g);
    const auto expected = oracle::hom_count_via_basis(ab.group, subset_table(*g, {zset.begin(), zset.end()}));
    c.expect_eq(e.automorphisms.size(), expected, name + " |Aut_z| vs |Hom(G/gamma_2, Z)|");
    c.expect_eq(e.rejected, 0u, name + " rejected candidates");
    c.expect_eq(oracle::central_automorphisms(*g).size(), expected, name + " oracle |Aut_z|");
  }
  c.expect(checked >= 10, "at least ten purely non-abelian groups checked");
}

void criterion5(Check& c) {
  int checked = 0;
  for (const auto& [name, g] : nonabelian_builtins()) {
    if (central_series(*g).nilpotency_class != 2) continue;
    ++checked;
    const auto dset = oracle::derived(*g);
    const auto zset = oracle::center(*g);
    const Quotient gz = quotient(*g, Subgroup(*g, {zset.begin(), zset.end()}));
    oracle::ElementSet all;
    for (Element e = 0; e < gz.group.order(); ++e) all.insert(e);
    c.expect_eq(oracle::exponent(*g, dset), oracle::exponent(gz.group, all), name + " exp(gamma_2) = exp(G/Z)");
    const auto inv = oracle::abelian_p_invariants(gz.group);
    const auto top = inv.empty() ? 0 : inv.back();
    c.expect(std::count(inv.begin(), inv.end(), top) >= 2, name + " G/Z has two factors of maximal order");
    c.expect(check_theorem(*g, TheoremId::kMorigi).passes(), name + " morigi verdict");
  }
  c.expect(checked >= 10, "at least ten class-2 groups checked");
}

void criterion6(Check& c) {
  const TheoremId ids[] = {TheoremId::kT3_1, TheoremId::kT3_2, TheoremId::kT3_3, TheoremId::kT3_4,
                           TheoremId::kL4_1, TheoremId::kT4_3, TheoremId::kT4_4};
  int applicable = 0;
  for (const auto& [name, g] : fixtures::all_builtin_groups()) {
    GroupFacts facts(*g);
    for (TheoremId id : ids) {
      const TheoremVerdict v = check_theorem(facts, id);
      applicable += v.applicable;
      c.expect(v.passes(), name + " " + std::string(theorem_name(id)) + ": " + v.detail);
    }
  }
  c.expect(applicable >= 60, "enough applicable verdicts (" + std::to_string(applicable) + ")");

  // Mutation: swap two products in one row of the G43 table.
  const FiniteGroup& g = fixtures::paper32("G43");
  const int n = g.order();
  std::vector<Element> table(g.table().begin(), g.table().end());
  std::swap(table[static_cast<std::size_t>(1 * n + 2)], table[static_cast<std::size_t>(1 * n + 9)]);
  const FiniteGroup bad = FiniteGroup::from_table_unchecked(
      table, g.identity(), {g.generators().begin(), g.generators().end()},
      {g.generator_symbols().begin(), g.generator_symbols().end()});
  c.expect(!check_associativity(bad), "mutated table is not associative");
  GroupFacts facts(bad);
  int failing_with_witness = 0;
  for (TheoremId id : kAllTheorems) {
    try {
      const TheoremVerdict v = check_theorem(facts, id);
      failing_with_witness += !v.passes() && v.witness.has_value();
    } catch (const Error&) {
    }
  }
  c.expect(failing_with_witness >= 1, "mutated G43 yields a failing verdict with a witness");
}

void criterion7(Check& c) {
  // Every invariant tuple over p in {2, 3} with order <= 64.
  std::vector<std::vector<std::int64_t>> twos, threes;
  std::function<void(std::vector<std::int64_t>&, std::int64_t, std::int64_t, std::int64_t,
                     std::vector<std::vector<std::int64_t>>&)>
      partitions = [&](std::vector<std::int64_t>& cur, std::int64_t p, std::int64_t budget, std::int64_t max_part,
                       std::vector<std::vector<std::int64_t>>& out) {
        out.push_back(cur);
        for (std::int64_t f = p; f <= std::min(budget, max_part); f *= p) {
          cur.push_back(f);
          partitions(cur, p, budget / f, f, out);
          cur.pop_back();
        }
      };
  std::vector<std::int64_t> cur;
  partitions(cur, 2, 64, 64, twos);
  partitions(cur, 3, 64, 64, threes);
  std::vector<std::vector<std::int64_t>> grid;
  for (const auto& a : twos) {
    for (const auto& b : threes) {
      std::int64_t order = 1;
      for (auto f : a) order *= f;
      for (auto f : b) order *= f;
      if (order > 64) continue;
      auto t = a;
      t.insert(t.end(), b.begin(), b.end());
      grid.push_back(t);
    }
  }
  std::vector<FiniteGroup> tables;
  for (const auto& t : grid) tables.push_back(abelian_group(t));

  std::size_t listed = 0, pairs = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      ++pairs;
      const auto count = hom_structure(AbelianInvariants(grid[i]), AbelianInvariants(grid[j])).count;
      const auto reverse = hom_structure(AbelianInvariants(grid[j]), AbelianInvariants(grid[i])).count;
      const std::string label = "Hom(" + AbelianInvariants(grid[i]).to_string() + ", " +
                                AbelianInvariants(grid[j]).to_string() + ")";
      c.expect_eq(count, reverse, label + " symmetry");
      c.expect_eq(count, oracle::hom_count_via_basis(tables[i], tables[j]), label + " vs basis oracle");
      if (count <= kMaxListedHoms) {
        ++listed;
        c.expect_eq(enumerate_homs(tables[i], tables[j]).size(), count, label + " vs enumeration");
      }
    }
  }
  std::cout << "      grid: " << grid.size() << " groups, " << pairs << " ordered pairs, " << listed
            << " listed exhaustively, all " << pairs << " checked against the basis oracle\n";
}

void criterion8(Check& c) {
  for (const char* name : {"D8", "Q8"}) {
    const FiniteGroup& g = fixtures::control(name);
    const auto inn = oracle::inner_automorphisms(g);
    c.expect_eq(inn.size(), 4u, std::string(name) + " |Inn|");
    c.expect(maps_of(class_preserving_automorphisms(g)) == inn, std::string(name) + " Aut_c = Inn");
    c.expect(maps_of(central_automorphisms(g)) == inn, std::string(name) + " Aut_z = Inn");
  }
  for (const char* name : {"He3", "Ex27_9"}) {
    const FiniteGroup& g = fixtures::control(name);
    c.expect(oracle::center(g) == oracle::derived(g) && oracle::center(g).size() == 3,
             std::string(name) + " extraspecial");
    const auto inn = oracle::inner_automorphisms(g);
    c.expect_eq(inn.size(), 9u, std::string(name) + " |Inn|");
    c.expect(maps_of(class_preserving_automorphisms(g)) == inn, std::string(name) + " Aut_c = Inn");
    c.expect(maps_of(central_automorphisms(g)) == inn, std::string(name) + " Aut_z = Inn");
  }
  {
    const FiniteGroup& g = fixtures::control("C2xD8");
    const Automorphism mu = witness_central_not_class_preserving(g);
    const MapFlags f = classify_map(g, mu);
    c.expect(f.automorphism && f.central && !f.class_preserving, "C2xD8 witness flags");
    c.expect(oracle::central_automorphisms(g).count(mu.images) == 1, "witness is central (oracle)");
    c.expect(oracle::class_preserving_automorphisms(g).count(mu.images) == 0, "witness not class preserving (oracle)");
  }
  {
    const FiniteGroup& g = fixtures::control("C4oD8");
    c.expect(!center(g).is_subset_of(frattini_subgroup(g)), "C4oD8 has Z outside Phi");
    c.expect(is_purely_nonabelian(g), "C4oD8 purely non-abelian");
    c.expect(!oracle::has_abelian_direct_factor(g), "C4oD8 has no abelian direct factor (oracle)");
  }
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

std::string g_cli_path;

void criterion9(Check& c) {
  if (g_cli_path.empty()) {
    c.expect(false, "classaut executable path not given");
    return;
  }
  const std::string cmd = "\"" + g_cli_path + "\" verify all --builtin paper32";
  int s1 = 0, s2 = 0;
  const std::string first = capture(cmd, s1);
  const std::string second = capture(cmd, s2);
  c.expect_eq(s1, 0, "first run exit status");
  c.expect_eq(s2, 0, "second run exit status");
  c.expect(!first.empty() && first.front() == '{', "first run produced JSON");
  c.expect(first == second, "byte-identical output");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"G44 regression", criterion1},
      {"order-32 representatives: Aut_c = Inn except G44, G45 missing", criterion2},
      {"order-64 suite", criterion3},
      {"central automorphism count on purely non-abelian groups", criterion4},
      {"class-2 exponent and invariant multiplicity", criterion5},
      {"theorem checkers and mutation test", criterion6},
      {"Hom count oracle equivalence", criterion7},
      {"controls", criterion8},
      {"determinism of verify output", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures().empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << '\n';
    for (const auto& f : c.failures()) std::cout << "      " << f << '\n';
  }
  return failed == 0 ? 0 : 1;
}
