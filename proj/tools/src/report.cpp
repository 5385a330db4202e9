#include "classaut_cli/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "classaut/error.hpp"

namespace classaut::cli {

std::string CheckId::name() const { return theorem ? std::string(theorem_name(*theorem)) : "thm4.2"; }

std::vector<CheckId> all_checks() {
  std::vector<CheckId> out;
  for (TheoremId id : kAllTheorems) {
    out.push_back({id});
    if (id == TheoremId::kL4_1) out.push_back({std::nullopt});  // keep numeric order
  }
  return out;
}

std::vector<CheckId> parse_checks(std::string_view text) {
  if (text == "all") return all_checks();
  std::vector<CheckId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(start, end - start);
    if (item == "thm4.2" || item == "t4.2") {
      out.push_back({std::nullopt});
    } else if (auto id = parse_theorem_id(item)) {
      out.push_back({*id});
    } else {
      throw Error(ErrorCode::kNotFound, "unknown check '" + std::string(item) + "'");
    }
    start = end + 1;
  }
  return out;
}

CheckResult check_order32(GroupFacts& facts, const CatalogEntry& entry) {
  CheckResult r;
  r.check = "thm4.2";
  const FiniteGroup& g = facts.group();
  r.applicable = g.order() == 32 && !g.is_abelian();
  if (!r.applicable) return r;
  r.lhs = facts.class_preserving().same_maps(facts.inner());
  r.rhs = !entry.has_tag("autc-exception");
  r.detail = "|Aut_c|=" + std::to_string(facts.class_preserving().size()) +
             " |Inn|=" + std::to_string(facts.inner().size()) +
             (r.rhs ? "" : " (listed exception)");
  if (!r.passes()) {
    for (const auto& m : facts.class_preserving().maps()) {
      if (!facts.inner().contains(m)) {
        r.witness = Witness{"class-preserving automorphism that is not inner", m, {}};
        break;
      }
    }
    if (!r.witness) r.witness = Witness{"Aut_c = Inn on a listed exception", std::nullopt, {}};
  }
  return r;
}

CheckResult run_check(GroupFacts& facts, const CatalogEntry& entry, const CheckId& id) {
  if (!id.theorem) return check_order32(facts, entry);
  const TheoremVerdict v = check_theorem(facts, *id.theorem);
  return CheckResult{id.name(), v.applicable, v.lhs, v.rhs, v.detail, v.witness};
}

namespace {

template <class F>
auto unless_code(ErrorCode code, F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() != code) throw;
    return std::nullopt;
  }
}

Json nullable(const auto& opt) {
  if (!opt) return nullptr;
  return Json(*opt);
}

std::string word_of(const FiniteGroup& g, Element e) {
  return to_string(g.canonical_word(e), g.generator_symbols());
}

}  // namespace

AnalysisReport analyze_group(const FiniteGroup& g, const CatalogEntry& entry, const std::string& catalog,
                             const std::vector<CheckId>& checks, int max_order, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.name = entry.name;
  r.catalog = catalog;
  r.order = g.order();
  r.abelian = g.is_abelian();
  for (const auto& cls : conjugacy_classes(g)) r.class_sizes.push_back(static_cast<std::int64_t>(cls.size()));
  std::sort(r.class_sizes.begin(), r.class_sizes.end());
  r.rank = minimal_generating_rank(g);

  GroupFacts facts(g, max_order);
  if (r.abelian) {
    r.abelian_invariants = abelian_invariants(g).to_string();
    r.center_invariants = r.abelian_invariants;
    r.abelianization_invariants = r.abelian_invariants;
    r.derived_invariants = "1";
    r.central_quotient_invariants = "1";
    r.nilpotency_class = 1;
    r.frattini_order = unless_code(ErrorCode::kNotPrimePower, [&] { return std::int64_t{facts.frattini().order()}; });
    r.inn_order = r.autc_order = 1;
  } else {
    r.center_invariants = facts.center_invariants().to_string();
    r.derived_invariants = unless_code(ErrorCode::kNotAbelian, [&] { return facts.derived_invariants().to_string(); });
    r.central_quotient_invariants =
        unless_code(ErrorCode::kNotAbelian, [&] { return abelian_invariants(facts.central_quotient()).to_string(); });
    r.abelianization_invariants = abelian_invariants(facts.abelianization()).to_string();
    r.nilpotency_class = unless_code(ErrorCode::kNotNilpotent, [&] { return facts.series().nilpotency_class; });
    r.frattini_order = unless_code(ErrorCode::kNotPrimePower, [&] { return std::int64_t{facts.frattini().order()}; });
    r.inn_order = facts.inner().size();
    r.autz_order = facts.central().automorphisms.size();
    r.autzz_order = facts.central_fixing_center().size();
    r.autc_order = facts.class_preserving().size();
    r.purely_nonabelian = unless_code(ErrorCode::kNotPrimePower, [&] { return facts.purely_nonabelian(); });
    r.camina = facts.camina();
    r.camina_class2 = facts.camina_class2();
    r.autc_eq_inn = facts.class_preserving().same_maps(facts.inner());
    r.autc_eq_autz = facts.class_preserving().same_maps(facts.central().automorphisms);
    r.autz_eq_inn = facts.central().automorphisms.same_maps(facts.inner());
  }
  for (const auto& id : checks) r.verdicts.push_back(run_check(facts, entry, id));
  if (timing) {
    r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

Json to_json(const CheckResult& r, const FiniteGroup* g) {
  Json j;
  j["check"] = r.check;
  j["applicable"] = r.applicable;
  if (r.applicable) {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
  }
  j["passes"] = r.passes();
  if (r.applicable) j["detail"] = r.detail;
  if (r.witness) {
    Json w;
    w["description"] = r.witness->description;
    if (r.witness->map && g != nullptr) {
      Json images = Json::object();
      const auto gens = g->generators();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        images[g->generator_symbols()[i]] = word_of(*g, (*r.witness->map)(gens[i]));
      }
      w["generator_images"] = std::move(images);
    }
    if (!r.witness->elements.empty() && g != nullptr) {
      Json elems = Json::array();
      for (Element e : r.witness->elements) elems.push_back(word_of(*g, e));
      w["elements"] = std::move(elems);
    }
    j["witness"] = std::move(w);
  }
  return j;
}

Json to_json(const AnalysisReport& r, const FiniteGroup* g) {
  Json j;
  j["name"] = r.name;
  j["catalog"] = r.catalog;
  j["order"] = r.order;
  j["abelian"] = r.abelian;
  if (r.abelian) {
    j["abelian_invariants"] = r.abelian_invariants;
    j["rank"] = r.rank;
    j["inn_order"] = r.inn_order;
    j["autc_order"] = r.autc_order;
  } else {
    j["center_invariants"] = r.center_invariants;
    j["derived_invariants"] = nullable(r.derived_invariants);
    j["central_quotient_invariants"] = nullable(r.central_quotient_invariants);
    j["abelianization_invariants"] = r.abelianization_invariants;
    j["nilpotency_class"] = nullable(r.nilpotency_class);
    j["frattini_order"] = nullable(r.frattini_order);
    j["rank"] = r.rank;
    j["class_sizes"] = r.class_sizes;
    j["inn_order"] = r.inn_order;
    j["autz_order"] = r.autz_order;
    j["autzz_order"] = r.autzz_order;
    j["autc_order"] = r.autc_order;
    j["flags"] = {{"purely_nonabelian", nullable(r.purely_nonabelian)},
                  {"camina", r.camina},
                  {"camina_class2", r.camina_class2},
                  {"autc_eq_inn", r.autc_eq_inn},
                  {"autc_eq_autz", r.autc_eq_autz},
                  {"autz_eq_inn", r.autz_eq_inn}};
  }
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v, g));
  j["verdicts"] = std::move(verdicts);
  if (r.duration_ms) j["duration_ms"] = *r.duration_ms;
  return j;
}

namespace {

std::string opt_text(const std::optional<std::string>& s) { return s ? *s : "-"; }
template <class T>
std::string opt_num(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "-";
}

std::string joined_sizes(const std::vector<std::int64_t>& sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(sizes[i]);
  }
  return out;
}

std::string failed_checks(const AnalysisReport& r) {
  std::string out;
  for (const auto& v : r.verdicts) {
    if (v.passes()) continue;
    if (!out.empty()) out += ' ';
    out += v.check;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_csv(const std::vector<AnalysisReport>& reports) {
  std::ostringstream out;
  out << "name,catalog,order,abelian,center_invariants,derived_invariants,central_quotient_invariants,"
         "abelianization_invariants,nilpotency_class,frattini_order,rank,class_sizes,inn_order,autz_order,"
         "autzz_order,autc_order,purely_nonabelian,camina,camina_class2,autc_eq_inn,autc_eq_autz,autz_eq_inn,"
         "failed_checks\n";
  for (const auto& r : reports) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    out << csv_field(r.name) << ',' << csv_field(r.catalog) << ',' << r.order << ',' << b(r.abelian) << ','
        << r.center_invariants << ',' << opt_text(r.derived_invariants) << ','
        << opt_text(r.central_quotient_invariants) << ',' << r.abelianization_invariants << ','
        << opt_num(r.nilpotency_class) << ',' << opt_num(r.frattini_order) << ',' << r.rank << ','
        << joined_sizes(r.class_sizes) << ',' << r.inn_order << ',' << r.autz_order << ',' << r.autzz_order
        << ',' << r.autc_order << ',' << (r.purely_nonabelian ? b(*r.purely_nonabelian) : "-") << ','
        << b(r.camina) << ',' << b(r.camina_class2) << ',' << b(r.autc_eq_inn) << ',' << b(r.autc_eq_autz)
        << ',' << b(r.autz_eq_inn) << ',' << csv_field(failed_checks(r)) << '\n';
  }
  return out.str();
}

std::string render_markdown(const std::vector<AnalysisReport>& reports) {
  std::ostringstream out;
  out << "| group | order | Z | gamma_2 | class | Inn | Aut_z | Aut_c | Aut_c=Inn | Aut_c=Aut_z | failed |\n"
      << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    const std::string failed = failed_checks(r);
    out << "| " << r.name << " | " << r.order << " | " << r.center_invariants << " | "
        << opt_text(r.derived_invariants) << " | " << opt_num(r.nilpotency_class) << " | " << r.inn_order
        << " | " << (r.abelian ? "-" : std::to_string(r.autz_order)) << " | " << r.autc_order << " | "
        << (r.autc_eq_inn || r.abelian ? "yes" : "no") << " | " << (r.autc_eq_autz ? "yes" : "no") << " | "
        << (failed.empty() ? "none" : failed) << " |\n";
  }
  return out.str();
}

}  // namespace classaut::cli
