#include "classaut_cli/commands.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "classaut/error.hpp"
#include "classaut/structure.hpp"
#include "classaut_cli/report.hpp"

namespace classaut::cli {

Format parse_format(std::string_view text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  if (text == "md" || text == "markdown") return Format::kMarkdown;
  throw Error(ErrorCode::kNotFound, "unknown format '" + std::string(text) + "'");
}

namespace {

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(start, end - start));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(std::move(item));
    start = end + 1;
  }
  return out;
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results land by index,
// so output order never depends on scheduling. The first exception (by
// index) is rethrown after all workers finish.
template <class T>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct Target {
  const Catalog* catalog;
  std::size_t index;

  const CatalogEntry& entry() const { return catalog->entries[index]; }
  const FiniteGroup& group() const { return *catalog->groups[index]; }
};

std::vector<Target> select_targets(const std::vector<Catalog>& catalogs, const std::optional<std::string>& group) {
  std::vector<Target> out;
  for (const auto& c : catalogs) {
    if (group) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c.entries[i].name == *group) out.push_back({&c, i});
      }
    } else {
      for (std::size_t i = 0; i < c.size(); ++i) out.push_back({&c, i});
    }
  }
  if (group && out.empty()) {
    for (const auto& c : catalogs) {
      for (const auto& m : c.missing) {
        if (m.name == *group) {
          throw Error(ErrorCode::kNotFound, "group '" + *group + "' has no presentation (missing-source)");
        }
      }
    }
    throw Error(ErrorCode::kNotFound, "no group named '" + *group + "'");
  }
  return out;
}

Json missing_json(const std::vector<Catalog>& catalogs, const std::optional<std::string>& group) {
  Json arr = Json::array();
  for (const auto& c : catalogs) {
    for (const auto& m : c.missing) {
      if (group && m.name != *group) continue;
      arr.push_back({{"name", m.name}, {"catalog", c.name}, {"status", "missing-source"}, {"source", m.source}});
    }
  }
  return arr;
}

Json catalog_names(const std::vector<Catalog>& catalogs) {
  Json arr = Json::array();
  for (const auto& c : catalogs) arr.push_back(c.name);
  return arr;
}

std::size_t count_failures(const std::vector<CheckResult>& results) {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passes(); }));
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

AbelianInvariants parse_invariants(std::string_view text) {
  std::vector<std::int64_t> factors;
  for (const auto& item : split_commas(text)) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(ErrorCode::kBadInvariants, "not an integer: '" + item + "'");
    factors.push_back(v);
  }
  return AbelianInvariants(std::move(factors));
}

}  // namespace

std::vector<Catalog> resolve_catalogs(const Options& opts) {
  std::vector<std::string> names;
  for (const auto& b : opts.builtins) {
    for (auto& n : split_commas(b)) names.push_back(std::move(n));
  }
  if (names.empty() && opts.catalog_paths.empty()) names.push_back("all");
  std::vector<Catalog> out;
  for (const auto& n : names) {
    if (n == "all") {
      for (BuiltinCatalog c : kAllBuiltinCatalogs) out.push_back(builtin_catalog(c, opts.max_cosets));
    } else {
      out.push_back(builtin_catalog(parse_builtin_catalog(n), opts.max_cosets));
    }
  }
  for (const auto& p : opts.catalog_paths) out.push_back(load_catalog(p, opts.max_cosets));
  return out;
}

int run_analyze(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!opts.group) throw Error(ErrorCode::kNotFound, "analyze needs --group");
    const auto catalogs = resolve_catalogs(opts);
    const auto checks = parse_checks(opts.check);
    const Target t = select_targets(catalogs, opts.group).front();
    const AnalysisReport r =
        analyze_group(t.group(), t.entry(), t.catalog->name, checks, opts.max_order, opts.timing);
    switch (opts.format) {
      case Format::kJson: out << to_json(r, &t.group()).dump(2) << '\n'; break;
      case Format::kCsv: out << render_csv({r}); break;
      case Format::kMarkdown: out << render_markdown({r}); break;
    }
    return count_failures(r.verdicts) == 0 ? kExitPass : kExitViolation;
  });
}

int run_batch(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto catalogs = resolve_catalogs(opts);
    const auto checks = parse_checks(opts.check);
    const auto targets = select_targets(catalogs, opts.group);
    const auto reports = parallel_map<AnalysisReport>(targets.size(), opts.jobs, [&](std::size_t i) {
      const Target& t = targets[i];
      return analyze_group(t.group(), t.entry(), t.catalog->name, checks, opts.max_order, opts.timing);
    });
    std::size_t violations = 0;
    for (const auto& r : reports) violations += count_failures(r.verdicts);
    switch (opts.format) {
      case Format::kJson: {
        Json j;
        j["catalogs"] = catalog_names(catalogs);
        Json arr = Json::array();
        for (std::size_t i = 0; i < reports.size(); ++i) arr.push_back(to_json(reports[i], &targets[i].group()));
        j["reports"] = std::move(arr);
        j["missing"] = missing_json(catalogs, opts.group);
        j["violations"] = violations;
        out << j.dump(2) << '\n';
        break;
      }
      case Format::kCsv: out << render_csv(reports); break;
      case Format::kMarkdown: out << render_markdown(reports); break;
    }
    return violations == 0 ? kExitPass : kExitViolation;
  });
}

int run_verify(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto catalogs = resolve_catalogs(opts);
    const auto checks = parse_checks(opts.check);
    const auto targets = select_targets(catalogs, opts.group);
    const auto results = parallel_map<std::vector<CheckResult>>(targets.size(), opts.jobs, [&](std::size_t i) {
      GroupFacts facts(targets[i].group(), opts.max_order);
      std::vector<CheckResult> rs;
      for (const auto& id : checks) rs.push_back(run_check(facts, targets[i].entry(), id));
      return rs;
    });
    std::size_t violations = 0;
    for (const auto& rs : results) violations += count_failures(rs);

    if (opts.format == Format::kJson) {
      Json j;
      j["catalogs"] = catalog_names(catalogs);
      Json names = Json::array();
      for (const auto& c : checks) names.push_back(c.name());
      j["checks"] = std::move(names);
      Json groups = Json::array();
      for (std::size_t i = 0; i < targets.size(); ++i) {
        Json verdicts = Json::array();
        for (const auto& r : results[i]) verdicts.push_back(to_json(r, &targets[i].group()));
        groups.push_back({{"name", targets[i].entry().name},
                          {"catalog", targets[i].catalog->name},
                          {"order", targets[i].group().order()},
                          {"verdicts", std::move(verdicts)}});
      }
      j["groups"] = std::move(groups);
      j["missing"] = missing_json(catalogs, opts.group);
      j["violations"] = violations;
      out << j.dump(2) << '\n';
    } else {
      const bool md = opts.format == Format::kMarkdown;
      if (md) {
        out << "| catalog | group | check | applicable | lhs | rhs | passes | detail |\n"
            << "|---|---|---|---|---|---|---|---|\n";
      } else {
        out << "catalog,group,check,applicable,lhs,rhs,passes,detail\n";
      }
      auto b = [](bool v) { return v ? "true" : "false"; };
      for (std::size_t i = 0; i < targets.size(); ++i) {
        for (const auto& r : results[i]) {
          const std::string lhs = r.applicable ? b(r.lhs) : "-";
          const std::string rhs = r.applicable ? b(r.rhs) : "-";
          if (md) {
            out << "| " << targets[i].catalog->name << " | " << targets[i].entry().name << " | " << r.check
                << " | " << b(r.applicable) << " | " << lhs << " | " << rhs << " | " << b(r.passes()) << " | "
                << md_cell(r.detail) << " |\n";
          } else {
            out << targets[i].catalog->name << ',' << targets[i].entry().name << ',' << r.check << ','
                << b(r.applicable) << ',' << lhs << ',' << rhs << ',' << b(r.passes()) << ",\"" << r.detail
                << "\"\n";
          }
        }
      }
      for (const auto& c : catalogs) {
        for (const auto& m : c.missing) {
          if (opts.group && m.name != *opts.group) continue;
          if (md) {
            out << "| " << c.name << " | " << m.name << " | - | missing-source | - | - | - | " << m.source << " |\n";
          } else {
            out << c.name << ',' << m.name << ",-,missing-source,-,-,-,\"" << m.source << "\"\n";
          }
        }
      }
    }
    return violations == 0 ? kExitPass : kExitViolation;
  });
}

int run_homcount(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AbelianInvariants a = parse_invariants(opts.domain);
    const AbelianInvariants b = parse_invariants(opts.codomain);
    const HomStructure h = hom_structure(a, b);
    switch (opts.format) {
      case Format::kJson: {
        Json j;
        j["domain"] = a.to_string();
        j["codomain"] = b.to_string();
        j["count"] = h.count;
        j["invariants"] = h.invariants.to_string();
        out << j.dump(2) << '\n';
        break;
      }
      case Format::kCsv:
        out << "domain,codomain,count,invariants\n"
            << a.to_string() << ',' << b.to_string() << ',' << h.count << ',' << h.invariants.to_string() << '\n';
        break;
      case Format::kMarkdown:
        out << "| domain | codomain | count | invariants |\n|---|---|---|---|\n"
            << "| " << a.to_string() << " | " << b.to_string() << " | " << h.count << " | "
            << h.invariants.to_string() << " |\n";
        break;
    }
    return kExitPass;
  });
}

}  // namespace classaut::cli
