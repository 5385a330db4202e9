#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "classaut/automorphisms.hpp"
#include "classaut/catalog.hpp"

namespace classaut::cli {

enum class Format { kJson, kCsv, kMarkdown };
// Throws NOT_FOUND.
Format parse_format(std::string_view text);

struct Options {
  std::vector<std::string> builtins;       // names or "all"; comma lists allowed
  std::vector<std::string> catalog_paths;
  std::optional<std::string> group;
  std::string check = "all";
  Format format = Format::kJson;
  unsigned jobs = 1;
  int max_order = kDefaultMaxOrder;
  std::size_t max_cosets = kDefaultMaxCosets;
  bool timing = false;
  std::string domain;
  std::string codomain;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

// Builtins first (in the order given), then files. With neither given,
// every builtin catalog.
std::vector<Catalog> resolve_catalogs(const Options& opts);

// Each command writes its report to `out`, diagnostics to `err`, and
// returns the process exit status.
int run_analyze(const Options& opts, std::ostream& out, std::ostream& err);
int run_verify(const Options& opts, std::ostream& out, std::ostream& err);
int run_batch(const Options& opts, std::ostream& out, std::ostream& err);
int run_homcount(const Options& opts, std::ostream& out, std::ostream& err);

}  // namespace classaut::cli
