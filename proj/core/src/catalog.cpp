#include "classaut/catalog.hpp"

#include <fstream>
#include <sstream>

#include "classaut/error.hpp"

namespace classaut {

namespace detail {
extern const std::string_view kCatalog_paper32;
extern const std::string_view kCatalog_paper64;
extern const std::string_view kCatalog_controls;
}  // namespace detail

std::string_view builtin_catalog_name(BuiltinCatalog which) {
  switch (which) {
    case BuiltinCatalog::kPaper32: return "paper32";
    case BuiltinCatalog::kPaper64: return "paper64";
    case BuiltinCatalog::kControls: return "controls";
  }
  return "unknown";
}

BuiltinCatalog parse_builtin_catalog(std::string_view name) {
  for (BuiltinCatalog c : kAllBuiltinCatalogs) {
    if (builtin_catalog_name(c) == name) return c;
  }
  throw Error(ErrorCode::kNotFound, "no builtin catalog named '" + std::string(name) + "'");
}

std::string_view builtin_catalog_text(BuiltinCatalog which) {
  switch (which) {
    case BuiltinCatalog::kPaper32: return detail::kCatalog_paper32;
    case BuiltinCatalog::kPaper64: return detail::kCatalog_paper64;
    case BuiltinCatalog::kControls: return detail::kCatalog_controls;
  }
  return {};
}

std::size_t Catalog::index_of(std::string_view group_name) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].name == group_name) return i;
  }
  for (const auto& m : missing) {
    if (m.name == group_name) {
      throw Error(ErrorCode::kNotFound, "group '" + m.name + "' has no presentation (missing-source)");
    }
  }
  throw Error(ErrorCode::kNotFound, "no group '" + std::string(group_name) + "' in catalog " + name);
}

const FiniteGroup& Catalog::group(std::string_view group_name) const { return *groups[index_of(group_name)]; }

Catalog catalog_from_text(std::string_view text, std::string name, std::string provenance,
                          std::size_t max_cosets) {
  Catalog cat;
  cat.name = std::move(name);
  cat.provenance = std::move(provenance);
  for (auto& entry : parse_catalog(text)) {
    if (entry.missing_source()) {
      cat.missing.push_back(std::move(entry));
      continue;
    }
    try {
      cat.groups.push_back(std::make_shared<const FiniteGroup>(todd_coxeter(entry.presentation, max_cosets)));
    } catch (const Error& e) {
      throw Error(e.code(), entry.name + ": " + e.message());
    }
    cat.entries.push_back(std::move(entry));
  }
  return cat;
}

Catalog builtin_catalog(BuiltinCatalog which, std::size_t max_cosets) {
  const auto name = builtin_catalog_name(which);
  return catalog_from_text(builtin_catalog_text(which), std::string(name),
                           "builtin:" + std::string(name), max_cosets);
}

Catalog load_catalog(const std::filesystem::path& path, std::size_t max_cosets) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failed for " + path.string());
  return catalog_from_text(buf.str(), path.stem().string(), "file:" + path.string(), max_cosets);
}

}  // namespace classaut
