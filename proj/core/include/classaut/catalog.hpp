#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "classaut/coset_enumeration.hpp"
#include "classaut/finite_group.hpp"
#include "classaut/presentation.hpp"

namespace classaut {

enum class BuiltinCatalog { kPaper32, kPaper64, kControls };

inline constexpr BuiltinCatalog kAllBuiltinCatalogs[] = {
    BuiltinCatalog::kPaper32, BuiltinCatalog::kPaper64, BuiltinCatalog::kControls};

std::string_view builtin_catalog_name(BuiltinCatalog which);
// Accepts "paper32", "paper64", "controls". Throws NOT_FOUND.
BuiltinCatalog parse_builtin_catalog(std::string_view name);
// The embedded file text, byte for byte.
std::string_view builtin_catalog_text(BuiltinCatalog which);

// A parsed catalog whose entries have all been enumerated. Entries tagged
// missing-source carry no presentation and are kept apart in `missing`.
struct Catalog {
  std::string name;
  std::string provenance;
  std::vector<CatalogEntry> entries;
  std::vector<std::shared_ptr<const FiniteGroup>> groups;  // parallel to entries
  std::vector<CatalogEntry> missing;

  std::size_t size() const { return entries.size(); }
  // Index into entries. Throws NOT_FOUND.
  std::size_t index_of(std::string_view group_name) const;
  const FiniteGroup& group(std::string_view group_name) const;
};

// Parses and enumerates; ORDER_MISMATCH propagates.
Catalog catalog_from_text(std::string_view text, std::string name, std::string provenance,
                          std::size_t max_cosets = kDefaultMaxCosets);

Catalog builtin_catalog(BuiltinCatalog which, std::size_t max_cosets = kDefaultMaxCosets);

// Throws IO_ERROR, SYNTAX_ERROR, ORDER_MISMATCH.
Catalog load_catalog(const std::filesystem::path& path, std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace classaut
