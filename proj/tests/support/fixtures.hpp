#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "classaut/catalog.hpp"
#include "classaut/coset_enumeration.hpp"
#include "classaut/presentation.hpp"

namespace fixtures {

// Each builtin catalog is enumerated once per process.
inline const classaut::Catalog& builtin(classaut::BuiltinCatalog which) {
  static const classaut::Catalog paper32 = classaut::builtin_catalog(classaut::BuiltinCatalog::kPaper32);
  static const classaut::Catalog paper64 = classaut::builtin_catalog(classaut::BuiltinCatalog::kPaper64);
  static const classaut::Catalog controls = classaut::builtin_catalog(classaut::BuiltinCatalog::kControls);
  switch (which) {
    case classaut::BuiltinCatalog::kPaper32: return paper32;
    case classaut::BuiltinCatalog::kPaper64: return paper64;
    case classaut::BuiltinCatalog::kControls: break;
  }
  return controls;
}

inline const classaut::FiniteGroup& paper32(std::string_view name) {
  return builtin(classaut::BuiltinCatalog::kPaper32).group(name);
}
inline const classaut::FiniteGroup& paper64(std::string_view name) {
  return builtin(classaut::BuiltinCatalog::kPaper64).group(name);
}
inline const classaut::FiniteGroup& control(std::string_view name) {
  return builtin(classaut::BuiltinCatalog::kControls).group(name);
}

struct NamedGroup {
  std::string name;
  const classaut::FiniteGroup* group;
};

inline std::vector<NamedGroup> all_builtin_groups() {
  std::vector<NamedGroup> out;
  for (auto which : classaut::kAllBuiltinCatalogs) {
    const auto& cat = builtin(which);
    for (std::size_t i = 0; i < cat.size(); ++i) out.push_back({cat.entries[i].name, cat.groups[i].get()});
  }
  return out;
}

inline classaut::FiniteGroup from_relators(std::vector<std::string> gens, const std::vector<std::string>& rels) {
  return classaut::todd_coxeter(classaut::make_presentation(std::move(gens), rels));
}

}  // namespace fixtures
