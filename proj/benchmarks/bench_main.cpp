#include <benchmark/benchmark.h>

#include <string>

#include "classaut/automorphisms.hpp"
#include "classaut/catalog.hpp"
#include "classaut/coset_enumeration.hpp"
#include "classaut/error.hpp"
#include "classaut/presentation.hpp"
#include "classaut/structure.hpp"

namespace {

using namespace classaut;

const CatalogEntry& entry(BuiltinCatalog which, const std::string& name) {
  static const auto p32 = parse_catalog(builtin_catalog_text(BuiltinCatalog::kPaper32));
  static const auto p64 = parse_catalog(builtin_catalog_text(BuiltinCatalog::kPaper64));
  const auto& list = which == BuiltinCatalog::kPaper32 ? p32 : p64;
  for (const auto& e : list) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::kNotFound, name);
}

const Catalog& loaded(BuiltinCatalog which) {
  static const Catalog p32 = builtin_catalog(BuiltinCatalog::kPaper32);
  static const Catalog p64 = builtin_catalog(BuiltinCatalog::kPaper64);
  return which == BuiltinCatalog::kPaper32 ? p32 : p64;
}

void BM_ToddCoxeter(benchmark::State& state, BuiltinCatalog which, std::string name) {
  const Presentation& p = entry(which, name).presentation;
  for (auto _ : state) {
    FiniteGroup g = todd_coxeter(p);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK_CAPTURE(BM_ToddCoxeter, G44, BuiltinCatalog::kPaper32, std::string("G44"));
BENCHMARK_CAPTURE(BM_ToddCoxeter, G183_13, BuiltinCatalog::kPaper64, std::string("G183_13"));

void BM_ClassPreserving(benchmark::State& state, BuiltinCatalog which, std::string name) {
  const FiniteGroup& g = loaded(which).group(name);
  for (auto _ : state) {
    auto s = class_preserving_automorphisms(g);
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK_CAPTURE(BM_ClassPreserving, G44, BuiltinCatalog::kPaper32, std::string("G44"));
BENCHMARK_CAPTURE(BM_ClassPreserving, G169_11, BuiltinCatalog::kPaper64, std::string("G169_11"));
BENCHMARK_CAPTURE(BM_ClassPreserving, G183_13, BuiltinCatalog::kPaper64, std::string("G183_13"));

void BM_CentralEnumeration(benchmark::State& state, BuiltinCatalog which, std::string name) {
  const FiniteGroup& g = loaded(which).group(name);
  for (auto _ : state) {
    auto e = enumerate_central_automorphisms(g);
    benchmark::DoNotOptimize(e.homomorphisms);
  }
}
BENCHMARK_CAPTURE(BM_CentralEnumeration, G11, BuiltinCatalog::kPaper32, std::string("G11"));
BENCHMARK_CAPTURE(BM_CentralEnumeration, G144_9, BuiltinCatalog::kPaper64, std::string("G144_9"));

void BM_HomStructure(benchmark::State& state) {
  const AbelianInvariants a({4, 4, 2, 2});
  const AbelianInvariants b({8, 4, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(hom_structure(a, b).count);
  }
}
BENCHMARK(BM_HomStructure);

}  // namespace
BENCHMARK_MAIN();
