#pragma once

#include <cstddef>

#include "classaut/finite_group.hpp"
#include "classaut/presentation.hpp"

namespace classaut {

inline constexpr std::size_t kDefaultMaxCosets = 200000;

struct EnumerationStats {
  std::size_t cosets_defined = 0;
  std::size_t max_live = 0;
  std::size_t coincidences = 0;
  std::size_t lookaheads = 0;
};

// Enumerates the cosets of the trivial subgroup (HLT strategy with
// lookahead and a deduction queue) and returns the regular representation.
// Element 0 is the identity; the remaining elements are numbered in the
// order their cosets were first defined. Throws ENUMERATION_LIMIT when more
// than max_cosets live cosets are needed, ORDER_MISMATCH when the
// presentation declares a different order.
FiniteGroup todd_coxeter(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets,
                         EnumerationStats* stats = nullptr);

}  // namespace classaut
