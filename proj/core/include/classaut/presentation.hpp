#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "classaut/word.hpp"

namespace classaut {

class FiniteGroup;
using Element = std::int32_t;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::optional<std::int64_t> order;

  int generator_index(std::string_view symbol) const;
  std::string relator_text(std::size_t i) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Validates generator symbols (ASCII identifiers, unique) and parses each
// relator. Throws SYNTAX_ERROR / UNKNOWN_GENERATOR.
Presentation make_presentation(std::vector<std::string> generators,
                               const std::vector<std::string>& relators,
                               std::optional<std::int64_t> order = std::nullopt);

bool is_valid_generator_symbol(std::string_view symbol);

struct CatalogEntry {
  std::string name;
  Presentation presentation;
  std::vector<std::string> tags;
  std::string source;

  bool has_tag(std::string_view tag) const;
  // Placeholder for a group named in the literature without a usable
  // presentation; carries no generators.
  bool missing_source() const { return has_tag("missing-source"); }

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// Line-oriented catalog format:
//
//   [group]
//   name = G44
//   order = 32
//   generators = x, y, z
//   relators = x^2, z^2, [y,x]y^4, [y,z]y^2, [x,z]
//   tags = phi6, paper32
//   source = free text
//
// '#' starts a comment. order, tags and source are optional; generators and
// relators may be omitted only for entries tagged missing-source.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

std::string format_catalog(std::span<const CatalogEntry> entries);

// Evaluates w in G with generator i of the word mapped to assignment[i].
// Powers use the element order, so negative exponents need no inverse table.
Element evaluate_word(const Word& w, std::span<const Element> assignment, const FiniteGroup& g);

}  // namespace classaut
