#include "classaut/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <utility>

#include "classaut/error.hpp"
#include "classaut/finite_group.hpp"

namespace classaut {

int Presentation::generator_index(std::string_view symbol) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == symbol) return static_cast<int>(i);
  }
  return -1;
}

std::string Presentation::relator_text(std::size_t i) const {
  return to_string(relators.at(i), generators);
}

bool is_valid_generator_symbol(std::string_view symbol) {
  if (symbol.empty()) return false;
  auto c0 = static_cast<unsigned char>(symbol.front());
  if (c0 >= 0x80 || std::isalpha(c0) == 0) return false;
  return std::all_of(symbol.begin(), symbol.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return c < 0x80 && (std::isalnum(c) != 0 || c == '_');
  });
}

Presentation make_presentation(std::vector<std::string> generators,
                               const std::vector<std::string>& relators,
                               std::optional<std::int64_t> order) {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!is_valid_generator_symbol(g)) {
      throw Error(ErrorCode::kSyntaxError, "invalid generator symbol '" + g + "'");
    }
    if (!seen.insert(g).second) {
      throw Error(ErrorCode::kSyntaxError, "duplicate generator '" + g + "'");
    }
  }
  if (order && *order < 1) {
    throw Error(ErrorCode::kSyntaxError, "declared order must be positive");
  }
  Presentation p;
  p.generators = std::move(generators);
  p.order = order;
  for (const auto& r : relators) p.relators.push_back(parse_word(r, p.generators));
  return p;
}

bool CatalogEntry::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on commas outside brackets and parentheses.
std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      auto item = trim(s.substr(start, i - start));
      if (!item.empty()) out.emplace_back(item);
      start = i + 1;
    } else if (s[i] == '[' || s[i] == '(') {
      ++depth;
    } else if (s[i] == ']' || s[i] == ')') {
      --depth;
    }
  }
  return out;
}

struct PendingEntry {
  std::size_t line = 0;
  std::string name;
  std::optional<std::int64_t> order;
  std::optional<std::vector<std::string>> generators;
  std::vector<std::pair<std::string, std::size_t>> relators;  // text, line
  std::vector<std::string> tags;
  std::string source;
};

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kSyntaxError, "line " + std::to_string(line) + ": " + what).at_line(line);
}

CatalogEntry finish(PendingEntry&& p) {
  if (p.name.empty()) syntax_error(p.line, "group block without a name");
  CatalogEntry e;
  e.name = std::move(p.name);
  e.tags = std::move(p.tags);
  e.source = std::move(p.source);
  if (!p.generators) {
    if (!e.missing_source()) syntax_error(p.line, "group '" + e.name + "' has no generators");
    e.presentation.order = p.order;
    return e;
  }
  try {
    e.presentation = make_presentation(std::move(*p.generators), {}, p.order);
  } catch (const Error& err) {
    syntax_error(p.line, err.what());
  }
  for (auto& [text, line] : p.relators) {
    try {
      e.presentation.relators.push_back(parse_word(text, e.presentation.generators));
    } catch (Error& err) {
      throw Error(err.code(), "line " + std::to_string(line) + ": relator '" + text +
                                  "': " + err.what())
          .at_line(line)
          .at_offset(err.offset().value_or(0));
    }
  }
  return e;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  std::optional<PendingEntry> current;

  auto flush = [&] {
    if (!current) return;
    std::size_t line = current->line;
    CatalogEntry e = finish(std::move(*current));
    current.reset();
    if (!names.insert(e.name).second) {
      throw Error(ErrorCode::kDuplicateName,
                  "line " + std::to_string(line) + ": duplicate group name '" + e.name + "'")
          .at_line(line);
    }
    out.push_back(std::move(e));
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line != "[group]") syntax_error(line_no, "unknown section '" + std::string(line) + "'");
      flush();
      current.emplace();
      current->line = line_no;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) syntax_error(line_no, "expected key = value");
    if (!current) syntax_error(line_no, "key outside of a [group] block");
    std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (key == "name") {
      if (!is_valid_generator_symbol(value)) syntax_error(line_no, "invalid group name");
      current->name = std::string(value);
    } else if (key == "order") {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || ptr != value.data() + value.size() || v < 1) {
        syntax_error(line_no, "order must be a positive integer");
      }
      current->order = v;
    } else if (key == "generators") {
      current->generators = split_top_level(value);
    } else if (key == "relators") {
      for (auto& r : split_top_level(value)) current->relators.emplace_back(std::move(r), line_no);
    } else if (key == "tags") {
      current->tags = split_top_level(value);
    } else if (key == "source") {
      current->source = std::string(value);
    } else {
      syntax_error(line_no, "unknown key '" + key + "'");
    }
    if (eol == text.size()) break;
  }
  flush();
  return out;
}

std::string format_catalog(std::span<const CatalogEntry> entries) {
  auto join = [](const std::vector<std::string>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) s += ", ";
      s += items[i];
    }
    return s;
  };
  std::string out;
  for (const auto& e : entries) {
    if (!out.empty()) out += "\n";
    out += "[group]\nname = " + e.name + "\n";
    const Presentation& p = e.presentation;
    if (p.order) out += "order = " + std::to_string(*p.order) + "\n";
    if (!p.generators.empty()) {
      out += "generators = " + join(p.generators) + "\n";
      std::vector<std::string> rels;
      for (std::size_t i = 0; i < p.relators.size(); ++i) rels.push_back(p.relator_text(i));
      out += "relators = " + join(rels) + "\n";
    }
    if (!e.tags.empty()) out += "tags = " + join(e.tags) + "\n";
    if (!e.source.empty()) out += "source = " + e.source + "\n";
  }
  return out;
}

namespace {

Element evaluate_factor(const Factor& f, std::span<const Element> assignment,
                        const FiniteGroup& g) {
  Element base = g.identity();
  switch (f.kind) {
    case Factor::Kind::kGenerator:
      base = assignment[static_cast<std::size_t>(f.generator)];
      break;
    case Factor::Kind::kGroup:
      base = evaluate_word(f.args[0], assignment, g);
      break;
    case Factor::Kind::kCommutator:
      base = commutator(g, evaluate_word(f.args[0], assignment, g),
                        evaluate_word(f.args[1], assignment, g));
      break;
  }
  return power(g, base, f.exponent);
}

}  // namespace

Element evaluate_word(const Word& w, std::span<const Element> assignment, const FiniteGroup& g) {
  Element acc = g.identity();
  for (const Factor& f : w.factors) acc = g.mul(acc, evaluate_factor(f, assignment, g));
  return acc;
}

}  // namespace classaut
