#include "classaut/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "classaut/error.hpp"

namespace classaut {

Word Word::generator(int index, std::int64_t exponent) {
  Word w;
  if (exponent != 0) {
    Factor f;
    f.kind = Factor::Kind::kGenerator;
    f.generator = index;
    f.exponent = exponent;
    w.factors.push_back(std::move(f));
  }
  return w;
}

Word Word::commutator(Word left, Word right) {
  Factor f;
  f.kind = Factor::Kind::kCommutator;
  f.args.push_back(std::move(left));
  f.args.push_back(std::move(right));
  Word w;
  w.factors.push_back(std::move(f));
  return w;
}

Word Word::product(Word left, const Word& right) {
  left.factors.insert(left.factors.end(), right.factors.begin(), right.factors.end());
  return left;
}

bool operator==(const Word& a, const Word& b) { return a.factors == b.factors; }

bool operator==(const Factor& a, const Factor& b) {
  return a.kind == b.kind && a.generator == b.generator && a.exponent == b.exponent &&
         a.args == b.args;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class WordParser {
 public:
  WordParser(std::string_view text, std::span<const std::string> generators)
      : text_(text), generators_(generators) {}

  Word parse_all() {
    Word w = parse_word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kSyntaxError, what + " at offset " + std::to_string(pos_))
        .at_offset(pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return is_ident_start(c) || c == '(' || c == '[' || c == '1';
  }

  Word parse_word() {
    Word w;
    bool any = false;
    while (true) {
      skip_space();
      if (any && pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        if (!at_factor_start()) fail("expected factor after '*'");
      }
      if (!at_factor_start()) break;
      parse_factor(w);
      any = true;
    }
    if (!any) fail("expected a word");
    return w;
  }

  std::int64_t parse_exponent() {
    skip_space();
    bool braced = false;
    if (pos_ < text_.size() && text_[pos_] == '{') {
      braced = true;
      ++pos_;
      skip_space();
    }
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer exponent");
    }
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (std::numeric_limits<std::int32_t>::max() - 9) / 10) fail("exponent too large");
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (braced) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '}') fail("expected '}'");
      ++pos_;
    }
    return negative ? -value : value;
  }

  // Splits an identifier run into declared generators, longest prefix first.
  bool split_run(std::string_view run, std::vector<int>& out) const {
    if (run.empty()) return true;
    for (std::size_t len = run.size(); len > 0; --len) {
      int g = index_of(run.substr(0, len));
      if (g < 0) continue;
      out.push_back(g);
      if (split_run(run.substr(len), out)) return true;
      out.pop_back();
    }
    return false;
  }

  int index_of(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i] == name) return static_cast<int>(i);
    }
    return -1;
  }

  void parse_factor(Word& out) {
    skip_space();
    const std::size_t start = pos_;
    char c = text_[pos_];
    std::vector<Factor> atoms;
    if (is_ident_start(c)) {
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string_view run = text_.substr(start, pos_ - start);
      std::vector<int> gens;
      if (!split_run(run, gens)) {
        throw Error(ErrorCode::kUnknownGenerator,
                    "unknown generator '" + std::string(run) + "' at offset " +
                        std::to_string(start))
            .at_offset(start);
      }
      for (int g : gens) {
        Factor f;
        f.kind = Factor::Kind::kGenerator;
        f.generator = g;
        atoms.push_back(std::move(f));
      }
    } else if (c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("unexpected integer");
      }
      Factor f;
      f.kind = Factor::Kind::kGroup;
      f.args.emplace_back();
      atoms.push_back(std::move(f));
    } else if (c == '(') {
      ++pos_;
      Word inner = parse_word();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      Factor f;
      f.kind = Factor::Kind::kGroup;
      f.args.push_back(std::move(inner));
      atoms.push_back(std::move(f));
    } else if (c == '[') {
      ++pos_;
      std::vector<Word> parts;
      parts.push_back(parse_word());
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        parts.push_back(parse_word());
        skip_space();
      }
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']' or ','");
      if (parts.size() < 2) fail("commutator needs at least two entries");
      ++pos_;
      Word acc = std::move(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        acc = Word::commutator(std::move(acc), parts[i]);
      }
      atoms.push_back(std::move(acc.factors.front()));
    } else {
      fail("unexpected character '" + std::string(1, c) + "'");
    }

    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      atoms.back().exponent = parse_exponent();
    }
    for (auto& f : atoms) {
      if (f.exponent == 0) continue;
      if (f.kind == Factor::Kind::kGroup && f.args.front().empty()) continue;
      out.factors.push_back(std::move(f));
    }
  }

  std::string_view text_;
  std::span<const std::string> generators_;
  std::size_t pos_ = 0;
};

void print_word(const Word& w, std::span<const std::string> gens, std::string& out);

void print_exponent(std::int64_t e, std::string& out) {
  if (e != 1) out += "^" + std::to_string(e);
}

void print_commutator_body(const Factor& f, std::span<const std::string> gens, std::string& out) {
  const Word& left = f.args[0];
  // Flatten left-normed nests back to [a,b,c].
  if (left.factors.size() == 1 && left.factors[0].kind == Factor::Kind::kCommutator &&
      left.factors[0].exponent == 1) {
    print_commutator_body(left.factors[0], gens, out);
  } else {
    print_word(left, gens, out);
  }
  out += ",";
  print_word(f.args[1], gens, out);
}

void print_word(const Word& w, std::span<const std::string> gens, std::string& out) {
  if (w.empty()) {
    out += "1";
    return;
  }
  bool prev_bare_ident = false;
  for (const Factor& f : w.factors) {
    switch (f.kind) {
      case Factor::Kind::kGenerator:
        if (prev_bare_ident) out += " ";
        out += gens[static_cast<std::size_t>(f.generator)];
        break;
      case Factor::Kind::kGroup:
        out += "(";
        print_word(f.args[0], gens, out);
        out += ")";
        break;
      case Factor::Kind::kCommutator:
        out += "[";
        print_commutator_body(f, gens, out);
        out += "]";
        break;
    }
    print_exponent(f.exponent, out);
    prev_bare_ident = f.kind == Factor::Kind::kGenerator && f.exponent == 1;
  }
}

void append_inverse(std::vector<Letter>& out, const std::vector<Letter>& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
}

void append_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

std::vector<Letter> expand_factor_base(const Factor& f) {
  std::vector<Letter> base;
  switch (f.kind) {
    case Factor::Kind::kGenerator:
      base.push_back(f.generator + 1);
      break;
    case Factor::Kind::kGroup:
      base = expand_free(f.args[0]);
      break;
    case Factor::Kind::kCommutator: {
      auto a = expand_free(f.args[0]);
      auto b = expand_free(f.args[1]);
      std::vector<Letter> raw;
      append_inverse(raw, a);
      append_inverse(raw, b);
      raw.insert(raw.end(), a.begin(), a.end());
      raw.insert(raw.end(), b.begin(), b.end());
      for (Letter l : raw) append_reduced(base, l);
      break;
    }
  }
  return base;
}

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> generators) {
  return WordParser(text, generators).parse_all();
}

std::string to_string(const Word& word, std::span<const std::string> generators) {
  std::string out;
  print_word(word, generators, out);
  return out;
}

std::vector<Letter> expand_free(const Word& word) {
  std::vector<Letter> out;
  for (const Factor& f : word.factors) {
    std::vector<Letter> base = expand_factor_base(f);
    std::vector<Letter> unit;
    if (f.exponent < 0) {
      append_inverse(unit, base);
    } else {
      unit = std::move(base);
    }
    const std::int64_t reps = f.exponent < 0 ? -f.exponent : f.exponent;
    for (std::int64_t r = 0; r < reps; ++r) {
      for (Letter l : unit) append_reduced(out, l);
    }
  }
  return out;
}

std::vector<Letter> cyclically_reduce(std::vector<Letter> letters) {
  std::vector<Letter> reduced;
  for (Letter l : letters) append_reduced(reduced, l);
  std::size_t lo = 0;
  std::size_t hi = reduced.size();
  while (hi - lo >= 2 && reduced[lo] == -reduced[hi - 1]) {
    ++lo;
    --hi;
  }
  return {reduced.begin() + static_cast<std::ptrdiff_t>(lo),
          reduced.begin() + static_cast<std::ptrdiff_t>(hi)};
}

}  // namespace classaut
