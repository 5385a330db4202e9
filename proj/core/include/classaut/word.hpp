#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace classaut {

struct Factor;

// A word over the generators of a presentation. Commutators and powers are
// kept symbolic; they are only expanded when a word is evaluated or turned
// into a free word for coset enumeration.
struct Word {
  std::vector<Factor> factors;

  bool empty() const noexcept { return factors.empty(); }

  static Word generator(int index, std::int64_t exponent = 1);
  static Word commutator(Word left, Word right);
  static Word product(Word left, const Word& right);
};

struct Factor {
  enum class Kind { kGenerator, kGroup, kCommutator };

  Kind kind = Kind::kGenerator;
  int generator = -1;       // kGenerator only
  std::vector<Word> args;   // kGroup: {inner}; kCommutator: {left, right}
  std::int64_t exponent = 1;
};

bool operator==(const Word& a, const Word& b);
bool operator==(const Factor& a, const Factor& b);

// Grammar (whitespace insignificant):
//   word   := factor+            juxtaposition is product, '*' optional
//   factor := atom ['^' int]     int may be negative, optionally in braces
//   atom   := generator | '1' | '(' word ')' | '[' word (',' word)+ ']'
// [a,b,c] is stored left-normed as [[a,b],c]. A power of 0 yields no factor.
// Juxtaposed generator names ("xy") are split by longest declared prefix
// when the whole run is not itself a declared generator.
Word parse_word(std::string_view text, std::span<const std::string> generators);

// Prints a word in the same grammar; parse_word(to_string(w)) == w.
std::string to_string(const Word& word, std::span<const std::string> generators);

// Free letters: +(g+1) is generator g, -(g+1) its inverse.
using Letter = int;

// Expands commutators and powers into a freely reduced letter sequence,
// using [a,b] = a^-1 b^-1 a b.
std::vector<Letter> expand_free(const Word& word);

// Free reduction followed by cyclic reduction.
std::vector<Letter> cyclically_reduce(std::vector<Letter> letters);

}  // namespace classaut
