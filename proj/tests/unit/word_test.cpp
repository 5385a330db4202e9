#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "classaut/error.hpp"
#include "classaut/word.hpp"

using namespace classaut;

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};

Word gen(int i, std::int64_t e = 1) { return Word::generator(i, e); }

ErrorCode code_of(std::string_view text, const std::vector<std::string>& gens = kXYZ) {
  try {
    parse_word(text, gens);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::kSyntaxError;
}

// Random words up to a nesting depth, for round-trip checks.
Word random_word(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> len(1, 3), kind(0, depth > 0 ? 2 : 0), g(0, 2), e(-4, 4);
  Word w;
  for (int i = len(rng); i > 0; --i) {
    Factor f;
    switch (kind(rng)) {
      case 0:
        f.kind = Factor::Kind::kGenerator;
        f.generator = g(rng);
        break;
      case 1:
        f.kind = Factor::Kind::kGroup;
        f.args = {random_word(rng, depth - 1)};
        break;
      default:
        f.kind = Factor::Kind::kCommutator;
        f.args = {random_word(rng, depth - 1), random_word(rng, depth - 1)};
        break;
    }
    f.exponent = e(rng);
    if (f.exponent == 0) f.exponent = 1;
    w.factors.push_back(std::move(f));
  }
  return w;
}

}  // namespace

TEST(ParseWord, RelatorFromTheOrder32List) {
  const Word w = parse_word("[y,x]y^4", kXYZ);
  const Word expected = Word::product(Word::commutator(gen(1), gen(0)), gen(1, 4));
  EXPECT_EQ(w, expected);
}

TEST(ParseWord, ZeroPowerIsEmpty) {
  EXPECT_TRUE(parse_word("x^0", kXYZ).empty());
  EXPECT_TRUE(parse_word("(xy)^0", kXYZ).empty());
}

TEST(ParseWord, TripleCommutatorIsLeftNormed) {
  const Word w = parse_word("[x,y,y]", kXYZ);
  const Word expected = Word::commutator(Word::commutator(gen(0), gen(1)), gen(1));
  EXPECT_EQ(w, expected);
  EXPECT_EQ(parse_word("[x,y,x,z]", kXYZ), parse_word("[[[x,y],x],z]", kXYZ));
}

TEST(ParseWord, NegativeAndBracedExponents) {
  EXPECT_EQ(parse_word("x^-3", kXYZ), gen(0, -3));
  EXPECT_EQ(parse_word("x^{-3}", kXYZ), gen(0, -3));
  EXPECT_EQ(parse_word("x^{2}", kXYZ), gen(0, 2));
}

TEST(ParseWord, StarSeparatorMatchesJuxtaposition) {
  EXPECT_EQ(parse_word("x*y*z", kXYZ), parse_word("xyz", kXYZ));
  EXPECT_EQ(parse_word("x * y", kXYZ), parse_word("x y", kXYZ));
}

TEST(ParseWord, MultiLetterGenerators) {
  const std::vector<std::string> gens = {"a1", "a2", "a10"};
  EXPECT_EQ(parse_word("a10a1", gens), Word::product(gen(2), gen(0)));
  EXPECT_EQ(parse_word("[a1,a2]a10^-1", gens),
            Word::product(Word::commutator(gen(0), gen(1)), gen(2, -1)));
}

TEST(ParseWord, UnknownGeneratorReportsOffset) {
  try {
    parse_word("xw", kXYZ);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownGenerator);
    ASSERT_TRUE(e.offset().has_value());
    EXPECT_EQ(*e.offset(), 0u);
  }
  EXPECT_EQ(code_of("q^2"), ErrorCode::kUnknownGenerator);
}

TEST(ParseWord, SyntaxErrors) {
  for (const char* bad : {"", "[x]", "[x,y", "(x", "x^", "x^a", "x)", ",", "x^{2", "x**y"}) {
    EXPECT_EQ(code_of(bad), ErrorCode::kSyntaxError) << bad;
  }
  try {
    parse_word("xy^", kXYZ);
    FAIL();
  } catch (const Error& e) {
    ASSERT_TRUE(e.offset().has_value());
    EXPECT_EQ(*e.offset(), 3u);
  }
}

TEST(ParseWord, IdentityAtom) { EXPECT_TRUE(parse_word("1", kXYZ).empty()); }

TEST(ParseWord, RoundTripOnRandomWords) {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word(rng, 3);
    const std::string text = to_string(w, kXYZ);
    EXPECT_EQ(parse_word(text, kXYZ), w) << text;
  }
}

TEST(ParseWord, PrintedFormsOfCatalogRelators) {
  for (const char* text : {"x^2", "[y,x]y^4", "[x,y,y,y]", "x^8y^-2", "[y,x^7]x^2", "(xy)^2"}) {
    const Word w = parse_word(text, kXYZ);
    EXPECT_EQ(parse_word(to_string(w, kXYZ), kXYZ), w) << text;
  }
}

TEST(ExpandFree, CommutatorConvention) {
  // [x,y] = x^-1 y^-1 x y
  EXPECT_EQ(expand_free(parse_word("[x,y]", kXYZ)), (std::vector<Letter>{-1, -2, 1, 2}));
  EXPECT_EQ(expand_free(parse_word("[x,y]^-1", kXYZ)), (std::vector<Letter>{-2, -1, 2, 1}));
  EXPECT_EQ(expand_free(parse_word("x y y^-1 x", kXYZ)), (std::vector<Letter>{1, 1}));
}

TEST(ExpandFree, CyclicReduction) {
  EXPECT_EQ(cyclically_reduce({-1, 2, 3, 1}), (std::vector<Letter>{2, 3}));
  EXPECT_EQ(cyclically_reduce({1, -1}), std::vector<Letter>{});
}
