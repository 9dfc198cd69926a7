#include <gtest/gtest.h>

#include <set>

#include "matforms/errors.hpp"
#include "matforms/words.hpp"
#include "support.hpp"

using namespace matforms;
using testing_support::w;

namespace {

// Every word with the given multidegree, by brute force.
std::vector<Word> all_words(const MultiDegree& mdeg, Alphabet alpha) {
  std::vector<Word> out;
  std::vector<Letter> cur;
  MultiDegree left = mdeg;
  const std::uint32_t len = total(mdeg);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == len) {
      out.emplace_back(cur, alpha);
      return;
    }
    for (std::uint32_t i = 0; i < left.size(); ++i) {
      if (!left[i]) continue;
      --left[i];
      for (int tr = 0; tr <= (alpha == Alphabet::O ? 1 : 0); ++tr) {
        cur.push_back({i + 1, tr == 1});
        self(self);
        cur.pop_back();
      }
      ++left[i];
    }
  };
  rec(rec);
  return out;
}

std::vector<Word> rotations(const Word& x) {
  std::vector<Word> r;
  const auto& ls = x.letters();
  for (std::size_t k = 0; k < ls.size(); ++k) {
    std::vector<Letter> v(ls.begin() + k, ls.end());
    v.insert(v.end(), ls.begin(), ls.begin() + k);
    r.emplace_back(v, x.alphabet());
  }
  return r;
}

// Class representative computed directly: greatest element of the orbit.
Word brute_rep(const Word& x) {
  std::vector<Word> orbit = rotations(x);
  if (x.alphabet() == Alphabet::O)
    for (const auto& y : rotations(transpose(x))) orbit.push_back(y);
  Word best = orbit.front();
  for (const auto& y : orbit)
    if (compare(y, best) > 0) best = y;
  return best;
}

}  // namespace

TEST(Words, LetterOrderPutsSmallerIndexFirst) {
  EXPECT_TRUE(compare(w({1}, Alphabet::O), w({-1}, Alphabet::O)) > 0);
  EXPECT_TRUE(compare(w({-1}, Alphabet::O), w({2}, Alphabet::O)) > 0);
  EXPECT_TRUE(compare(w({1, 2}), w({1})) > 0);
  EXPECT_TRUE(compare(w({2, 1}), w({2, 1})) == 0);
}

TEST(Words, TransposeReversesAndFlips) {
  const Word a = w({1, -2, 3}, Alphabet::O);
  EXPECT_EQ(transpose(a), w({-3, 2, -1}, Alphabet::O));
  EXPECT_EQ(transpose(transpose(a)), a);
  EXPECT_THROW(transpose(w({1, 2})), Error);
}

TEST(Words, PrimitiveRootAndExponent) {
  std::uint32_t e = 0;
  EXPECT_EQ(primitive_root(w({1, 2, 1, 2, 1, 2}), &e), w({1, 2}));
  EXPECT_EQ(e, 3u);
  EXPECT_TRUE(is_primitive(w({1, 1, 2})));
  EXPECT_FALSE(is_primitive(w({2, 2})));
}

TEST(Words, CanonicalizeIsInvariantOnOrbits) {
  for (Alphabet alpha : {Alphabet::GL, Alphabet::O}) {
    for (const auto& mdeg : std::vector<MultiDegree>{{2, 2}, {3, 1}, {1, 1, 2}, {2, 1, 1}}) {
      for (const auto& x : all_words(mdeg, alpha)) {
        const CanonicalClass c = canonicalize(x);
        const Word root = primitive_root(x);
        EXPECT_EQ(c.rep, brute_rep(root)) << x.str();
        EXPECT_EQ(c.rep.pow(c.exponent).size(), x.size());
        for (const auto& y : rotations(x)) EXPECT_EQ(canonicalize(y), c);
        if (alpha == Alphabet::O) EXPECT_EQ(canonicalize(transpose(x)), c);
      }
    }
  }
}

TEST(Words, MaxRotationIgnoresTransposes) {
  const Word a = w({-2, 1, 1}, Alphabet::O);
  EXPECT_EQ(max_rotation(a), w({1, 1, -2}, Alphabet::O));
}

TEST(Words, EnumerateRepsMatchesBruteForce) {
  for (Alphabet alpha : {Alphabet::GL, Alphabet::O}) {
    for (const auto& mdeg : std::vector<MultiDegree>{{1}, {4}, {2, 1}, {2, 2}, {3, 2}, {1, 1, 1}, {2, 1, 1}, {0, 2, 1}}) {
      std::set<Word> want;
      for (const auto& x : all_words(mdeg, alpha))
        if (is_primitive(x)) want.insert(brute_rep(x));
      const auto& got = enumerate_reps(mdeg, alpha);
      EXPECT_EQ(std::set<Word>(got.begin(), got.end()), want);
      EXPECT_EQ(got.size(), want.size());
      for (std::size_t i = 1; i < got.size(); ++i) EXPECT_TRUE(compare(got[i - 1], got[i]) > 0);
    }
  }
}

TEST(Words, SingleRepresentativeForTwoPlusOne) {
  const auto& reps = enumerate_reps({2, 1}, Alphabet::GL);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_EQ(reps[0], w({1, 1, 2}));
}

TEST(Words, NecklaceCountMatchesEnumeration) {
  for (std::uint32_t u = 1; u <= 3; ++u) {
    for (std::uint32_t m = 1; m <= 6; ++m) {
      std::set<Word> classes;
      std::vector<Letter> cur(m);
      std::uint64_t words = 1;
      for (std::uint32_t i = 0; i < m; ++i) words *= u;
      for (std::uint64_t code = 0; code < words; ++code) {
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i, c /= u) cur[i] = {static_cast<std::uint32_t>(c % u) + 1, false};
        const Word x(cur);
        if (is_primitive(x)) classes.insert(brute_rep(x));
      }
      EXPECT_EQ(necklace_count(u, m), classes.size()) << "u=" << u << " m=" << m;
    }
  }
}

TEST(Words, GlWordsRejectTransposedLetters) {
  EXPECT_THROW(Word({{1, true}}, Alphabet::GL), Error);
  EXPECT_EQ(w({1, 2}).in_alphabet(Alphabet::O).alphabet(), Alphabet::O);
}
