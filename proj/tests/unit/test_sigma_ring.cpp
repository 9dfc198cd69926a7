#include <gtest/gtest.h>

#include "matforms/errors.hpp"
#include "matforms/expand_gl.hpp"
#include "matforms/sigma_ring.hpp"
#include "support.hpp"

using namespace matforms;
namespace ts = testing_support;
using ts::w;
using ts::x;

namespace {

const CoeffRing kZ = CoeffRing::integers();

ts::QMat eval_lincomb(const LinComb& l, const ts::Assignment& a) {
  ts::QMat m = ts::zero(a.begin()->second.size());
  for (const auto& [word, c] : l.terms()) m = ts::add(m, ts::word_matrix(word, a), c);
  return m;
}

SigmaPoly gen(std::uint32_t t, const Word& x) { return SigmaPoly::generator(kZ, t, canonicalize(x).rep); }

}  // namespace

TEST(SigmaRing, GeneratorRequiresCanonicalPrimitiveWord) {
  EXPECT_THROW(SigmaPoly::generator(kZ, 1, w({2, 1})), InvalidArgument);
  EXPECT_THROW(SigmaPoly::generator(kZ, 1, w({1, 1})), InvalidArgument);
  EXPECT_THROW(SigmaPoly::generator(kZ, 0, w({1})), InvalidArgument);
  EXPECT_EQ(SigmaPoly::sigma(kZ, 0, w({1})), SigmaPoly::constant(kZ, Alphabet::GL, 1));
}

TEST(SigmaRing, RingAxiomsOnSamples) {
  const SigmaPoly a = gen(1, w({1})) + gen(2, w({1, 2})).scaled(3);
  const SigmaPoly b = gen(2, w({1})) - SigmaPoly::constant(kZ, Alphabet::GL, 2);
  const SigmaPoly c = gen(1, w({2})) * gen(1, w({1, 1, 2}));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * b, b * a);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.pow(3), a * a * a);
  EXPECT_EQ(-a + a, SigmaPoly(kZ, Alphabet::GL));
}

TEST(SigmaRing, TruncationIsARingHomomorphism) {
  const SigmaPoly a = gen(1, w({1})) + gen(3, w({1, 2}));
  const SigmaPoly b = gen(2, w({1})) + gen(4, w({2})) + SigmaPoly::constant(kZ, Alphabet::GL, 5);
  for (std::uint32_t n = 1; n <= 4; ++n) {
    EXPECT_EQ((a * b).truncate(n), a.truncate(n) * b.truncate(n));
    EXPECT_EQ((a + b).truncate(n), a.truncate(n) + b.truncate(n));
  }
  EXPECT_TRUE(gen(3, w({1})).truncate(2).is_zero());
}

TEST(SigmaRing, ComponentSplitsByMultidegree) {
  const SigmaPoly f = gen(1, w({1})) * gen(1, w({2})) + gen(2, w({1})) + gen(1, w({1, 2}));
  EXPECT_EQ(f.component({1, 1}) + f.component({2}), f);
  EXPECT_EQ(f.component({1, 1}).terms().size(), 2u);
}

TEST(SigmaRing, CoefficientsReduceModP) {
  const CoeffRing f3 = CoeffRing::mod_p(3);
  const SigmaPoly g = SigmaPoly::generator(f3, 1, w({1}));
  EXPECT_TRUE(g.scaled(3).is_zero());
  EXPECT_EQ(g.scaled(4), g);
  EXPECT_THROW(CoeffRing::mod_p(4), InvalidArgument);
  EXPECT_EQ(CoeffRing::parse("Fp:5"), CoeffRing::mod_p(5));
  const SigmaPoly half = SigmaPoly::constant(CoeffRing::rationals(), Alphabet::GL, mpq_class(1, 2));
  EXPECT_EQ(half.in_ring(f3), SigmaPoly::constant(f3, Alphabet::GL, 2));
  EXPECT_THROW(half.in_ring(kZ), Error);
}

TEST(SigmaRing, OrthogonalAlphabetRejectsCharacteristicTwo) {
  EXPECT_THROW(check_ring_for_alphabet(CoeffRing::mod_p(2), Alphabet::O), InvalidArgument);
  EXPECT_NO_THROW(check_ring_for_alphabet(CoeffRing::mod_p(2), Alphabet::GL));
  EXPECT_NO_THROW(check_ring_for_alphabet(CoeffRing::mod_p(3), Alphabet::O));
}

TEST(SigmaRing, MixingAlphabetsOrRingsThrows) {
  const SigmaPoly g = gen(1, w({1}));
  const SigmaPoly o = SigmaPoly::generator(kZ, 1, w({1}, Alphabet::O));
  EXPECT_THROW(g + o, AlphabetMismatch);
  EXPECT_THROW(g + SigmaPoly::generator(CoeffRing::rationals(), 1, w({1})), RingMismatch);
  EXPECT_EQ(g.in_alphabet(Alphabet::O), o);
}

TEST(SigmaRing, OrthogonalGeneratorsIdentifyTransposes) {
  // x1 x2' and its transpose x2 x1' are one class
  EXPECT_EQ(canonicalize(w({1, -2}, Alphabet::O)), canonicalize(w({2, -1}, Alphabet::O)));
  const SigmaPoly a = sigma_of(1, LinComb(kZ, w({2, -1}, Alphabet::O)));
  const SigmaPoly b = sigma_of(1, LinComb(kZ, w({1, -2}, Alphabet::O)));
  EXPECT_EQ(a, b);
}

TEST(SigmaRing, SubstitutionsCompose) {
  Substitution s(kZ, Alphabet::GL), u(kZ, Alphabet::GL);
  s.set(1, x(1) * x(2) + x(2));
  s.set(2, x(1).scaled(2));
  u.set(1, x(2) - x(1));
  const SigmaPoly f = gen(2, w({1})) * gen(1, w({2})) + gen(1, w({1, 2}));
  EXPECT_EQ(substitute(substitute(f, s), u), substitute(f, s.then(u)));
  const Word v = w({1, 2, 1});
  EXPECT_EQ(u.apply(s.apply(v)), s.then(u).apply(v));
}

TEST(SigmaRing, OrthogonalSubstitutionTransposesImages) {
  Substitution s(kZ, Alphabet::O);
  s.set(1, ts::x(1, Alphabet::O) * ts::x(2, Alphabet::O));
  EXPECT_EQ(s.image({1, true}), (ts::x(1, Alphabet::O) * ts::x(2, Alphabet::O)).transpose());
  EXPECT_EQ(s.image({1, true}).str(), LinComb(kZ, w({-2, -1}, Alphabet::O)).str());
}

TEST(SigmaRing, SigmaOfLinearCombinationMatchesMatrices) {
  std::mt19937_64 rng(7);
  const std::vector<LinComb> args = {
      x(1) + x(2),
      x(1) * x(2) - x(2).scaled(2),
      x(1) + x(2) * x(2) + x(3),
      x(1).scaled(3) + x(1) * x(1),
  };
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto a = ts::random_assignment(rng, n, 3);
    for (const auto& arg : args) {
      const ts::QMat m = eval_lincomb(arg, a);
      for (std::uint32_t t = 1; t <= 4; ++t) {
        EXPECT_EQ(ts::eval(sigma_of(t, arg).truncate(n), a), ts::sigma_minors(m, t)) << arg.str() << " t=" << t;
      }
    }
  }
}

TEST(SigmaRing, OrthogonalSigmaMatchesMatrices) {
  std::mt19937_64 rng(11);
  const auto O = Alphabet::O;
  const LinComb arg = ts::x(1, O) * ts::x(2, O, true) + ts::x(2, O) - ts::x(1, O, true) * ts::x(1, O);
  for (int trial = 0; trial < 3; ++trial) {
    const auto a = ts::random_assignment(rng, 3, 2);
    const ts::QMat m = eval_lincomb(arg, a);
    for (std::uint32_t t = 1; t <= 3; ++t) EXPECT_EQ(ts::eval(sigma_of(t, arg), a), ts::sigma_minors(m, t));
  }
}

TEST(SigmaRing, MixedProductMatchesMatrices) {
  std::mt19937_64 rng(3);
  const MixedElement f = MixedElement::term(gen(1, w({1})), w({1, 2})) + MixedElement::word(kZ, w({2}), -2) +
                         MixedElement::scalar(gen(2, w({2})));
  const MixedElement g = MixedElement::term(gen(1, w({1, 2})), w({2})) + MixedElement::scalar(gen(1, w({1})));
  const auto a = ts::random_assignment(rng, 3, 2);
  EXPECT_EQ(ts::eval(f * g, a), ts::mul(ts::eval(f, a), ts::eval(g, a)));
}

TEST(SigmaRing, MixedTransposeOnlyTouchesWords) {
  const auto O = Alphabet::O;
  const SigmaPoly c = SigmaPoly::generator(kZ, 1, w({1, 2}, O));
  const MixedElement f = MixedElement::term(c, w({1, -2}, O));
  EXPECT_EQ(f.transpose(), MixedElement::term(c, w({2, -1}, O)));
  EXPECT_THROW(MixedElement::word(kZ, w({1})).transpose(), Error);
}
