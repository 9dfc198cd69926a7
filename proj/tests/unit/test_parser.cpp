#include <gtest/gtest.h>

#include <random>

#include "matforms/errors.hpp"
#include "matforms/parser.hpp"

using namespace matforms;

namespace {

const CoeffRing kZ = CoeffRing::integers();

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  std::string expr(int depth) {
    std::string s = term(depth);
    for (int k = pick(0, 2); k > 0; --k) s += (pick(0, 1) ? " + " : " - ") + term(depth);
    return s;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::string term(int depth) {
    std::string s = pick(0, 4) == 0 ? "-" : "";
    s += unary(depth);
    for (int k = pick(0, 2); k > 0; --k) s += "*" + unary(depth);
    return s;
  }

  std::string unary(int depth) {
    std::string s = primary(depth);
    if (pick(0, 5) == 0) s += "'";
    if (pick(0, 6) == 0) s += "^" + std::to_string(pick(1, 3));
    return s;
  }

  std::string primary(int depth) {
    const int choice = depth > 0 ? pick(0, 5) : pick(0, 1);
    switch (choice) {
      case 0:
        return std::to_string(pick(0, 9));
      case 1:
        return "x" + std::to_string(pick(1, 3));
      case 2:
        return "(" + expr(depth - 1) + ")";
      case 3:
        return "tr(" + linear() + ")";
      case 4:
        return "s[" + std::to_string(pick(1, 3)) + "](" + linear() + ")";
      default:
        return "chi[" + std::to_string(pick(1, 2)) + "](" + linear() + ")";
    }
  }

  // sigma arguments must stay linear combinations of words
  std::string linear() {
    std::string s;
    for (int k = pick(1, 2); k > 0; --k) {
      if (!s.empty()) s += pick(0, 1) ? " + " : " - ";
      if (pick(0, 2) == 0) s += std::to_string(pick(2, 3)) + "*";
      s += "x" + std::to_string(pick(1, 3));
      for (int m = pick(0, 2); m > 0; --m) s += "*x" + std::to_string(pick(1, 3)) + (pick(0, 4) == 0 ? "'" : "");
    }
    return s;
  }

  std::mt19937_64 rng_;
};

}  // namespace

TEST(Parser, ExampleExpressions) {
  const Expr a = parse("tr(x1*x2) - tr(x1)*tr(x2)");
  EXPECT_EQ(a.kind, Expr::Kind::Sum);
  EXPECT_EQ(a.children.size(), 2u);
  EXPECT_EQ(a.negated, (std::vector<bool>{false, true}));

  const Expr b = parse("s[2](x1 + x2)");
  ASSERT_EQ(b.kind, Expr::Kind::Call);
  EXPECT_EQ(b.func, Expr::Func::Sigma);
  EXPECT_EQ(b.params, std::vector<DegreeVector>{{2}});
  EXPECT_EQ(b.children.at(0).kind, Expr::Kind::Sum);

  const Expr c = parse("chi[1,1](x1, x2, x3')");
  ASSERT_EQ(c.kind, Expr::Kind::Call);
  EXPECT_EQ(c.func, Expr::Func::Chi);
  ASSERT_EQ(c.children.size(), 3u);
  EXPECT_EQ(c.children[2].kind, Expr::Kind::Letter);
  EXPECT_TRUE(c.children[2].transposed);
  EXPECT_EQ(infer_alphabet(c), Alphabet::O);
}

TEST(Parser, SugarForArrowLetters) {
  const Expr y = parse("y2");
  EXPECT_EQ(y.index, kYOffset + 2);
  EXPECT_EQ(parse("z1").index, kZOffset + 1);
  EXPECT_EQ(infer_alphabet(y), Alphabet::O);
  EXPECT_EQ(infer_alphabet(parse("tr(x1)*x2")), Alphabet::GL);
}

TEST(Parser, TransposeToggles) {
  EXPECT_EQ(print(parse("x1''")), "x1");
  EXPECT_EQ(print(parse("(x1*x2)''")), print(parse("x1*x2")));
  EXPECT_EQ(evaluate("(x1*x2)'", kZ), evaluate("x2'*x1'", kZ));
}

TEST(Parser, ErrorsCarryPositions) {
  struct Case {
    const char* src;
    std::size_t line, column;
  };
  for (const Case& c : {Case{"tr(x1", 1, 6}, Case{"x1 + * x2", 1, 6}, Case{"foo(x1)", 1, 1}, Case{"x1\n + $", 2, 4},
                        Case{"s[](x1)", 1, 3}}) {
    try {
      parse(c.src);
      ADD_FAILURE() << "no error for " << c.src;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.src;
      EXPECT_EQ(e.column(), c.column) << c.src << ": " << e.what();
    }
  }
}

TEST(Parser, ArityIsChecked) {
  EXPECT_THROW(parse("s[1,1](x1)"), ParseError);
  EXPECT_THROW(parse("chi[1,1](x1, x2)"), ParseError);
  EXPECT_THROW(parse("zeta[1](x1, x2, x3)"), ParseError);
  EXPECT_THROW(parse("sigma[1;1](x1, x2)"), ParseError);
}

TEST(Parser, LoweringRejectsNonlinearSigmaArguments) {
  EXPECT_THROW(lower(parse("tr(tr(x1)*x2)"), kZ), InvalidArgument);
  EXPECT_THROW(lower(parse("x1'"), kZ, Alphabet::GL), Error);
  EXPECT_THROW(evaluate("tr(x1')", CoeffRing::mod_p(2)), InvalidArgument);
}

TEST(Parser, SpecialForms) {
  EXPECT_EQ(print(parse("s[1](x2*x1)")), "tr(x2*x1)");
  EXPECT_EQ(evaluate("s[1](x2*x1)", kZ).str(), "tr(x1*x2)");
  EXPECT_EQ(evaluate("s[0](x1)", kZ), evaluate("1", kZ));
  EXPECT_EQ(evaluate("x1 - x1", kZ), MixedElement(kZ, Alphabet::GL));
  EXPECT_EQ(evaluate("tr(x1)*x2*x1", kZ).str(), "tr(x1)*x2*x1");
  EXPECT_EQ(evaluate("s[2](-3*x1)", kZ), evaluate("9*s[2](x1)", kZ));
}

TEST(Parser, RandomRoundTrips) {
  RandomSource gen(2024);
  for (int i = 0; i < 1000; ++i) {
    const std::string src = gen.expr(2);
    const Expr e = parse(src);
    const std::string printed = print(e);
    EXPECT_EQ(print(parse(printed)), printed) << src;
    if (i % 10 == 0) EXPECT_EQ(evaluate(printed, kZ), evaluate(src, kZ)) << src;
  }
}

TEST(Parser, NormalFormTextReparses) {
  RandomSource gen(7);
  for (int i = 0; i < 100; ++i) {
    const std::string src = gen.expr(1);
    const MixedElement nf = evaluate(src, kZ);
    // a transpose may cancel out, so reparse in the alphabet of the result
    EXPECT_EQ(normalize(lower(parse(nf.str()), kZ, nf.alphabet())), nf) << src;
  }
}
