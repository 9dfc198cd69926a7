#include "matforms/calibration.hpp"

#include "matforms/expand_gl.hpp"
#include "matforms/generators.hpp"
#include "matforms/oracle.hpp"
#include "matforms/parser.hpp"
#include "matforms/quiver_o.hpp"

namespace matforms {

namespace {

const CoeffRing kZ = CoeffRing::integers();

MixedElement expected_of(const std::string& text, Alphabet alphabet) {
  return normalize(lower(parse(text), kZ, alphabet));
}

struct Suite {
  std::vector<CalibrationCheck> out;

  void same(std::string name, const MixedElement& actual, const std::string& text) {
    CalibrationCheck c{std::move(name), false, text, actual.str()};
    try {
      const MixedElement want = expected_of(text, actual.alphabet());
      c.passed = want == actual;
      if (!c.passed) c.expected = text + "  =  " + want.str();
    } catch (const std::exception& e) {
      c.actual += "  [error: " + std::string(e.what()) + "]";
    }
    out.push_back(std::move(c));
  }
  void same(std::string name, const SigmaPoly& actual, const std::string& text) {
    same(std::move(name), MixedElement::scalar(actual), text);
  }
  /// Both sides in the expression language.
  void same_text(std::string name, const std::string& lhs, const std::string& rhs, Alphabet alphabet) {
    MixedElement a(kZ, alphabet);
    try {
      a = expected_of(lhs, alphabet);
    } catch (const std::exception& e) {
      out.push_back({std::move(name), false, rhs, lhs + "  [error: " + e.what() + "]"});
      return;
    }
    same(std::move(name), a, rhs);
  }
  void flag(std::string name, bool ok, std::string expected, std::string actual) {
    out.push_back({std::move(name), ok, std::move(expected), std::move(actual)});
  }
};

LinComb letter(std::uint32_t i, Alphabet a = Alphabet::GL) { return LinComb(kZ, Word::letter(i, a)); }

std::string vectors_str(const std::vector<DegreeVector>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + to_string(vs[i]);
  return s + "}";
}

DegreeVector ones(std::uint32_t k) { return DegreeVector(k, 1); }

DegreeVector with_ones(DegreeVector head, std::uint32_t k) {
  head.insert(head.end(), k, 1);
  return head;
}

std::string vec(std::uint32_t a) { return std::to_string(a); }
std::string vec(std::uint32_t a, std::uint32_t b) { return std::to_string(a) + "," + std::to_string(b); }

void amitsur_and_power(Suite& s) {
  s.same("amitsur s2(a+b)", amitsur_F(2, {letter(1), letter(2)}),
         "s[2](x1) + s[2](x2) + tr(x1)*tr(x2) - tr(x1*x2)");
  s.same("amitsur s3(a+b)", amitsur_F(3, {letter(1), letter(2)}),
         "s[3](x1) + s[3](x2) + s[2](x1)*tr(x2) - tr(x1*x2)*tr(x1) + tr(x1^2*x2) + s[2](x2)*tr(x1) - "
         "tr(x1*x2)*tr(x2) + tr(x2^2*x1)");

  const SigmaExprTree f3 = SigmaExprTree::sigma(3, letter(1) + letter(2));
  s.same("s3(a+b) vanishes in the small algebra for n=2", normalize(f3.truncate(2)), "0");
  s.same("s3(a+b) survives truncation for n=3", normalize(f3.truncate(3)), "s[3](x1 + x2)");

  Substitution scale(kZ, Alphabet::GL);
  scale.set(1, letter(1).scaled(-3));
  s.same("s2(alpha a) = alpha^2 s2(a)", substitute(SigmaPoly::sigma(kZ, 2, Word::letter(1)), scale), "9*s[2](x1)");

  s.same("tr(a^2)", power_formula(1, 2, kZ), "tr(x1)^2 - 2*s[2](x1)");
  s.same("tr(a^3)", power_formula(1, 3, kZ), "tr(x1)^3 - 3*s[2](x1)*tr(x1) + 3*s[3](x1)");
  s.same("tr(a^4)", power_formula(1, 4, kZ),
         "tr(x1)^4 - 4*s[2](x1)*tr(x1)^2 + 2*s[2](x1)^2 + 4*s[3](x1)*tr(x1) - 4*s[4](x1)");
  s.same("s2(a^2)", power_formula(2, 2, kZ), "s[2](x1)^2 - 2*s[3](x1)*tr(x1) + 2*s[4](x1)");
  s.same("normalize tr(x1^2)", normalize(lower(parse("tr(x1*x1)"), kZ)), "tr(x1)^2 - 2*s[2](x1)");
}

void multilinear(Suite& s) {
  const std::string s11 = "tr(x1)*tr(x2) - tr(x1*x2)";
  const std::string s22 = "s[2](x1)*s[2](x2) - tr(x1)*s[1,1](x2, x1*x2) + s[2](x1*x2) + s[1,1](x2, x1^2*x2)";
  s.same("s(1,1)(x0,x)", sigma_multi_letters({1, 1}), s11);
  s.same("key formula (1,1)", gl_key_rhs(1, 1, kZ), s11);
  s.same("s(2,2)(x0,x)", sigma_multi_letters({2, 2}), s22);
  s.same("key formula (2,2)", gl_key_rhs(2, 2, kZ), s22);
  s.same_text("repeated argument (2,1)", "2*s[2,1](x1, x2)", "s[1,1,1](x1, x1, x2)", Alphabet::GL);
}

void orthogonal(Suite& s) {
  const auto O = Alphabet::O;
  const LinComb a = letter(1, O), b = letter(2, O), c = letter(3, O);
  auto trs = [&](std::uint32_t t, std::uint32_t r) { return sigma_trs({t}, {r}, {r}, {a}, {b}, {c}); };
  const std::string bb = "(x2 - x2')", cb = "(x3 - x3')";

  s.same("sigma_{0,1}", trs(0, 1), "-tr(x2*" + cb + ")");
  s.same("sigma_{1,1}", trs(1, 1), "tr(x1*" + bb + "*" + cb + ") - tr(x1)*tr(x2*" + cb + ")");
  s.same("sigma_{0,2}", trs(0, 2),
         "s[2](x2*x3) + s[2](x2*x3') + tr(x2*x3*x2*x3') + tr(x2*x3*x2'*x3) - tr(x2*x3*x2'*x3') - "
         "tr(x2*x3)*tr(x2*x3')");
  s.same("chi_{0,1}", chi_tr(0, 1, a, b, c), bb + "*" + cb + " - tr(x2*" + cb + ")");
  s.same("chi_{1,1}", chi_tr(1, 1, a, b, c),
         "x1*" + bb + "*" + cb + " + " + bb + "*x1'*" + cb + " + " + bb + "*" + cb + "*x1 - tr(x1)*" + bb + "*" + cb +
             " - tr(x2*" + cb + ")*x1 - tr(x1*" + bb + "*" + cb + ") + tr(x1)*tr(x2*" + cb + ")");
  s.same("zeta_{0,0}", zeta_tr(0, 0, a, b, c), "x3' - x3");
  s.same("zeta_{1,0}", zeta_tr(1, 0, a, b, c), "-x1'*" + cb + " - " + cb + "*x1 + tr(x1)*" + cb);
  s.same("zeta_{2,0}", zeta_tr(2, 0, a, b, c),
         "-x1'^2*" + cb + " - x1'*" + cb + "*x1 - " + cb + "*x1^2 + tr(x1)*x1'*" + cb + " + tr(x1)*" + cb +
             "*x1 - s[2](x1)*" + cb);
  s.same("zeta_{0,1}", zeta_tr(0, 1, a, b, c), "-" + cb + "*" + bb + "*" + cb + " + tr(x2*" + cb + ")*" + cb);

  // x0, x, y, z = x1..x4
  for (auto [t, r] : {std::pair{1u, 1u}, {2u, 1u}, {1u, 2u}}) {
    const std::string rr = vec(r), rm = vec(r - 1, 1);
    s.same_text("reduction of sigma_{1," + vec(t) + ";" + rr + ";" + rr + "}",
                "sigma[" + vec(1, t) + ";" + rr + ";" + rr + "](x1, x2, x3, x4)",
                "tr(x1)*sigma[" + vec(t) + ";" + rr + ";" + rr + "](x2, x3, x4) - sigma[" + vec(t - 1, 1) + ";" + rr +
                    ";" + rr + "](x2, x1*x2, x3, x4) - sigma[" + vec(t) + ";" + rm + ";" + rr +
                    "](x2, x3, x1*x3, x4) - sigma[" + vec(t) + ";" + rm + ";" + rr + "](x2, x3, x3*x1', x4)",
                O);
  }
  // x, y0, y, z = x1..x4
  for (auto [t, q] : {std::pair{1u, 0u}, {2u, 0u}, {1u, 1u}}) {
    const std::string qq = vec(q);
    s.same_text("reduction of sigma_{" + vec(t) + ";1," + qq + ";" + vec(q + 1) + "}",
                "sigma[" + vec(t) + ";" + vec(1, q) + ";" + vec(q + 1) + "](x1, x2, x3, x4)",
                "-sigma[" + vec(t, 1) + ";" + qq + ";" + qq + "](x1, x2*x4, x3, x4) + sigma[" + vec(t, 1) + ";" + qq +
                    ";" + qq + "](x1, x2*x4', x3, x4) - sigma[" + vec(t - 1) + ";" + vec(q, 1) + ";" + vec(q + 1) +
                    "](x1, x3, x2*x1', x4)",
                O);
  }

  const Word e1 = phi_map(PhiKind::OSets2, Word::letter(encode_source(PhiKind::OSets2, {SourceLetter::E, 1}), O));
  const Word y1 = phi_map(PhiKind::OSets2, Word::letter(encode_source(PhiKind::OSets2, {SourceLetter::Y1, 1}), O));
  s.flag("second quiver map: e_1 -> y0 z", e1.str() == "x2*x4", "x2*x4", e1.str());
  s.flag("second quiver map: y_1 -> y0 x^T", y1.str() == "x2*x1'", "x2*x1'", y1.str());
}

void degree_vectors(Suite& s) {
  struct Case {
    std::uint32_t n;
    std::uint64_t p;
    std::vector<DegreeVector> want;
  };
  const std::vector<Case> cases = {
      {2, 0, {ones(3)}},
      {3, 5, {ones(4)}},
      {6, 0, {ones(7)}},
      {3, 2, {ones(4), with_ones({2}, 2), {2, 2}}},
      {4, 3, {ones(5), with_ones({3}, 2), {3, 3}}},
      {7, 7, {ones(8), with_ones({7}, 1), {7, 7}}},
      {6, 3, {ones(7), with_ones({3}, 4), with_ones({3, 3}, 1), {3, 3, 3}}},
      {9, 5, {ones(10), with_ones({5}, 5), {5, 5}}},
  };
  for (const auto& c : cases) {
    auto got = gl_degree_vectors(c.n, c.p);
    auto want = c.want;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    s.flag("degree vectors n=" + std::to_string(c.n) + " p=" + std::to_string(c.p), got == want, vectors_str(want),
           vectors_str(got));
  }
}

void evaluations(Suite& s) {
  auto check = [&](const std::string& name, const std::string& text, std::uint32_t n, bool want) {
    VerifyOptions o;
    o.n = n;
    const Verdict v = is_identity(lower(parse(text), kZ), o);
    s.flag(name, v.identity == want, want ? "identity" : "non-identity", v.identity ? "identity" : "non-identity");
  };
  check("chi_2(a) = 0 on 2x2 matrices", "chi[2](x1)", 2, true);
  check("trace power relation on 2x2 matrices", "tr(x1^2) - tr(x1)^2 + 2*s[2](x1)", 2, true);
  check("chi_3(ab) = 0 on 3x3 matrices", "chi[3](x1*x2)", 3, true);
  check("chi_{2,0}(a,a,a) = 0 on 2x2 matrices", "chi[2,0](x1, x1, x1)", 2, true);

  GeneratorSpec g;
  g.family = Family::Power;
  g.n = 2;
  g.t = 1;
  g.l = 2;
  g.args = {letter(1)};
  s.same("power relation t=1 l=2 n=2", normalize(instantiate(g)), "tr(x1^2) - tr(x1)^2 + 2*s[2](x1)");
}

}  // namespace

std::vector<CalibrationCheck> calibration_suite() {
  Suite s;
  amitsur_and_power(s);
  multilinear(s);
  orthogonal(s);
  degree_vectors(s);
  evaluations(s);
  return std::move(s.out);
}

}  // namespace matforms
