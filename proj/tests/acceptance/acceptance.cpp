// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "matforms/calibration.hpp"
#include "matforms/expand_gl.hpp"
#include "matforms/generators.hpp"
#include "matforms/oracle.hpp"
#include "matforms/parser.hpp"
#include "matforms/quiver_o.hpp"

using namespace matforms;

namespace {

const CoeffRing kZ = CoeffRing::integers();
const CoeffRing kQ = CoeffRing::rationals();

struct Outcome {
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

VerifyOptions exact(std::uint32_t n) {
  VerifyOptions o;
  o.n = n;
  return o;
}

VerifyOptions randomized(std::uint32_t n) {
  VerifyOptions o;
  o.n = n;
  o.mode = VerifyMode::Randomized;
  o.q = kDefaultFieldSize;
  o.trials = 5;
  return o;
}

std::vector<DegreeVector> positive_vectors(std::uint32_t max_norm, std::uint32_t max_len) {
  std::vector<DegreeVector> out;
  DegreeVector cur;
  auto rec = [&](auto&& self, std::uint32_t left) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (std::uint32_t v = 1; v <= left; ++v) {
      cur.push_back(v);
      self(self, left - v);
      cur.pop_back();
    }
  };
  rec(rec, max_norm);
  return out;
}

DegreeVector ones(std::uint32_t k, DegreeVector head = {}) {
  head.insert(head.end(), k, 1u);
  return head;
}

Outcome calibration() {
  Outcome o;
  std::size_t ok = 0;
  const auto checks = calibration_suite();
  for (const auto& c : checks) {
    o.require(c.passed, c.name + ": expected " + c.expected + ", got " + c.actual);
    ok += c.passed;
  }
  o.summary = std::to_string(ok) + "/" + std::to_string(checks.size()) + " closed forms reproduce";
  return o;
}

Outcome cayley_hamilton() {
  Outcome o;
  std::size_t cases = 0;
  for (std::uint32_t n = 2; n <= 4; ++n) {
    for (const char* arg : {"x1", "x1*x2", "x1*x2*x3"}) {
      const std::string src = "chi[" + std::to_string(n) + "](" + arg + ")";
      const Verdict v = is_identity(lower(parse(src), kZ), exact(n));
      o.require(v.identity, src + " on " + std::to_string(n) + "x" + std::to_string(n));
      ++cases;
    }
  }
  o.summary = std::to_string(cases) + " exact evaluations vanish";
  return o;
}

Outcome orthogonal_cayley_hamilton() {
  Outcome o;
  const CoeffRing z = kZ;
  const LinComb a(z, Word::letter(1, Alphabet::O)), b(z, Word::letter(2, Alphabet::O)), c(z, Word::letter(3, Alphabet::O));
  double worst = 0;
  std::size_t cases = 0;
  for (std::uint32_t n = 2; n <= 3; ++n) {
    const VerifyOptions opt = n == 2 ? exact(n) : randomized(n);
    auto check = [&](const MixedElement& f, const std::string& name) {
      const Verdict v = is_identity(f, opt);
      o.require(v.identity, name + " at n=" + std::to_string(n));
      if (n == 3) {
        o.require(v.error_bound < 1e-30, name + " error bound " + std::to_string(v.error_bound));
        worst = std::max(worst, v.error_bound);
      }
      ++cases;
    };
    for (std::uint32_t r = 0; 2 * r <= n; ++r) {
      const std::uint32_t t = n - 2 * r;
      check(chi_tr(t, r, a, b, c), "chi_{" + std::to_string(t) + "," + std::to_string(r) + "}");
    }
    for (std::uint32_t r = 0; 2 * r + 1 <= n; ++r) {
      const std::uint32_t t = n - 1 - 2 * r;
      check(zeta_tr(t, r, a, b, c), "zeta_{" + std::to_string(t) + "," + std::to_string(r) + "}");
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  o.summary = std::to_string(cases) + " relations vanish, randomized error bound <= " + buf;
  return o;
}

Outcome key_formulas() {
  Outcome o;
  std::size_t gl = 0, key1 = 0, key2 = 0;
  for (std::uint32_t k = 0; k <= 5; ++k) {
    for (std::uint32_t t = 0; k + t <= 5; ++t) {
      if (k + t == 0) continue;
      o.require(gl_key_rhs(k, t, kZ) == sigma_multi_letters({k, t}),
                "GL (k,t)=(" + std::to_string(k) + "," + std::to_string(t) + ")");
      ++gl;
    }
  }
  for (std::uint32_t k = 0; k <= 5; ++k) {
    for (std::uint32_t t = 0; k + t <= 5; ++t) {
      for (std::uint32_t r = 0; k + t + 2 * r <= 5; ++r) {
        o.require(o_key_lhs_1(k, t, r, kZ) == o_key_rhs_1(k, t, r, kZ),
                  "first O formula (k,t,r)=(" + std::to_string(k) + "," + std::to_string(t) + "," + std::to_string(r) + ")");
        ++key1;
      }
    }
  }
  for (std::uint32_t t = 0; t <= 5; ++t) {
    for (std::uint32_t r = 0; t + 2 * r <= 5; ++r) {
      for (std::uint32_t s = 0; t + 2 * (r + s) <= 5; ++s) {
        const SigmaPoly lhs = o_key_lhs_2(t, r, s, kZ), rhs = o_key_rhs_2(t, r, s, kZ);
        o.require(lhs == rhs, "second O formula (t,r,s)=(" + std::to_string(t) + "," + std::to_string(r) + "," +
                                  std::to_string(s) + "): lhs - rhs = " + (lhs - rhs).str());
        ++key2;
      }
    }
  }
  o.summary = std::to_string(gl) + " GL cases, " + std::to_string(key1) + " first-O cases, " + std::to_string(key2) +
              " second-O cases compared";
  return o;
}

Outcome linearization() {
  Outcome o;
  std::size_t lin = 0, rep = 0;
  for (const auto& tv : positive_vectors(4, 3)) {
    o.require(partial_linearization(norm(tv), tv, kQ) == sigma_multi_letters(tv).in_ring(kQ),
              "partial linearization " + to_string(tv));
    ++lin;
  }
  for (const auto& tv : positive_vectors(4, 4)) {
    o.require(repeat_identity_check(tv), "repeated argument " + to_string(tv));
    ++rep;
  }
  o.summary = std::to_string(lin) + " linearizations, " + std::to_string(rep) + " repeated-argument identities";
  return o;
}

std::uint64_t legendre(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::uint64_t q = p; q <= n; q *= p) v += n / q;
  return v;
}

Outcome base_p() {
  Outcome o;
  std::size_t cases = 0;
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint32_t t1 = 1; t1 <= 200; ++t1) {
      std::uint64_t gamma_alpha = 0, pa = 1;
      for (std::uint64_t rest = t1; rest; rest /= p, pa *= p) gamma_alpha += (rest % p) * legendre(pa, p);
      o.require(gamma_alpha == legendre(t1, p) && factorial_valuation(t1, p) == legendre(t1, p),
                "valuation t1=" + std::to_string(t1) + " p=" + std::to_string(p));
      o.require(!base_p_beta(t1, p).is_zero(), "beta t1=" + std::to_string(t1) + " p=" + std::to_string(p));
      ++cases;
    }
  }
  std::size_t frob = 0;
  for (std::uint64_t p : {2u, 3u}) {
    const CoeffRing fp = CoeffRing::mod_p(p);
    for (std::uint32_t r = 0; r <= 1; ++r) {
      for (std::uint32_t s = 0; s <= 1; ++s) {
        const std::uint32_t t = r ? static_cast<std::uint32_t>(p) : 1, l = s ? static_cast<std::uint32_t>(p) : 1;
        const SigmaPoly power = SigmaPoly::sigma(fp, t, Word::letter(1)).pow(l);
        const SigmaPoly lhs = l == 1 ? SigmaPoly::sigma(fp, t, Word::letter(1)) : power_formula(t, l, fp);
        o.require(lhs == power, "P_{" + std::to_string(t) + "," + std::to_string(l) + "} over F_" + std::to_string(p));
        ++frob;
      }
    }
  }
  o.summary = std::to_string(cases) + " base-p digit checks, " + std::to_string(frob) + " Frobenius power formulas";
  return o;
}

Outcome generating_sets() {
  Outcome o;
  std::size_t total = 0;
  auto suite = [&](Alphabet a, std::uint32_t n, std::uint64_t p) {
    const VerifyOptions opt = n == 2 ? exact(n) : randomized(n);
    const SuiteReport r = verify_all(a, n, p, opt);
    for (const auto& g : r.results) {
      o.require(g.verdict.identity, std::string(alphabet_name(a)) + " n=" + std::to_string(n) + " p=" +
                                        std::to_string(p) + " " + family_name(g.spec.family) + " " + g.spec.parameters());
    }
    total += r.results.size();
  };
  suite(Alphabet::GL, 2, 0);
  suite(Alphabet::GL, 2, 2);
  suite(Alphabet::GL, 3, 2);
  suite(Alphabet::GL, 3, 3);
  suite(Alphabet::O, 2, 3);
  suite(Alphabet::O, 3, 3);

  struct Case {
    std::uint32_t n;
    std::uint64_t p;
    std::vector<DegreeVector> want;
  };
  const std::vector<Case> lists = {
      {2, 0, {ones(3)}},
      {6, 0, {ones(7)}},
      {3, 2, {ones(4), ones(2, {2}), {2, 2}}},
      {4, 3, {ones(5), ones(2, {3}), {3, 3}}},
      {5, 3, {ones(6), ones(3, {3}), {3, 3}}},
      {7, 7, {ones(8), ones(1, {7}), {7, 7}}},
      {6, 3, {ones(7), ones(4, {3}), ones(1, {3, 3}), {3, 3, 3}}},
  };
  for (const auto& c : lists) {
    const auto got = gl_degree_vectors(c.n, c.p);
    o.require(std::set<DegreeVector>(got.begin(), got.end()) == std::set<DegreeVector>(c.want.begin(), c.want.end()) &&
                  got.size() == c.want.size(),
              "degree vectors n=" + std::to_string(c.n) + " p=" + std::to_string(c.p));
  }
  o.summary = std::to_string(total) + " generators verified, " + std::to_string(lists.size()) + " degree-vector lists";
  return o;
}

Outcome bijections() {
  Outcome o;
  std::ostringstream s;
  for (PhiKind kind : {PhiKind::GlSets, PhiKind::OSets1, PhiKind::OSets2}) {
    const BijectionReport r = check_bijection(kind, 6);
    const std::string name = phi_kind_name(kind);
    o.require(r.injective, name + " injectivity: " + r.detail);
    o.require(r.surjective, name + " surjectivity: " + r.detail);
    o.require(r.primitivity, name + " primitivity: " + r.detail);
    o.require(r.unique_preimage, name + " unique preimage: " + r.detail);
    o.require(r.x0_handling, name + " x0 handling: " + r.detail);
    s << (s.tellp() ? ", " : "") << name << " " << r.source_words << " words";
  }
  o.summary = s.str();
  return o;
}

Outcome negative_controls() {
  Outcome o;
  std::size_t cases = 0;
  auto reject = [&](const MixedExpr& f, std::uint32_t n, const std::string& name) {
    for (const VerifyOptions& opt : {exact(n), randomized(n)}) {
      const Verdict v = is_identity(f, opt);
      o.require(!v.identity, name + " accepted in " + mode_name(opt.mode) + " mode");
      o.require(v.witness.has_value(), name + " has no witness in " + mode_name(opt.mode) + " mode");
      ++cases;
    }
  };
  reject(lower(parse("tr(x1*x2) - tr(x1)*tr(x2)"), kZ), 2, "tr(x1 x2) - tr(x1) tr(x2)");
  for (std::uint32_t n = 2; n <= 3; ++n) {
    for (const auto& tv : positive_vectors(n, n)) {
      if (norm(tv) != n || tv.size() < 2) continue;
      std::vector<LinComb> args;
      for (std::uint32_t i = 1; i <= tv.size(); ++i) args.emplace_back(kZ, Word::letter(i));
      reject(MixedExpr::from(sigma_multi(tv, args)), n, "sigma_" + to_string(tv) + " at n=" + std::to_string(n));
    }
  }
  o.summary = std::to_string(cases) + " non-identities rejected with witnesses";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;  // 0 means no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"calibration", 10, calibration},
      {"cayley-hamilton", 60, cayley_hamilton},
      {"orthogonal cayley-hamilton", 0, orthogonal_cayley_hamilton},
      {"key formulas", 0, key_formulas},
      {"linearization coherence", 0, linearization},
      {"base-p machinery", 0, base_p},
      {"generating sets", 0, generating_sets},
      {"bijections", 120, bijections},
      {"negative controls", 0, negative_controls},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.passed = false;
      o.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    all = all && o.passed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.passed ? "PASS" : "FAIL") << " [" << i + 1 << "] " << c.name << ": " << o.summary << " (" << timing
              << ")\n";
    for (const auto& f : o.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
  }
  return all ? 0 : 1;
}
