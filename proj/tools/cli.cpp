#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>

#include "json_io.hpp"
#include "matforms/errors.hpp"
#include "matforms/parser.hpp"

namespace matforms::cli {

namespace {

struct Common {
  std::string coeff = "Z";
  std::string alphabet = "auto";
  bool text = false;
};

struct OracleFlags {
  std::uint32_t n = 2;
  std::string mode = "exact";
  std::uint64_t q = 0;
  std::uint32_t trials = 5;
  std::uint64_t seed = 1;
  bool no_diagonal = false;

  VerifyOptions options() const {
    VerifyOptions o;
    o.n = n;
    o.mode = mode == "exact" ? VerifyMode::Exact : VerifyMode::Randomized;
    o.q = q;
    o.trials = trials;
    o.seed = seed;
    o.diagonal_reduction = !no_diagonal;
    return o;
  }
};

void add_common(CLI::App* app, Common& c, bool with_text = true) {
  app->add_option("--coeff", c.coeff, "coefficient ring: Z, Q or Fp:<p>")->capture_default_str();
  app->add_option("--alphabet", c.alphabet, "GL, O, or auto (O when transposes occur)")
      ->check(CLI::IsMember({"auto", "GL", "O"}))
      ->capture_default_str();
  if (with_text) app->add_flag("--text", c.text, "plain text instead of JSON");
}

void add_oracle(CLI::App* app, OracleFlags& f) {
  app->add_option("--n", f.n, "matrix size")->check(CLI::Range(1u, 64u))->capture_default_str();
  app->add_option("--mode", f.mode, "exact or randomized")
      ->check(CLI::IsMember({"exact", "randomized"}))
      ->capture_default_str();
  app->add_option("--q", f.q, "field size for randomized mode (0 = default)");
  app->add_option("--trials", f.trials, "randomized trials")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--seed", f.seed, "random seed")->capture_default_str();
  app->add_flag("--no-diagonal", f.no_diagonal, "exact mode: keep the first letter fully generic");
}

MixedExpr lowered(const std::string& src, const Common& c) {
  const Expr e = parse(src);
  const CoeffRing ring = CoeffRing::parse(c.coeff);
  if (c.alphabet == "auto") return lower(e, ring);
  return lower(e, ring, c.alphabet == "O" ? Alphabet::O : Alphabet::GL);
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trace identities of generic and orthogonal matrices: normal forms, expansions, verification"};
  app.name("matforms");
  app.require_subcommand(1);

  Common common;
  OracleFlags oracle;
  std::string source;

  auto* normalize_cmd = app.add_subcommand("normalize", "print the normal form of an expression");
  normalize_cmd->add_option("expr", source, "expression")->required();
  std::uint32_t truncate_at = 0;
  normalize_cmd->add_option("--truncate", truncate_at, "drop sigma_t with t > N before and after expansion (0 keeps everything)");
  add_common(normalize_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "decide whether an expression vanishes on n x n matrices");
  verify_cmd->add_option("expr", source, "expression")->required();
  add_common(verify_cmd, common);
  add_oracle(verify_cmd, oracle);

  auto* expand_cmd = app.add_subcommand("expand", "expansion tables");
  expand_cmd->require_subcommand(1);
  std::uint32_t et = 1, el = 2, eu = 2;
  DegreeVector tv, rv, sv;
  auto* amitsur_cmd = expand_cmd->add_subcommand("amitsur", "F_t(x1, ..., xu) = sigma_t(x1 + ... + xu)");
  amitsur_cmd->add_option("--t", et)->required();
  amitsur_cmd->add_option("--u", eu, "number of summands")->check(CLI::Range(1u, 8u))->capture_default_str();
  auto* power_cmd = expand_cmd->add_subcommand("power", "P_{t,l}: sigma_t(x^l) through sigma_k(x)");
  power_cmd->add_option("--t", et)->required();
  power_cmd->add_option("--l", el)->required();
  auto* multi_cmd = expand_cmd->add_subcommand("multi", "sigma_t(x1, ..., xu) for a degree vector t");
  multi_cmd->add_option("--t", tv, "comma-separated degrees")->delimiter(',')->required();
  auto* trs_cmd = expand_cmd->add_subcommand("trs", "sigma_{t;r;s}(x; y; z) in abstract letters");
  trs_cmd->add_option("--t", tv)->delimiter(',')->required();
  trs_cmd->add_option("--r", rv)->delimiter(',')->required();
  trs_cmd->add_option("--s", sv)->delimiter(',')->required();

  auto* linearize_cmd = app.add_subcommand("linearize", "partial linearization of sigma_|t| at a degree vector");
  linearize_cmd->add_option("--t", tv, "comma-separated degrees")->delimiter(',')->required();

  auto* gen_cmd = app.add_subcommand("generators", "enumerate and verify a generating set");
  bool gl = false, orth = false, list_only = false;
  std::uint64_t p = 0;
  SuiteOptions suite;
  auto* gl_flag = gen_cmd->add_flag("--gl", gl, "generic matrices");
  auto* o_flag = gen_cmd->add_flag("--o", orth, "generic matrices with transposes");
  gl_flag->excludes(o_flag);
  gen_cmd->add_option("--p", p, "characteristic (0 or a prime)")->capture_default_str();
  gen_cmd->add_option("--samples", suite.samples, "random substitution instances per relation")->capture_default_str();
  gen_cmd->add_option("--transpose-length", suite.transpose_word_length, "word length in the transpose relation")
      ->check(CLI::Range(1u, 4u));
  gen_cmd->add_flag("--list", list_only, "enumerate without verifying");
  add_oracle(gen_cmd, oracle);

  auto* bij_cmd = app.add_subcommand("bijection", "exhaustive check of a quiver map on bounded words");
  std::string map_name = "gl_sets";
  std::uint32_t max_degree = 6;
  bij_cmd->add_option("--map", map_name)->check(CLI::IsMember({"gl_sets", "o_sets1", "o_sets2"}))->capture_default_str();
  bij_cmd->add_option("--degree", max_degree, "largest image degree")->check(CLI::Range(1u, 10u))->capture_default_str();

  auto* self_cmd = app.add_subcommand("selfcheck", "reproduce the closed-form calibration formulas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (*normalize_cmd) {
      MixedExpr e = lowered(source, common);
      if (truncate_at) e = e.truncate(truncate_at);
      MixedElement nf = normalize(e);
      if (truncate_at) nf = nf.truncate(truncate_at);
      if (common.text) {
        out << nf.str() << '\n';
      } else {
        emit(out, {{"command", "normalize"}, {"input", source}, {"result", to_json(nf)}, {"millis", millis_since(start)}});
      }
      return kOk;
    }
    if (*verify_cmd) {
      const Verdict v = is_identity(lowered(source, common), oracle.options());
      if (common.text) {
        out << (v.identity ? "identity" : "non-identity") << '\n';
      } else {
        json j = to_json(v);
        j["command"] = "verify";
        j["input"] = source;
        j["millis"] = millis_since(start);
        emit(out, j);
      }
      return v.identity ? kOk : kNonIdentity;
    }
    if (*expand_cmd) {
      const CoeffRing z = CoeffRing::integers();
      json j = {{"command", "expand"}};
      if (*amitsur_cmd) {
        std::vector<LinComb> xs;
        for (std::uint32_t i = 1; i <= eu; ++i) xs.emplace_back(z, Word::letter(i));
        j["table"] = "amitsur";
        j["parameters"] = {{"t", et}, {"u", eu}};
        j["result"] = to_json(amitsur_F(et, xs));
      } else if (*power_cmd) {
        j["table"] = "power";
        j["parameters"] = {{"t", et}, {"l", el}};
        j["result"] = to_json(power_formula(et, el, z));
      } else if (*multi_cmd) {
        j["table"] = "multi";
        j["parameters"] = {{"t", tv}};
        j["result"] = to_json(sigma_multi_letters(tv));
      } else {
        j["table"] = "trs";
        j["parameters"] = {{"t", tv}, {"r", rv}, {"s", sv}};
        j["result"] = to_json(sigma_trs_letters(tv, rv, sv));
      }
      j["millis"] = millis_since(start);
      emit(out, j);
      return kOk;
    }
    if (*linearize_cmd) {
      const SigmaPoly lin = partial_linearization(norm(tv), tv, CoeffRing::rationals());
      const bool coherent = lin == sigma_multi_letters(tv).in_ring(CoeffRing::rationals());
      emit(out, {{"command", "linearize"},
                 {"parameters", {{"t", tv}}},
                 {"result", to_json(lin)},
                 {"matches_multiset_formula", coherent},
                 {"millis", millis_since(start)}});
      return coherent ? kOk : kNonIdentity;
    }
    if (*gen_cmd) {
      if (!gl && !orth) {
        err << "generators: choose --gl or --o\n";
        return kUsage;
      }
      const Alphabet a = gl ? Alphabet::GL : Alphabet::O;
      if (list_only) {
        json list = json::array();
        const auto specs = gl ? gl_generators(oracle.n, p, suite) : o_generators(oracle.n, p, suite);
        for (const auto& g : specs) {
          list.push_back({{"family", family_name(g.family)}, {"parameters", to_json(g)}, {"element", instantiate(g).str()}});
        }
        emit(out, {{"command", "generators"}, {"alphabet", alphabet_name(a)}, {"n", oracle.n}, {"p", p}, {"generators", list}});
        return kOk;
      }
      const SuiteReport report = verify_all(a, oracle.n, p, oracle.options(), suite);
      json j = to_json(report);
      j["command"] = "generators";
      j["mode"] = oracle.mode;
      j["millis"] = millis_since(start);
      emit(out, j);
      if (!report.ok()) err << "generators: some generators are not identities\n";
      return report.ok() ? kOk : kNonIdentity;
    }
    if (*bij_cmd) {
      const PhiKind kind = map_name == "gl_sets" ? PhiKind::GlSets : map_name == "o_sets1" ? PhiKind::OSets1 : PhiKind::OSets2;
      const BijectionReport r = check_bijection(kind, max_degree);
      json j = to_json(r);
      j["command"] = "bijection";
      j["map"] = map_name;
      j["degree"] = max_degree;
      j["millis"] = millis_since(start);
      emit(out, j);
      return r.ok() ? kOk : kNonIdentity;
    }
    if (*self_cmd) {
      json checks = json::array();
      std::size_t failed = 0;
      for (const auto& c : calibration_suite()) {
        checks.push_back(to_json(c));
        if (!c.passed) {
          ++failed;
          err << "MISMATCH " << c.name << "\n  expected: " << c.expected << "\n  actual:   " << c.actual << '\n';
        }
      }
      emit(out, {{"command", "selfcheck"}, {"ok", failed == 0}, {"failed", failed}, {"checks", checks},
                 {"millis", millis_since(start)}});
      return failed == 0 ? kOk : kNonIdentity;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace matforms::cli
