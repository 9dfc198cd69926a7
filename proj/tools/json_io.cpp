#include "json_io.hpp"

namespace matforms::cli {

namespace {

json monomial(const SigmaMonomial& m) {
  json fs = json::array();
  for (const auto& [g, e] : m.factors) fs.push_back({{"t", g.t}, {"word", g.word.str()}, {"power", e}});
  return fs;
}

json degree(const DegreeVector& v) { return json(std::vector<std::uint32_t>(v.begin(), v.end())); }

}  // namespace

json to_json(const SigmaPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"coefficient", c.get_str()}, {"factors", monomial(m)}});
  return {{"ring", f.ring().tag()}, {"alphabet", alphabet_name(f.alphabet())}, {"text", f.str()}, {"terms", terms}};
}

json to_json(const MixedElement& f) {
  json terms = json::array();
  for (const auto& [w, poly] : f.terms()) {
    terms.push_back({{"word", w ? json(w->str()) : json(nullptr)}, {"scalar", to_json(poly)["terms"]}});
  }
  return {{"ring", f.ring().tag()}, {"alphabet", alphabet_name(f.alphabet())}, {"text", f.str()}, {"terms", terms}};
}

json to_json(const Verdict& v) {
  json j = {{"identity", v.identity},
            {"mode", mode_name(v.mode)},
            {"n", v.n},
            {"degree_bound", v.degree_bound}};
  if (v.mode == VerifyMode::Randomized) {
    j["q"] = v.q;
    j["trials"] = v.trials;
    j["error_bound"] = v.error_bound;
  }
  if (v.witness) {
    const Witness& w = *v.witness;
    json wj = {{"row", w.row}, {"col", w.col}};
    if (v.mode == VerifyMode::Exact) {
      wj["monomial"] = w.monomial;
      wj["coefficient"] = w.coefficient;
    } else {
      wj["trial"] = w.trial;
      wj["value"] = w.value;
      wj["assignment"] = w.assignment;
    }
    j["witness"] = wj;
  }
  return j;
}

json to_json(const GeneratorSpec& g) {
  json p = {{"n", g.n}};
  switch (g.family) {
    case Family::Power:
      p["l"] = g.l;
      [[fallthrough]];
    case Family::Amitsur:
    case Family::Cyclic:
    case Family::Transpose:
      p["t"] = g.t;
      break;
    case Family::MultiLinearization:
      p["t"] = degree(g.tv);
      if (g.alphabet == Alphabet::O) {
        p["r"] = degree(g.rv);
        p["s"] = degree(g.sv);
      }
      break;
    case Family::Chi:
    case Family::Zeta:
      p["t"] = g.t;
      if (g.alphabet == Alphabet::O) p["r"] = g.r;
      break;
  }
  json args = json::array();
  for (const auto& a : g.args) args.push_back(a.str());
  p["args"] = args;
  p["sample"] = g.sample;
  return p;
}

json to_json(const GeneratorResult& r) {
  json j = {{"family", family_name(r.spec.family)},
            {"parameters", to_json(r.spec)},
            {"verdict", r.verdict.identity ? "identity" : "non-identity"},
            {"millis", r.millis}};
  if (r.verdict.mode == VerifyMode::Randomized) j["error_bound"] = r.verdict.error_bound;
  if (r.verdict.witness) j["witness"] = to_json(r.verdict)["witness"];
  return j;
}

json to_json(const SuiteReport& r) {
  json results = json::array();
  for (const auto& g : r.results) results.push_back(to_json(g));
  return {{"alphabet", alphabet_name(r.alphabet)}, {"n", r.n}, {"p", r.p}, {"ok", r.ok()}, {"results", results}};
}

json to_json(const BijectionReport& r) {
  return {{"ok", r.ok()},
          {"injective", r.injective},
          {"surjective", r.surjective},
          {"primitivity", r.primitivity},
          {"unique_preimage", r.unique_preimage},
          {"x0_handling", r.x0_handling},
          {"source_words", r.source_words},
          {"target_classes", r.target_classes},
          {"detail", r.detail}};
}

json to_json(const CalibrationCheck& c) {
  json j = {{"name", c.name}, {"passed", c.passed}};
  if (!c.passed) {
    j["expected"] = c.expected;
    j["actual"] = c.actual;
  }
  return j;
}

}  // namespace matforms::cli
