#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matforms/expand_gl.hpp"
#include "matforms/expr_tree.hpp"
#include "matforms/oracle.hpp"

namespace matforms {

/// Degree vectors t (u >= 2) of the multilinear relations for n x n matrices in characteristic p
/// (p = 0 for characteristic zero): non-increasing, entries in {1, p, p^2, ...}, and
/// either |t| = n + 1, or n + 1 < |t| <= 2n with |t| - min t_i <= n.
std::vector<DegreeVector> gl_degree_vectors(std::uint32_t n, std::uint64_t p);

struct TripleDegree {
  DegreeVector t, r, s;
  std::uint32_t weight() const { return norm(t) + 2 * norm(r); }
  std::string str() const;
  friend bool operator==(const TripleDegree&, const TripleDegree&) = default;
  friend auto operator<=>(const TripleDegree&, const TripleDegree&) = default;
};

/// Triples (t; r; s) with |r| = |s|, each part non-increasing, and the nonzero entries
/// obeying the same p-power and window conditions. A part is (0) only when it would be empty.
/// Triples related by swapping r and s are listed once (r >= s).
std::vector<TripleDegree> o_degree_triples(std::uint32_t n, std::uint64_t p);

enum class Family : std::uint8_t { Amitsur, Power, Cyclic, Transpose, MultiLinearization, Chi, Zeta };

const char* family_name(Family f);

struct GeneratorSpec {
  Family family = Family::Amitsur;
  Alphabet alphabet = Alphabet::GL;
  std::uint32_t n = 2;
  std::uint32_t t = 0;  // sigma index, or the x-degree of chi / zeta
  std::uint32_t l = 0;  // power
  std::uint32_t r = 0;  // y-degree of chi / zeta
  DegreeVector tv, rv, sv;
  /// Instantiation arguments; multilinear families take one per degree entry.
  std::vector<LinComb> args;
  /// True for substitution samples drawn at random.
  bool sample = false;

  std::size_t arity() const;
  std::string parameters() const;
};

/// Left side minus right side, truncated to sigma indices <= n. Sigma nodes on
/// composite arguments stay unexpanded so evaluation checks the relation itself.
MixedExpr instantiate(const GeneratorSpec& spec);

struct SuiteOptions {
  /// Random substitution instances per relation family.
  std::uint32_t samples = 2;
  std::uint64_t seed = 1;
  /// Length of the word used for the transpose relation.
  std::uint32_t transpose_word_length = 1;
};

std::vector<GeneratorSpec> gl_generators(std::uint32_t n, std::uint64_t p, const SuiteOptions& options = {});
std::vector<GeneratorSpec> o_generators(std::uint32_t n, std::uint64_t p, const SuiteOptions& options = {});

struct GeneratorResult {
  GeneratorSpec spec;
  Verdict verdict;
  double millis = 0;
};

struct SuiteReport {
  Alphabet alphabet = Alphabet::GL;
  std::uint32_t n = 0;
  std::uint64_t p = 0;
  std::vector<GeneratorResult> results;
  bool ok() const;
};

/// Verifies every generator of the suite with the oracle; runs checks on all hardware threads.
SuiteReport verify_all(Alphabet alphabet, std::uint32_t n, std::uint64_t p, const VerifyOptions& verify,
                       const SuiteOptions& options = {});

}  // namespace matforms
