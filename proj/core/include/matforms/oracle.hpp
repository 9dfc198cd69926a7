#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matforms/expr_tree.hpp"
#include "matforms/poly.hpp"
#include "matforms/sigma_ring.hpp"

namespace matforms {

enum class VerifyMode : std::uint8_t { Exact, Randomized };

const char* mode_name(VerifyMode mode);

struct VerifyOptions {
  std::uint32_t n = 2;
  VerifyMode mode = VerifyMode::Exact;
  /// Field size for randomized mode; 0 picks 2^31 - 1, or a power of p for F_p coefficients.
  std::uint64_t q = 0;
  std::uint32_t trials = 5;
  std::uint64_t seed = 1;
  /// In the GL alphabet, exact mode may replace the most frequent letter by a generic diagonal matrix.
  bool diagonal_reduction = true;
};

/// Why an element is not an identity.
struct Witness {
  /// Matrix entry (0-based) carrying the nonzero value.
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  /// Exact mode: a monomial of that entry and its coefficient.
  std::string monomial;
  std::string coefficient;
  /// Randomized mode: trial index, the nonzero value, and the sampled letter matrices.
  std::uint32_t trial = 0;
  std::string value;
  std::map<std::string, std::vector<std::vector<std::string>>> assignment;
};

struct Verdict {
  bool identity = false;
  VerifyMode mode = VerifyMode::Exact;
  std::uint32_t n = 0;
  std::uint64_t q = 0;
  std::uint32_t trials = 0;
  std::uint32_t degree_bound = 0;
  /// Probability that a non-identity passes all trials; 0 in exact mode.
  double error_bound = 0;
  std::optional<Witness> witness;
};

/// Evaluation of f on generic n x n matrices x_k = (x_ij(k)) over Q (or F_p for F_p coefficients).
/// Letters are mapped to consecutive variable slots in increasing index order.
using ExactMatrix = Matrix<PolyCtx<QCoef>>;
ExactMatrix eval_generic(const MixedExpr& f, std::uint32_t n, bool diagonal_first = false);

/// Characteristic coefficients of an integer matrix, s[0] = 1.
std::vector<mpq_class> char_coeffs(const std::vector<std::vector<mpq_class>>& m);

/// Decides whether f vanishes on n x n generic matrices (and their transposes in the O alphabet).
/// Generators sigma_t with t > n evaluate to zero.
Verdict is_identity(const MixedExpr& f, const VerifyOptions& options);
Verdict is_identity(const MixedElement& f, const VerifyOptions& options);
Verdict is_identity(const SigmaPoly& f, const VerifyOptions& options);

/// Largest prime below 2^31.
inline constexpr std::uint64_t kDefaultFieldSize = 2147483647;

}  // namespace matforms
