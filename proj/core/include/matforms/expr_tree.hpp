#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matforms/sigma_ring.hpp"

namespace matforms {

/// Unnormalized sigma expression: constants, sigma_t(linear combination),
/// sums, products, and already-normalized polynomials.
class SigmaExprTree {
 public:
  enum class Kind { Constant, Sigma, Sum, Product, Normal };

  static SigmaExprTree constant(CoeffRing ring, Alphabet alphabet, const mpq_class& value);
  static SigmaExprTree sigma(std::uint32_t t, const LinComb& arg);
  static SigmaExprTree sum(std::vector<SigmaExprTree> terms);
  static SigmaExprTree product(std::vector<SigmaExprTree> factors);
  static SigmaExprTree normal(const SigmaPoly& poly);

  Kind kind() const noexcept { return kind_; }
  const CoeffRing& ring() const noexcept { return ring_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  const mpq_class& value() const noexcept { return value_; }
  std::uint32_t t() const noexcept { return t_; }
  const LinComb& arg() const { return *arg_; }
  const std::vector<SigmaExprTree>& children() const noexcept { return children_; }
  const SigmaPoly& poly() const { return *poly_; }

  SigmaExprTree operator+(const SigmaExprTree& o) const;
  SigmaExprTree operator-(const SigmaExprTree& o) const;
  SigmaExprTree operator*(const SigmaExprTree& o) const;
  SigmaExprTree operator-() const;

  /// Replaces sigma_t nodes (and normalized generators) with t > n by zero.
  SigmaExprTree truncate(std::uint32_t n) const;
  /// Upper bound on the total degree in matrix entries after evaluation.
  std::uint32_t degree_bound() const;
  /// Value of a tree without sigma nodes.
  std::optional<mpq_class> constant_value() const;
  /// Largest sigma subscript that occurs.
  std::uint32_t max_t() const;
  /// Largest letter index that occurs.
  std::uint32_t max_letter() const;
  std::string str() const;

 private:
  SigmaExprTree(Kind kind, CoeffRing ring, Alphabet alphabet) : kind_(kind), ring_(ring), alphabet_(alphabet) {}

  Kind kind_;
  CoeffRing ring_;
  Alphabet alphabet_;
  mpq_class value_;
  std::uint32_t t_ = 0;
  std::optional<LinComb> arg_;
  std::vector<SigmaExprTree> children_;
  std::optional<SigmaPoly> poly_;
};

/// Unnormalized mixed expression: sum of (scalar tree) (x) (word or unit).
class MixedExpr {
 public:
  using Term = std::pair<SigmaExprTree, RightFactor>;

  MixedExpr(CoeffRing ring, Alphabet alphabet) : ring_(ring), alphabet_(alphabet) {}

  static MixedExpr scalar(const SigmaExprTree& f);
  static MixedExpr term(const SigmaExprTree& f, const RightFactor& w);
  static MixedExpr from(const MixedElement& m);
  static MixedExpr from(const SigmaPoly& f) { return scalar(SigmaExprTree::normal(f)); }
  static MixedExpr from(const LinComb& l);

  const CoeffRing& ring() const noexcept { return ring_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_scalar() const;

  void add_term(const SigmaExprTree& f, const RightFactor& w);

  MixedExpr operator+(const MixedExpr& o) const;
  MixedExpr operator-(const MixedExpr& o) const;
  MixedExpr operator*(const MixedExpr& o) const;
  MixedExpr operator-() const;
  MixedExpr transpose() const;
  MixedExpr truncate(std::uint32_t n) const;

  /// Pure linear combination of words, if every term is a constant times a word.
  std::optional<LinComb> as_lincomb() const;

  std::uint32_t degree_bound() const;
  std::uint32_t max_letter() const;
  std::string str() const;

 private:
  CoeffRing ring_;
  Alphabet alphabet_;
  std::vector<Term> terms_;
};

}  // namespace matforms
