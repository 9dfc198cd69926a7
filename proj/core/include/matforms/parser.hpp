#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "matforms/expand_gl.hpp"
#include "matforms/expr_tree.hpp"

namespace matforms {

/// Letter offsets of the y/z spelling: y_k is x_{1000+k}, z_k is x_{2000+k}.
inline constexpr std::uint32_t kYOffset = 1000;
inline constexpr std::uint32_t kZOffset = 2000;

/// Surface syntax tree of the expression language.
///
///   expr    := term (("+" | "-") term)*
///   term    := ("+" | "-")* product
///   product := unary ("*" unary)*
///   unary   := "-" unary | postfix
///   postfix := primary ("'" | "^" int)*
///   primary := int | letter | "(" expr ")" | call
///   letter  := ("x" | "y" | "z") digits
///   call    := "tr(" expr ")" | "s[" ints "](" args ")" | "sigma[" ints ";" ints ";" ints "](" args ")"
///            | "chi[" int "](" expr ")" | "chi[" int "," int "](" 3 args ")" | "zeta[" int "," int "](" 3 args ")"
struct Expr {
  enum class Kind : std::uint8_t { Number, Letter, Sum, Product, Transpose, Power, Call };
  enum class Func : std::uint8_t { Sigma, SigmaTriple, Chi, Zeta };

  Kind kind = Kind::Number;
  std::size_t line = 1;
  std::size_t column = 1;

  mpz_class number;             // Number
  std::uint32_t index = 0;      // Letter
  bool transposed = false;      // Letter
  std::uint32_t exponent = 0;   // Power
  Func func = Func::Sigma;      // Call
  std::vector<DegreeVector> params;  // Call: bracket groups split by ';'
  std::vector<Expr> children;   // Sum terms, Product factors, postfix operand, Call arguments
  std::vector<bool> negated;    // Sum: sign per term

  bool uses_orthogonal() const;
};

Expr parse(std::string_view source);

/// Canonical text; print(parse(print(e))) == print(e).
std::string print(const Expr& e);

/// O when any transpose, y/z letter or orthogonal construct occurs, else GL.
Alphabet infer_alphabet(const Expr& e);

/// Unnormalized mixed expression. Sigma arguments must be linear combinations of words;
/// multilinear and orthogonal constructs expand to normal form on the spot.
MixedExpr lower(const Expr& e, CoeffRing ring, Alphabet alphabet);
MixedExpr lower(const Expr& e, CoeffRing ring);

/// parse + lower + normalize.
MixedElement evaluate(std::string_view source, CoeffRing ring);

}  // namespace matforms
