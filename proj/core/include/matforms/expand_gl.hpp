#pragma once

#include <cstdint>
#include <vector>

#include "matforms/coeff.hpp"
#include "matforms/expr_tree.hpp"
#include "matforms/sigma_ring.hpp"

namespace matforms {

/// Tuple (t_1, ..., t_u) of nonnegative integers.
using DegreeVector = std::vector<std::uint32_t>;

std::uint32_t norm(const DegreeVector& t);
std::string to_string(const DegreeVector& t);

/// Multiset sigma in the abstract letters x_1..x_u over Z and the GL alphabet.
/// Zero entries mean the letter is absent.
const SigmaPoly& sigma_multi_letters(const DegreeVector& t);

/// sigma_t(args) with args substituted for x_1..x_u, in normal form.
SigmaPoly sigma_multi(const DegreeVector& t, const std::vector<LinComb>& args);
SigmaPoly sigma_multi(const DegreeVector& t, const std::vector<Word>& args, CoeffRing ring);

/// F_t(args) = sum over |t| = t of sigma_t(args), args treated as independent.
SigmaPoly amitsur_F(std::uint32_t t, const std::vector<LinComb>& args);

/// P_{t,l}(x) expressing sigma_t(x^l) through sigma_k(x); x = letter unless given.
SigmaPoly power_formula(std::uint32_t t, std::uint32_t l, CoeffRing ring);
SigmaPoly power_formula(std::uint32_t t, std::uint32_t l, CoeffRing ring, const Word& base);

/// Normal form of sigma_t(a) for a linear combination of words.
SigmaPoly sigma_of(std::uint32_t t, const LinComb& a);

/// Cayley-Hamilton element sum_i (-1)^i sigma_i(a) a^{t-i}, normalized and as written.
MixedElement chi(std::uint32_t t, const LinComb& a);
MixedExpr chi_expr(std::uint32_t t, const LinComb& a);

/// Ring endomorphism on normal forms: sigma_t(e) -> sigma_t(s(e)).
SigmaPoly substitute(const SigmaPoly& f, const Substitution& s);
MixedElement substitute(const MixedElement& f, const Substitution& s);

/// Normal form of an unnormalized tree. Over the O alphabet this also applies
/// transpose invariance of sigma.
SigmaPoly normalize(const SigmaExprTree& e);
MixedElement normalize(const MixedExpr& e);

/// Coefficient of lambda^t in sigma_{|t|}(lambda_1 x_1 + ... + lambda_u x_u), computed
/// through power sums and traces of words rather than multiset enumeration.
SigmaPoly partial_linearization(std::uint32_t t, const DegreeVector& tv, CoeffRing ring);

/// t_1! sigma_t(x) == sigma_{(1^{t_1}, t_2, ...)}(x_1, ..., x_1, x_2, ...) over Q.
bool repeat_identity_check(const DegreeVector& t);

/// Right-hand side of the reduction of sigma_{(k,t)}(x0, x) with x0 = x1, x = x2.
SigmaPoly gl_key_rhs(std::uint32_t k, std::uint32_t t, CoeffRing ring);

/// Base-p coefficient: with t1 = sum l_i p^{a_i}, returns prod (p^{a_i}!)^{l_i} / t1! mod p.
Coeff base_p_beta(std::uint32_t t1, std::uint64_t p);

/// p-adic valuation of n!.
std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p);

}  // namespace matforms
