#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace matforms {

using Partition = std::vector<std::uint32_t>;

/// All partitions of n with nonincreasing parts.
std::vector<Partition> partitions(std::uint32_t n);

/// z_mu = prod_i i^{m_i} m_i!, the centralizer order of cycle type mu.
mpz_class centralizer_order(const Partition& mu);

/// Polynomial in the elementary symmetric functions; key[k-1] is the exponent of e_k.
using ElemMonomial = std::vector<std::uint32_t>;
using ElemPoly = std::map<ElemMonomial, mpq_class>;

ElemPoly elem_mul(const ElemPoly& a, const ElemPoly& b);

/// Power sum p_m in the elementary basis (Newton-Girard).
const ElemPoly& power_sum_in_elementary(std::uint32_t m);

/// e_t(z^l) in the elementary basis of z, over Q. Integrality is asserted.
const ElemPoly& power_formula_elementary(std::uint32_t t, std::uint32_t l);

}  // namespace matforms
