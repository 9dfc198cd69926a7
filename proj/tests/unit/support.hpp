#pragma once

// Independent numeric oracle for the unit tests: concrete rational matrices,
// characteristic coefficients as sums of principal minors (Leibniz determinants),
// and direct evaluation of normal forms. Nothing here calls the library's evaluator.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "matforms/sigma_ring.hpp"

namespace testing_support {

using QMat = std::vector<std::vector<mpq_class>>;

inline QMat zero(std::size_t n) { return QMat(n, std::vector<mpq_class>(n)); }

inline QMat identity(std::size_t n) {
  QMat m = zero(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QMat mul(const QMat& a, const QMat& b) {
  const std::size_t n = a.size();
  QMat c = zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline QMat add(const QMat& a, const QMat& b, const mpq_class& scale = 1) {
  QMat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += scale * b[i][j];
  return c;
}

inline QMat transposed(const QMat& a) {
  QMat c = zero(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[j][i] = a[i][j];
  return c;
}

/// Leibniz formula over all permutations.
inline mpq_class det(const QMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    mpq_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// sigma_t(M) = sum of the principal t x t minors.
inline mpq_class sigma_minors(const QMat& m, std::uint32_t t) {
  const std::size_t n = m.size();
  if (t == 0) return 1;
  if (t > n) return 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + t, true);
  mpq_class total = 0;
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) idx.push_back(i);
    QMat sub = zero(t);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) sub[i][j] = m[idx[i]][idx[j]];
    total += det(sub);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

using Assignment = std::map<std::uint32_t, QMat>;

inline QMat random_matrix(std::mt19937_64& rng, std::size_t n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  QMat m = zero(n);
  for (auto& row : m)
    for (auto& e : row) e = d(rng);
  return m;
}

inline Assignment random_assignment(std::mt19937_64& rng, std::size_t n, std::uint32_t letters) {
  Assignment a;
  for (std::uint32_t i = 1; i <= letters; ++i) a[i] = random_matrix(rng, n);
  return a;
}

inline QMat word_matrix(const matforms::Word& w, const Assignment& a) {
  QMat m = identity(a.begin()->second.size());
  for (const auto& l : w.letters()) {
    const QMat& x = a.at(l.index);
    m = mul(m, l.transposed ? transposed(x) : x);
  }
  return m;
}

inline mpq_class eval(const matforms::SigmaPoly& f, const Assignment& a) {
  mpq_class total = 0;
  for (const auto& [mono, c] : f.terms()) {
    mpq_class v = c;
    for (const auto& [g, e] : mono.factors) {
      const mpq_class s = sigma_minors(word_matrix(g.word, a), g.t);
      for (std::uint32_t i = 0; i < e; ++i) v *= s;
    }
    total += v;
  }
  return total;
}

inline QMat eval(const matforms::MixedElement& f, const Assignment& a) {
  const std::size_t n = a.begin()->second.size();
  QMat total = zero(n);
  for (const auto& [w, poly] : f.terms()) {
    const mpq_class s = eval(poly, a);
    total = add(total, w ? word_matrix(*w, a) : identity(n), s);
  }
  return total;
}

inline matforms::LinComb x(std::uint32_t i, matforms::Alphabet alpha = matforms::Alphabet::GL, bool tr = false) {
  return matforms::LinComb(matforms::CoeffRing::integers(), matforms::Word::letter(i, alpha, tr));
}

inline matforms::Word w(std::initializer_list<int> letters, matforms::Alphabet alpha = matforms::Alphabet::GL) {
  // negative entries are transposed letters
  std::vector<matforms::Letter> ls;
  for (int l : letters) ls.push_back({static_cast<std::uint32_t>(l < 0 ? -l : l), l < 0});
  return matforms::Word(ls, alpha);
}

}  // namespace testing_support
