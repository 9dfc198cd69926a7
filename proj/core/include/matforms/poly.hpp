#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "matforms/errors.hpp"

namespace matforms {

/// Rational coefficients.
struct QCoef {
  using V = mpq_class;
  V zero() const { return 0; }
  V one() const { return 1; }
  V from(const mpq_class& q) const { return q; }
  void add_to(V& a, const V& b) const { a += b; }
  V add(const V& a, const V& b) const { return a + b; }
  V sub(const V& a, const V& b) const { return a - b; }
  V mul(const V& a, const V& b) const { return a * b; }
  V neg(const V& a) const { return -a; }
  bool is_zero(const V& a) const { return sgn(a) == 0; }
  std::string str(const V& a) const { return a.get_str(); }
};

/// Residues modulo a prime below 2^32.
struct PCoef {
  using V = std::uint64_t;
  std::uint64_t p;

  V zero() const { return 0; }
  V one() const { return 1 % p; }
  V from(const mpq_class& q) const {
    mpz_class num = q.get_num() % p, den = q.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) throw InvalidArgument("denominator divisible by " + std::to_string(p));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
    mpz_class r = num * inv % p;
    return r.get_ui();
  }
  void add_to(V& a, const V& b) const { a = (a + b) % p; }
  V add(const V& a, const V& b) const { return (a + b) % p; }
  V sub(const V& a, const V& b) const { return (a + p - b) % p; }
  V mul(const V& a, const V& b) const { return a * b % p; }
  V neg(const V& a) const { return a == 0 ? 0 : p - a; }
  bool is_zero(const V& a) const { return a == 0; }
  std::string str(const V& a) const { return std::to_string(a); }
};

/// Exponent vector over at most 64 variables, one byte per variable.
using MonoKey = std::array<std::uint8_t, 64>;

struct MonoKeyHash {
  std::size_t operator()(const MonoKey& k) const noexcept {
    return std::hash<std::string_view>()(std::string_view(reinterpret_cast<const char*>(k.data()), k.size()));
  }
};

/// Sparse multivariate polynomial; coefficients live in C::V.
template <class C>
using SparsePoly = std::unordered_map<MonoKey, typename C::V, MonoKeyHash>;

/// Ring of sparse polynomials over C, usable as an evaluation context.
template <class C>
struct PolyCtx {
  using Elem = SparsePoly<C>;
  C coef;

  Elem zero() const { return {}; }
  Elem constant(const mpq_class& q) const {
    Elem e;
    auto v = coef.from(q);
    if (!coef.is_zero(v)) e.emplace(MonoKey{}, std::move(v));
    return e;
  }
  Elem one() const { return constant(1); }
  Elem var(std::uint32_t id) const {
    if (id >= 64) throw InvalidArgument("exact evaluation supports at most 64 matrix entries");
    MonoKey k{};
    k[id] = 1;
    return Elem{{k, coef.one()}};
  }
  bool is_zero(const Elem& a) const { return a.empty(); }

  void add_to(Elem& a, const Elem& b, bool negate = false) const {
    for (const auto& [k, v] : b) {
      auto [it, fresh] = a.try_emplace(k, negate ? coef.neg(v) : v);
      if (fresh) continue;
      coef.add_to(it->second, negate ? coef.neg(v) : v);
      if (coef.is_zero(it->second)) a.erase(it);
    }
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r = a;
    add_to(r, b);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r = a;
    add_to(r, b, true);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r;
    for (const auto& [k, v] : a) r.emplace(k, coef.neg(v));
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    Elem r;
    if (a.empty() || b.empty()) return r;
    r.reserve(a.size() * b.size());
    for (const auto& [ka, va] : a) {
      for (const auto& [kb, vb] : b) {
        MonoKey k;
        for (std::size_t i = 0; i < k.size(); ++i) {
          const unsigned s = unsigned(ka[i]) + kb[i];
          if (s > 255) throw InvalidArgument("exponent overflow in exact evaluation");
          k[i] = static_cast<std::uint8_t>(s);
        }
        auto [it, fresh] = r.try_emplace(k, coef.mul(va, vb));
        if (!fresh) coef.add_to(it->second, coef.mul(va, vb));
      }
    }
    std::erase_if(r, [&](const auto& kv) { return coef.is_zero(kv.second); });
    return r;
  }
  Elem scale(const Elem& a, const mpq_class& q) const {
    auto c = coef.from(q);
    Elem r;
    if (coef.is_zero(c)) return r;
    for (const auto& [k, v] : a) r.emplace(k, coef.mul(v, c));
    return r;
  }
};

/// Prime field F_p with p < 2^63; elements are reduced residues.
struct PrimeFieldCtx {
  using Elem = std::uint64_t;
  std::uint64_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem constant(const mpq_class& q) const {
    mpz_class pp;
    mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_class num = q.get_num() % pp, den = q.get_den() % pp;
    if (num < 0) num += pp;
    if (den == 0) throw InvalidArgument("a coefficient denominator vanishes in the evaluation field");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
    mpz_class r = num * inv % pp;
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    const unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
    return static_cast<Elem>(s >= p ? s - p : s);
  }
  void add_to(Elem& a, const Elem& b, bool negate = false) const { a = negate ? sub(a, b) : add(a, b); }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p); }
  Elem scale(Elem a, const mpq_class& q) const { return mul(a, constant(q)); }
  std::string str(Elem a) const { return std::to_string(a); }
};

/// Extension field F_{p^k} = F_p[t]/(m(t)) with m monic irreducible of degree k.
struct ExtFieldCtx {
  using Elem = std::vector<std::uint64_t>;  // k coefficients, low degree first
  PrimeFieldCtx base;
  std::vector<std::uint64_t> modulus;  // monic, size k+1

  /// Smallest (in lexicographic search order) monic irreducible of degree k.
  static ExtFieldCtx make(std::uint64_t p, std::uint32_t k);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(modulus.size() - 1); }
  Elem zero() const { return Elem(degree(), 0); }
  Elem one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
  }
  Elem constant(const mpq_class& q) const {
    Elem e = zero();
    e[0] = base.constant(q);
    return e;
  }
  bool is_zero(const Elem& a) const {
    for (auto c : a) {
      if (c) return false;
    }
    return true;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base.add(a[i], b[i]);
    return r;
  }
  void add_to(Elem& a, const Elem& b, bool negate = false) const {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = negate ? base.sub(a[i], b[i]) : base.add(a[i], b[i]);
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base.sub(a[i], b[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base.neg(a[i]);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, const mpq_class& q) const {
    const auto c = base.constant(q);
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base.mul(a[i], c);
    return r;
  }
  std::string str(const Elem& a) const;
};

/// Dense square matrix over an evaluation context.
template <class Ctx>
struct Matrix {
  using E = typename Ctx::Elem;
  std::uint32_t n = 0;
  std::vector<E> a;

  E& at(std::uint32_t i, std::uint32_t j) { return a[i * n + j]; }
  const E& at(std::uint32_t i, std::uint32_t j) const { return a[i * n + j]; }

  static Matrix zero(const Ctx& ctx, std::uint32_t n) { return Matrix{n, std::vector<E>(n * n, ctx.zero())}; }
  static Matrix scalar(const Ctx& ctx, std::uint32_t n, const E& s) {
    Matrix m = zero(ctx, n);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
  }
};

template <class Ctx>
Matrix<Ctx> mat_mul(const Ctx& ctx, const Matrix<Ctx>& x, const Matrix<Ctx>& y) {
  Matrix<Ctx> r = Matrix<Ctx>::zero(ctx, x.n);
  for (std::uint32_t i = 0; i < x.n; ++i) {
    for (std::uint32_t k = 0; k < x.n; ++k) {
      if (ctx.is_zero(x.at(i, k))) continue;
      for (std::uint32_t j = 0; j < x.n; ++j) {
        if (ctx.is_zero(y.at(k, j))) continue;
        ctx.add_to(r.at(i, j), ctx.mul(x.at(i, k), y.at(k, j)));
      }
    }
  }
  return r;
}

template <class Ctx>
void mat_add_to(const Ctx& ctx, Matrix<Ctx>& x, const Matrix<Ctx>& y) {
  for (std::size_t i = 0; i < x.a.size(); ++i) ctx.add_to(x.a[i], y.a[i]);
}

template <class Ctx>
Matrix<Ctx> mat_scaled(const Ctx& ctx, const Matrix<Ctx>& x, const typename Ctx::Elem& s) {
  Matrix<Ctx> r = x;
  for (auto& e : r.a) e = ctx.mul(e, s);
  return r;
}

template <class Ctx>
Matrix<Ctx> mat_transpose(const Matrix<Ctx>& x) {
  Matrix<Ctx> r = x;
  for (std::uint32_t i = 0; i < x.n; ++i) {
    for (std::uint32_t j = 0; j < x.n; ++j) r.at(i, j) = x.at(j, i);
  }
  return r;
}

/// Division-free characteristic coefficients (Berkowitz): returns s[0..n] with s[0] = 1
/// and det(lambda E - A) = sum (-1)^t lambda^{n-t} s[t].
template <class Ctx>
std::vector<typename Ctx::Elem> char_coeffs(const Ctx& ctx, const Matrix<Ctx>& m) {
  using E = typename Ctx::Elem;
  const std::uint32_t n = m.n;
  // c[k]: coefficients of det(lambda E - A_r) for the leading block, highest power first.
  std::vector<E> c{ctx.one(), ctx.neg(m.at(0, 0))};
  for (std::uint32_t r = 1; r < n; ++r) {
    std::vector<E> t;
    t.push_back(ctx.one());
    t.push_back(ctx.neg(m.at(r, r)));
    std::vector<E> v(r);
    for (std::uint32_t i = 0; i < r; ++i) v[i] = m.at(i, r);
    for (std::uint32_t k = 0; k < r; ++k) {
      E dot = ctx.zero();
      for (std::uint32_t i = 0; i < r; ++i) {
        if (!ctx.is_zero(m.at(r, i)) && !ctx.is_zero(v[i])) ctx.add_to(dot, ctx.mul(m.at(r, i), v[i]));
      }
      t.push_back(ctx.neg(dot));
      if (k + 1 == r) break;
      std::vector<E> w(r, ctx.zero());
      for (std::uint32_t i = 0; i < r; ++i) {
        for (std::uint32_t j = 0; j < r; ++j) {
          if (!ctx.is_zero(m.at(i, j)) && !ctx.is_zero(v[j])) ctx.add_to(w[i], ctx.mul(m.at(i, j), v[j]));
        }
      }
      v = std::move(w);
    }
    std::vector<E> next(r + 2, ctx.zero());
    for (std::uint32_t i = 0; i < r + 2; ++i) {
      for (std::uint32_t j = 0; j <= std::min(i, r); ++j) {
        if (!ctx.is_zero(t[i - j]) && !ctx.is_zero(c[j])) ctx.add_to(next[i], ctx.mul(t[i - j], c[j]));
      }
    }
    c = std::move(next);
  }
  for (std::uint32_t k = 1; k <= n; k += 2) c[k] = ctx.neg(c[k]);
  return c;
}

}  // namespace matforms
