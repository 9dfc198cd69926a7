#include "matforms/symmetric.hpp"

#include <mutex>

#include "matforms/errors.hpp"

namespace matforms {

namespace {

void partitions_rec(std::uint32_t n, std::uint32_t max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

void add_into(ElemPoly& acc, const ElemMonomial& m, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = acc.try_emplace(m, 0);
  it->second += c;
  if (sgn(it->second) == 0) acc.erase(it);
}

ElemMonomial single(std::uint32_t k) {
  ElemMonomial m(k, 0);
  m[k - 1] = 1;
  return m;
}

}  // namespace

std::vector<Partition> partitions(std::uint32_t n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

mpz_class centralizer_order(const Partition& mu) {
  std::map<std::uint32_t, std::uint32_t> mult;
  for (std::uint32_t part : mu) ++mult[part];
  mpz_class z = 1;
  for (const auto& [part, m] : mult) {
    for (std::uint32_t i = 1; i <= m; ++i) z *= part * i;
  }
  return z;
}

ElemPoly elem_mul(const ElemPoly& a, const ElemPoly& b) {
  ElemPoly r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      ElemMonomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      add_into(r, m, ca * cb);
    }
  }
  return r;
}

const ElemPoly& power_sum_in_elementary(std::uint32_t m) {
  static std::recursive_mutex mutex;
  static std::map<std::uint32_t, ElemPoly> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  if (m == 0) throw InvalidArgument("power sums start at p_1");

  // p_m = sum_{i<m} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
  ElemPoly p;
  add_into(p, single(m), mpq_class(m % 2 == 1 ? m : -static_cast<long>(m)));
  for (std::uint32_t i = 1; i < m; ++i) {
    ElemPoly ei{{single(i), mpq_class(i % 2 == 1 ? 1 : -1)}};
    for (const auto& [mono, c] : elem_mul(ei, power_sum_in_elementary(m - i))) add_into(p, mono, c);
  }
  return cache.emplace(m, std::move(p)).first->second;
}

const ElemPoly& power_formula_elementary(std::uint32_t t, std::uint32_t l) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, ElemPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({t, l}); it != cache.end()) return it->second;
  }
  if (l == 0) throw InvalidArgument("power formula needs l >= 1");

  // e_t = sum_{mu |- t} (-1)^{t - len(mu)} / z_mu * prod p_{mu_i}; plethysm p_k -> p_{kl}.
  ElemPoly result;
  if (t == 0) result.emplace(ElemMonomial{}, 1);
  for (const Partition& mu : partitions(t)) {
    ElemPoly term{{ElemMonomial{}, mpq_class(1)}};
    for (std::uint32_t part : mu) term = elem_mul(term, power_sum_in_elementary(part * l));
    mpq_class scale(mpz_class((t - mu.size()) % 2 == 0 ? 1 : -1), centralizer_order(mu));
    scale.canonicalize();
    for (const auto& [mono, c] : term) add_into(result, mono, c * scale);
  }
  for (const auto& [mono, c] : result) {
    if (c.get_den() != 1) {
      throw InternalError("power formula coefficient " + c.get_str() + " is not integral");
    }
  }
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(t, l), std::move(result)).first->second;
}

}  // namespace matforms
