#include "matforms/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "matforms/errors.hpp"

namespace matforms {

const char* mode_name(VerifyMode mode) { return mode == VerifyMode::Exact ? "exact" : "randomized"; }

// ---------------------------------------------------------------------------
// Extension fields

namespace {

using Poly = std::vector<std::uint64_t>;  // dense, low degree first

void trim_poly(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, const PrimeFieldCtx& F) {
  trim_poly(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = [&] {
    // m is monic in every use below except gcd steps, so invert generally.
    std::uint64_t x = m.back(), r = 1, e = F.p - 2;
    for (; e; e >>= 1, x = F.mul(x, x)) {
      if (e & 1) r = F.mul(r, x);
    }
    return r;
  }();
  while (a.size() > dm) {
    const std::uint64_t c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    trim_poly(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const PrimeFieldCtx& F) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return poly_mod(std::move(r), m, F);
}

Poly poly_gcd(Poly a, Poly b, const PrimeFieldCtx& F) {
  trim_poly(a);
  trim_poly(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Ben-Or irreducibility test: gcd(m, t^{p^i} - t) = 1 for i <= deg/2.
bool irreducible(const Poly& m, const PrimeFieldCtx& F) {
  const std::size_t k = m.size() - 1;
  Poly power{0, 1};  // t
  for (std::size_t i = 1; i <= k / 2; ++i) {
    // power <- power^p mod m
    Poly base = power, acc{1};
    for (std::uint64_t e = F.p; e; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, m, F);
      base = poly_mulmod(base, base, m, F);
    }
    power = acc;
    Poly diff = power;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = F.sub(diff[1], 1);
    trim_poly(diff);
    if (diff.empty()) return false;
    Poly g = poly_gcd(m, diff, F);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

ExtFieldCtx ExtFieldCtx::make(std::uint64_t p, std::uint32_t k) {
  ExtFieldCtx ctx;
  ctx.base = PrimeFieldCtx{p};
  Poly m(k + 1, 0);
  m[k] = 1;
  // Enumerate lower coefficients as base-p counters until an irreducible polynomial appears.
  while (true) {
    if (m[0] != 0 && irreducible(m, ctx.base)) break;
    std::size_t i = 0;
    while (i < k && ++m[i] == p) m[i++] = 0;
    if (i == k) throw InternalError("no irreducible polynomial found");
  }
  ctx.modulus = m;
  return ctx;
}

ExtFieldCtx::Elem ExtFieldCtx::mul(const Elem& a, const Elem& b) const {
  const std::uint32_t k = degree();
  Poly r(2 * k - 1, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (!a[i]) continue;
    for (std::uint32_t j = 0; j < k; ++j) r[i + j] = base.add(r[i + j], base.mul(a[i], b[j]));
  }
  for (std::uint32_t d = 2 * k - 2; d >= k; --d) {
    const std::uint64_t c = r[d];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i < k; ++i) r[d - k + i] = base.sub(r[d - k + i], base.mul(c, modulus[i]));
    r[d] = 0;
  }
  r.resize(k);
  return r;
}

std::string ExtFieldCtx::str(const Elem& a) const {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + "]";
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

/// Letter occurrences, weighted by the sigma index that repeats them.
using LetterWeights = std::map<std::uint32_t, std::uint64_t>;

void collect_letters(const Word& w, LetterWeights& out, std::uint64_t weight = 1) {
  for (const Letter& l : w.letters()) out[l.index] += weight;
}

void collect_letters(const SigmaPoly& f, LetterWeights& out) {
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [g, e] : m.factors) collect_letters(g.word, out, std::uint64_t{g.t} * e);
  }
}

void collect_letters(const SigmaExprTree& t, LetterWeights& out) {
  switch (t.kind()) {
    case SigmaExprTree::Kind::Constant:
      return;
    case SigmaExprTree::Kind::Sigma:
      for (const auto& [w, c] : t.arg().terms()) collect_letters(w, out, t.t());
      return;
    case SigmaExprTree::Kind::Normal:
      collect_letters(t.poly(), out);
      return;
    default:
      for (const auto& c : t.children()) collect_letters(c, out);
  }
}

LetterWeights letter_weights(const MixedExpr& f) {
  LetterWeights s;
  for (const auto& [t, w] : f.terms()) {
    collect_letters(t, s);
    if (w) collect_letters(*w, s);
  }
  return s;
}

std::vector<std::uint32_t> letters_of(const MixedExpr& f) {
  std::vector<std::uint32_t> out;
  for (const auto& [l, w] : letter_weights(f)) out.push_back(l);
  return out;
}

/// The most frequent letter gains the most from being diagonal.
std::uint32_t heaviest_letter(const MixedExpr& f) {
  std::uint32_t best = 0;
  std::uint64_t weight = 0;
  for (const auto& [l, w] : letter_weights(f)) {
    if (w > weight) {
      best = l;
      weight = w;
    }
  }
  return best;
}

template <class Ctx>
class Evaluator {
 public:
  using E = typename Ctx::Elem;
  using M = Matrix<Ctx>;

  Evaluator(const Ctx& ctx, std::uint32_t n, std::map<std::uint32_t, M> letters)
      : ctx_(ctx), n_(n), letters_(std::move(letters)) {}

  M mixed(const MixedExpr& f) {
    M out = M::zero(ctx_, n_);
    for (const auto& [t, w] : f.terms()) {
      E s = tree(t);
      if (ctx_.is_zero(s)) continue;
      if (!w) {
        for (std::uint32_t i = 0; i < n_; ++i) ctx_.add_to(out.at(i, i), s);
      } else {
        mat_add_to(ctx_, out, mat_scaled(ctx_, word(*w), s));
      }
    }
    return out;
  }

 private:
  const M& letter(const Letter& l) {
    auto it = letters_.find(l.index);
    if (it == letters_.end()) throw InvalidArgument("letter x" + std::to_string(l.index) + " is not assigned");
    if (!l.transposed) return it->second;
    auto [tt, fresh] = transposed_.try_emplace(l.index);
    if (fresh) tt->second = mat_transpose(it->second);
    return tt->second;
  }

  const M& word(const Word& w) {
    if (auto it = words_.find(w); it != words_.end()) return it->second;
    M value;
    if (w.size() == 1) {
      value = letter(w[0]);
    } else {
      std::vector<Letter> prefix(w.letters().begin(), w.letters().end() - 1);
      const M& head = word(Word(prefix, w.alphabet()));
      value = mat_mul(ctx_, head, letter(w[w.size() - 1]));
    }
    return words_.emplace(w, std::move(value)).first->second;
  }

  const std::vector<E>& coeffs_of_word(const Word& w) {
    if (auto it = coeffs_.find(w); it != coeffs_.end()) return it->second;
    return coeffs_.emplace(w, char_coeffs(ctx_, word(w))).first->second;
  }

  E sigma_word(std::uint32_t t, const Word& w) {
    if (t > n_) return ctx_.zero();
    return coeffs_of_word(w)[t];
  }

  E poly(const SigmaPoly& f) {
    E out = ctx_.zero();
    for (const auto& [m, c] : f.terms()) {
      E term = ctx_.constant(c);
      for (const auto& [g, e] : m.factors) {
        E s = sigma_word(g.t, g.word);
        for (std::uint32_t i = 0; i < e && !ctx_.is_zero(term); ++i) term = ctx_.mul(term, s);
      }
      ctx_.add_to(out, term);
    }
    return out;
  }

  E tree(const SigmaExprTree& t) {
    switch (t.kind()) {
      case SigmaExprTree::Kind::Constant:
        return ctx_.constant(t.value());
      case SigmaExprTree::Kind::Normal:
        return poly(t.poly());
      case SigmaExprTree::Kind::Sigma: {
        if (t.t() > n_) return ctx_.zero();
        if (t.t() == 0) return ctx_.one();
        const LinComb& a = t.arg();
        if (a.terms().size() == 1) {
          const auto& [w, c] = *a.terms().begin();
          E s = sigma_word(t.t(), w);
          E ct = ctx_.constant(c);
          for (std::uint32_t i = 0; i < t.t(); ++i) s = ctx_.mul(s, ct);
          return s;
        }
        M m = M::zero(ctx_, n_);
        for (const auto& [w, c] : a.terms()) mat_add_to(ctx_, m, mat_scaled(ctx_, word(w), ctx_.constant(c)));
        return char_coeffs(ctx_, m)[t.t()];
      }
      case SigmaExprTree::Kind::Sum: {
        E out = ctx_.zero();
        for (const auto& c : t.children()) ctx_.add_to(out, tree(c));
        return out;
      }
      case SigmaExprTree::Kind::Product: {
        E out = ctx_.one();
        for (const auto& c : t.children()) {
          out = ctx_.mul(out, tree(c));
          if (ctx_.is_zero(out)) break;
        }
        return out;
      }
    }
    throw InternalError("malformed expression tree");
  }

  const Ctx& ctx_;
  std::uint32_t n_;
  std::map<std::uint32_t, M> letters_;
  std::map<std::uint32_t, M> transposed_;
  std::map<Word, M> words_;
  std::map<Word, std::vector<E>> coeffs_;
};

/// Generic matrices for the given letters; letter `diagonal` (0 for none) is a generic diagonal matrix.
template <class C>
std::map<std::uint32_t, Matrix<PolyCtx<C>>> generic_letters(const PolyCtx<C>& ctx, std::uint32_t n,
                                                             const std::vector<std::uint32_t>& letters,
                                                             std::uint32_t diagonal, std::vector<std::string>* names) {
  std::map<std::uint32_t, Matrix<PolyCtx<C>>> out;
  std::uint32_t next = 0;
  for (std::size_t s = 0; s < letters.size(); ++s) {
    auto m = Matrix<PolyCtx<C>>::zero(ctx, n);
    const bool diag = letters[s] == diagonal;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (diag && i != j) continue;
        m.at(i, j) = ctx.var(next++);
        if (names) {
          names->push_back("x" + std::to_string(letters[s]) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]");
        }
      }
    }
    out.emplace(letters[s], std::move(m));
  }
  return out;
}

template <class C>
Verdict exact_verdict(const MixedExpr& f, const VerifyOptions& o, const C& coef) {
  PolyCtx<C> ctx{coef};
  const auto letters = letters_of(f);
  const std::uint32_t diag = o.diagonal_reduction && f.alphabet() == Alphabet::GL ? heaviest_letter(f) : 0;
  std::vector<std::string> names;
  Evaluator<PolyCtx<C>> ev(ctx, o.n, generic_letters(ctx, o.n, letters, diag, &names));
  const auto value = ev.mixed(f);

  Verdict v;
  v.mode = VerifyMode::Exact;
  v.n = o.n;
  v.degree_bound = f.degree_bound();
  v.identity = true;
  for (std::uint32_t i = 0; i < o.n && v.identity; ++i) {
    for (std::uint32_t j = 0; j < o.n && v.identity; ++j) {
      const auto& e = value.at(i, j);
      if (e.empty()) continue;
      auto best = std::min_element(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      Witness w;
      w.row = i;
      w.col = j;
      for (std::size_t k = 0; k < best->first.size(); ++k) {
        if (!best->first[k]) continue;
        if (!w.monomial.empty()) w.monomial += "*";
        w.monomial += names.at(k);
        if (best->first[k] > 1) w.monomial += "^" + std::to_string(best->first[k]);
      }
      if (w.monomial.empty()) w.monomial = "1";
      w.coefficient = coef.str(best->second);
      v.witness = std::move(w);
      v.identity = false;
    }
  }
  return v;
}

template <class Ctx, class Sample>
Verdict randomized_verdict(const MixedExpr& f, const VerifyOptions& o, const Ctx& ctx, std::uint64_t q, Sample sample) {
  Verdict v;
  v.mode = VerifyMode::Randomized;
  v.n = o.n;
  v.q = q;
  v.trials = o.trials;
  v.degree_bound = f.degree_bound();
  if (v.degree_bound >= q) {
    throw InvalidArgument("field size " + std::to_string(q) + " does not exceed the degree bound " +
                          std::to_string(v.degree_bound));
  }
  const auto letters = letters_of(f);
  for (std::uint32_t trial = 0; trial < o.trials; ++trial) {
    std::mt19937_64 rng(o.seed + trial);
    std::map<std::uint32_t, Matrix<Ctx>> assignment;
    for (std::uint32_t l : letters) {
      auto m = Matrix<Ctx>::zero(ctx, o.n);
      for (auto& e : m.a) e = sample(rng);
      assignment.emplace(l, std::move(m));
    }
    Evaluator<Ctx> ev(ctx, o.n, assignment);
    const auto value = ev.mixed(f);
    for (std::uint32_t i = 0; i < o.n; ++i) {
      for (std::uint32_t j = 0; j < o.n; ++j) {
        if (ctx.is_zero(value.at(i, j))) continue;
        Witness w;
        w.row = i;
        w.col = j;
        w.trial = trial;
        w.value = ctx.str(value.at(i, j));
        for (const auto& [l, m] : assignment) {
          auto& rows = w.assignment["x" + std::to_string(l)];
          for (std::uint32_t r = 0; r < o.n; ++r) {
            rows.emplace_back();
            for (std::uint32_t c = 0; c < o.n; ++c) rows.back().push_back(ctx.str(m.at(r, c)));
          }
        }
        v.identity = false;
        v.witness = std::move(w);
        return v;
      }
    }
  }
  v.identity = true;
  v.error_bound = v.degree_bound == 0 ? 0.0 : std::pow(static_cast<double>(v.degree_bound) / static_cast<double>(q), o.trials);
  return v;
}

/// Writes q = p^k with p prime, or returns false.
bool prime_power(std::uint64_t q, std::uint64_t& p, std::uint32_t& k) {
  if (is_prime(q)) {
    p = q;
    k = 1;
    return true;
  }
  for (std::uint32_t e = 2; e < 64; ++e) {
    const auto r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(q), 1.0 / e)));
    for (std::uint64_t c = r > 1 ? r - 1 : 1; c <= r + 1; ++c) {
      if (c < 2) continue;
      unsigned __int128 acc = 1;
      for (std::uint32_t i = 0; i < e && acc <= q; ++i) acc *= c;
      if (acc == q && is_prime(c)) {
        p = c;
        k = e;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

ExactMatrix eval_generic(const MixedExpr& f, std::uint32_t n, bool diagonal_first) {
  PolyCtx<QCoef> ctx{};
  const auto letters = letters_of(f);
  const std::uint32_t diag = diagonal_first && !letters.empty() ? letters.front() : 0;
  Evaluator<PolyCtx<QCoef>> ev(ctx, n, generic_letters(ctx, n, letters, diag, nullptr));
  return ev.mixed(f);
}

std::vector<mpq_class> char_coeffs(const std::vector<std::vector<mpq_class>>& m) {
  PolyCtx<QCoef> ctx{};
  const auto n = static_cast<std::uint32_t>(m.size());
  auto mat = ExactMatrix::zero(ctx, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) mat.at(i, j) = ctx.constant(m[i][j]);
  }
  std::vector<mpq_class> out;
  for (const auto& c : char_coeffs(ctx, mat)) out.push_back(c.empty() ? mpq_class(0) : c.begin()->second);
  return out;
}

Verdict is_identity(const MixedExpr& f, const VerifyOptions& o) {
  if (o.n < 2) throw InvalidArgument("matrix size must be at least 2");
  const CoeffRing& ring = f.ring();
  const bool modp = ring.kind() == CoeffKind::ModP;
  if (o.mode == VerifyMode::Exact) {
    if (modp) return exact_verdict(f, o, PCoef{ring.modulus()});
    return exact_verdict(f, o, QCoef{});
  }
  if (o.trials == 0) throw InvalidArgument("randomized mode needs at least one trial");
  std::uint64_t q = o.q;
  if (q == 0) {
    if (modp) {
      q = ring.modulus();
      while (q < kDefaultFieldSize) q *= ring.modulus();
    } else {
      q = kDefaultFieldSize;
    }
  }
  std::uint64_t p = 0;
  std::uint32_t k = 0;
  if (!prime_power(q, p, k)) throw InvalidArgument("field size " + std::to_string(q) + " is not a prime power");
  if (modp && p != ring.modulus()) {
    throw InvalidArgument("field size " + std::to_string(q) + " is not a power of the coefficient characteristic");
  }
  if (f.alphabet() == Alphabet::O && p == 2) throw InvalidArgument("the O alphabet needs odd characteristic");
  if (k == 1) {
    PrimeFieldCtx ctx{p};
    auto sample = [&](std::mt19937_64& rng) { return std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng); };
    return randomized_verdict(f, o, ctx, q, sample);
  }
  ExtFieldCtx ctx = ExtFieldCtx::make(p, k);
  auto sample = [&](std::mt19937_64& rng) {
    ExtFieldCtx::Elem e(k);
    for (auto& c : e) c = std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng);
    return e;
  };
  return randomized_verdict(f, o, ctx, q, sample);
}

Verdict is_identity(const MixedElement& f, const VerifyOptions& o) { return is_identity(MixedExpr::from(f), o); }

Verdict is_identity(const SigmaPoly& f, const VerifyOptions& o) { return is_identity(MixedExpr::from(f), o); }

}  // namespace matforms
