#include "matforms/expand_gl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "matforms/errors.hpp"
#include "matforms/symmetric.hpp"

namespace matforms {

std::uint32_t norm(const DegreeVector& t) { return std::accumulate(t.begin(), t.end(), 0u); }

std::string to_string(const DegreeVector& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

namespace {

const CoeffRing kZ = CoeffRing::integers();

// Depth-first knapsack over candidate representatives: multisets with sum k_e mdeg(e) = target.
void omega_dfs(const std::vector<Word>& cands, const std::vector<MultiDegree>& degs, std::size_t from,
               MultiDegree& remaining, SigmaMonomial& mono, std::uint32_t ksum, SigmaPoly& out) {
  if (std::all_of(remaining.begin(), remaining.end(), [](std::uint32_t x) { return x == 0; })) {
    out.add_term(mono, ksum % 2 == 0 ? 1 : -1);
    return;
  }
  // The first nonzero coordinate must be covered by some later candidate.
  for (std::size_t i = from; i < cands.size(); ++i) {
    const MultiDegree& d = degs[i];
    if (!fits_within(d, remaining)) continue;
    for (std::uint32_t k = 1;; ++k) {
      bool ok = true;
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (d[j] * k > remaining[j]) ok = false;
      }
      if (!ok) break;
      for (std::size_t j = 0; j < d.size(); ++j) remaining[j] -= d[j] * k;
      mono.factors.emplace_back(SigmaGen{k, cands[i]}, 1);
      omega_dfs(cands, degs, i + 1, remaining, mono, ksum + k, out);
      mono.factors.pop_back();
      for (std::size_t j = 0; j < d.size(); ++j) remaining[j] += d[j] * k;
    }
  }
}

void sub_degrees(const MultiDegree& bound, std::size_t pos, MultiDegree& cur, std::vector<MultiDegree>& out) {
  if (pos == bound.size()) {
    if (total(cur) > 0) out.push_back(cur);
    return;
  }
  for (std::uint32_t v = 0; v <= bound[pos]; ++v) {
    cur[pos] = v;
    sub_degrees(bound, pos + 1, cur, out);
  }
}

SigmaMonomial sorted(SigmaMonomial m) {
  std::sort(m.factors.begin(), m.factors.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return m;
}

SigmaPoly compute_sigma_multi_letters(const DegreeVector& t) {
  SigmaPoly out(kZ, Alphabet::GL);
  MultiDegree target(t.begin(), t.end());
  trim(target);
  if (target.empty()) return SigmaPoly::constant(kZ, Alphabet::GL, 1);

  std::vector<MultiDegree> subs;
  MultiDegree cur(target.size(), 0);
  sub_degrees(target, 0, cur, subs);
  std::vector<Word> cands;
  std::vector<MultiDegree> degs;
  for (const MultiDegree& d : subs) {
    for (const Word& w : enumerate_reps(d, Alphabet::GL)) {
      cands.push_back(w);
      MultiDegree wd = w.multidegree();
      wd.resize(target.size(), 0);
      degs.push_back(std::move(wd));
    }
  }
  SigmaPoly raw(kZ, Alphabet::GL);
  SigmaMonomial mono;
  MultiDegree remaining = target;
  omega_dfs(cands, degs, 0, remaining, mono, 0, raw);
  const bool negate = norm(t) % 2 == 1;
  for (const auto& [m, c] : raw.terms()) out.add_term(sorted(m), negate ? mpq_class(-c) : c);
  return out;
}

// x_k -> word images; sigma_k(e) -> sigma_of(k, image(e)).
SigmaPoly substitute_words(const SigmaPoly& f, const Substitution& s) {
  SigmaPoly out(s.ring(), s.target());
  std::map<std::pair<std::uint32_t, Word>, SigmaPoly> memo;
  for (const auto& [m, c] : f.terms()) {
    SigmaPoly term = SigmaPoly::constant(s.ring(), s.target(), c);
    for (const auto& [g, e] : m.factors) {
      auto key = std::make_pair(g.t, g.word);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, sigma_of(g.t, s.apply(g.word))).first;
      term = term * it->second.pow(e);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

SigmaPoly sigma_of_word(std::uint32_t t, const Word& w, const CoeffRing& ring) {
  if (t == 0) return SigmaPoly::constant(ring, w.alphabet(), 1);
  CanonicalClass c = canonicalize(w);
  if (c.exponent == 1) return SigmaPoly::generator(ring, t, c.rep);
  return power_formula(t, c.exponent, ring, c.rep);
}

}  // namespace

const SigmaPoly& sigma_multi_letters(const DegreeVector& t) {
  static std::mutex mutex;
  static std::map<DegreeVector, SigmaPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(t); it != cache.end()) return it->second;
  }
  SigmaPoly value = compute_sigma_multi_letters(t);
  std::lock_guard lock(mutex);
  return cache.emplace(t, std::move(value)).first->second;
}

SigmaPoly sigma_multi(const DegreeVector& t, const std::vector<LinComb>& args) {
  if (args.size() != t.size()) {
    throw InvalidArgument("sigma_multi: " + std::to_string(t.size()) + " degrees but " + std::to_string(args.size()) +
                          " arguments");
  }
  if (args.empty()) throw InvalidArgument("sigma_multi needs at least one argument");
  const CoeffRing ring = args.front().ring();
  const Alphabet alphabet = args.front().alphabet();
  Substitution s(ring, alphabet);
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].alphabet() != alphabet) throw AlphabetMismatch("sigma_multi arguments over different alphabets");
    s.set(static_cast<std::uint32_t>(i + 1), args[i]);
  }
  return substitute_words(sigma_multi_letters(t).in_ring(ring), s);
}

SigmaPoly sigma_multi(const DegreeVector& t, const std::vector<Word>& args, CoeffRing ring) {
  std::vector<LinComb> l;
  for (const Word& w : args) l.emplace_back(ring, w);
  return sigma_multi(t, l);
}

SigmaPoly amitsur_F(std::uint32_t t, const std::vector<LinComb>& args) {
  if (args.empty()) throw InvalidArgument("amitsur_F needs at least one argument");
  SigmaPoly out(args.front().ring(), args.front().alphabet());
  DegreeVector tv(args.size(), 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == tv.size()) {
      tv[i] = left;
      out += sigma_multi(tv, args);
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      tv[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, t);
  return out;
}

SigmaPoly power_formula(std::uint32_t t, std::uint32_t l, CoeffRing ring) {
  return power_formula(t, l, ring, Word::letter(1));
}

SigmaPoly power_formula(std::uint32_t t, std::uint32_t l, CoeffRing ring, const Word& base) {
  const ElemPoly& e = power_formula_elementary(t, l);
  SigmaPoly out(ring, base.alphabet());
  for (const auto& [mono, c] : e) {
    SigmaMonomial m;
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (mono[k]) m.factors.emplace_back(SigmaGen{static_cast<std::uint32_t>(k + 1), base}, mono[k]);
    }
    out.add_term(sorted(std::move(m)), c);
  }
  return out;
}

SigmaPoly sigma_of(std::uint32_t t, const LinComb& a) {
  const CoeffRing& ring = a.ring();
  if (t == 0) return SigmaPoly::constant(ring, a.alphabet(), 1);
  if (a.is_zero()) return SigmaPoly(ring, a.alphabet());
  if (a.terms().size() == 1) {
    const auto& [w, c] = *a.terms().begin();
    mpq_class scale = 1;
    for (std::uint32_t i = 0; i < t; ++i) scale *= c;
    return sigma_of_word(t, w, ring).scaled(scale);
  }
  std::vector<LinComb> parts;
  for (const auto& [w, c] : a.terms()) parts.emplace_back(ring, w, c);
  return amitsur_F(t, parts);
}

SigmaPoly substitute(const SigmaPoly& f, const Substitution& s) { return substitute_words(f.in_ring(s.ring()), s); }

MixedElement substitute(const MixedElement& f, const Substitution& s) {
  MixedElement out(s.ring(), s.target());
  for (const auto& [w, coef] : f.terms()) {
    SigmaPoly c = substitute(coef, s);
    if (!w) {
      out += MixedElement::scalar(c);
      continue;
    }
    const LinComb image = s.apply(*w);
    for (const auto& [word, v] : image.terms()) out.add_term(c.scaled(v), word);
  }
  return out;
}

namespace {

std::vector<std::optional<LinComb>> powers_of(std::uint32_t t, const LinComb& a) {
  std::vector<std::optional<LinComb>> out{std::nullopt};
  for (std::uint32_t i = 1; i <= t; ++i) out.push_back(i == 1 ? a : *out.back() * a);
  return out;
}

}  // namespace

MixedElement chi(std::uint32_t t, const LinComb& a) {
  const auto pw = powers_of(t, a);
  MixedElement out(a.ring(), a.alphabet());
  for (std::uint32_t i = 0; i <= t; ++i) {
    SigmaPoly c = sigma_of(i, a);
    if (i % 2 == 1) c = -c;
    const auto& p = pw[t - i];
    if (!p) {
      out.add_term(c, std::nullopt);
      continue;
    }
    for (const auto& [w, v] : p->terms()) out.add_term(c.scaled(v), w);
  }
  return out;
}

MixedExpr chi_expr(std::uint32_t t, const LinComb& a) {
  const auto pw = powers_of(t, a);
  MixedExpr out(a.ring(), a.alphabet());
  for (std::uint32_t i = 0; i <= t; ++i) {
    SigmaExprTree c = i == 0 ? SigmaExprTree::constant(a.ring(), a.alphabet(), 1) : SigmaExprTree::sigma(i, a);
    if (i % 2 == 1) c = -c;
    const auto& p = pw[t - i];
    if (!p) {
      out.add_term(c, std::nullopt);
      continue;
    }
    for (const auto& [w, v] : p->terms()) {
      out.add_term(c * SigmaExprTree::constant(a.ring(), a.alphabet(), v), w);
    }
  }
  return out;
}

SigmaPoly normalize(const SigmaExprTree& e) {
  switch (e.kind()) {
    case SigmaExprTree::Kind::Constant:
      return SigmaPoly::constant(e.ring(), e.alphabet(), e.value());
    case SigmaExprTree::Kind::Sigma:
      return sigma_of(e.t(), e.arg());
    case SigmaExprTree::Kind::Normal:
      return e.poly();
    case SigmaExprTree::Kind::Sum: {
      SigmaPoly out(e.ring(), e.alphabet());
      for (const auto& c : e.children()) out += normalize(c);
      return out;
    }
    case SigmaExprTree::Kind::Product: {
      SigmaPoly out = SigmaPoly::constant(e.ring(), e.alphabet(), 1);
      for (const auto& c : e.children()) {
        out = out * normalize(c);
        if (out.is_zero()) break;
      }
      return out;
    }
  }
  throw InternalError("malformed expression tree");
}

MixedElement normalize(const MixedExpr& e) {
  MixedElement out(e.ring(), e.alphabet());
  for (const auto& [f, w] : e.terms()) out.add_term(normalize(f), w);
  return out;
}

SigmaPoly partial_linearization(std::uint32_t t, const DegreeVector& tv, CoeffRing ring) {
  if (norm(tv) != t) {
    throw InvalidArgument("partial linearization of sigma_" + std::to_string(t) + " at " + to_string(tv) +
                          " has mismatched degree");
  }
  const CoeffRing q = CoeffRing::rationals();
  MultiDegree bound(tv.begin(), tv.end());
  trim(bound);
  auto prune = [&](const SigmaPoly& f) {
    SigmaPoly r(q, Alphabet::GL);
    for (const auto& [m, c] : f.terms()) {
      if (fits_within(m.multidegree(), bound)) r.add_term(m, c);
    }
    return r;
  };

  // tr(a^k) for a = sum x_i, restricted to words of multidegree within the bound.
  std::map<std::uint32_t, SigmaPoly> trace_powers;
  auto trace_power = [&](std::uint32_t k) -> const SigmaPoly& {
    if (auto it = trace_powers.find(k); it != trace_powers.end()) return it->second;
    SigmaPoly acc(q, Alphabet::GL);
    std::vector<Letter> prefix;
    MultiDegree used(bound.size(), 0);
    std::function<void()> rec = [&] {
      if (prefix.size() == k) {
        acc += sigma_of_word(1, Word(prefix, Alphabet::GL), q);
        return;
      }
      for (std::uint32_t i = 0; i < bound.size(); ++i) {
        if (used[i] == bound[i]) continue;
        ++used[i];
        prefix.push_back(Letter{i + 1, false});
        rec();
        prefix.pop_back();
        --used[i];
      }
    };
    rec();
    return trace_powers.emplace(k, prune(acc)).first->second;
  };

  SigmaPoly total(q, Alphabet::GL);
  for (const Partition& mu : partitions(t)) {
    SigmaPoly term = SigmaPoly::constant(q, Alphabet::GL, 1);
    for (std::uint32_t part : mu) term = prune(term * trace_power(part));
    mpq_class scale(mpz_class((t - mu.size()) % 2 == 0 ? 1 : -1), centralizer_order(mu));
    scale.canonicalize();
    total += term.scaled(scale);
  }
  if (t == 0) total = SigmaPoly::constant(q, Alphabet::GL, 1);
  SigmaPoly result = total.component(bound);
  for (const auto& [m, c] : result.terms()) {
    if (c.get_den() != 1) throw InternalError("non-integral coefficient in a partial linearization");
  }
  return result.in_ring(ring);
}

bool repeat_identity_check(const DegreeVector& t) {
  const CoeffRing q = CoeffRing::rationals();
  if (t.empty()) return true;
  std::vector<Word> args;
  DegreeVector expanded;
  for (std::uint32_t i = 0; i < t[0]; ++i) {
    expanded.push_back(1);
    args.push_back(Word::letter(1));
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    expanded.push_back(t[i]);
    args.push_back(Word::letter(static_cast<std::uint32_t>(i + 1)));
  }
  std::vector<Word> letters;
  for (std::size_t i = 0; i < t.size(); ++i) letters.push_back(Word::letter(static_cast<std::uint32_t>(i + 1)));
  mpz_class fact = 1;
  for (std::uint32_t i = 2; i <= t[0]; ++i) fact *= i;
  SigmaPoly lhs = sigma_multi(t, letters, q).scaled(mpq_class(fact));
  SigmaPoly rhs = expanded.empty() ? SigmaPoly::constant(q, Alphabet::GL, 1) : sigma_multi(expanded, args, q);
  return lhs == rhs;
}

SigmaPoly gl_key_rhs(std::uint32_t k, std::uint32_t t, CoeffRing ring) {
  const Word x0 = Word::letter(1);
  const Word x = Word::letter(2);
  SigmaPoly out(ring, Alphabet::GL);
  std::vector<std::uint32_t> alpha(k + 1, 0);  // alpha[i] multiplies x0^i x, i >= 1
  std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t i, std::uint32_t x0_used,
                                                                              std::uint32_t x_used) {
    if (i > k) {
      const std::uint32_t a0 = k - x0_used;
      const std::uint32_t a = t - x_used;
      DegreeVector delta{a};
      std::vector<Word> args{x};
      std::uint32_t d = 0;
      for (std::uint32_t j = 1; j <= k; ++j) {
        if (alpha[j]) d = j;
      }
      for (std::uint32_t j = 1; j <= d; ++j) {
        delta.push_back(alpha[j]);
        args.push_back(x0.pow(j) * x);
      }
      SigmaPoly term = sigma_of_word(a0, x0, ring) * sigma_multi(delta, args, ring);
      out += (a0 + k) % 2 == 0 ? term : -term;
      return;
    }
    for (std::uint32_t m = 0; x0_used + m * i <= k && x_used + m <= t; ++m) {
      alpha[i] = m;
      rec(i + 1, x0_used + m * i, x_used + m);
    }
    alpha[i] = 0;
  };
  rec(1, 0, 0);
  return out;
}

std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::uint64_t q = p; q <= n; q *= p) {
    v += n / q;
    if (q > n / p) break;
  }
  return v;
}

Coeff base_p_beta(std::uint32_t t1, std::uint64_t p) {
  const CoeffRing fp = CoeffRing::mod_p(p);
  if (t1 == 0) throw InvalidArgument("base_p_beta needs t1 >= 1");
  mpz_class alpha = 1;
  std::uint64_t alpha_val = 0;
  std::uint64_t rest = t1;
  std::uint64_t power = 1;
  while (rest > 0) {
    const std::uint64_t digit = rest % p;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), power);
    for (std::uint64_t i = 0; i < digit; ++i) alpha *= f;
    alpha_val += digit * factorial_valuation(power, p);
    rest /= p;
    power *= p;
  }
  if (alpha_val != factorial_valuation(t1, p)) {
    throw InternalError("p-adic valuations of alpha and t1! differ for t1=" + std::to_string(t1));
  }
  mpz_class tf;
  mpz_fac_ui(tf.get_mpz_t(), t1);
  mpq_class beta(alpha, tf);
  beta.canonicalize();
  Coeff c(fp, beta);
  if (c.is_zero()) throw InternalError("base-p coefficient vanishes for t1=" + std::to_string(t1));
  return c;
}

}  // namespace matforms
