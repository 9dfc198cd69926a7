#include "matforms/generators.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "matforms/errors.hpp"
#include "matforms/quiver_o.hpp"

namespace matforms {

namespace {

std::vector<std::uint32_t> allowed_parts(std::uint32_t n, std::uint64_t p) {
  if (p != 0 && !is_prime(p)) throw InvalidArgument("characteristic must be 0 or a prime, got " + std::to_string(p));
  std::vector<std::uint32_t> parts{1};
  if (p != 0) {
    for (std::uint64_t q = p; q <= 2 * n; q *= p) parts.push_back(static_cast<std::uint32_t>(q));
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

/// Non-increasing sequences of allowed parts with sum exactly `sum`.
void partitions_into(const std::vector<std::uint32_t>& parts, std::uint32_t sum, std::size_t from, DegreeVector& cur,
                     std::vector<DegreeVector>& out) {
  if (sum == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < parts.size(); ++i) {
    if (parts[i] > sum) continue;
    cur.push_back(parts[i]);
    partitions_into(parts, sum - parts[i], i, cur, out);
    cur.pop_back();
  }
}

std::vector<DegreeVector> partitions_into(const std::vector<std::uint32_t>& parts, std::uint32_t sum) {
  std::vector<DegreeVector> out;
  DegreeVector cur;
  partitions_into(parts, sum, 0, cur, out);
  return out;
}

bool window_condition(std::uint32_t n, std::uint32_t size, std::uint32_t smallest) {
  return size == n + 1 || (n + 1 < size && size <= 2 * n && size - smallest <= n);
}

bool greater_first(const DegreeVector& a, const DegreeVector& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::string vec_str(const DegreeVector& v) { return to_string(v); }

}  // namespace

std::vector<DegreeVector> gl_degree_vectors(std::uint32_t n, std::uint64_t p) {
  if (n < 2) throw InvalidArgument("matrix size must be at least 2");
  const auto parts = allowed_parts(n, p);
  std::vector<DegreeVector> out;
  for (std::uint32_t m = n + 1; m <= 2 * n; ++m) {
    for (DegreeVector& t : partitions_into(parts, m)) {
      if (t.size() < 2) continue;
      if (window_condition(n, m, t.back())) out.push_back(std::move(t));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const DegreeVector& a, const DegreeVector& b) {
    if (norm(a) != norm(b)) return norm(a) < norm(b);
    return greater_first(a, b);
  });
  return out;
}

std::string TripleDegree::str() const { return vec_str(t) + ";" + vec_str(r) + ";" + vec_str(s); }

std::vector<TripleDegree> o_degree_triples(std::uint32_t n, std::uint64_t p) {
  if (n < 2) throw InvalidArgument("matrix size must be at least 2");
  if (p == 2) throw InvalidArgument("the O alphabet needs characteristic different from 2");
  const auto parts = allowed_parts(n, p);
  auto padded = [&](std::uint32_t sum) {
    if (sum == 0) return std::vector<DegreeVector>{DegreeVector{0}};
    return partitions_into(parts, sum);
  };
  std::vector<TripleDegree> out;
  for (std::uint32_t rs = 0; 2 * rs <= 2 * n; ++rs) {
    for (std::uint32_t ts = 0; ts + 2 * rs <= 2 * n; ++ts) {
      const std::uint32_t weight = ts + 2 * rs;
      if (weight <= n) continue;
      for (const DegreeVector& t : padded(ts)) {
        for (const DegreeVector& r : padded(rs)) {
          for (const DegreeVector& s : padded(rs)) {
            if (greater_first(s, r)) continue;
            std::uint32_t entries = 0, smallest = 2 * n + 1;
            for (const auto* v : {&t, &r, &s}) {
              for (std::uint32_t e : *v) {
                if (!e) continue;
                ++entries;
                smallest = std::min(smallest, e);
              }
            }
            if (entries < 2 || !window_condition(n, weight, smallest)) continue;
            out.push_back({t, r, s});
          }
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const TripleDegree& a, const TripleDegree& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a < b;
  });
  return out;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Amitsur:
      return "amitsur";
    case Family::Power:
      return "power";
    case Family::Cyclic:
      return "cyclic";
    case Family::Transpose:
      return "transpose";
    case Family::MultiLinearization:
      return "multi_linearization";
    case Family::Chi:
      return "chi";
    case Family::Zeta:
      return "zeta";
  }
  return "?";
}

std::size_t GeneratorSpec::arity() const {
  switch (family) {
    case Family::Amitsur:
    case Family::Cyclic:
      return 2;
    case Family::Power:
    case Family::Transpose:
      return 1;
    case Family::MultiLinearization:
      return alphabet == Alphabet::GL ? tv.size() : tv.size() + rv.size() + sv.size();
    case Family::Chi:
      return alphabet == Alphabet::GL ? 1 : 3;
    case Family::Zeta:
      return 3;
  }
  return 0;
}

std::string GeneratorSpec::parameters() const {
  std::string s;
  switch (family) {
    case Family::Amitsur:
    case Family::Cyclic:
    case Family::Transpose:
      s = "t=" + std::to_string(t);
      break;
    case Family::Power:
      s = "t=" + std::to_string(t) + " l=" + std::to_string(l);
      break;
    case Family::MultiLinearization:
      s = alphabet == Alphabet::GL ? "t=" + vec_str(tv) : "t=" + vec_str(tv) + " r=" + vec_str(rv) + " s=" + vec_str(sv);
      break;
    case Family::Chi:
    case Family::Zeta:
      s = alphabet == Alphabet::GL ? "t=" + std::to_string(t) : "t=" + std::to_string(t) + " r=" + std::to_string(r);
      break;
  }
  s += " args=(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + args[i].str();
  return s + ")";
}

namespace {

const Word& single_word(const LinComb& a, const char* what) {
  if (a.terms().size() != 1 || a.terms().begin()->second != 1) {
    throw InvalidArgument(std::string(what) + " needs a word argument, got " + a.str());
  }
  return a.terms().begin()->first;
}

LinComb power_of(const LinComb& a, std::uint32_t l) {
  LinComb r = a;
  for (std::uint32_t i = 1; i < l; ++i) r = r * a;
  return r;
}

}  // namespace

MixedExpr instantiate(const GeneratorSpec& g) {
  if (g.args.size() < g.arity()) {
    throw InvalidArgument(std::string(family_name(g.family)) + " needs " + std::to_string(g.arity()) +
                          " arguments, the letter budget gives " + std::to_string(g.args.size()));
  }
  const CoeffRing ring = g.args.front().ring();
  const Alphabet alpha = g.alphabet;
  using T = SigmaExprTree;
  MixedExpr out(ring, alpha);
  switch (g.family) {
    case Family::Amitsur:
      out = MixedExpr::scalar(T::sigma(g.t, g.args[0] + g.args[1]) - T::normal(amitsur_F(g.t, {g.args[0], g.args[1]})));
      break;
    case Family::Power: {
      const Word& a = single_word(g.args[0], "the power relation");
      Substitution sub(ring, alpha);
      sub.set(1, g.args[0]);
      SigmaPoly rhs = substitute(power_formula(g.t, g.l, ring).in_alphabet(alpha), sub).truncate(g.n);
      out = MixedExpr::scalar(T::sigma(g.t, LinComb(ring, a.pow(g.l))) - T::normal(rhs));
      break;
    }
    case Family::Cyclic: {
      const Word& a = single_word(g.args[0], "the cyclic relation");
      const Word& b = single_word(g.args[1], "the cyclic relation");
      out = MixedExpr::scalar(T::sigma(g.t, LinComb(ring, a * b)) - T::sigma(g.t, LinComb(ring, b * a)));
      break;
    }
    case Family::Transpose: {
      const Word& a = single_word(g.args[0], "the transpose relation");
      out = MixedExpr::scalar(T::sigma(g.t, LinComb(ring, a)) - T::sigma(g.t, LinComb(ring, transpose(a))));
      break;
    }
    case Family::MultiLinearization: {
      std::vector<Word> words;
      for (std::size_t i = 0; i < g.arity(); ++i) words.push_back(single_word(g.args[i], "a multilinear relation"));
      if (alpha == Alphabet::GL) {
        out = MixedExpr::from(sigma_multi(g.tv, words, ring));
      } else {
        const auto u = g.tv.size(), v = g.rv.size();
        std::vector<Word> a(words.begin(), words.begin() + u), b(words.begin() + u, words.begin() + u + v),
            c(words.begin() + u + v, words.end());
        out = MixedExpr::from(sigma_trs(g.tv, g.rv, g.sv, a, b, c, ring));
      }
      break;
    }
    case Family::Chi:
      out = alpha == Alphabet::GL ? chi_expr(g.t, g.args[0])
                                  : MixedExpr::from(chi_tr(g.t, g.r, g.args[0], g.args[1], g.args[2]));
      break;
    case Family::Zeta:
      out = MixedExpr::from(zeta_tr(g.t, g.r, g.args[0], g.args[1], g.args[2]));
      break;
  }
  return out.truncate(g.n);
}

namespace {

struct Sampler {
  std::mt19937_64 rng;
  Alphabet alphabet;
  CoeffRing ring = CoeffRing::integers();

  Word word(std::uint32_t max_len = 2) {
    const auto len = std::uniform_int_distribution<std::uint32_t>(1, max_len)(rng);
    std::vector<Letter> ls;
    for (std::uint32_t i = 0; i < len; ++i) {
      const auto idx = std::uniform_int_distribution<std::uint32_t>(1, 3)(rng);
      const bool tr = alphabet == Alphabet::O && std::uniform_int_distribution<int>(0, 1)(rng) == 1;
      ls.push_back(Letter{idx, tr});
    }
    return Word(ls, alphabet);
  }
  LinComb lincomb() {
    static const int coeffs[] = {-2, -1, 1, 2};
    LinComb a(ring, alphabet);
    const auto terms = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int i = 0; i < terms; ++i) a.add_term(word(), coeffs[std::uniform_int_distribution<int>(0, 3)(rng)]);
    if (a.is_zero()) a.add_term(word(), 1);
    return a;
  }
  LinComb word_arg() { return LinComb(ring, word()); }
};

LinComb letter_arg(std::uint32_t i, Alphabet a) { return LinComb(CoeffRing::integers(), Word::letter(i, a)); }

/// Adds the instance on distinct letters, then random substitution instances.
void add_family(std::vector<GeneratorSpec>& out, GeneratorSpec base, Sampler& sampler, std::uint32_t samples,
                bool word_args) {
  base.args.clear();
  for (std::size_t i = 0; i < base.arity(); ++i) base.args.push_back(letter_arg(static_cast<std::uint32_t>(i + 1), base.alphabet));
  out.push_back(base);
  for (std::uint32_t k = 0; k < samples; ++k) {
    GeneratorSpec g = base;
    g.sample = true;
    g.args.clear();
    for (std::size_t i = 0; i < g.arity(); ++i) g.args.push_back(word_args ? sampler.word_arg() : sampler.lincomb());
    out.push_back(std::move(g));
  }
}

void free_relations(std::vector<GeneratorSpec>& out, Alphabet alpha, std::uint32_t n, Sampler& sampler,
                    const SuiteOptions& o) {
  GeneratorSpec g;
  g.alphabet = alpha;
  g.n = n;
  for (std::uint32_t t = 1; t <= n; ++t) {
    g.family = Family::Amitsur;
    g.t = t;
    add_family(out, g, sampler, o.samples, false);
  }
  for (std::uint32_t t = 1; t <= n; ++t) {
    for (std::uint32_t l = 2; l <= n; ++l) {
      g.family = Family::Power;
      g.t = t;
      g.l = l;
      add_family(out, g, sampler, o.samples, true);
    }
  }
  g.l = 0;
  for (std::uint32_t t = 1; t <= n; ++t) {
    g.family = Family::Cyclic;
    g.t = t;
    add_family(out, g, sampler, o.samples, true);
  }
  if (alpha == Alphabet::O) {
    for (std::uint32_t t = 1; t <= n; ++t) {
      g.family = Family::Transpose;
      g.t = t;
      std::size_t at = out.size();
      add_family(out, g, sampler, o.samples, true);
      if (o.transpose_word_length > 1) {
        Sampler longer{std::mt19937_64(o.seed + 7919 * t), alpha};
        out[at].args = {LinComb(CoeffRing::integers(), longer.word(o.transpose_word_length))};
      }
    }
  }
}

}  // namespace

std::vector<GeneratorSpec> gl_generators(std::uint32_t n, std::uint64_t p, const SuiteOptions& o) {
  std::vector<GeneratorSpec> out;
  Sampler sampler{std::mt19937_64(o.seed), Alphabet::GL};
  free_relations(out, Alphabet::GL, n, sampler, o);
  GeneratorSpec g;
  g.alphabet = Alphabet::GL;
  g.n = n;
  g.family = Family::MultiLinearization;
  for (const DegreeVector& t : gl_degree_vectors(n, p)) {
    g.tv = t;
    add_family(out, g, sampler, o.samples, true);
  }
  g.tv.clear();
  g.family = Family::Chi;
  g.t = n;
  add_family(out, g, sampler, o.samples, false);
  return out;
}

std::vector<GeneratorSpec> o_generators(std::uint32_t n, std::uint64_t p, const SuiteOptions& o) {
  std::vector<GeneratorSpec> out;
  Sampler sampler{std::mt19937_64(o.seed), Alphabet::O};
  free_relations(out, Alphabet::O, n, sampler, o);
  GeneratorSpec g;
  g.alphabet = Alphabet::O;
  g.n = n;
  g.family = Family::MultiLinearization;
  for (const TripleDegree& d : o_degree_triples(n, p)) {
    g.tv = d.t;
    g.rv = d.r;
    g.sv = d.s;
    add_family(out, g, sampler, o.samples, true);
  }
  g.tv.clear();
  g.rv.clear();
  g.sv.clear();
  for (std::uint32_t t = 0; t <= n; ++t) {
    if ((n - t) % 2 == 0) {
      g.family = Family::Chi;
      g.t = t;
      g.r = (n - t) / 2;
      add_family(out, g, sampler, o.samples, false);
    }
    if (t + 1 <= n && (n - 1 - t) % 2 == 0) {
      g.family = Family::Zeta;
      g.t = t;
      g.r = (n - 1 - t) / 2;
      add_family(out, g, sampler, o.samples, false);
    }
  }
  return out;
}

bool SuiteReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const GeneratorResult& r) { return r.verdict.identity; });
}

SuiteReport verify_all(Alphabet alphabet, std::uint32_t n, std::uint64_t p, const VerifyOptions& verify,
                       const SuiteOptions& options) {
  SuiteReport report;
  report.alphabet = alphabet;
  report.n = n;
  report.p = p;
  const auto specs = alphabet == Alphabet::GL ? gl_generators(n, p, options) : o_generators(n, p, options);
  std::vector<MixedExpr> elements;
  elements.reserve(specs.size());
  for (const auto& s : specs) elements.push_back(instantiate(s));

  report.results.resize(specs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        VerifyOptions vo = verify;
        vo.n = n;
        const auto start = std::chrono::steady_clock::now();
        Verdict v = is_identity(elements[i], vo);
        const auto stop = std::chrono::steady_clock::now();
        report.results[i] = {specs[i], std::move(v), std::chrono::duration<double, std::milli>(stop - start).count()};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return report;
}

}  // namespace matforms
