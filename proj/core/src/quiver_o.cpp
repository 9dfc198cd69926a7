#include "matforms/quiver_o.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "matforms/errors.hpp"

namespace matforms {

QuiverShape QuiverShape::standard(std::uint32_t u, std::uint32_t v, std::uint32_t w) {
  QuiverShape s;
  for (std::uint32_t i = 1; i <= u; ++i) s.set(i, ArrowRole::Loop);
  for (std::uint32_t i = 1; i <= v; ++i) s.set(u + i, ArrowRole::YArrow);
  for (std::uint32_t i = 1; i <= w; ++i) s.set(u + v + i, ArrowRole::ZArrow);
  return s;
}

QuiverShape& QuiverShape::set(std::uint32_t index, ArrowRole role) {
  roles_[index] = role;
  return *this;
}

std::optional<ArrowRole> QuiverShape::role(std::uint32_t index) const {
  auto it = roles_.find(index);
  if (it == roles_.end()) return std::nullopt;
  return it->second;
}

int QuiverShape::head(const Letter& l) const {
  auto r = role(l.index);
  if (!r) throw InvalidArgument("letter x" + std::to_string(l.index) + " is not an arrow of the quiver");
  switch (*r) {
    case ArrowRole::Loop:
      return l.transposed ? 2 : 1;
    case ArrowRole::YArrow:
      return 1;
    case ArrowRole::ZArrow:
      return 2;
  }
  return 0;
}

int QuiverShape::tail(const Letter& l) const {
  auto r = role(l.index);
  if (!r) throw InvalidArgument("letter x" + std::to_string(l.index) + " is not an arrow of the quiver");
  switch (*r) {
    case ArrowRole::Loop:
      return l.transposed ? 2 : 1;
    case ArrowRole::YArrow:
      return 2;
    case ArrowRole::ZArrow:
      return 1;
  }
  return 0;
}

bool QuiverShape::is_path(const Word& w) const {
  for (const Letter& l : w.letters()) {
    if (!role(l.index)) return false;
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (tail(w[i]) != head(w[i + 1])) return false;
  }
  return true;
}

bool QuiverShape::is_closed(const Word& w) const { return is_path(w) && head(w[0]) == tail(w[w.size() - 1]); }

namespace {

void path_dfs(const QuiverShape& shape, MultiDegree& remaining, std::size_t left, std::vector<Letter>& prefix,
              const std::function<void(const std::vector<Letter>&)>& emit) {
  if (left == 0) {
    emit(prefix);
    return;
  }
  const int need = prefix.empty() ? 0 : shape.tail(prefix.back());
  for (std::uint32_t i = 0; i < remaining.size(); ++i) {
    if (remaining[i] == 0 || !shape.role(i + 1)) continue;
    --remaining[i];
    for (bool tr : {false, true}) {
      Letter l{i + 1, tr};
      if (need != 0 && shape.head(l) != need) continue;
      prefix.push_back(l);
      path_dfs(shape, remaining, left - 1, prefix, emit);
      prefix.pop_back();
    }
    ++remaining[i];
  }
}

void check_support(const MultiDegree& mdeg, const QuiverShape& shape) {
  for (std::uint32_t i = 0; i < mdeg.size(); ++i) {
    if (mdeg[i] && !shape.role(i + 1)) {
      throw InvalidArgument("multidegree uses x" + std::to_string(i + 1) + ", which is not an arrow of the quiver");
    }
  }
}

}  // namespace

std::vector<Word> closed_paths(const MultiDegree& mdeg_in, const QuiverShape& shape) {
  static std::mutex mutex;
  static std::map<std::pair<MultiDegree, QuiverShape>, std::vector<Word>> cache;
  MultiDegree mdeg = mdeg_in;
  trim(mdeg);
  check_support(mdeg, shape);
  auto key = std::make_pair(mdeg, shape);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<Word> out;
  const std::uint32_t len = total(mdeg);
  if (len > 0) {
    // The maximal representative starts with the smallest index present, untransposed.
    std::uint32_t first = 0;
    while (mdeg[first] == 0) ++first;
    std::vector<Letter> prefix{Letter{first + 1, false}};
    --mdeg[first];
    path_dfs(shape, mdeg, len - 1, prefix, [&](const std::vector<Letter>& letters) {
      if (shape.tail(letters.back()) != shape.head(letters.front())) return;
      Word w(letters, Alphabet::O);
      if (!is_primitive(w)) return;
      if (canonicalize(w).rep == w) out.push_back(std::move(w));
    });
    ++mdeg[first];
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return compare(a, b) > 0; });
  std::lock_guard lock(mutex);
  return cache.emplace(std::move(key), out).first->second;
}

std::vector<Word> raw_paths(const MultiDegree& mdeg_in, const QuiverShape& shape, int head, int tail) {
  MultiDegree mdeg = mdeg_in;
  trim(mdeg);
  check_support(mdeg, shape);
  std::vector<Word> out;
  std::vector<Letter> prefix;
  path_dfs(shape, mdeg, total(mdeg), prefix, [&](const std::vector<Letter>& letters) {
    if (letters.empty()) return;
    if (shape.head(letters.front()) == head && shape.tail(letters.back()) == tail) out.emplace_back(letters, Alphabet::O);
  });
  return out;
}

std::uint32_t yz_degree(const Word& w, const QuiverShape& shape) {
  std::uint32_t d = 0;
  for (const Letter& l : w.letters()) {
    auto r = shape.role(l.index);
    if (r && *r != ArrowRole::Loop && !l.transposed) ++d;
  }
  return d;
}

namespace {

const CoeffRing kZ = CoeffRing::integers();

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

struct Candidate {
  Word word;
  MultiDegree deg;
  std::uint32_t weight;  // yz degree + 1
};

void omega_dfs(const std::vector<Candidate>& cands, std::size_t from, MultiDegree& remaining, SigmaMonomial& mono,
               std::uint32_t xi, SigmaPoly& out) {
  if (std::all_of(remaining.begin(), remaining.end(), [](std::uint32_t x) { return x == 0; })) {
    SigmaMonomial m = mono;
    std::sort(m.factors.begin(), m.factors.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.add_term(m, xi % 2 == 0 ? 1 : -1);
    return;
  }
  for (std::size_t i = from; i < cands.size(); ++i) {
    const MultiDegree& d = cands[i].deg;
    if (!fits_within(d, remaining)) continue;
    for (std::uint32_t k = 1;; ++k) {
      bool ok = true;
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (d[j] * k > remaining[j]) ok = false;
      }
      if (!ok) break;
      for (std::size_t j = 0; j < d.size(); ++j) remaining[j] -= d[j] * k;
      mono.factors.emplace_back(SigmaGen{k, cands[i].word}, 1);
      omega_dfs(cands, i + 1, remaining, mono, xi + k * cands[i].weight, out);
      mono.factors.pop_back();
      for (std::size_t j = 0; j < d.size(); ++j) remaining[j] += d[j] * k;
    }
  }
}

SigmaPoly compute_sigma_trs(const DegreeVector& t, const DegreeVector& r, const DegreeVector& s) {
  const auto u = static_cast<std::uint32_t>(t.size());
  const auto v = static_cast<std::uint32_t>(r.size());
  const auto w = static_cast<std::uint32_t>(s.size());
  QuiverShape shape = QuiverShape::standard(u, v, w);
  MultiDegree target;
  target.insert(target.end(), t.begin(), t.end());
  target.insert(target.end(), r.begin(), r.end());
  target.insert(target.end(), s.begin(), s.end());
  trim(target);
  if (target.empty()) return SigmaPoly::constant(kZ, Alphabet::O, 1);

  std::vector<MultiDegree> subs;
  MultiDegree cur(target.size(), 0);
  sub_degrees(target, 0, cur, subs);
  std::vector<Candidate> cands;
  for (const MultiDegree& d : subs) {
    MultiDegree dd = d;
    trim(dd);
    bool supported = true;
    for (std::uint32_t i = 0; i < dd.size(); ++i) {
      if (dd[i] && !shape.role(i + 1)) supported = false;
    }
    if (!supported) continue;
    for (const Word& e : closed_paths(dd, shape)) {
      MultiDegree ed = e.multidegree();
      ed.resize(target.size(), 0);
      cands.push_back({e, std::move(ed), yz_degree(e, shape) + 1});
    }
  }
  SigmaPoly out(kZ, Alphabet::O);
  SigmaMonomial mono;
  MultiDegree remaining = target;
  omega_dfs(cands, 0, remaining, mono, 0, out);
  return norm(t) % 2 == 0 ? out : -out;
}

std::vector<LinComb> as_o(const std::vector<LinComb>& v) {
  std::vector<LinComb> out;
  for (const LinComb& l : v) out.push_back(l.alphabet() == Alphabet::O ? l : l.in_alphabet(Alphabet::O));
  return out;
}

std::vector<LinComb> to_lincombs(const std::vector<Word>& v, CoeffRing ring) {
  std::vector<LinComb> out;
  for (const Word& w : v) out.emplace_back(ring, w.alphabet() == Alphabet::O ? w : w.in_alphabet(Alphabet::O));
  return out;
}

}  // namespace

const SigmaPoly& sigma_trs_letters(const DegreeVector& t, const DegreeVector& r, const DegreeVector& s) {
  if (norm(r) != norm(s)) {
    throw InvalidArgument("sigma_{t;r;s} needs |r| = |s|, got " + to_string(r) + " and " + to_string(s));
  }
  if (t.empty() || r.empty() || s.empty()) throw InvalidArgument("sigma_{t;r;s} needs nonempty degree vectors");
  static std::mutex mutex;
  static std::map<std::tuple<DegreeVector, DegreeVector, DegreeVector>, SigmaPoly> cache;
  auto key = std::make_tuple(t, r, s);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  SigmaPoly value = compute_sigma_trs(t, r, s);
  std::lock_guard lock(mutex);
  return cache.emplace(std::move(key), std::move(value)).first->second;
}

SigmaPoly sigma_trs(const DegreeVector& t, const DegreeVector& r, const DegreeVector& s, const std::vector<LinComb>& a,
                    const std::vector<LinComb>& b, const std::vector<LinComb>& c) {
  if (a.size() != t.size() || b.size() != r.size() || c.size() != s.size()) {
    throw InvalidArgument("sigma_{t;r;s}: argument counts do not match the degree vectors");
  }
  const SigmaPoly& base = sigma_trs_letters(t, r, s);
  const CoeffRing ring = a.front().ring();
  Substitution sub(ring, Alphabet::O);
  std::uint32_t index = 1;
  for (const auto* group : {&a, &b, &c}) {
    for (const LinComb& l : as_o(*group)) sub.set(index++, l);
  }
  return substitute(base.in_ring(ring), sub);
}

SigmaPoly sigma_trs(const DegreeVector& t, const DegreeVector& r, const DegreeVector& s, const std::vector<Word>& a,
                    const std::vector<Word>& b, const std::vector<Word>& c, CoeffRing ring) {
  return sigma_trs(t, r, s, to_lincombs(a, ring), to_lincombs(b, ring), to_lincombs(c, ring));
}

namespace {

MixedElement cayley_family(std::uint32_t t, std::uint32_t r, bool zeta, const LinComb& a, const LinComb& b,
                           const LinComb& c) {
  const QuiverShape shape = QuiverShape::standard(1, 1, 1);
  MixedElement abstract(kZ, Alphabet::O);
  for (std::uint32_t i = 0; i <= t; ++i) {
    for (std::uint32_t j = 0; j <= r; ++j) {
      const SigmaPoly& coef = sigma_trs_letters({i}, {j}, {j});
      const std::uint32_t pi = t - i, pj = r - j;
      if (!zeta && pi == 0 && pj == 0) {
        abstract.add_term(i % 2 == 0 ? coef : -coef, std::nullopt);
        continue;
      }
      std::vector<Word> paths = zeta ? raw_paths({pi, pj, pj + 1}, shape, 2, 1) : raw_paths({pi, pj, pj}, shape, 1, 1);
      for (const Word& e : paths) {
        const bool negative = (i + yz_degree(e, shape)) % 2 == 1;
        abstract.add_term(negative ? -coef : coef, e);
      }
    }
  }
  const CoeffRing ring = a.ring();
  Substitution sub(ring, Alphabet::O);
  std::uint32_t index = 1;
  for (const LinComb& l : as_o({a, b, c})) sub.set(index++, l);
  return substitute(abstract.in_ring(ring), sub);
}

}  // namespace

MixedElement chi_tr(std::uint32_t t, std::uint32_t r, const LinComb& a, const LinComb& b, const LinComb& c) {
  return cayley_family(t, r, false, a, b, c);
}

MixedElement zeta_tr(std::uint32_t t, std::uint32_t r, const LinComb& a, const LinComb& b, const LinComb& c) {
  return cayley_family(t, r, true, a, b, c);
}

SigmaPoly o_key_lhs_1(std::uint32_t k, std::uint32_t t, std::uint32_t r, CoeffRing ring) {
  return sigma_trs_letters({k, t}, {r}, {r}).in_ring(ring);
}

SigmaPoly o_key_rhs_1(std::uint32_t k, std::uint32_t t, std::uint32_t r, CoeffRing ring) {
  const Word x0 = Word::letter(1, Alphabet::O);
  const Word x0t = Word::letter(1, Alphabet::O, true);
  const Word x = Word::letter(2, Alphabet::O);
  const Word y = Word::letter(3, Alphabet::O);
  const Word z = Word::letter(4, Alphabet::O);
  auto x0_pow = [&](std::uint32_t i) { return x0.pow(i); };
  auto x0t_pow = [&](std::uint32_t i) { return x0t.pow(i); };

  // Items of positive x0-cost: e_i = x0^i x, u_i = x0^i y, v_i = y (x0')^i, w_ij = x0^i y (x0')^j.
  struct Item {
    Word arg;
    std::uint32_t cost;
    bool x_type;
  };
  std::vector<Item> items;
  for (std::uint32_t i = 1; i <= k; ++i) items.push_back({x0_pow(i) * x, i, true});
  for (std::uint32_t i = 1; i <= k; ++i) items.push_back({x0_pow(i) * y, i, false});
  for (std::uint32_t i = 1; i <= k; ++i) items.push_back({y * x0t_pow(i), i, false});
  for (std::uint32_t i = 1; i <= k; ++i) {
    for (std::uint32_t j = 1; i + j <= k; ++j) items.push_back({x0_pow(i) * y * x0t_pow(j), i + j, false});
  }

  SigmaPoly out(ring, Alphabet::O);
  std::vector<std::uint32_t> mult(items.size(), 0);
  std::function<void(std::size_t, std::uint32_t, std::uint32_t, std::uint32_t)> rec =
      [&](std::size_t pos, std::uint32_t x0_used, std::uint32_t x_used, std::uint32_t y_used) {
        if (pos == items.size()) {
          const std::uint32_t a0 = k - x0_used;
          DegreeVector tv{t - x_used}, rv{r - y_used}, sv{r};
          std::vector<Word> ta{x}, ra{y}, sa{z};
          for (std::size_t i = 0; i < items.size(); ++i) {
            if (!mult[i]) continue;
            (items[i].x_type ? tv : rv).push_back(mult[i]);
            (items[i].x_type ? ta : ra).push_back(items[i].arg);
          }
          SigmaPoly term = sigma_of(a0, LinComb(ring, x0)) * sigma_trs(tv, rv, sv, ta, ra, sa, ring);
          out += (a0 + k) % 2 == 0 ? term : -term;
          return;
        }
        const Item& it = items[pos];
        for (std::uint32_t m = 0;; ++m) {
          const std::uint32_t nx0 = x0_used + m * it.cost;
          const std::uint32_t nx = x_used + (it.x_type ? m : 0);
          const std::uint32_t ny = y_used + (it.x_type ? 0 : m);
          if (nx0 > k || nx > t || ny > r) break;
          mult[pos] = m;
          rec(pos + 1, nx0, nx, ny);
        }
        mult[pos] = 0;
      };
  rec(0, 0, 0, 0);
  return out;
}

SigmaPoly o_key_lhs_2(std::uint32_t t, std::uint32_t r, std::uint32_t s, CoeffRing ring) {
  return sigma_trs_letters({t}, {r, s}, {r + s}).in_ring(ring);
}

SigmaPoly o_key_rhs_2(std::uint32_t t, std::uint32_t r, std::uint32_t s, CoeffRing ring) {
  const Word x = Word::letter(1, Alphabet::O);
  const Word y0 = Word::letter(2, Alphabet::O);
  const Word y = Word::letter(3, Alphabet::O);
  const Word z = Word::letter(4, Alphabet::O);
  const Word zt = Word::letter(4, Alphabet::O, true);
  const Word xt = Word::letter(1, Alphabet::O, true);
  SigmaPoly out(ring, Alphabet::O);
  for (std::uint32_t b1 = 0; b1 <= std::min(t, r); ++b1) {
    const std::uint32_t alpha = t - b1;
    for (std::uint32_t a1 = 0; a1 <= r - b1; ++a1) {
      const std::uint32_t a2 = r - b1 - a1;
      const std::uint32_t gamma = s + b1;
      SigmaPoly term = sigma_trs({alpha, a1, a2}, {s, b1}, {gamma}, {x, y0 * z, y0 * zt}, {y, y0 * xt}, {z}, ring);
      out += (a2 + r) % 2 == 0 ? term : -term;
    }
  }
  return out;
}

const char* phi_kind_name(PhiKind kind) {
  switch (kind) {
    case PhiKind::GlSets:
      return "gl_sets";
    case PhiKind::OSets1:
      return "o_sets1";
    case PhiKind::OSets2:
      return "o_sets2";
  }
  return "?";
}

Alphabet phi_alphabet(PhiKind kind) { return kind == PhiKind::GlSets ? Alphabet::GL : Alphabet::O; }

namespace {

std::uint32_t pair_index(std::uint32_t i, std::uint32_t j) {
  const std::uint32_t n = i + j - 2;
  return n * (n + 1) / 2 + (j - 1);
}

std::pair<std::uint32_t, std::uint32_t> unpair(std::uint32_t k) {
  std::uint32_t n = 0;
  while ((n + 1) * (n + 2) / 2 <= k) ++n;
  const std::uint32_t j = k - n * (n + 1) / 2 + 1;
  return {n + 2 - j, j};
}

[[noreturn]] void foreign(PhiKind kind, const std::string& what) {
  throw InvalidArgument(std::string("letter ") + what + " is foreign to the source of " + phi_kind_name(kind));
}

}  // namespace

std::uint32_t encode_source(PhiKind kind, const SourceLetter& s) {
  using F = SourceLetter::Family;
  switch (kind) {
    case PhiKind::GlSets:
      if (s.family == F::X0) return 1;
      if (s.family == F::X) return 2;
      if (s.family == F::E && s.i >= 1) return 2 + s.i;
      break;
    case PhiKind::OSets1:
      if (s.family == F::X0) return 1;
      if (s.family == F::X) return 2;
      if (s.family == F::Y) return 3;
      if (s.family == F::Z) return 4;
      if (s.i >= 1 && s.family == F::E) return 5 + 4 * (s.i - 1);
      if (s.i >= 1 && s.family == F::U) return 6 + 4 * (s.i - 1);
      if (s.i >= 1 && s.family == F::V) return 7 + 4 * (s.i - 1);
      if (s.i >= 1 && s.j >= 1 && s.family == F::W) return 8 + 4 * pair_index(s.i, s.j);
      break;
    case PhiKind::OSets2:
      if (s.family == F::X) return 1;
      if (s.family == F::Y) return 3;
      if (s.family == F::Z) return 4;
      if (s.family == F::E && (s.i == 1 || s.i == 2)) return 4 + s.i;
      if (s.family == F::Y1) return 7;
      break;
  }
  foreign(kind, "family " + std::to_string(static_cast<int>(s.family)));
}

SourceLetter decode_source(PhiKind kind, std::uint32_t index) {
  using F = SourceLetter::Family;
  switch (kind) {
    case PhiKind::GlSets:
      if (index == 1) return {F::X0};
      if (index == 2) return {F::X};
      if (index >= 3) return {F::E, index - 2};
      break;
    case PhiKind::OSets1:
      if (index == 1) return {F::X0};
      if (index == 2) return {F::X};
      if (index == 3) return {F::Y};
      if (index == 4) return {F::Z};
      if (index >= 5) {
        const std::uint32_t k = (index - 5) / 4;
        switch ((index - 5) % 4) {
          case 0:
            return {F::E, k + 1};
          case 1:
            return {F::U, k + 1};
          case 2:
            return {F::V, k + 1};
          default: {
            auto [i, j] = unpair(k);
            return {F::W, i, j};
          }
        }
      }
      break;
    case PhiKind::OSets2:
      if (index == 1) return {F::X};
      if (index == 3) return {F::Y};
      if (index == 4) return {F::Z};
      if (index == 5 || index == 6) return {F::E, index - 4};
      if (index == 7) return {F::Y1};
      break;
  }
  foreign(kind, "x" + std::to_string(index));
}

std::uint32_t phi_weight(PhiKind kind, std::uint32_t index) {
  const SourceLetter s = decode_source(kind, index);
  switch (s.family) {
    case SourceLetter::E:
      return kind == PhiKind::OSets2 ? 2 : s.i + 1;
    case SourceLetter::U:
    case SourceLetter::V:
      return s.i + 1;
    case SourceLetter::W:
      return s.i + s.j + 1;
    case SourceLetter::Y1:
      return 2;
    default:
      return 1;
  }
}

QuiverShape phi_source_shape(PhiKind kind, std::uint32_t max_index) {
  QuiverShape shape;
  if (kind == PhiKind::GlSets) return shape;
  for (std::uint32_t index = 1; index <= max_index; ++index) {
    if (kind == PhiKind::OSets2 && (index == 2 || index > 7)) continue;
    const SourceLetter s = decode_source(kind, index);
    switch (s.family) {
      case SourceLetter::X0:
      case SourceLetter::X:
      case SourceLetter::E:
        shape.set(index, ArrowRole::Loop);
        break;
      case SourceLetter::Z:
        shape.set(index, ArrowRole::ZArrow);
        break;
      default:
        shape.set(index, ArrowRole::YArrow);
        break;
    }
  }
  return shape;
}

QuiverShape phi_target_shape(PhiKind kind) {
  switch (kind) {
    case PhiKind::GlSets:
      return QuiverShape();
    case PhiKind::OSets1:
      return QuiverShape::standard(2, 1, 1);
    case PhiKind::OSets2:
      return QuiverShape::standard(1, 2, 1);
  }
  return QuiverShape();
}

namespace {

Word letter_image(PhiKind kind, const Letter& l) {
  const Alphabet a = phi_alphabet(kind);
  const SourceLetter s = decode_source(kind, l.index);
  auto L = [&](std::uint32_t i, bool tr = false) { return Word::letter(i, a, tr); };
  std::optional<Word> img;
  switch (kind) {
    case PhiKind::GlSets:
      img = s.family == SourceLetter::X0 ? L(1) : s.family == SourceLetter::X ? L(2) : L(1).pow(s.i) * L(2);
      break;
    case PhiKind::OSets1:
      switch (s.family) {
        case SourceLetter::X0:
          img = L(1);
          break;
        case SourceLetter::X:
          img = L(2);
          break;
        case SourceLetter::Y:
          img = L(3);
          break;
        case SourceLetter::Z:
          img = L(4);
          break;
        case SourceLetter::E:
          img = L(1).pow(s.i) * L(2);
          break;
        case SourceLetter::U:
          img = L(1).pow(s.i) * L(3);
          break;
        case SourceLetter::V:
          img = L(3) * L(1, true).pow(s.i);
          break;
        case SourceLetter::W:
          img = L(1).pow(s.i) * L(3) * L(1, true).pow(s.j);
          break;
        default:
          break;
      }
      break;
    case PhiKind::OSets2:
      switch (s.family) {
        case SourceLetter::X:
          img = L(1);
          break;
        case SourceLetter::Y:
          img = L(3);
          break;
        case SourceLetter::Z:
          img = L(4);
          break;
        case SourceLetter::E:
          img = L(2) * L(4, s.i == 2);
          break;
        case SourceLetter::Y1:
          img = L(2) * L(1, true);
          break;
        default:
          break;
      }
      break;
  }
  if (!img) foreign(kind, "x" + std::to_string(l.index));
  return l.transposed ? transpose(*img) : *img;
}

}  // namespace

Word phi_map(PhiKind kind, const Word& w) {
  if (w.alphabet() != phi_alphabet(kind)) throw AlphabetMismatch(std::string(phi_kind_name(kind)) + " expects another alphabet");
  for (const Letter& l : w.letters()) {
    const SourceLetter s = decode_source(kind, l.index);
    if (s.family == SourceLetter::X0 && (w.size() > 1 || l.transposed)) {
      throw InvalidArgument("x0 lies in the source only as a standalone element");
    }
  }
  Word out = letter_image(kind, w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) out = out * letter_image(kind, w[i]);
  return out;
}

std::optional<Word> phi_inverse(PhiKind kind, const Word& w) {
  if (w.alphabet() != phi_alphabet(kind)) return std::nullopt;
  const Alphabet a = phi_alphabet(kind);
  using F = SourceLetter::Family;
  std::vector<Letter> out;
  auto emit = [&](SourceLetter s, bool tr) { out.push_back(Letter{encode_source(kind, s), tr}); };
  const auto& ls = w.letters();
  const std::size_t n = ls.size();
  auto is = [&](std::size_t p, std::uint32_t index, bool tr) {
    return p < n && ls[p].index == index && ls[p].transposed == tr;
  };
  auto run = [&](std::size_t p, std::uint32_t index, bool tr) {
    std::size_t q = p;
    while (is(q, index, tr)) ++q;
    return static_cast<std::uint32_t>(q - p);
  };

  switch (kind) {
    case PhiKind::GlSets: {
      if (n == 1 && is(0, 1, false)) return w;
      std::size_t p = 0;
      while (p < n) {
        const std::uint32_t i = run(p, 1, false);
        if (!is(p + i, 2, false)) return std::nullopt;
        if (i == 0) {
          emit({F::X}, false);
        } else {
          emit({F::E, i}, false);
        }
        p += i + 1;
      }
      break;
    }
    case PhiKind::OSets1: {
      if (n == 1 && is(0, 1, false)) return w;
      std::size_t p = 0;
      while (p < n) {
        const std::uint32_t i = run(p, 1, false);
        const std::size_t q = p + i;
        if (q >= n) return std::nullopt;
        const Letter l = ls[q];
        if (l.index == 2 && !l.transposed) {
          emit(i ? SourceLetter{F::E, i} : SourceLetter{F::X}, false);
          p = q + 1;
        } else if (l.index == 3) {
          const std::uint32_t j = run(q + 1, 1, true);
          if (!l.transposed) {
            if (i && j) emit({F::W, i, j}, false);
            else if (i) emit({F::U, i}, false);
            else if (j) emit({F::V, j}, false);
            else emit({F::Y}, false);
          } else {
            // transposes: w_ij' = x0^j y' (x0')^i, v_i' = x0^i y', u_i' = y' (x0')^i
            if (i && j) emit({F::W, j, i}, true);
            else if (i) emit({F::V, i}, true);
            else if (j) emit({F::U, j}, true);
            else emit({F::Y}, true);
          }
          p = q + 1 + j;
        } else if (i > 0) {
          return std::nullopt;
        } else if (l.index == 2 && l.transposed) {
          const std::uint32_t j = run(q + 1, 1, true);
          emit(j ? SourceLetter{F::E, j} : SourceLetter{F::X}, true);
          p = q + 1 + j;
        } else if (l.index == 4) {
          emit({F::Z}, l.transposed);
          p = q + 1;
        } else {
          return std::nullopt;
        }
      }
      break;
    }
    case PhiKind::OSets2: {
      std::size_t p = 0;
      while (p < n) {
        const Letter l = ls[p];
        if (l.index == 2 && !l.transposed) {
          if (is(p + 1, 4, false)) emit({F::E, 1}, false);
          else if (is(p + 1, 4, true)) emit({F::E, 2}, false);
          else if (is(p + 1, 1, true)) emit({F::Y1}, false);
          else return std::nullopt;
          p += 2;
        } else if (is(p + 1, 2, true) && l.index != 2) {
          if (l.index == 4 && l.transposed) emit({F::E, 1}, true);
          else if (l.index == 4) emit({F::E, 2}, true);
          else if (l.index == 1 && !l.transposed) emit({F::Y1}, true);
          else return std::nullopt;
          p += 2;
        } else if (l.index == 1 || l.index == 3 || l.index == 4) {
          emit(l.index == 1 ? SourceLetter{F::X} : l.index == 3 ? SourceLetter{F::Y} : SourceLetter{F::Z}, l.transposed);
          p += 1;
        } else {
          return std::nullopt;
        }
      }
      break;
    }
  }
  if (out.empty()) return std::nullopt;
  return Word(std::move(out), a);
}

namespace {

std::vector<std::uint32_t> source_letters(PhiKind kind, std::uint32_t max_degree) {
  std::vector<std::uint32_t> out;
  switch (kind) {
    case PhiKind::GlSets:
      for (std::uint32_t idx = 2; idx <= max_degree + 1; ++idx) out.push_back(idx);
      break;
    case PhiKind::OSets1:
      for (std::uint32_t idx = 2; idx < 8 + 4 * max_degree * max_degree; ++idx) {
        if (phi_weight(kind, idx) <= max_degree) out.push_back(idx);
      }
      break;
    case PhiKind::OSets2:
      for (std::uint32_t idx : {1u, 3u, 4u, 5u, 6u, 7u}) {
        if (phi_weight(kind, idx) <= max_degree) out.push_back(idx);
      }
      break;
  }
  return out;
}

void all_target_degrees(std::uint32_t letters, std::uint32_t max_total, MultiDegree& cur, std::size_t pos,
                        std::vector<MultiDegree>& out) {
  if (pos == letters) {
    if (total(cur) > 0) out.push_back(cur);
    return;
  }
  cur[pos] = 0;
  const std::uint32_t used = total(cur);
  for (std::uint32_t v = 0; used + v <= max_total; ++v) {
    cur[pos] = v;
    all_target_degrees(letters, max_total, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

}  // namespace

BijectionReport check_bijection(PhiKind kind, std::uint32_t max_degree) {
  BijectionReport rep;
  const Alphabet alpha = phi_alphabet(kind);
  const bool o_mode = alpha == Alphabet::O;
  const std::vector<std::uint32_t> letters = source_letters(kind, max_degree);
  const std::uint32_t max_index = letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end());
  const QuiverShape src_shape = phi_source_shape(kind, max_index);
  const QuiverShape tgt_shape = phi_target_shape(kind);
  std::size_t notes = 0;
  auto note = [&](bool& flag, const std::string& msg) {
    if (notes++ < 8) rep.detail += msg + "; ";
    flag = false;
  };

  std::map<Word, Word> image_to_word;
  std::map<Word, Word> target_class_to_source;
  std::map<Word, Word> source_class_to_target;
  std::set<Word> hit;

  std::vector<Letter> prefix;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t budget) {
    if (!prefix.empty()) {
      Word a(prefix, alpha);
      const bool closed = !o_mode || src_shape.tail(prefix.back()) == src_shape.head(prefix.front());
      if (closed) {
        ++rep.source_words;
        Word img = phi_map(kind, a);
        if (o_mode && !tgt_shape.is_closed(img)) note(rep.injective, "image of " + a.str() + " is not a closed path");
        auto back = phi_inverse(kind, img);
        if (!back || !(*back == a)) note(rep.unique_preimage, "preimage of " + img.str() + " is not " + a.str());
        auto [it, fresh] = image_to_word.emplace(img, a);
        if (!fresh && !(it->second == a)) note(rep.unique_preimage, "two words map to " + img.str());
        if (is_primitive(a) != is_primitive(img)) note(rep.primitivity, "primitivity differs at " + a.str());
        if (std::all_of(img.letters().begin(), img.letters().end(),
                        [&](const Letter& l) { return kind != PhiKind::OSets2 && l.index == 1 && !l.transposed; })) {
          note(rep.x0_handling, a.str() + " maps to a power of x0");
        }
        if (is_primitive(a)) {
          const Word sc = canonicalize(a).rep;
          const Word tc = canonicalize(img).rep;
          auto [t1, f1] = target_class_to_source.emplace(tc, sc);
          if (!f1 && !(t1->second == sc)) note(rep.injective, "classes of " + sc.str() + " and " + t1->second.str() + " collide");
          auto [s1, f2] = source_class_to_target.emplace(sc, tc);
          if (!f2 && !(s1->second == tc)) note(rep.injective, "class of " + sc.str() + " has two images");
          hit.insert(tc);
        }
      }
    }
    for (std::uint32_t idx : letters) {
      const std::uint32_t w = phi_weight(kind, idx);
      if (w > budget) continue;
      for (bool tr : {false, true}) {
        if (tr && !o_mode) continue;
        Letter l{idx, tr};
        if (o_mode && !prefix.empty() && src_shape.tail(prefix.back()) != src_shape.head(l)) continue;
        prefix.push_back(l);
        rec(budget - w);
        prefix.pop_back();
      }
    }
  };
  rec(max_degree);

  if (kind != PhiKind::OSets2) {
    const Word x0 = Word::letter(1, alpha);
    if (!(phi_map(kind, x0) == x0)) note(rep.x0_handling, "x0 is not fixed");
    auto back = phi_inverse(kind, x0);
    if (!back || !(*back == x0)) note(rep.x0_handling, "x0 has no standalone preimage");
    hit.insert(x0);
  }

  const std::uint32_t target_letters = kind == PhiKind::GlSets ? 2 : 4;
  std::vector<MultiDegree> degs;
  MultiDegree cur(target_letters, 0);
  all_target_degrees(target_letters, max_degree, cur, 0, degs);
  for (MultiDegree d : degs) {
    trim(d);
    std::vector<Word> classes;
    if (o_mode) {
      classes = closed_paths(d, tgt_shape);
    } else {
      classes = enumerate_reps(d, Alphabet::GL);
    }
    for (const Word& c : classes) {
      ++rep.target_classes;
      if (!hit.count(c)) note(rep.surjective, "class of " + c.str() + " is not hit");
    }
  }
  if (notes > 8) rep.detail += std::to_string(notes - 8) + " more";
  return rep;
}

}  // namespace matforms
