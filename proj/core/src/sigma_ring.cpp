#include "matforms/sigma_ring.hpp"

#include <algorithm>

#include "matforms/errors.hpp"

namespace matforms {

std::string SigmaGen::str() const {
  if (t == 1) return "tr(" + word.str() + ")";
  return "s[" + std::to_string(t) + "](" + word.str() + ")";
}

bool operator<(const SigmaGen& a, const SigmaGen& b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  if (a.word.alphabet() != b.word.alphabet()) return a.word.alphabet() < b.word.alphabet();
  auto c = compare(a.word, b.word);
  if (c != 0) return c > 0;
  return a.t < b.t;
}

SigmaMonomial SigmaMonomial::operator*(const SigmaMonomial& other) const {
  SigmaMonomial r;
  r.factors.reserve(factors.size() + other.factors.size());
  auto i = factors.begin();
  auto j = other.factors.begin();
  while (i != factors.end() || j != other.factors.end()) {
    if (j == other.factors.end() || (i != factors.end() && i->first < j->first)) {
      r.factors.push_back(*i++);
    } else if (i == factors.end() || j->first < i->first) {
      r.factors.push_back(*j++);
    } else {
      r.factors.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::uint32_t SigmaMonomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [g, e] : factors) d += g.degree() * e;
  return d;
}

std::uint32_t SigmaMonomial::max_t() const {
  std::uint32_t m = 0;
  for (const auto& f : factors) m = std::max(m, f.first.t);
  return m;
}

MultiDegree SigmaMonomial::multidegree() const {
  MultiDegree d;
  for (const auto& [g, e] : factors) {
    MultiDegree w = g.word.multidegree();
    for (auto& x : w) x *= g.t * e;
    d = add(d, w);
  }
  return d;
}

std::string SigmaMonomial::str() const {
  std::string s;
  for (const auto& [g, e] : factors) {
    if (!s.empty()) s += '*';
    s += g.str();
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool operator<(const SigmaMonomial& a, const SigmaMonomial& b) {
  const std::uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first < y.first) return true;
                                        if (y.first < x.first) return false;
                                        return x.second > y.second;
                                      });
}

namespace {

std::string format_term(const mpq_class& c, const std::string& body, bool body_is_one) {
  if (body_is_one) return c.get_str();
  if (c == 1) return body;
  if (c == -1) return "-" + body;
  return c.get_str() + "*" + body;
}

void append_signed(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term.front() == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

}  // namespace

void check_ring_for_alphabet(const CoeffRing& ring, Alphabet alphabet) {
  if (alphabet == Alphabet::O && ring.characteristic() == 2) {
    throw InvalidArgument("the O alphabet requires a coefficient ring of characteristic other than 2");
  }
}

SigmaPoly::SigmaPoly(CoeffRing ring, Alphabet alphabet) : ring_(ring), alphabet_(alphabet) {
  check_ring_for_alphabet(ring, alphabet);
}

MixedElement::MixedElement(CoeffRing ring, Alphabet alphabet) : ring_(ring), alphabet_(alphabet) {
  check_ring_for_alphabet(ring, alphabet);
}

LinComb::LinComb(CoeffRing ring, Alphabet alphabet) : ring_(ring), alphabet_(alphabet) {
  check_ring_for_alphabet(ring, alphabet);
}

SigmaPoly SigmaPoly::constant(CoeffRing ring, Alphabet alphabet, const mpq_class& value) {
  SigmaPoly p(ring, alphabet);
  p.add_term(SigmaMonomial{}, value);
  return p;
}

SigmaPoly SigmaPoly::generator(CoeffRing ring, std::uint32_t t, const Word& word) {
  if (t == 0) throw InvalidArgument("sigma generators need t >= 1");
  CanonicalClass c = canonicalize(word);
  if (c.exponent != 1 || !(c.rep == word)) {
    throw InvalidArgument("sigma generator argument " + word.str() + " is not a canonical primitive word");
  }
  SigmaPoly p(ring, word.alphabet());
  p.add_term(SigmaMonomial{{{SigmaGen{t, word}, 1}}}, 1);
  return p;
}

SigmaPoly SigmaPoly::sigma(CoeffRing ring, std::uint32_t t, const Word& word) {
  if (t == 0) return constant(ring, word.alphabet(), 1);
  return generator(ring, t, word);
}

mpq_class SigmaPoly::constant_term() const {
  auto it = terms_.find(SigmaMonomial{});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void SigmaPoly::add_term(const SigmaMonomial& m, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, 0);
  it->second = ring_.reduce(it->second + c);
  if (sgn(it->second) == 0) terms_.erase(it);
}

void SigmaPoly::check_compatible(const SigmaPoly& o) const {
  if (!(ring_ == o.ring_)) throw RingMismatch("sigma polynomials over " + ring_.tag() + " and " + o.ring_.tag());
  if (alphabet_ != o.alphabet_) throw AlphabetMismatch("sigma polynomials over different alphabets");
}

SigmaPoly SigmaPoly::operator+(const SigmaPoly& o) const {
  SigmaPoly r = *this;
  r += o;
  return r;
}

SigmaPoly& SigmaPoly::operator+=(const SigmaPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SigmaPoly SigmaPoly::operator-(const SigmaPoly& o) const { return *this + (-o); }

SigmaPoly SigmaPoly::operator-() const { return scaled(-1); }

SigmaPoly SigmaPoly::operator*(const SigmaPoly& o) const {
  check_compatible(o);
  SigmaPoly r(ring_, alphabet_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  }
  return r;
}

SigmaPoly SigmaPoly::scaled(const mpq_class& c) const {
  SigmaPoly r(ring_, alphabet_);
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

SigmaPoly SigmaPoly::pow(std::uint32_t e) const {
  SigmaPoly r = constant(ring_, alphabet_, 1);
  for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

SigmaPoly SigmaPoly::truncate(std::uint32_t n) const {
  SigmaPoly r(ring_, alphabet_);
  for (const auto& [m, c] : terms_) {
    if (m.max_t() <= n) r.terms_.emplace(m, c);
  }
  return r;
}

SigmaPoly SigmaPoly::component(const MultiDegree& mdeg) const {
  MultiDegree target = mdeg;
  trim(target);
  SigmaPoly r(ring_, alphabet_);
  for (const auto& [m, c] : terms_) {
    if (m.multidegree() == target) r.terms_.emplace(m, c);
  }
  return r;
}

SigmaPoly SigmaPoly::in_ring(CoeffRing target) const {
  SigmaPoly r(target, alphabet_);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

SigmaPoly SigmaPoly::in_alphabet(Alphabet target) const {
  if (target == alphabet_) return *this;
  if (target == Alphabet::GL) throw AlphabetMismatch("cannot view an O sigma polynomial over GL");
  SigmaPoly r(ring_, target);
  for (const auto& [m, c] : terms_) {
    SigmaPoly term = constant(ring_, target, c);
    for (const auto& [g, e] : m.factors) {
      // A GL-canonical primitive word stays primitive; its O-class may pick a transposed rotation.
      Word w = canonicalize(g.word.in_alphabet(target)).rep;
      term = term * generator(ring_, g.t, w).pow(e);
    }
    r += term;
  }
  return r;
}

std::uint32_t SigmaPoly::degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::string SigmaPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) append_signed(out, format_term(c, m.str(), m.is_one()));
  return out;
}

MixedElement MixedElement::scalar(const SigmaPoly& f) { return term(f, std::nullopt); }

MixedElement MixedElement::word(CoeffRing ring, const Word& w, const mpq_class& c) {
  return term(SigmaPoly::constant(ring, w.alphabet(), c), w);
}

MixedElement MixedElement::term(const SigmaPoly& f, const RightFactor& w) {
  MixedElement m(f.ring(), f.alphabet());
  m.add_term(f, w);
  return m;
}

bool MixedElement::is_scalar() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return !t.first.has_value(); });
}

void MixedElement::add_term(const SigmaPoly& f, const RightFactor& w) {
  if (!(f.ring() == ring_)) throw RingMismatch("mixed element term over " + f.ring().tag());
  if (f.alphabet() != alphabet_) throw AlphabetMismatch("mixed element coefficient over another alphabet");
  if (w && w->alphabet() != alphabet_) throw AlphabetMismatch("mixed element right factor over another alphabet");
  if (f.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

void MixedElement::check_compatible(const MixedElement& o) const {
  if (!(ring_ == o.ring_)) throw RingMismatch("mixed elements over " + ring_.tag() + " and " + o.ring_.tag());
  if (alphabet_ != o.alphabet_) throw AlphabetMismatch("mixed elements over different alphabets");
}

MixedElement& MixedElement::operator+=(const MixedElement& o) {
  check_compatible(o);
  for (const auto& [w, f] : o.terms_) add_term(f, w);
  return *this;
}

MixedElement MixedElement::operator+(const MixedElement& o) const {
  MixedElement r = *this;
  r += o;
  return r;
}

MixedElement MixedElement::operator-(const MixedElement& o) const { return *this + (-o); }

MixedElement MixedElement::operator-() const {
  MixedElement r(ring_, alphabet_);
  for (const auto& [w, f] : terms_) r.terms_.emplace(w, -f);
  return r;
}

MixedElement MixedElement::operator*(const MixedElement& o) const {
  check_compatible(o);
  MixedElement r(ring_, alphabet_);
  for (const auto& [w1, f1] : terms_) {
    for (const auto& [w2, f2] : o.terms_) {
      RightFactor w;
      if (w1 && w2) {
        w = *w1 * *w2;
      } else {
        w = w1 ? w1 : w2;
      }
      r.add_term(f1 * f2, w);
    }
  }
  return r;
}

MixedElement MixedElement::scaled(const SigmaPoly& f) const { return scalar(f) * *this; }

MixedElement MixedElement::transpose() const {
  MixedElement r(ring_, alphabet_);
  for (const auto& [w, f] : terms_) r.add_term(f, w ? RightFactor(matforms::transpose(*w)) : std::nullopt);
  return r;
}

MixedElement MixedElement::truncate(std::uint32_t n) const {
  MixedElement r(ring_, alphabet_);
  for (const auto& [w, f] : terms_) r.add_term(f.truncate(n), w);
  return r;
}

MixedElement MixedElement::in_ring(CoeffRing target) const {
  MixedElement r(target, alphabet_);
  for (const auto& [w, f] : terms_) r.add_term(f.in_ring(target), w);
  return r;
}

MixedElement MixedElement::in_alphabet(Alphabet target) const {
  if (target == alphabet_) return *this;
  MixedElement r(ring_, target);
  for (const auto& [w, f] : terms_) {
    r.add_term(f.in_alphabet(target), w ? RightFactor(w->in_alphabet(target)) : std::nullopt);
  }
  return r;
}

std::string MixedElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, f] : terms_) {
    if (!w) {
      if (f.terms().size() == 1) {
        append_signed(out, f.str());
      } else {
        append_signed(out, "(" + f.str() + ")");
      }
      continue;
    }
    if (f.terms().size() == 1) {
      const auto& [m, c] = *f.terms().begin();
      append_signed(out, format_term(c, m.is_one() ? w->str() : m.str() + "*" + w->str(), false));
    } else {
      append_signed(out, "(" + f.str() + ")*" + w->str());
    }
  }
  return out;
}

LinComb::LinComb(CoeffRing ring, const Word& w, const mpq_class& c) : LinComb(ring, w.alphabet()) {
  add_term(w, c);
}

std::uint32_t LinComb::max_length() const {
  std::uint32_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, static_cast<std::uint32_t>(w.size()));
  return m;
}

void LinComb::add_term(const Word& w, const mpq_class& c) {
  if (w.alphabet() != alphabet_) throw AlphabetMismatch("word " + w.str() + " in a combination over another alphabet");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, 0);
  it->second = ring_.reduce(it->second + c);
  if (sgn(it->second) == 0) terms_.erase(it);
}

LinComb LinComb::operator+(const LinComb& o) const {
  if (!(ring_ == o.ring_)) throw RingMismatch("linear combinations over different rings");
  LinComb r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

LinComb LinComb::operator-(const LinComb& o) const { return *this + o.scaled(-1); }

LinComb LinComb::operator*(const LinComb& o) const {
  if (!(ring_ == o.ring_)) throw RingMismatch("linear combinations over different rings");
  if (alphabet_ != o.alphabet_) throw AlphabetMismatch("linear combinations over different alphabets");
  LinComb r(ring_, alphabet_);
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : o.terms_) r.add_term(w1 * w2, c1 * c2);
  }
  return r;
}

LinComb LinComb::scaled(const mpq_class& c) const {
  LinComb r(ring_, alphabet_);
  for (const auto& [w, v] : terms_) r.add_term(w, v * c);
  return r;
}

LinComb LinComb::transpose() const {
  LinComb r(ring_, alphabet_);
  for (const auto& [w, c] : terms_) r.add_term(matforms::transpose(w), c);
  return r;
}

LinComb LinComb::in_alphabet(Alphabet target) const {
  LinComb r(ring_, target);
  for (const auto& [w, c] : terms_) r.add_term(w.in_alphabet(target), c);
  return r;
}

std::string LinComb::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) append_signed(out, format_term(c, w.str(), false));
  return out;
}

Substitution& Substitution::set(std::uint32_t index, const LinComb& image) {
  if (index == 0) throw InvalidArgument("letter indices start at 1");
  if (!(image.ring() == ring_)) throw RingMismatch("substitution image over another ring");
  if (image.alphabet() != target_) {
    if (target_ == Alphabet::GL) throw AlphabetMismatch("O image in a GL substitution");
    images_.insert_or_assign(index, image.in_alphabet(target_));
    return *this;
  }
  images_.insert_or_assign(index, image);
  return *this;
}

LinComb Substitution::image(const Letter& l) const {
  auto it = images_.find(l.index);
  LinComb img = it != images_.end() ? it->second : LinComb(ring_, Word::letter(l.index, target_));
  if (!l.transposed) return img;
  if (target_ != Alphabet::O) throw AlphabetMismatch("transposed letter under a GL substitution");
  return img.transpose();
}

LinComb Substitution::apply(const Word& w) const {
  LinComb r = image(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) r = r * image(w[i]);
  return r;
}

LinComb Substitution::apply(const LinComb& l) const {
  LinComb r(ring_, target_);
  for (const auto& [w, c] : l.terms()) r = r + apply(w).scaled(c);
  return r;
}

Substitution Substitution::then(const Substitution& next) const {
  if (!(ring_ == next.ring_)) throw RingMismatch("composing substitutions over different rings");
  Substitution r(ring_, next.target_);
  for (const auto& [k, img] : images_) r.set(k, next.apply(img));
  for (const auto& [k, img] : next.images_) {
    if (!images_.count(k)) r.set(k, img);
  }
  return r;
}

}  // namespace matforms
