#include "matforms/expr_tree.hpp"

#include <algorithm>

#include "matforms/errors.hpp"

namespace matforms {

namespace {

void check_same(const CoeffRing& r1, Alphabet a1, const CoeffRing& r2, Alphabet a2) {
  if (!(r1 == r2)) throw RingMismatch("expression nodes over " + r1.tag() + " and " + r2.tag());
  if (a1 != a2) throw AlphabetMismatch("expression nodes over different alphabets");
}

std::uint32_t max_letter_of(const Word& w) {
  std::uint32_t m = 0;
  for (const Letter& l : w.letters()) m = std::max(m, l.index);
  return m;
}

}  // namespace

SigmaExprTree SigmaExprTree::constant(CoeffRing ring, Alphabet alphabet, const mpq_class& value) {
  check_ring_for_alphabet(ring, alphabet);
  SigmaExprTree e(Kind::Constant, ring, alphabet);
  e.value_ = ring.reduce(value);
  return e;
}

SigmaExprTree SigmaExprTree::sigma(std::uint32_t t, const LinComb& arg) {
  SigmaExprTree e(Kind::Sigma, arg.ring(), arg.alphabet());
  e.t_ = t;
  e.arg_ = arg;
  return e;
}

SigmaExprTree SigmaExprTree::sum(std::vector<SigmaExprTree> terms) {
  if (terms.empty()) throw InvalidArgument("empty sum node");
  if (terms.size() == 1) return std::move(terms.front());
  SigmaExprTree e(Kind::Sum, terms.front().ring_, terms.front().alphabet_);
  for (const auto& t : terms) check_same(e.ring_, e.alphabet_, t.ring_, t.alphabet_);
  e.children_ = std::move(terms);
  return e;
}

SigmaExprTree SigmaExprTree::product(std::vector<SigmaExprTree> factors) {
  if (factors.empty()) throw InvalidArgument("empty product node");
  if (factors.size() == 1) return std::move(factors.front());
  SigmaExprTree e(Kind::Product, factors.front().ring_, factors.front().alphabet_);
  for (const auto& f : factors) check_same(e.ring_, e.alphabet_, f.ring_, f.alphabet_);
  e.children_ = std::move(factors);
  return e;
}

SigmaExprTree SigmaExprTree::normal(const SigmaPoly& poly) {
  SigmaExprTree e(Kind::Normal, poly.ring(), poly.alphabet());
  e.poly_ = poly;
  return e;
}

SigmaExprTree SigmaExprTree::operator+(const SigmaExprTree& o) const { return sum({*this, o}); }

SigmaExprTree SigmaExprTree::operator-(const SigmaExprTree& o) const { return sum({*this, -o}); }

SigmaExprTree SigmaExprTree::operator*(const SigmaExprTree& o) const { return product({*this, o}); }

SigmaExprTree SigmaExprTree::operator-() const {
  if (kind_ == Kind::Constant) return constant(ring_, alphabet_, -value_);
  return product({constant(ring_, alphabet_, -1), *this});
}

SigmaExprTree SigmaExprTree::truncate(std::uint32_t n) const {
  switch (kind_) {
    case Kind::Constant:
      return *this;
    case Kind::Sigma:
      return t_ > n ? constant(ring_, alphabet_, 0) : *this;
    case Kind::Normal:
      return normal(poly_->truncate(n));
    case Kind::Sum:
    case Kind::Product: {
      SigmaExprTree e = *this;
      for (auto& c : e.children_) c = c.truncate(n);
      return e;
    }
  }
  return *this;
}

std::uint32_t SigmaExprTree::degree_bound() const {
  switch (kind_) {
    case Kind::Constant:
      return 0;
    case Kind::Sigma:
      return t_ * arg_->max_length();
    case Kind::Normal:
      return poly_->degree();
    case Kind::Sum: {
      std::uint32_t d = 0;
      for (const auto& c : children_) d = std::max(d, c.degree_bound());
      return d;
    }
    case Kind::Product: {
      std::uint32_t d = 0;
      for (const auto& c : children_) d += c.degree_bound();
      return d;
    }
  }
  return 0;
}

std::optional<mpq_class> SigmaExprTree::constant_value() const {
  switch (kind_) {
    case Kind::Constant:
      return value_;
    case Kind::Sigma:
      return std::nullopt;
    case Kind::Normal:
      if (poly_->terms().size() > 1 || (poly_->terms().size() == 1 && !poly_->terms().begin()->first.is_one())) {
        return std::nullopt;
      }
      return poly_->constant_term();
    case Kind::Sum:
    case Kind::Product: {
      mpq_class acc = kind_ == Kind::Sum ? 0 : 1;
      for (const auto& c : children_) {
        auto v = c.constant_value();
        if (!v) return std::nullopt;
        acc = kind_ == Kind::Sum ? mpq_class(acc + *v) : mpq_class(acc * *v);
      }
      return ring_.reduce(acc);
    }
  }
  return std::nullopt;
}

std::uint32_t SigmaExprTree::max_t() const {
  switch (kind_) {
    case Kind::Constant:
      return 0;
    case Kind::Sigma:
      return t_;
    case Kind::Normal: {
      std::uint32_t m = 0;
      for (const auto& [mono, c] : poly_->terms()) m = std::max(m, mono.max_t());
      return m;
    }
    case Kind::Sum:
    case Kind::Product: {
      std::uint32_t m = 0;
      for (const auto& c : children_) m = std::max(m, c.max_t());
      return m;
    }
  }
  return 0;
}

std::uint32_t SigmaExprTree::max_letter() const {
  std::uint32_t m = 0;
  switch (kind_) {
    case Kind::Constant:
      break;
    case Kind::Sigma:
      for (const auto& [w, c] : arg_->terms()) m = std::max(m, max_letter_of(w));
      break;
    case Kind::Normal:
      for (const auto& [mono, c] : poly_->terms()) {
        for (const auto& [g, e] : mono.factors) m = std::max(m, max_letter_of(g.word));
      }
      break;
    case Kind::Sum:
    case Kind::Product:
      for (const auto& c : children_) m = std::max(m, c.max_letter());
      break;
  }
  return m;
}

std::string SigmaExprTree::str() const {
  switch (kind_) {
    case Kind::Constant:
      return value_.get_str();
    case Kind::Sigma: {
      std::string inner = arg_->str();
      return (t_ == 1 ? "tr(" : "s[" + std::to_string(t_) + "](") + inner + ")";
    }
    case Kind::Normal:
      return "(" + poly_->str() + ")";
    case Kind::Sum: {
      std::string s;
      for (const auto& c : children_) s += (s.empty() ? "" : " + ") + c.str();
      return "(" + s + ")";
    }
    case Kind::Product: {
      std::string s;
      for (const auto& c : children_) s += (s.empty() ? "" : "*") + c.str();
      return s;
    }
  }
  return "";
}

MixedExpr MixedExpr::scalar(const SigmaExprTree& f) { return term(f, std::nullopt); }

MixedExpr MixedExpr::term(const SigmaExprTree& f, const RightFactor& w) {
  MixedExpr m(f.ring(), f.alphabet());
  m.add_term(f, w);
  return m;
}

MixedExpr MixedExpr::from(const MixedElement& e) {
  MixedExpr m(e.ring(), e.alphabet());
  for (const auto& [w, f] : e.terms()) m.add_term(SigmaExprTree::normal(f), w);
  return m;
}

MixedExpr MixedExpr::from(const LinComb& l) {
  MixedExpr m(l.ring(), l.alphabet());
  for (const auto& [w, c] : l.terms()) m.add_term(SigmaExprTree::constant(l.ring(), l.alphabet(), c), w);
  return m;
}

bool MixedExpr::is_scalar() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return !t.second.has_value(); });
}

void MixedExpr::add_term(const SigmaExprTree& f, const RightFactor& w) {
  check_same(ring_, alphabet_, f.ring(), f.alphabet());
  if (w && w->alphabet() != alphabet_) throw AlphabetMismatch("right factor over another alphabet");
  terms_.emplace_back(f, w);
}

MixedExpr MixedExpr::operator+(const MixedExpr& o) const {
  check_same(ring_, alphabet_, o.ring_, o.alphabet_);
  MixedExpr r = *this;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  return r;
}

MixedExpr MixedExpr::operator-(const MixedExpr& o) const { return *this + (-o); }

MixedExpr MixedExpr::operator-() const {
  MixedExpr r(ring_, alphabet_);
  for (const auto& [f, w] : terms_) r.terms_.emplace_back(-f, w);
  return r;
}

MixedExpr MixedExpr::operator*(const MixedExpr& o) const {
  check_same(ring_, alphabet_, o.ring_, o.alphabet_);
  MixedExpr r(ring_, alphabet_);
  for (const auto& [f1, w1] : terms_) {
    for (const auto& [f2, w2] : o.terms_) {
      RightFactor w;
      if (w1 && w2) {
        w = *w1 * *w2;
      } else {
        w = w1 ? w1 : w2;
      }
      r.terms_.emplace_back(f1 * f2, w);
    }
  }
  return r;
}

MixedExpr MixedExpr::transpose() const {
  MixedExpr r(ring_, alphabet_);
  for (const auto& [f, w] : terms_) r.terms_.emplace_back(f, w ? RightFactor(matforms::transpose(*w)) : std::nullopt);
  return r;
}

MixedExpr MixedExpr::truncate(std::uint32_t n) const {
  MixedExpr r(ring_, alphabet_);
  for (const auto& [f, w] : terms_) r.terms_.emplace_back(f.truncate(n), w);
  return r;
}

std::optional<LinComb> MixedExpr::as_lincomb() const {
  LinComb l(ring_, alphabet_);
  for (const auto& [f, w] : terms_) {
    if (!w) {
      if (auto v = f.constant_value(); v && sgn(*v) == 0) continue;
      return std::nullopt;
    }
    auto v = f.constant_value();
    if (!v) return std::nullopt;
    l.add_term(*w, *v);
  }
  return l;
}

std::uint32_t MixedExpr::degree_bound() const {
  std::uint32_t d = 0;
  for (const auto& [f, w] : terms_) d = std::max(d, f.degree_bound() + (w ? static_cast<std::uint32_t>(w->size()) : 0u));
  return d;
}

std::uint32_t MixedExpr::max_letter() const {
  std::uint32_t m = 0;
  for (const auto& [f, w] : terms_) {
    m = std::max(m, f.max_letter());
    if (w) m = std::max(m, max_letter_of(*w));
  }
  return m;
}

std::string MixedExpr::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [f, w] : terms_) {
    if (!s.empty()) s += " + ";
    s += f.str();
    if (w) s += "*" + w->str();
  }
  return s;
}

}  // namespace matforms
