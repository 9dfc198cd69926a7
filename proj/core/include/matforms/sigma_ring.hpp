#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matforms/coeff.hpp"
#include "matforms/words.hpp"

namespace matforms {

/// Free generator sigma_t(e), e a canonical primitive word.
struct SigmaGen {
  std::uint32_t t = 1;
  Word word;

  std::uint32_t degree() const { return t * static_cast<std::uint32_t>(word.size()); }
  std::string str() const;
  friend bool operator==(const SigmaGen&, const SigmaGen&) = default;
};

/// Print order: shorter words first, then greater words first, then smaller t.
bool operator<(const SigmaGen& a, const SigmaGen& b);

/// Commutative monomial: sorted list of (generator, exponent), exponents positive.
struct SigmaMonomial {
  std::vector<std::pair<SigmaGen, std::uint32_t>> factors;

  bool is_one() const { return factors.empty(); }
  SigmaMonomial operator*(const SigmaMonomial& other) const;
  std::uint32_t degree() const;
  std::uint32_t max_t() const;
  MultiDegree multidegree() const;
  std::string str() const;
  friend bool operator==(const SigmaMonomial&, const SigmaMonomial&) = default;
};

bool operator<(const SigmaMonomial& a, const SigmaMonomial& b);

/// Throws InvalidArgument for the O alphabet over a field of characteristic 2.
void check_ring_for_alphabet(const CoeffRing& ring, Alphabet alphabet);

/// Element of the large free commutative algebra on the sigma_t(e).
class SigmaPoly {
 public:
  using Terms = std::map<SigmaMonomial, mpq_class>;

  SigmaPoly(CoeffRing ring, Alphabet alphabet);

  static SigmaPoly constant(CoeffRing ring, Alphabet alphabet, const mpq_class& value);
  /// sigma_t(word); word must be a canonical primitive representative.
  static SigmaPoly generator(CoeffRing ring, std::uint32_t t, const Word& word);
  /// sigma_0 is 1; otherwise as generator().
  static SigmaPoly sigma(CoeffRing ring, std::uint32_t t, const Word& word);

  const CoeffRing& ring() const noexcept { return ring_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Constant term (zero if absent).
  mpq_class constant_term() const;

  void add_term(const SigmaMonomial& m, const mpq_class& c);

  SigmaPoly operator+(const SigmaPoly& o) const;
  SigmaPoly operator-(const SigmaPoly& o) const;
  SigmaPoly operator*(const SigmaPoly& o) const;
  SigmaPoly operator-() const;
  SigmaPoly scaled(const mpq_class& c) const;
  SigmaPoly pow(std::uint32_t e) const;
  SigmaPoly& operator+=(const SigmaPoly& o);

  /// Kills every monomial containing sigma_t with t > n.
  SigmaPoly truncate(std::uint32_t n) const;
  /// Component of the given multidegree.
  SigmaPoly component(const MultiDegree& mdeg) const;
  /// Reinterprets coefficients in another ring; rationals must reduce there.
  SigmaPoly in_ring(CoeffRing target) const;
  /// Same generators viewed over the O alphabet (re-canonicalized).
  SigmaPoly in_alphabet(Alphabet target) const;

  std::uint32_t degree() const;
  std::string str() const;

  friend bool operator==(const SigmaPoly& a, const SigmaPoly& b) {
    return a.ring_ == b.ring_ && a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const SigmaPoly& o) const;

  CoeffRing ring_;
  Alphabet alphabet_;
  Terms terms_;
};

/// Right factor of a mixed element; std::nullopt is the unit 1.
using RightFactor = std::optional<Word>;

/// Element of (large free algebra) tensor (free monoid with 1): sum of f_w (x) w.
class MixedElement {
 public:
  using Terms = std::map<RightFactor, SigmaPoly>;

  MixedElement(CoeffRing ring, Alphabet alphabet);

  static MixedElement scalar(const SigmaPoly& f);
  static MixedElement word(CoeffRing ring, const Word& w, const mpq_class& c = 1);
  static MixedElement term(const SigmaPoly& f, const RightFactor& w);

  const CoeffRing& ring() const noexcept { return ring_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_scalar() const;

  void add_term(const SigmaPoly& f, const RightFactor& w);

  MixedElement operator+(const MixedElement& o) const;
  MixedElement operator-(const MixedElement& o) const;
  MixedElement operator*(const MixedElement& o) const;
  MixedElement operator-() const;
  MixedElement scaled(const SigmaPoly& f) const;
  MixedElement& operator+=(const MixedElement& o);

  /// Transposes right factors; coefficient parts are unchanged. O alphabet only.
  MixedElement transpose() const;
  MixedElement truncate(std::uint32_t n) const;
  MixedElement in_ring(CoeffRing target) const;
  MixedElement in_alphabet(Alphabet target) const;

  std::string str() const;

  friend bool operator==(const MixedElement& a, const MixedElement& b) {
    return a.ring_ == b.ring_ && a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const MixedElement& o) const;

  CoeffRing ring_;
  Alphabet alphabet_;
  Terms terms_;
};

/// Finite linear combination of words (no unit term).
class LinComb {
 public:
  using Terms = std::map<Word, mpq_class>;

  LinComb(CoeffRing ring, Alphabet alphabet);
  LinComb(CoeffRing ring, const Word& w, const mpq_class& c = 1);

  const CoeffRing& ring() const noexcept { return ring_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::uint32_t max_length() const;

  void add_term(const Word& w, const mpq_class& c);

  LinComb operator+(const LinComb& o) const;
  LinComb operator-(const LinComb& o) const;
  /// Concatenation product.
  LinComb operator*(const LinComb& o) const;
  LinComb scaled(const mpq_class& c) const;
  LinComb transpose() const;
  LinComb in_alphabet(Alphabet target) const;

  std::string str() const;
  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.ring_ == b.ring_ && a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

 private:
  CoeffRing ring_;
  Alphabet alphabet_;
  Terms terms_;
};

/// Substitution endomorphism x_k -> images[k]; unlisted letters are fixed.
/// In the O alphabet x_k' is sent to the transposed image.
class Substitution {
 public:
  Substitution(CoeffRing ring, Alphabet target) : ring_(ring), target_(target) {}

  Substitution& set(std::uint32_t index, const LinComb& image);

  const CoeffRing& ring() const noexcept { return ring_; }
  Alphabet target() const noexcept { return target_; }
  const std::map<std::uint32_t, LinComb>& images() const noexcept { return images_; }

  LinComb image(const Letter& l) const;
  LinComb apply(const Word& w) const;
  LinComb apply(const LinComb& l) const;
  /// The substitution "this, then next".
  Substitution then(const Substitution& next) const;

 private:
  CoeffRing ring_;
  Alphabet target_;
  std::map<std::uint32_t, LinComb> images_;
};

}  // namespace matforms
