#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace matforms {

enum class Alphabet : std::uint8_t { GL, O };

const char* alphabet_name(Alphabet a);

/// Letter x_index, optionally transposed (O alphabet only).
struct Letter {
  std::uint32_t index = 1;
  bool transposed = false;

  /// Dense code; a smaller code is a *bigger* letter: x1 > x1' > x2 > x2' > ...
  std::uint32_t code() const noexcept { return 2 * (index - 1) + (transposed ? 1u : 0u); }
  static Letter from_code(std::uint32_t c) noexcept { return Letter{c / 2 + 1, (c & 1u) != 0}; }
  Letter flipped() const noexcept { return Letter{index, !transposed}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Degree per letter index (entry i counts x_{i+1} together with its transpose).
/// Trailing zeros are trimmed in canonical form.
using MultiDegree = std::vector<std::uint32_t>;

void trim(MultiDegree& d);
MultiDegree add(const MultiDegree& a, const MultiDegree& b);
bool fits_within(const MultiDegree& part, const MultiDegree& whole);
std::uint32_t total(const MultiDegree& d);

/// Nonempty word over the GL or O alphabet.
class Word {
 public:
  Word(std::vector<Letter> letters, Alphabet alphabet = Alphabet::GL);

  static Word letter(std::uint32_t index, Alphabet alphabet = Alphabet::GL, bool transposed = false);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// Same letters viewed in another alphabet; GL -> O always succeeds.
  Word in_alphabet(Alphabet target) const;

  Word operator*(const Word& other) const;
  Word pow(std::uint32_t exponent) const;

  MultiDegree multidegree() const;
  std::string str() const;

  /// Structural order (alphabet, then letter codes) for use as a container key.
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
  Alphabet alphabet_;
};

/// Order on words: letterwise with x1 > x1' > x2 > ..., and a proper prefix is smaller.
std::strong_ordering compare(const Word& a, const Word& b);

/// Reverses the word and flips every letter. O alphabet only.
Word transpose(const Word& w);

bool is_primitive(const Word& w);

/// Primitive root r with w = r^k.
Word primitive_root(const Word& w, std::uint32_t* exponent = nullptr);

struct CanonicalClass {
  Word rep;
  std::uint32_t exponent = 1;

  friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
};

/// Maximal representative of the class of w (rotations; in O mode also transposes).
CanonicalClass canonicalize(const Word& w);

/// Greatest rotation of w under compare, ignoring transposition.
Word max_rotation(const Word& w);

/// One representative per class of primitive words with the given multidegree.
/// Ordered greatest first. Results are cached and thread safe.
const std::vector<Word>& enumerate_reps(const MultiDegree& mdeg, Alphabet alphabet);

/// Number of primitive necklaces of length m over u letters.
std::uint64_t necklace_count(std::uint32_t u, std::uint32_t m);

}  // namespace matforms
