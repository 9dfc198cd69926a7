#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matforms/expand_gl.hpp"
#include "matforms/sigma_ring.hpp"

namespace matforms {

enum class ArrowRole : std::uint8_t { Loop, YArrow, ZArrow };

/// Two-vertex quiver. Loops sit at vertex 1, their transposes at vertex 2.
/// y-letters (either orientation) have head 1 and tail 2, z-letters head 2 and tail 1.
/// A word is a path when each tail matches the next head.
class QuiverShape {
 public:
  QuiverShape() = default;

  /// x_1..x_u loops, then v y-arrows, then w z-arrows.
  static QuiverShape standard(std::uint32_t u, std::uint32_t v, std::uint32_t w);

  QuiverShape& set(std::uint32_t index, ArrowRole role);
  std::optional<ArrowRole> role(std::uint32_t index) const;
  const std::map<std::uint32_t, ArrowRole>& roles() const noexcept { return roles_; }

  int head(const Letter& l) const;
  int tail(const Letter& l) const;
  bool is_path(const Word& w) const;
  bool is_closed(const Word& w) const;

  friend bool operator==(const QuiverShape&, const QuiverShape&) = default;
  friend auto operator<=>(const QuiverShape&, const QuiverShape&) = default;

 private:
  std::map<std::uint32_t, ArrowRole> roles_;
};

/// Canonical primitive representatives of classes of closed paths with the given multidegree.
std::vector<Word> closed_paths(const MultiDegree& mdeg, const QuiverShape& shape);

/// All paths (raw words) of the given multidegree with prescribed head and tail.
std::vector<Word> raw_paths(const MultiDegree& mdeg, const QuiverShape& shape, int head, int tail);

/// Number of untransposed y- and z-letters.
std::uint32_t yz_degree(const Word& w, const QuiverShape& shape);

/// sigma_{t;r;s} in abstract letters: x_1..x_u, then y's, then z's. Over Z, O alphabet.
const SigmaPoly& sigma_trs_letters(const DegreeVector& t, const DegreeVector& r, const DegreeVector& s);

/// sigma_{t;r;s}(a;b;c) in normal form.
SigmaPoly sigma_trs(const DegreeVector& t, const DegreeVector& r, const DegreeVector& s, const std::vector<LinComb>& a,
                    const std::vector<LinComb>& b, const std::vector<LinComb>& c);
SigmaPoly sigma_trs(const DegreeVector& t, const DegreeVector& r, const DegreeVector& s, const std::vector<Word>& a,
                    const std::vector<Word>& b, const std::vector<Word>& c, CoeffRing ring);

/// Orthogonal Cayley-Hamilton element and its companion, in normal form.
MixedElement chi_tr(std::uint32_t t, std::uint32_t r, const LinComb& a, const LinComb& b, const LinComb& c);
MixedElement zeta_tr(std::uint32_t t, std::uint32_t r, const LinComb& a, const LinComb& b, const LinComb& c);

/// First reduction: letters x0 = x1, x = x2, y = x3, z = x4.
SigmaPoly o_key_lhs_1(std::uint32_t k, std::uint32_t t, std::uint32_t r, CoeffRing ring);
SigmaPoly o_key_rhs_1(std::uint32_t k, std::uint32_t t, std::uint32_t r, CoeffRing ring);
/// Second reduction: letters x = x1, y0 = x2, y = x3, z = x4.
SigmaPoly o_key_lhs_2(std::uint32_t t, std::uint32_t r, std::uint32_t s, CoeffRing ring);
SigmaPoly o_key_rhs_2(std::uint32_t t, std::uint32_t r, std::uint32_t s, CoeffRing ring);

/// Structural maps between quivers.
enum class PhiKind : std::uint8_t { GlSets, OSets1, OSets2 };

const char* phi_kind_name(PhiKind kind);

/// Source letters of the maps. Letters not listed for a kind are foreign.
///   GlSets: x0, x, e_i.
///   OSets1: x0 (standalone only), x, y, z, e_i, u_i, v_i, w_ij.
///   OSets2: x, y, z, e_1, e_2, y_1.
/// Targets use x0 = x1, x = x2 (GlSets); x0, x, y, z = x1..x4 (OSets1);
/// x, y0, y, z = x1..x4 (OSets2).
struct SourceLetter {
  enum Family : std::uint8_t { X0, X, Y, Z, E, U, V, W, Y1 };
  Family family = X;
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  friend bool operator==(const SourceLetter&, const SourceLetter&) = default;
};

std::uint32_t encode_source(PhiKind kind, const SourceLetter& s);
SourceLetter decode_source(PhiKind kind, std::uint32_t index);
Alphabet phi_alphabet(PhiKind kind);
QuiverShape phi_source_shape(PhiKind kind, std::uint32_t max_index);
QuiverShape phi_target_shape(PhiKind kind);
/// Degree of the image of a source letter.
std::uint32_t phi_weight(PhiKind kind, std::uint32_t index);

Word phi_map(PhiKind kind, const Word& w);
/// Unique word-level preimage, if any.
std::optional<Word> phi_inverse(PhiKind kind, const Word& w);

struct BijectionReport {
  bool injective = true;
  bool surjective = true;
  bool primitivity = true;
  bool unique_preimage = true;
  bool x0_handling = true;
  std::size_t source_words = 0;
  std::size_t target_classes = 0;
  std::string detail;

  bool ok() const { return injective && surjective && primitivity && unique_preimage && x0_handling; }
};

/// Exhaustive check of the bijection statements on words of image degree <= max_degree.
BijectionReport check_bijection(PhiKind kind, std::uint32_t max_degree);

}  // namespace matforms
