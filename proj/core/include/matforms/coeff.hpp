#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace matforms {

enum class CoeffKind : std::uint8_t { Integer, Rational, ModP };

/// Runtime description of a coefficient ring: Z, Q, or F_p.
class CoeffRing {
 public:
  static CoeffRing integers() { return CoeffRing(CoeffKind::Integer, 0); }
  static CoeffRing rationals() { return CoeffRing(CoeffKind::Rational, 0); }
  /// Throws InvalidArgument unless p is a prime below 2^32.
  static CoeffRing mod_p(std::uint64_t p);
  /// Parses "Z", "Q" or "Fp:<p>".
  static CoeffRing parse(std::string_view tag);

  CoeffKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return kind_ == CoeffKind::ModP ? p_ : 0; }
  bool is_field() const noexcept { return kind_ != CoeffKind::Integer; }

  /// Reduces a rational into the canonical representative of this ring.
  /// Integer ring rejects non-integral input; F_p rejects denominators divisible by p.
  mpq_class reduce(const mpq_class& value) const;

  std::string tag() const;

  friend bool operator==(const CoeffRing&, const CoeffRing&) = default;

 private:
  CoeffRing(CoeffKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  CoeffKind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Element of a CoeffRing. Values are stored as reduced rationals.
class Coeff {
 public:
  Coeff() : ring_(CoeffRing::rationals()) {}
  Coeff(CoeffRing ring, const mpq_class& value) : ring_(ring), value_(ring.reduce(value)) {}
  Coeff(CoeffRing ring, long value) : Coeff(ring, mpq_class(value)) {}

  const CoeffRing& ring() const noexcept { return ring_; }
  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }

  Coeff operator+(const Coeff& other) const;
  Coeff operator-(const Coeff& other) const;
  Coeff operator*(const Coeff& other) const;
  Coeff operator-() const { return Coeff(ring_, -value_); }
  Coeff pow(unsigned exponent) const;

  std::string str() const { return value_.get_str(); }

  friend bool operator==(const Coeff& a, const Coeff& b) { return a.ring_ == b.ring_ && a.value_ == b.value_; }

 private:
  CoeffRing ring_;
  mpq_class value_;
};

}  // namespace matforms
