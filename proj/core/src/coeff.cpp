#include "matforms/coeff.hpp"

#include <charconv>

#include "matforms/errors.hpp"

namespace matforms {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a)) {
      if (e & 1) r = mulmod(r, a);
    }
    return r;
  };
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s && composite; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

CoeffRing CoeffRing::mod_p(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw InvalidArgument("coefficient modulus must be a prime below 2^32, got " + std::to_string(p));
  }
  return CoeffRing(CoeffKind::ModP, p);
}

CoeffRing CoeffRing::parse(std::string_view tag) {
  if (tag == "Z") return integers();
  if (tag == "Q") return rationals();
  if (tag.starts_with("Fp:")) {
    std::uint64_t p = 0;
    auto digits = tag.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return mod_p(p);
  }
  throw InvalidArgument("unknown coefficient ring '" + std::string(tag) + "' (expected Z, Q or Fp:<p>)");
}

mpq_class CoeffRing::reduce(const mpq_class& value) const {
  switch (kind_) {
    case CoeffKind::Rational:
      return value;
    case CoeffKind::Integer:
      if (value.get_den() != 1) {
        throw InvalidArgument("non-integral value " + value.get_str() + " in coefficient ring Z");
      }
      return value;
    case CoeffKind::ModP: {
      mpz_class modulus(static_cast<unsigned long>(p_));
      mpz_class num = value.get_num() % modulus;
      mpz_class den = value.get_den() % modulus;
      if (den == 0) {
        throw InvalidArgument("denominator of " + value.get_str() + " vanishes modulo " + std::to_string(p_));
      }
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
      mpz_class r = (num * inv) % modulus;
      if (r < 0) r += modulus;
      return mpq_class(r);
    }
  }
  return value;
}

std::string CoeffRing::tag() const {
  switch (kind_) {
    case CoeffKind::Integer:
      return "Z";
    case CoeffKind::Rational:
      return "Q";
    case CoeffKind::ModP:
      return "Fp:" + std::to_string(p_);
  }
  return "?";
}

namespace {
void require_same(const CoeffRing& a, const CoeffRing& b) {
  if (!(a == b)) throw RingMismatch("coefficient rings differ: " + a.tag() + " vs " + b.tag());
}
}  // namespace

Coeff Coeff::operator+(const Coeff& other) const {
  require_same(ring_, other.ring_);
  return Coeff(ring_, value_ + other.value_);
}

Coeff Coeff::operator-(const Coeff& other) const {
  require_same(ring_, other.ring_);
  return Coeff(ring_, value_ - other.value_);
}

Coeff Coeff::operator*(const Coeff& other) const {
  require_same(ring_, other.ring_);
  return Coeff(ring_, value_ * other.value_);
}

Coeff Coeff::pow(unsigned exponent) const {
  Coeff result(ring_, 1);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

}  // namespace matforms
