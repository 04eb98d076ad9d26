#pragma once

// Exact arithmetic: GMP rationals, the tower Q < K = Q(zeta) < L = K(c) with
// zeta^2 + zeta + 1 = 0 and c^3 = 2, the Galois generator sigma of L/K, and
// reduction to prime fields at primes splitting completely in L.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "modcurve/errors.hpp"

namespace modcurve {

using Integer = mpz_class;
using Rational = mpq_class;

/// "n/d" with the denominator always present.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

enum class Level : std::uint8_t { Q = 0, K = 1, L = 2 };

constexpr std::size_t coord_count(Level level) {
  switch (level) {
    case Level::Q: return 1;
    case Level::K: return 2;
    case Level::L: return 6;
  }
  return 6;
}

/// Element of Q, K or L stored on the power basis
///   Q: 1;   K: 1, zeta;   L: 1, zeta, c, zeta*c, c^2, zeta*c^2.
/// Coordinate 2*j + i multiplies zeta^i c^j.  Arithmetic between elements of
/// different levels promotes to the larger one; results never demote.
class NFElem {
 public:
  NFElem() = default;
  NFElem(long value) : coords_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  NFElem(const Rational& value) : coords_{value} {}  // NOLINT(google-explicit-constructor)

  static NFElem from_coords(Level level, std::span<const Rational> coords);
  static NFElem zeta();
  /// z = 2*zeta + 1, a square root of -3.
  static NFElem z();
  static NFElem c();

  Level level() const { return level_; }
  std::span<const Rational> coords() const {
    return {coords_.data(), coord_count(level_)};
  }
  const Rational& coord(std::size_t i) const { return coords_[i]; }

  NFElem promoted(Level level) const;
  bool is_zero() const;
  bool is_one() const;
  /// True when every coordinate except the first vanishes.
  bool is_rational() const;

  NFElem inverse() const;

  NFElem& operator+=(const NFElem& rhs);
  NFElem& operator-=(const NFElem& rhs);
  NFElem& operator*=(const NFElem& rhs);
  NFElem& operator*=(const Rational& rhs);

  friend NFElem operator+(NFElem lhs, const NFElem& rhs) { return lhs += rhs; }
  friend NFElem operator-(NFElem lhs, const NFElem& rhs) { return lhs -= rhs; }
  friend NFElem operator*(const NFElem& lhs, const NFElem& rhs);
  friend NFElem operator/(const NFElem& lhs, const NFElem& rhs) { return lhs * rhs.inverse(); }
  NFElem operator-() const;

  /// Equality ignores the declared level: 1 in Q equals 1 in L.
  friend bool operator==(const NFElem& lhs, const NFElem& rhs);

  std::size_t hash() const;

 private:
  Level level_ = Level::Q;
  std::array<Rational, 6> coords_{};
};

enum class NfOp { add, sub, mul };

NFElem nf_arith(NfOp op, const NFElem& x, const NFElem& y);
NFElem nf_inverse(const NFElem& x);

/// sigma fixes K and sends c to zeta*c.
NFElem galois_sigma(const NFElem& x);

/// Coordinate vector such as "[-1/2, 3]" on the element's power basis.
std::string to_string(const NFElem& x);
/// Inverse of to_string; the level is read off the coordinate count.
NFElem parse_nfelem(std::string_view text);

/// Element of the prime field F_p, carrying its modulus.
struct ModP {
  std::uint64_t value = 0;
  std::uint64_t modulus = 2;

  ModP() = default;
  ModP(std::int64_t v, std::uint64_t p);

  bool is_zero() const { return value == 0; }
  ModP inverse() const;
  ModP pow(std::uint64_t e) const;

  friend ModP operator+(ModP a, ModP b) { return {a.value + b.value, a.modulus, raw_tag{}}; }
  friend ModP operator-(ModP a, ModP b) {
    return {a.value + a.modulus - b.value, a.modulus, raw_tag{}};
  }
  friend ModP operator*(ModP a, ModP b) {
    return {static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.value) * b.value) %
                                       a.modulus),
            a.modulus, raw_tag{}};
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP operator-() const { return {modulus - value, modulus, raw_tag{}}; }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator-=(ModP b) { return *this = *this - b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  friend bool operator==(ModP a, ModP b) { return a.value == b.value && a.modulus == b.modulus; }

 private:
  struct raw_tag {};
  ModP(std::uint64_t v, std::uint64_t p, raw_tag) : value(v % p), modulus(p) {}
};

bool is_prime(std::uint64_t n);

/// True iff p splits completely in L, i.e. p = 1 mod 3 and 2 is a cube mod p.
/// Throws InvalidPrime for 2, 3 and composites.
bool is_split(std::uint64_t p);

/// Ring homomorphism L -> F_p given by images of zeta and c.
class ResidueMap {
 public:
  /// Validates both defining relations; throws NotSplit if they fail.
  ResidueMap(std::uint64_t p, std::uint64_t zeta_image, std::uint64_t c_image);

  std::uint64_t prime() const { return p_; }
  std::uint64_t zeta_image() const { return zeta_; }
  std::uint64_t c_image() const { return c_; }

  /// Throws NonIntegral when p divides a denominator.
  ModP reduce(const Rational& r) const;
  ModP operator()(const NFElem& x) const;
  ModP zero() const { return ModP(0, p_); }

 private:
  std::uint64_t p_;
  std::uint64_t zeta_;
  std::uint64_t c_;
};

/// Smallest valid (zeta, c) images; throws NotSplit for non-split p.
ResidueMap residue_map(std::uint64_t p);
/// All six homomorphisms L -> F_p, lexicographically ordered.
std::vector<ResidueMap> all_residue_maps(std::uint64_t p);

}  // namespace modcurve

template <>
struct std::hash<modcurve::NFElem> {
  std::size_t operator()(const modcurve::NFElem& x) const { return x.hash(); }
};
