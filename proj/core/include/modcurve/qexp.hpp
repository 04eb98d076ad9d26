#pragma once

// Truncated q-expansions and the weight-2 cusp-form basis of level 108.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "modcurve/exact.hpp"

namespace modcurve {

inline constexpr std::size_t kMinPrecision = 38;
inline constexpr std::size_t kDefaultPrecision = 150;

/// sum_{n=0}^{prec} a_n q^n + O(q^{prec+1}).  Coefficients past the precision
/// are unknown, and every operation keeps the smallest precision involved.
class QSeries {
 public:
  explicit QSeries(std::size_t prec = 0) : coeffs_(prec + 1) {}
  explicit QSeries(std::vector<Rational> coeffs);

  std::size_t precision() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  Rational& operator[](std::size_t n) { return coeffs_.at(n); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  QSeries truncated(std::size_t prec) const;
  bool is_zero() const;
  /// Smallest n with a_n != 0, or precision()+1 if none.
  std::size_t valuation() const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const Rational& s);
  friend QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
  friend QSeries operator-(QSeries lhs, const QSeries& rhs) { return lhs -= rhs; }
  friend QSeries operator*(QSeries lhs, const Rational& s) { return lhs *= s; }
  friend QSeries operator*(const Rational& s, QSeries rhs) { return rhs *= s; }
  friend QSeries operator*(const QSeries& lhs, const QSeries& rhs);
  friend bool operator==(const QSeries& lhs, const QSeries& rhs) = default;

  /// "a1*q + a2*q^2 + ... + O(q^N)", zero terms omitted.
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// (f|delta_n)(q) = n f(q^n).  Precision scales by n.
QSeries delta(const QSeries& f, unsigned n);

struct EtaFactor {
  int multiplier;
  int exponent;
};

/// prod eta(m z)^r through q^prec.  Throws NonIntegralWeight unless
/// sum m*r is divisible by 24.
QSeries eta_product(std::span<const EtaFactor> factors, std::size_t prec);

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct EllipticCurve {
  long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  long conductor = 1;

  Integer discriminant() const;
};

namespace curves {
EllipticCurve e27();   // y^2 + y = x^3
EllipticCurve e36();   // y^2 = x^3 + 1
EllipticCurve e108();  // y^2 = x^3 + 4
EllipticCurve e54_1(); // y^2 + xy = x^3 - x^2 + 12x + 8
EllipticCurve e54_2(); // y^2 + xy + y = x^3 - x^2 + x - 1
}  // namespace curves

/// Number of points of the reduction mod p (including infinity) that are
/// nonsingular on the given model.
long count_smooth_points(const EllipticCurve& e, long p);

/// Trace of Frobenius for good p; 0 / +1 / -1 for additive / split / non-split
/// multiplicative reduction at p | conductor.
long ec_ap(const EllipticCurve& e, long p);

/// q-expansion of the newform attached to e through q^prec.
QSeries newform(const EllipticCurve& e, std::size_t prec);

/// The forms spanning weight-2 cusp forms on Gamma0(108):
///   e1 = g - g|d2,  e2 = g + g|d2        (g = f54^(2))
///   e3 = h + h|d2,  e4 = h - h|d2        (h = f54^(1))
///   e5 = f27 + f27|d4,  e6 = f27|d2,  e7 = f36 + f36|d3,  e8 = f108,
///   e9 = f27 - f27|d4,  e10 = f36 - f36|d3.
/// V = <e1..e4> and W = <e5..e10>.
struct CuspFormBasis {
  std::array<QSeries, 10> e;
  std::size_t precision = 0;

  static constexpr std::array<std::size_t, 4> v_indices{0, 1, 2, 3};
  static constexpr std::array<std::size_t, 6> w_indices{4, 5, 6, 7, 8, 9};
};

/// Throws InsufficientPrecision for prec < 38.
CuspFormBasis standard_basis(std::size_t prec = kDefaultPrecision);

/// Individual primitive forms, as used by standard_basis.
struct PrimitiveForms {
  QSeries f27, f36, f108, f54_1, f54_2;
};
PrimitiveForms primitive_forms(std::size_t prec);

}  // namespace modcurve
