#include "modcurve/qexp.hpp"

#include <algorithm>
#include <numeric>

namespace modcurve {

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

QSeries QSeries::truncated(std::size_t prec) const {
  QSeries out(std::min(prec, precision()));
  std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
  return out;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r == 0; });
}

std::size_t QSeries::valuation() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n] != 0) return n;
  }
  return coeffs_.size();
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

QSeries operator*(const QSeries& lhs, const QSeries& rhs) {
  const std::size_t prec = std::min(lhs.precision(), rhs.precision());
  QSeries out(prec);
  for (std::size_t i = 0; i <= prec; ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= prec; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

std::string QSeries::to_string() const {
  std::string s;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n] == 0) continue;
    if (!s.empty()) s += " + ";
    s += coeffs_[n].get_str();
    if (n == 1) {
      s += "*q";
    } else if (n > 1) {
      s += "*q^" + std::to_string(n);
    }
  }
  if (!s.empty()) s += " + ";
  s += "O(q^" + std::to_string(coeffs_.size()) + ")";
  return s;
}

QSeries delta(const QSeries& f, unsigned n) {
  if (n == 0) throw Error("delta: n must be positive");
  QSeries out(n * f.precision());
  for (std::size_t k = 0; k <= f.precision(); ++k) {
    if (f[k] != 0) out[n * k] = f[k] * n;
  }
  return out;
}

QSeries eta_product(std::span<const EtaFactor> factors, std::size_t prec) {
  long weight24 = 0;
  for (const auto& [m, r] : factors) {
    if (m <= 0) throw Error("eta_product: multiplier must be positive");
    weight24 += static_cast<long>(m) * r;
  }
  if (weight24 % 24 != 0 || weight24 < 0) {
    throw NonIntegralWeight("leading exponent " + std::to_string(weight24) + "/24 is not integral");
  }
  const std::size_t shift = static_cast<std::size_t>(weight24 / 24);
  QSeries out(prec);
  if (shift > prec) return out;

  const std::size_t len = prec - shift;  // need coefficients 0..len of the product
  std::vector<Integer> series(len + 1);
  series[0] = 1;
  for (const auto& [m, r] : factors) {
    for (std::size_t n = 1; static_cast<std::size_t>(m) * n <= len; ++n) {
      const std::size_t step = static_cast<std::size_t>(m) * n;
      for (int k = 0; k < std::abs(r); ++k) {
        if (r > 0) {
          for (std::size_t i = len; i >= step; --i) series[i] -= series[i - step];
        } else {
          for (std::size_t i = step; i <= len; ++i) series[i] += series[i - step];
        }
      }
    }
  }
  for (std::size_t i = 0; i <= len; ++i) out[i + shift] = Rational(series[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Elliptic curves

Integer EllipticCurve::discriminant() const {
  Integer b2 = a1 * a1 + 4 * a2;
  Integer b4 = 2 * a4 + a1 * a3;
  Integer b6 = a3 * a3 + 4 * a6;
  Integer b8 = Integer(a1) * a1 * a6 + 4 * Integer(a2) * a6 - Integer(a1) * a3 * a4 +
               Integer(a2) * a3 * a3 - Integer(a4) * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

namespace curves {
EllipticCurve e27() { return {0, 0, 1, 0, 0, 27}; }
EllipticCurve e36() { return {0, 0, 0, 0, 1, 36}; }
EllipticCurve e108() { return {0, 0, 0, 0, 4, 108}; }
EllipticCurve e54_1() { return {1, -1, 0, 12, 8, 54}; }
EllipticCurve e54_2() { return {1, -1, 1, 1, -1, 54}; }
}  // namespace curves

namespace {

long mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

// Affine point count for odd good p by completing the square in y:
// (2y + a1 x + a3)^2 = (a1 x + a3)^2 + 4 f(x).
long count_points_odd(const EllipticCurve& e, long p) {
  std::vector<int> chi(p, -1);
  chi[0] = 0;
  for (long y = 1; y < p; ++y) chi[mod(y * y, p)] = 1;
  long count = 1;
  for (long x = 0; x < p; ++x) {
    long lin = mod(e.a1 * x + e.a3, p);
    long f = mod(mod(mod(x * x, p) * x, p) + mod(e.a2 * mod(x * x, p), p) + mod(e.a4 * x, p) + e.a6, p);
    long disc = mod(lin * lin + 4 * f, p);
    count += 1 + chi[disc];
  }
  return count;
}

}  // namespace

long count_smooth_points(const EllipticCurve& e, long p) {
  long count = 1;  // the point at infinity is always smooth on a Weierstrass cubic
  for (long x = 0; x < p; ++x) {
    for (long y = 0; y < p; ++y) {
      long f = y * y + e.a1 * x * y + e.a3 * y - (x * x * x + e.a2 * x * x + e.a4 * x + e.a6);
      if (mod(f, p) != 0) continue;
      long fx = e.a1 * y - 3 * x * x - 2 * e.a2 * x - e.a4;
      long fy = 2 * y + e.a1 * x + e.a3;
      if (mod(fx, p) != 0 || mod(fy, p) != 0) ++count;
    }
  }
  return count;
}

long ec_ap(const EllipticCurve& e, long p) {
  if (e.conductor % p != 0) {
    long n = (p == 2) ? count_smooth_points(e, p) : count_points_odd(e, p);
    return p + 1 - n;
  }
  long ap = p - count_smooth_points(e, p);
  if (ap < -1 || ap > 1) {
    throw ModelMismatch("model is not minimal at " + std::to_string(p));
  }
  return ap;
}

QSeries newform(const EllipticCurve& e, std::size_t prec) {
  if (prec < 1) throw Error("newform: precision must be at least 1");
  const std::size_t n_max = prec;
  std::vector<std::size_t> spf(n_max + 1, 0);
  for (std::size_t i = 2; i <= n_max; ++i) {
    if (spf[i]) continue;
    for (std::size_t j = i; j <= n_max; j += i) {
      if (!spf[j]) spf[j] = i;
    }
  }
  std::vector<long long> a(n_max + 1, 0);
  a[1] = 1;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::size_t p = spf[n];
    std::size_t m = n;
    std::size_t pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    if (m != 1) {
      a[n] = a[m] * a[pk];
      continue;
    }
    // n = p^k
    if (n == p) {
      a[n] = ec_ap(e, static_cast<long>(p));
    } else if (e.conductor % static_cast<long>(p) == 0) {
      a[n] = a[p] * a[n / p];
    } else {
      a[n] = a[p] * a[n / p] - static_cast<long long>(p) * a[n / p / p];
    }
  }
  QSeries out(prec);
  for (std::size_t n = 1; n <= n_max; ++n) out[n] = Rational(static_cast<long>(a[n]));
  return out;
}

PrimitiveForms primitive_forms(std::size_t prec) {
  const std::array<EtaFactor, 2> f27{{{3, 2}, {9, 2}}};
  const std::array<EtaFactor, 1> f36{{{6, 4}}};
  return {eta_product(f27, prec), eta_product(f36, prec), newform(curves::e108(), prec),
          newform(curves::e54_1(), prec), newform(curves::e54_2(), prec)};
}

CuspFormBasis standard_basis(std::size_t prec) {
  if (prec < kMinPrecision) {
    throw InsufficientPrecision("precision " + std::to_string(prec) + " is below " +
                                std::to_string(kMinPrecision));
  }
  const PrimitiveForms f = primitive_forms(prec);
  auto d = [prec](const QSeries& g, unsigned n) { return delta(g, n).truncated(prec); };

  CuspFormBasis b;
  b.precision = prec;
  b.e[0] = f.f54_2 - d(f.f54_2, 2);
  b.e[1] = f.f54_2 + d(f.f54_2, 2);
  b.e[2] = f.f54_1 + d(f.f54_1, 2);
  b.e[3] = f.f54_1 - d(f.f54_1, 2);
  b.e[4] = f.f27 + d(f.f27, 4);
  b.e[5] = d(f.f27, 2);
  b.e[6] = f.f36 + d(f.f36, 3);
  b.e[7] = f.f108;
  b.e[8] = f.f27 - d(f.f27, 4);
  b.e[9] = f.f36 - d(f.f36, 3);
  return b;
}

}  // namespace modcurve
