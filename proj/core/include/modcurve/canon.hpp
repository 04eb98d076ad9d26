#pragma once

// Canonical model of X0(108) in P^9: quadric relations among the products
// e_i e_j, the degree-3 rank check, and projective points.

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "modcurve/linalg.hpp"
#include "modcurve/qexp.hpp"

namespace modcurve {

inline constexpr std::size_t kVars = 10;
inline constexpr std::size_t kQuadMonomials = 55;
inline constexpr std::size_t kCubicMonomials = 220;
inline constexpr std::size_t kModelRelations = 28;

/// Index of x_i x_j (0-based, i <= j) in lexicographic (i, j) order.
constexpr std::size_t quad_index(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * kVars - i * (i - 1) / 2 + (j - i);
}

/// (i, j) with i <= j for every monomial index.
const std::array<std::pair<std::size_t, std::size_t>, kQuadMonomials>& quad_monomials();

/// Index of x_i x_j x_k (0-based, i <= j <= k) in lexicographic order.
std::size_t cubic_index(std::size_t i, std::size_t j, std::size_t k);

/// Degree-2 form with rational coefficients on the 55 monomials.
class Quadric {
 public:
  Quadric() : coeffs_(kQuadMonomials) {}
  explicit Quadric(std::vector<Rational> coeffs);
  explicit Quadric(std::span<const Integer> coeffs);

  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  bool is_zero() const;

  /// "3*x1*x5 - x2*x9 - 2*x4*x8" with terms in monomial order; "0" if zero.
  std::string to_string() const;
  /// Accepts the to_string format in any term order; throws ParseError.
  static Quadric parse(std::string_view text);

  friend bool operator==(const Quadric&, const Quadric&) = default;

 private:
  std::vector<Rational> coeffs_;
};

std::vector<std::vector<Rational>> coefficient_rows(std::span<const Quadric> quadrics);

struct CanonicalModel {
  std::vector<Quadric> quadrics;
  /// Null for models read from fixtures.
  std::shared_ptr<const CuspFormBasis> basis;
  std::size_t precision = 0;
};

/// e_i * e_j for i <= j, in quadric monomial order.
std::vector<QSeries> weight4_products(const CuspFormBasis& basis);

/// Left kernel of the 55 x (prec - 1) coefficient matrix over exponents
/// 2..prec, optionally LLL-reduced.  Throws ModelMismatch unless the kernel
/// has dimension 28.
CanonicalModel canonical_relations(const CuspFormBasis& basis, bool lll = true);

/// Rank of the 10*n x 220 matrix of products x_k * Q.
std::size_t cubic_rank(std::span<const Quadric> quadrics);
/// True iff the cubic rank equals 175.
bool not_trigonal_check(const CanonicalModel& model);
/// True for 28 relations, false for 36; any other count throws ModelMismatch.
bool hyperelliptic_guard(const CanonicalModel& model);

/// Point of P^9 with entries in F, normalized so the first nonzero entry is 1.
template <class F>
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<F> coords) : coords_(std::move(coords)) {
    if (coords_.size() != kVars) throw InvalidPoint("expected 10 coordinates");
    auto it = std::find_if(coords_.begin(), coords_.end(),
                           [](const F& x) { return !FieldTraits<F>::is_zero(x); });
    if (it == coords_.end()) throw InvalidPoint("all coordinates are zero");
    const F inv = FieldTraits<F>::inverse(*it);
    for (auto& x : coords_) {
      if (!FieldTraits<F>::is_zero(x)) x = x * inv;
    }
  }

  std::span<const F> coords() const { return coords_; }
  const F& operator[](std::size_t i) const { return coords_[i]; }
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::vector<F> coords_;
};

/// Value of sum q_k m_k(x) where the coefficients are mapped into F by `lift`.
template <class F, class C, class Lift>
F evaluate(std::span<const C> coeffs, std::span<const F> x, const F& zero, Lift lift) {
  F acc = zero;
  const auto& mons = quad_monomials();
  for (std::size_t k = 0; k < kQuadMonomials; ++k) {
    if (FieldTraits<C>::is_zero(coeffs[k])) continue;
    const auto [i, j] = mons[k];
    if (FieldTraits<F>::is_zero(x[i]) || FieldTraits<F>::is_zero(x[j])) continue;
    acc += lift(coeffs[k]) * x[i] * x[j];
  }
  return acc;
}

/// All quadrics vanish at p; `lift` maps the rational coefficients into F.
template <class F, class Lift>
bool on_curve(const ProjPoint<F>& p, std::span<const Quadric> quadrics, Lift lift) {
  const F zero = p[0] - p[0];
  for (const auto& q : quadrics) {
    F v = evaluate<F, Rational>(q.coeffs(), p.coords(), zero, lift);
    if (!FieldTraits<F>::is_zero(v)) return false;
  }
  return true;
}

template <class F>
  requires std::is_constructible_v<F, Rational>
bool on_curve(const ProjPoint<F>& p, std::span<const Quadric> quadrics) {
  return on_curve(p, quadrics, [](const Rational& r) { return F(r); });
}

template <class F>
  requires std::is_constructible_v<F, Rational>
bool on_curve(const ProjPoint<F>& p, const CanonicalModel& model) {
  return on_curve(p, std::span<const Quadric>(model.quadrics));
}

/// Quadric after x_i -> sum_j M(j, i) x_j, returned on the 55 monomials over F.
template <class F, class C, class Lift>
std::vector<F> substitute(std::span<const C> coeffs, const ExactMatrix<F>& m, Lift lift) {
  std::vector<F> out(kQuadMonomials, m.zero());
  const auto& mons = quad_monomials();
  for (std::size_t t = 0; t < kQuadMonomials; ++t) {
    if (FieldTraits<C>::is_zero(coeffs[t])) continue;
    const F c = lift(coeffs[t]);
    const auto [i, j] = mons[t];
    for (std::size_t k = 0; k < kVars; ++k) {
      if (FieldTraits<F>::is_zero(m(k, i))) continue;
      const F ck = c * m(k, i);
      for (std::size_t l = 0; l < kVars; ++l) {
        if (FieldTraits<F>::is_zero(m(l, j))) continue;
        out[quad_index(k, l)] += ck * m(l, j);
      }
    }
  }
  return out;
}

/// Linear functionals on the 55-dim quadric space vanishing exactly on the span
/// of the model; a form lies in the span iff every functional kills it.
class QuadricSpan {
 public:
  explicit QuadricSpan(std::span<const Quadric> quadrics);

  std::size_t dimension() const { return kQuadMonomials - functionals_.size(); }
  const std::vector<IntVector>& functionals() const { return functionals_; }
  std::span<const Quadric> quadrics() const { return quadrics_; }

  bool contains(std::span<const Rational> form) const;

  /// Whether substituting m into every model quadric lands back in the span.
  /// `lift` maps Rational and Integer into F.
  template <class F, class Lift>
  bool preserved_by(const ExactMatrix<F>& m, Lift lift) const {
    for (const auto& q : quadrics_) {
      const std::vector<F> t = substitute<F, Rational>(q.coeffs(), m, lift);
      for (const auto& f : functionals_) {
        F acc = m.zero();
        for (std::size_t k = 0; k < kQuadMonomials; ++k) {
          if (f[k] == 0 || FieldTraits<F>::is_zero(t[k])) continue;
          acc += lift(Rational(f[k])) * t[k];
        }
        if (!FieldTraits<F>::is_zero(acc)) return false;
      }
    }
    return true;
  }

 private:
  std::vector<Quadric> quadrics_;
  std::vector<IntVector> functionals_;
};

/// Point of P^9 read off from the q^1 coefficients of e_1..e_10.
ProjPoint<Rational> cusp_at_infinity(const CuspFormBasis& basis);

}  // namespace modcurve
