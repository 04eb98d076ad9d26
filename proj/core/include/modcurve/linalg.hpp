#pragma once

// Exact dense linear algebra over Q, K, L and F_p.

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "modcurve/exact.hpp"

namespace modcurve {

/// Per-field operations the generic elimination needs beyond +, -, *.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational one_like(const Rational&) { return 1; }
  static Rational inverse(const Rational& x) {
    if (x == 0) throw DivisionByZero();
    return 1 / x;
  }
};

template <>
struct FieldTraits<NFElem> {
  static bool is_zero(const NFElem& x) { return x.is_zero(); }
  static NFElem one_like(const NFElem&) { return NFElem(1); }
  static NFElem inverse(const NFElem& x) { return x.inverse(); }
};

template <>
struct FieldTraits<ModP> {
  static bool is_zero(const ModP& x) { return x.is_zero(); }
  static ModP one_like(const ModP& zero) { return ModP(1, zero.modulus); }
  static ModP inverse(const ModP& x) { return x.inverse(); }
};

/// Row-major matrix with a uniform entry domain.  The zero prototype fixes the
/// domain for entries created later (needed for F_p, where it carries p).
template <class F>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, const F& zero = F())
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static ExactMatrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols,
                               const F& zero = F()) {
    ExactMatrix m(rows.size(), cols, zero);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
  }

  static ExactMatrix identity(std::size_t n, const F& zero = F()) {
    ExactMatrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldTraits<F>::one_like(zero);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& zero() const { return zero_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const F> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<F> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  const std::vector<F>& data() const { return data_; }

  ExactMatrix transposed() const {
    ExactMatrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// Skips zero entries of the left factor, so block-sparse products are cheap.
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (FieldTraits<F>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& bkj = b(k, j);
          if (FieldTraits<F>::is_zero(bkj)) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  F zero_{};
  std::vector<F> data_;
};

using NFMatrix = ExactMatrix<NFElem>;

/// Reduced row echelon form: pivot entries are 1 and pivot columns are clean.
template <class F>
struct Echelon {
  ExactMatrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of row i
};

template <class F>
Echelon<F> reduced_echelon(ExactMatrix<F> a) {
  using T = FieldTraits<F>;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t sel = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (!T::is_zero(a(i, col))) {
        sel = i;
        break;
      }
    }
    if (sel == a.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(r, j));
    }
    const F inv = T::inverse(a(r, col));
    for (std::size_t j = col; j < a.cols(); ++j) {
      if (!T::is_zero(a(r, j))) a(r, j) = a(r, j) * inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || T::is_zero(a(i, col))) continue;
      const F factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (T::is_zero(a(r, j))) continue;
        a(i, j) = a(i, j) - factor * a(r, j);
      }
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

template <class F>
std::size_t rank(const ExactMatrix<F>& a) {
  return reduced_echelon(a).pivots.size();
}

/// Basis of {v : A v = 0}.
template <class F>
std::vector<std::vector<F>> right_kernel(const ExactMatrix<F>& a) {
  using T = FieldTraits<F>;
  const Echelon<F> ech = reduced_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(a.cols(), a.zero());
    v[free] = T::one_like(a.zero());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of {v : v^T A = 0}.
template <class F>
std::vector<std::vector<F>> left_kernel(const ExactMatrix<F>& a) {
  return right_kernel(a.transposed());
}

/// True iff the row spans of a and b coincide.
template <class F>
bool span_equal(const std::vector<std::vector<F>>& a, const std::vector<std::vector<F>>& b,
                const F& zero = F()) {
  if (a.empty() && b.empty()) return true;
  const std::size_t cols = a.empty() ? b.front().size() : a.front().size();
  auto ra = rank(ExactMatrix<F>::from_rows(a, cols, zero));
  auto rb = rank(ExactMatrix<F>::from_rows(b, cols, zero));
  if (ra != rb) return false;
  std::vector<std::vector<F>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank(ExactMatrix<F>::from_rows(both, cols, zero)) == ra;
}

/// Inverse of a square matrix; throws DivisionByZero when singular.
template <class F>
ExactMatrix<F> inverse(const ExactMatrix<F>& a) {
  const std::size_t n = a.rows();
  ExactMatrix<F> aug(n, 2 * n, a.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = FieldTraits<F>::one_like(a.zero());
  }
  Echelon<F> ech = reduced_echelon(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw DivisionByZero();
  ExactMatrix<F> out(n, n, a.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.reduced(i, n + j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fraction-free routines over Q.  Rows are scaled to primitive integer vectors
// and eliminated by r_i <- p r_i - a r_k followed by division by the content.

using IntVector = std::vector<Integer>;

/// Exact rank by fraction-free elimination.
std::size_t rank(const ExactMatrix<Rational>& a);

/// Left kernel {v : v^T A = 0} as primitive integer vectors.
std::vector<IntVector> kernel_basis(const ExactMatrix<Rational>& a);

/// Right kernel {v : A v = 0} as primitive integer vectors.
std::vector<IntVector> right_kernel_integral(const ExactMatrix<Rational>& a);

/// Primitive integer multiple of a rational vector (sign: first nonzero > 0).
IntVector primitive_part(std::span<const Rational> v);
IntVector primitive_part(std::span<const Integer> v);

std::vector<Rational> to_rational(std::span<const Integer> v);
ExactMatrix<Rational> rational_matrix(const std::vector<IntVector>& rows, std::size_t cols);

/// LLL with delta = 3/4 on linearly independent integer vectors.  Throws
/// NotABasis when the input is dependent.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis);

/// Checks the size condition |mu_ij| <= 1/2 and the Lovasz condition with delta.
bool is_lll_reduced(const std::vector<IntVector>& basis, const Rational& delta = Rational(3, 4));

Integer max_norm(const std::vector<IntVector>& basis);

}  // namespace modcurve
