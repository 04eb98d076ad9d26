#include "modcurve/linalg.hpp"

#include <numeric>

namespace modcurve {

namespace {

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntVector& v) {
  Integer g = content(v);
  if (g > 1) {
    for (auto& x : v) {
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
}

std::vector<IntVector> integer_rows(const ExactMatrix<Rational>& a) {
  std::vector<IntVector> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(primitive_part(a.row(i)));
  return rows;
}

// Fraction-free reduced echelon form on integer rows.  Each pivot row keeps its
// own pivot value; every other row is cleared in the pivot column.
struct IntEchelon {
  std::vector<IntVector> rows;          // the first pivots.size() rows are pivot rows
  std::vector<std::size_t> pivots;
};

IntEchelon int_echelon(std::vector<IntVector> rows, std::size_t cols, bool full) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Integer p, q;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    // Prefer the pivot with the smallest absolute value to keep entries short.
    std::size_t sel = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      if (sel == rows.size() || abs(rows[i][col]) < abs(rows[sel][col])) sel = i;
    }
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    const IntVector& piv = rows[r];
    const std::size_t start = full ? 0 : r + 1;
    for (std::size_t i = start; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      IntVector& row = rows[i];
      Integer g = gcd(piv[col], row[col]);
      p = piv[col] / g;
      q = row[col] / g;
      for (std::size_t j = 0; j < cols; ++j) {
        if (piv[j] == 0) {
          if (row[j] != 0) row[j] *= p;
        } else {
          row[j] = p * row[j] - q * piv[j];
        }
      }
      make_primitive(row);
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(rows), std::move(pivots)};
}

Integer floor_round(const Rational& x) {
  // nearest integer, halves rounded up
  Rational shifted = x + Rational(1, 2);
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return out;
}

Rational dot(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && y[i] != 0) s += x[i] * y[i];
  }
  return s;
}

}  // namespace

IntVector primitive_part(std::span<const Rational> v) {
  Integer lcm = 1;
  for (const auto& x : v) {
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out[i] = v[i].get_num() * (lcm / v[i].get_den());
  }
  return primitive_part(std::span<const Integer>(out));
}

IntVector primitive_part(std::span<const Integer> v) {
  IntVector out(v.begin(), v.end());
  make_primitive(out);
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : out) y = -y;
    }
    break;
  }
  return out;
}

std::vector<Rational> to_rational(std::span<const Integer> v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

ExactMatrix<Rational> rational_matrix(const std::vector<IntVector>& rows, std::size_t cols) {
  ExactMatrix<Rational> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::size_t rank(const ExactMatrix<Rational>& a) {
  return int_echelon(integer_rows(a), a.cols(), false).pivots.size();
}

std::vector<IntVector> right_kernel_integral(const ExactMatrix<Rational>& a) {
  const std::size_t n = a.cols();
  IntEchelon ech = int_echelon(integer_rows(a), n, true);
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  Integer lcm = 1;
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), ech.rows[i][ech.pivots[i]].get_mpz_t());
  }
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    IntVector v(n);
    v[f] = lcm;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      const Integer& entry = ech.rows[i][f];
      if (entry == 0) continue;
      v[ech.pivots[i]] = -entry * (lcm / ech.rows[i][ech.pivots[i]]);
    }
    basis.push_back(primitive_part(std::span<const Integer>(v)));
  }
  return basis;
}

std::vector<IntVector> kernel_basis(const ExactMatrix<Rational>& a) {
  return right_kernel_integral(a.transposed());
}

std::vector<IntVector> lll_reduce(std::vector<IntVector> b) {
  const std::size_t n = b.size();
  if (n == 0) return b;
  const std::size_t dim = b.front().size();
  const Rational delta(3, 4);

  std::vector<std::vector<Rational>> bstar(n);
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> bn(n);

  auto as_rat = [&](std::size_t i) { return to_rational(b[i]); };
  auto red = [&](std::size_t k, std::size_t l) {
    if (abs(mu[k][l]) * 2 <= 1) return;
    const Integer q = floor_round(mu[k][l]);
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[l][j] != 0) b[k][j] -= q * b[l][j];
    }
    mu[k][l] -= q;
    for (std::size_t i = 0; i < l; ++i) mu[k][i] -= q * mu[l][i];
  };
  auto swap = [&](std::size_t k, std::size_t kmax) {
    std::swap(b[k], b[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
    const Rational m = mu[k][k - 1];
    const Rational big = bn[k] + m * m * bn[k - 1];
    mu[k][k - 1] = m * bn[k - 1] / big;
    const std::vector<Rational> old = bstar[k - 1];
    for (std::size_t j = 0; j < dim; ++j) {
      bstar[k - 1][j] = bstar[k][j] + m * old[j];
      bstar[k][j] = -mu[k][k - 1] * bstar[k][j] + (bn[k] / big) * old[j];
    }
    bn[k] = bn[k - 1] * bn[k] / big;
    bn[k - 1] = big;
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Rational t = mu[i][k];
      mu[i][k] = mu[i][k - 1] - m * t;
      mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
    }
  };

  bstar[0] = as_rat(0);
  bn[0] = dot(bstar[0], bstar[0]);
  if (bn[0] == 0) throw NotABasis("lll_reduce: zero vector in input");
  std::size_t k = 1;
  std::size_t kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      bstar[k] = as_rat(k);
      const std::vector<Rational> bk = bstar[k];
      for (std::size_t j = 0; j < k; ++j) {
        mu[k][j] = dot(bk, bstar[j]) / bn[j];
        if (mu[k][j] == 0) continue;
        for (std::size_t t = 0; t < dim; ++t) bstar[k][t] -= mu[k][j] * bstar[j][t];
      }
      bn[k] = dot(bstar[k], bstar[k]);
      if (bn[k] == 0) throw NotABasis("lll_reduce: input vectors are linearly dependent");
    }
    red(k, k - 1);
    if (bn[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
      swap(k, kmax);
      k = std::max<std::size_t>(1, k - 1);
      continue;
    }
    for (std::size_t l = k - 1; l-- > 0;) red(k, l);
    ++k;
  }
  return b;
}

bool is_lll_reduced(const std::vector<IntVector>& basis, const Rational& delta) {
  const std::size_t n = basis.size();
  std::vector<std::vector<Rational>> bstar(n);
  std::vector<Rational> bn(n);
  for (std::size_t i = 0; i < n; ++i) {
    bstar[i] = to_rational(basis[i]);
    const std::vector<Rational> bi = bstar[i];
    for (std::size_t j = 0; j < i; ++j) {
      const Rational m = dot(bi, bstar[j]) / bn[j];
      if (abs(m) * 2 > 1) return false;
      for (std::size_t t = 0; t < bi.size(); ++t) bstar[i][t] -= m * bstar[j][t];
    }
    bn[i] = dot(bstar[i], bstar[i]);
    if (bn[i] == 0) return false;
    if (i > 0) {
      const Rational m = dot(bi, bstar[i - 1]) / bn[i - 1];
      if (bn[i] < (delta - m * m) * bn[i - 1]) return false;
    }
  }
  return true;
}

Integer max_norm(const std::vector<IntVector>& basis) {
  Integer m = 0;
  for (const auto& v : basis) {
    for (const auto& x : v) {
      if (abs(x) > m) m = abs(x);
    }
  }
  return m;
}

}  // namespace modcurve
