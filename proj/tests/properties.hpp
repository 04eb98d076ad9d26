#pragma once

// Seeded randomized property checks shared by the unit tests and the
// acceptance runner.  Each returns an empty string on success, otherwise a
// description of the first counterexample.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "modcurve/canon.hpp"
#include "modcurve/exact.hpp"
#include "modcurve/ideals.hpp"
#include "modcurve/linalg.hpp"
#include "modcurve/qexp.hpp"

namespace props {

using namespace modcurve;

/// MODCURVE_SEED, or 108.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("MODCURVE_SEED")) return std::strtoull(s, nullptr, 10);
  return 108;
}

class Gen {
 public:
  explicit Gen(std::uint64_t s) : rng_(s) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational() {
    Rational r(integer(-9, 9), integer(1, 5));
    r.canonicalize();
    return r;
  }

  NFElem element(Level level) {
    std::vector<Rational> c(coord_count(level));
    for (auto& x : c) x = integer(0, 2) == 0 ? Rational(0) : rational();
    return NFElem::from_coords(level, c);
  }

  NFElem nonzero(Level level) {
    for (;;) {
      NFElem x = element(level);
      if (!x.is_zero()) return x;
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline std::string field_axioms(std::uint64_t s, int trials = 200) {
  Gen g(s);
  const NFElem one(1);
  for (int t = 0; t < trials; ++t) {
    const Level lv = static_cast<Level>(t % 3);
    const NFElem x = g.element(lv), y = g.element(Level::L), w = g.element(lv);
    if (!((x + y) + w == x + (y + w))) return "addition is not associative at trial " + std::to_string(t);
    if (!((x * y) * w == x * (y * w))) return "multiplication is not associative at trial " + std::to_string(t);
    if (!(x * y == y * x)) return "multiplication is not commutative at trial " + std::to_string(t);
    if (!(x * (y + w) == x * y + x * w)) return "distributivity fails at trial " + std::to_string(t);
    if (!(x - x).is_zero()) return "x - x != 0 at trial " + std::to_string(t);
    const NFElem n = g.nonzero(Level::L);
    if (!(n * n.inverse() == one)) return "n * n^-1 != 1 for " + to_string(n);
  }
  return {};
}

inline std::string sigma_homomorphism(std::uint64_t s, int trials = 200) {
  Gen g(s);
  const NFElem zeta = NFElem::zeta(), c = NFElem::c();
  if (!(galois_sigma(c) == zeta * c)) return "sigma(c) != zeta c";
  if (!(galois_sigma(zeta) == zeta)) return "sigma moves zeta";
  for (int t = 0; t < trials; ++t) {
    const NFElem x = g.element(Level::L), y = g.element(Level::L);
    if (!(galois_sigma(x + y) == galois_sigma(x) + galois_sigma(y))) return "sigma not additive";
    if (!(galois_sigma(x * y) == galois_sigma(x) * galois_sigma(y))) return "sigma not multiplicative";
    if (!(galois_sigma(galois_sigma(galois_sigma(x))) == x)) return "sigma^3 != id";
  }
  return {};
}

/// Random m x n rational matrix of rank r.
inline ExactMatrix<Rational> random_rank_matrix(Gen& g, std::size_t m, std::size_t n, std::size_t r) {
  ExactMatrix<Rational> a(m, r), b(r, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < r; ++k) a(i, k) = g.rational();
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < n; ++j) b(k, j) = g.rational();
  // Force full rank of the factors with identity blocks.
  for (std::size_t k = 0; k < r; ++k) {
    a(k % m, k) += 100;
    b(k, k % n) += 100;
  }
  return a * b;
}

inline std::string kernel_rank_duality(std::uint64_t s, int trials = 40) {
  Gen g(s);
  for (int t = 0; t < trials; ++t) {
    const std::size_t m = static_cast<std::size_t>(g.integer(1, 7));
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 7));
    const std::size_t r = static_cast<std::size_t>(g.integer(0, static_cast<long>(std::min(m, n))));
    const ExactMatrix<Rational> a = random_rank_matrix(g, m, n, r);
    const std::size_t rk = rank(a);
    if (rk != modcurve::rank<Rational>(a)) return "fraction-free and field rank disagree";
    const auto right = right_kernel_integral(a);
    const auto left = kernel_basis(a);
    if (rk + right.size() != n) return "rank + nullity != columns";
    if (rk + left.size() != m) return "rank + left nullity != rows";
    for (const auto& v : right) {
      for (std::size_t i = 0; i < m; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * v[j];
        if (acc != 0) return "A v != 0 for a right kernel vector";
      }
    }
    for (const auto& v : left) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t i = 0; i < m; ++i) acc += v[i] * a(i, j);
        if (acc != 0) return "v^T A != 0 for a left kernel vector";
      }
    }
  }
  return {};
}

/// Coordinates of v in the row basis b (full row rank), or empty if v is not
/// in the rational span.
inline std::vector<Rational> coordinates(const std::vector<IntVector>& b, const IntVector& v) {
  const std::size_t n = b.size(), m = v.size();
  ExactMatrix<Rational> aug(m, n + 1);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) aug(j, i) = Rational(b[i][j]);
    aug(j, n) = Rational(v[j]);
  }
  const auto ech = reduced_echelon(aug);
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == n) return {};
    x[ech.pivots[r]] = ech.reduced(r, n);
  }
  return x;
}

inline bool in_lattice(const std::vector<IntVector>& b, const IntVector& v) {
  const auto x = coordinates(b, v);
  if (x.empty()) return false;
  for (const auto& c : x) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

inline std::string lll_preserves_lattice(std::uint64_t s, int trials = 25) {
  Gen g(s);
  for (int t = 0; t < trials; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 6));
    const std::size_t m = n + static_cast<std::size_t>(g.integer(0, 3));
    std::vector<IntVector> b;
    while (b.size() < n) {
      IntVector v(m);
      for (auto& x : v) x = g.integer(-40, 40);
      auto trial = b;
      trial.push_back(v);
      if (rank(rational_matrix(trial, m)) == trial.size()) b = std::move(trial);
    }
    const auto red = lll_reduce(b);
    if (red.size() != n) return "LLL changed the number of vectors";
    if (!is_lll_reduced(red)) return "output is not LLL-reduced";
    for (const auto& v : red)
      if (!in_lattice(b, v)) return "output vector outside the input lattice";
    for (const auto& v : b)
      if (!in_lattice(red, v)) return "input vector outside the output lattice";
  }
  return {};
}

inline PolyAB random_poly(Gen& g, int max_deg, int terms) {
  PolyAB p;
  for (int k = 0; k < terms; ++k) {
    const int da = static_cast<int>(g.integer(0, max_deg));
    const int db = static_cast<int>(g.integer(0, max_deg - da));
    p += PolyAB::monomial(g.element(static_cast<Level>(g.integer(0, 1))), da, db);
  }
  return p;
}

inline std::string buchberger_membership(std::uint64_t s, int trials = 15) {
  Gen g(s);
  for (int t = 0; t < trials; ++t) {
    const LexOrder order = t % 2 ? LexOrder::a_gt_b : LexOrder::b_gt_a;
    std::vector<PolyAB> gens{random_poly(g, 2, 3), random_poly(g, 2, 3)};
    if (gens[0].is_zero() || gens[1].is_zero()) continue;
    const GroebnerBasis gb = buchberger(gens, order);
    for (const auto& f : gens) {
      if (!divide(f, gb.polys, order).remainder.is_zero()) return "generator not reduced to zero";
    }
    PolyAB combo = gens[0] * random_poly(g, 2, 2) + gens[1] * random_poly(g, 2, 2);
    if (!divide(combo, gb.polys, order).remainder.is_zero()) return "ideal member not reduced to zero";
    // Division is exact: f = sum q_i g_i + r.
    const PolyAB f = random_poly(g, 4, 5);
    const Division d = divide(f, gb.polys, order);
    PolyAB back = d.remainder;
    for (std::size_t i = 0; i < d.quotients.size(); ++i) back += d.quotients[i] * gb.polys[i];
    if (!(back == f)) return "f != sum q_i g_i + r";
  }
  return {};
}

/// Hasse bound for every good prime, and a_p = 0 for p = 2 mod 3 on the
/// j = 0 curves (CM by Q(sqrt -3)).  The conductor 54 curves have no CM.
inline std::string hasse_and_supersingular(long bound = 150) {
  const EllipticCurve curves[] = {curves::e27(), curves::e36(), curves::e108(), curves::e54_1(),
                                  curves::e54_2()};
  for (long p = 2; p <= bound; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    for (const auto& e : curves) {
      if (e.conductor % p == 0) continue;
      const long a = ec_ap(e, p);
      if (a * a > 4 * p) return "Hasse bound fails at p = " + std::to_string(p);
      const bool cm = e.a1 == 0 && e.a2 == 0 && e.a4 == 0;
      if (cm && p % 3 == 2 && a != 0) {
        return "a_" + std::to_string(p) + " != 0 for conductor " + std::to_string(e.conductor);
      }
    }
  }
  return {};
}

}  // namespace props
