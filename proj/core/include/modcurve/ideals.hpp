#pragma once

// Polynomials in a, b over K, the symbolic candidate matrix M(a, b), the
// condition ideal of M preserving the model, and lex Groebner bases.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "modcurve/canon.hpp"
#include "modcurve/exact.hpp"
#include "modcurve/linalg.hpp"

namespace modcurve {

struct Mono {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Mono&, const Mono&) = default;
};

enum class LexOrder {
  a_gt_b,  // compare deg_a first
  b_gt_a,  // compare deg_b first
};

/// true iff x < y in the given order.
bool mono_less(const Mono& x, const Mono& y, LexOrder order);

/// Finite sum of c * a^i b^j with c in K.  Negative exponents are allowed, so
/// the same type carries Laurent entries; zero coefficients are never stored.
class PolyAB {
 public:
  PolyAB() = default;
  PolyAB(const NFElem& c);  // NOLINT(google-explicit-constructor)
  PolyAB(long c) : PolyAB(NFElem(c)) {}  // NOLINT(google-explicit-constructor)
  static PolyAB monomial(const NFElem& c, int deg_a, int deg_b);
  static PolyAB a() { return monomial(NFElem(1), 1, 0); }
  static PolyAB b() { return monomial(NFElem(1), 0, 1); }

  const std::map<Mono, NFElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  NFElem coeff(const Mono& m) const;

  /// Leading monomial and coefficient; throws Error on the zero polynomial.
  std::pair<Mono, NFElem> leading(LexOrder order) const;
  /// Minimal exponent of a and of b over all terms (0 for zero).
  Mono min_degrees() const;
  bool is_polynomial() const;

  PolyAB& operator+=(const PolyAB& rhs);
  PolyAB& operator-=(const PolyAB& rhs);
  friend PolyAB operator+(PolyAB x, const PolyAB& y) { return x += y; }
  friend PolyAB operator-(PolyAB x, const PolyAB& y) { return x -= y; }
  friend PolyAB operator*(const PolyAB& x, const PolyAB& y);
  PolyAB operator-() const;
  PolyAB scaled(const NFElem& c) const;
  PolyAB shifted(const Mono& m) const;  // multiply by a^m.a b^m.b
  PolyAB monic(LexOrder order) const;

  /// Value at (a, b); negative powers use inverses.
  NFElem evaluate(const NFElem& a, const NFElem& b) const;

  friend bool operator==(const PolyAB&, const PolyAB&) = default;

  /// Terms in decreasing order, coefficients written over 1, z:
  /// "b - z*a^2", "a^3 + 1/2".
  std::string to_string(LexOrder order = LexOrder::b_gt_a) const;

 private:
  void add_term(const Mono& m, const NFElem& c);
  std::map<Mono, NFElem> terms_;
};

/// Coefficient x in K written on 1, z: "1/2", "-z", "(1/2 + 3/2*z)".
std::string k_to_string(const NFElem& x);

using LaurentMono = PolyAB;
using PolyMatrix = ExactMatrix<PolyAB>;

template <>
struct FieldTraits<PolyAB> {
  static bool is_zero(const PolyAB& x) { return x.is_zero(); }
};

/// The 10x10 candidate matrix: V block [[1,0,0,0],[0,0,1/z,0],[0,z,0,0],[0,0,0,1]],
/// W block with entries -za, b, 1/(-za), 1/b, a, 1/a in antidiagonal pairs.
PolyMatrix symbolic_M();
PolyMatrix constant_matrix(const NFMatrix& m);
/// Substitute values for a and b.
NFMatrix specialize(const PolyMatrix& m, const NFElem& a, const NFElem& b);

struct ConditionIdeal {
  std::vector<PolyAB> generators;  // nonzero results
  std::size_t functionals = 0;     // 55 - dim span
  std::size_t evaluated = 0;       // quadrics x functionals
};

/// Substitute x_i -> sum_j M(j, i) x_j into each quadric, clear negative
/// powers, and apply the complement functionals of the span.
ConditionIdeal condition_ideal(const PolyMatrix& m, std::span<const Quadric> quadrics);

struct GroebnerBasis {
  std::vector<PolyAB> polys;  // reduced, monic, sorted by leading monomial
  LexOrder order = LexOrder::b_gt_a;
};

struct Division {
  std::vector<PolyAB> quotients;
  PolyAB remainder;
};

/// f = sum q_i g_i + r with no term of r divisible by any leading term.
Division divide(const PolyAB& f, std::span<const PolyAB> g, LexOrder order);

/// Span of the inputs in reduced echelon form over K (largest monomial first).
std::vector<PolyAB> linear_reduce(std::span<const PolyAB> gens, LexOrder order);

/// Reduced Groebner basis via Buchberger with the product and chain criteria.
/// Inputs must be polynomials (no negative exponents).
GroebnerBasis buchberger(std::span<const PolyAB> gens, LexOrder order);

struct UParameter {
  NFElem a;
  NFElem b;
};

/// Reads the three solutions off {b - z a^2, a^3 + 1/2} (order b > a).
/// The cube roots of -c0 are found as r * c^j * zeta^k with r rational.
/// Throws UnexpectedVariety for any other shape.
std::vector<UParameter> solve_u_parameters(const GroebnerBasis& gb);

}  // namespace modcurve
