#include "modcurve/canon.hpp"

#include <cctype>
#include <charconv>

namespace modcurve {

const std::array<std::pair<std::size_t, std::size_t>, kQuadMonomials>& quad_monomials() {
  static const auto table = [] {
    std::array<std::pair<std::size_t, std::size_t>, kQuadMonomials> t{};
    for (std::size_t i = 0; i < kVars; ++i) {
      for (std::size_t j = i; j < kVars; ++j) t[quad_index(i, j)] = {i, j};
    }
    return t;
  }();
  return table;
}

std::size_t cubic_index(std::size_t i, std::size_t j, std::size_t k) {
  static const auto table = [] {
    std::vector<std::size_t> t(kVars * kVars * kVars, 0);
    std::size_t n = 0;
    for (std::size_t a = 0; a < kVars; ++a) {
      for (std::size_t b = a; b < kVars; ++b) {
        for (std::size_t c = b; c < kVars; ++c) t[(a * kVars + b) * kVars + c] = n++;
      }
    }
    return t;
  }();
  if (i > j) std::swap(i, j);
  if (j > k) std::swap(j, k);
  if (i > j) std::swap(i, j);
  return table[(i * kVars + j) * kVars + k];
}

// ---------------------------------------------------------------------------
// Quadric

Quadric::Quadric(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != kQuadMonomials) throw Error("Quadric: expected 55 coefficients");
}

Quadric::Quadric(std::span<const Integer> coeffs) : coeffs_(to_rational(coeffs)) {
  if (coeffs_.size() != kQuadMonomials) throw Error("Quadric: expected 55 coefficients");
}

bool Quadric::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r == 0; });
}

std::string Quadric::to_string() const {
  std::string out;
  const auto& mons = quad_monomials();
  for (std::size_t k = 0; k < kQuadMonomials; ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    const auto [i, j] = mons[k];
    if (i == j) {
      out += "x" + std::to_string(i + 1) + "^2";
    } else {
      out += "x" + std::to_string(i + 1) + "*x" + std::to_string(j + 1);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

class QuadricParser {
 public:
  explicit QuadricParser(std::string_view text) : s_(text) {}

  Quadric run() {
    Quadric q;
    skip_ws();
    if (consume('0') && at_end()) return q;
    pos_ = 0;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      Rational coeff = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = number();
        if (peek() == '/') {
          get();
          coeff /= number();
        }
        skip_ws();
        if (!consume('*')) fail("expected '*' after coefficient");
        skip_ws();
      }
      std::size_t i = variable();
      std::size_t j;
      if (consume('^')) {
        if (!consume('2')) fail("only squares are allowed");
        j = i;
      } else {
        if (!consume('*')) fail("expected '*' between variables");
        j = variable();
      }
      q[quad_index(i, j)] += sign * coeff;
    }
    if (first) fail("empty quadric");
    return q;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("quadric: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(s_) + "\"");
  }
  Integer number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }
  std::size_t variable() {
    if (!consume('x')) fail("expected a variable");
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, idx);
    if (ec != std::errc() || idx < 1 || idx > kVars) fail("variable index out of range");
    return idx - 1;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Quadric Quadric::parse(std::string_view text) { return QuadricParser(text).run(); }

std::vector<std::vector<Rational>> coefficient_rows(std::span<const Quadric> quadrics) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(quadrics.size());
  for (const auto& q : quadrics) rows.emplace_back(q.coeffs().begin(), q.coeffs().end());
  return rows;
}

// ---------------------------------------------------------------------------
// Model

std::vector<QSeries> weight4_products(const CuspFormBasis& basis) {
  std::vector<QSeries> out(kQuadMonomials);
  for (const auto& [i, j] : quad_monomials()) out[quad_index(i, j)] = basis.e[i] * basis.e[j];
  return out;
}

CanonicalModel canonical_relations(const CuspFormBasis& basis, bool lll) {
  const std::size_t prec = basis.precision;
  if (prec < kMinPrecision) {
    throw InsufficientPrecision("precision " + std::to_string(prec) + " is below " +
                                std::to_string(kMinPrecision));
  }
  const std::vector<QSeries> products = weight4_products(basis);
  ExactMatrix<Rational> a(kQuadMonomials, prec - 1);
  for (std::size_t k = 0; k < kQuadMonomials; ++k) {
    if (products[k][0] != 0 || products[k][1] != 0) {
      throw ModelMismatch("weight-4 product has a term below q^2");
    }
    for (std::size_t n = 2; n <= prec; ++n) a(k, n - 2) = products[k][n];
  }
  std::vector<IntVector> kernel = kernel_basis(a);
  if (kernel.size() != kModelRelations) {
    throw ModelMismatch("expected 28 quadric relations, found " + std::to_string(kernel.size()));
  }
  if (lll) {
    // Dividing out contents refines the lattice, so repeat until stable.
    bool changed = true;
    while (changed) {
      kernel = lll_reduce(std::move(kernel));
      changed = false;
      for (auto& v : kernel) {
        IntVector p = primitive_part(std::span<const Integer>(v));
        bool flip = true;
        for (std::size_t k = 0; k < v.size() && flip; ++k) flip = p[k] == -v[k];
        if (p != v && !flip) changed = true;
        v = std::move(p);
      }
    }
  }
  CanonicalModel model;
  model.precision = prec;
  model.basis = std::make_shared<const CuspFormBasis>(basis);
  for (const auto& v : kernel) model.quadrics.emplace_back(std::span<const Integer>(v));
  return model;
}

std::size_t cubic_rank(std::span<const Quadric> quadrics) {
  ExactMatrix<Rational> m(kVars * quadrics.size(), kCubicMonomials);
  const auto& mons = quad_monomials();
  for (std::size_t qi = 0; qi < quadrics.size(); ++qi) {
    for (std::size_t k = 0; k < kVars; ++k) {
      const std::size_t row = qi * kVars + k;
      for (std::size_t t = 0; t < kQuadMonomials; ++t) {
        const Rational& c = quadrics[qi][t];
        if (c == 0) continue;
        m(row, cubic_index(mons[t].first, mons[t].second, k)) += c;
      }
    }
  }
  return rank(m);
}

bool not_trigonal_check(const CanonicalModel& model) {
  // 220 cubic monomials minus h^0(3K) = 5 * 9 = 45
  return cubic_rank(model.quadrics) == kCubicMonomials - 45;
}

bool hyperelliptic_guard(const CanonicalModel& model) {
  const std::size_t n = model.quadrics.size();
  if (n == kModelRelations) return true;
  if (n == 36) return false;
  throw ModelMismatch("unexpected number of quadric relations: " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Span membership

QuadricSpan::QuadricSpan(std::span<const Quadric> quadrics)
    : quadrics_(quadrics.begin(), quadrics.end()) {
  ExactMatrix<Rational> a(quadrics.size(), kQuadMonomials);
  for (std::size_t i = 0; i < quadrics.size(); ++i) {
    for (std::size_t k = 0; k < kQuadMonomials; ++k) a(i, k) = quadrics[i][k];
  }
  functionals_ = right_kernel_integral(a);
}

bool QuadricSpan::contains(std::span<const Rational> form) const {
  for (const auto& f : functionals_) {
    Rational acc = 0;
    for (std::size_t k = 0; k < kQuadMonomials; ++k) {
      if (f[k] != 0 && form[k] != 0) acc += f[k] * form[k];
    }
    if (acc != 0) return false;
  }
  return true;
}

ProjPoint<Rational> cusp_at_infinity(const CuspFormBasis& basis) {
  std::vector<Rational> coords;
  for (const auto& e : basis.e) coords.push_back(e[1]);
  return ProjPoint<Rational>(std::move(coords));
}

}  // namespace modcurve
