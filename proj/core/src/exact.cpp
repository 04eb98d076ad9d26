#include "modcurve/exact.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace modcurve {

std::string to_string(const Rational& r) {
  return r.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n') s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("malformed rational: " + s);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// NFElem

namespace {

// (a0 + a1 z)(b0 + b1 z) with z^2 = -1 - z, accumulated into (r0, r1) scaled by f.
void k_mul_add(const Rational& a0, const Rational& a1, const Rational& b0, const Rational& b1,
               long factor, Rational& r0, Rational& r1) {
  Rational t00 = a0 * b0;
  Rational t11 = a1 * b1;
  Rational c0 = t00 - t11;
  Rational c1 = a0 * b1 + a1 * b0 - t11;
  if (factor != 1) {
    c0 *= factor;
    c1 *= factor;
  }
  r0 += c0;
  r1 += c1;
}

struct KElem {
  Rational a0, a1;
};

KElem k_mul(const KElem& x, const KElem& y) {
  KElem r;
  k_mul_add(x.a0, x.a1, y.a0, y.a1, 1, r.a0, r.a1);
  return r;
}

KElem k_add(const KElem& x, const KElem& y) { return {x.a0 + y.a0, x.a1 + y.a1}; }
KElem k_sub(const KElem& x, const KElem& y) { return {x.a0 - y.a0, x.a1 - y.a1}; }
KElem k_scale(const KElem& x, long s) { return {x.a0 * s, x.a1 * s}; }

KElem k_inverse(const KElem& x) {
  Rational norm = x.a0 * x.a0 - x.a0 * x.a1 + x.a1 * x.a1;
  if (norm == 0) throw DivisionByZero();
  return {(x.a0 - x.a1) / norm, -x.a1 / norm};
}

}  // namespace

NFElem NFElem::from_coords(Level level, std::span<const Rational> coords) {
  if (coords.size() != coord_count(level)) {
    throw ParseError("coordinate count does not match level");
  }
  NFElem x;
  x.level_ = level;
  std::copy(coords.begin(), coords.end(), x.coords_.begin());
  return x;
}

NFElem NFElem::zeta() {
  NFElem x;
  x.level_ = Level::K;
  x.coords_[1] = 1;
  return x;
}

NFElem NFElem::z() {
  NFElem x;
  x.level_ = Level::K;
  x.coords_[0] = 1;
  x.coords_[1] = 2;
  return x;
}

NFElem NFElem::c() {
  NFElem x;
  x.level_ = Level::L;
  x.coords_[2] = 1;
  return x;
}

NFElem NFElem::promoted(Level level) const {
  NFElem x = *this;
  x.level_ = std::max(level_, level);
  return x;
}

bool NFElem::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
}

bool NFElem::is_one() const { return coords_[0] == 1 && is_rational(); }

bool NFElem::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& r) { return r == 0; });
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  NFElem out;
  out.level_ = level_;
  if (is_rational()) {
    out.coords_[0] = 1 / coords_[0];
    return out;
  }
  if (level_ == Level::K) {
    KElem inv = k_inverse({coords_[0], coords_[1]});
    out.coords_[0] = inv.a0;
    out.coords_[1] = inv.a1;
    return out;
  }
  // x = A + B c + C c^2 over K with c^3 = 2.
  const KElem a{coords_[0], coords_[1]};
  const KElem b{coords_[2], coords_[3]};
  const KElem c{coords_[4], coords_[5]};
  KElem p = k_sub(k_mul(a, a), k_scale(k_mul(b, c), 2));
  KElem q = k_sub(k_scale(k_mul(c, c), 2), k_mul(a, b));
  KElem r = k_sub(k_mul(b, b), k_mul(a, c));
  KElem norm = k_mul(a, p);
  norm = k_add(norm, k_scale(k_mul(b, r), 2));
  norm = k_add(norm, k_scale(k_mul(c, q), 2));
  KElem inv_norm = k_inverse(norm);
  p = k_mul(p, inv_norm);
  q = k_mul(q, inv_norm);
  r = k_mul(r, inv_norm);
  out.coords_ = {p.a0, p.a1, q.a0, q.a1, r.a0, r.a1};
  return out;
}

NFElem& NFElem::operator+=(const NFElem& rhs) {
  level_ = std::max(level_, rhs.level_);
  for (std::size_t i = 0; i < coord_count(rhs.level_); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& rhs) {
  level_ = std::max(level_, rhs.level_);
  for (std::size_t i = 0; i < coord_count(rhs.level_); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

NFElem& NFElem::operator*=(const NFElem& rhs) { return *this = *this * rhs; }

NFElem& NFElem::operator*=(const Rational& rhs) {
  for (std::size_t i = 0; i < coord_count(level_); ++i) coords_[i] *= rhs;
  return *this;
}

NFElem NFElem::operator-() const {
  NFElem x = *this;
  for (std::size_t i = 0; i < coord_count(level_); ++i) x.coords_[i] = -x.coords_[i];
  return x;
}

NFElem operator*(const NFElem& lhs, const NFElem& rhs) {
  NFElem out;
  out.level_ = std::max(lhs.level_, rhs.level_);
  if (rhs.is_rational()) {
    out.coords_ = lhs.coords_;
    out *= rhs.coords_[0];
    return out;
  }
  if (lhs.is_rational()) {
    out.coords_ = rhs.coords_;
    out *= lhs.coords_[0];
    return out;
  }
  for (int j = 0; j < 3; ++j) {
    const Rational& x0 = lhs.coords_[2 * j];
    const Rational& x1 = lhs.coords_[2 * j + 1];
    if (x0 == 0 && x1 == 0) continue;
    for (int l = 0; l < 3; ++l) {
      const Rational& y0 = rhs.coords_[2 * l];
      const Rational& y1 = rhs.coords_[2 * l + 1];
      if (y0 == 0 && y1 == 0) continue;
      int idx = j + l;
      long factor = 1;
      if (idx >= 3) {
        idx -= 3;
        factor = 2;
      }
      k_mul_add(x0, x1, y0, y1, factor, out.coords_[2 * idx], out.coords_[2 * idx + 1]);
    }
  }
  return out;
}

bool operator==(const NFElem& lhs, const NFElem& rhs) { return lhs.coords_ == rhs.coords_; }

std::size_t NFElem::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const Rational& r : coords_) {
    std::size_t part = mpz_get_ui(r.get_num_mpz_t()) * 31 + mpz_get_ui(r.get_den_mpz_t());
    part ^= static_cast<std::size_t>(sgn(r) + 1) << 7;
    h ^= part + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

NFElem nf_arith(NfOp op, const NFElem& x, const NFElem& y) {
  switch (op) {
    case NfOp::add: return x + y;
    case NfOp::sub: return x - y;
    case NfOp::mul: return x * y;
  }
  return x * y;
}

NFElem nf_inverse(const NFElem& x) { return x.inverse(); }

NFElem galois_sigma(const NFElem& x) {
  if (x.level() != Level::L) return x;
  // k0 + k1 c + k2 c^2  ->  k0 + (zeta k1) c + (zeta^2 k2) c^2
  const NFElem zeta = NFElem::zeta();
  const NFElem zeta2 = zeta * zeta;
  std::array<Rational, 6> out;
  out[0] = x.coord(0);
  out[1] = x.coord(1);
  for (int j = 1; j <= 2; ++j) {
    NFElem k = NFElem::from_coords(Level::K, std::array<Rational, 2>{x.coord(2 * j),
                                                                    x.coord(2 * j + 1)});
    NFElem rotated = k * (j == 1 ? zeta : zeta2);
    out[2 * j] = rotated.coord(0);
    out[2 * j + 1] = rotated.coord(1);
  }
  return NFElem::from_coords(Level::L, out);
}

std::string to_string(const NFElem& x) {
  std::string s = "[";
  auto coords = x.coords();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ", ";
    s += to_string(coords[i]);
  }
  s += "]";
  return s;
}

NFElem parse_nfelem(std::string_view text) {
  auto open = text.find('[');
  auto close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw ParseError("field element must be bracketed: " + std::string(text));
  }
  std::vector<Rational> coords;
  std::string_view body = text.substr(open + 1, close - open - 1);
  while (!body.empty()) {
    auto comma = body.find(',');
    coords.push_back(parse_rational(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  switch (coords.size()) {
    case 1: return NFElem::from_coords(Level::Q, coords);
    case 2: return NFElem::from_coords(Level::K, coords);
    case 6: return NFElem::from_coords(Level::L, coords);
    default: throw ParseError("expected 1, 2 or 6 coordinates: " + std::string(text));
  }
}

// ---------------------------------------------------------------------------
// Prime fields

ModP::ModP(std::int64_t v, std::uint64_t p) : modulus(p) {
  std::int64_t m = static_cast<std::int64_t>(p);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  value = static_cast<std::uint64_t>(r);
}

ModP ModP::pow(std::uint64_t e) const {
  ModP base = *this;
  ModP acc(1, modulus);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

ModP ModP::inverse() const {
  if (value == 0) throw DivisionByZero();
  return pow(modulus - 2);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_split(std::uint64_t p) {
  if (p == 2 || p == 3 || !is_prime(p)) {
    throw InvalidPrime("not a prime different from 2 and 3: " + std::to_string(p));
  }
  if (p % 3 != 1) return false;
  return ModP(2, p).pow((p - 1) / 3).value == 1;
}

ResidueMap::ResidueMap(std::uint64_t p, std::uint64_t zeta_image, std::uint64_t c_image)
    : p_(p), zeta_(zeta_image % p), c_(c_image % p) {
  ModP zeta(static_cast<std::int64_t>(zeta_), p);
  ModP c(static_cast<std::int64_t>(c_), p);
  if (!(zeta * zeta + zeta + ModP(1, p)).is_zero() || !(c * c * c - ModP(2, p)).is_zero()) {
    throw NotSplit("images do not satisfy zeta^2+zeta+1 = 0, c^3 = 2 mod " + std::to_string(p));
  }
}

ModP ResidueMap::reduce(const Rational& r) const {
  mpz_class den = r.get_den() % p_;
  if (den == 0) {
    throw NonIntegral("denominator of " + to_string(r) + " divisible by " + std::to_string(p_));
  }
  mpz_class num = r.get_num() % p_;
  ModP n(num.get_si(), p_);
  ModP d(den.get_si(), p_);
  return n / d;
}

ModP ResidueMap::operator()(const NFElem& x) const {
  ModP zeta(static_cast<std::int64_t>(zeta_), p_);
  ModP c(static_cast<std::int64_t>(c_), p_);
  ModP acc(0, p_);
  ModP cpow(1, p_);
  auto coords = x.coords();
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 2; ++i) {
      std::size_t idx = 2 * j + i;
      if (idx >= coords.size()) break;
      if (coords[idx] == 0) continue;
      acc += reduce(coords[idx]) * cpow * (i ? zeta : ModP(1, p_));
    }
    cpow *= c;
  }
  return acc;
}

std::vector<ResidueMap> all_residue_maps(std::uint64_t p) {
  if (!is_split(p)) throw NotSplit(std::to_string(p) + " does not split completely");
  std::vector<std::uint64_t> zetas, cs;
  for (std::uint64_t x = 0; x < p; ++x) {
    ModP v(static_cast<std::int64_t>(x), p);
    if ((v * v + v + ModP(1, p)).is_zero()) zetas.push_back(x);
    if ((v * v * v - ModP(2, p)).is_zero()) cs.push_back(x);
  }
  std::vector<ResidueMap> maps;
  for (auto z : zetas) {
    for (auto c : cs) maps.emplace_back(p, z, c);
  }
  return maps;
}

ResidueMap residue_map(std::uint64_t p) { return all_residue_maps(p).front(); }

}  // namespace modcurve
