#include "modcurve/fixtures.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace modcurve {

namespace {

NFMatrix dense(std::size_t n, std::initializer_list<NFElem> entries) {
  NFMatrix m(n, n, NFElem(0));
  std::size_t k = 0;
  for (const auto& e : entries) {
    m(k / n, k % n) = e;
    ++k;
  }
  return m;
}

NFMatrix diagonal(std::initializer_list<long> d) {
  NFMatrix m(d.size(), d.size(), NFElem(0));
  std::size_t i = 0;
  for (long x : d) {
    m(i, i) = NFElem(x);
    ++i;
  }
  return m;
}

}  // namespace

NFMatrix block_diagonal(const NFMatrix& v, const NFMatrix& w) {
  const std::size_t n = v.rows() + w.rows();
  NFMatrix m(n, n, NFElem(0));
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t j = 0; j < v.cols(); ++j) m(i, j) = v(i, j);
  }
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) m(v.rows() + i, v.cols() + j) = w(i, j);
  }
  return m;
}

namespace fixtures {

const std::array<std::string_view, 28>& quadric_text() {
  static constexpr std::array<std::string_view, 28> text{
      "x3*x4 + x6*x9 - x5*x10",
      "x1*x2 - x6*x9 - x5*x10",
      "x2*x6 - x3*x7 + x1*x10",
      "x4*x5 - x1*x8 + x6*x10",
      "x1*x8 - x3*x9 + x6*x10",
      "x4*x6 + x1*x7 - x3*x10",
      "x4*x7 - 2*x8*x9 + x2*x10",
      "x3*x7 - 2*x5*x8 + x1*x10",
      "x2*x5 - 2*x3*x8 + x1*x9",
      "x2*x5 - 2*x6*x7 - x1*x9",
      "x2*x4 + x7*x9 - 2*x8*x10",
      "x1*x7 - 2*x5*x9 + x3*x10",
      "x2*x3 - x5*x7 - 2*x6*x8",
      "x2*x3 + x1*x4 - 2*x5*x7",
      "x7^2 - x2*x8 - x4*x9 + x10^2",
      "x1^2 - x3^2 + 2*x5*x6",
      "3*x1*x5 - 2*x4*x8 - x2*x9",
      "3*x6^2 - x7^2 + x10^2",
      "3*x1*x3 - x7*x9 - 2*x8*x10",
      "3*x1*x6 + x4*x7 - x2*x10",
      "3*x3*x6 - x2*x7 + x4*x10",
      "3*x3*x5 - x7^2 - x2*x8 - x10^2",
      "3*x1^2 - x4^2 - 2*x9*x10",
      "x2^2 - 3*x3^2 + 2*x9*x10",
      "x2^2 + x4^2 - 4*x7*x8 + 2*x9*x10",
      "x2*x7 - 4*x8^2 + 2*x9^2 + x4*x10",
      "x4*x8 + x2*x9 - 2*x7*x10",
      "3*x5^2 - x2*x7 - x9^2 - x4*x10",
  };
  return text;
}

std::vector<Quadric> quadrics() {
  std::vector<Quadric> out;
  for (auto t : quadric_text()) out.push_back(Quadric::parse(t));
  return out;
}

CanonicalModel model() {
  CanonicalModel m;
  m.quadrics = quadrics();
  return m;
}

NFMatrix w4() {
  return block_diagonal(diagonal({1, -1, 1, -1}), diagonal({1, 1, -1, -1, -1, -1}));
}

NFMatrix w27() {
  return block_diagonal(diagonal({1, 1, -1, -1}), diagonal({-1, -1, 1, 1, -1, -1}));
}

NFMatrix s2() {
  const Rational h(1, 2), mh(-1, 2), m3h(-3, 2);
  const NFMatrix v = dense(4, {mh, m3h, 0, 0,
                               mh, h, 0, 0,
                               0, 0, mh, m3h,
                               0, 0, mh, h});
  const NFMatrix w = dense(6, {mh, 0, 0, 0, m3h, 0,
                               0, 1, 0, 0, 0, 0,
                               0, 0, -1, 0, 0, 0,
                               0, 0, 0, -1, 0, 0,
                               mh, 0, 0, 0, h, 0,
                               0, 0, 0, 0, 0, -1});
  return block_diagonal(v, w);
}

NFMatrix s3() {
  const Rational h(1, 2), mh(-1, 2);
  const NFElem zeta = NFElem::zeta();
  const NFElem zinv = zeta * zeta;
  const NFElem hz = NFElem(h) * NFElem::z();
  const NFElem a = NFElem(mh) * zinv;
  const NFElem b = NFElem(mh) * (NFElem(1) - zeta);
  const NFMatrix v = dense(4, {mh, 0, hz, 0,
                               0, mh, 0, hz,
                               hz, 0, mh, 0,
                               0, hz, 0, mh});
  const NFMatrix w = dense(6, {zeta, 0, 0, 0, 0, 0,
                               0, zinv, 0, 0, 0, 0,
                               0, 0, a, 0, 0, b,
                               0, 0, 0, zeta, 0, 0,
                               0, 0, 0, 0, zeta, 0,
                               0, 0, b, 0, 0, a});
  return block_diagonal(v, w);
}

NFMatrix theorem_map() {
  const NFElem z = NFElem::z();
  const NFElem c = NFElem::c();
  const NFElem zi = z.inverse();
  const NFElem ci = c.inverse();
  NFMatrix t(kVars, kVars, NFElem(0));
  t(0, 0) = 1;
  t(1, 2) = z;
  t(2, 1) = zi;
  t(3, 3) = 1;
  t(4, 6) = c * zi;
  t(5, 7) = c * c * zi;
  t(6, 4) = z * ci;
  t(7, 5) = z * ci * ci;
  t(8, 9) = -c;
  t(9, 8) = -ci;
  return t;
}

std::vector<Rational> cusp_infinity() {
  std::vector<Rational> p(kVars, Rational(1));
  p[5] = 0;
  return p;
}

const std::vector<PrintedExpansion>& printed_expansions() {
  static const std::vector<PrintedExpansion> table{
      {"f27", 24, {{1, 1}, {4, -2}, {7, -1}, {13, 5}, {16, 4}, {19, -7}}},
      {"f36", 24, {{1, 1}, {7, -4}, {13, 2}, {19, 8}}},
      {"f108", 24, {{1, 1}, {7, 5}, {13, -7}, {19, -1}}},
      {"f54_1", 11, {{1, 1}, {2, -1}, {4, 1}, {5, 3}, {7, -1}, {8, -1}, {10, -3}, {11, -3}}},
      {"f54_2", 11, {{1, 1}, {2, 1}, {4, 1}, {5, -3}, {7, -1}, {8, 1}, {10, -3}, {11, 3}}},
  };
  return table;
}

}  // namespace fixtures

void write_matrix(std::ostream& out, std::string_view name, const NFMatrix& m) {
  out << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << " ; ";
      out << to_string(m(i, j));
    }
    out << '\n';
  }
}

bool read_matrix(std::istream& in, std::string& name, NFMatrix& m) {
  std::string header;
  while (std::getline(in, header) && header.empty()) {
  }
  if (!in && header.empty()) return false;
  std::istringstream hs(header);
  std::size_t rows = 0, cols = 0;
  if (!(hs >> name >> rows >> cols)) throw ParseError("matrix header: \"" + header + "\"");
  m = NFMatrix(rows, cols, NFElem(0));
  for (std::size_t i = 0; i < rows; ++i) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("matrix " + name + ": missing row");
    std::size_t start = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t end = line.find(" ; ", start);
      const bool last = j + 1 == cols;
      if (last != (end == std::string::npos)) {
        throw ParseError("matrix " + name + ": wrong number of entries in row " + std::to_string(i));
      }
      m(i, j) = parse_nfelem(std::string_view(line).substr(start, last ? std::string::npos : end - start));
      start = end + 3;
    }
  }
  return true;
}

}  // namespace modcurve
