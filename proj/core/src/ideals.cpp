#include "modcurve/ideals.hpp"

#include <algorithm>
#include <set>

namespace modcurve {

bool mono_less(const Mono& x, const Mono& y, LexOrder order) {
  if (order == LexOrder::a_gt_b) return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  return std::pair(x.b, x.a) < std::pair(y.b, y.a);
}

namespace {

bool divides(const Mono& x, const Mono& y) { return x.a <= y.a && x.b <= y.b; }
Mono lcm(const Mono& x, const Mono& y) { return {std::max(x.a, y.a), std::max(x.b, y.b)}; }
Mono operator-(const Mono& x, const Mono& y) { return {x.a - y.a, x.b - y.b}; }

NFElem power(const NFElem& x, int e) {
  NFElem base = e < 0 ? x.inverse() : x;
  NFElem out(1);
  for (int i = 0; i < std::abs(e); ++i) out = out * base;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyAB

PolyAB::PolyAB(const NFElem& c) {
  if (!c.is_zero()) terms_.emplace(Mono{}, c);
}

PolyAB PolyAB::monomial(const NFElem& c, int deg_a, int deg_b) {
  PolyAB p;
  if (!c.is_zero()) p.terms_.emplace(Mono{deg_a, deg_b}, c);
  return p;
}

NFElem PolyAB::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? NFElem(0) : it->second;
}

std::pair<Mono, NFElem> PolyAB::leading(LexOrder order) const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (mono_less(best->first, it->first, order)) best = it;
  }
  return *best;
}

Mono PolyAB::min_degrees() const {
  if (terms_.empty()) return {};
  Mono m = terms_.begin()->first;
  for (const auto& [k, c] : terms_) {
    m.a = std::min(m.a, k.a);
    m.b = std::min(m.b, k.b);
  }
  return m;
}

bool PolyAB::is_polynomial() const {
  const Mono m = min_degrees();
  return m.a >= 0 && m.b >= 0;
}

void PolyAB::add_term(const Mono& m, const NFElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PolyAB& PolyAB::operator+=(const PolyAB& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

PolyAB& PolyAB::operator-=(const PolyAB& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

PolyAB operator*(const PolyAB& x, const PolyAB& y) {
  PolyAB out;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) out.add_term({mx.a + my.a, mx.b + my.b}, cx * cy);
  }
  return out;
}

PolyAB PolyAB::operator-() const {
  PolyAB out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

PolyAB PolyAB::scaled(const NFElem& s) const {
  if (s.is_zero()) return {};
  PolyAB out = *this;
  for (auto& [m, c] : out.terms_) c = c * s;
  return out;
}

PolyAB PolyAB::shifted(const Mono& s) const {
  PolyAB out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(Mono{m.a + s.a, m.b + s.b}, c);
  return out;
}

PolyAB PolyAB::monic(LexOrder order) const {
  if (is_zero()) return {};
  return scaled(leading(order).second.inverse());
}

NFElem PolyAB::evaluate(const NFElem& a, const NFElem& b) const {
  NFElem acc(0);
  for (const auto& [m, c] : terms_) acc += c * power(a, m.a) * power(b, m.b);
  return acc;
}

std::string k_to_string(const NFElem& x) {
  for (std::size_t i = 2; i < coord_count(x.level()); ++i) {
    if (x.coord(i) != 0) return to_string(x);
  }
  const Rational x1 = x.level() == Level::Q ? Rational(0) : x.coord(1);
  // x0 + x1*zeta with zeta = (z - 1)/2
  const Rational r = x.coord(0) - x1 / 2;
  const Rational s = x1 / 2;
  auto zpart = [&] {
    if (s == 1) return std::string("z");
    if (s == -1) return std::string("-z");
    return s.get_str() + "*z";
  };
  if (s == 0) return r.get_str();
  if (r == 0) return zpart();
  return "(" + r.get_str() + (s < 0 ? " - " : " + ") +
         (abs(s) == 1 ? std::string("z") : Rational(abs(s)).get_str() + "*z") + ")";
}

std::string PolyAB::to_string(LexOrder order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Mono, NFElem>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& x, const auto& y) { return mono_less(y.first, x.first, order); });
  auto var = [](const char* name, int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return name;
    return std::string(name) + "^" + std::to_string(e);
  };
  std::string out;
  for (const auto& [m, c] : sorted) {
    std::string mono;
    // write the larger variable first
    const std::string va = var("a", m.a), vb = var("b", m.b);
    const std::string& first = order == LexOrder::b_gt_a ? vb : va;
    const std::string& second = order == LexOrder::b_gt_a ? va : vb;
    mono = first;
    if (!second.empty()) mono += (mono.empty() ? "" : "*") + second;
    std::string coef = k_to_string(c);
    bool negative = false;
    if (coef.front() == '-') {
      negative = true;
      coef.erase(0, 1);
    }
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (coef == "1") {
      term = mono;
    } else {
      term = coef + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrices

PolyMatrix symbolic_M() {
  const NFElem z = NFElem::z();
  const NFElem zi = z.inverse();
  PolyMatrix m(kVars, kVars);
  m(0, 0) = PolyAB(1);
  m(1, 2) = PolyAB(zi);
  m(2, 1) = PolyAB(z);
  m(3, 3) = PolyAB(1);
  m(4, 6) = PolyAB::monomial(-z, 1, 0);    // -z a
  m(5, 7) = PolyAB::monomial(1, 0, 1);     // b
  m(6, 4) = PolyAB::monomial(-zi, -1, 0);  // (-z a)^-1
  m(7, 5) = PolyAB::monomial(1, 0, -1);    // b^-1
  m(8, 9) = PolyAB::monomial(1, 1, 0);     // a
  m(9, 8) = PolyAB::monomial(1, -1, 0);    // a^-1
  return m;
}

PolyMatrix constant_matrix(const NFMatrix& c) {
  PolyMatrix m(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = PolyAB(c(i, j));
  }
  return m;
}

NFMatrix specialize(const PolyMatrix& m, const NFElem& a, const NFElem& b) {
  NFMatrix out(m.rows(), m.cols(), NFElem(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) out(i, j) = m(i, j).evaluate(a, b);
    }
  }
  return out;
}

ConditionIdeal condition_ideal(const PolyMatrix& m, std::span<const Quadric> quadrics) {
  const QuadricSpan span(quadrics);
  ConditionIdeal out;
  out.functionals = span.functionals().size();
  const auto lift = [](const Rational& r) { return PolyAB(NFElem(r)); };
  for (const auto& q : quadrics) {
    std::vector<PolyAB> t = substitute<PolyAB, Rational>(q.coeffs(), m, lift);
    Mono low{0, 0};
    for (const auto& p : t) {
      if (p.is_zero()) continue;
      const Mono d = p.min_degrees();
      low.a = std::min(low.a, d.a);
      low.b = std::min(low.b, d.b);
    }
    for (auto& p : t) p = p.shifted({-low.a, -low.b});
    for (const auto& f : span.functionals()) {
      ++out.evaluated;
      PolyAB acc;
      for (std::size_t k = 0; k < kQuadMonomials; ++k) {
        if (f[k] == 0 || t[k].is_zero()) continue;
        acc += t[k].scaled(NFElem(Rational(f[k])));
      }
      if (!acc.is_zero()) out.generators.push_back(std::move(acc));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Groebner bases

Division divide(const PolyAB& f, std::span<const PolyAB> g, LexOrder order) {
  Division d;
  d.quotients.resize(g.size());
  std::vector<std::pair<Mono, NFElem>> lead;
  for (const auto& gi : g) lead.push_back(gi.leading(order));
  PolyAB p = f;
  while (!p.is_zero()) {
    const auto [m, c] = p.leading(order);
    bool reduced = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!divides(lead[i].first, m)) continue;
      const PolyAB t = PolyAB::monomial(c / lead[i].second, m.a - lead[i].first.a,
                                        m.b - lead[i].first.b);
      d.quotients[i] += t;
      p -= t * g[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      const PolyAB t = PolyAB::monomial(c, m.a, m.b);
      d.remainder += t;
      p -= t;
    }
  }
  return d;
}

std::vector<PolyAB> linear_reduce(std::span<const PolyAB> gens, LexOrder order) {
  std::vector<Mono> monos;
  for (const auto& p : gens) {
    for (const auto& [m, c] : p.terms()) monos.push_back(m);
  }
  std::sort(monos.begin(), monos.end(),
            [&](const Mono& x, const Mono& y) { return mono_less(y, x, order); });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::map<Mono, std::size_t> col;
  for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;

  NFMatrix a(gens.size(), monos.size(), NFElem(0));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& [m, c] : gens[i].terms()) a(i, col[m]) = c;
  }
  const Echelon<NFElem> ech = reduced_echelon(std::move(a));
  std::vector<PolyAB> out;
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    PolyAB p;
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const NFElem& c = ech.reduced(i, j);
      if (!c.is_zero()) p += PolyAB::monomial(c, monos[j].a, monos[j].b);
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

PolyAB s_polynomial(const PolyAB& f, const PolyAB& g, LexOrder order) {
  const auto [mf, cf] = f.leading(order);
  const auto [mg, cg] = g.leading(order);
  const Mono l = lcm(mf, mg);
  return f.shifted(l - mf).scaled(cf.inverse()) - g.shifted(l - mg).scaled(cg.inverse());
}

std::vector<PolyAB> reduce_basis(std::vector<PolyAB> g, LexOrder order) {
  // drop elements whose leading monomial is divisible by another's
  std::vector<PolyAB> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Mono mi = g[i].leading(order).first;
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Mono mj = g[j].leading(order).first;
      redundant = divides(mj, mi) && (mj != mi || j < i);
    }
    if (!redundant) minimal.push_back(g[i].monic(order));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    const auto [m, c] = minimal[i].leading(order);
    PolyAB tail = minimal[i] - PolyAB::monomial(c, m.a, m.b);
    std::vector<PolyAB> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = PolyAB::monomial(c, m.a, m.b) + divide(tail, others, order).remainder;
  }
  std::sort(minimal.begin(), minimal.end(), [&](const PolyAB& x, const PolyAB& y) {
    return mono_less(x.leading(order).first, y.leading(order).first, order);
  });
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(std::span<const PolyAB> gens, LexOrder order) {
  for (const auto& p : gens) {
    if (!p.is_polynomial()) throw Error("buchberger: negative exponent in input");
  }
  std::vector<PolyAB> g = linear_reduce(gens, order);
  if (g.empty()) return {{}, order};

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
  }
  auto lead = [&](std::size_t i) { return g[i].leading(order).first; };
  auto is_pending = [&](std::size_t i, std::size_t j) {
    return pending.count({std::min(i, j), std::max(i, j)}) != 0;
  };

  while (!pending.empty()) {
    // normal selection: smallest lcm first, ties by index
    auto sel = pending.begin();
    Mono best = lcm(lead(sel->first), lead(sel->second));
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const Mono l = lcm(lead(it->first), lead(it->second));
      if (mono_less(l, best, order)) {
        best = l;
        sel = it;
      }
    }
    const auto [i, j] = *sel;
    pending.erase(sel);

    const Mono mi = lead(i), mj = lead(j);
    // product criterion: coprime leading monomials
    if (std::min(mi.a, mj.a) == 0 && std::min(mi.b, mj.b) == 0) continue;
    // chain criterion
    const Mono l = lcm(mi, mj);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = divides(lead(k), l) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;

    PolyAB r = divide(s_polynomial(g[i], g[j], order), g, order).remainder;
    if (r.is_zero()) continue;
    g.push_back(r.monic(order));
    const std::size_t n = g.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
  }
  return {reduce_basis(std::move(g), order), order};
}

// ---------------------------------------------------------------------------

namespace {

// Rational cube root if one exists.
bool rational_cbrt(const Rational& x, Rational& out) {
  Integer n, d;
  const bool exact_n = mpz_root(n.get_mpz_t(), x.get_num_mpz_t(), 3) != 0;
  const bool exact_d = mpz_root(d.get_mpz_t(), x.get_den_mpz_t(), 3) != 0;
  if (!exact_n || !exact_d) return false;
  out = Rational(n, d);
  out.canonicalize();
  return true;
}

[[noreturn]] void unexpected(const GroebnerBasis& gb, const std::string& why) {
  std::string text;
  for (const auto& p : gb.polys) text += (text.empty() ? "" : ", ") + p.to_string(gb.order);
  throw UnexpectedVariety(why + ": {" + text + "}");
}

}  // namespace

std::vector<UParameter> solve_u_parameters(const GroebnerBasis& gb) {
  if (gb.order != LexOrder::b_gt_a) unexpected(gb, "expected lex order with b > a");
  if (gb.polys.size() != 2) unexpected(gb, "expected two generators");
  const PolyAB& ua = gb.polys[0];
  const PolyAB& lb = gb.polys[1];

  // ua = a^3 + c0 with c0 rational
  if (ua.leading(gb.order).first != Mono{3, 0} || ua.size() != 2 || ua.coeff({0, 0}).is_zero() ||
      !ua.coeff({0, 0}).is_rational()) {
    unexpected(gb, "eliminant is not a^3 + c0 with c0 rational");
  }
  // lb = b - h(a)
  if (lb.leading(gb.order).first != Mono{0, 1}) unexpected(gb, "second generator is not linear in b");
  PolyAB h;
  for (const auto& [m, c] : lb.terms()) {
    if (m == Mono{0, 1}) continue;
    if (m.b != 0) unexpected(gb, "second generator is not b - h(a)");
    h -= PolyAB::monomial(c, m.a, 0);
  }

  const Rational target = -ua.coeff({0, 0}).coord(0);  // a^3 = target
  NFElem root;
  bool found = false;
  Rational scale = 1;
  NFElem cj(1);
  for (int j = 0; j < 3 && !found; ++j) {
    Rational r;
    if (rational_cbrt(target / scale, r)) {
      root = NFElem(r) * cj;
      found = true;
    }
    scale *= 2;
    cj = cj * NFElem::c();
  }
  if (!found) unexpected(gb, "no cube root of the form r*c^j in L");

  std::vector<UParameter> out;
  NFElem zk(1);
  for (int k = 0; k < 3; ++k) {
    const NFElem a = root * zk;
    const NFElem b = h.evaluate(a, NFElem(1));
    zk = zk * NFElem::zeta();
    if (a.is_zero() || b.is_zero()) continue;
    for (const auto& p : gb.polys) {
      if (!p.evaluate(a, b).is_zero()) unexpected(gb, "candidate root does not satisfy the basis");
    }
    out.push_back({a, b});
  }
  return out;
}

}  // namespace modcurve
