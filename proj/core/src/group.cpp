#include "modcurve/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace modcurve {

ProjMatrix::ProjMatrix(NFMatrix m) : m_(std::move(m)) {
  const auto& data = m_.data();
  auto it = std::find_if(data.begin(), data.end(), [](const NFElem& x) { return !x.is_zero(); });
  if (it == data.end()) throw DivisionByZero();
  if (!it->is_one()) {
    const NFElem inv = it->inverse();
    for (std::size_t i = 0; i < m_.rows(); ++i) {
      for (std::size_t j = 0; j < m_.cols(); ++j) {
        if (!m_(i, j).is_zero()) m_(i, j) = m_(i, j) * inv;
      }
    }
  }
  std::size_t h = m_.rows();
  for (const auto& x : m_.data()) h = h * 1000003u ^ x.hash();
  hash_ = h;
}

ProjMatrix ProjMatrix::identity(std::size_t n) { return ProjMatrix(NFMatrix::identity(n, NFElem(0))); }

ProjMatrix ProjMatrix::inverse() const { return ProjMatrix(modcurve::inverse(m_)); }

ProjMatrix ProjMatrix::galois() const {
  NFMatrix g = m_;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (!g(i, j).is_zero()) g(i, j) = galois_sigma(g(i, j));
    }
  }
  return ProjMatrix(std::move(g));
}

ProjMatrix ProjMatrix::pow(long e) const {
  ProjMatrix base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  ProjMatrix out = identity(size());
  while (n) {
    if (n & 1) out = out * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return out;
}

B0Generators b0_generators() {
  return {ProjMatrix(fixtures::w4()), ProjMatrix(fixtures::w27()), ProjMatrix(fixtures::s2()),
          ProjMatrix(fixtures::s3())};
}

ProjMatrix tau3() {
  const B0Generators g = b0_generators();
  return g.s3 * g.w27 * g.s3 * g.w27;
}

std::size_t element_order(const ProjMatrix& g, std::size_t bound) {
  const ProjMatrix id = ProjMatrix::identity(g.size());
  ProjMatrix x = g;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (x == id) return k;
    x = x * g;
  }
  throw Error("element_order: order exceeds " + std::to_string(bound));
}

// ---------------------------------------------------------------------------

MatrixGroup::MatrixGroup(std::vector<ProjMatrix> generators, std::vector<ProjMatrix> elements)
    : generators_(std::move(generators)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::size_t MatrixGroup::index_of(const ProjMatrix& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw Error("element not in group");
  return it->second;
}

MatrixGroup closure(std::span<const ProjMatrix> generators, std::size_t bound) {
  if (generators.empty()) return MatrixGroup({}, {ProjMatrix::identity()});
  std::vector<ProjMatrix> elements{ProjMatrix::identity(generators.front().size())};
  std::unordered_map<ProjMatrix, std::size_t, ProjMatrixHash> seen{{elements.front(), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      ProjMatrix next = elements[head] * g;
      if (seen.count(next)) continue;
      if (elements.size() >= bound) {
        throw GroupTooLarge("closure exceeds " + std::to_string(bound) + " elements");
      }
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  return MatrixGroup(std::vector<ProjMatrix>(generators.begin(), generators.end()),
                     std::move(elements));
}

MatrixGroup centralizer(const MatrixGroup& g, std::span<const ProjMatrix> with) {
  std::vector<ProjMatrix> out;
  for (const auto& x : g.elements()) {
    bool commutes = std::all_of(with.begin(), with.end(),
                                [&](const ProjMatrix& y) { return x * y == y * x; });
    if (commutes) out.push_back(x);
  }
  return MatrixGroup(out, out);
}

MatrixGroup center(const MatrixGroup& g) {
  // commuting with a generating set is enough
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  return centralizer(g, gens);
}

CayleyTable cayley_table(const MatrixGroup& g) {
  CayleyTable t;
  t.n = g.order();
  t.identity = static_cast<std::uint32_t>(g.index_of(ProjMatrix::identity(g.elements().front().size())));
  t.mul.resize(t.n * t.n);
  const auto& el = g.elements();
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.n; ++j) {
      t.mul[i * t.n + j] = static_cast<std::uint32_t>(g.index_of(el[i] * el[j]));
    }
  }
  return t;
}

CayleyTable permutation_group_table(std::span<const Permutation> generators) {
  const std::size_t degree = generators.front().size();
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  auto compose = [](const Permutation& a, const Permutation& b) {
    // apply a, then b
    Permutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
    return out;
  };
  std::vector<Permutation> elements{id};
  std::map<Permutation, std::uint32_t> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = compose(elements[head], g);
      if (index.count(next)) continue;
      index.emplace(next, static_cast<std::uint32_t>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  CayleyTable t;
  t.n = elements.size();
  t.identity = 0;
  t.mul.resize(t.n * t.n);
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.n; ++j) t.mul[i * t.n + j] = index.at(compose(elements[i], elements[j]));
  }
  return t;
}

namespace {

std::vector<std::uint32_t> inverses(const CayleyTable& t) {
  std::vector<std::uint32_t> inv(t.n);
  for (std::uint32_t a = 0; a < t.n; ++a) {
    for (std::uint32_t b = 0; b < t.n; ++b) {
      if (t(a, b) == t.identity) {
        inv[a] = b;
        break;
      }
    }
  }
  return inv;
}

// Subgroup generated by `gens`, as a membership mask.
std::vector<bool> generated(const CayleyTable& t, const std::vector<std::uint32_t>& gens) {
  std::vector<bool> in(t.n, false);
  std::deque<std::uint32_t> queue{t.identity};
  in[t.identity] = true;
  while (!queue.empty()) {
    const std::uint32_t x = queue.front();
    queue.pop_front();
    for (auto g : gens) {
      const std::uint32_t y = t(x, g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

std::size_t table_order(const CayleyTable& t, std::uint32_t a) {
  std::size_t k = 1;
  for (std::uint32_t x = a; x != t.identity; x = t(x, a)) ++k;
  return k;
}

// Invariant factors of a finite abelian group given by its table.
std::vector<std::size_t> abelian_invariants(const CayleyTable& t) {
  std::size_t m = t.n;
  std::vector<std::size_t> primes;
  for (std::size_t p = 2; p <= m; ++p) {
    if (m % p) continue;
    primes.push_back(p);
    while (m % p == 0) m /= p;
  }
  std::vector<std::size_t> orders(t.n);
  for (std::uint32_t a = 0; a < t.n; ++a) orders[a] = table_order(t, a);

  // elementary divisor exponents per prime, largest first
  std::vector<std::vector<std::size_t>> divisors;
  for (auto p : primes) {
    std::vector<std::size_t> log_count{0};
    for (std::size_t pk = p;; pk *= p) {
      std::size_t count = 0;
      for (auto o : orders) {
        if (pk % o == 0) ++count;
      }
      std::size_t lg = 0;
      for (std::size_t c = count; c > 1; c /= p) ++lg;
      log_count.push_back(lg);
      if (log_count.back() == log_count[log_count.size() - 2]) break;
    }
    // log_count[k] - log_count[k-1] cyclic factors have exponent >= k
    std::vector<std::size_t> powers;
    std::size_t pk = 1;
    for (std::size_t k = 1; k < log_count.size(); ++k) {
      pk *= p;
      const std::size_t at_least_k = log_count[k] - log_count[k - 1];
      const std::size_t at_least_next =
          k + 1 < log_count.size() ? log_count[k + 1] - log_count[k] : 0;
      for (std::size_t i = at_least_next; i < at_least_k; ++i) powers.push_back(pk);
    }
    std::sort(powers.rbegin(), powers.rend());
    divisors.push_back(std::move(powers));
  }
  std::size_t rank = 0;
  for (const auto& d : divisors) rank = std::max(rank, d.size());
  std::vector<std::size_t> inv(rank, 1);
  for (const auto& d : divisors) {
    for (std::size_t i = 0; i < d.size(); ++i) inv[rank - 1 - i] *= d[i];
  }
  return inv;
}

}  // namespace

GroupFingerprint fingerprint(const CayleyTable& t) {
  GroupFingerprint fp;
  fp.order = t.n;
  for (std::uint32_t a = 0; a < t.n; ++a) ++fp.order_histogram[table_order(t, a)];

  for (std::uint32_t a = 0; a < t.n; ++a) {
    bool central = true;
    for (std::uint32_t b = 0; b < t.n && central; ++b) central = t(a, b) == t(b, a);
    if (central) ++fp.center_order;
  }

  const std::vector<std::uint32_t> inv = inverses(t);
  std::vector<bool> is_comm(t.n, false);
  std::vector<std::uint32_t> commutators;
  for (std::uint32_t a = 0; a < t.n; ++a) {
    for (std::uint32_t b = 0; b < t.n; ++b) {
      const std::uint32_t c = t(t(inv[a], inv[b]), t(a, b));
      if (!is_comm[c]) {
        is_comm[c] = true;
        commutators.push_back(c);
      }
    }
  }
  const std::vector<bool> derived = generated(t, commutators);
  fp.derived_subgroup_order = static_cast<std::size_t>(std::count(derived.begin(), derived.end(), true));

  // quotient by the derived subgroup: label cosets, then build the table
  std::vector<std::uint32_t> coset(t.n, UINT32_MAX);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t a = 0; a < t.n; ++a) {
    if (coset[a] != UINT32_MAX) continue;
    const auto label = static_cast<std::uint32_t>(reps.size());
    reps.push_back(a);
    for (std::uint32_t d = 0; d < t.n; ++d) {
      if (derived[d]) coset[t(a, d)] = label;
    }
  }
  CayleyTable q;
  q.n = reps.size();
  q.identity = coset[t.identity];
  q.mul.resize(q.n * q.n);
  for (std::size_t i = 0; i < q.n; ++i) {
    for (std::size_t j = 0; j < q.n; ++j) q.mul[i * q.n + j] = coset[t(reps[i], reps[j])];
  }
  fp.abelianization_invariants = abelian_invariants(q);
  return fp;
}

GroupFingerprint fingerprint(const MatrixGroup& g) { return fingerprint(cayley_table(g)); }

GroupFingerprint reference_fingerprint() {
  const std::vector<Permutation> gens{
      {1, 2, 0, 3, 4, 5, 6, 7, 8},  // (0 1 2)
      {1, 0, 2, 3, 4, 5, 6, 7, 8},  // (0 1)
      {0, 1, 2, 4, 5, 3, 6, 7, 8},  // (3 4 5)
      {0, 1, 2, 6, 7, 8, 3, 4, 5},  // (3 6)(4 7)(5 8)
  };
  return fingerprint(permutation_group_table(gens));
}

std::string GroupFingerprint::to_string() const {
  std::ostringstream s;
  s << "order " << order << "; element orders {";
  bool first = true;
  for (const auto& [o, c] : order_histogram) {
    s << (first ? "" : ", ") << o << ": " << c;
    first = false;
  }
  s << "}; center " << center_order << "; derived subgroup " << derived_subgroup_order
    << "; abelianization [";
  for (std::size_t i = 0; i < abelianization_invariants.size(); ++i) {
    s << (i ? ", " : "") << abelianization_invariants[i];
  }
  s << "]";
  return s.str();
}

}  // namespace modcurve
