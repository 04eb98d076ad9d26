#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>

#include "modcurve/errors.hpp"
#include "modcurve/verify.hpp"

namespace modcurve {

namespace {

using ModPMatrix = ExactMatrix<ModP>;

ModPMatrix reduce(const NFMatrix& m, const ResidueMap& map) {
  ModPMatrix out(m.rows(), m.cols(), map.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) out(i, j) = map(m(i, j));
    }
  }
  return out;
}

/// Entries of the matrix scaled so that the first nonzero entry is 1.
std::vector<std::uint64_t> normalized_key(const ModPMatrix& m) {
  const auto& d = m.data();
  auto it = std::find_if(d.begin(), d.end(), [](const ModP& x) { return !x.is_zero(); });
  if (it == d.end()) throw Error("reduced matrix is zero");
  const ModP inv = it->inverse();
  std::vector<std::uint64_t> key;
  key.reserve(d.size());
  for (const auto& x : d) key.push_back((x * inv).value);
  return key;
}

/// Quadratic forms in d variables over F_p, coefficient of t_k t_l (k <= l) at
/// position k * d - k (k - 1) / 2 + (l - k).
struct RestrictedForms {
  std::size_t d = 0;
  std::vector<std::vector<std::uint64_t>> forms;
};

RestrictedForms restrict_to(const std::vector<std::vector<ModP>>& basis,
                            const std::vector<std::vector<ModP>>& quadrics, const ModP& zero) {
  const std::size_t d = basis.size();
  const auto& mons = quad_monomials();
  auto value = [&](const std::vector<ModP>& q, const std::vector<ModP>& x) {
    ModP acc = zero;
    for (std::size_t k = 0; k < kQuadMonomials; ++k) {
      if (q[k].is_zero()) continue;
      acc += q[k] * x[mons[k].first] * x[mons[k].second];
    }
    return acc;
  };
  RestrictedForms out{d, {}};
  for (const auto& q : quadrics) {
    std::vector<std::uint64_t> f;
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t l = k; l < d; ++l) {
        if (k == l) {
          f.push_back(value(q, basis[k]).value);
          continue;
        }
        std::vector<ModP> s(kVars, zero);
        for (std::size_t i = 0; i < kVars; ++i) s[i] = basis[k][i] + basis[l][i];
        f.push_back((value(q, s) - value(q, basis[k]) - value(q, basis[l])).value);
      }
    }
    out.forms.push_back(std::move(f));
  }
  // Forms that vanish identically on the subspace tell nothing; drop them.
  std::erase_if(out.forms, [](const std::vector<std::uint64_t>& f) {
    return std::all_of(f.begin(), f.end(), [](std::uint64_t v) { return v == 0; });
  });
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Points of P^{d-1}(F_p) on every restricted form.  Points are indexed by the
/// position of the leading 1 and the base-p digits of the coordinates after it.
std::uint64_t count_projective_zeros(const RestrictedForms& rf, std::uint64_t p, unsigned threads,
                                     std::uint64_t& scanned) {
  const std::size_t d = rf.d;
  scanned = 0;
  if (d == 0) return 0;
  std::vector<std::uint64_t> offsets{0};
  for (std::size_t lead = 0; lead < d; ++lead) offsets.push_back(offsets.back() + ipow(p, d - 1 - lead));
  const std::uint64_t total = offsets.back();
  scanned = total;
  if (rf.forms.empty()) return total;

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> found{0};
  constexpr std::uint64_t kChunk = 1 << 14;
  auto worker = [&] {
    std::vector<std::uint64_t> t(d);
    std::uint64_t local = 0;
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= total) break;
      const std::uint64_t end = std::min(total, begin + kChunk);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        const std::size_t lead = static_cast<std::size_t>(
            std::upper_bound(offsets.begin(), offsets.end(), idx) - offsets.begin() - 1);
        std::uint64_t rest = idx - offsets[lead];
        std::fill(t.begin(), t.begin() + lead, 0);
        t[lead] = 1;
        for (std::size_t k = d; k-- > lead + 1;) {
          t[k] = rest % p;
          rest /= p;
        }
        bool on_all = true;
        for (const auto& f : rf.forms) {
          std::uint64_t acc = 0;
          std::size_t pos = 0;
          for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t l = k; l < d; ++l, ++pos) {
              if (f[pos] && t[k] && t[l]) acc = (acc + f[pos] * t[k] % p * t[l]) % p;
            }
          }
          if (acc != 0) {
            on_all = false;
            break;
          }
        }
        if (on_all) ++local;
      }
    }
    found += local;
  };
  const unsigned n = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return found.load();
}

}  // namespace

unsigned enumeration_threads() {
  if (const char* env = std::getenv("MODCURVE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

FixedPointCensus fixed_point_census(const ResidueMap& map, std::span<const Quadric> quadrics,
                                    const NFMatrix& u_raw, unsigned threads) {
  const std::uint64_t p = map.prime();
  const ModP zero = map.zero();
  const ModPMatrix mt = reduce(u_raw, map).transposed();
  std::vector<std::vector<ModP>> reduced;
  for (const auto& q : quadrics) {
    std::vector<ModP> row;
    for (const auto& c : q.coeffs()) row.push_back(map.reduce(c));
    reduced.push_back(std::move(row));
  }
  FixedPointCensus c;
  c.prime = p;
  for (int sign : {1, -1}) {
    ModPMatrix shifted = mt;
    for (std::size_t i = 0; i < kVars; ++i) shifted(i, i) -= ModP(sign, p);
    const auto basis = right_kernel(shifted);
    std::uint64_t scanned = 0;
    const std::uint64_t hits =
        count_projective_zeros(restrict_to(basis, reduced, zero), p, threads, scanned);
    c.points_scanned += scanned;
    if (sign == 1) {
      c.dim_plus = basis.size();
      c.fixed_plus = hits;
    } else {
      c.dim_minus = basis.size();
      c.fixed_minus = hits;
    }
  }
  return c;
}

ModPResult mod_p_suite(std::uint64_t p, std::span<const Quadric> quadrics, const MatrixGroup& group,
                       const NFMatrix& u_raw, bool census, unsigned threads) {
  const ResidueMap map = residue_map(p);
  const ModP zero = map.zero();
  ModPResult res;
  res.prime = p;

  ModPMatrix q(quadrics.size(), kQuadMonomials, zero);
  for (std::size_t i = 0; i < quadrics.size(); ++i) {
    for (std::size_t k = 0; k < kQuadMonomials; ++k) q(i, k) = map.reduce(quadrics[i][k]);
  }
  res.quadric_rank = rank(q);
  // Linear functionals cutting out the reduced span.
  const auto functionals = right_kernel(q);
  const auto lift = [&](const ModP& x) { return x; };

  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& g : group.elements()) {
    const ModPMatrix m = reduce(g.matrix(), map);
    seen.insert(normalized_key(m));
    bool ok = true;
    for (std::size_t i = 0; i < quadrics.size() && ok; ++i) {
      const auto row = q.row_vector(i);
      const std::vector<ModP> t = substitute<ModP, ModP>(std::span<const ModP>(row), m, lift);
      for (const auto& f : functionals) {
        ModP acc = zero;
        for (std::size_t k = 0; k < kQuadMonomials; ++k) acc += f[k] * t[k];
        if (!acc.is_zero()) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++res.preserved;
  }
  res.distinct = seen.size();
  if (census) {
    res.census = fixed_point_census(map, quadrics, u_raw, threads ? threads : enumeration_threads());
  }
  return res;
}

}  // namespace modcurve
