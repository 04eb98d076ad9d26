#pragma once

// Finite groups of projective 10x10 matrices over L, and structural
// fingerprints compared against an abstract permutation model.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "modcurve/fixtures.hpp"

namespace modcurve {

/// Matrix up to a nonzero scalar, normalized so the first nonzero entry in
/// row-major order is 1.  Equality and hashing are entrywise.
class ProjMatrix {
 public:
  /// Throws DivisionByZero for the zero matrix.
  explicit ProjMatrix(NFMatrix m);
  static ProjMatrix identity(std::size_t n = kVars);

  const NFMatrix& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  const NFElem& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend ProjMatrix operator*(const ProjMatrix& a, const ProjMatrix& b) {
    return ProjMatrix(a.m_ * b.m_);
  }
  ProjMatrix inverse() const;
  /// sigma applied to every entry.
  ProjMatrix galois() const;
  ProjMatrix transposed() const { return ProjMatrix(m_.transposed()); }
  ProjMatrix pow(long e) const;

  friend bool operator==(const ProjMatrix& a, const ProjMatrix& b) { return a.m_ == b.m_; }
  std::size_t hash() const { return hash_; }

 private:
  NFMatrix m_;
  std::size_t hash_ = 0;
};

struct ProjMatrixHash {
  std::size_t operator()(const ProjMatrix& m) const { return m.hash(); }
};

struct B0Generators {
  ProjMatrix w4, w27, s2, s3;
  std::vector<ProjMatrix> list() const { return {w4, w27, s2, s3}; }
};

/// The four generators, block diagonal on V and W.
B0Generators b0_generators();
/// S3 w27 S3 w27.
ProjMatrix tau3();

class MatrixGroup {
 public:
  MatrixGroup() = default;
  MatrixGroup(std::vector<ProjMatrix> generators, std::vector<ProjMatrix> elements);

  std::size_t order() const { return elements_.size(); }
  const std::vector<ProjMatrix>& elements() const { return elements_; }
  const std::vector<ProjMatrix>& generators() const { return generators_; }
  bool contains(const ProjMatrix& g) const { return index_.count(g) != 0; }
  /// Position in elements(); throws Error if absent.
  std::size_t index_of(const ProjMatrix& g) const;

 private:
  std::vector<ProjMatrix> generators_;
  std::vector<ProjMatrix> elements_;
  std::unordered_map<ProjMatrix, std::size_t, ProjMatrixHash> index_;
};

inline constexpr std::size_t kDefaultGroupBound = 10000;

/// Breadth-first closure under right multiplication by generators, starting at
/// the identity.  Throws GroupTooLarge past `bound` elements.
MatrixGroup closure(std::span<const ProjMatrix> generators, std::size_t bound = kDefaultGroupBound);

/// Elements commuting with every element of `with`.
MatrixGroup centralizer(const MatrixGroup& g, std::span<const ProjMatrix> with);
MatrixGroup center(const MatrixGroup& g);

/// Multiplication table on indices 0..n-1; entry [i*n + j] is the index of
/// element_i * element_j.
struct CayleyTable {
  std::size_t n = 0;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> mul;

  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return mul[a * n + b]; }
};

CayleyTable cayley_table(const MatrixGroup& g);

/// Permutations of {0..degree-1} as image vectors.
using Permutation = std::vector<std::uint32_t>;
/// Closure of the generators and its table.
CayleyTable permutation_group_table(std::span<const Permutation> generators);

struct GroupFingerprint {
  std::size_t order = 0;
  std::map<std::size_t, std::size_t> order_histogram;
  std::size_t center_order = 0;
  std::size_t derived_subgroup_order = 0;
  /// Invariant factors d1 | d2 | ... of G / G', each > 1.
  std::vector<std::size_t> abelianization_invariants;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
  std::string to_string() const;
};

GroupFingerprint fingerprint(const CayleyTable& t);
GroupFingerprint fingerprint(const MatrixGroup& g);

/// D6 x (C3 wr C2) as permutations of 9 points: S3 on {0,1,2}, and on
/// {3..8} the 3-cycle (3 4 5) with the block swap (3 6)(4 7)(5 8).
GroupFingerprint reference_fingerprint();

/// Order of g: smallest k >= 1 with g^k = 1 (projectively).  Throws Error
/// past `bound`.
std::size_t element_order(const ProjMatrix& g, std::size_t bound = 1000);

}  // namespace modcurve
