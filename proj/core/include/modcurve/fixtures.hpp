#pragma once

// Ground-truth data embedded from the published computation: the 28 model
// quadrics, the generator matrices on V and W, and the explicit involution.

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modcurve/canon.hpp"
#include "modcurve/exact.hpp"
#include "modcurve/linalg.hpp"

namespace modcurve {

namespace fixtures {

/// The 28 published quadrics, in the published order, as "x3*x4 + x6*x9 - x5*x10".
const std::array<std::string_view, 28>& quadric_text();
std::vector<Quadric> quadrics();
CanonicalModel model();

/// Action matrices on e_1..e_10 (u*e_i = sum_j M(j, i) e_j), block diagonal
/// with a 4x4 block on V and a 6x6 block on W.
NFMatrix w4();
NFMatrix w27();
NFMatrix s2();
NFMatrix s3();

/// The explicit coordinate map of the new involution, as a matrix T acting on
/// column vectors of coordinates: P -> T P.
NFMatrix theorem_map();

/// (1:1:1:1:1:0:1:1:1:1)
std::vector<Rational> cusp_infinity();

/// A printed expansion: every a_n for 1 <= n <= precision, zeros omitted.
struct PrintedExpansion {
  std::string_view name;
  std::size_t precision;
  std::vector<std::pair<std::size_t, long>> terms;
};

/// f27, f36, f108 through q^24 and f54(1), f54(2) through q^11.
const std::vector<PrintedExpansion>& printed_expansions();

}  // namespace fixtures

/// Block-diagonal 10x10 matrix from a 4x4 and a 6x6 block.
NFMatrix block_diagonal(const NFMatrix& v, const NFMatrix& w);

/// One matrix per block: "name rows cols" then one row per line with entries
/// separated by " ; ".  Entries use the NFElem coordinate format.
void write_matrix(std::ostream& out, std::string_view name, const NFMatrix& m);
/// Reads one block written by write_matrix; returns false at end of input.
bool read_matrix(std::istream& in, std::string& name, NFMatrix& m);

}  // namespace modcurve
