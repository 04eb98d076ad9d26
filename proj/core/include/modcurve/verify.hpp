#pragma once

// End-to-end checks: the specialized involution, conjugation relations, the
// full automorphism group, cusps, the action on differentials, and the
// finite-field suite.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "modcurve/canon.hpp"
#include "modcurve/group.hpp"
#include "modcurve/ideals.hpp"
#include "modcurve/report.hpp"

namespace modcurve {

/// The involution for one solution (a, b).
struct USpecialization {
  UParameter params;
  /// M(a, b) as printed, with M^2 = I exactly.
  NFMatrix raw;
  ProjMatrix proj;
};

/// M(a, z a^2) over L.  Throws NotAnAutomorphism unless the substitution maps
/// the model span to itself.
USpecialization specialize_u(const NFElem& a, const QuadricSpan& span);

/// The conjugation relations and the Galois twist for one u.
VerificationReport check_lemma1(const ProjMatrix& u, const std::string& prefix = "lemma");

/// Closure of the four generators and u; throws GroupTooLarge.
MatrixGroup full_group(const ProjMatrix& u);

/// Points of P^9 over K up to scaling.
using KPoint = ProjPoint<NFElem>;

struct CuspSet {
  std::vector<KPoint> points;
};

/// Orbit of (1:1:1:1:1:0:1:1:1:1) under B0, acting on points by P -> g^T P.
/// Throws ModelMismatch if a point is off the curve.
CuspSet cusp_orbit(std::span<const Quadric> quadrics, const B0Generators& gens);
/// g^T P, normalized.
KPoint act_on_point(const ProjMatrix& g, const KPoint& p);

/// sum over d | n of phi(gcd(d, n/d)).
std::size_t cusp_count(std::size_t n);

/// Characteristic polynomial det(x I - A) by Faddeev-LeVerrier; coefficient of
/// x^k at index k.
std::vector<NFElem> characteristic_polynomial(const NFMatrix& a);
/// Multiplicity of r as a root of the polynomial (coefficients low to high).
std::size_t root_multiplicity(std::vector<NFElem> poly, const NFElem& r);

struct DifferentialAction {
  std::size_t plus_one = 0;   // multiplicity of eigenvalue +1 of M
  std::size_t minus_one = 0;  // multiplicity of eigenvalue -1 of M
  std::size_t genus_plus = 0, genus_minus = 0;  // g_Y for +M and -M
  long ramification_plus = 0, ramification_minus = 0;
};

/// r = (2 g_X - 2) - 2 (2 g_Y - 2) for a double cover, g_X = 10.
DifferentialAction differential_action(const NFMatrix& raw_m);

struct FixedPointCensus {
  std::uint64_t prime = 0;
  std::size_t dim_plus = 0, dim_minus = 0;  // eigenspace dimensions of M^T
  std::uint64_t points_scanned = 0;
  std::uint64_t fixed_plus = 0, fixed_minus = 0;
  std::uint64_t total() const { return fixed_plus + fixed_minus; }
};

struct ModPResult {
  std::uint64_t prime = 0;
  std::size_t distinct = 0;
  std::size_t quadric_rank = 0;
  std::size_t preserved = 0;
  std::optional<FixedPointCensus> census;
};

/// Number of enumeration threads: MODCURVE_THREADS if set, else hardware.
unsigned enumeration_threads();

/// Reduce the model and all group elements at a split prime: distinctness,
/// span preservation, and optionally the fixed-point census of u.
/// Throws NotSplit and NonIntegral.
ModPResult mod_p_suite(std::uint64_t p, std::span<const Quadric> quadrics, const MatrixGroup& group,
                       const NFMatrix& u_raw, bool census, unsigned threads = 0);

/// Points of the curve over F_p lying in the +1 and -1 eigenspaces of u^T.
FixedPointCensus fixed_point_census(const ResidueMap& map, std::span<const Quadric> quadrics,
                                    const NFMatrix& u_raw, unsigned threads);

// ---------------------------------------------------------------------------
// Pipeline

struct PipelineConfig {
  std::size_t precision = kDefaultPrecision;
  std::uint64_t prime = 31;
  int branch = 0;
  bool census = true;
  unsigned threads = 0;
};

/// Intermediate artifacts shared by the stages; each stage fills what it needs.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config) : config_(config) {}
  const PipelineConfig& config() const { return config_; }

  void run_qexp(VerificationReport& r);
  void run_model(VerificationReport& r);
  void run_group(VerificationReport& r);
  void run_solve(VerificationReport& r);
  void run_verify(VerificationReport& r);
  void run_modp(VerificationReport& r, std::uint64_t p);

  const CanonicalModel& model();
  const QuadricSpan& span();
  const MatrixGroup& b0();
  const GroebnerBasis& groebner();
  const std::vector<UParameter>& solutions();
  const std::vector<USpecialization>& branches();
  const MatrixGroup& full();

 private:
  PipelineConfig config_;
  std::optional<CanonicalModel> model_;
  std::unique_ptr<QuadricSpan> span_;
  std::optional<MatrixGroup> b0_;
  std::optional<ConditionIdeal> ideal_;
  std::optional<GroebnerBasis> gb_;
  std::optional<std::vector<UParameter>> solutions_;
  std::optional<std::vector<USpecialization>> branches_;
  std::optional<MatrixGroup> full_;
};

}  // namespace modcurve
