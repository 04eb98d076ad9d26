#include <gtest/gtest.h>

#include "modcurve/errors.hpp"
#include "modcurve/verify.hpp"

using namespace modcurve;

namespace {

Pipeline& pipeline() {
  static Pipeline p(PipelineConfig{});
  return p;
}

const ProjMatrix& u() { return pipeline().branches().at(0).proj; }

TEST(Involution, ThreeBranches) {
  const auto& br = pipeline().branches();
  ASSERT_EQ(br.size(), 3u);
  for (const auto& s : br) EXPECT_EQ(s.raw * s.raw, NFMatrix::identity(kVars));
  const ProjMatrix t = tau3();
  EXPECT_EQ(br[1].proj, u() * t);
  EXPECT_EQ(br[2].proj, u() * t.inverse());
}

TEST(Involution, MatchesExplicitMap) {
  EXPECT_EQ(u().transposed(), ProjMatrix(fixtures::theorem_map()));
}

TEST(Involution, RejectsNonSolutions) {
  EXPECT_THROW(specialize_u(NFElem(1), pipeline().span()), NotAnAutomorphism);
}

TEST(Relations, AllBranches) {
  for (std::size_t k = 0; k < 3; ++k) {
    const VerificationReport r = check_lemma1(pipeline().branches()[k].proj);
    for (const char* id : {"lemma.u_w4_u", "lemma.u_w27_u", "lemma.u_s2_u", "lemma.u_s2_u_alt",
                           "lemma.u_s3_u_corrected", "lemma.u_squared", "lemma.sigma_twist",
                           "lemma.sigma2_twist"}) {
      ASSERT_NE(r.find(id), nullptr) << id;
      EXPECT_EQ(r.find(id)->status, Status::pass) << id << " branch " << k;
    }
    // The factor order as printed does not hold in this convention.
    EXPECT_EQ(r.find("lemma.u_s3_u")->status, Status::fail);
  }
}

TEST(FullGroup, Order216) {
  const MatrixGroup& g = pipeline().full();
  EXPECT_EQ(g.order(), 216u);
  for (const auto& x : pipeline().b0().elements()) EXPECT_TRUE(g.contains(x));
  const MatrixGroup z = center(g);
  EXPECT_EQ(3 % z.order(), 0u);
  EXPECT_FALSE(z.contains(tau3()));
}

TEST(FullGroup, CosetTwist) {
  const ProjMatrix t = tau3();
  for (const auto& x : pipeline().full().elements()) {
    if (pipeline().b0().contains(x)) continue;
    EXPECT_EQ(x.galois() * x.inverse(), t);
  }
}

TEST(Cusps, Orbit) {
  EXPECT_EQ(cusp_count(108), 18u);
  EXPECT_EQ(cusp_count(1), 1u);
  EXPECT_EQ(cusp_count(4), 3u);
  const CuspSet c = cusp_orbit(fixtures::quadrics(), b0_generators());
  EXPECT_EQ(c.points.size(), 18u);
  for (const auto& p : c.points) {
    EXPECT_TRUE(on_curve(p, std::span<const Quadric>(fixtures::quadrics())));
    const KPoint q = act_on_point(u(), p);
    EXPECT_EQ(std::find(c.points.begin(), c.points.end(), q), c.points.end());
  }
}

TEST(Differentials, CharacteristicPolynomial) {
  NFMatrix d(3, 3);
  d(0, 0) = NFElem(2);
  d(1, 1) = NFElem(2);
  d(2, 2) = NFElem(-1);
  const auto chi = characteristic_polynomial(d);  // (x - 2)^2 (x + 1)
  ASSERT_EQ(chi.size(), 4u);
  EXPECT_EQ(chi[0], NFElem(4));
  EXPECT_EQ(chi[3], NFElem(1));
  EXPECT_EQ(root_multiplicity(chi, NFElem(2)), 2u);
  EXPECT_EQ(root_multiplicity(chi, NFElem(-1)), 1u);
  EXPECT_EQ(root_multiplicity(chi, NFElem(1)), 0u);
}

TEST(Differentials, SignAndHurwitz) {
  const DifferentialAction d = differential_action(pipeline().branches()[0].raw);
  EXPECT_EQ(d.plus_one, 6u);
  EXPECT_EQ(d.minus_one, 4u);
  EXPECT_EQ(d.ramification_plus, -2);
  EXPECT_EQ(d.genus_minus, 4u);
  EXPECT_EQ(d.ramification_minus, 6);
}

TEST(ModP, SplitPrimes) {
  for (std::uint64_t p : {31u, 43u, 109u}) {
    const ModPResult r = mod_p_suite(p, fixtures::quadrics(), pipeline().full(),
                                     pipeline().branches()[0].raw, false);
    EXPECT_EQ(r.quadric_rank, 28u) << p;
    EXPECT_EQ(r.distinct, 216u) << p;
    EXPECT_EQ(r.preserved, 216u) << p;
    EXPECT_FALSE(r.census.has_value());
  }
  EXPECT_THROW(mod_p_suite(7, fixtures::quadrics(), pipeline().full(), pipeline().branches()[0].raw, false),
               NotSplit);
}

TEST(ModP, CensusFindsKnownFixedPoints) {
  // The involution fixing the rational cusp has 6 fixed points over F_31.
  std::vector<NFElem> s;
  for (const auto& x : fixtures::cusp_infinity()) s.emplace_back(x);
  const KPoint cusp(s);
  for (const auto& g : pipeline().b0().elements()) {
    if (element_order(g) != 2 || !(act_on_point(g, cusp) == cusp)) continue;
    NFMatrix m = g.matrix();
    for (std::size_t i = 0; i < kVars; ++i)
      for (std::size_t j = 0; j < kVars; ++j) m(i, j) = m(i, j) * NFElem(Rational(1, 2));
    ASSERT_EQ(m * m, NFMatrix::identity(kVars));
    const FixedPointCensus c = fixed_point_census(residue_map(31), fixtures::quadrics(), m, 2);
    EXPECT_EQ(c.fixed_plus + c.fixed_minus, 6u);
    return;
  }
  FAIL() << "no involution fixes the cusp";
}

TEST(Report, DeterministicAndUnique) {
  auto run = [] {
    Pipeline p(PipelineConfig{kDefaultPrecision, 43, 1, false, 1});
    VerificationReport r;
    p.run_group(r);
    p.run_solve(r);
    p.run_modp(r, 43);
    return r.to_json();
  };
  EXPECT_EQ(run(), run());
  VerificationReport r;
  r.add("x", Status::pass, "", "");
  EXPECT_THROW(r.add("x", Status::fail, "", ""), Error);
}

TEST(Report, Fields) {
  VerificationReport r;
  r.check("a.b", true, "w", "claim");
  r.add("a.c", Status::value, "7", "count");
  const std::string j = r.to_json(-1);
  EXPECT_EQ(j,
            "{\"checks\":[{\"check_id\":\"a.b\",\"status\":\"pass\",\"witness\":\"w\",\"paper_ref\":"
            "\"claim\"},{\"check_id\":\"a.c\",\"status\":\"value\",\"witness\":\"7\",\"paper_ref\":"
            "\"count\"}],\"summary\":{\"total\":2,\"pass\":1,\"fail\":0,\"value\":1}}");
}

}  // namespace
