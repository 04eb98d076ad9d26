#include <gtest/gtest.h>

#include "modcurve/errors.hpp"
#include "modcurve/fixtures.hpp"
#include "modcurve/ideals.hpp"
#include "properties.hpp"

using namespace modcurve;

namespace {

const PolyAB a = PolyAB::a();
const PolyAB b = PolyAB::b();
const NFElem half(Rational(1, 2));

const ConditionIdeal& ideal() {
  static const ConditionIdeal i = condition_ideal(symbolic_M(), fixtures::quadrics());
  return i;
}

TEST(Poly, Printing) {
  EXPECT_EQ((b - PolyAB(NFElem::z()) * a * a).to_string(), "b - z*a^2");
  EXPECT_EQ((a * a * a + PolyAB(half)).to_string(), "a^3 + 1/2");
  EXPECT_EQ(PolyAB().to_string(), "0");
}

TEST(Poly, OrderAndLeading) {
  const PolyAB p = a * a + b;
  EXPECT_EQ(p.leading(LexOrder::a_gt_b).first, (Mono{2, 0}));
  EXPECT_EQ(p.leading(LexOrder::b_gt_a).first, (Mono{0, 1}));
  EXPECT_TRUE(mono_less(Mono{5, 0}, Mono{0, 1}, LexOrder::b_gt_a));
  EXPECT_TRUE(mono_less(Mono{0, 5}, Mono{1, 0}, LexOrder::a_gt_b));
}

TEST(Buchberger, Examples) {
  const std::vector<PolyAB> single{a};
  EXPECT_EQ(buchberger(single, LexOrder::a_gt_b).polys, single);
  const std::vector<PolyAB> gens{a * a - PolyAB(1), b - a};
  const GroebnerBasis gb = buchberger(gens, LexOrder::a_gt_b);
  EXPECT_EQ(gb.polys, (std::vector<PolyAB>{b * b - PolyAB(1), a - b}));
}

TEST(Buchberger, InconsistentIdealIsOne) {
  const std::vector<PolyAB> gens{a - PolyAB(1), a - PolyAB(2)};
  EXPECT_EQ(buchberger(gens, LexOrder::b_gt_a).polys, std::vector<PolyAB>{PolyAB(1)});
}

TEST(Property, BuchbergerMembership) { EXPECT_EQ(props::buchberger_membership(props::seed()), ""); }

TEST(SymbolicM, Shape) {
  const PolyMatrix m = symbolic_M();
  EXPECT_EQ(m(1, 2), PolyAB(NFElem::z().inverse()));
  EXPECT_EQ(m(2, 1), PolyAB(NFElem::z()));
  const NFMatrix one = specialize(m, NFElem(1), NFElem(1));
  EXPECT_NO_THROW(inverse(one));
  // Every 2x2 antidiagonal block squares to the identity.
  const NFElem x = NFElem::c() + NFElem(3), y = NFElem::zeta() - NFElem(2);
  const NFMatrix s = specialize(m, x, y);
  EXPECT_EQ(s * s, NFMatrix::identity(kVars));
}

TEST(ConditionIdeal, Counts) {
  EXPECT_EQ(ideal().functionals, kQuadMonomials - kModelRelations);
  EXPECT_EQ(ideal().evaluated, kModelRelations * (kQuadMonomials - kModelRelations));
  EXPECT_FALSE(ideal().generators.empty());
}

TEST(ConditionIdeal, VanishesOnSolutions) {
  const NFElem c = NFElem::c(), zeta = NFElem::zeta();
  const NFElem a0 = -(c * c * half);
  EXPECT_EQ(a0 * a0 * a0, -half);
  for (const NFElem& root : {a0, a0 * zeta, a0 * zeta * zeta}) {
    const NFElem b0 = NFElem::z() * root * root;
    for (const auto& g : ideal().generators) EXPECT_TRUE(g.evaluate(root, b0).is_zero());
  }
}

TEST(ConditionIdeal, GenuineAutomorphismGivesNothing) {
  const ConditionIdeal w = condition_ideal(constant_matrix(fixtures::w4()), fixtures::quadrics());
  EXPECT_TRUE(w.generators.empty());
}

TEST(Solve, GroebnerBasis) {
  const GroebnerBasis gb = buchberger(ideal().generators, LexOrder::b_gt_a);
  EXPECT_EQ(gb.polys, (std::vector<PolyAB>{a * a * a + PolyAB(half), b - PolyAB(NFElem::z()) * a * a}));
  const GroebnerBasis other = buchberger(ideal().generators, LexOrder::a_gt_b);
  ASSERT_EQ(other.polys.size(), 2u);
  EXPECT_EQ(other.polys[0].leading(LexOrder::a_gt_b).first, (Mono{0, 3}));
}

TEST(Solve, ThreeSolutions) {
  const GroebnerBasis gb = buchberger(ideal().generators, LexOrder::b_gt_a);
  const auto sols = solve_u_parameters(gb);
  ASSERT_EQ(sols.size(), 3u);
  for (const auto& s : sols) {
    EXPECT_EQ(s.a * s.a * s.a, -half);
    EXPECT_EQ(s.b, NFElem::z() * s.a * s.a);
  }
  EXPECT_FALSE(sols[0].a == sols[1].a);
  EXPECT_FALSE(sols[1].a == sols[2].a);
}

TEST(Solve, RejectsOtherShapes) {
  GroebnerBasis wrong;
  wrong.order = LexOrder::b_gt_a;
  wrong.polys = {a - PolyAB(1)};
  EXPECT_THROW(solve_u_parameters(wrong), UnexpectedVariety);
  wrong.polys = {a * a - PolyAB(2), b};
  EXPECT_THROW(solve_u_parameters(wrong), UnexpectedVariety);
}

}  // namespace
