#include <gtest/gtest.h>

#include "modcurve/errors.hpp"
#include "modcurve/fixtures.hpp"
#include "modcurve/qexp.hpp"
#include "properties.hpp"

using namespace modcurve;

namespace {

QSeries series(std::size_t prec, std::vector<std::pair<std::size_t, long>> terms) {
  QSeries s(prec);
  for (const auto& [n, a] : terms) s[n] = a;
  return s;
}

TEST(Eta, Conductor27) {
  const std::array<EtaFactor, 2> f{{{3, 2}, {9, 2}}};
  EXPECT_EQ(eta_product(f, 19), series(19, {{1, 1}, {4, -2}, {7, -1}, {13, 5}, {16, 4}, {19, -7}}));
}

TEST(Eta, Conductor36) {
  const std::array<EtaFactor, 1> f{{{6, 4}}};
  EXPECT_EQ(eta_product(f, 19), series(19, {{1, 1}, {7, -4}, {13, 2}, {19, 8}}));
}

TEST(Eta, WeightMustBeIntegral) {
  const std::array<EtaFactor, 1> f{{{1, 1}}};
  EXPECT_THROW(eta_product(f, 10), NonIntegralWeight);
}

TEST(Curves, TraceOfFrobenius) {
  EXPECT_EQ(ec_ap(curves::e54_1(), 2), -1);
  EXPECT_EQ(ec_ap(curves::e54_2(), 5), -3);
  EXPECT_EQ(ec_ap(curves::e27(), 7), -1);
  EXPECT_EQ(ec_ap(curves::e36(), 7), -4);
}

TEST(Curves, Newforms) {
  EXPECT_EQ(newform(curves::e108(), 19), series(19, {{1, 1}, {7, 5}, {13, -7}, {19, -1}}));
  EXPECT_EQ(newform(curves::e54_1(), 11),
            series(11, {{1, 1}, {2, -1}, {4, 1}, {5, 3}, {7, -1}, {8, -1}, {10, -3}, {11, -3}}));
  EXPECT_EQ(newform(curves::e36(), 1), series(1, {{1, 1}}));
}

TEST(Curves, PrintedExpansions) {
  const PrimitiveForms f = primitive_forms(24);
  const QSeries* forms[] = {&f.f27, &f.f36, &f.f108, &f.f54_1, &f.f54_2};
  const auto& printed = fixtures::printed_expansions();
  ASSERT_EQ(printed.size(), 5u);
  for (std::size_t k = 0; k < printed.size(); ++k) {
    QSeries want(printed[k].precision);
    for (const auto& [n, a] : printed[k].terms) want[n] = a;
    EXPECT_EQ(forms[k]->truncated(printed[k].precision), want) << printed[k].name;
  }
}

TEST(Curves, EtaAgreesWithPointCounts) {
  const PrimitiveForms f = primitive_forms(150);
  EXPECT_EQ(newform(curves::e27(), 150), f.f27);
  EXPECT_EQ(newform(curves::e36(), 150), f.f36);
}

TEST(Property, HasseAndSupersingular) { EXPECT_EQ(props::hasse_and_supersingular(150), ""); }

TEST(Delta, Operator) {
  const QSeries f = primitive_forms(60).f27;
  EXPECT_EQ(delta(f, 1), f);
  const QSeries d2 = delta(f, 2);
  EXPECT_EQ(d2[2], 2);
  EXPECT_EQ(d2[8], -4);
  EXPECT_EQ(d2[14], -2);
  EXPECT_EQ(d2[26], 10);
  EXPECT_EQ(d2[3], 0);
  EXPECT_EQ(delta(delta(f, 2), 3), delta(f, 6));
}

TEST(Basis, Shape) {
  const CuspFormBasis b = standard_basis(60);
  EXPECT_EQ(b.e[7], newform(curves::e108(), 60));
  EXPECT_EQ(b.e[5].valuation(), 2u);
  EXPECT_EQ(b.e[5][2], 2);
  const std::array<long, 10> q1{1, 1, 1, 1, 1, 0, 1, 1, 1, 1};
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(b.e[i][1], q1[i]) << "e" << i + 1;
}

TEST(Basis, PrecisionFloor) {
  EXPECT_NO_THROW(standard_basis(kMinPrecision));
  EXPECT_THROW(standard_basis(kMinPrecision - 1), InsufficientPrecision);
}

}  // namespace
