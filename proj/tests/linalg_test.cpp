#include <gtest/gtest.h>

#include "modcurve/errors.hpp"
#include "modcurve/linalg.hpp"
#include "properties.hpp"

using namespace modcurve;

namespace {

ExactMatrix<Rational> ints(const std::vector<std::vector<long>>& rows) {
  ExactMatrix<Rational> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

TEST(Kernel, Trivial) {
  EXPECT_EQ(kernel_basis(ExactMatrix<Rational>(3, 3)).size(), 3u);
  EXPECT_TRUE(kernel_basis(ExactMatrix<Rational>::identity(3)).empty());
  EXPECT_EQ(rank(ExactMatrix<Rational>::identity(5)), 5u);
}

TEST(Kernel, PrimitiveIntegers) {
  const auto k = kernel_basis(ints({{2, 4}, {3, 6}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (IntVector{3, -2}));
  const auto r = right_kernel_integral(ints({{2, 4, 6}}));
  EXPECT_EQ(r.size(), 2u);
}

TEST(Kernel, OverOtherFields) {
  NFMatrix m(2, 2);
  m(0, 0) = NFElem::zeta();
  m(0, 1) = NFElem(1);
  m(1, 0) = -(NFElem::zeta() * NFElem::zeta());
  m(1, 1) = -NFElem::zeta();
  EXPECT_EQ(modcurve::rank(m), 1u);
  ExactMatrix<ModP> p(2, 2, ModP(0, 7));
  p(0, 0) = ModP(2, 7);
  p(0, 1) = ModP(4, 7);
  p(1, 0) = ModP(1, 7);
  p(1, 1) = ModP(2, 7);
  EXPECT_EQ(right_kernel(p).size(), 1u);
}

TEST(Kernel, Inverse) {
  const auto m = ints({{2, 1}, {7, 4}});
  EXPECT_EQ(m * inverse(m), ExactMatrix<Rational>::identity(2));
  EXPECT_THROW(inverse(ints({{1, 2}, {2, 4}})), DivisionByZero);
}

TEST(SpanEqual, Basics) {
  using V = std::vector<Rational>;
  const std::vector<V> x{{1, 2, 3}, {0, 1, 1}};
  EXPECT_TRUE(span_equal(x, x));
  EXPECT_TRUE(span_equal(std::vector<V>{{1, 0}}, std::vector<V>{{2, 0}}));
  EXPECT_FALSE(span_equal(std::vector<V>{{1, 0}}, std::vector<V>{{0, 1}}));
}

TEST(Lll, SmallExamples) {
  EXPECT_EQ(lll_reduce({{1, 0}, {4, 1}}), (std::vector<IntVector>{{1, 0}, {0, 1}}));
  const std::vector<IntVector> orth{{2, 0, 0}, {0, 0, -3}, {0, 5, 0}};
  const auto out = lll_reduce(orth);
  ASSERT_EQ(out.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    IntVector neg = orth[i];
    for (auto& x : neg) x = -x;
    EXPECT_TRUE(out[i] == orth[i] || out[i] == neg);
  }
  EXPECT_THROW(lll_reduce({{1, 2}, {2, 4}}), NotABasis);
  EXPECT_TRUE(is_lll_reduced({{1, 0}, {0, 1}}));
  EXPECT_FALSE(is_lll_reduced({{1, 0}, {4, 1}}));
}

TEST(Property, KernelRankDuality) { EXPECT_EQ(props::kernel_rank_duality(props::seed()), ""); }
TEST(Property, LllPreservesLattice) { EXPECT_EQ(props::lll_preserves_lattice(props::seed()), ""); }

TEST(PrimitivePart, Sign) {
  const std::vector<Rational> v{0, Rational(-2, 3), Rational(4, 9)};
  EXPECT_EQ(primitive_part(v), (IntVector{0, 3, -2}));
}

}  // namespace
