#include <gtest/gtest.h>

#include "modcurve/errors.hpp"
#include "modcurve/exact.hpp"
#include "properties.hpp"

using namespace modcurve;

namespace {

const NFElem zeta = NFElem::zeta();
const NFElem c = NFElem::c();

TEST(NFElem, CubeRootsOfUnity) {
  EXPECT_EQ(nf_arith(NfOp::mul, zeta, zeta * zeta), NFElem(1));
  EXPECT_EQ(NFElem::z() * NFElem::z(), NFElem(-3));
  EXPECT_EQ(NFElem::z(), NFElem(2) * zeta + NFElem(1));
}

TEST(NFElem, CubeRootOfTwo) {
  EXPECT_EQ((NFElem(1) + c) * (NFElem(1) - c + c * c), NFElem(3));
  EXPECT_EQ(c * c * c, NFElem(2));
}

TEST(NFElem, Inverse) {
  EXPECT_EQ(nf_inverse(c), c * c * NFElem(Rational(1, 2)));
  EXPECT_EQ(zeta.inverse(), zeta * zeta);
  EXPECT_THROW(NFElem().inverse(), DivisionByZero);
}

TEST(NFElem, Sigma) {
  EXPECT_EQ(galois_sigma(c), zeta * c);
  EXPECT_EQ(galois_sigma(zeta), zeta);
  EXPECT_EQ(galois_sigma(galois_sigma(galois_sigma(c))), c);
}

TEST(NFElem, LevelsPromote) {
  EXPECT_EQ(NFElem(1).level(), Level::Q);
  EXPECT_EQ((NFElem(1) + zeta).level(), Level::K);
  EXPECT_EQ((zeta * c).level(), Level::L);
  EXPECT_EQ(NFElem(1), NFElem(1).promoted(Level::L));
}

TEST(NFElem, TextRoundTrip) {
  props::Gen g(props::seed());
  for (int i = 0; i < 100; ++i) {
    const NFElem x = g.element(static_cast<Level>(i % 3));
    EXPECT_EQ(parse_nfelem(to_string(x)), x) << to_string(x);
  }
  EXPECT_EQ(to_string(NFElem(Rational(-1, 2))), "[-1/2]");
  EXPECT_THROW(parse_nfelem("[1, 2"), ParseError);
}

TEST(Property, FieldAxioms) { EXPECT_EQ(props::field_axioms(props::seed()), ""); }
TEST(Property, SigmaIsAutomorphism) { EXPECT_EQ(props::sigma_homomorphism(props::seed()), ""); }

TEST(Primes, Split) {
  EXPECT_TRUE(is_split(31));
  EXPECT_TRUE(is_split(43));
  EXPECT_TRUE(is_split(109));
  EXPECT_FALSE(is_split(13));
  EXPECT_FALSE(is_split(7));
  EXPECT_FALSE(is_split(5));
  EXPECT_THROW(is_split(3), InvalidPrime);
  EXPECT_THROW(is_split(2), InvalidPrime);
  EXPECT_THROW(is_split(33), InvalidPrime);
}

TEST(Primes, SplitMatchesCubeSearch) {
  for (std::uint64_t p = 5; p < 400; ++p) {
    if (!is_prime(p)) continue;
    bool has_zeta = false, has_c = false;
    for (std::uint64_t x = 0; x < p; ++x) {
      has_zeta = has_zeta || (x * x + x + 1) % p == 0;
      has_c = has_c || (x * x * x) % p == 2;
    }
    EXPECT_EQ(is_split(p), has_zeta && has_c) << p;
  }
}

TEST(ResidueMap, ThirtyOne) {
  const ResidueMap m = residue_map(31);
  EXPECT_EQ(m.zeta_image(), 5u);
  EXPECT_EQ(m.c_image(), 4u);
  const auto all = all_residue_maps(31);
  EXPECT_EQ(all.size(), 6u);
  for (const auto& r : all) {
    EXPECT_TRUE(r.zeta_image() == 5 || r.zeta_image() == 25);
    EXPECT_TRUE(r.c_image() == 4 || r.c_image() == 7 || r.c_image() == 20);
  }
  EXPECT_THROW(residue_map(7), NotSplit);
  EXPECT_THROW(ResidueMap(31, 2, 4), NotSplit);
}

TEST(ResidueMap, IsRingHomomorphism) {
  props::Gen g(props::seed());
  for (std::uint64_t p : {31u, 43u, 109u}) {
    for (const auto& m : all_residue_maps(p)) {
      for (int i = 0; i < 30; ++i) {
        NFElem x = g.element(Level::L), y = g.element(Level::L);
        try {
          EXPECT_EQ(m(x * y), m(x) * m(y));
          EXPECT_EQ(m(x + y), m(x) + m(y));
        } catch (const NonIntegral&) {
        }
      }
    }
  }
  EXPECT_THROW(residue_map(31).reduce(Rational(1, 31)), NonIntegral);
}

TEST(ModP, Arithmetic) {
  const ModP a(-3, 31), b(5, 31);
  EXPECT_EQ(a.value, 28u);
  EXPECT_EQ((a * a.inverse()).value, 1u);
  EXPECT_EQ((b - b).value, 0u);
  EXPECT_EQ(ModP(2, 31).pow(5).value, 1u);
  EXPECT_THROW(ModP(0, 31).inverse(), DivisionByZero);
}

}  // namespace
