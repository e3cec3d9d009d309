#include "lcaframe/error.hpp"
#include "lcaframe/group.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace lcaframe;

namespace {

std::complex<double> pair_exact(const GroupSpec& g, ExactPoint x, ExactPoint gamma) {
  return pairing(g, Element(g, std::move(x)), Element(g.dual(), std::move(gamma)));
}

}  // namespace

TEST(Group, Duals) {
  EXPECT_EQ(GroupSpec::integers().dual(), GroupSpec::torus());
  EXPECT_EQ(GroupSpec::torus().dual(), GroupSpec::integers());
  EXPECT_EQ(GroupSpec::cyclic(8).dual(), GroupSpec::cyclic(8));
  EXPECT_EQ(GroupSpec::euclidean(3).dual(), GroupSpec::euclidean(3));
  EXPECT_THROW(GroupSpec::cyclic(1), Error);
  EXPECT_THROW(GroupSpec::euclidean(0), Error);
}

TEST(Group, HaarPointMasses) {
  EXPECT_EQ(GroupSpec::cyclic(8).point_mass(false), Rational(1));
  EXPECT_EQ(GroupSpec::cyclic(8).point_mass(true), Rational(1, 8));
  EXPECT_EQ(GroupSpec::integers().point_mass(false), Rational(1));
}

TEST(Group, PairingExamples) {
  const auto Z = GroupSpec::integers();
  auto one = pairing(Z, Element(Z, Point{0.0}), Element(Z.dual(), Point{0.37}));
  EXPECT_NEAR(std::abs(one - 1.0), 0.0, 1e-15);
  EXPECT_EQ(pair_exact(Z, {Rational(16)}, {Rational(1, 32)}), std::complex<double>(-1, 0));
  EXPECT_EQ(pair_exact(GroupSpec::cyclic(8), {Rational(2)}, {Rational(2)}), std::complex<double>(-1, 0));
}

TEST(Group, PairingRejectsWrongDual) {
  const auto Z = GroupSpec::integers();
  EXPECT_THROW(pairing(Z, Element(Z, Point{1.0}), Element(Z, Point{1.0})), Error);
}

TEST(Group, ReductionAndValidation) {
  const auto T = GroupSpec::torus();
  EXPECT_EQ(T.reduce(ExactPoint{Rational(5, 4)}), ExactPoint{Rational(1, 4)});
  EXPECT_EQ(GroupSpec::cyclic(8).reduce(ExactPoint{Rational(-1)}), ExactPoint{Rational(7)});
  EXPECT_THROW(Element(GroupSpec::integers(), Point{0.5}), Error);
  EXPECT_THROW(Element(GroupSpec::cyclic(8), ExactPoint{Rational(1, 2)}), Error);
  EXPECT_THROW(Element(GroupSpec::euclidean(2), Point{0.5}), Error);
}

TEST(Group, PairingIsMultiplicativeAndUnimodular) {
  std::mt19937_64 rng(0x5EED);
  std::uniform_int_distribution<std::int64_t> ix(-1000, 1000);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& g : {GroupSpec::integers(), GroupSpec::cyclic(12), GroupSpec::torus(), GroupSpec::euclidean(2)}) {
    for (int t = 0; t < 200; ++t) {
      Point x, y, gam;
      for (int r = 0; r < g.dimension(); ++r) {
        const bool int_side = g.discrete();
        x.push_back(int_side ? static_cast<double>(ix(rng)) : u(rng) * 10);
        y.push_back(int_side ? static_cast<double>(ix(rng)) : u(rng) * 10);
        const bool dual_int = g.dual().discrete();
        gam.push_back(dual_int ? static_cast<double>(ix(rng)) : u(rng) * 10);
      }
      Point xy = x;
      for (std::size_t r = 0; r < xy.size(); ++r) xy[r] += y[r];
      auto a = character(g, xy, gam), b = character(g, x, gam) * character(g, y, gam);
      EXPECT_NEAR(std::abs(a - b), 0.0, 1e-9) << g.name();
      EXPECT_NEAR(std::abs(a), 1.0, 1e-12);
    }
  }
}

TEST(Group, LargeArgumentsKeepTheirPhase) {
  EXPECT_NEAR(frac_mul(1e9 + 1, 0.5), 0.5, 1e-9);
  EXPECT_NEAR(std::abs(unit_turns(Rational(1, 4)) - std::complex<double>(0, 1)), 0.0, 0.0);
}
