#include "lcaframe/bspline.hpp"
#include "lcaframe/charfun.hpp"
#include "lcaframe/error.hpp"
#include "lcaframe/uep.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <random>

using namespace lcaframe;

namespace {

const double s2 = std::sqrt(2.0);

UepMatrix haar(const LatticeChain& c, int k) { return assemble_P(c, k, h_filter(c, k, 1), {g_filter_order1(c, k)}); }

OmegaChain shannon8() { return shannon_omega(std::make_shared<LatticeChain>(build_chain_ZN(3))); }

UepMatrix shannon_P(const OmegaChain& om, int k) { return assemble_P(om.chain(), k, h_char(om, k), g_char_shannon(om, k)); }

}  // namespace

TEST(Uep, HaarAtZero) {
  auto c = build_chain_Z(3);
  for (int k = 0; k < 3; ++k) {
    auto P = haar(c, k).evaluate({0.0});
    EXPECT_NEAR(std::abs(P[0][0] - s2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(P[0][1]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(P[1][0]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(P[1][1] - s2), 0.0, 1e-15);
  }
}

TEST(Uep, ShannonIsScaledIdentity) {
  auto om = shannon8();
  for (int k = 0; k < 3; ++k) {
    UepMatrix P = shannon_P(om, k);
    for (const auto& g : enumerate(om.chain().level(k).V, GroupSpec::cyclic(8))) {
      auto m = P.evaluate({to_double(g[0])});
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
          EXPECT_EQ(m[i][j], Complex(i == j ? s2 : 0.0, 0.0)) << "k=" << k;
    }
  }
}

TEST(Uep, DuplicatedRowIsInvalid) {
  auto c = build_chain_Z(3);
  UepMatrix P = assemble_P(c, 0, h_filter(c, 0, 1), {h_filter(c, 0, 1)});
  auto m = P.evaluate({0.0});
  EXPECT_NEAR(std::abs(m[1][0] - s2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m[1][1]), 0.0, 1e-15);
  EXPECT_NEAR(P.residual({0.0}), 2.0, 1e-12);
  EXPECT_NEAR(verify_uep_matrix(P, SamplingPlan::points({{0.0}})).max_residual, 2.0, 1e-12);
}

TEST(Uep, HaarGridResidual) {
  auto c = build_chain_Z(6);
  SamplingPlan plan;
  plan.random_points = 0;
  for (int k = 0; k < 6; ++k) {
    auto r = verify_uep_matrix(haar(c, k), plan);
    EXPECT_LE(r.max_residual, 1e-12);
    EXPECT_GE(r.samples, 4096u);
    EXPECT_FALSE(r.exhaustive);
    EXPECT_EQ(r.certification(), "certified on sampled set");
  }
}

TEST(Uep, ShannonExactlyZero) {
  auto om = shannon8();
  for (int k = 0; k < 3; ++k) {
    auto r = verify_uep_matrix(shannon_P(om, k), SamplingPlan{});
    EXPECT_EQ(r.max_residual, 0.0);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.certification(), "exact");
  }
}

TEST(Uep, EmptyPlanIsRejected) {
  auto c = build_chain_Z(3);
  SamplingPlan empty = SamplingPlan::points({});
  try {
    verify_uep_matrix(haar(c, 0), empty);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
}

TEST(Uep, PeriodicExtension) {
  auto c = build_chain_Z(4);
  for (int k = 0; k < 4; ++k) {
    EXPECT_TRUE(verify_periodic_extension(haar(c, k), {c.nu(k)[1]}));
    EXPECT_TRUE(verify_periodic_extension(haar(c, k), {{Rational(0)}}));
  }
  auto om = shannon8();
  for (int k = 0; k < 3; ++k)
    EXPECT_TRUE(verify_periodic_extension(shannon_P(om, k), {{Rational(std::int64_t{1} << k)}}));
  // 1/64 is not in Lambda_0^perp = (1/16)Z
  EXPECT_THROW(verify_periodic_extension(haar(c, 0), {{Rational(1, 64)}}), Error);
}

TEST(Uep, EntrywiseFormAgrees) {
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto c = build_chain_Z(5);
  for (int N : {1, 2, 4})
    for (int k = 0; k < 5; ++k) {
      UepMatrix P = assemble_P(c, k, h_filter(c, k, N), bspline_wavelet_filters(c, k, N));
      for (int t = 0; t < 200; ++t) {
        Point g{u(rng)};
        double worst = 0;
        for (std::size_t l = 0; l < 2; ++l)
          for (std::size_t lp = 0; lp < 2; ++lp) worst = std::max(worst, std::abs(P.entry_residual(g, l, lp)));
        EXPECT_NEAR(worst, P.residual(g), 1e-12);
      }
    }
}

TEST(Uep, BSplineCertificates) {
  auto c = build_chain_Z(10);
  for (int N : {1, 2, 4})
    for (int k = 0; k < 10; ++k) {
      UepMatrix P = assemble_P(c, k, h_filter(c, k, N), bspline_wavelet_filters(c, k, N));
      EXPECT_EQ(P.rho(), N == 1 ? 1 : N);
      EXPECT_LE(verify_uep_matrix(P, SamplingPlan{}).max_residual, 1e-12);
    }
}

TEST(Uep, MismatchedPeriodicityIsRejected) {
  auto c = build_chain_Z(3);
  EXPECT_THROW(assemble_P(c, 0, h_filter(c, 1, 1), {g_filter_order1(c, 0)}), Error);
  EXPECT_THROW(assemble_P(c, 0, h_filter(c, 0, 1), {}), Error);
}
