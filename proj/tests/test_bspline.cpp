#include "lcaframe/bspline.hpp"
#include "lcaframe/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace lcaframe;

namespace {

const double s2 = std::sqrt(2.0);

Complex dft(const Sequence& s, double gamma) {
  Complex v = 0;
  for (std::int64_t x = s.start; x < s.end(); ++x) v += s.at(x) * std::polar(1.0, -2 * M_PI * static_cast<double>(x) * gamma);
  return v;
}

double nu2(const LatticeChain& c, int k) { return to_double(c.nu(k)[1][0]); }

}  // namespace

TEST(BSpline, TimeValues) {
  auto c = build_chain_Z(2);
  const auto ga = bspline_time(c, 1, 1);
  const auto& a = *ga.samples();
  EXPECT_EQ(a.start, 0);
  ASSERT_EQ(a.values.size(), 2u);
  for (const auto& v : a.values) EXPECT_NEAR(v.real(), 1 / s2, 1e-15);

  const auto gb = bspline_time(c, 0, 2);
  const auto& b = *gb.samples();
  const std::vector<double> tri = {1, 2, 3, 4, 3, 2, 1};
  ASSERT_EQ(b.values.size(), tri.size());
  for (std::size_t i = 0; i < tri.size(); ++i) EXPECT_NEAR(b.values[i].real(), tri[i] * std::pow(4.0, -1.5), 1e-15);

  for (int N : {1, 2, 3, 4}) {
    const auto gd = bspline_time(c, 2, N);
    const auto& d = *gd.samples();
    EXPECT_EQ(d.start, 0);
    ASSERT_EQ(d.values.size(), 1u);
    EXPECT_EQ(d.values[0], Complex(1));
  }
}

TEST(BSpline, SpectrumExamples) {
  auto c = build_chain_Z(2);
  for (int N : {1, 2, 4}) {
    EXPECT_NEAR(std::abs(bspline_hat(c, 1, N, {0.0}) - s2), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(bspline_hat(c, 1, N, {0.5})), 0.0, 1e-15);
  }
}

TEST(BSpline, NormalizationAtZero) {
  for (const auto& c : {build_chain_Z(5), build_chain_ZN(5), build_chain_T({2, 3, 2}), build_chain_Rs_diag({{2, 2}, {2, 4}})})
    for (int k = c.first_level(); k <= c.last_level(); ++k)
      for (int N : {1, 2, 3, 4}) {
        Point zero(static_cast<std::size_t>(c.group().dimension()), 0.0);
        const double v = to_double(c.measure_V(k)) * std::norm(bspline_hat(c, k, N, zero));
        EXPECT_NEAR(v, 1.0, 1e-12) << c.group().name() << " k=" << k << " N=" << N;
      }
}

TEST(BSpline, SpectrumMatchesTransform) {
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto c = build_chain_Z(6);
  for (int k = 0; k <= 6; ++k)
    for (int N : {1, 2, 3, 4}) {
      auto g = bspline_time(c, k, N);
      for (int i = 0; i < 50; ++i) {
        const double gam = u(rng);
        EXPECT_NEAR(std::abs(g.hat({gam}) - dft(*g.samples(), gam)), 0.0, 1e-12);
      }
    }
}

TEST(BSpline, HFilter) {
  auto c = build_chain_Z(4);
  for (int k = 0; k < 4; ++k)
    for (int N : {1, 2, 3, 4}) {
      auto H = h_filter(c, k, N);
      EXPECT_NEAR(std::abs(H({0.0}) - s2), 0.0, 1e-14);
      EXPECT_NEAR(std::abs(H({nu2(c, k)})), 0.0, 1e-14);
    }
  EXPECT_THROW(h_filter(build_chain_T({2, 3}), 0, 1), Error);
}

TEST(BSpline, RefinementResidual) {
  auto c3 = build_chain_Z(3);
  SamplingPlan grid;
  grid.random_points = 0;
  for (int k = 0; k < 3; ++k) EXPECT_LE(refinement_residual(c3, k, 2, grid).max_residual, 1e-12);
  for (int k = 0; k < 3; ++k)
    EXPECT_NEAR(std::sqrt(to_double(c3.measure_Q(k))), s2 * std::sqrt(to_double(c3.measure_Q(k + 1))), 1e-15);

  auto c2 = build_chain_Z(2);
  std::vector<Point> pts;
  for (int j = 0; j < 16; ++j) pts.push_back({j / 16.0});
  EXPECT_LE(refinement_residual(c2, 1, 1, SamplingPlan::points(pts)).max_residual, 1e-15);
}

TEST(BSpline, SplittingHoldsOnBuiltChains) {
  for (const auto& c : {build_chain_Z(6), build_chain_ZN(6)})
    for (int k = c.first_level(); k < c.last_level(); ++k) EXPECT_FALSE(splitting_violation(c, k).has_value());
}

TEST(BSpline, OrderOneWaveletFilter) {
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto c = build_chain_Z(4);
  for (int k = 0; k < 4; ++k) {
    auto G = g_filter_order1(c, k);
    auto H = h_filter(c, k, 1);
    EXPECT_NEAR(std::abs(G({0.0})), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(G({nu2(c, k)}) - s2), 0.0, 1e-14);
    for (int i = 0; i < 1000; ++i) {
      Point g{u(rng)};
      EXPECT_NEAR(std::norm(H(g)) + std::norm(G(g)), 2.0, 1e-12);
    }
  }
}

TEST(BSpline, EvenOrderWaveletFilters) {
  auto c = build_chain_Z(4);
  for (int half : {1, 2, 3}) {
    auto G = g_filters_even(c, 1, half);
    ASSERT_EQ(G.size(), static_cast<std::size_t>(2 * half));
    double sum = std::norm(h_filter(c, 1, 2 * half)({0.0}));
    for (const auto& g : G) {
      EXPECT_NEAR(std::abs(g({0.0})), 0.0, 1e-14);
      sum += std::norm(g({0.0}));
    }
    EXPECT_NEAR(sum, 2.0, 1e-13);
  }
  EXPECT_THROW(g_filters_even(c, 1, 0), Error);
  try {
    bspline_wavelet_filters(c, 1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
  }
}

// (1 - z)^m kills discrete polynomials of degree < m.
TEST(BSpline, MasksAnnihilatePolynomials) {
  auto c = build_chain_Z(4);
  for (int half : {1, 2, 3}) {
    auto G = g_filters_even(c, 0, half);
    for (std::size_t m = 1; m <= G.size(); ++m) {
      Mask mk = mask_coefficients(G[m - 1]);
      for (std::size_t p = 0; p < m; ++p) {
        Complex s = 0;
        for (std::size_t j = 0; j < mk.shifts.size(); ++j) s += mk.coeffs[j] * std::pow(static_cast<double>(mk.shifts[j]), static_cast<double>(p));
        EXPECT_NEAR(std::abs(s), 0.0, 1e-12) << "order " << 2 * half << " m=" << m << " p=" << p;
      }
    }
  }
}

TEST(BSpline, HaarWaveletTime) {
  auto c = build_chain_Z(2);
  Generator psi = wavelet_time(c, 1, g_filter_order1(c, 1), 1);
  ASSERT_TRUE(psi.time.has_value());
  EXPECT_NEAR(std::abs(psi.time->at(0) - 1 / s2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(psi.time->at(1) + 1 / s2), 0.0, 1e-15);
  EXPECT_EQ(psi.time->at(2), Complex(0));
  auto c6 = build_chain_Z(6);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(wavelet_time(c6, k, g_filter_order1(c6, k), 1).time->norm_sq(), 1.0, 1e-12);
}

TEST(BSpline, WaveletsHaveZeroMeanAndMatchSpectrum) {
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto c = build_chain_Z(6);
  for (int N : {1, 2, 4})
    for (int k = 0; k < 6; ++k)
      for (const auto& G : bspline_wavelet_filters(c, k, N)) {
        Generator psi = wavelet_time(c, k, G, N);
        Complex mean = 0;
        for (const auto& v : psi.time->values) mean += v;
        EXPECT_NEAR(std::abs(mean), 0.0, 1e-12);
        auto phi = bspline_time(c, k + 1, N);
        for (int i = 0; i < 100; ++i) {
          const double g = u(rng);
          EXPECT_NEAR(std::abs(dft(*psi.time, g) - G({g}) * phi.hat({g})), 0.0, 1e-12);
        }
        // support length N(|Q_{k+1}| - 1) + N eta_k + 1
        const std::int64_t q = to_double(c.measure_Q(k + 1)), eta = c.eta(k)[0].numerator();
        std::int64_t lo = psi.time->end(), hi = psi.time->start;
        for (std::int64_t x = psi.time->start; x < psi.time->end(); ++x)
          if (std::abs(psi.time->at(x)) > 1e-15) {
            lo = std::min(lo, x);
            hi = x;
          }
        EXPECT_EQ(hi - lo + 1, N * (q - 1) + N * eta + 1) << "N=" << N << " k=" << k;
      }
}

TEST(BSpline, DecayBound) {
  auto c = build_chain_Z(3);
  for (int N : {1, 2}) {
    auto top = decay_bound_check(c, 3, N, 1e-6, {{0.1}, {0.3}, {0.7}});
    EXPECT_TRUE(top.holds);
    EXPECT_EQ(top.hypothesis_points.size(), 3u);
  }
  EXPECT_TRUE(decay_bound_check(c, 1, 2, 0.5, {{0.0}}).holds);
  std::vector<Point> S;
  for (int i = 0; i < 256; ++i) S.push_back({0.05 * i / 255.0});
  auto r = decay_bound_check(c, 2, 2, 0.5, S);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.hypothesis_points.empty());
  EXPECT_GE(r.worst_slack, 0.0);
  EXPECT_THROW(decay_bound_check(c, 2, 2, 1.0, S), Error);
  EXPECT_THROW(decay_bound_check(c, 2, 2, 0.0, S), Error);
}

TEST(BSpline, ContinuousGroups) {
  auto t = build_chain_T({2, 3, 2});
  auto g = bspline_time(t, 1, 2);
  EXPECT_FALSE(g.samples().has_value());
  EXPECT_NEAR(cardinal_bspline(2, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(cardinal_bspline(1, 0.5), 1.0, 1e-15);
  EXPECT_EQ(cardinal_bspline(3, 3.0), 0.0);
}
