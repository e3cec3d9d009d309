#include "lcaframe/bspline.hpp"
#include "lcaframe/charfun.hpp"
#include "lcaframe/error.hpp"
#include "lcaframe/filter.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <random>

using namespace lcaframe;

namespace {

const double s2 = std::sqrt(2.0);

void expect_mask(const PeriodicFilter& f, const std::vector<double>& want) {
  Mask m = mask_coefficients(f);
  std::vector<double> dense(want.size(), 0.0);
  for (std::size_t i = 0; i < m.shifts.size(); ++i) {
    ASSERT_LT(static_cast<std::size_t>(m.shifts[i]), want.size());
    EXPECT_NEAR(m.coeffs[i].imag(), 0.0, 1e-15);
    dense[static_cast<std::size_t>(m.shifts[i])] += m.coeffs[i].real();
  }
  for (std::size_t j = 0; j < want.size(); ++j) EXPECT_NEAR(dense[j], want[j], 1e-15) << "shift " << j;
}

}  // namespace

TEST(Filter, TrigPolynomialAtZero) {
  auto c = build_chain_Z(3);
  PeriodicFilter f(GroupSpec::integers(), c.level(2).annihilator,
                   TrigPolynomial{c.eta(1), {0, 1}, {1 / s2, 1 / s2}});
  EXPECT_NEAR(std::abs(f({0.0}) - s2), 0.0, 1e-15);
}

TEST(Filter, TrigPolynomialNeedsPeriodicStep) {
  auto c = build_chain_Z(3);
  // eta = 1 is not in Lambda_1 = 4Z, so the filter is not Lambda_1^perp-periodic
  EXPECT_THROW(PeriodicFilter(GroupSpec::integers(), c.level(1).annihilator,
                              TrigPolynomial{{Rational(1)}, {0, 1}, {1.0, 1.0}}),
               Error);
}

TEST(Filter, PeriodicityOfConstructedFilters) {
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto zc = build_chain_Z(4);
  std::vector<PeriodicFilter> filters;
  for (int k = 0; k < 4; ++k)
    for (int N : {1, 2, 4}) {
      filters.push_back(h_filter(zc, k, N));
      for (auto& g : bspline_wavelet_filters(zc, k, N)) filters.push_back(g);
    }
  ExampleSpec t;
  t.kind = ExampleKind::TorusT;
  t.M_seq = {2, 3, 2};
  t.L = {Rational(0), Rational(2), Rational(5)};
  OmegaChain om = instantiate_example(t);
  for (int k = 0; k < 2; ++k) {
    filters.push_back(h_char(om, k));
    for (auto& g : g_char_proper(om, k)) filters.push_back(g);
  }
  for (const auto& f : filters) {
    const auto& per = f.periodicity();
    for (int w = 0; w < 8; ++w) {
      double omega = 0;
      for (std::size_t r = 0; r < per.steps().size(); ++r)
        omega = to_double(per.steps()[r]) * static_cast<double>(std::uniform_int_distribution<int>(-5, 5)(rng));
      double worst = 0;
      for (int i = 0; i < 1250; ++i) {
        double g = f.dual_group().kind() == GroupKind::Torus ? u(rng) : std::floor(u(rng) * 40 - 20);
        worst = std::max(worst, std::abs(f({g + omega}) - f({g})));
      }
      EXPECT_LE(worst, 1e-12);
    }
  }
}

TEST(Filter, MaskExpansions) {
  auto c = build_chain_Z(3);
  expect_mask(h_filter(c, 0, 1), {1 / s2, 1 / s2});
  auto g = g_filters_even(c, 0, 1);
  ASSERT_EQ(g.size(), 2u);
  expect_mask(g[0], {0.5, 0.0, -0.5});
  const double q = std::pow(2.0, -1.5);
  expect_mask(g[1], {q, -2 * q, q});
  EXPECT_EQ(mask_coefficients(g[1]).eta, c.eta(0));
}

TEST(Filter, MaskRoundTrip) {
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto c = build_chain_Z(5);
  for (int N : {1, 2, 4})
    for (const auto& f : bspline_wavelet_filters(c, 1, N)) {
      Mask m = mask_coefficients(f);
      const double eta = to_double(m.eta[0]);
      for (int i = 0; i < 1000; ++i) {
        const double g = u(rng);
        Complex s = 0;
        for (std::size_t j = 0; j < m.shifts.size(); ++j)
          s += m.coeffs[j] * std::polar(1.0, -2 * M_PI * static_cast<double>(m.shifts[j]) * eta * g);
        EXPECT_NEAR(std::abs(s - f({g})), 0.0, 1e-12);
      }
    }
}

TEST(Filter, MaskNeedsTrigPolynomial) {
  auto om = shannon_omega(std::make_shared<LatticeChain>(build_chain_ZN(3)));
  EXPECT_THROW(mask_coefficients(h_char(om, 1)), Error);
}

TEST(Filter, ShannonHOnOmega) {
  auto om = shannon_omega(std::make_shared<LatticeChain>(build_chain_ZN(3)));
  for (int k = 0; k < 3; ++k) {
    PeriodicFilter H = h_char(om, k);
    for (const auto& g : enumerate(om.omega(k), GroupSpec::cyclic(8)))
      EXPECT_EQ(H({to_double(g[0])}), Complex(std::sqrt(2.0), 0));
  }
}

TEST(Filter, TabulatedNeverInterpolates) {
  Lattice per(GroupSpec::torus(), {Rational(1)}, true);
  PeriodicFilter f(per, Tabulated{{Rational(0)}, {{0.0}, {0.5}}, {Complex(1), Complex(2)}});
  EXPECT_EQ(f({0.5}), Complex(2));
  EXPECT_EQ(f({1.5}), Complex(2));
  try {
    f({0.25});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InterpolationUnsupported);
  }
}

TEST(Filter, ZeroedFilter) {
  auto c = build_chain_Z(3);
  EXPECT_EQ(h_filter(c, 0, 2).zeroed()({0.0}), Complex(0));
}
