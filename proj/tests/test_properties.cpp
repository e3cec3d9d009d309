#include "lcaframe/analysis.hpp"
#include "lcaframe/serialize.hpp"
#include "lcaframe/uep.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lcaframe;

namespace {

// Hand-rolled generators for descriptors, points and test functions.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(between(0, static_cast<int>(v.size()) - 1))];
  }

  Json bspline_integers() {
    return {{"group", {{"variant", "integers"}}},
            {"M", between(1, 7)},
            {"family", {{"bspline", {{"order", pick<int>({1, 2, 4, 6})}}}}}};
  }
  Json bspline_cyclic() {
    const int M = between(1, 6);
    return {{"group", {{"variant", "cyclic"}, {"params", {{"N", 1 << M}}}}},
            {"family", {{"bspline", {{"order", pick<int>({1, 2, 4})}}}}}};
  }
  Json shannon_cyclic() {
    return {{"group", {{"variant", "cyclic"}, {"params", {{"N", 1 << between(1, 6)}}}}},
            {"family", {{"charfun", {{"mode", "shannon"}}}}}};
  }
  // L_0 = 0, nondecreasing, L_k <= 2^k - 2 below the top, L_M = 2^M - 1.
  Json proper_cyclic() {
    const int M = between(2, 6);
    std::vector<int> L{0};
    for (int k = 1; k < M; ++k) L.push_back(between(L.back(), (1 << k) - 2));
    L.push_back((1 << M) - 1);
    return {{"group", {{"variant", "cyclic"}, {"params", {{"N", 1 << M}}}}},
            {"family", {{"charfun", {{"mode", "proper"}, {"L", L}}}}},
            {"k0", 1}};
  }
  Json shannon_torus() {
    // M_0 even, at least two levels
    std::vector<int> seq{pick<int>({2, 4})};
    for (int i = between(1, 3); i > 0; --i) seq.push_back(between(2, 4));
    return {{"group", {{"variant", "torus"}}}, {"M_seq", seq}, {"family", {{"charfun", {{"mode", "shannon"}}}}}};
  }
  Json descriptor() {
    switch (between(0, 4)) {
      case 0: return bspline_integers();
      case 1: return bspline_cyclic();
      case 2: return shannon_cyclic();
      case 3: return proper_cyclic();
      default: return shannon_torus();
    }
  }

  // A point of the dual group of the system.
  Point dual_point(const FrameSystem& s) {
    switch (s.chain().group().kind()) {
      case GroupKind::Integers: return {unit()};
      case GroupKind::FiniteCyclic:
        return {static_cast<double>(between(0, static_cast<int>(s.chain().group().modulus()) - 1))};
      default: return {static_cast<double>(between(-40, 40))};
    }
  }
};

FrameSystem build(const Json& j) { return build_system(parse_descriptor(j)); }

constexpr int kCases = 60;

}  // namespace

TEST(Properties, UepHoldsOnEveryLevel) {
  Gen g(0x5EED);
  for (int t = 0; t < kCases; ++t) {
    Json j = g.descriptor();
    auto sys = build(j);
    for (int k = sys.k0(); k < sys.k1(); ++k)
      EXPECT_LE(verify_uep_matrix(sys.uep_matrix(k), SamplingPlan{}).max_residual, 1e-12) << j.dump() << " k=" << k;
  }
}

TEST(Properties, FiltersArePeriodic) {
  Gen g(0x5EED + 1);
  for (int t = 0; t < kCases; ++t) {
    Json j = g.descriptor();
    auto sys = build(j);
    for (const auto& lf : sys.filters()) {
      std::vector<const PeriodicFilter*> all{&lf.H};
      for (const auto& G : lf.G) all.push_back(&G);
      for (const auto* f : all)
        for (int r = 0; r < 5; ++r) {
          Point gamma = g.dual_point(sys);
          Point shifted = gamma;
          for (std::size_t i = 0; i < shifted.size(); ++i)
            shifted[i] += g.between(-3, 3) * to_double(f->periodicity().steps()[i]);
          EXPECT_NEAR(std::abs((*f)(gamma) - (*f)(shifted)), 0.0, 1e-12) << j.dump() << " level " << lf.k;
        }
    }
  }
}

TEST(Properties, ParsevalForRandomFunctions) {
  Gen g(0x5EED + 2);
  for (int t = 0; t < kCases; ++t) {
    Json j = g.descriptor();
    auto sys = build(j);
    for (int r = 0; r < 3; ++r) {
      auto f = random_test_function(sys, g.rng);
      if (norm_sq(sys, f) == 0) continue;
      EXPECT_LE(parseval_residual(sys, f), 1e-11) << j.dump();
    }
  }
}

TEST(Properties, TelescopingForRandomFunctions) {
  Gen g(0x5EED + 3);
  for (int t = 0; t < kCases; ++t) {
    Json j = g.descriptor();
    auto sys = build(j);
    auto f = random_test_function(sys, g.rng);
    const double scale = 1 + norm_sq(sys, f);
    for (int k = sys.k0(); k < sys.k1(); ++k) EXPECT_LE(telescoping_residual(sys, k, f), 1e-11 * scale) << j.dump();
  }
}

TEST(Properties, SystemFilesRoundTrip) {
  Gen g(0x5EED + 4);
  for (int t = 0; t < kCases; ++t) {
    auto d = parse_descriptor(g.descriptor());
    d.seed = g.rng();
    auto sys = build_system(d);
    d.k0 = sys.k0();
    d.k1 = sys.k1();
    const std::string text = system_to_json(d, sys).dump();
    auto back = system_from_json(Json::parse(text));
    EXPECT_EQ(system_to_json(back.descriptor, back.system).dump(), text);
    EXPECT_EQ(descriptor_hash(back.descriptor), descriptor_hash(d)) << text.substr(0, 200);
    for (std::size_t i = 0; i < sys.filters().size(); ++i)
      for (int r = 0; r < 5; ++r) {
        Point gamma = g.dual_point(sys);
        EXPECT_EQ(sys.filters()[i].H(gamma), back.system.filters()[i].H(gamma));
      }
  }
}

TEST(Properties, ChainIndexIsDensityRatio) {
  Gen g(0x5EED + 5);
  for (int t = 0; t < kCases; ++t) {
    auto sys = build(g.descriptor());
    const auto& c = sys.chain();
    for (int k = c.first_level(); k < c.last_level(); ++k) {
      const auto& a = c.level(k).lattice;
      const auto& b = c.level(k + 1).lattice;
      EXPECT_TRUE(a.is_sublattice_of(b));
      EXPECT_EQ(Rational(a.index_in(b)), a.density() / b.density());
      EXPECT_EQ(static_cast<std::int64_t>(a.coset_representatives(a).size()), 1);
      EXPECT_EQ(static_cast<std::int64_t>(b.coset_representatives(a).size()), a.index_in(b));
    }
  }
}
