#include "lcaframe/tiles.hpp"

#include "lcaframe/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>

namespace lcaframe {

namespace {

constexpr int kMaxDepth = 24;

std::int64_t det(const IntMatrix2& A) { return A[0][0] * A[1][1] - A[0][1] * A[1][0]; }

// adj(A^T) times sign(det A): A# = sharp / 2.
IntMatrix2 sharp_numerator(const IntMatrix2& A) {
  const std::int64_t s = det(A) > 0 ? 1 : -1;
  return {{{s * A[1][1], -s * A[1][0]}, {-s * A[0][1], s * A[0][0]}}};
}

IntVector2 mul(const IntMatrix2& M, const IntVector2& v) {
  return {M[0][0] * v[0] + M[0][1] * v[1], M[1][0] * v[0] + M[1][1] * v[1]};
}

void finish(std::vector<IntVector2>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

double norm2(const std::array<std::array<double, 2>, 2>& M) {
  // largest singular value from the eigenvalues of M^T M
  const double a = M[0][0] * M[0][0] + M[1][0] * M[1][0];
  const double b = M[0][0] * M[0][1] + M[1][0] * M[1][1];
  const double d = M[0][1] * M[0][1] + M[1][1] * M[1][1];
  const double tr = a + d, disc = std::sqrt(std::max(0.0, (a - d) * (a - d) + 4 * b * b));
  return std::sqrt(0.5 * (tr + disc));
}

}  // namespace

std::array<double, 2> TileCloud::point(std::size_t i) const {
  const double s = std::ldexp(1.0, -r);
  return {static_cast<double>(num[i][0]) * s, static_cast<double>(num[i][1]) * s};
}

void validate(const TileSpec& spec) {
  const auto& A = spec.A;
  require(std::llabs(det(A)) == 2, ErrorKind::Domain, "tile matrix needs |det A| = 2");
  const double tr = static_cast<double>(A[0][0] + A[1][1]);
  const std::complex<double> root = std::sqrt(std::complex<double>(tr * tr - 4.0 * static_cast<double>(det(A))));
  const double l1 = std::abs(0.5 * (tr + root)), l2 = std::abs(0.5 * (tr - root));
  require(std::min(l1, l2) > 1.0, ErrorKind::Domain, "tile matrix needs eigenvalues outside the unit circle");
  require(digit_set_complete(spec), ErrorKind::Domain, "eta must not lie in A^T Z^2");
  require(spec.r >= 0, ErrorKind::Domain, "iteration count must be nonnegative");
  require(spec.r <= kMaxDepth, ErrorKind::Resource, "tile iteration limited to r <= 24");
}

bool digit_set_complete(const TileSpec& spec) {
  const auto& A = spec.A;
  // eta in A^T Z^2 iff adj(A^T) eta is divisible by det A
  IntMatrix2 adjT{{{A[1][1], -A[1][0]}, {-A[0][1], A[0][0]}}};
  IntVector2 w = mul(adjT, spec.eta);
  return w[0] % 2 != 0 || w[1] % 2 != 0;
}

TileCloud tile_step(const TileSpec& spec, const TileCloud& prev) {
  const IntMatrix2 S = sharp_numerator(spec.A);
  const std::int64_t unit = std::int64_t{1} << prev.r;
  TileCloud next{prev.r + 1, {}};
  next.num.reserve(2 * prev.num.size());
  for (const auto& p : prev.num) {
    next.num.push_back(mul(S, p));
    next.num.push_back(mul(S, {p[0] + spec.eta[0] * unit, p[1] + spec.eta[1] * unit}));
  }
  finish(next.num);
  return next;
}

TileCloud tile_iterate(const TileSpec& spec) {
  validate(spec);
  TileCloud c{0, {{0, 0}}};
  for (int j = 0; j < spec.r; ++j) c = tile_step(spec, c);
  return c;
}

TileCloud tile_digit_sums(const TileSpec& spec) {
  validate(spec);
  const int r = spec.r;
  const IntMatrix2 S = sharp_numerator(spec.A);
  // v_j = (A#)^j eta with denominator 2^j, rescaled to 2^r
  std::vector<IntVector2> v;
  IntVector2 cur = spec.eta;
  for (int j = 1; j <= r; ++j) {
    cur = mul(S, cur);
    v.push_back({cur[0] << (r - j), cur[1] << (r - j)});
  }
  TileCloud c{r, {}};
  c.num.reserve(std::size_t{1} << r);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    IntVector2 p{0, 0};
    for (int j = 0; j < r; ++j)
      if (mask >> j & 1) {
        p[0] += v[static_cast<std::size_t>(j)][0];
        p[1] += v[static_cast<std::size_t>(j)][1];
      }
    c.num.push_back(p);
  }
  finish(c.num);
  return c;
}

bool tile_selfsimilarity_check(const TileSpec& spec, const TileCloud& claimed) {
  require(claimed.r >= 1, ErrorKind::Domain, "self-similarity needs r >= 1");
  TileSpec prev = spec;
  prev.r = claimed.r - 1;
  return tile_step(spec, tile_digit_sums(prev)).num == claimed.num;
}

bool tile_selfsimilarity_check(const TileSpec& spec, int r) {
  TileSpec at = spec;
  at.r = r;
  return tile_selfsimilarity_check(spec, tile_digit_sums(at));
}

MeasureEstimate tile_measure_estimate(const TileCloud& cloud, double h) {
  require(h > 0 && h <= 1, ErrorKind::Domain, "grid resolution must lie in (0, 1]");
  const double inv = 1.0 / h;
  const std::int64_t n = std::llround(inv);
  require(std::fabs(inv - static_cast<double>(n)) < 1e-9 && n <= (std::int64_t{1} << 20), ErrorKind::Domain,
          "grid resolution must be 1/n with n <= 2^20");
  const std::int64_t unit = std::int64_t{1} << cloud.r;
  std::map<IntVector2, std::set<IntVector2>> cells;
  for (const auto& p : cloud.num) {
    const std::int64_t i = floor_div(p[0] * n, unit), j = floor_div(p[1] * n, unit);
    IntVector2 reduced{((i % n) + n) % n, ((j % n) + n) % n};
    cells[reduced].insert({floor_div(i, n), floor_div(j, n)});
  }
  MeasureEstimate out;
  out.cells = cells.size();
  out.estimate = static_cast<double>(cells.size()) * h * h;
  std::size_t bad = 0;
  for (const auto& [cell, translates] : cells)
    if (translates.size() > 1) ++bad;
  out.multiplicity_violation = cells.empty() ? 0.0 : static_cast<double>(bad) / static_cast<double>(cells.size());
  return out;
}

double tile_radius_bound(const TileSpec& spec) {
  validate(spec);
  const IntMatrix2 S = sharp_numerator(spec.A);
  std::array<std::array<double, 2>, 2> P{{{1, 0}, {0, 1}}};
  double sum = 0.0;
  for (int j = 1; j <= 400; ++j) {
    std::array<std::array<double, 2>, 2> Q{};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        Q[a][b] = 0.5 * (static_cast<double>(S[a][0]) * P[0][b] + static_cast<double>(S[a][1]) * P[1][b]);
    P = Q;
    const double t = norm2(P);
    sum += t;
    if (t < 1e-18) break;
  }
  return std::hypot(static_cast<double>(spec.eta[0]), static_cast<double>(spec.eta[1])) * sum;
}

}  // namespace lcaframe
