#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace lcaframe {

using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;  // row-major
using IntVector2 = std::array<std::int64_t, 2>;

struct TileSpec {
  IntMatrix2 A{};
  IntVector2 eta{};
  int r = 0;
};

// Points num / 2^r, exact; sorted and duplicate-free.
struct TileCloud {
  int r = 0;
  std::vector<IntVector2> num;

  std::size_t size() const { return num.size(); }
  std::array<double, 2> point(std::size_t i) const;
};

// |det A| = 2, eigenvalues of A outside the unit circle, eta not in A^T Z^2, r <= 24.
void validate(const TileSpec& spec);
// {0, eta} represents Z^2 / A^T Z^2, the condition the translates of the
// digit expansion actually need.
bool digit_set_complete(const TileSpec& spec);

// Q^(r) by the recursion Q^(j+1) = A#Q^(j) U A#(eta + Q^(j)), A# = (A^T)^{-1}.
TileCloud tile_iterate(const TileSpec& spec);
// Q^(r) listed directly as the sums of (A#)^j eta over subsets of {1, ..., r}.
TileCloud tile_digit_sums(const TileSpec& spec);
// One recursion step applied to a cloud at depth r - 1.
TileCloud tile_step(const TileSpec& spec, const TileCloud& prev);

// Q^(r) (from the digit sums) equals one recursion step from Q^(r-1).
bool tile_selfsimilarity_check(const TileSpec& spec, int r);
// Same, against a caller-supplied cloud at depth r.
bool tile_selfsimilarity_check(const TileSpec& spec, const TileCloud& claimed);

struct MeasureEstimate {
  double estimate = 0.0;              // distinct h-cells modulo Z^2, times h^2
  double multiplicity_violation = 0.0;  // share of those cells hit from two different Z^2 translates
  std::size_t cells = 0;
};

// 1/h must be a positive integer <= 2^20.
MeasureEstimate tile_measure_estimate(const TileCloud& cloud, double h);

// |eta| sum_j |(A#)^j|_2, a bound on the norm of every point of Q^(r).
double tile_radius_bound(const TileSpec& spec);

}  // namespace lcaframe
