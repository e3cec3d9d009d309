#pragma once

#include "lcaframe/domain.hpp"
#include "lcaframe/group.hpp"
#include "lcaframe/lattice.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace lcaframe {

using Complex = std::complex<double>;

// gamma -> sum_j coeffs[j] (-shifts[j] eta, gamma)
struct TrigPolynomial {
  ExactPoint eta;
  std::vector<std::int64_t> shifts;
  std::vector<Complex> coeffs;
};

// Constant on pieces of the box [anchor, anchor + period); the first piece
// containing the reduced argument wins, otherwise the default value applies.
struct CosetPiecewise {
  struct Piece {
    Domain domain;
    Complex value;
  };
  ExactPoint anchor;
  std::vector<Piece> pieces;
  Complex otherwise{0.0, 0.0};
};

// Values on finitely many points of [anchor, anchor + period); never interpolated.
struct Tabulated {
  ExactPoint anchor;
  std::vector<Point> grid;
  std::vector<Complex> values;
};

enum class FilterKind { Trig, Piecewise, Tabulated };

// A function on the dual group, periodic with respect to a lattice there.
// Evaluation returns sqrt(gain_sq) times the stored base value; keeping the
// square of the gain exact lets piecewise filters certify P*P = d I exactly.
class PeriodicFilter {
 public:
  PeriodicFilter(const GroupSpec& group, Lattice periodicity, TrigPolynomial poly, Rational gain_sq = 1);
  PeriodicFilter(Lattice periodicity, CosetPiecewise pieces, Rational gain_sq = 1);
  PeriodicFilter(Lattice periodicity, Tabulated table);

  FilterKind kind() const;
  const Lattice& periodicity() const { return periodicity_; }
  const GroupSpec& dual_group() const { return periodicity_.group(); }
  Rational gain_sq() const { return gain_sq_; }
  double gain() const { return gain_; }

  const TrigPolynomial* trig() const { return std::get_if<TrigPolynomial>(&rep_); }
  const CosetPiecewise* piecewise() const { return std::get_if<CosetPiecewise>(&rep_); }
  const Tabulated* tabulated() const { return std::get_if<Tabulated>(&rep_); }

  Complex base(const Point& gamma) const;
  Complex operator()(const Point& gamma) const { return gain_ * base(gamma); }
  Complex eval(const Element& gamma) const;

  PeriodicFilter zeroed() const;

 private:
  Point reduce(const Point& gamma, const ExactPoint& anchor) const;

  Lattice periodicity_;
  std::optional<GroupSpec> group_;
  std::variant<TrigPolynomial, CosetPiecewise, Tabulated> rep_;
  Rational gain_sq_;
  double gain_;
  std::vector<Point> shifted_eta_;
};

inline Complex eval_filter(const PeriodicFilter& f, const Point& gamma) { return f(gamma); }

struct Mask {
  ExactPoint eta;
  std::vector<std::int64_t> shifts;
  std::vector<Complex> coeffs;  // gain applied
};

Mask mask_coefficients(const PeriodicFilter& f);

}  // namespace lcaframe
