#pragma once

#include "lcaframe/filter.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lcaframe {

// Finitely supported complex sequence on Z (or one period of Z_N when start = 0).
struct Sequence {
  std::int64_t start = 0;
  std::vector<Complex> values;

  std::int64_t end() const { return start + static_cast<std::int64_t>(values.size()); }
  bool empty() const { return values.empty(); }
  Complex at(std::int64_t x) const {
    return x < start || x >= end() ? Complex(0) : values[static_cast<std::size_t>(x - start)];
  }
  double norm_sq() const {
    double s = 0;
    for (const auto& v : values) s += std::norm(v);
    return s;
  }
};

using Spectrum = std::function<Complex(const Point&)>;

// Phi_k or Psi_k^(m). The spectrum is the function on the dual group; time
// holds explicit values on Z or Z_N, time_eval a closed form on T or R^s.
struct Generator {
  std::string name;
  int level = 0;
  int index = 0;  // 0 for the scaling function, m for the m-th wavelet
  Spectrum spectrum;
  std::optional<Sequence> time;
  std::function<double(const Point&)> time_eval;
};

}  // namespace lcaframe
