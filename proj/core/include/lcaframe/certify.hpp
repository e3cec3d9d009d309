#pragma once

#include "lcaframe/frame.hpp"
#include "lcaframe/sampling.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lcaframe {

enum class Suite { Uep, Refinement, Fiber, Telescope, Parseval, All };

Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string suite;
  std::string condition;  // which identity or hypothesis the line certifies
  std::string scope;      // "level 2", "all levels", ...
  double residual = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  std::string certification;  // "exact", "certified on sampled set", ...
  CheckStatus status = CheckStatus::Pass;
  std::string note;
};

struct CertifyOptions {
  SamplingPlan plan;
  int trials = 100;
  std::uint64_t seed = kDefaultSeed;
  double tolerance = 1e-10;
};

struct CertifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t count(CheckStatus s) const;
};

CertifyReport certify(const FrameSystem& system, Suite suite, const CertifyOptions& opts = {});

// |mu(V_K)|Phi_K|^2 - 1| on the exhaustion set at K = k1.
CheckResult asymptotic_normalization(const FrameSystem& system, const CertifyOptions& opts = {});
// The exhaustion set meets each Lambda_{k1}^perp coset at most once.
CheckResult translate_disjointness(const FrameSystem& system);

}  // namespace lcaframe
