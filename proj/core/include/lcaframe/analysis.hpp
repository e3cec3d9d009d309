#pragma once

#include "lcaframe/frame.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lcaframe {

enum class FunctionSide { Time, Frequency };

// Finitely supported test function: values on G (Time) or on the dual (Frequency).
// On Z_N a full period is stored with start = 0.
struct TestFunction {
  FunctionSide side = FunctionSide::Time;
  Sequence values;
};

struct Coefficient {
  std::size_t element = 0;  // index into FrameSystem::elements()
  ExactPoint lambda;        // modulation parameter; the translation y on the translation side
  Complex value;
};

// Squared L^2 norm under the Haar normalizations of the system's group.
double norm_sq(const FrameSystem& system, const TestFunction& f);

// All nonzero <F, M_lambda Gamma>, ordered by element, then lambda.
std::vector<Coefficient> analysis(const FrameSystem& system, const TestFunction& f);

// |sum |c|^2 - |f|^2| / |f|^2.
double parseval_residual(const FrameSystem& system, const TestFunction& f);

// sum over lambda in the element's lattice of |<F, M_lambda Gamma>|^2.
double element_energy(const FrameSystem& system, const SystemElement& element, const TestFunction& f);
double level_energy(const FrameSystem& system, int k, const TestFunction& f);

// Columns are the system vectors M_lambda Gamma in an orthonormal basis of
// L^2 of the dual (finite groups only).
Eigen::MatrixXcd system_vectors(const FrameSystem& system);
// S = sum g g*.
Eigen::MatrixXcd frame_operator(const FrameSystem& system);

// Lambda a lattice in G. Data convention by group:
//   Z_N: F, Phi are one period of functions on the dual;
//   T:   F, Phi are finitely supported functions on the dual Z;
//   Z:   F, Phi are given by their finitely supported sequences on Z (F = f hat),
//        and the integral over V is evaluated by exact uniform quadrature.
std::pair<double, double> fiberization_both_sides(const Lattice& Lambda, const Domain& V, const Sequence& F,
                                                  const Sequence& Phi);

// |sum_{Lambda_{k+1}} |<F, M Phi_{k+1}>|^2 - level-k sum - wavelet sums|.
double telescoping_residual(const FrameSystem& system, int k, const TestFunction& f);
// Telescoping with the UEP precondition checked on the given plan first.
double telescoping_residual(const FrameSystem& system, int k, const TestFunction& f, const SamplingPlan& plan,
                            double uep_tolerance);

// (1 - eps)|F|^2 <= sum_{Lambda_k} |<F, M Phi_k>|^2 <= (1 + eps)|F|^2 at k = K and k = k1.
bool sandwich_bounds_check(const FrameSystem& system, const TestFunction& f, double eps, int K);

// Uniform complex values in [0,1) x [0,1) on the window {lo, ..., hi}, clipped
// to one period on Z_N. The default window is a full period on Z_N, Omega_{k1} (or V_{k1}) on the dual of
// T and {0, ..., 20} on Z.
TestFunction random_test_function(const FrameSystem& system, std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);
TestFunction random_test_function(const FrameSystem& system, std::mt19937_64& rng);

// Values on one period of Z_N, from the spectrum by the inverse transform.
Sequence time_samples(const FrameSystem& system, const Generator& g);

}  // namespace lcaframe
