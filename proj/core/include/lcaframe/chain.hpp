#pragma once

#include "lcaframe/domain.hpp"
#include "lcaframe/lattice.hpp"

#include <cstdint>
#include <vector>

namespace lcaframe {

enum class ChainVariant { Integers, Cyclic, Torus, EuclideanDiagonal };

struct ChainParams {
  ChainVariant variant = ChainVariant::Integers;
  int M = 0;                                      // Integers, Cyclic
  std::vector<std::int64_t> M_seq;                // Torus
  std::vector<std::vector<std::int64_t>> M_table; // EuclideanDiagonal, one row per axis

  friend bool operator==(const ChainParams&, const ChainParams&) = default;
};

struct ChainLevel {
  int k = 0;
  Lattice lattice;      // Lambda_k in G
  Lattice annihilator;  // Lambda_k^perp in the dual
  Domain Q;             // fundamental domain of Lambda_k
  Domain V;             // fundamental domain of Lambda_k^perp
};

class LatticeChain {
 public:
  // Validates nesting, index/measure consistency, s(L) s(L^perp) = 1 and the
  // coset splitting of every annihilator.
  LatticeChain(GroupSpec group, ChainParams params, std::vector<ChainLevel> levels);

  const GroupSpec& group() const { return group_; }
  GroupSpec dual_group() const { return group_.dual(); }
  const ChainParams& params() const { return params_; }

  int first_level() const { return levels_.front().k; }
  int last_level() const { return levels_.back().k; }
  bool has_level(int k) const { return k >= first_level() && k <= last_level(); }
  const ChainLevel& level(int k) const;

  // d_k = |Lambda_{k+1} / Lambda_k|.
  std::int64_t index(int k) const;
  // nu_{k,1} = 0, ..., nu_{k,d_k}: representatives of Lambda_k^perp / Lambda_{k+1}^perp.
  std::vector<ExactPoint> nu(int k) const;
  // Representatives of Lambda_{k+1} / Lambda_k.
  std::vector<ExactPoint> eta_representatives(int k) const;
  // eta_k, the nonzero representative when d_k = 2.
  ExactPoint eta(int k) const;

  Rational measure_Q(int k) const;
  Rational measure_V(int k) const;

 private:
  GroupSpec group_;
  ChainParams params_;
  std::vector<ChainLevel> levels_;
};

LatticeChain build_chain_Z(int M);
LatticeChain build_chain_ZN(int M);
LatticeChain build_chain_T(const std::vector<std::int64_t>& M_seq);
LatticeChain build_chain_Rs_diag(const std::vector<std::vector<std::int64_t>>& M_table);
LatticeChain build_chain(const ChainParams& params);

// V'_{k+1}, the union of nu_{k,l} + V_k.
Domain refine_domain(const LatticeChain& chain, int k);
// Lower corner of V_k; also the anchor of V'_{k+1}.
ExactPoint refine_anchor(const LatticeChain& chain, int k);

std::vector<ExactPoint> lattice_points_near(const LatticeChain& chain, int k, const Domain& window);

}  // namespace lcaframe
