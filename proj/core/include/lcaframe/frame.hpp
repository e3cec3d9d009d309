#pragma once

#include "lcaframe/chain.hpp"
#include "lcaframe/charfun.hpp"
#include "lcaframe/filter.hpp"
#include "lcaframe/generator.hpp"
#include "lcaframe/uep.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace lcaframe {

enum class FamilyKind { BSpline, CharProper, CharShannon };

struct Family {
  FamilyKind kind = FamilyKind::BSpline;
  int order = 1;  // B-spline order N

  friend bool operator==(const Family&, const Family&) = default;
};

struct LevelFilters {
  int k = 0;
  PeriodicFilter H;
  std::vector<PeriodicFilter> G;
};

struct SystemElement {
  Generator generator;
  Lattice lattice;  // the modulations M_lambda run over this lattice
};

// Where inner products are computed: on G with time-domain sequences (Z), on
// the dual with finitely supported spectra (Z_N, and T for characteristic
// functions), or not at all (R^s and B-splines on T).
enum class AnalysisSide { Translation, Modulation, Unsupported };

// {M_lambda Phi_{k0}} together with {M_lambda Psi_k^(m)}, k0 <= k < k1.
class FrameSystem {
 public:
  static FrameSystem build(std::shared_ptr<const LatticeChain> chain, Family family, int k0, int k1,
                           std::optional<OmegaChain> omega = std::nullopt);
  // Wavelets are rebuilt as Psi_k^(m) = G_{k+1}^(m) Phi_{k+1} from the given filters.
  static FrameSystem from_filters(std::shared_ptr<const LatticeChain> chain, Family family, int k0, int k1,
                                  std::optional<OmegaChain> omega, std::vector<LevelFilters> filters);

  const LatticeChain& chain() const { return *chain_; }
  const std::shared_ptr<const LatticeChain>& chain_ptr() const { return chain_; }
  const Family& family() const { return family_; }
  int k0() const { return k0_; }
  int k1() const { return k1_; }
  const std::optional<OmegaChain>& omega() const { return omega_; }
  const std::vector<LevelFilters>& filters() const { return filters_; }
  const LevelFilters& filters_at(int k) const;
  const std::vector<SystemElement>& elements() const { return elements_; }

  // Phi_k for any k0 <= k <= k1, with Lambda_k.
  SystemElement scaling(int k) const;
  // Elements Psi_k^(1..rho_k).
  std::vector<SystemElement> wavelets(int k) const;
  UepMatrix uep_matrix(int k) const;
  AnalysisSide side() const;

  FrameSystem with_filter_zeroed(int k, int m) const;
  FrameSystem without_wavelet(int k, int m) const;

 private:
  FrameSystem() = default;
  void rebuild_elements();

  std::shared_ptr<const LatticeChain> chain_;
  Family family_;
  int k0_ = 0;
  int k1_ = 0;
  std::optional<OmegaChain> omega_;
  std::vector<LevelFilters> filters_;
  std::vector<SystemElement> elements_;
};

std::string family_name(const Family& f);

}  // namespace lcaframe
