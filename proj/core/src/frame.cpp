#include "lcaframe/frame.hpp"

#include "lcaframe/bspline.hpp"
#include "lcaframe/error.hpp"

#include <algorithm>

namespace lcaframe {

namespace {

std::string psi_name(int k, int m) { return "Psi_" + std::to_string(k) + "^(" + std::to_string(m) + ")"; }

}  // namespace

std::string family_name(const Family& f) {
  switch (f.kind) {
    case FamilyKind::BSpline: return "bspline(" + std::to_string(f.order) + ")";
    case FamilyKind::CharProper: return "charfun-proper";
    case FamilyKind::CharShannon: return "charfun-shannon";
  }
  return "?";
}

FrameSystem FrameSystem::build(std::shared_ptr<const LatticeChain> chain, Family family, int k0, int k1,
                               std::optional<OmegaChain> omega) {
  require(chain != nullptr, ErrorKind::Construction, "frame system needs a chain");
  require(chain->has_level(k0) && chain->has_level(k1) && k0 < k1, ErrorKind::Index,
          "levels k0 < k1 must lie in I = {" + std::to_string(chain->first_level()) + ", ..., " +
              std::to_string(chain->last_level()) + "}");
  if (family.kind != FamilyKind::BSpline) {
    if (!omega) {
      require(family.kind == FamilyKind::CharShannon, ErrorKind::Construction, "proper family needs Omega sets");
      omega = shannon_omega(chain);
    }
    require(omega->chain_ptr() == chain || omega->chain().params() == chain->params(), ErrorKind::Construction,
            "Omega sets belong to a different chain");
  }
  std::vector<LevelFilters> filters;
  for (int k = k0; k < k1; ++k) {
    switch (family.kind) {
      case FamilyKind::BSpline:
        filters.push_back({k, h_filter(*chain, k, family.order), bspline_wavelet_filters(*chain, k, family.order)});
        break;
      case FamilyKind::CharProper:
        filters.push_back({k, h_char(*omega, k), g_char_proper(*omega, k)});
        break;
      case FamilyKind::CharShannon:
        filters.push_back({k, h_char(*omega, k), g_char_shannon(*omega, k)});
        break;
    }
  }
  return from_filters(std::move(chain), family, k0, k1, std::move(omega), std::move(filters));
}

FrameSystem FrameSystem::from_filters(std::shared_ptr<const LatticeChain> chain, Family family, int k0, int k1,
                                      std::optional<OmegaChain> omega, std::vector<LevelFilters> filters) {
  require(chain != nullptr, ErrorKind::Construction, "frame system needs a chain");
  require(chain->has_level(k0) && chain->has_level(k1) && k0 < k1, ErrorKind::Index, "levels k0 < k1 must lie in I");
  require(family.kind == FamilyKind::BSpline || omega.has_value(), ErrorKind::Construction,
          "characteristic-function systems need Omega sets");
  require(static_cast<int>(filters.size()) == k1 - k0, ErrorKind::Construction, "one filter bank per level required");
  for (int k = k0; k < k1; ++k) {
    const auto& f = filters[static_cast<std::size_t>(k - k0)];
    require(f.k == k, ErrorKind::Construction, "filter banks must be ordered by level");
    require(!f.G.empty(), ErrorKind::Construction, "level " + std::to_string(k) + " has no wavelet filters");
    const Lattice& per = chain->level(k + 1).annihilator;
    require(f.H.periodicity() == per, ErrorKind::Construction, "H filter periodicity mismatch at level " + std::to_string(k));
    for (const auto& g : f.G)
      require(g.periodicity() == per, ErrorKind::Construction, "G filter periodicity mismatch at level " + std::to_string(k));
  }
  FrameSystem s;
  s.chain_ = std::move(chain);
  s.family_ = family;
  s.k0_ = k0;
  s.k1_ = k1;
  s.omega_ = std::move(omega);
  s.filters_ = std::move(filters);
  s.rebuild_elements();
  return s;
}

void FrameSystem::rebuild_elements() {
  elements_.clear();
  elements_.push_back(scaling(k0_));
  for (int k = k0_; k < k1_; ++k)
    for (auto& e : wavelets(k)) elements_.push_back(std::move(e));
}

const LevelFilters& FrameSystem::filters_at(int k) const {
  require(k >= k0_ && k < k1_, ErrorKind::Index, "no filter bank at level " + std::to_string(k));
  return filters_[static_cast<std::size_t>(k - k0_)];
}

SystemElement FrameSystem::scaling(int k) const {
  require(k >= k0_ && k <= k1_, ErrorKind::Index, "no scaling function at level " + std::to_string(k));
  Generator g = family_.kind == FamilyKind::BSpline ? bspline_time(*chain_, k, family_.order).to_generator()
                                                    : char_generator(*omega_, k);
  return {std::move(g), chain_->level(k).lattice};
}

std::vector<SystemElement> FrameSystem::wavelets(int k) const {
  const LevelFilters& bank = filters_at(k);
  std::vector<SystemElement> out;
  int m = 0;
  for (const auto& G : bank.G) {
    ++m;
    Generator g;
    if (family_.kind == FamilyKind::BSpline && G.trig()) {
      g = wavelet_time(*chain_, k, G, family_.order);
    } else {
      Generator fine = scaling(k + 1).generator;
      auto filt = std::make_shared<const PeriodicFilter>(G);
      g.spectrum = [filt, spec = fine.spectrum](const Point& gamma) { return (*filt)(gamma) * spec(gamma); };
    }
    g.name = psi_name(k, m);
    g.level = k;
    g.index = m;
    out.push_back({std::move(g), chain_->level(k).lattice});
  }
  return out;
}

UepMatrix FrameSystem::uep_matrix(int k) const {
  const LevelFilters& bank = filters_at(k);
  return assemble_P(*chain_, k, bank.H, bank.G);
}

AnalysisSide FrameSystem::side() const {
  switch (chain_->group().kind()) {
    case GroupKind::Integers: return AnalysisSide::Translation;
    case GroupKind::FiniteCyclic: return AnalysisSide::Modulation;
    case GroupKind::Torus:
      return family_.kind == FamilyKind::BSpline ? AnalysisSide::Unsupported : AnalysisSide::Modulation;
    case GroupKind::Euclidean: return AnalysisSide::Unsupported;
  }
  return AnalysisSide::Unsupported;
}

FrameSystem FrameSystem::with_filter_zeroed(int k, int m) const {
  filters_at(k);
  FrameSystem s = *this;
  auto& bank = s.filters_[static_cast<std::size_t>(k - k0_)];
  require(m >= 1 && m <= static_cast<int>(bank.G.size()), ErrorKind::Index, "no wavelet filter " + std::to_string(m));
  bank.G[static_cast<std::size_t>(m - 1)] = bank.G[static_cast<std::size_t>(m - 1)].zeroed();
  s.rebuild_elements();
  return s;
}

FrameSystem FrameSystem::without_wavelet(int k, int m) const {
  FrameSystem s = *this;
  auto it = std::find_if(s.elements_.begin(), s.elements_.end(), [&](const SystemElement& e) {
    return e.generator.index == m && e.generator.level == k && m >= 1;
  });
  require(it != s.elements_.end(), ErrorKind::Index, "no element " + psi_name(k, m));
  s.elements_.erase(it);
  return s;
}

}  // namespace lcaframe
