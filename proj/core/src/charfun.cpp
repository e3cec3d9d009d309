#include "lcaframe/charfun.hpp"

#include "lcaframe/bspline.hpp"
#include "lcaframe/error.hpp"

#include <cmath>

namespace lcaframe {

namespace {

std::string at_level(int k) { return " at level " + std::to_string(k); }

Domain shifted(const Domain& d, const ExactPoint& s) { return Domain::coset_union(d, {s}); }

CosetPiecewise empty_pieces(const LatticeChain& chain, int k) {
  CosetPiecewise p;
  p.anchor = refine_anchor(chain, k);
  return p;
}

}  // namespace

OmegaChain::OmegaChain(std::shared_ptr<const LatticeChain> chain, std::vector<Domain> omega,
                       std::optional<ExampleSpec> example)
    : chain_(std::move(chain)), omega_(std::move(omega)), example_(std::move(example)) {
  require(chain_ != nullptr, ErrorKind::Construction, "omega chain needs a lattice chain");
  const int k0 = chain_->first_level();
  const int k1 = chain_->last_level();
  require(static_cast<int>(omega_.size()) == k1 - k0 + 1, ErrorKind::Construction,
          "omega chain needs one set per level");
  const GroupSpec dual = chain_->dual_group();
  for (int k = k0; k <= k1; ++k) {
    const Domain& O = omega_[static_cast<std::size_t>(k - k0)];
    require(is_subset(O, chain_->level(k).V, dual), ErrorKind::Construction,
            "Omega_k is not contained in V_k" + at_level(k));
    if (k < k1)
      require(is_subset(O, omega_[static_cast<std::size_t>(k - k0 + 1)], dual), ErrorKind::Construction,
              "Omega_k is not contained in Omega_{k+1}" + at_level(k));
    proper_.push_back(!same_set(O, chain_->level(k).V, dual));
  }
}

const Domain& OmegaChain::omega(int k) const {
  chain_->level(k);
  return omega_[static_cast<std::size_t>(k - chain_->first_level())];
}

OmegaChain instantiate_example(const ExampleSpec& spec) {
  std::vector<Domain> omega;
  std::shared_ptr<const LatticeChain> chain;
  switch (spec.kind) {
    case ExampleKind::Z2M: {
      chain = std::make_shared<const LatticeChain>(build_chain_ZN(spec.M));
      require(static_cast<int>(spec.L.size()) == spec.M + 1, ErrorKind::Domain,
              "L needs " + std::to_string(spec.M + 1) + " entries");
      for (int k = 0; k <= spec.M; ++k) {
        const Rational& L = spec.L[static_cast<std::size_t>(k)];
        require(is_integer(L) && L >= 0, ErrorKind::Domain, "L_k must be a nonnegative integer" + at_level(k));
        require(L <= (std::int64_t{1} << k) - 1, ErrorKind::Domain, "L_k <= 2^k - 1 violated" + at_level(k));
        if (k > 0)
          require(L >= spec.L[static_cast<std::size_t>(k - 1)], ErrorKind::Domain,
                  "L must be nondecreasing" + at_level(k));
        omega.emplace_back(IntegerInterval{0, L.numerator()});
      }
      require(spec.L.back() == (std::int64_t{1} << spec.M) - 1, ErrorKind::Domain,
              "L_M = 2^M - 1 violated" + at_level(spec.M));
      break;
    }
    case ExampleKind::TorusT: {
      chain = std::make_shared<const LatticeChain>(build_chain_T(spec.M_seq));
      require(spec.L.size() == spec.M_seq.size(), ErrorKind::Domain,
              "L needs " + std::to_string(spec.M_seq.size()) + " entries");
      for (int k = chain->first_level(); k <= chain->last_level(); ++k) {
        const Rational& L = spec.L[static_cast<std::size_t>(k)];
        require(is_integer(L) && L >= 0, ErrorKind::Domain, "L_k must be a nonnegative integer" + at_level(k));
        if (k > 0)
          require(L > spec.L[static_cast<std::size_t>(k - 1)], ErrorKind::Domain,
                  "L must be strictly increasing" + at_level(k));
        const std::int64_t N = -chain->level(k).V.as<IntegerInterval>()->lo * 2;
        require(L <= N / 2 - 1, ErrorKind::Domain, "L_k <= N_k/2 - 1 violated" + at_level(k));
        omega.emplace_back(IntegerInterval{-L.numerator(), L.numerator()});
      }
      break;
    }
    case ExampleKind::RsSeparable: {
      chain = std::make_shared<const LatticeChain>(build_chain_Rs_diag(spec.M_table));
      const std::size_t s = spec.M_table.size();
      require(spec.L_table.size() == s, ErrorKind::Domain, "L table needs one row per axis");
      for (int k = chain->first_level(); k <= chain->last_level(); ++k) {
        HalfOpenBox b;
        const HalfOpenBox& V = *chain->level(k).V.as<HalfOpenBox>();
        for (std::size_t r = 0; r < s; ++r) {
          require(spec.L_table[r].size() == spec.M_table[r].size(), ErrorKind::Domain, "L table rows have wrong length");
          const Rational& L = spec.L_table[r][static_cast<std::size_t>(k)];
          require(L > 0, ErrorKind::Domain, "L_{k,r} must be positive" + at_level(k));
          require(L <= V.hi[r], ErrorKind::Domain, "L_{k,r} <= N_{k,r}/2 violated" + at_level(k));
          b.lo.push_back(-L);
          b.hi.push_back(L);
        }
        omega.emplace_back(std::move(b));
      }
      break;
    }
    case ExampleKind::RsBall: {
      chain = std::make_shared<const LatticeChain>(build_chain_Rs_diag(spec.M_table));
      const int s = chain->group().dimension();
      require(static_cast<int>(spec.L.size()) == chain->last_level() + 1, ErrorKind::Domain,
              "L needs one entry per level");
      for (int k = chain->first_level(); k <= chain->last_level(); ++k) {
        const Rational& L = spec.L[static_cast<std::size_t>(k)];
        const HalfOpenBox& V = *chain->level(k).V.as<HalfOpenBox>();
        Rational half_min = *std::min_element(V.hi.begin(), V.hi.end());
        require(L >= 0, ErrorKind::Domain, "L_k must be nonnegative" + at_level(k));
        require(L < half_min, ErrorKind::Domain, "L_k < min_r N_{k,r}/2 violated" + at_level(k));
        omega.emplace_back(Ball{L, s});
      }
      break;
    }
  }
  try {
    return OmegaChain(chain, std::move(omega), spec);
  } catch (const Error& e) {
    fail(ErrorKind::Domain, e.what());
  }
}

OmegaChain shannon_omega(std::shared_ptr<const LatticeChain> chain) {
  std::vector<Domain> omega;
  for (int k = chain->first_level(); k <= chain->last_level(); ++k) omega.push_back(chain->level(k).V);
  return OmegaChain(std::move(chain), std::move(omega));
}

Generator char_generator(const OmegaChain& omega, int k) {
  const double scale = 1.0 / std::sqrt(to_double(omega.chain().measure_V(k)));
  Generator g;
  g.name = "Phi_" + std::to_string(k);
  g.level = k;
  g.index = 0;
  auto set = std::make_shared<const Domain>(omega.omega(k));
  const GroupSpec dual = omega.chain().dual_group();
  g.spectrum = [set, dual, scale](const Point& gamma) {
    return contains(*set, dual, gamma) ? Complex(scale) : Complex(0);
  };
  return g;
}

PeriodicFilter h_char(const OmegaChain& omega, int k) {
  const LatticeChain& chain = omega.chain();
  CosetPiecewise p = empty_pieces(chain, k);
  p.pieces.push_back({omega.omega(k), 1.0});
  return PeriodicFilter(chain.level(k + 1).annihilator, std::move(p), Rational(chain.index(k)));
}

std::vector<PeriodicFilter> g_char_proper(const OmegaChain& omega, int k) {
  const LatticeChain& chain = omega.chain();
  require(omega.proper(k), ErrorKind::Precondition,
          "proper subset condition Omega_k != V_k violated" + at_level(k));
  const auto nu = chain.nu(k);
  const auto d = static_cast<std::size_t>(chain.index(k));
  const Domain& O = omega.omega(k);
  const Domain& V = chain.level(k).V;
  std::vector<PeriodicFilter> out;
  for (std::size_t m = 1; m <= d; ++m) {
    CosetPiecewise p = empty_pieces(chain, k);
    if (m < d) p.pieces.push_back({shifted(O, nu[m]), 1.0});       // l = m + 1 on Omega_k
    p.pieces.push_back({shifted(O, nu[m - 1]), 0.0});               // l = m: zero on Omega_k
    p.pieces.push_back({shifted(V, nu[m - 1]), 1.0});               // l = m on V_k \ Omega_k
    out.emplace_back(chain.level(k + 1).annihilator, std::move(p), Rational(static_cast<std::int64_t>(d)));
  }
  return out;
}

std::vector<PeriodicFilter> g_char_shannon(const OmegaChain& omega, int k) {
  const LatticeChain& chain = omega.chain();
  const GroupSpec dual = chain.dual_group();
  require(!omega.proper(k), ErrorKind::Precondition, "Shannon filters need Omega_k = V_k" + at_level(k));
  for (int j = chain.first_level(); j < chain.last_level(); ++j)
    require(is_subset(chain.level(j).V, chain.level(j + 1).V, dual), ErrorKind::Precondition,
            "nested V_k condition violated" + at_level(j));
  const auto nu = chain.nu(k);
  const auto d = static_cast<std::size_t>(chain.index(k));
  std::vector<PeriodicFilter> out;
  for (std::size_t m = 1; m < d; ++m) {
    CosetPiecewise p = empty_pieces(chain, k);
    p.pieces.push_back({shifted(chain.level(k).V, nu[m]), 1.0});
    out.emplace_back(chain.level(k + 1).annihilator, std::move(p), Rational(static_cast<std::int64_t>(d)));
  }
  return out;
}

VerificationReport char_refinement_residual(const OmegaChain& omega, int k, const SamplingPlan& plan) {
  const LatticeChain& chain = omega.chain();
  const PeriodicFilter H = h_char(omega, k);
  const Generator coarse = char_generator(omega, k);
  const Generator fine = char_generator(omega, k + 1);
  const Domain dom = refinement_domain(chain, k);
  const auto pts = sample_domain(dom, chain.dual_group(), plan);
  VerificationReport rep;
  rep.exhaustive = samples_exhaustively(dom, chain.dual_group(), plan);
  rep.samples = pts.size();
  rep.worst_point = pts.front();
  for (const auto& g : pts) {
    double r = std::abs(coarse.spectrum(g) - H(g) * fine.spectrum(g));
    if (r > rep.max_residual) {
      rep.max_residual = r;
      rep.worst_point = g;
    }
  }
  return rep;
}

}  // namespace lcaframe
