#include "lcaframe/chain.hpp"

#include "lcaframe/error.hpp"

namespace lcaframe {

namespace {

std::string level_name(int k) { return "level " + std::to_string(k); }

}  // namespace

LatticeChain::LatticeChain(GroupSpec group, ChainParams params, std::vector<ChainLevel> levels)
    : group_(group), params_(std::move(params)), levels_(std::move(levels)) {
  require(!levels_.empty(), ErrorKind::Construction, "a chain needs at least one level");
  const GroupSpec dual = group_.dual();
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& L = levels_[i];
    require(L.k == levels_.front().k + static_cast<int>(i), ErrorKind::Construction, "levels must be consecutive");
    require(L.lattice.group() == group_ && L.annihilator.group() == dual, ErrorKind::Construction,
            level_name(L.k) + ": lattice lives in the wrong group");
    require(L.annihilator == L.lattice.annihilator(), ErrorKind::Construction,
            level_name(L.k) + ": annihilator does not match lattice");
    require(L.lattice.density() * L.annihilator.density() == Rational(1), ErrorKind::Construction,
            level_name(L.k) + ": density product is not 1");
    auto mq = measure(L.Q, group_, false);
    auto mv = measure(L.V, dual, true);
    require(mq && *mq == L.lattice.density(), ErrorKind::Construction,
            level_name(L.k) + ": measure of Q_k differs from s(Lambda_k)");
    require(mv && *mv == L.annihilator.density(), ErrorKind::Construction,
            level_name(L.k) + ": measure of V_k differs from s(Lambda_k^perp)");
    if (i + 1 < levels_.size()) {
      const auto& U = levels_[i + 1];
      require(L.lattice.is_sublattice_of(U.lattice), ErrorKind::Construction,
              level_name(L.k) + ": lattices are not nested");
      std::int64_t d = L.lattice.index_in(U.lattice);
      require(*measure(U.V, dual, true) / *mv == Rational(d), ErrorKind::Construction,
              level_name(L.k) + ": index differs from the ratio of V measures");
      auto reps = L.annihilator.coset_representatives(U.annihilator);
      require(static_cast<std::int64_t>(reps.size()) == d, ErrorKind::Construction,
              level_name(L.k) + ": wrong number of annihilator cosets");
      for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = a + 1; b < reps.size(); ++b)
          require(!U.annihilator.contains(add(reps[a], negated(reps[b]))), ErrorKind::Construction,
                  level_name(L.k) + ": annihilator cosets overlap");
    }
  }
}

const ChainLevel& LatticeChain::level(int k) const {
  require(has_level(k), ErrorKind::Index,
          "level " + std::to_string(k) + " outside I = {" + std::to_string(first_level()) + ", ..., " +
              std::to_string(last_level()) + "}");
  return levels_[static_cast<std::size_t>(k - first_level())];
}

std::int64_t LatticeChain::index(int k) const {
  require(has_level(k + 1), ErrorKind::Index, "level " + std::to_string(k + 1) + " outside I");
  return level(k).lattice.index_in(level(k + 1).lattice);
}

std::vector<ExactPoint> LatticeChain::nu(int k) const {
  require(has_level(k + 1), ErrorKind::Index, "level " + std::to_string(k + 1) + " outside I");
  return level(k).annihilator.coset_representatives(level(k + 1).annihilator);
}

std::vector<ExactPoint> LatticeChain::eta_representatives(int k) const {
  require(has_level(k + 1), ErrorKind::Index, "level " + std::to_string(k + 1) + " outside I");
  return level(k + 1).lattice.coset_representatives(level(k).lattice);
}

ExactPoint LatticeChain::eta(int k) const {
  require(index(k) == 2, ErrorKind::Unsupported,
          "dyadic index condition d_k = 2 required (d_" + std::to_string(k) + " = " + std::to_string(index(k)) + ")");
  return eta_representatives(k)[1];
}

Rational LatticeChain::measure_Q(int k) const { return *measure(level(k).Q, group_, false); }

Rational LatticeChain::measure_V(int k) const { return *measure(level(k).V, dual_group(), true); }

LatticeChain build_chain_Z(int M) {
  require(M >= 1, ErrorKind::Domain, "chain on Z needs M >= 1");
  require(M <= 40, ErrorKind::Resource, "chain on Z limited to M <= 40");
  const GroupSpec g = GroupSpec::integers();
  std::vector<ChainLevel> levels;
  for (int k = 0; k <= M; ++k) {
    Rational step = pow2(M - k);
    Lattice lat(g, {step});
    levels.push_back({k, lat, lat.annihilator(), IntegerInterval{0, step.numerator() - 1},
                      HalfOpenBox{{Rational(0)}, {Rational(1) / step}}});
  }
  return LatticeChain(g, {ChainVariant::Integers, M, {}, {}}, std::move(levels));
}

LatticeChain build_chain_ZN(int M) {
  require(M >= 1, ErrorKind::Domain, "chain on Z_{2^M} needs M >= 1");
  require(M <= 24, ErrorKind::Resource, "chain on Z_{2^M} limited to M <= 24");
  const GroupSpec g = GroupSpec::cyclic(std::int64_t{1} << M);
  std::vector<ChainLevel> levels;
  for (int k = 0; k <= M; ++k) {
    Lattice lat(g, {pow2(M - k)});
    levels.push_back({k, lat, lat.annihilator(), IntegerInterval{0, (std::int64_t{1} << (M - k)) - 1},
                      IntegerInterval{0, (std::int64_t{1} << k) - 1}});
  }
  return LatticeChain(g, {ChainVariant::Cyclic, M, {}, {}}, std::move(levels));
}

LatticeChain build_chain_T(const std::vector<std::int64_t>& M_seq) {
  require(!M_seq.empty(), ErrorKind::Domain, "chain on T needs a nonempty M sequence");
  for (std::size_t l = 0; l < M_seq.size(); ++l)
    require(M_seq[l] >= 2, ErrorKind::Domain, "chain on T needs M_" + std::to_string(l) + " >= 2");
  require(M_seq[0] % 2 == 0, ErrorKind::Domain, "chain on T needs M_0 even");
  const GroupSpec g = GroupSpec::torus();
  std::vector<ChainLevel> levels;
  std::int64_t N = 1;
  for (std::size_t k = 0; k < M_seq.size(); ++k) {
    require(N <= (std::int64_t{1} << 40) / M_seq[k], ErrorKind::Resource, "chain on T grows too large");
    N *= M_seq[k];
    Lattice lat(g, {Rational(1, N)});
    levels.push_back({static_cast<int>(k), lat, lat.annihilator(), HalfOpenBox{{Rational(0)}, {Rational(1, N)}},
                      IntegerInterval{-N / 2, N / 2 - 1}});
  }
  return LatticeChain(g, {ChainVariant::Torus, 0, M_seq, {}}, std::move(levels));
}

LatticeChain build_chain_Rs_diag(const std::vector<std::vector<std::int64_t>>& M_table) {
  require(!M_table.empty() && !M_table.front().empty(), ErrorKind::Domain, "M table must be nonempty");
  const std::size_t s = M_table.size();
  const std::size_t depth = M_table.front().size();
  for (std::size_t r = 0; r < s; ++r) {
    require(M_table[r].size() == depth, ErrorKind::Domain, "M table rows must have equal length");
    for (std::size_t k = 0; k < depth; ++k)
      require(M_table[r][k] >= 2, ErrorKind::Domain,
              "M table entry (" + std::to_string(k) + ", " + std::to_string(r) + ") must be >= 2");
  }
  const GroupSpec g = GroupSpec::euclidean(static_cast<int>(s));
  std::vector<ChainLevel> levels;
  std::vector<std::int64_t> N(s, 1);
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<Rational> steps;
    HalfOpenBox Q, V;
    for (std::size_t r = 0; r < s; ++r) {
      require(N[r] <= (std::int64_t{1} << 30) / M_table[r][k], ErrorKind::Resource, "chain on R^s grows too large");
      N[r] *= M_table[r][k];
      steps.emplace_back(1, N[r]);
      Q.lo.emplace_back(0);
      Q.hi.emplace_back(1, N[r]);
      V.lo.push_back(Rational(-N[r], 2));
      V.hi.push_back(Rational(N[r], 2));
    }
    Lattice lat(g, steps);
    levels.push_back({static_cast<int>(k), lat, lat.annihilator(), Q, V});
  }
  return LatticeChain(g, {ChainVariant::EuclideanDiagonal, 0, {}, M_table}, std::move(levels));
}

LatticeChain build_chain(const ChainParams& params) {
  switch (params.variant) {
    case ChainVariant::Integers: return build_chain_Z(params.M);
    case ChainVariant::Cyclic: return build_chain_ZN(params.M);
    case ChainVariant::Torus: return build_chain_T(params.M_seq);
    case ChainVariant::EuclideanDiagonal: return build_chain_Rs_diag(params.M_table);
  }
  fail(ErrorKind::Domain, "unknown chain variant");
}

Domain refine_domain(const LatticeChain& chain, int k) {
  return Domain::coset_union(chain.level(k).V, chain.nu(k));
}

ExactPoint refine_anchor(const LatticeChain& chain, int k) {
  const Domain& V = chain.level(k).V;
  if (auto iv = V.as<IntegerInterval>()) return {Rational(iv->lo)};
  return bounding_box(V, chain.dual_group()).lo;
}

std::vector<ExactPoint> lattice_points_near(const LatticeChain& chain, int k, const Domain& window) {
  require(is_bounded(window, chain.group()), ErrorKind::Domain, "window must be bounded");
  return chain.level(k).lattice.points_in(window);
}

}  // namespace lcaframe
