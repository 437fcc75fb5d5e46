#pragma once

// Centralizer of an involution u in W, as (W(R-) x W(R+)) x| G_u where
// R+- are the roots fixed / negated by u and G_u is generated by products
// s_a s_{u a} of commuting reflections coming from R^c, the roots orthogonal
// to both rho+ and rho-.

#include "realweyl/weyl_group.hpp"

namespace realweyl {

struct CentralizerData {
  LatticeMap u{Basis::SimpleRoot, IntMatrix()};
  std::vector<IntVec> roots_minus, roots_plus;   // all roots of R-, R+
  std::vector<IntVec> simple_minus, simple_plus;
  SubsystemType type_minus, type_plus;
  /// 2 rho+- in simple-root coordinates.
  IntVec two_rho_minus, two_rho_plus;
  /// R^c split into R1 and R2 = u R1.
  std::vector<IntVec> r1, r2;
  std::vector<IntVec> simple_r1;
  SubsystemType type_gu;
  std::vector<LatticeMap> gu_generators;

  /// |W(R-)| |W(R+)| |G_u| with G_u isomorphic to W(R1).
  std::uint64_t order() const {
    return type_minus.weyl_group_order() * type_plus.weyl_group_order() * type_gu.weyl_group_order();
  }
};

inline LatticeMap checked_involution(const RootSystemData& sys, const LatticeMap& u) {
  if (u.dim() != sys.rank) throw DomainError("involution has the wrong dimension");
  auto q = change_basis(sys, u, Basis::SimpleRoot);
  if (!q.is_involution()) throw DomainError("map is not an involution");
  if (!preserves_form(sys, q)) throw DomainError("map does not preserve the root form");
  return q;
}

/// (R-, R+): roots negated and fixed by u.
inline std::pair<std::vector<IntVec>, std::vector<IntVec>> eigen_root_systems(const RootSystemData& sys,
                                                                              const LatticeMap& u) {
  const auto q = checked_involution(sys, u);
  std::vector<IntVec> minus, plus;
  for (const auto& a : sys.all_roots()) {
    const IntVec b = q(a);
    if (b == a) plus.push_back(a);
    else if (b == -a) minus.push_back(a);
  }
  return {minus, plus};
}

namespace detail {

inline IntVec two_rho(const RootSystemData& sys, const std::vector<IntVec>& roots) {
  IntVec s(sys.rank, 0);
  for (const auto& a : roots)
    if (sys.is_positive_root(a)) s = s + a;
  return s;
}

}  // namespace detail

inline CentralizerData centralizer_data(const RootSystemData& sys, const LatticeMap& u) {
  CentralizerData d;
  d.u = checked_involution(sys, u);
  std::tie(d.roots_minus, d.roots_plus) = eigen_root_systems(sys, d.u);
  const auto sm = subsystem_structure(sys, d.roots_minus);
  const auto sp = subsystem_structure(sys, d.roots_plus);
  d.simple_minus = sm.simple;
  d.simple_plus = sp.simple;
  d.type_minus = sm.type;
  d.type_plus = sp.type;
  d.two_rho_minus = detail::two_rho(sys, d.roots_minus);
  d.two_rho_plus = detail::two_rho(sys, d.roots_plus);

  std::vector<IntVec> rc;
  for (const auto& a : sys.all_roots())
    if (sys.form(a, d.two_rho_plus) == 0 && sys.form(a, d.two_rho_minus) == 0) rc.push_back(a);
  if (rc.empty()) return d;

  // Components of R^c, each as its set of roots.
  const auto sc = subsystem_structure(sys, rc);
  std::vector<std::set<IntVec>> comps;
  for (const auto& [idx, type] : sc.diagram->components()) {
    std::vector<IntVec> simple;
    for (auto k : idx) simple.push_back(sc.simple[k]);
    std::set<IntVec> roots;
    for (const auto& a : rc) {
      // a lies in this component iff it pairs nonzero with one of its simple roots.
      for (const auto& s : simple)
        if (sys.form(a, s) != 0) {
          roots.insert(a);
          break;
        }
    }
    comps.push_back(std::move(roots));
  }
  std::vector<bool> used(comps.size(), false);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (used[c]) continue;
    std::set<IntVec> image;
    for (const auto& a : comps[c]) image.insert(d.u(a));
    if (image == comps[c]) throw std::logic_error("a component of R^c is stable under u");
    std::size_t partner = comps.size();
    for (std::size_t e = 0; e < comps.size(); ++e)
      if (!used[e] && comps[e] == image) partner = e;
    if (partner == comps.size()) throw std::logic_error("u does not permute the components of R^c");
    used[c] = used[partner] = true;
    d.r1.insert(d.r1.end(), comps[c].begin(), comps[c].end());
    d.r2.insert(d.r2.end(), image.begin(), image.end());
  }
  const auto s1 = subsystem_structure(sys, d.r1);
  d.simple_r1 = s1.simple;
  d.type_gu = s1.type;
  for (const auto& a : d.simple_r1) {
    const IntVec ua = d.u(a);
    if (sys.form(a, ua) != 0) throw std::logic_error("G_u generator from non-orthogonal roots");
    auto g = root_reflection(sys, a) * root_reflection(sys, ua);
    if (!(g * d.u == d.u * g)) throw std::logic_error("G_u generator does not commute with u");
    d.gu_generators.push_back(std::move(g));
  }
  return d;
}

inline std::vector<LatticeMap> build_Gu(const RootSystemData& sys, const LatticeMap& u) {
  return centralizer_data(sys, u).gu_generators;
}

/// Reflections in the simple roots of R- and R+, followed by the G_u generators.
inline std::vector<LatticeMap> centralizer_generators(const RootSystemData& sys, const LatticeMap& u) {
  const auto d = centralizer_data(sys, u);
  std::vector<LatticeMap> gens;
  for (const auto& a : d.simple_minus) gens.push_back(root_reflection(sys, a));
  for (const auto& a : d.simple_plus) gens.push_back(root_reflection(sys, a));
  gens.insert(gens.end(), d.gu_generators.begin(), d.gu_generators.end());
  return gens;
}

}  // namespace realweyl
