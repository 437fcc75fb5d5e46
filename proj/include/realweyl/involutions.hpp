#pragma once

// Conjugacy classes of involutions in an ADE Weyl group. Every involution is
// conjugate to w_I for a node subset I whose components are all of type A1,
// D_{2n}, E7 or E8, and two such subsets give conjugate involutions iff they
// are linked by a chain of elementary equivalences I |- J, where
// J = tau_K(I) for K = I + {one node} and tau_K = -w_K on the nodes of K.

#include <map>
#include <numeric>

#include "realweyl/weyl_group.hpp"

namespace realweyl {

/// All components of the induced subdiagram are A1, D_{2n} or E7/E8.
inline bool satisfies_minus_one_condition(const RootSystemData& sys, NodeSet subset) {
  for (const auto& t : parabolic_type(sys, subset).components) {
    const bool ok = (t.series == 'A' && t.rank == 1) || (t.series == 'D' && t.rank % 2 == 0) ||
                    (t.series == 'E' && (t.rank == 7 || t.rank == 8));
    if (!ok) return false;
  }
  return true;
}

/// Lexicographic order on subsets viewed as increasing label sequences.
inline bool subset_less(const RootSystemData& sys, NodeSet a, NodeSet b) {
  const auto la = to_labels(sys, a), lb = to_labels(sys, b);
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

inline std::vector<NodeSet> minus_one_subsets(const RootSystemData& sys) {
  std::vector<NodeSet> out;
  for (NodeSet s = 0; s <= full_set(sys); ++s)
    if (satisfies_minus_one_condition(sys, s)) out.push_back(s);
  std::sort(out.begin(), out.end(), [&](NodeSet a, NodeSet b) { return subset_less(sys, a, b); });
  return out;
}

/// Memoized diagram involutions tau_K = -w_K, as permutations of node indices.
class TauCache {
 public:
  explicit TauCache(const RootSystemData& sys) : sys_(&sys) {}

  const std::vector<std::size_t>& tau(NodeSet k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    const auto w = longest_element(*sys_, k);
    std::vector<std::size_t> perm(sys_->rank);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (auto i : members(k)) {
      const IntVec img = -w.map(unit_vector(sys_->rank, i));
      std::size_t j = sys_->rank;
      for (std::size_t t = 0; t < sys_->rank; ++t)
        if (img == unit_vector(sys_->rank, t)) j = t;
      if (j == sys_->rank || !(k >> j & 1u)) throw std::logic_error("-w_K does not permute the simple roots of K");
      perm[i] = j;
    }
    return cache_.emplace(k, std::move(perm)).first->second;
  }

  NodeSet apply(NodeSet k, NodeSet subset) {
    const auto& p = tau(k);
    NodeSet out = 0;
    for (auto i : members(subset)) out |= NodeSet{1} << p[i];
    return out;
  }

 private:
  const RootSystemData* sys_;
  std::map<NodeSet, std::vector<std::size_t>> cache_;
};

/// I |- J: some node a outside I gives K = I + {a} with tau_K(I) = J (or I = J).
inline bool elementary_equivalent(const RootSystemData& sys, NodeSet i, NodeSet j, TauCache& cache) {
  if (i == j) return true;
  for (std::size_t a = 0; a < sys.rank; ++a) {
    if (i >> a & 1u) continue;
    const NodeSet k = i | NodeSet{1} << a;
    if ((j & ~k) == 0 && cache.apply(k, i) == j) return true;
  }
  return false;
}

inline bool elementary_equivalent(const RootSystemData& sys, NodeSet i, NodeSet j) {
  TauCache cache(sys);
  return elementary_equivalent(sys, i, j, cache);
}

struct InvolutionClass {
  /// All (-1)-subsets in the class, in lexicographic order.
  std::vector<NodeSet> subsets;
  /// Lexicographically smallest member.
  NodeSet representative = 0;
  SubsystemType type;
  /// type.label() plus primes separating classes of equal type.
  std::string label;
  /// w_I on Q (simple-root basis).
  LatticeMap map{Basis::SimpleRoot, IntMatrix()};
  /// Index of the class of -w_I, when -1 is in W.
  std::optional<std::size_t> negative_partner;
};

/// Index of the class whose subsets contain s.
inline std::optional<std::size_t> class_of_subset(const std::vector<InvolutionClass>& classes, NodeSet s) {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::find(classes[c].subsets.begin(), classes[c].subsets.end(), s) != classes[c].subsets.end()) return c;
  return std::nullopt;
}

inline bool contains_minus_one(const RootSystemData& sys) {
  return longest_element(sys, full_set(sys)).map == -LatticeMap::identity(Basis::SimpleRoot, sys.rank);
}

/// Richardson classes, ordered by representative. The identity (I empty) is included.
inline std::vector<InvolutionClass> classify_involutions(const RootSystemData& sys) {
  const auto subsets = minus_one_subsets(sys);
  std::map<NodeSet, std::size_t> pos;
  for (std::size_t k = 0; k < subsets.size(); ++k) pos[subsets[k]] = k;
  std::vector<std::size_t> parent(subsets.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  TauCache cache(sys);
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    const NodeSet i = subsets[k];
    for (std::size_t a = 0; a < sys.rank; ++a) {
      if (i >> a & 1u) continue;
      const NodeSet j = cache.apply(i | NodeSet{1} << a, i);
      auto it = pos.find(j);
      if (it == pos.end()) throw std::logic_error("elementary equivalence left the (-1)-subsets");
      if (!elementary_equivalent(sys, j, i, cache)) throw std::logic_error("elementary equivalence is not symmetric");
      const auto ra = find(k), rb = find(it->second);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  // Subsets are sorted, so the root of each part is its smallest member.
  std::map<std::size_t, std::vector<NodeSet>> parts;
  for (std::size_t k = 0; k < subsets.size(); ++k) parts[find(k)].push_back(subsets[k]);

  std::vector<InvolutionClass> classes;
  for (auto& [root, members_] : parts) {
    InvolutionClass c;
    c.subsets = members_;
    c.representative = members_.front();
    c.type = parabolic_type(sys, c.representative);
    c.map = longest_element(sys, c.representative).map;
    if (!c.map.is_involution()) throw std::logic_error("w_I is not an involution");
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(),
            [&](const auto& a, const auto& b) { return subset_less(sys, a.representative, b.representative); });

  std::map<std::string, int> seen_type;
  for (auto& c : classes) {
    const int primes = seen_type[c.type.label()]++;
    c.label = c.type.label() + std::string(static_cast<std::size_t>(primes), '\'');
  }

  if (contains_minus_one(sys)) {
    for (auto& c : classes) {
      const NodeSet j = standardize_involution(sys, -c.map);
      c.negative_partner = class_of_subset(classes, j);
      if (!c.negative_partner) throw std::logic_error("-w_I standardized outside the (-1)-subsets");
    }
  }
  return classes;
}

}  // namespace realweyl
