#pragma once

// Weyl group elements as lattice maps, longest elements of parabolic
// subgroups, group enumeration, subgroup orders and recognition of root
// subsystems.
//
// Index conventions: generator indices are 0-based positions in the diagram's
// sorted node list (index i <-> label sys.label_of(i)).

#include <cstdlib>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "realweyl/root_lattice.hpp"

namespace realweyl {

/// A word (i1, ..., ik) denotes s_{i1} s_{i2} ... s_{ik}.
using Word = std::vector<std::size_t>;

struct WeylElement {
  LatticeMap map;
  std::optional<Word> word;
};

// ---------------------------------------------------------------------------
// Simple reflections and basis changes

/// s_i in the requested basis (SimpleRoot or FundamentalWeight).
inline LatticeMap simple_reflection(const RootSystemData& sys, std::size_t i, Basis basis = Basis::SimpleRoot) {
  const std::size_t n = sys.rank;
  IntMatrix m = IntMatrix::identity(n);
  if (basis == Basis::SimpleRoot) {
    // s_i a = a - (alpha_i, a) alpha_i, and (alpha_i, a) = row i of C times a.
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= sys.cartan(i, j);
  } else if (basis == Basis::FundamentalWeight) {
    // s_i lambda = lambda - lambda_i * (column i of C).
    for (std::size_t r = 0; r < n; ++r) m(r, i) -= sys.cartan(r, i);
  } else {
    throw BasisMismatch("simple_reflection: root-system maps live on Q or P");
  }
  return {basis, m};
}

/// Reflection in an arbitrary root a (simple-root coordinates).
inline LatticeMap root_reflection(const RootSystemData& sys, const IntVec& a, Basis basis = Basis::SimpleRoot) {
  const std::size_t n = sys.rank;
  const IntVec ca = sys.cartan * a;
  IntMatrix m = IntMatrix::identity(n);
  if (basis == Basis::SimpleRoot) {
    // x -> x - (a, x) a
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) -= a[r] * ca[c];
  } else if (basis == Basis::FundamentalWeight) {
    // lambda -> lambda - (a . lambda) C a
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) -= ca[r] * a[c];
  } else {
    throw BasisMismatch("root_reflection: root-system maps live on Q or P");
  }
  return {basis, m};
}

/// Re-expresses a Weyl map between the Q and P bases (M_P = C M_Q C^{-1}).
inline LatticeMap change_basis(const RootSystemData& sys, const LatticeMap& w, Basis target) {
  if (w.basis() == target) return w;
  const std::size_t n = sys.rank;
  auto times_cinv = [&](const IntMatrix& x) {
    IntMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) s += x(r, i) * sys.fundamental_weights[j][i];
        if (s.denominator() != 1) throw DomainError("change_basis: map does not preserve the lattice");
        out(r, j) = s.numerator();
      }
    return out;
  };
  if (w.basis() == Basis::SimpleRoot && target == Basis::FundamentalWeight)
    return {target, times_cinv(sys.cartan * w.matrix())};
  if (w.basis() == Basis::FundamentalWeight && target == Basis::SimpleRoot) {
    // M_Q = C^{-1} M_P C
    IntMatrix mc = w.matrix() * sys.cartan;
    IntMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) s += sys.fundamental_weights[i][r] * mc(i, c);
        if (s.denominator() != 1) throw DomainError("change_basis: map does not preserve the lattice");
        out(r, c) = s.numerator();
      }
    return {target, out};
  }
  throw BasisMismatch("change_basis: unsupported basis pair");
}

/// True if w preserves the W-invariant form in its basis.
inline bool preserves_form(const RootSystemData& sys, const LatticeMap& w) {
  if (w.basis() == Basis::SimpleRoot) return w.matrix().transpose() * sys.cartan * w.matrix() == sys.cartan;
  return preserves_form(sys, change_basis(sys, w, Basis::SimpleRoot));
}

inline WeylElement element_from_word(const RootSystemData& sys, const Word& word, Basis basis = Basis::SimpleRoot) {
  LatticeMap m = LatticeMap::identity(basis, sys.rank);
  for (auto i : word) m = m * simple_reflection(sys, i, basis);
  return {m, word};
}

// ---------------------------------------------------------------------------
// Node subsets

/// Subsets of node indices as bitmasks (bit i = index i).
using NodeSet = std::uint32_t;

inline std::vector<std::size_t> members(NodeSet s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s >> i; ++i)
    if (s >> i & 1u) out.push_back(i);
  return out;
}

inline std::vector<int> to_labels(const RootSystemData& sys, NodeSet s) {
  std::vector<int> out;
  for (auto i : members(s)) out.push_back(sys.label_of(i));
  return out;
}

inline NodeSet from_labels(const RootSystemData& sys, const std::vector<int>& labels) {
  NodeSet s = 0;
  for (auto l : labels) s |= NodeSet{1} << sys.index_of(l);
  return s;
}

inline NodeSet full_set(const RootSystemData& sys) { return (NodeSet{1} << sys.rank) - 1; }

/// Longest element w_I of the parabolic subgroup W_I, by the anti-dominance
/// sweep starting from the sum of the fundamental weights in I.
inline WeylElement longest_element(const RootSystemData& sys, NodeSet subset) {
  const std::size_t n = sys.rank;
  IntVec v(n, 0);
  for (auto i : members(subset)) v[i] = 1;
  Word applied;
  while (true) {
    std::size_t pick = n;
    for (auto i : members(subset))
      if (v[i] > 0) {
        pick = i;
        break;
      }
    if (pick == n) break;
    const Int c = v[pick];
    for (std::size_t r = 0; r < n; ++r) v[r] -= c * sys.cartan(r, pick);
    applied.push_back(pick);
  }
  // The last reflection applied is the leftmost factor.
  Word word(applied.rbegin(), applied.rend());
  return element_from_word(sys, word);
}

// ---------------------------------------------------------------------------
// Enumeration

inline std::uint64_t group_order_cap() {
  if (const char* env = std::getenv("WEYL_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

inline void check_group_cap(const RootSystemData& sys, std::uint64_t cap = group_order_cap()) {
  const auto order = weyl_order(sys);
  if (order > cap)
    throw ResourceCapError("|W| = " + std::to_string(order) + " exceeds the enumeration cap " + std::to_string(cap) +
                           " (set WEYL_MAX_GROUP_ORDER to raise it)");
}

/// Visits every element of W exactly once, as a matrix in the
/// fundamental-weight basis. Elements are generated depth-first from the
/// identity; w' = s_i w is produced only from its canonical parent
/// s_j w' with j the smallest descent, so no visited set is needed.
template <class Visitor>
void enumerate_group(const RootSystemData& sys, Visitor&& visit, std::uint64_t cap = group_order_cap()) {
  check_group_cap(sys, cap);
  const std::size_t n = sys.rank;
  struct Frame {
    IntMatrix m;
    IntVec v;  // w(rho) in weight coordinates
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({IntMatrix::identity(n), IntVec(n, 1), 0});
  visit(static_cast<const IntMatrix&>(stack.back().m));
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == n) {
      stack.pop_back();
      continue;
    }
    const std::size_t i = top.next++;
    const Int c = top.v[i];
    if (c <= 0) continue;
    IntVec v = top.v;
    for (std::size_t r = 0; r < n; ++r) v[r] -= c * sys.cartan(r, i);
    std::size_t first_neg = n;
    for (std::size_t j = 0; j < n; ++j)
      if (v[j] < 0) {
        first_neg = j;
        break;
      }
    if (first_neg != i) continue;
    IntMatrix m = top.m;
    for (std::size_t r = 0; r < n; ++r) {
      const Int cr = sys.cartan(r, i);
      if (cr == 0) continue;
      for (std::size_t col = 0; col < n; ++col) m(r, col) -= cr * top.m(i, col);
    }
    stack.push_back({std::move(m), std::move(v), 0});
    visit(static_cast<const IntMatrix&>(stack.back().m));
  }
}

inline std::vector<LatticeMap> all_elements(const RootSystemData& sys, std::uint64_t cap = group_order_cap()) {
  std::vector<LatticeMap> out;
  enumerate_group(sys, [&](const IntMatrix& m) { out.emplace_back(Basis::FundamentalWeight, m); }, cap);
  return out;
}

/// Packs a vector with entries in [-127, 127] into a 64-bit key.
inline std::uint64_t pack_key(const IntVec& v) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < -127 || v[i] > 127) throw std::overflow_error("pack_key: coordinate out of range");
    key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(static_cast<std::int8_t>(v[i]))) << (8 * i);
  }
  return key;
}

/// Order of the subgroup generated by the given Weyl maps, as the size of
/// the orbit of the regular weight rho (W acts simply transitively on chambers).
inline std::uint64_t generated_subgroup_order(const RootSystemData& sys, const std::vector<LatticeMap>& gens,
                                              std::uint64_t cap = group_order_cap()) {
  std::vector<IntMatrix> mats;
  for (const auto& g : gens) mats.push_back(change_basis(sys, g, Basis::FundamentalWeight).matrix());
  const IntVec rho(sys.rank, 1);
  std::unordered_set<std::uint64_t> seen{pack_key(rho)};
  std::vector<IntVec> frontier{rho};
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& v : frontier)
      for (const auto& g : mats) {
        IntVec w = g * v;
        if (seen.insert(pack_key(w)).second) {
          if (seen.size() > cap) throw ResourceCapError("generated subgroup exceeds the enumeration cap");
          next.push_back(std::move(w));
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// ---------------------------------------------------------------------------
// Root subsystems

/// Multiset of irreducible types, kept in display order: E before D before A,
/// larger rank first.
struct SubsystemType {
  std::vector<IrreducibleType> components;

  SubsystemType() = default;
  explicit SubsystemType(std::vector<IrreducibleType> c) : components(std::move(c)) {
    std::sort(components.begin(), components.end(), [](const auto& a, const auto& b) {
      auto rank_series = [](char s) { return s == 'E' ? 0 : s == 'D' ? 1 : 2; };
      if (a.series != b.series) return rank_series(a.series) < rank_series(b.series);
      return a.rank > b.rank;
    });
  }

  int rank() const {
    int r = 0;
    for (const auto& c : components) r += c.rank;
    return r;
  }

  /// "E7", "D4A1", "A1^3"; "1" for the empty system.
  std::string label() const {
    if (components.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < components.size();) {
      std::size_t j = i;
      while (j < components.size() && components[j] == components[i]) ++j;
      s += components[i].label();
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    return s;
  }

  std::uint64_t weyl_group_order() const {
    std::uint64_t o = 1;
    for (const auto& c : components) o *= weyl_order(c);
    return o;
  }

  bool operator==(const SubsystemType&) const = default;
};

struct SubsystemStructure {
  std::vector<IntVec> positive;  // positive roots w.r.t. the generic functional
  std::vector<IntVec> simple;    // simple system, sorted
  SubsystemType type;
  /// Diagram on the simple system (node k+1 <-> simple[k]).
  std::optional<CoxeterDiagram> diagram;
};

namespace detail {

inline std::set<IntVec> check_closed(const RootSystemData& sys, const std::vector<IntVec>& roots) {
  std::set<IntVec> s(roots.begin(), roots.end());
  for (const auto& a : s) {
    if (!sys.is_root(a)) throw DomainError("classify_subsystem: input contains a non-root");
    if (!s.count(-a)) throw DomainError("classify_subsystem: input is not closed under negation");
  }
  for (const auto& a : s)
    for (const auto& b : s) {
      const Int p = sys.form(a, b);
      if (p != 0 && !s.count(b - p * a)) throw DomainError("classify_subsystem: input is not closed under reflections");
    }
  return s;
}

}  // namespace detail

/// Positive system, simple system and type of a root subsystem. Positivity
/// comes from the functional f(x) = sum x_i 31^i, whose injectivity on the
/// input is checked.
inline SubsystemStructure subsystem_structure(const RootSystemData& sys, const std::vector<IntVec>& roots) {
  const auto s = detail::check_closed(sys, roots);
  auto f = [](const IntVec& x) {
    Int v = 0, p = 1;
    for (auto xi : x) {
      v += xi * p;
      p *= 31;
    }
    return v;
  };
  std::set<Int> values;
  SubsystemStructure out;
  for (const auto& a : s) {
    const Int fa = f(a);
    if (fa == 0 || !values.insert(fa).second) throw std::logic_error("subsystem functional is not injective");
    if (fa > 0) out.positive.push_back(a);
  }
  std::set<IntVec> pos(out.positive.begin(), out.positive.end());
  for (const auto& a : out.positive) {
    bool decomposable = false;
    for (const auto& b : out.positive)
      if (b != a && pos.count(a - b)) {
        decomposable = true;
        break;
      }
    if (!decomposable) out.simple.push_back(a);
  }
  if (out.simple.empty()) return out;
  std::vector<int> nodes;
  std::set<CoxeterDiagram::Edge> edges;
  for (std::size_t i = 0; i < out.simple.size(); ++i) {
    nodes.push_back(static_cast<int>(i) + 1);
    for (std::size_t j = i + 1; j < out.simple.size(); ++j) {
      const Int p = sys.form(out.simple[i], out.simple[j]);
      if (p == -1) edges.insert({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
      else if (p != 0) throw std::logic_error("simple system has a non-simply-laced pair");
    }
  }
  out.diagram.emplace(nodes, edges);
  std::vector<IrreducibleType> types;
  for (const auto& c : out.diagram->components()) types.push_back(c.second);
  out.type = SubsystemType(types);
  return out;
}

inline SubsystemType classify_subsystem(const RootSystemData& sys, const std::vector<IntVec>& roots) {
  return subsystem_structure(sys, roots).type;
}

/// Type of the standard parabolic subsystem on a node subset.
inline SubsystemType parabolic_type(const RootSystemData& sys, NodeSet subset) {
  if (subset == 0) return {};
  return SubsystemType(sys.diagram.subdiagram_types(members(subset)));
}

// ---------------------------------------------------------------------------
// Chambers

/// Applies simple reflections until the weight (fundamental-weight
/// coordinates) is dominant; returns the dominant weight.
inline IntVec make_dominant(const RootSystemData& sys, IntVec v) {
  const std::size_t n = sys.rank;
  while (true) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] < 0) {
        pick = i;
        break;
      }
    if (pick == n) return v;
    const Int c = v[pick];
    for (std::size_t r = 0; r < n; ++r) v[r] -= c * sys.cartan(r, pick);
  }
}

/// For an involution v (any basis), returns a subset J with v conjugate to
/// w_J: J is the set of walls containing the dominant image of a generic
/// point of the fixed space of v.
inline NodeSet standardize_involution(const RootSystemData& sys, const LatticeMap& v) {
  const auto vp = change_basis(sys, v, Basis::FundamentalWeight);
  if (!vp.is_involution()) throw DomainError("standardize_involution: map is not an involution");
  const std::size_t n = sys.rank;
  IntVec y(n);
  Int p = 1;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = p;
    p *= 31;
  }
  const IntVec mu = make_dominant(sys, y + vp(y));
  NodeSet j = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (mu[i] == 0) j |= NodeSet{1} << i;
  return j;
}

}  // namespace realweyl
