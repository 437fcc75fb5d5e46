#pragma once

// Real forms of the torus attached to an involution u of W acting on the
// weight lattice P: the type (n1, n2, n3), the component group
// ker(u-1)/im(u+1) = F2^{n1}, its orbits under W(R+), the coloured-diagram
// dynamics on P/2P, and the alcove picture for half weights.
//
// Since 2x = (u+1)x for x in ker(u-1), the quotient K/L with K = ker(u-1)
// and L = im(u+1) is K/2K modulo the image of L, so all quotient arithmetic
// is F2 elimination on coordinates relative to a saturated Z-basis of K.

#include <map>
#include <sstream>

#include "realweyl/centralizer.hpp"

namespace realweyl {

struct TypeTriple {
  int n1 = 0, n2 = 0, n3 = 0;
  auto operator<=>(const TypeTriple&) const = default;
};

class ComponentGroup {
 public:
  /// Component group of the weight-basis involution u.
  explicit ComponentGroup(const IntMatrix& u) : span_(0) {
    const std::size_t n = u.rows();
    const IntMatrix id = IntMatrix::identity(n);
    kernel_ = integer_kernel(u - id);
    span_ = F2Span(kernel_.cols());
    const IntMatrix plus = u + id;
    for (std::size_t j = 0; j < n; ++j) span_.insert(kernel_coordinates_mod2(plus.col(j)));
    free_ = span_.free_coordinates();
    for (auto p : free_) basis_lifts_.push_back(kernel_.col(static_cast<std::size_t>(p)));
  }

  std::size_t dimension() const noexcept { return free_.size(); }
  const IntMatrix& kernel_basis() const noexcept { return kernel_; }
  const std::vector<IntVec>& basis_lifts() const noexcept { return basis_lifts_; }

  bool in_kernel(const IntVec& x) const { return solve_integer(kernel_, x).has_value(); }

  /// F2 coordinates (bit j <-> basis_lifts()[j]) of the class of x in ker(u-1).
  F2Vec reduce(const IntVec& x) const {
    const F2Vec r = span_.reduce(kernel_coordinates_mod2(x));
    F2Vec out = 0;
    for (std::size_t j = 0; j < free_.size(); ++j)
      if (r >> free_[j] & 1u) out |= F2Vec{1} << j;
    return out;
  }

  /// Induced F2-linear map of a weight-basis map g commuting with u, as the
  /// images of the basis vectors.
  std::vector<F2Vec> induced_map(const IntMatrix& g) const {
    std::vector<F2Vec> cols;
    for (const auto& b : basis_lifts_) cols.push_back(reduce(g * b));
    return cols;
  }

  static F2Vec apply(const std::vector<F2Vec>& cols, F2Vec v) {
    F2Vec out = 0;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (v >> j & 1u) out ^= cols[j];
    return out;
  }

 private:
  F2Vec kernel_coordinates_mod2(const IntVec& x) const {
    auto c = solve_integer(kernel_, x);
    if (!c) throw DomainError("vector is not in ker(u-1)");
    return to_f2(*c);
  }

  IntMatrix kernel_;
  F2Span span_;
  std::vector<int> free_;
  std::vector<IntVec> basis_lifts_;
};

inline IntMatrix weight_involution(const RootSystemData& sys, const LatticeMap& u) {
  return change_basis(sys, checked_involution(sys, u), Basis::FundamentalWeight).matrix();
}

inline ComponentGroup component_group(const RootSystemData& sys, const LatticeMap& u) {
  return ComponentGroup(weight_involution(sys, u));
}

inline TypeTriple type_triple(const RootSystemData& sys, const LatticeMap& u) {
  const IntMatrix up = weight_involution(sys, u);
  const int n1 = static_cast<int>(ComponentGroup(up).dimension());
  const int n2 = static_cast<int>(ComponentGroup(-up).dimension());
  const int rest = static_cast<int>(sys.rank) - n1 - n2;
  if (rest < 0 || rest % 2 != 0) throw std::logic_error("type triple parity violation");
  return {n1, n2, rest / 2};
}

/// Orbits of a group on F2^dim given by generator matrices (columns), each
/// orbit sorted, orbits ordered by their smallest element.
inline std::vector<std::vector<F2Vec>> f2_orbits(std::size_t dim, const std::vector<std::vector<F2Vec>>& gens) {
  const std::size_t size = std::size_t{1} << dim;
  std::vector<int> orbit_of(size, -1);
  std::vector<std::vector<F2Vec>> orbits;
  for (F2Vec start = 0; start < size; ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<F2Vec> orbit{start};
    orbit_of[start] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& g : gens) {
        const F2Vec w = ComponentGroup::apply(g, orbit[k]);
        if (orbit_of[w] < 0) {
          orbit_of[w] = id;
          orbit.push_back(w);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

struct ComponentReport {
  TypeTriple triple;
  std::size_t dimension = 0;
  std::vector<std::vector<F2Vec>> orbits;
  /// One name per orbit: "0", "w<i>" (a fixed fundamental weight whose class
  /// lies in the orbit, smallest i), or the F2 coordinates "[b1 b2 ...]".
  std::vector<std::string> representatives;
  /// For each node index i with u(w_i) = w_i, the orbit containing [w_i].
  std::map<std::size_t, std::size_t> weight_orbit;

  std::size_t orbit_count() const { return orbits.size(); }
};

inline std::string f2_name(F2Vec v, std::size_t dim) {
  std::string s = "[";
  for (std::size_t j = 0; j < dim; ++j) s += std::string(j ? " " : "") + ((v >> j & 1u) ? "1" : "0");
  return s + "]";
}

/// Orbits of W(R+) on ker(u-1)/im(u+1), with the action of W(R-) and G_u
/// checked to be trivial.
inline ComponentReport orbit_count(const RootSystemData& sys, const LatticeMap& u) {
  ComponentReport rep;
  const IntMatrix up = weight_involution(sys, u);
  const ComponentGroup cg(up);
  rep.triple = type_triple(sys, u);
  rep.dimension = cg.dimension();
  if (rep.dimension > 16) throw ResourceCapError("component group too large for orbit enumeration");

  const auto cd = centralizer_data(sys, u);
  std::vector<std::vector<F2Vec>> gens;
  for (const auto& a : cd.roots_plus) {
    if (!sys.is_positive_root(a)) continue;
    auto g = cg.induced_map(root_reflection(sys, a, Basis::FundamentalWeight).matrix());
    if (ComponentGroup::apply(g, 0) != 0) throw std::logic_error("induced map is not linear");
    for (F2Vec v = 0; v < (F2Vec{1} << rep.dimension); ++v)
      if (ComponentGroup::apply(g, ComponentGroup::apply(g, v)) != v)
        throw std::logic_error("induced reflection is not an involution");
    gens.push_back(std::move(g));
  }
  std::vector<IntMatrix> trivial;
  for (const auto& a : cd.simple_minus) trivial.push_back(root_reflection(sys, a, Basis::FundamentalWeight).matrix());
  for (const auto& g : cd.gu_generators) trivial.push_back(change_basis(sys, g, Basis::FundamentalWeight).matrix());
  for (const auto& g : trivial) {
    const auto cols = cg.induced_map(g);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (cols[j] != F2Vec{1} << j) throw std::logic_error("W(R-) or G_u acts nontrivially on the component group");
  }

  rep.orbits = f2_orbits(rep.dimension, gens);
  std::vector<std::size_t> orbit_index(std::size_t{1} << rep.dimension);
  for (std::size_t o = 0; o < rep.orbits.size(); ++o)
    for (auto v : rep.orbits[o]) orbit_index[v] = o;
  rep.representatives.assign(rep.orbits.size(), "");
  rep.representatives[orbit_index[0]] = "0";
  for (std::size_t i = 0; i < sys.rank; ++i) {
    const IntVec w = unit_vector(sys.rank, i);
    if (up * w != w) continue;
    const std::size_t o = orbit_index[cg.reduce(w)];
    rep.weight_orbit[i] = o;
    if (rep.representatives[o].empty()) rep.representatives[o] = "w" + std::to_string(sys.label_of(i));
  }
  for (std::size_t o = 0; o < rep.orbits.size(); ++o)
    if (rep.representatives[o].empty()) rep.representatives[o] = f2_name(rep.orbits[o].front(), rep.dimension);
  return rep;
}

/// Orbits of W on P/2P via the colouring rule: s_i acts only on colourings
/// with node i black, and then flips the colours of the neighbours of i.
inline std::vector<std::vector<F2Vec>> orbits_P_mod_2P_diagram(const RootSystemData& sys) {
  const std::size_t n = sys.rank;
  const std::size_t size = std::size_t{1} << n;
  std::vector<int> orbit_of(size, -1);
  std::vector<std::vector<F2Vec>> orbits;
  for (F2Vec start = 0; start < size; ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<F2Vec> orbit{start};
    orbit_of[start] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (std::size_t i = 0; i < n; ++i) {
        if (!(orbit[k] >> i & 1u)) continue;
        F2Vec w = orbit[k];
        for (std::size_t j = 0; j < n; ++j)
          if (sys.diagram.adjacent(i, j)) w ^= F2Vec{1} << j;
        if (orbit_of[w] < 0) {
          orbit_of[w] = id;
          orbit.push_back(w);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// ---------------------------------------------------------------------------
// Alcove geometry. Points of (1/2)P are stored as weight coordinates of 2x.

inline void require_irreducible(const RootSystemData& sys) {
  if (!sys.irreducible()) throw DomainError("alcove computations need an irreducible root system");
}

/// All x in (1/2)P in the closed fundamental alcove, as ScaledWeight{2x, 2}.
inline std::vector<ScaledWeight> alcove_half_weights(const RootSystemData& sys) {
  require_irreducible(sys);
  std::vector<ScaledWeight> out;
  IntVec m(sys.rank, 0);
  auto rec = [&](auto&& self, std::size_t i, Int budget) -> void {
    if (i == sys.rank) {
      out.push_back(ScaledWeight{m, 2});
      return;
    }
    for (Int c = 0; c * sys.marks[i] <= budget; ++c) {
      m[i] = c;
      self(self, i + 1, budget - c * sys.marks[i]);
    }
    m[i] = 0;
  };
  rec(rec, 0, 2);
  std::sort(out.begin(), out.end(), [](const ScaledWeight& a, const ScaledWeight& b) { return a.numer < b.numer; });
  return out;
}

/// gamma_i = t(w_i) w_i w_0 for a special node i (mark 1); w_i is the
/// longest element of the parabolic subgroup on the other nodes.
struct SpecialAutomorphism {
  std::optional<std::size_t> node;  // nullopt for gamma_0 = identity
  IntMatrix linear;                 // w_i w_0 in the weight basis
  IntVec translation;               // w_i in weight coordinates (zero for gamma_0)

  /// Action on a point of (1/2)P given by 2x.
  IntVec apply_doubled(const IntVec& two_x) const { return 2 * translation + linear * two_x; }
};

inline std::vector<SpecialAutomorphism> special_automorphisms(const RootSystemData& sys) {
  require_irreducible(sys);
  const std::size_t n = sys.rank;
  const auto w0 = change_basis(sys, longest_element(sys, full_set(sys)).map, Basis::FundamentalWeight);
  std::vector<SpecialAutomorphism> out;
  out.push_back({std::nullopt, IntMatrix::identity(n), IntVec(n, 0)});
  for (std::size_t i = 0; i < n; ++i) {
    if (sys.marks[i] != 1) continue;
    const auto wi = change_basis(sys, longest_element(sys, full_set(sys) & ~(NodeSet{1} << i)).map,
                                 Basis::FundamentalWeight);
    out.push_back({i, (wi * w0).matrix(), unit_vector(n, i)});
  }
  return out;
}

/// Moves 2x into the closed fundamental alcove using W and the affine
/// reflection in the highest root.
inline IntVec to_alcove_doubled(const RootSystemData& sys, IntVec two_x) {
  require_irreducible(sys);
  const IntVec& theta = *sys.highest_root;
  const IntVec theta_w = sys.to_weight(theta);
  while (true) {
    two_x = make_dominant(sys, two_x);
    const Int level = dot(theta, two_x);
    if (level <= 2) return two_x;
    two_x = two_x - (level - 2) * theta_w;
  }
}

/// Orbits of the special automorphisms on the alcove half weights.
inline std::vector<std::vector<ScaledWeight>> alcove_orbits(const RootSystemData& sys) {
  const auto pts = alcove_half_weights(sys);
  const auto gammas = special_automorphisms(sys);
  std::vector<bool> done(pts.size(), false);
  std::vector<std::vector<ScaledWeight>> orbits;
  auto index_of = [&](const IntVec& v) {
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (pts[k].numer == v) return k;
    throw std::logic_error("special automorphism left the alcove");
  };
  for (std::size_t s = 0; s < pts.size(); ++s) {
    if (done[s]) continue;
    std::vector<std::size_t> orbit{s};
    done[s] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& g : gammas) {
        const auto t = index_of(g.apply_doubled(pts[orbit[k]].numer));
        if (!done[t]) {
          done[t] = true;
          orbit.push_back(t);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    std::vector<ScaledWeight> o;
    for (auto k : orbit) o.push_back(pts[k]);
    orbits.push_back(std::move(o));
  }
  return orbits;
}

struct StabilizerReport {
  std::optional<std::size_t> weight;  // node index, nullopt for the zero weight
  SubsystemType reflection_part;
  std::size_t extension_order = 1;
  IntVec alcove_point;                // 2x for the alcove representative of x = w/2
};

/// Stabilizer of the point x = w/2: the reflection group of
/// R(x) = {a : (a, x) integral}, extended by the special automorphisms that
/// fix the alcove representative of x.
inline StabilizerReport component_stabilizer(const RootSystemData& sys, std::optional<std::size_t> weight) {
  require_irreducible(sys);
  StabilizerReport rep;
  rep.weight = weight;
  IntVec two_x(sys.rank, 0);
  if (weight) two_x = unit_vector(sys.rank, *weight);
  std::vector<IntVec> integral;
  for (const auto& a : sys.all_roots())
    if (dot(a, two_x) % 2 == 0) integral.push_back(a);
  rep.reflection_part = classify_subsystem(sys, integral);
  rep.alcove_point = to_alcove_doubled(sys, two_x);
  rep.extension_order = 0;
  for (const auto& g : special_automorphisms(sys))
    if (g.apply_doubled(rep.alcove_point) == rep.alcove_point) ++rep.extension_order;
  return rep;
}

/// Dimension of the fixed space of the linear part of a special automorphism.
inline std::size_t fixed_space_dimension(const IntMatrix& m) {
  return m.rows() - rational_rank(m - IntMatrix::identity(m.rows()));
}

/// Parses "0" or "w<label>" into a node index.
inline std::optional<std::size_t> parse_weight_name(const RootSystemData& sys, std::string_view name) {
  const std::string s = detail::trim(name);
  if (s == "0") return std::nullopt;
  if (s.size() < 2 || (s[0] != 'w' && s[0] != 'W')) throw DomainError("unknown weight name '" + s + "'");
  int label = 0;
  try {
    label = detail::parse_int(std::string_view(s).substr(1), "weight index");
  } catch (const DomainError&) {
    throw DomainError("unknown weight name '" + s + "'");
  }
  if (!sys.diagram.has_node(label)) throw DomainError("unknown weight name '" + s + "'");
  return sys.index_of(label);
}

}  // namespace realweyl
