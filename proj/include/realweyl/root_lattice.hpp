#pragma once

// Simply-laced root systems, their Coxeter diagrams, and the del Pezzo
// lattice Lambda_{1,r} with its intersection form.
//
// Node numbering conventions (1-based labels):
//   A_n : chain 1-2-...-n
//   D_n : chain 1-2-...-(n-1), node n attached to node n-2
//   E_n : chain 1-2-...-(n-1), node n attached to node 3
// For E7 this is the chain 1-2-3-4-5-6 with node 7 on node 3, which is the
// numbering used by all representatives in the component tables (w3, w4, w6,
// ...). It is *not* Bourbaki's numbering. The same rule makes the simple roots
// e1-e2, ..., e_{r-1}-e_r, e0-e1-e2-e3 of Lambda_{1,r} line up with labels
// 1..r.

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "realweyl/int_matrix.hpp"

namespace realweyl {

// ---------------------------------------------------------------------------
// Irreducible ADE types

struct IrreducibleType {
  char series = 'A';  // 'A', 'D' or 'E'
  int rank = 0;

  std::string label() const { return std::string(1, series) + std::to_string(rank); }

  auto operator<=>(const IrreducibleType&) const = default;
};

/// Order of the Weyl group of an irreducible ADE type.
inline std::uint64_t weyl_order(const IrreducibleType& t) {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (t.series) {
    case 'A': return factorial(t.rank + 1);
    case 'D': return (std::uint64_t{1} << (t.rank - 1)) * factorial(t.rank);
    case 'E':
      if (t.rank == 6) return 51840;
      if (t.rank == 7) return 2903040;
      if (t.rank == 8) return 696729600;
      break;
  }
  throw DomainError("weyl_order: unsupported type " + t.label());
}

// ---------------------------------------------------------------------------
// Coxeter diagrams

/// A simply-laced Coxeter diagram. Every connected component is validated to
/// be of type A, D or E on construction.
class CoxeterDiagram {
 public:
  using Edge = std::pair<int, int>;

  CoxeterDiagram(std::vector<int> nodes, std::set<Edge> edges, std::string series_label = {})
      : nodes_(std::move(nodes)), series_label_(std::move(series_label)) {
    std::sort(nodes_.begin(), nodes_.end());
    if (nodes_.empty()) throw DomainError("diagram has no nodes");
    if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
      throw DomainError("diagram has duplicate node labels");
    for (auto [a, b] : edges) {
      if (a == b) throw DomainError("diagram has a loop at node " + std::to_string(a));
      if (a > b) std::swap(a, b);
      if (!has_node(a) || !has_node(b))
        throw DomainError("edge " + std::to_string(a) + "-" + std::to_string(b) + " uses an unknown node");
      edges_.insert({a, b});
    }
    classify_components();
    if (series_label_.empty()) series_label_ = computed_label();
  }

  const std::vector<int>& nodes() const noexcept { return nodes_; }
  const std::set<Edge>& edges() const noexcept { return edges_; }
  const std::string& series_label() const noexcept { return series_label_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  bool has_node(int label) const { return std::binary_search(nodes_.begin(), nodes_.end(), label); }

  std::size_t index_of(int label) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), label);
    if (it == nodes_.end() || *it != label) throw DomainError("unknown node " + std::to_string(label));
    return static_cast<std::size_t>(it - nodes_.begin());
  }

  bool adjacent(std::size_t i, std::size_t j) const {
    int a = nodes_[i], b = nodes_[j];
    if (a > b) std::swap(a, b);
    return edges_.count({a, b}) != 0;
  }

  /// Connected components as sorted lists of node indices, with their types.
  const std::vector<std::pair<std::vector<std::size_t>, IrreducibleType>>& components() const noexcept {
    return components_;
  }

  /// Type of the induced subdiagram on the given node indices.
  std::vector<IrreducibleType> subdiagram_types(const std::vector<std::size_t>& idx) const {
    std::vector<int> labels;
    std::set<Edge> sub;
    for (auto i : idx) labels.push_back(nodes_[i]);
    for (auto i : idx)
      for (auto j : idx)
        if (i < j && adjacent(i, j)) sub.insert({nodes_[i], nodes_[j]});
    CoxeterDiagram d(labels, sub, "-");
    std::vector<IrreducibleType> out;
    for (const auto& c : d.components_) out.push_back(c.second);
    return out;
  }

 private:
  void classify_components() {
    const std::size_t n = nodes_.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : edges_) {
      adj[index_of(a)].push_back(index_of(b));
      adj[index_of(b)].push_back(index_of(a));
    }
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<std::size_t> comp{s};
      seen[s] = true;
      for (std::size_t k = 0; k < comp.size(); ++k)
        for (auto t : adj[comp[k]])
          if (!seen[t]) {
            seen[t] = true;
            comp.push_back(t);
          }
      std::sort(comp.begin(), comp.end());
      components_.emplace_back(comp, identify(comp, adj));
    }
  }

  IrreducibleType identify(const std::vector<std::size_t>& comp,
                           const std::vector<std::vector<std::size_t>>& adj) const {
    std::size_t edge_count = 0;
    std::vector<std::size_t> forks;
    for (auto v : comp) {
      edge_count += adj[v].size();
      if (adj[v].size() > 3) throw DomainError("node " + std::to_string(nodes_[v]) + " has valence > 3");
      if (adj[v].size() == 3) forks.push_back(v);
    }
    edge_count /= 2;
    if (edge_count != comp.size() - 1) throw DomainError("diagram contains a cycle");
    const int n = static_cast<int>(comp.size());
    if (forks.empty()) return {'A', n};
    if (forks.size() > 1) throw DomainError("diagram component has two branch nodes");
    // Arm lengths away from the fork.
    std::vector<int> arms;
    for (auto start : adj[forks[0]]) {
      int len = 1;
      std::size_t prev = forks[0], cur = start;
      while (adj[cur].size() == 2) {
        const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {'D', n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', n};
    throw DomainError("diagram component is not of finite ADE type");
  }

  std::string computed_label() const {
    std::string s;
    for (const auto& c : components_) s += (s.empty() ? "" : "+") + c.second.label();
    return s;
  }

  std::vector<int> nodes_;
  std::set<Edge> edges_;
  std::string series_label_;
  std::vector<std::pair<std::vector<std::size_t>, IrreducibleType>> components_;
};

/// Standard diagram of an irreducible type, with labels offset+1..offset+n.
inline CoxeterDiagram series_diagram(IrreducibleType t, int offset = 0) {
  const int n = t.rank;
  std::vector<int> nodes;
  for (int i = 1; i <= n; ++i) nodes.push_back(offset + i);
  std::set<CoxeterDiagram::Edge> edges;
  switch (t.series) {
    case 'A':
      if (n < 1) throw DomainError("A_n needs n >= 1");
      for (int i = 1; i < n; ++i) edges.insert({offset + i, offset + i + 1});
      break;
    case 'D':
      if (n < 4) throw DomainError("D_n needs n >= 4");
      for (int i = 1; i < n - 1; ++i) edges.insert({offset + i, offset + i + 1});
      edges.insert({offset + n - 2, offset + n});
      break;
    case 'E':
      if (n < 6 || n > 8) throw DomainError("E_n needs 6 <= n <= 8");
      for (int i = 1; i < n - 1; ++i) edges.insert({offset + i, offset + i + 1});
      edges.insert({offset + 3, offset + n});
      break;
    default:
      throw DomainError(std::string("unsupported series '") + t.series + "'");
  }
  return CoxeterDiagram(nodes, edges, t.label());
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

inline int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto t = trim(s);
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size()) throw DomainError("cannot parse " + std::string(what) + " '" + t + "'");
  return v;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

}  // namespace detail

/// Parses "E7", "A3+A1", "D4" or "nodes=7; edges=1-2,2-3,3-4,4-5,5-6,3-7".
inline CoxeterDiagram parse_diagram(std::string_view text) {
  const std::string s = detail::trim(text);
  if (s.empty()) throw DomainError("empty type string");
  if (s.rfind("nodes", 0) == 0) {
    int count = -1;
    std::set<CoxeterDiagram::Edge> edges;
    for (const auto& part : detail::split(s, ';')) {
      if (part.empty()) continue;
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw DomainError("expected key=value in '" + part + "'");
      const auto key = detail::trim(std::string_view(part).substr(0, eq));
      const auto value = detail::trim(std::string_view(part).substr(eq + 1));
      if (key == "nodes") {
        count = detail::parse_int(value, "node count");
      } else if (key == "edges") {
        if (value.empty()) continue;
        for (const auto& e : detail::split(value, ',')) {
          const auto dash = e.find('-');
          if (dash == std::string::npos) throw DomainError("bad edge '" + e + "'");
          edges.insert({detail::parse_int(std::string_view(e).substr(0, dash), "edge endpoint"),
                        detail::parse_int(std::string_view(e).substr(dash + 1), "edge endpoint")});
        }
      } else {
        throw DomainError("unknown key '" + key + "'");
      }
    }
    if (count <= 0) throw DomainError("explicit diagram needs nodes=<n> with n >= 1");
    std::vector<int> nodes;
    for (int i = 1; i <= count; ++i) nodes.push_back(i);
    return CoxeterDiagram(nodes, edges);
  }
  std::vector<int> nodes;
  std::set<CoxeterDiagram::Edge> edges;
  std::string label;
  int offset = 0;
  for (const auto& part : detail::split(s, '+')) {
    if (part.size() < 2) throw DomainError("unknown type '" + part + "'");
    const char series = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    const int rank = detail::parse_int(std::string_view(part).substr(1), "rank");
    const auto d = series_diagram({series, rank}, offset);
    nodes.insert(nodes.end(), d.nodes().begin(), d.nodes().end());
    edges.insert(d.edges().begin(), d.edges().end());
    label += (label.empty() ? "" : "+") + d.series_label();
    offset += rank;
  }
  return CoxeterDiagram(nodes, edges, label);
}

// ---------------------------------------------------------------------------
// Scaled weights and lattice maps

/// A rational vector stored as integer numerators over a shared denominator.
struct ScaledWeight {
  IntVec numer;
  Int denom = 1;

  ScaledWeight normalized() const {
    Int g = denom;
    for (auto x : numer) g = std::gcd(g, x);
    ScaledWeight r = *this;
    if (g > 1) {
      for (auto& x : r.numer) x /= g;
      r.denom /= g;
    }
    return r;
  }
  bool operator==(const ScaledWeight& o) const {
    const auto a = normalized(), b = o.normalized();
    return a.numer == b.numer && a.denom == b.denom;
  }
  auto operator<=>(const ScaledWeight& o) const {
    const auto a = normalized(), b = o.normalized();
    return std::tie(a.denom, a.numer) <=> std::tie(b.denom, b.numer);
  }
};

enum class Basis { SimpleRoot, FundamentalWeight, DelPezzo };

inline std::string to_string(Basis b) {
  switch (b) {
    case Basis::SimpleRoot: return "simple-root";
    case Basis::FundamentalWeight: return "fundamental-weight";
    case Basis::DelPezzo: return "e-basis";
  }
  return "?";
}

class BasisMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An endomorphism of a lattice, as a square integer matrix acting on column
/// coordinate vectors in a declared basis.
class LatticeMap {
 public:
  LatticeMap(Basis basis, IntMatrix matrix) : basis_(basis), matrix_(std::move(matrix)) {
    if (!matrix_.is_square()) throw std::invalid_argument("LatticeMap needs a square matrix");
  }

  static LatticeMap identity(Basis basis, std::size_t n) { return {basis, IntMatrix::identity(n)}; }

  Basis basis() const noexcept { return basis_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

  IntVec operator()(const IntVec& v) const { return matrix_ * v; }

  /// Composition (*this) o other.
  LatticeMap operator*(const LatticeMap& other) const {
    if (basis_ != other.basis_ || dim() != other.dim())
      throw BasisMismatch("cannot compose maps in " + to_string(basis_) + " and " + to_string(other.basis_) +
                          " bases");
    return {basis_, matrix_ * other.matrix_};
  }

  LatticeMap operator-() const { return {basis_, -matrix_}; }

  bool is_identity() const { return matrix_.is_identity(); }
  bool is_involution() const { return (matrix_ * matrix_).is_identity(); }

  bool operator==(const LatticeMap&) const = default;

 private:
  Basis basis_;
  IntMatrix matrix_;
};

// ---------------------------------------------------------------------------
// Root systems

struct RootSystemData {
  CoxeterDiagram diagram;
  std::size_t rank = 0;
  IntMatrix cartan;
  /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
  std::vector<IntVec> positive_roots;
  /// Column j is the fundamental weight w_j in simple-root coordinates.
  std::vector<RationalVec> fundamental_weights;
  /// Only set for irreducible systems.
  std::optional<IntVec> highest_root;
  /// Coefficients n_i of the highest root (irreducible systems only).
  IntVec marks;

  bool irreducible() const { return diagram.components().size() == 1; }

  std::size_t index_of(int label) const { return diagram.index_of(label); }
  int label_of(std::size_t index) const { return diagram.nodes().at(index); }

  /// Root coordinates -> fundamental-weight coordinates.
  IntVec to_weight(const IntVec& root_coords) const { return cartan * root_coords; }

  /// (a, b) for a, b in simple-root coordinates.
  Int form(const IntVec& a, const IntVec& b) const { return dot(a, cartan * b); }

  /// (a, lambda) for a in root coordinates, lambda in weight coordinates.
  static Int pairing(const IntVec& root_coords, const IntVec& weight_coords) {
    return dot(root_coords, weight_coords);
  }

  std::vector<IntVec> all_roots() const {
    std::vector<IntVec> out = positive_roots;
    for (const auto& r : positive_roots) out.push_back(-r);
    return out;
  }

  bool is_positive_root(const IntVec& a) const {
    return std::binary_search(positive_roots.begin(), positive_roots.end(), a, height_order);
  }
  bool is_root(const IntVec& a) const { return is_positive_root(a) || is_positive_root(-a); }

  std::size_t positive_index(const IntVec& a) const {
    auto it = std::lower_bound(positive_roots.begin(), positive_roots.end(), a, height_order);
    if (it == positive_roots.end() || *it != a) throw DomainError("not a positive root");
    return static_cast<std::size_t>(it - positive_roots.begin());
  }

  static Int height(const IntVec& a) { return std::accumulate(a.begin(), a.end(), Int{0}); }

  static bool height_order(const IntVec& a, const IntVec& b) {
    const Int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  }
};

/// Builds the root system of a (possibly reducible) ADE diagram.
inline RootSystemData build_root_system(const CoxeterDiagram& diagram) {
  RootSystemData sys{diagram, 0, {}, {}, {}, std::nullopt, {}};
  const std::size_t n = diagram.size();
  sys.rank = n;
  sys.cartan = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sys.cartan(i, j) = i == j ? 2 : (diagram.adjacent(i, j) ? -1 : 0);

  // Grow positive roots by height: in a simply-laced system, beta + alpha_i is
  // a root exactly when (beta, alpha_i) = -1.
  std::set<IntVec> seen;
  std::vector<IntVec> layer;
  for (std::size_t i = 0; i < n; ++i) {
    layer.push_back(unit_vector(n, i));
    seen.insert(layer.back());
  }
  while (!layer.empty()) {
    std::vector<IntVec> next;
    for (const auto& beta : layer) {
      const IntVec bw = sys.cartan * beta;
      for (std::size_t i = 0; i < n; ++i) {
        if (bw[i] != -1) continue;
        IntVec gamma = beta;
        gamma[i] += 1;
        if (seen.insert(gamma).second) next.push_back(gamma);
      }
    }
    layer = std::move(next);
  }
  sys.positive_roots.assign(seen.begin(), seen.end());
  std::sort(sys.positive_roots.begin(), sys.positive_roots.end(), RootSystemData::height_order);

  const auto inv = rational_inverse(sys.cartan);
  sys.fundamental_weights.assign(n, RationalVec(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) sys.fundamental_weights[j][i] = inv[i][j];

  if (sys.irreducible()) {
    sys.highest_root = sys.positive_roots.back();
    sys.marks = *sys.highest_root;
  }
  return sys;
}

inline RootSystemData build_root_system(std::string_view type) { return build_root_system(parse_diagram(type)); }

inline std::uint64_t weyl_order(const RootSystemData& sys) {
  std::uint64_t order = 1;
  for (const auto& c : sys.diagram.components()) order *= weyl_order(c.second);
  return order;
}

// ---------------------------------------------------------------------------
// The del Pezzo lattice Lambda_{1,r}

struct DelPezzoLattice {
  int r = 0;
  IntMatrix gram;
  IntVec k;
  /// alpha_1 = e1-e2, ..., alpha_{r-1} = e_{r-1}-e_r, alpha_r = e0-e1-e2-e3.
  std::vector<IntVec> simple_roots;

  std::size_t dim() const { return static_cast<std::size_t>(r) + 1; }
  Int product(const IntVec& x, const IntVec& y) const { return dot(x, gram * y); }

  IntVec e(int i) const { return unit_vector(dim(), static_cast<std::size_t>(i)); }
};

inline DelPezzoLattice build_del_pezzo_lattice(int r) {
  if (r < 3 || r > 8) throw DomainError("del Pezzo lattice needs 3 <= r <= 8, got " + std::to_string(r));
  DelPezzoLattice lat;
  lat.r = r;
  const std::size_t n = lat.dim();
  lat.gram = IntMatrix(n, n);
  lat.gram(0, 0) = 1;
  for (std::size_t i = 1; i < n; ++i) lat.gram(i, i) = -1;
  lat.k = IntVec(n, 1);
  lat.k[0] = -3;
  for (int i = 1; i < r; ++i) lat.simple_roots.push_back(lat.e(i) - lat.e(i + 1));
  lat.simple_roots.push_back(lat.e(0) - lat.e(1) - lat.e(2) - lat.e(3));
  return lat;
}

/// All x in Lambda_{1,r} with x.x = norm and k.x = k_product.
/// Bounded search: k.x fixes sum(x_i) = -3 x_0 - k_product, and
/// x.x = norm bounds sum(x_i^2) = x_0^2 - norm.
inline std::vector<IntVec> del_pezzo_vectors(const DelPezzoLattice& lat, Int norm, Int k_product) {
  std::vector<IntVec> out;
  const int r = lat.r;
  for (Int x0 = -6; x0 <= 6; ++x0) {
    const Int budget = x0 * x0 - norm;
    if (budget < 0) continue;
    const Int target_sum = -3 * x0 - k_product;
    IntVec x(lat.dim(), 0);
    x[0] = x0;
    auto rec = [&](auto&& self, int i, Int rem_budget, Int rem_sum) -> void {
      if (i > r) {
        if (rem_budget == 0 && rem_sum == 0) out.push_back(x);
        return;
      }
      const int left = r - i + 1;
      // Cauchy-Schwarz prune: rem_sum^2 <= left * rem_budget.
      if (rem_sum * rem_sum > static_cast<Int>(left) * rem_budget) return;
      for (Int v = -6; v <= 6; ++v) {
        if (v * v > rem_budget) continue;
        x[static_cast<std::size_t>(i)] = v;
        self(self, i + 1, rem_budget - v * v, rem_sum - v);
      }
      x[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 1, budget, target_sum);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All roots of Lambda_{1,r}: alpha.alpha = -2 and k.alpha = 0.
inline std::vector<IntVec> del_pezzo_roots(const DelPezzoLattice& lat) { return del_pezzo_vectors(lat, -2, 0); }

/// Coordinates of x in the simple-root basis of Q_r (throws if x is not in Q_r).
inline IntVec del_pezzo_root_coordinates(const DelPezzoLattice& lat, const IntVec& x) {
  const auto basis = IntMatrix::from_columns(lat.simple_roots, lat.dim());
  auto c = solve_integer(basis, x);
  if (!c) throw DomainError("vector is not in the root lattice Q_r");
  return *c;
}

/// Root system of Q_r = k^perp with the negated intersection form.
inline RootSystemData del_pezzo_root_system(const DelPezzoLattice& lat) {
  std::vector<int> nodes;
  std::set<CoxeterDiagram::Edge> edges;
  for (int i = 1; i <= lat.r; ++i) nodes.push_back(i);
  for (int i = 0; i < lat.r; ++i)
    for (int j = i + 1; j < lat.r; ++j) {
      const Int c = -lat.product(lat.simple_roots[static_cast<std::size_t>(i)],
                                 lat.simple_roots[static_cast<std::size_t>(j)]);
      if (c == -1) edges.insert({i + 1, j + 1});
      else if (c != 0) throw std::logic_error("del Pezzo simple roots are not simply laced");
    }
  return build_root_system(CoxeterDiagram(nodes, edges));
}

enum class ExceptionalFamily { Point, Line, Conic, Cubic };

inline char family_letter(ExceptionalFamily f) {
  switch (f) {
    case ExceptionalFamily::Point: return 'e';
    case ExceptionalFamily::Line: return 'l';
    case ExceptionalFamily::Conic: return 'c';
    case ExceptionalFamily::Cubic: return 'k';
  }
  return '?';
}

struct ExceptionalElement {
  IntVec vector;
  ExceptionalFamily family;
  /// e_i: {i}; l_ij: {i,j}; c: the points *not* on the conic; k_i: the node {i}.
  std::vector<int> indices;

  std::string name() const {
    std::string s(1, family_letter(family));
    for (auto i : indices) s += std::to_string(i);
    return s;
  }
};

/// Exceptional classes e.e = e.k = -1, grouped into the families e_i, l_ij,
/// c_ij (conics through five points) and k_i (nodal cubics).
inline std::vector<ExceptionalElement> exceptional_elements(const DelPezzoLattice& lat) {
  if (lat.r > 7) throw DomainError("exceptional_elements covers r <= 7 only");
  std::vector<ExceptionalElement> out;
  for (const auto& v : del_pezzo_vectors(lat, -1, -1)) {
    ExceptionalElement x{v, ExceptionalFamily::Point, {}};
    switch (v[0]) {
      case 0:
        x.family = ExceptionalFamily::Point;
        for (int i = 1; i <= lat.r; ++i)
          if (v[static_cast<std::size_t>(i)] == 1) x.indices.push_back(i);
        break;
      case 1:
        x.family = ExceptionalFamily::Line;
        for (int i = 1; i <= lat.r; ++i)
          if (v[static_cast<std::size_t>(i)] == -1) x.indices.push_back(i);
        break;
      case 2:
        x.family = ExceptionalFamily::Conic;
        for (int i = 1; i <= lat.r; ++i)
          if (v[static_cast<std::size_t>(i)] == 0) x.indices.push_back(i);
        break;
      case 3:
        x.family = ExceptionalFamily::Cubic;
        for (int i = 1; i <= lat.r; ++i)
          if (v[static_cast<std::size_t>(i)] == -2) x.indices.push_back(i);
        break;
      default:
        throw std::logic_error("unexpected exceptional class");
    }
    out.push_back(std::move(x));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.family, a.indices) < std::tie(b.family, b.indices);
  });
  return out;
}

/// s_alpha : x -> x + (alpha.x) alpha on Lambda_{1,r}.
inline LatticeMap reflection(const DelPezzoLattice& lat, const IntVec& alpha) {
  if (alpha.size() != lat.dim() || lat.product(alpha, alpha) != -2 || lat.product(alpha, lat.k) != 0)
    throw DomainError("reflection: vector is not a root of Lambda_{1," + std::to_string(lat.r) + "}");
  const std::size_t n = lat.dim();
  const IntVec ga = lat.gram * alpha;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) += alpha[i] * ga[j];
  return {Basis::DelPezzo, m};
}

/// Geiser involution x -> -x + (x.k) k on Lambda_{1,7}.
inline LatticeMap geiser_map(const DelPezzoLattice& lat) {
  if (lat.r != 7) throw DomainError("the Geiser involution is defined for r = 7 only");
  const std::size_t n = lat.dim();
  const IntVec gk = lat.gram * lat.k;
  IntMatrix m = -IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) += lat.k[i] * gk[j];
  return {Basis::DelPezzo, m};
}

}  // namespace realweyl
