#pragma once

// Seven points on the smooth locus of a real nodal cubic, Y^ns(R) = R*, with
// coordinates t_1..t_7 given by t_i = chi(e_i - e_0/3). Permutations act by
// permuting coordinates; the Cremona transformation centred at P_i, P_j, P_k
// rescales
//   t_m -> t_m c^-2  (m in the triple),   t_m -> t_m c  (otherwise),
// with c the real cube root of t_i t_j t_k. On signs this leaves the triple
// alone and flips every other real point iff t_i t_j t_k < 0. A complex
// conjugate pair has product |t|^2 > 0, so it never contributes a sign.

#include <array>
#include <map>
#include <set>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "realweyl/root_lattice.hpp"

namespace realweyl {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using Quad = boost::multiprecision::cpp_bin_float_quad;

/// Tolerance declared for the approximate (binary128) Cremona mode.
inline const Quad approximate_tolerance = Quad("1e-20");

constexpr int kPoints = 7;

// ---------------------------------------------------------------------------
// Sign configurations

using Triple = std::array<int, 3>;  // 1-based point indices

class SignConfiguration {
 public:
  /// signs[i] is +1/-1 for a real point and ignored for points in a pair.
  SignConfiguration(std::array<int, kPoints> signs, std::vector<std::pair<int, int>> pairs)
      : signs_(signs), pairs_(std::move(pairs)) {
    std::array<int, kPoints + 1> seen{};
    for (auto& [a, b] : pairs_) {
      if (a > b) std::swap(a, b);
      if (a < 1 || b > kPoints || a == b) throw DomainError("bad conjugate pair");
      if (seen[a]++ || seen[b]++) throw DomainError("point listed in two conjugate pairs");
    }
    std::sort(pairs_.begin(), pairs_.end());
    for (int i = 1; i <= kPoints; ++i) {
      if (!is_real(i)) {
        signs_[i - 1] = 0;
      } else if (signs_[i - 1] != 1 && signs_[i - 1] != -1) {
        throw DomainError("real point needs sign +1 or -1");
      }
    }
  }

  bool is_real(int i) const {
    for (const auto& [a, b] : pairs_)
      if (i == a || i == b) return false;
    return true;
  }
  int sign(int i) const { return signs_.at(static_cast<std::size_t>(i - 1)); }
  const std::array<int, kPoints>& signs() const noexcept { return signs_; }
  const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }

  int m_plus() const { return static_cast<int>(std::count(signs_.begin(), signs_.end(), 1)); }
  int m_minus() const { return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1)); }

  bool operator==(const SignConfiguration&) const = default;

 private:
  std::array<int, kPoints> signs_;
  std::vector<std::pair<int, int>> pairs_;
};

/// Pairs taken from the end: 1 -> (6,7); 2 -> (4,5),(6,7); 3 -> (2,3),(4,5),(6,7).
inline std::vector<std::pair<int, int>> standard_pairs(int count) {
  if (count < 0 || count > 3) throw DomainError("number of conjugate pairs must be 0..3");
  std::vector<std::pair<int, int>> out;
  for (int p = 3 - count; p < 3; ++p) out.emplace_back(2 * p + 2, 2 * p + 3);
  return out;
}

/// Three real points, or one real point together with both points of a pair.
inline bool is_admissible(const SignConfiguration& c, Triple t) {
  std::sort(t.begin(), t.end());
  if (t[0] < 1 || t[2] > kPoints || t[0] == t[1] || t[1] == t[2]) return false;
  int real = 0;
  for (int i : t) real += c.is_real(i) ? 1 : 0;
  if (real == 3) return true;
  if (real != 1) return false;
  for (const auto& [a, b] : c.pairs())
    if (std::count(t.begin(), t.end(), a) && std::count(t.begin(), t.end(), b)) return true;
  return false;
}

inline SignConfiguration cremona_sign_step(const SignConfiguration& c, const Triple& t) {
  if (!is_admissible(c, t)) throw DomainError("Cremona triple is not admissible for this conjugation pattern");
  int product = 1;
  for (int i : t)
    if (c.is_real(i)) product *= c.sign(i);
  auto signs = c.signs();
  for (int m = 1; m <= kPoints; ++m)
    if (c.is_real(m) && std::find(t.begin(), t.end(), m) == t.end()) signs[m - 1] *= product;
  return {signs, c.pairs()};
}

/// The two remaining intersection points of the tangent line are real iff
/// their square 1/(t_1...t_7) is positive, i.e. iff m_- is even.
inline bool geiser_fixed_reality(const SignConfiguration& c) { return c.m_minus() % 2 == 0; }

using SignClass = std::pair<int, int>;  // (m+, m-)

namespace detail {

inline std::vector<Triple> admissible_triples(const SignConfiguration& c) {
  std::vector<Triple> out;
  for (int i = 1; i <= kPoints; ++i)
    for (int j = i + 1; j <= kPoints; ++j)
      for (int k = j + 1; k <= kPoints; ++k)
        if (is_admissible(c, {i, j, k})) out.push_back({i, j, k});
  return out;
}

/// Members by m+ descending; orbits by their largest m+ descending.
inline std::vector<std::vector<SignClass>> sort_orbits(std::vector<std::set<SignClass>> orbits) {
  std::vector<std::vector<SignClass>> out;
  for (auto& o : orbits) {
    std::vector<SignClass> v(o.begin(), o.end());
    std::sort(v.begin(), v.end(), [](auto a, auto b) { return a.first > b.first; });
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front().first > b.front().first; });
  return out;
}

}  // namespace detail

/// Orbits of (m+, m-) under permutations of real points and admissible
/// Cremona steps, by exhaustive search over raw sign vectors.
inline std::vector<std::vector<SignClass>> sign_orbits(int pair_count) {
  const auto pairs = standard_pairs(pair_count);
  std::vector<int> real;
  {
    SignConfiguration probe({1, 1, 1, 1, 1, 1, 1}, pairs);
    for (int i = 1; i <= kPoints; ++i)
      if (probe.is_real(i)) real.push_back(i);
  }
  auto make = [&](unsigned mask) {
    std::array<int, kPoints> s{};
    for (std::size_t b = 0; b < real.size(); ++b) s[real[b] - 1] = (mask >> b & 1u) ? -1 : 1;
    return SignConfiguration(s, pairs);
  };
  auto mask_of = [&](const SignConfiguration& c) {
    unsigned m = 0;
    for (std::size_t b = 0; b < real.size(); ++b)
      if (c.sign(real[b]) < 0) m |= 1u << b;
    return m;
  };
  const auto triples = detail::admissible_triples(make(0));
  const unsigned size = 1u << real.size();
  std::vector<int> orbit_of(size, -1);
  std::vector<std::set<SignClass>> orbits;
  for (unsigned s = 0; s < size; ++s) {
    if (orbit_of[s] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    std::vector<unsigned> todo{s};
    orbit_of[s] = id;
    while (!todo.empty()) {
      const auto c = make(todo.back());
      todo.pop_back();
      orbits[id].insert({c.m_plus(), c.m_minus()});
      std::vector<unsigned> next;
      for (const auto& t : triples) next.push_back(mask_of(cremona_sign_step(c, t)));
      for (std::size_t a = 0; a < real.size(); ++a)
        for (std::size_t b = a + 1; b < real.size(); ++b) {
          auto sg = c.signs();
          std::swap(sg[real[a] - 1], sg[real[b] - 1]);
          next.push_back(mask_of(SignConfiguration(sg, pairs)));
        }
      for (auto m : next)
        if (orbit_of[m] < 0) {
          orbit_of[m] = id;
          todo.push_back(m);
        }
    }
  }
  // Permutations are in the group, so (m+, m-) must determine the orbit.
  std::set<SignClass> seen;
  for (const auto& o : orbits)
    for (const auto& x : o)
      if (!seen.insert(x).second) throw std::logic_error("(m+, m-) is not a complete invariant");
  return detail::sort_orbits(orbits);
}

/// The same orbits computed directly on (m+, m-): a step centred at r real
/// points, q of them negative, flips the remaining real points when q is odd.
inline std::vector<std::vector<SignClass>> sign_orbits_by_counts(int pair_count) {
  const int reals = kPoints - 2 * standard_pairs(pair_count).size();
  std::map<SignClass, int> orbit_of;
  std::vector<std::set<SignClass>> orbits;
  for (int mp = reals; mp >= 0; --mp) {
    const SignClass start{mp, reals - mp};
    if (orbit_of.count(start)) continue;
    const int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    std::vector<SignClass> todo{start};
    orbit_of[start] = id;
    while (!todo.empty()) {
      const auto [p, m] = todo.back();
      todo.pop_back();
      orbits[id].insert({p, m});
      for (int centre_real : {3, 1}) {
        if (centre_real == 1 && pair_count == 0) continue;
        for (int q = 0; q <= centre_real; ++q) {
          if (q > m || centre_real - q > p || q % 2 == 0) continue;
          const int rest_p = p - (centre_real - q), rest_m = m - q;
          const SignClass next{p - rest_p + rest_m, m - rest_m + rest_p};
          if (!orbit_of.count(next)) {
            orbit_of[next] = id;
            todo.push_back(next);
          }
        }
      }
    }
  }
  return detail::sort_orbits(orbits);
}

// ---------------------------------------------------------------------------
// Coordinates

using PointTuple = std::array<BigRational, kPoints>;
using QuadTuple = std::array<Quad, kPoints>;

inline void require_nonzero(const PointTuple& t) {
  for (const auto& x : t)
    if (x == 0) throw DomainError("point coordinates must be nonzero");
}

namespace detail {

inline std::optional<BigInt> exact_cube_root(BigInt n) {
  const bool neg = n < 0;
  if (neg) n = -n;
  BigInt lo = 0, hi = 1;
  while (hi * hi * hi < n) hi *= 2;
  while (lo < hi) {
    const BigInt mid = (lo + hi) / 2;
    if (mid * mid * mid < n) lo = mid + 1;
    else hi = mid;
  }
  if (lo * lo * lo != n) return std::nullopt;
  return neg ? BigInt(-lo) : lo;
}

inline Quad real_cbrt(const Quad& x) { return x < 0 ? Quad(-boost::multiprecision::cbrt(-x)) : Quad(boost::multiprecision::cbrt(x)); }

inline void check_triple(const Triple& t) {
  std::set<int> s(t.begin(), t.end());
  if (s.size() != 3 || *s.begin() < 1 || *s.rbegin() > kPoints) throw DomainError("triple needs three distinct points in 1..7");
}

}  // namespace detail

/// Real cube root of a rational when it is rational.
inline std::optional<BigRational> exact_cube_root(const BigRational& x) {
  auto n = detail::exact_cube_root(boost::multiprecision::numerator(x));
  auto d = detail::exact_cube_root(boost::multiprecision::denominator(x));
  if (!n || !d) return std::nullopt;
  return BigRational(*n, *d);
}

struct CremonaImage {
  /// Set when t_i t_j t_k is the cube of a rational.
  std::optional<PointTuple> exact;
  /// Always set; binary128 evaluation with the real cube root.
  QuadTuple approx;
};

inline CremonaImage cremona_coordinates(const PointTuple& t, const Triple& triple) {
  require_nonzero(t);
  detail::check_triple(triple);
  auto in_triple = [&](int m) { return std::find(triple.begin(), triple.end(), m) != triple.end(); };
  const BigRational product = t[triple[0] - 1] * t[triple[1] - 1] * t[triple[2] - 1];
  CremonaImage img;
  if (auto c = exact_cube_root(product)) {
    PointTuple out;
    for (int m = 1; m <= kPoints; ++m) out[m - 1] = in_triple(m) ? BigRational(t[m - 1] / (*c * *c)) : BigRational(t[m - 1] * *c);
    img.exact = out;
  }
  const Quad c = detail::real_cbrt(Quad(product));
  for (int m = 1; m <= kPoints; ++m) {
    const Quad x(t[m - 1]);
    img.approx[m - 1] = in_triple(m) ? Quad(x / (c * c)) : Quad(x * c);
  }
  return img;
}

/// The Geiser involution on the eighth intersection point: q -> 1/(q t_1...t_7).
inline BigRational geiser_coordinates(const PointTuple& t, const BigRational& q) {
  require_nonzero(t);
  if (q == 0) throw DomainError("q must be nonzero");
  BigRational p = q;
  for (const auto& x : t) p *= x;
  return BigRational(1) / p;
}

/// Action of the Geiser involution (-1 on Q) on the seven coordinates.
inline PointTuple geiser_tuple(const PointTuple& t) {
  require_nonzero(t);
  PointTuple out;
  for (int i = 0; i < kPoints; ++i) out[i] = BigRational(1) / t[i];
  return out;
}

/// chi(alpha) = prod t_i^{alpha_i} for alpha in Q_7 = k^perp (e-basis coordinates).
inline BigRational character(const PointTuple& t, const IntVec& alpha) {
  if (alpha.size() != kPoints + 1) throw DomainError("character needs an e-basis vector of Lambda_{1,7}");
  Int s = 0;
  for (int i = 1; i <= kPoints; ++i) s += alpha[i];
  if (s != -3 * alpha[0]) throw DomainError("character is defined on k-perp only");
  BigRational v = 1;
  for (int i = 1; i <= kPoints; ++i) {
    const Int e = alpha[i];
    for (Int r = 0; r < (e < 0 ? -e : e); ++r) v = e > 0 ? BigRational(v * t[i - 1]) : BigRational(v / t[i - 1]);
  }
  return v;
}

/// Positive roots of Lambda_{1,7} (nonnegative simple-root coordinates).
inline const std::vector<IntVec>& positive_roots_e7_lattice() {
  static const std::vector<IntVec> roots = [] {
    const auto lat = build_del_pezzo_lattice(7);
    std::vector<IntVec> out;
    for (const auto& a : del_pezzo_roots(lat)) {
      const auto c = del_pezzo_root_coordinates(lat, a);
      if (std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; })) out.push_back(a);
    }
    return out;
  }();
  return roots;
}

/// No positive root lies in the kernel of chi: the points are distinct, no
/// three collinear, no six on a conic.
inline bool is_general_position(const PointTuple& t) {
  require_nonzero(t);
  for (const auto& a : positive_roots_e7_lattice())
    if (character(t, a) == 1) return false;
  return true;
}

}  // namespace realweyl
