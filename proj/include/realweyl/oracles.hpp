#pragma once

// Brute-force cross-checks that enumerate the whole Weyl group: conjugacy
// classes of involutions by direct conjugation, matched against the
// Richardson classes, and centralizer orders from generator sets.

#include <unordered_map>

#include "realweyl/centralizer.hpp"
#include "realweyl/involutions.hpp"

namespace realweyl {

struct BruteForceClass {
  IntMatrix member;       // weight basis
  std::uint64_t size = 0;
};

/// Involution classes (identity included) by conjugating with simple reflections.
inline std::vector<BruteForceClass> brute_force_involution_classes(const RootSystemData& sys,
                                                                   std::uint64_t cap = group_order_cap()) {
  const IntVec rho(sys.rank, 1);
  std::unordered_map<std::uint64_t, IntMatrix> involutions;
  enumerate_group(sys, [&](const IntMatrix& m) {
    if ((m * m).is_identity()) involutions.emplace(pack_key(m * rho), m);
  }, cap);
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < sys.rank; ++i) gens.push_back(simple_reflection(sys, i, Basis::FundamentalWeight).matrix());

  std::vector<std::uint64_t> keys;
  for (const auto& kv : involutions) keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end());
  std::unordered_map<std::uint64_t, bool> done;
  std::vector<BruteForceClass> out;
  for (auto k : keys) {
    if (done[k]) continue;
    done[k] = true;
    BruteForceClass c{involutions.at(k), 0};
    std::vector<IntMatrix> todo{c.member};
    while (!todo.empty()) {
      const IntMatrix m = todo.back();
      todo.pop_back();
      ++c.size;
      for (const auto& g : gens) {
        IntMatrix conj = g * m * g;
        const auto key = pack_key(conj * rho);
        if (!involutions.count(key)) throw std::logic_error("conjugate of an involution was not enumerated");
        if (!done[key]) {
          done[key] = true;
          todo.push_back(std::move(conj));
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

struct OracleClassCheck {
  std::string label;
  std::uint64_t brute_size = 0;        // size of the brute-force class containing w_I
  std::uint64_t formula_size = 0;      // |W| / |C_W(w_I)| from the centralizer structure
  std::uint64_t generated_order = 0;   // order of <centralizer generators>
};

struct OracleReport {
  std::size_t richardson_classes = 0;
  std::size_t brute_force_classes = 0;
  std::uint64_t group_order = 0;
  std::vector<OracleClassCheck> classes;
  /// Every brute-force class contains exactly one Richardson representative.
  bool bijective = false;

  bool ok() const {
    if (!bijective || richardson_classes != brute_force_classes) return false;
    for (const auto& c : classes)
      if (c.brute_size != c.formula_size || c.generated_order * c.brute_size != group_order) return false;
    return true;
  }
};

inline OracleReport verify_involution_classes(const RootSystemData& sys, std::uint64_t cap = group_order_cap()) {
  OracleReport rep;
  rep.group_order = weyl_order(sys);
  const auto brute = brute_force_involution_classes(sys, cap);
  const auto classes = classify_involutions(sys);
  rep.richardson_classes = classes.size();
  rep.brute_force_classes = brute.size();

  // Index the brute-force classes by every member's chamber key.
  const IntVec rho(sys.rank, 1);
  std::unordered_map<std::uint64_t, std::size_t> class_of;
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < sys.rank; ++i) gens.push_back(simple_reflection(sys, i, Basis::FundamentalWeight).matrix());
  for (std::size_t b = 0; b < brute.size(); ++b) {
    std::vector<IntMatrix> todo{brute[b].member};
    class_of[pack_key(brute[b].member * rho)] = b;
    while (!todo.empty()) {
      const IntMatrix m = todo.back();
      todo.pop_back();
      for (const auto& g : gens) {
        IntMatrix conj = g * m * g;
        if (class_of.emplace(pack_key(conj * rho), b).second) todo.push_back(std::move(conj));
      }
    }
  }

  std::vector<int> hits(brute.size(), 0);
  for (const auto& c : classes) {
    const auto up = change_basis(sys, c.map, Basis::FundamentalWeight).matrix();
    const std::size_t b = class_of.at(pack_key(up * rho));
    ++hits[b];
    const auto cd = centralizer_data(sys, c.map);
    rep.classes.push_back({c.label, brute[b].size, rep.group_order / cd.order(),
                           generated_subgroup_order(sys, centralizer_generators(sys, c.map), cap)});
  }
  rep.bijective = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  return rep;
}

}  // namespace realweyl
