#include <gtest/gtest.h>

#include <map>
#include <set>

#include "realweyl/involutions.hpp"

using namespace realweyl;

namespace {

using Key = std::vector<Int>;

// Independent oracle: every element of W as a matrix on Q, then involution
// classes by conjugation closure. Returns sorted class sizes.
std::vector<std::uint64_t> brute_class_sizes(const RootSystemData& sys) {
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < sys.rank; ++i) gens.push_back(simple_reflection(sys, i).matrix());
  std::map<Key, IntMatrix> elems;
  std::vector<IntMatrix> todo{IntMatrix::identity(sys.rank)};
  elems.emplace(todo.back().data(), todo.back());
  while (!todo.empty()) {
    const IntMatrix m = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      IntMatrix p = g * m;
      if (elems.emplace(p.data(), p).second) todo.push_back(p);
    }
  }
  std::set<Key> inv;
  for (const auto& [k, m] : elems)
    if ((m * m).is_identity()) inv.insert(k);
  std::set<Key> done;
  std::vector<std::uint64_t> sizes;
  for (const auto& k : inv) {
    if (done.count(k)) continue;
    std::vector<IntMatrix> stack{elems.at(k)};
    done.insert(k);
    std::uint64_t n = 0;
    while (!stack.empty()) {
      const IntMatrix m = stack.back();
      stack.pop_back();
      ++n;
      for (const auto& g : gens) {
        IntMatrix c = g * m * g;
        if (done.insert(c.data()).second) stack.push_back(c);
      }
    }
    sizes.push_back(n);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Class size from the stabilizer of w_I under conjugation, counted directly.
std::uint64_t orbit_size(const RootSystemData& sys, const IntMatrix& u) {
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < sys.rank; ++i) gens.push_back(simple_reflection(sys, i).matrix());
  std::set<Key> seen{u.data()};
  std::vector<IntMatrix> stack{u};
  while (!stack.empty()) {
    const IntMatrix m = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      IntMatrix c = g * m * g;
      if (seen.insert(c.data()).second) stack.push_back(c);
    }
  }
  return seen.size();
}

std::vector<std::string> labels(const std::vector<InvolutionClass>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.label);
  return out;
}

}  // namespace

TEST(Involutions, MinusOneConditionA2) {
  auto sys = build_root_system("A2");
  auto subs = minus_one_subsets(sys);
  ASSERT_EQ(subs.size(), 3u);
  EXPECT_EQ(subs[0], 0u);
  EXPECT_FALSE(satisfies_minus_one_condition(sys, from_labels(sys, {1, 2})));
  auto cs = classify_involutions(sys);
  EXPECT_EQ(labels(cs), (std::vector<std::string>{"1", "A1"}));
  EXPECT_EQ(cs[1].subsets.size(), 2u);
  EXPECT_FALSE(contains_minus_one(sys));
  EXPECT_FALSE(cs[1].negative_partner.has_value());
}

TEST(Involutions, MinusOneConditionShapes) {
  auto sys = build_root_system("E8");
  EXPECT_TRUE(satisfies_minus_one_condition(sys, full_set(sys)));
  EXPECT_TRUE(satisfies_minus_one_condition(sys, from_labels(sys, {2, 3, 4, 8})));     // D4
  EXPECT_FALSE(satisfies_minus_one_condition(sys, from_labels(sys, {2, 3, 4, 5, 8})));  // D5
  EXPECT_FALSE(satisfies_minus_one_condition(sys, from_labels(sys, {1, 2, 3, 4, 5, 8})));  // E6
  EXPECT_TRUE(satisfies_minus_one_condition(sys, from_labels(sys, {1, 2, 3, 4, 5, 6, 8})));  // E7
  for (NodeSet s : minus_one_subsets(sys))
    EXPECT_EQ(longest_element(sys, s).map.matrix() * longest_element(sys, s).map.matrix(), IntMatrix::identity(8));
}

TEST(Involutions, TauIsDiagramInvolution) {
  auto sys = build_root_system("E7");
  TauCache cache(sys);
  // tau on D4 {2,3,4,7} is trivial, on A3 {1,2,3} it swaps the ends.
  const NodeSet d4 = from_labels(sys, {2, 3, 4, 7});
  EXPECT_EQ(cache.apply(d4, from_labels(sys, {2, 4})), from_labels(sys, {2, 4}));
  const NodeSet a3 = from_labels(sys, {1, 2, 3});
  EXPECT_EQ(cache.apply(a3, from_labels(sys, {1})), from_labels(sys, {3}));
  EXPECT_TRUE(elementary_equivalent(sys, from_labels(sys, {1}), from_labels(sys, {2})));
  EXPECT_TRUE(elementary_equivalent(sys, from_labels(sys, {2}), from_labels(sys, {1})));
  EXPECT_FALSE(elementary_equivalent(sys, from_labels(sys, {1}), from_labels(sys, {5})));
}

TEST(Involutions, MatchBruteForceSmallTypes) {
  for (const char* t : {"A1", "A3", "A4", "D4", "D5", "A2+A1", "A1+A1"}) {
    auto sys = build_root_system(t);
    auto cs = classify_involutions(sys);
    std::vector<std::uint64_t> sizes;
    for (const auto& c : cs) sizes.push_back(orbit_size(sys, c.map.matrix()));
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, brute_class_sizes(sys)) << t;
  }
}

TEST(Involutions, D4HasSevenClasses) {
  auto sys = build_root_system("D4");
  auto cs = classify_involutions(sys);
  std::multiset<std::string> types;
  for (const auto& c : cs) types.insert(c.type.label());
  EXPECT_EQ(types, (std::multiset<std::string>{"1", "A1", "A1^2", "A1^2", "A1^2", "A1^3", "D4"}));
  EXPECT_TRUE(contains_minus_one(sys));
}

TEST(Involutions, E7ClassesAndPairs) {
  auto sys = build_root_system("E7");
  auto cs = classify_involutions(sys);
  ASSERT_EQ(cs.size(), 10u);
  std::set<std::set<std::string>> pairs;
  for (const auto& c : cs) {
    ASSERT_TRUE(c.negative_partner.has_value());
    EXPECT_EQ(cs[*c.negative_partner].negative_partner, std::optional<std::size_t>(&c - cs.data()));
    pairs.insert({c.label, cs[*c.negative_partner].label});
  }
  const std::set<std::set<std::string>> expected{
      {"1", "E7"}, {"A1", "D6"}, {"A1^2", "D4A1"}, {"A1^3", "A1^4"}, {"D4", "A1^3'"}};
  EXPECT_EQ(pairs, expected);

  // Named representatives land in the expected classes.
  auto label_of = [&](std::initializer_list<int> l) { return cs[*class_of_subset(cs, from_labels(sys, l))].label; };
  EXPECT_EQ(label_of({2, 4, 7}), "A1^3");
  EXPECT_EQ(label_of({4, 6, 7}), "A1^3'");
  EXPECT_EQ(label_of({2, 3, 4, 7}), "D4");
  EXPECT_EQ(label_of({1, 6}), "A1^2");
  EXPECT_EQ(label_of({1, 3}), "A1^2");
}

TEST(Involutions, E7MinusOneIsLongest) {
  auto sys = build_root_system("E7");
  EXPECT_TRUE(contains_minus_one(sys));
  EXPECT_FALSE(contains_minus_one(build_root_system("E6")));
  EXPECT_FALSE(contains_minus_one(build_root_system("D5")));
  EXPECT_TRUE(contains_minus_one(build_root_system("D6")));
}

TEST(Involutions, E6ClassCount) {
  auto sys = build_root_system("E6");
  auto cs = classify_involutions(sys);
  std::vector<std::string> got = labels(cs);
  std::sort(got.begin(), got.end());
  // Carter's A1^4 class has no parabolic A1^4; its Richardson representative is D4.
  EXPECT_EQ(got, (std::vector<std::string>{"1", "A1", "A1^2", "A1^3", "D4"}));
  std::map<std::string, std::uint64_t> sizes;
  for (const auto& c : cs) sizes[c.label] = orbit_size(sys, c.map.matrix());
  EXPECT_EQ(sizes, (std::map<std::string, std::uint64_t>{{"1", 1}, {"A1", 36}, {"A1^2", 270}, {"A1^3", 540}, {"D4", 45}}));
}
