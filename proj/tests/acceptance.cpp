// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include "realweyl/realweyl.hpp"

using namespace realweyl;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(REALWEYL_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string why;  // detail for the current criterion

bool check(bool cond, const std::string& msg) {
  if (!cond && why.empty()) why = msg;
  return cond;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> ade_up_to_rank8() {
  std::vector<std::string> out;
  for (int n = 1; n <= 8; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) out.push_back("D" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) out.push_back("E" + std::to_string(n));
  return out;
}

// 1. E7 involution classes and their pairing.
bool criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto run = run_cli("involutions E7 --format json");
  const double dt = seconds_since(t0);
  if (!check(run.status == 0, "CLI failed")) return false;
  const auto j = Json::parse(run.out);
  bool ok = check(j["rows"].size() == 10, "expected 10 classes");
  std::set<std::set<std::string>> pairs;
  for (const auto& row : j["rows"]) {
    if (!check(row["negative_partner"].is_string(), "class without -u partner")) return false;
    pairs.insert({row["class"].get<std::string>(), row["negative_partner"].get<std::string>()});
  }
  const std::set<std::set<std::string>> want{
      {"1", "E7"}, {"A1", "D6"}, {"A1^2", "D4A1"}, {"A1^3", "A1^4"}, {"D4", "A1^3'"}};
  ok = check(pairs == want, "pairs differ") && ok;
  ok = check(dt < 5.0, "too slow: " + std::to_string(dt) + " s") && ok;
  return ok;
}

// 2. Table of type triples, component counts and representatives for E7.
bool criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto run = run_cli("components E7 --format json");
  const double dt = seconds_since(t0);
  if (!check(run.status == 0, "CLI failed")) return false;
  const auto j = Json::parse(run.out);
  // (n1, n2, n3) -> (components, representative set as printed in the table)
  const std::map<std::array<int, 3>, std::pair<int, std::set<std::string>>> table{
      {{7, 0, 0}, {4, {"0", "w5", "w6", "w7"}}}, {{0, 7, 0}, {1, {"0"}}},
      {{5, 0, 1}, {3, {"0", "w3", "w4"}}},       {{0, 5, 1}, {1, {"0"}}},
      {{3, 0, 2}, {3, {"0", "w4", "w5"}}},       {{0, 3, 2}, {1, {"0"}}},
      {{1, 0, 3}, {2, {"0", "w6"}}},             {{0, 1, 3}, {1, {"0"}}},
      {{1, 2, 2}, {2, {"0", "w6"}}},             {{2, 1, 2}, {2, {"0", "w1"}}}};
  bool ok = check(j["rows"].size() == 10, "expected 10 rows");
  std::set<std::array<int, 3>> seen;
  for (const auto& row : j["rows"]) {
    const std::array<int, 3> t{row["n1"].get<int>(), row["n2"].get<int>(), row["n3"].get<int>()};
    seen.insert(t);
    auto it = table.find(t);
    if (!check(it != table.end(), "unexpected triple")) return false;
    ok = check(row["components"].get<int>() == it->second.first, "count differs for " + row["class"].get<std::string>()) && ok;
    // The printed representatives must form a transversal of the orbits.
    std::map<std::string, int> hits;
    std::size_t covered = 0;
    for (const auto& orbit : row["orbits"]) {
      int in_orbit = 0;
      for (const auto& name : orbit)
        if (it->second.second.count(name.get<std::string>())) ++in_orbit;
      covered += static_cast<std::size_t>(in_orbit);
      ok = check(in_orbit == 1, "representatives of " + row["class"].get<std::string>() + " are not a transversal") && ok;
    }
    ok = check(covered == it->second.second.size(), "representative outside the fixed weights") && ok;
  }
  ok = check(seen.size() == 10, "triples not distinct") && ok;
  ok = check(j["footer"]["total_components"] == 20, "total is not 20") && ok;
  ok = check(dt < 10.0, "too slow") && ok;
  return ok;
}

// 3. A_n: orbit counts of W on P/2P by three methods, and representatives.
bool criterion3() {
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    const auto sys = build_root_system("A" + std::to_string(n));
    const std::size_t want = n % 2 == 0 ? n / 2 + 1 : (n + 1) / 2 + 1;
    const auto rep = orbit_count(sys, LatticeMap::identity(Basis::SimpleRoot, sys.rank));
    ok = check(rep.orbit_count() == want, "component-group count A" + std::to_string(n)) && ok;
    ok = check(orbits_P_mod_2P_diagram(sys).size() == want, "diagram count A" + std::to_string(n)) && ok;
    ok = check(alcove_orbits(sys).size() == want, "alcove count A" + std::to_string(n)) && ok;
    std::set<std::string> names(rep.representatives.begin(), rep.representatives.end()), expect{"0"};
    for (std::size_t i = 1; i < want; ++i) expect.insert("w" + std::to_string(i));
    ok = check(names == expect, "representatives A" + std::to_string(n)) && ok;
  }
  return ok;
}

// 4. Sign orbits for 0..3 conjugate pairs.
bool criterion4() {
  using Orbits = std::set<std::set<SignClass>>;
  auto as_set = [](const std::vector<std::vector<SignClass>>& v) {
    Orbits o;
    for (const auto& x : v) o.insert(std::set<SignClass>(x.begin(), x.end()));
    return o;
  };
  const std::vector<Orbits> want{
      {{{7, 0}}, {{6, 1}, {2, 5}}, {{5, 2}, {3, 4}, {1, 6}}, {{4, 3}, {0, 7}}},
      {{{5, 0}}, {{4, 1}, {2, 3}, {0, 5}}, {{3, 2}, {1, 4}}},
      {{{3, 0}}, {{2, 1}, {0, 3}}, {{1, 2}}},
      {{{1, 0}}, {{0, 1}}}};
  bool ok = true;
  for (int p = 0; p <= 3; ++p) {
    ok = check(as_set(sign_orbits(p)) == want[static_cast<std::size_t>(p)], "orbits for " + std::to_string(p) + " pairs") && ok;
    ok = check(as_set(sign_orbits_by_counts(p)) == want[static_cast<std::size_t>(p)], "count-level orbits") && ok;
  }
  return ok;
}

// 5. Stabilizers of the components of w/2 for w in {0, w6, w5, w7}.
bool criterion5() {
  const auto sys = build_root_system("E7");
  struct Row {
    std::optional<int> label;
    std::string type;
    std::size_t ext;
  };
  bool ok = true;
  for (const Row& r : {Row{std::nullopt, "E7", 1}, Row{6, "E6", 2}, Row{5, "D6A1", 1}, Row{7, "A7", 2}}) {
    std::optional<std::size_t> w;
    if (r.label) w = sys.index_of(*r.label);
    const auto s = component_stabilizer(sys, w);
    const std::string name = r.label ? "w" + std::to_string(*r.label) : "0";
    ok = check(s.reflection_part.label() == r.type, "reflection part at " + name) && ok;
    ok = check(s.extension_order == r.ext, "extension order at " + name) && ok;
  }
  return ok;
}

// 6. Brute-force enumeration of W against the classification and centralizers.
bool criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (const char* t : {"A2", "A3", "A4", "D4", "D5", "E6"}) {
    const auto rep = verify_involution_classes(build_root_system(t));
    ok = check(rep.ok(), std::string("oracle mismatch for ") + t) && ok;
  }
  const double dt = seconds_since(t0);
  ok = check(dt < 60.0, "too slow") && ok;
  return ok;
}

// 7. Lattice identities in Lambda_{1,7}.
bool criterion7() {
  const auto lat = build_del_pezzo_lattice(7);
  const auto roots = del_pezzo_roots(lat);
  bool ok = check(roots.size() == 126, "root count");
  ok = check(positive_roots_e7_lattice().size() == 63, "positive root count") && ok;
  ok = check(build_root_system("E7").positive_roots.size() == 63, "E7 positive roots") && ok;
  const auto ex = exceptional_elements(lat);
  ok = check(ex.size() == 56, "exceptional count") && ok;
  const auto g = geiser_map(lat);
  std::set<IntVec> elems;
  for (const auto& e : ex) elems.insert(e.vector);
  std::set<std::set<IntVec>> pairs;
  for (const auto& e : ex) {
    const IntVec img = g(e.vector);
    ok = check(elems.count(img) && img != e.vector, "Geiser image of an exceptional element") && ok;
    pairs.insert({e.vector, img});
  }
  ok = check(pairs.size() == 28, "Geiser pairs") && ok;
  for (const auto& a : roots) ok = check(g(a) == -a, "Geiser is not -1 on a root") && ok;
  ok = check(g(lat.k) == lat.k, "Geiser moves k") && ok;
  return ok;
}

// 8. Property suites.
bool criterion8() {
  bool ok = true;
  for (const auto& t : ade_up_to_rank8()) {
    const auto sys = build_root_system(t);
    const bool minus_one = contains_minus_one(sys);
    for (const auto& c : classify_involutions(sys)) {
      const auto tr = type_triple(sys, c.map);
      ok = check(tr.n1 + tr.n2 + 2 * tr.n3 == static_cast<int>(sys.rank), "triple sum " + t + " " + c.label) && ok;
      if (minus_one) {
        const auto neg = type_triple(sys, -c.map);
        ok = check(neg.n1 == tr.n2 && neg.n2 == tr.n1 && neg.n3 == tr.n3, "transposition " + t + " " + c.label) && ok;
      }
    }
  }
  std::vector<Triple> triples;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k) triples.push_back({i, j, k});
  for (int p = 0; p <= 3; ++p)
    for (unsigned mask = 0; mask < 128; ++mask) {
      std::array<int, kPoints> s{};
      for (int i = 0; i < kPoints; ++i) s[i] = (mask >> i & 1u) ? -1 : 1;
      const SignConfiguration c(s, standard_pairs(p));
      for (const auto& t : triples)
        if (is_admissible(c, t)) ok = check(cremona_sign_step(cremona_sign_step(c, t), t) == c, "step not involutive") && ok;
    }
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> num(1, 50), den(1, 23), sgn(0, 1);
  int samples = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    PointTuple t;
    std::array<int, kPoints> s{};
    for (int i = 0; i < kPoints; ++i) {
      t[i] = BigRational(num(rng) * (sgn(rng) ? 1 : -1), den(rng));
      s[i] = t[i] > 0 ? 1 : -1;
    }
    const Triple tr = triples[static_cast<std::size_t>(trial) % triples.size()];
    const auto img = cremona_coordinates(t, tr);
    const auto want = cremona_sign_step(SignConfiguration(s, {}), tr);
    for (int i = 0; i < kPoints; ++i) {
      ok = check((img.approx[i] > 0 ? 1 : -1) == want.signs()[i], "sign dynamics") && ok;
      if (img.exact) ok = check(((*img.exact)[i] > 0 ? 1 : -1) == want.signs()[i], "exact sign dynamics") && ok;
    }
    ++samples;
  }
  ok = check(samples >= 1000, "too few samples") && ok;
  return ok;
}

// 9. Byte-stable CLI output and the self test.
bool criterion9() {
  std::ifstream in(std::string(REALWEYL_GOLDEN_DIR) + "/commands.txt");
  std::string line;
  bool ok = true;
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::string args = line.substr(line.find(' ') + 1);
    const auto a = run_cli(args), b = run_cli(args);
    ok = check(a.status == 0 && a.out == b.out && !a.out.empty(), "nondeterministic: " + args) && ok;
    ++n;
  }
  ok = check(n > 0, "no golden commands") && ok;
  const auto self = run_cli("--selftest");
  ok = check(self.status == 0 && self.out.find("FAIL") == std::string::npos, "selftest failed") && ok;
  return ok;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"1 E7 involution classes and pairs", criterion1},
      {"2 E7 component table, total 20", criterion2},
      {"3 A_n orbit counts, three methods", criterion3},
      {"4 sign orbits for 0..3 pairs", criterion4},
      {"5 E7 component stabilizers", criterion5},
      {"6 brute-force class and centralizer oracles", criterion6},
      {"7 lattice identities in Lambda_{1,7}", criterion7},
      {"8 property suites", criterion8},
      {"9 CLI determinism and selftest", criterion9},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    why.clear();
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(t0));
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << timing << ")" << (ok ? "" : " - " + why) << "\n";
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
