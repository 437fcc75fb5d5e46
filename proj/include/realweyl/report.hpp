#pragma once

// Report builders behind the CLI: each command produces a ReportEnvelope
// (named columns, rows of JSON cells, a footer) that renders as an aligned
// text table, JSON or CSV. Row order is fixed so output is byte-stable.

#include <json.hpp>

#include "realweyl/cremona.hpp"
#include "realweyl/involutions.hpp"
#include "realweyl/oracles.hpp"
#include "realweyl/torus_components.hpp"

namespace realweyl {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1.0.0";
inline constexpr std::size_t kMaxReportRank = 12;

struct ReportEnvelope {
  std::string command;
  std::string input_echo;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  Json footer = Json::object();
  std::string format_version = kFormatVersion;

  bool operator==(const ReportEnvelope& o) const {
    return command == o.command && input_echo == o.input_echo && columns == o.columns && rows == o.rows &&
           footer == o.footer && format_version == o.format_version;
  }
};

enum class Format { Text, Json, Csv };

inline Format parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw DomainError("unknown format '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// rendering

inline Json to_json(const ReportEnvelope& r) {
  Json j;
  j["format_version"] = r.format_version;
  j["command"] = r.command;
  j["input"] = r.input_echo;
  j["columns"] = r.columns;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json o = Json::object();
    for (std::size_t c = 0; c < r.columns.size(); ++c) o[r.columns[c]] = row.at(c);
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  j["footer"] = r.footer;
  return j;
}

inline ReportEnvelope from_json(const Json& j) {
  ReportEnvelope r;
  r.format_version = j.at("format_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.input_echo = j.at("input").get<std::string>();
  r.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& o : j.at("rows")) {
    std::vector<Json> row;
    for (const auto& c : r.columns) row.push_back(o.at(c));
    r.rows.push_back(std::move(row));
  }
  r.footer = j.at("footer");
  return r;
}

/// Plain-text form of one cell: integer arrays as (a,b,c), other arrays as {a, b}.
inline std::string cell_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    const bool numeric = !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_number(); });
    std::string s = numeric ? "(" : "{";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? (numeric ? "," : ", ") : "") + cell_text(v[k]);
    return s + (numeric ? ")" : "}");
  }
  return v.dump();
}

inline std::string render_text(const ReportEnvelope& r) {
  std::vector<std::size_t> width(r.columns.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < r.columns.size(); ++c) width[c] = r.columns[c].size();
  for (const auto& row : r.rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
      line.push_back(cell_text(row.at(c)));
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s;
    for (std::size_t c = 0; c < line.size(); ++c) {
      s += line[c];
      if (c + 1 < line.size()) s += std::string(width[c] - line[c].size() + 2, ' ');
    }
    return s + "\n";
  };
  std::string out = "# " + r.command + (r.input_echo.empty() ? "" : " " + r.input_echo) + "\n";
  out += emit(r.columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  out += emit(rule);
  for (const auto& line : cells) out += emit(line);
  if (!r.footer.empty()) {
    out += "\n";
    for (const auto& [k, v] : r.footer.items()) out += k + ": " + cell_text(v) + "\n";
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

inline std::string render_csv(const ReportEnvelope& r) {
  std::string out;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) out += (c ? "," : "") + csv_field(line[c]);
    out += "\n";
  };
  emit(r.columns);
  for (const auto& row : r.rows) {
    std::vector<std::string> line;
    for (const auto& v : row) line.push_back(cell_text(v));
    emit(line);
  }
  for (const auto& [k, v] : r.footer.items()) out += "# " + k + "," + csv_field(cell_text(v)) + "\n";
  return out;
}

inline std::string render(const ReportEnvelope& r, Format f) {
  switch (f) {
    case Format::Json: return to_json(r).dump(2) + "\n";
    case Format::Csv: return render_csv(r);
    case Format::Text: break;
  }
  return render_text(r);
}

// ---------------------------------------------------------------------------
// commands

inline ReportEnvelope make_envelope(std::string command, std::string input, std::vector<std::string> columns) {
  ReportEnvelope r;
  r.command = std::move(command);
  r.input_echo = std::move(input);
  r.columns = std::move(columns);
  return r;
}

inline RootSystemData load_system(std::string_view type) {
  auto diagram = parse_diagram(type);
  if (diagram.nodes().size() > kMaxReportRank)
    throw ResourceCapError("rank " + std::to_string(diagram.nodes().size()) + " exceeds the cap of " +
                           std::to_string(kMaxReportRank));
  return build_root_system(diagram);
}

/// Node subset as "{1,3}".
inline std::string subset_name(const RootSystemData& sys, NodeSet s) {
  std::string out = "{";
  for (int l : to_labels(sys, s)) out += (out.size() > 1 ? "," : "") + std::to_string(l);
  return out + "}";
}

/// "0" first, then w<i> by i, then raw F2 vectors.
inline std::tuple<int, int, std::string> weight_name_key(const std::string& n) {
  if (n == "0") return {0, 0, n};
  if (n.size() > 1 && n[0] == 'w') return {1, std::stoi(n.substr(1)), n};
  return {2, 0, n};
}

inline ReportEnvelope cmd_roots(std::string_view type) {
  const auto sys = load_system(type);
  auto r = make_envelope("roots", std::string(type), {"component", "type", "nodes", "positive_roots", "highest_root", "marks", "weyl_order"});
  std::size_t k = 0;
  for (const auto& [idx, t] : sys.diagram.components()) {
    Json nodes = Json::array();
    for (auto i : idx) nodes.push_back(sys.label_of(i));
    // Restrict the ambient data to this component.
    std::size_t count = 0;
    IntVec highest;
    for (const auto& a : sys.positive_roots) {
      bool inside = true;
      for (std::size_t i = 0; i < sys.rank; ++i)
        if (a[i] != 0 && std::find(idx.begin(), idx.end(), i) == idx.end()) inside = false;
      if (!inside) continue;
      ++count;
      if (highest.empty() || sys.height(a) > sys.height(highest)) highest = a;
    }
    Json h = Json::array(), marks = Json::array();
    for (auto i : idx) h.push_back(highest[i]);
    for (auto i : idx) marks.push_back(highest[i]);
    r.rows.push_back({static_cast<int>(++k), t.label(), nodes, count, h, marks, weyl_order(t)});
  }
  r.footer["rank"] = sys.rank;
  r.footer["positive_roots"] = sys.positive_roots.size();
  r.footer["weyl_order"] = weyl_order(sys);
  r.footer["index_P_over_Q"] = abs_determinant(sys.cartan);
  return r;
}

/// Per-class data shared by the involution and component reports.
struct ClassRow {
  const InvolutionClass* cls = nullptr;
  ComponentReport components;
  std::uint64_t centralizer_order = 0;
};

/// Display order: classes grouped with their -u partner (when -1 is in W);
/// inside a group by more components, then larger n2, then label; groups by
/// the rank of their first member's subset, then its label.
inline std::vector<ClassRow> ordered_class_rows(const RootSystemData& sys, const std::vector<InvolutionClass>& classes) {
  std::vector<ClassRow> rows;
  for (const auto& c : classes) rows.push_back({&c, orbit_count(sys, c.map), centralizer_data(sys, c.map).order()});
  auto within = [](const ClassRow& a, const ClassRow& b) {
    return std::tuple(-static_cast<long>(a.components.orbit_count()), -a.components.triple.n2, a.cls->label) <
           std::tuple(-static_cast<long>(b.components.orbit_count()), -b.components.triple.n2, b.cls->label);
  };
  std::vector<std::vector<std::size_t>> groups;
  std::vector<bool> used(classes.size(), false);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (used[c]) continue;
    std::vector<std::size_t> g{c};
    used[c] = true;
    if (auto p = classes[c].negative_partner; p && !used[*p]) {
      g.push_back(*p);
      used[*p] = true;
    }
    std::sort(g.begin(), g.end(), [&](auto a, auto b) { return within(rows[a], rows[b]); });
    groups.push_back(std::move(g));
  }
  auto key = [&](const std::vector<std::size_t>& g) {
    const auto& lead = classes[g.front()];
    return std::tuple(std::popcount(lead.representative), lead.label);
  };
  std::stable_sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  std::vector<ClassRow> out;
  for (const auto& g : groups)
    for (auto c : g) out.push_back(rows[c]);
  return out;
}

inline ReportEnvelope cmd_involutions(std::string_view type, bool verify = false) {
  const auto sys = load_system(type);
  const auto classes = classify_involutions(sys);
  auto r = make_envelope("involutions", std::string(type),
                   {"class", "representative", "subsets", "class_size", "centralizer_order", "negative_partner"});
  const std::uint64_t order = weyl_order(sys);
  std::uint64_t total = 0;
  Json pairs = Json::array();
  for (const auto& row : ordered_class_rows(sys, classes)) {
    const auto& c = *row.cls;
    const std::uint64_t size = order / row.centralizer_order;
    total += size;
    Json partner = c.negative_partner ? Json(classes[*c.negative_partner].label) : Json();
    r.rows.push_back({c.label, subset_name(sys, c.representative), c.subsets.size(), size, row.centralizer_order, partner});
  }
  for (const auto& row : r.rows) {
    if (row[5].is_null()) continue;
    const auto& a = row[0].get<std::string>();
    const auto& b = row[5].get<std::string>();
    bool dup = false;
    for (const auto& p : pairs) dup |= p[1] == a;
    if (!dup) pairs.push_back(Json::array({a, b}));
  }
  r.footer["classes"] = classes.size();
  r.footer["involutions"] = total;
  r.footer["contains_minus_one"] = contains_minus_one(sys);
  if (!pairs.empty()) r.footer["pairs"] = pairs;
  if (verify) {
    const auto rep = verify_involution_classes(sys);
    r.footer["brute_force_classes"] = rep.brute_force_classes;
    r.footer["brute_force_check"] = rep.ok() ? "pass" : "fail";
  }
  return r;
}

/// Names of the fixed weights (and 0) in each orbit of a component report.
inline std::vector<Json> orbit_weight_names(const RootSystemData& sys, const ComponentReport& rep) {
  std::vector<Json> names(rep.orbit_count(), Json::array());
  for (std::size_t o = 0; o < rep.orbit_count(); ++o)
    if (rep.orbits[o].front() == 0) names[o].push_back("0");
  for (const auto& [node, o] : rep.weight_orbit) names[o].push_back("w" + std::to_string(sys.label_of(node)));
  for (std::size_t o = 0; o < rep.orbit_count(); ++o)
    if (names[o].empty()) names[o].push_back(rep.representatives[o]);
  return names;
}

inline ReportEnvelope cmd_components(std::string_view type) {
  const auto sys = load_system(type);
  const auto classes = classify_involutions(sys);
  auto r = make_envelope("components", std::string(type),
                   {"class", "representative", "n1", "n2", "n3", "components", "representatives", "orbits"});
  std::size_t total = 0;
  for (const auto& row : ordered_class_rows(sys, classes)) {
    const auto& rep = row.components;
    total += rep.orbit_count();
    auto names = orbit_weight_names(sys, rep);
    std::vector<std::size_t> order(rep.orbit_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      return weight_name_key(rep.representatives[a]) < weight_name_key(rep.representatives[b]);
    });
    Json reps = Json::array(), orbits = Json::array();
    for (auto o : order) {
      reps.push_back(rep.representatives[o]);
      orbits.push_back(names[o]);
    }
    r.rows.push_back({row.cls->label, subset_name(sys, row.cls->representative), rep.triple.n1, rep.triple.n2,
                      rep.triple.n3, rep.orbit_count(), reps, orbits});
  }
  r.footer["classes"] = classes.size();
  r.footer["total_components"] = total;
  return r;
}

inline ReportEnvelope cmd_sign_orbits(int pairs) {
  const auto orbits = sign_orbits(pairs);
  auto r = make_envelope("sign-orbits", "--pairs " + std::to_string(pairs), {"orbit", "classes", "geiser_real"});
  std::size_t k = 0;
  for (const auto& o : orbits) {
    Json classes = Json::array();
    for (const auto& [mp, mm] : o) classes.push_back(Json::array({mp, mm}));
    const bool real = o.front().second % 2 == 0;
    for (const auto& c : o)
      if ((c.second % 2 == 0) != real) throw std::logic_error("Geiser reality is not constant on a sign orbit");
    r.rows.push_back({static_cast<int>(++k), classes, real});
  }
  r.footer["pairs"] = pairs;
  r.footer["real_points"] = kPoints - 2 * pairs;
  r.footer["orbits"] = orbits.size();
  return r;
}

inline std::string stabilizer_name(const StabilizerReport& s) {
  std::string name = "W(" + s.reflection_part.label() + ")";
  if (s.extension_order > 1) name += " x| Z/" + std::to_string(s.extension_order);
  return name;
}

/// weight_name "all" lists 0 and every fundamental weight.
inline ReportEnvelope cmd_stabilizer(std::string_view type, std::string_view weight_name) {
  const auto sys = load_system(type);
  require_irreducible(sys);
  auto r = make_envelope("stabilizer", std::string(type) + " " + std::string(weight_name),
                   {"weight", "alcove_point_2x", "reflection_part", "extension_order", "stabilizer"});
  std::vector<std::optional<std::size_t>> weights;
  if (detail::trim(weight_name) == "all") {
    weights.push_back(std::nullopt);
    for (std::size_t i = 0; i < sys.rank; ++i) weights.push_back(i);
  } else {
    weights.push_back(parse_weight_name(sys, weight_name));
  }
  for (const auto& w : weights) {
    const auto s = component_stabilizer(sys, w);
    Json point = Json::array();
    for (auto x : s.alcove_point) point.push_back(x);
    r.rows.push_back({w ? "w" + std::to_string(sys.label_of(*w)) : std::string("0"), point,
                      "W(" + s.reflection_part.label() + ")", s.extension_order, stabilizer_name(s)});
  }
  return r;
}

// ---------------------------------------------------------------------------
// self test

struct SelftestCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

inline std::vector<SelftestCheck> run_selftest() {
  std::vector<SelftestCheck> out;
  std::vector<std::string> types;
  for (int n = 1; n <= 8; ++n) types.push_back("A" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) types.push_back("D" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) types.push_back("E" + std::to_string(n));
  for (const auto& t : types) {
    const auto sys = build_root_system(t);
    const auto id = LatticeMap::identity(Basis::SimpleRoot, sys.rank);
    const auto a = orbit_count(sys, id).orbit_count();
    const auto b = orbits_P_mod_2P_diagram(sys).size();
    const auto c = alcove_orbits(sys).size();
    out.push_back({"three-way orbit count " + t, a == b && b == c,
                   std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(c)});
  }

  // Real sign patterns with p conjugate pairs against the components of the
  // classes 1, A1, A1^2, A1^3 of E7.
  const auto e7 = build_root_system("E7");
  const auto classes = classify_involutions(e7);
  const char* labels[] = {"1", "A1", "A1^2", "A1^3"};
  for (int p = 0; p <= 3; ++p) {
    std::size_t comps = 0;
    for (const auto& c : classes)
      if (c.label == labels[p]) comps = orbit_count(e7, c.map).orbit_count();
    const auto orbits = sign_orbits(p).size();
    const auto by_counts = sign_orbits_by_counts(p).size();
    out.push_back({"sign orbits vs components, " + std::to_string(p) + " pairs (" + labels[p] + ")",
                   comps == orbits && orbits == by_counts,
                   std::to_string(orbits) + "/" + std::to_string(by_counts) + "/" + std::to_string(comps)});
  }
  return out;
}

}  // namespace realweyl
