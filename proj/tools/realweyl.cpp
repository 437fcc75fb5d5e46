// realweyl: command-line front end for the report builders.
//
//   realweyl roots E7
//   realweyl involutions E7 [--verify]
//   realweyl components E7 --format json
//   realweyl sign-orbits --pairs 0
//   realweyl stabilizer E7 w6
//   realweyl --selftest
//
// exit codes: 0 ok, 1 selftest or verification failure, 2 usage,
// 3 domain error, 4 resource cap.

#include <CLI11.hpp>
#include <iostream>

#include "realweyl/report.hpp"

int main(int argc, char** argv) {
  using namespace realweyl;
  CLI::App app{"Involutions, real torus components and Cremona sign dynamics for ADE Weyl groups"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string format = "text";
  bool selftest = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--selftest", selftest, "Run the cross-module consistency checks");

  std::string type, weight = "all";
  bool verify = false;
  int pairs = 0;

  auto* roots = app.add_subcommand("roots", "Root counts, highest root, marks and |W|");
  roots->add_option("type", type, "Diagram, e.g. E7, A3+A1")->required();
  auto* invol = app.add_subcommand("involutions", "Conjugacy classes of involutions");
  invol->add_option("type", type)->required();
  invol->add_flag("--verify", verify, "Cross-check against a brute-force enumeration of W");
  auto* comps = app.add_subcommand("components", "Type triples and component counts per involution class");
  comps->add_option("type", type)->required();
  auto* signs = app.add_subcommand("sign-orbits", "Orbits of the Cremona action on sign patterns");
  signs->add_option("--pairs", pairs, "Number of complex conjugate point pairs")->required()->check(CLI::Range(0, 3));
  auto* stab = app.add_subcommand("stabilizer", "Stabilizer of the component of w/2");
  stab->add_option("type", type)->required();
  stab->add_option("weight", weight, "0, w<i> or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (selftest) {
      bool ok = true;
      for (const auto& c : run_selftest()) {
        std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << " [" << c.detail << "]\n";
        ok = ok && c.ok;
      }
      return ok ? 0 : 1;
    }
    ReportEnvelope r;
    if (*roots) r = cmd_roots(type);
    else if (*invol) r = cmd_involutions(type, verify);
    else if (*comps) r = cmd_components(type);
    else if (*signs) r = cmd_sign_orbits(pairs);
    else if (*stab) r = cmd_stabilizer(type, weight);
    else {
      std::cerr << app.help();
      return 2;
    }
    std::cout << render(r, parse_format(format));
    if (verify && r.footer.value("brute_force_check", "") != "pass") return 1;
    return 0;
  } catch (const ResourceCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
