// spinekit command-line tool: generate family o-graphs, analyze o-graph and
// triangulation files, test poorness, compute the epsilon-invariant, evaluate
// truncated-tetrahedron volumes, and run the verification suite.
#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "spinekit/errors.hpp"
#include "spinekit/golden_ring.hpp"
#include "spinekit/invariant.hpp"
#include "spinekit/ograph.hpp"
#include "spinekit/report.hpp"
#include "spinekit/subpoly.hpp"
#include "spinekit/triangulation.hpp"
#include "spinekit/verify.hpp"
#include "spinekit/volume.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

int worker_count() {
  if (const char* env = std::getenv("SPINEKIT_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

spinekit::IdealTriangulation load_triangulation(const std::string& path) {
  const std::string text = spinekit::read_file(path);
  if (text.rfind("ograph", 0) == 0) {
    return spinekit::from_ograph(spinekit::parse_ograph(text));
  }
  return spinekit::parse_triangulation(text);
}

int cmd_generate(int s, const std::string& out_path) {
  spinekit::write_file(out_path, spinekit::serialize(spinekit::generate_gn(s)));
  return kExitOk;
}

int cmd_analyze(const std::string& path, bool dir_mode, const std::string& out_path) {
  std::vector<std::string> inputs;
  if (dir_mode) {
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (entry.is_regular_file()) inputs.push_back(entry.path().string());
    }
    std::sort(inputs.begin(), inputs.end());
  } else {
    inputs.push_back(path);
  }

  std::vector<std::string> outputs(inputs.size());
  std::vector<std::string> errors(inputs.size());
  std::atomic<size_t> next{0};
  const int workers = std::min<int>(worker_count(), static_cast<int>(inputs.size()));
  std::vector<std::thread> pool;
  for (int w = 0; w < std::max(1, workers); ++w) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < inputs.size(); i = next.fetch_add(1)) {
        try {
          outputs[i] = spinekit::format_report(spinekit::analyze_file(inputs[i]));
        } catch (const std::exception& e) {
          errors[i] = inputs[i] + ": " + e.what();
        }
      }
    });
  }
  for (auto& t : pool) t.join();

  std::string combined;
  bool failed = false;
  for (size_t i = 0; i < inputs.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << errors[i] << "\n";
      failed = true;
      continue;
    }
    if (i > 0) combined += "\n";
    combined += outputs[i];
  }
  std::cout << combined;
  if (!out_path.empty()) {
    spinekit::write_file(out_path, combined);
  }
  return failed ? kExitUsage : kExitOk;
}

int cmd_poor(const std::string& path) {
  const auto tri = load_triangulation(path);
  const auto classes = spinekit::edge_classes(tri);
  const auto family = spinekit::enumerate_simple(tri, classes, worker_count());
  const bool poor = family.members.size() == 2 && family.members.front().empty() &&
                    family.members.back().full();
  std::cout << "poor: " << (poor ? "true" : "false") << "\n";
  std::cout << "simple_subpolyhedra: " << family.members.size() << "\n";
  for (const auto& sel : family.members) {
    const auto inv = spinekit::sub_invariants(tri, classes, sel);
    std::cout << "subpoly: mask=" << sel.mask << " V=" << inv.true_vertices
              << " chi=" << inv.chi << "\n";
  }
  return kExitOk;
}

int cmd_epsilon(const std::string& path) {
  const auto tri = load_triangulation(path);
  const auto inv = spinekit::epsilon_invariant(tri);
  std::cout << "epsilon_exact: " << spinekit::to_string(inv.value) << "\n";
  std::cout << "epsilon_float: " << format_double(spinekit::to_real(inv.value)) << "\n";
  std::cout << "terms: " << inv.terms.size() << "\n";
  for (const auto& term : inv.terms) {
    std::cout << "term: mask=" << term.selection.mask << " V=" << term.invariants.true_vertices
              << " chi=" << term.invariants.chi
              << " weight=" << spinekit::to_string(term.weight) << "\n";
  }
  return kExitOk;
}

int cmd_volume_theta(double theta) {
  const auto v = spinekit::vol_regular_truncated(spinekit::Angle{theta});
  std::cout << "theta: " << format_double(theta) << "\n";
  std::cout << "vol_integral: " << format_double(v.via_integral) << "\n";
  std::cout << "vol_lobachevsky: " << format_double(v.via_lobachevsky) << "\n";
  std::cout << "discrepancy: " << format_double(v.discrepancy()) << "\n";
  std::cout << "agreed: " << (v.agreed ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_volume_family(const std::string& family, int n) {
  if (family == "mn") {
    std::cout << "family: mn\nn: " << n << "\n";
    std::cout << "volume: " << format_double(spinekit::vol_mn(n)) << "\n";
    return kExitOk;
  }
  const double total = spinekit::vol_wn(n);
  const auto per_tet =
      spinekit::vol_regular_truncated(spinekit::Angle{2.0 * std::numbers::pi / (3.0 * n)});
  std::cout << "family: wn\nn: " << n << "\n";
  std::cout << "per_tet_integral: " << format_double(per_tet.via_integral) << "\n";
  std::cout << "per_tet_lobachevsky: " << format_double(per_tet.via_lobachevsky) << "\n";
  std::cout << "volume: " << format_double(total) << "\n";
  return kExitOk;
}

int cmd_verify_paper(const std::string& fixture_dir) {
  spinekit::VerifyOptions options;
  options.fixture_dir = fixture_dir;
  const auto results = spinekit::run_verification(options);
  std::cout << spinekit::format_results(results);
  const bool ok = spinekit::all_passed(results);
  std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"special spines, poorness, epsilon-invariant, and volumes"};
  app.require_subcommand(1);

  int gen_s = 0;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "write the family o-graph G_{5+4s} to a file");
  generate->add_option("--s", gen_s, "family parameter, n = 5+4s")->required();
  generate->add_option("--out", gen_out, "output path")->required();

  std::string analyze_path;
  bool analyze_dir = false;
  std::string analyze_out;
  auto* analyze = app.add_subcommand("analyze", "full spine report for a file (or directory)");
  analyze->add_option("path", analyze_path, "o-graph or triangulation file")->required();
  analyze->add_flag("--dir", analyze_dir, "treat path as a directory of input files");
  analyze->add_option("--out", analyze_out, "also write the report(s) to this file");

  std::string poor_path;
  auto* poor = app.add_subcommand("poor", "poorness verdict and simple-subpolyhedron table");
  poor->add_option("path", poor_path, "o-graph or triangulation file")->required();

  std::string eps_path;
  auto* epsilon = app.add_subcommand("epsilon", "exact epsilon-invariant with the term table");
  epsilon->add_option("path", eps_path, "o-graph or triangulation file")->required();

  double vol_theta = -1.0;
  std::string vol_family;
  int vol_n = 0;
  auto* volume = app.add_subcommand("volume", "regular truncated tetrahedron volumes");
  auto* theta_opt = volume->add_option("--theta", vol_theta, "dihedral angle in radians");
  auto* family_opt = volume->add_option("--family", vol_family, "family: mn or wn")
                         ->check(CLI::IsMember({"mn", "wn"}));
  auto* n_opt = volume->add_option("--n", vol_n, "tetrahedron count");
  family_opt->needs(n_opt);
  theta_opt->excludes(family_opt);

  std::string fixture_dir;
  auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
  verify->add_option("--fixture-dir", fixture_dir,
                     "read g5.ograph/g9.ograph from this directory instead of the generator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) {
      if (gen_s < 0) {
        std::cerr << "generate: --s must be nonnegative\n";
        return kExitUsage;
      }
      return cmd_generate(gen_s, gen_out);
    }
    if (analyze->parsed()) return cmd_analyze(analyze_path, analyze_dir, analyze_out);
    if (poor->parsed()) return cmd_poor(poor_path);
    if (epsilon->parsed()) return cmd_epsilon(eps_path);
    if (volume->parsed()) {
      if (!vol_family.empty()) return cmd_volume_family(vol_family, vol_n);
      if (theta_opt->count() == 0) {
        std::cerr << "volume: provide --theta or --family with --n\n";
        return kExitUsage;
      }
      return cmd_volume_theta(vol_theta);
    }
    if (verify->parsed()) return cmd_verify_paper(fixture_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
