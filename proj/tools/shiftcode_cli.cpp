// shiftcode command-line tool.
//
// Exit codes: 0 success, 1 internal error, 2 usage or input error,
// 3 certification failure, 4 hypothesis violation, 5 failed checks.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "shiftcode/chi.hpp"
#include "shiftcode/coding.hpp"
#include "shiftcode/config.hpp"
#include "shiftcode/errors.hpp"
#include "shiftcode/export.hpp"
#include "shiftcode/oracle.hpp"
#include "shiftcode/puzzle_tree.hpp"
#include "shiftcode/render.hpp"

namespace sc = shiftcode;

namespace {

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kCertification = 3, kHypothesis = 4, kChecksFailed = 5 };

int exit_code(sc::ErrorKind kind) {
  switch (kind) {
    case sc::ErrorKind::kInvalidInput: return kUsage;
    case sc::ErrorKind::kHypothesisViolation: return kHypothesis;
    case sc::ErrorKind::kInconsistentTree: return kInternal;
    default: return kCertification;
  }
}

struct Options {
  std::string config;
  std::optional<int> depth;
  std::optional<int> level;
  std::string point;
  std::optional<int> critical;
  std::optional<int> preimage_of;
  std::optional<int> horizon;
  std::uint64_t seed = 1;
  int cases = 100;
  int d = 3;
  double bias = 0.5;
  std::string out;
  std::string color_by = "level";
  int size = 800;
  bool covers = false;
};

struct Loaded {
  sc::MapConfig config;
  sc::PuzzleTree tree;
};

Loaded load(const Options& o) {
  sc::MapConfig config = sc::load_map_config(o.config);
  const int depth = o.depth.value_or(config.depth.value_or(6));
  if (depth < 1) throw sc::Error(sc::ErrorKind::kInvalidInput, "depth must be at least 1");
  const sc::PolynomialMap f = config.map();
  sc::PuzzleTree tree = sc::build_tree(f, config.disk(f), depth, sc::build_policy(config));
  return {std::move(config), std::move(tree)};
}

void emit(const Options& o, const std::string& name, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(o.out);
  const auto path = std::filesystem::path(o.out) / name;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw sc::Error(sc::ErrorKind::kInvalidInput, "cannot write " + path.string());
  file << text;
  std::cout << "wrote " << path.string() << '\n';
}

int cmd_analyze(const Options& o) {
  const Loaded l = load(o);
  const auto& t = l.tree;
  const auto diag = sc::cantor_diagnostic(t);
  std::cout << "map: " << t.map().to_string() << "\n";
  std::cout << "disk: center " << sc::format_real(t.disk().center.re.mid()) << ','
            << sc::format_real(t.disk().center.im.mid()) << " radius "
            << sc::format_real(t.disk().radius.hi()) << "\n";
  const auto& r = t.restriction();
  std::cout << "hypothesis: " << (r.hypothesis_ok ? "ok" : "violated") << ", N = " << r.n_components
            << ", degrees";
  for (int b : r.branch_degrees) std::cout << ' ' << b;
  std::cout << ", d' = " << t.reduced_critical_count() << "\n";
  for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
  std::cout << "level  components  boxes  max_diameter  local_degree_histogram\n";
  for (int k = 0; k <= t.depth(); ++k) {
    std::map<int, int> histogram;
    for (const auto& n : t.graph().levels[k]) ++histogram[n.local_degree];
    char line[128];
    std::snprintf(line, sizeof line, "%5d  %10zu  %5zu  %12.6g ", k, t.graph().levels[k].size(),
                  t.box_count(k), diag.max_diameter[k]);
    std::cout << line;
    for (const auto& [deg, count] : histogram) std::cout << ' ' << deg << ':' << count;
    std::cout << "\n";
  }
  std::cout << "diameters strictly decreasing: " << (diag.strictly_decreasing ? "yes" : "no") << "\n";
  const auto structure = sc::check_structure(t.graph());
  for (const auto& v : structure.violations) std::cout << "structure: " << v << "\n";
  if (!o.out.empty()) emit(o, "tree.json", sc::tree_to_json(t, o.covers));
  return structure.ok() ? kOk : kChecksFailed;
}

int cmd_code(const Options& o) {
  const Loaded l = load(o);
  const auto s = sc::assign_symbols(l.tree.graph());
  emit(o, "coding.json", sc::coding_to_json(s, l.tree.graph()));
  return kOk;
}

int cmd_verify(const Options& o) {
  const Loaded l = load(o);
  const auto s = sc::assign_symbols(l.tree.graph());
  const int k = o.level.value_or(l.tree.depth());
  const auto report = sc::verify_semiconjugacy(s, l.tree.graph(), k);
  std::cout << report.passed_count() << '/' << report.checks.size() << " checks pass, " << report.cylinders
            << " cylinders\n";
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "  pass  " : "  FAIL  ") << c.name << "\n";
    for (const auto& e : c.counterexamples) std::cout << "        " << e << "\n";
  }
  if (!o.out.empty()) emit(o, "verify.json", sc::verification_to_json(report));
  return report.passed() ? kOk : kChecksFailed;
}

sc::Box parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw sc::Error(sc::ErrorKind::kInvalidInput, "--point expects RE,IM");
  return {sc::parse_decimal(text.substr(0, comma)), sc::parse_decimal(text.substr(comma + 1))};
}

int cmd_chi(const Options& o) {
  const Loaded l = load(o);
  const auto& f = l.tree.map();
  sc::ChiSeed seed;
  if (o.preimage_of) {
    if (o.point.empty()) throw sc::Error(sc::ErrorKind::kInvalidInput, "--preimage-of needs --point as a guess");
    const auto found = sc::preimage_seed(f, sc::critical_seed(f, *o.preimage_of), parse_point(o.point).mid());
    if (!found) throw sc::Error(sc::ErrorKind::kPrecisionExceeded, "no certified preimage near the guess");
    seed = *found;
  } else if (o.critical) {
    seed = sc::critical_seed(f, *o.critical);
  } else if (!o.point.empty()) {
    seed = sc::point_seed(parse_point(o.point));
  } else {
    throw sc::Error(sc::ErrorKind::kInvalidInput, "chi needs --point, --critical or --preimage-of");
  }
  const auto result = sc::chi(l.tree, seed, o.horizon.value_or(l.config.horizon));
  emit(o, "chi.json", sc::chi_to_json(result));
  return kOk;
}

int cmd_render(const Options& o) {
  const Loaded l = load(o);
  sc::RenderOptions r;
  r.level = o.level.value_or(1);
  r.color_by = o.color_by == "symbols" ? sc::ColorBy::kSymbols : sc::ColorBy::kLevel;
  r.size = o.size;
  const auto s = sc::assign_symbols(l.tree.graph());
  emit(o, "render.svg", sc::render_svg(l.tree, s, r));
  return kOk;
}

int cmd_oracle_test(const Options& o) {
  const int depth = o.depth.value_or(5);
  sc::SplitPolicy policy;
  policy.cut_probability = o.bias;
  int failed = 0;
  for (int i = 0; i < o.cases; ++i) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
    std::string problem;
    try {
      const auto tree = sc::generate(seed, o.d, depth, policy);
      const auto structure = sc::check_structure(tree);
      const auto s = sc::assign_symbols(tree);
      const auto assignment = sc::check_assignment(s, tree);
      if (!structure.ok()) problem = "structure: " + structure.violations.front();
      else if (!assignment.empty()) problem = "assignment: " + assignment.front();
      for (int k = 1; k <= depth && problem.empty(); ++k) {
        if (sc::fibers(s, tree, k).counts() != sc::brute_force_fibers(tree, s, k)) {
          problem = "fiber mismatch at level " + std::to_string(k);
        } else if (!sc::verify_semiconjugacy(s, tree, k).passed()) {
          problem = "verification failed at level " + std::to_string(k);
        }
      }
    } catch (const sc::Error& e) {
      problem = e.what();
    }
    if (!problem.empty()) {
      ++failed;
      std::cout << "case seed " << seed << ": " << problem << "\n";
    }
  }
  std::cout << "oracle-test: " << (o.cases - failed) << '/' << o.cases << " cases pass (d = " << o.d
            << ", depth = " << depth << ")\n";
  return failed == 0 ? kOk : kChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Component trees, symbolic coding and fiber counts for Cantor Julia sets"};
  app.require_subcommand(1);
  Options o;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "Map configuration (JSON)")->required();
    sub->add_option("--depth", o.depth, "Tree depth K")->check(CLI::Range(1, 64));
    sub->add_option("--out", o.out, "Output directory");
  };
  auto* analyze = app.add_subcommand("analyze", "Build the component tree and print diagnostics");
  add_config(analyze);
  analyze->add_flag("--covers", o.covers, "Include cell covers in tree.json");
  auto* code = app.add_subcommand("code", "Export symbol sets and fibers");
  add_config(code);
  auto* verify = app.add_subcommand("verify", "Check the semi-conjugacy at a level");
  add_config(verify);
  verify->add_option("--level", o.level, "Level k (default: depth)")->check(CLI::PositiveNumber);
  auto* chi = app.add_subcommand("chi", "Maximal local degree of iterates at a point");
  add_config(chi);
  chi->add_option("--point", o.point, "Point RE,IM as decimal strings");
  chi->add_option("--critical", o.critical, "Start at critical point I");
  chi->add_option("--preimage-of", o.preimage_of, "Certified preimage of critical point I near --point");
  chi->add_option("--horizon", o.horizon, "Orbit steps to walk")->check(CLI::NonNegativeNumber);
  auto* render = app.add_subcommand("render", "SVG of component outlines");
  add_config(render);
  render->add_option("--level", o.level, "Level to draw")->check(CLI::NonNegativeNumber);
  render->add_option("--color-by", o.color_by, "level or symbols")->check(CLI::IsMember({"level", "symbols"}));
  render->add_option("--size", o.size, "Picture size in pixels")->check(CLI::Range(16, 16384));
  auto* oracle = app.add_subcommand("oracle-test", "Compare fibers with the brute-force oracle");
  oracle->add_option("--seed", o.seed, "First seed");
  oracle->add_option("--cases", o.cases, "Number of random trees")->check(CLI::PositiveNumber);
  oracle->add_option("--d", o.d, "Degree")->check(CLI::Range(2, 64));
  oracle->add_option("--depth", o.depth, "Tree depth")->check(CLI::Range(1, 24));
  oracle->add_option("--bias", o.bias, "Cut probability for compositions")->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*code) return cmd_code(o);
    if (*verify) return cmd_verify(o);
    if (*chi) return cmd_chi(o);
    if (*render) return cmd_render(o);
    if (*oracle) return cmd_oracle_test(o);
  } catch (const sc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
