// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "shiftcode/chi.hpp"
#include "shiftcode/coding.hpp"
#include "shiftcode/errors.hpp"
#include "shiftcode/export.hpp"
#include "shiftcode/oracle.hpp"
#include "shiftcode/parameter_search.hpp"
#include "shiftcode/puzzle_tree.hpp"

namespace sc = shiftcode;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.ok) ++failures;
  std::printf("%s %d %s (%.1fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.detail.empty() ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
}

sc::PolynomialMap real_map(const std::vector<std::string>& leading_first) {
  std::vector<sc::DecimalComplex> c;
  for (const auto& a : leading_first) c.push_back({a, "0"});
  return sc::PolynomialMap::from_decimal(std::move(c));
}

std::int64_t ipow(int base, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::string at(int k, std::size_t i) { return "level " + std::to_string(k) + " component " + std::to_string(i); }

// Every word of length k, in lexicographic order.
void for_each_word(int d, int k, const std::function<void(const sc::CylinderWord&)>& visit) {
  sc::CylinderWord w(std::vector<std::uint8_t>(k, 0));
  while (true) {
    visit(w);
    int i = k - 1;
    while (i >= 0 && w.symbols[i] == d - 1) w.symbols[i--] = 0;
    if (i < 0) return;
    ++w.symbols[i];
  }
}

// Exhaustive nesting and equivariance of the coding map over all words of
// length 1..k.
void check_coding_map(Outcome& o, const sc::ComponentGraph& g, const sc::SymbolAssignment& s, int k,
                      const char* name) {
  const sc::CylinderMap c(s, g);
  for (int len = 1; len <= k && o.ok; ++len) {
    for_each_word(g.degree, len, [&](const sc::CylinderWord& w) {
      if (!o.ok) return;
      const int cw = c.component(w);
      const sc::Node& n = g.levels[len][cw];
      o.require(n.image == c.component(w.shifted()),
                std::string(name) + ": image(c(" + w.to_string(g.degree) + ")) != c(sigma w)");
      o.require(n.container == c.component(w.prefix(len - 1)),
                std::string(name) + ": container(c(" + w.to_string(g.degree) + ")) != c(prefix)");
    });
  }
}

void check_conservation(Outcome& o, const sc::ComponentGraph& g, const char* name) {
  for (int k = 1; k <= g.depth(); ++k) {
    std::int64_t total = 0;
    for (const auto& n : g.levels[k]) total += n.cumulative_degree;
    o.require(total == ipow(g.degree, k), std::string(name) + ": sum of cumulative degrees at level " +
                                              std::to_string(k) + " is " + std::to_string(total));
    std::vector<int> over(g.levels[k - 1].size(), 0);
    for (const auto& n : g.levels[k]) over[n.image] += n.local_degree;
    for (std::size_t v = 0; v < over.size(); ++v) {
      o.require(over[v] == g.degree, std::string(name) + ": local degrees over " + at(k - 1, v) + " sum to " +
                                         std::to_string(over[v]));
    }
  }
}

const sc::PuzzleTree& quadratic() {
  static const sc::PuzzleTree t = build_tree(real_map({"1", "0", "-6"}), sc::DomainDisk::centered(0, 0, 4), 10);
  return t;
}

const sc::PreperiodicCubic& cubic_parameters() {
  static const sc::PreperiodicCubic p = sc::find_preperiodic_cubic(2.0, 11.0);
  return p;
}

const sc::PuzzleTree& cubic() {
  static const sc::PuzzleTree t = build_tree(cubic_parameters().map, sc::DomainDisk::centered(0, 0, 20), 8);
  return t;
}

Outcome quadratic_instance() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const sc::PuzzleTree& t = quadratic();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto& g = t.graph();
  const auto& r = t.restriction();
  o.require(r.hypothesis_ok && r.n_components == 2, "restriction is not N = 2");
  o.require(r.branch_degrees == std::vector<int>({1, 1}), "branch degrees are not (1,1)");
  for (int k = 0; k <= 10; ++k) {
    o.require(g.size(k) == (std::size_t{1} << k), at(k, g.size(k)) + " components, expected 2^k");
    for (const auto& n : g.levels[k]) {
      o.require(n.local_degree == 1 && n.cumulative_degree == 1, "degree other than 1 at level " + std::to_string(k));
    }
  }
  const auto s = sc::assign_symbols(g);
  for (auto n : sc::fibers(s, g, 10).counts()) o.require(n == 1, "depth-10 fiber is not a singleton");
  const auto v = sc::verify_semiconjugacy(s, g, 8);
  o.require(v.passed() && v.checks.size() == 5, "verification at k = 8 failed");
  o.require(v.cylinders == 256, "expected 256 cylinders at k = 8");
  const auto diag = sc::cantor_diagnostic(t);
  o.require(diag.strictly_decreasing, "diameters not strictly decreasing");
  o.require(secs < 60.0, "build took longer than 60 s");
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "1..1024 components, %d/5 checks, %zu cylinders, max diameter %.3g at level 10",
                  v.passed_count(), v.cylinders, diag.max_diameter.back());
    o.detail = buf;
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int cases = 0;
  for (std::uint64_t seed = 1; seed <= 1000 && o.ok; ++seed) {
    const int d = 2 + static_cast<int>(seed % 3);
    const int depth = 1 + static_cast<int>((seed / 3) % 6);
    const std::string tag = "seed " + std::to_string(seed);
    const sc::AbstractTree tree = sc::generate(seed, d, depth);
    const auto structure = sc::check_structure(tree);
    o.require(structure.ok(), tag + ": " + (structure.ok() ? "" : structure.violations.front()));
    const auto s = sc::assign_symbols(tree);
    o.require(sc::check_assignment(s, tree).empty(), tag + ": assignment is not a partition");
    for (int k = 1; k <= depth && o.ok; ++k) {
      o.require(sc::fibers(s, tree, k).counts() == sc::brute_force_fibers(tree, s, k),
                tag + ": fibers differ from brute force at k = " + std::to_string(k));
      o.require(sc::verify_semiconjugacy(s, tree, k).passed(), tag + ": verification fails at k = " + std::to_string(k));
    }
    if (o.ok) check_coding_map(o, tree, s, depth, tag.c_str());
    ++cases;
  }
  if (o.ok) o.detail = std::to_string(cases) + " cases, 0 failures";
  return o;
}

Outcome critical_chain_cubic() {
  Outcome o;
  const auto& p = cubic_parameters();
  o.require(p.converged && p.certified, "parameter search did not certify a preperiodic cubic");
  const sc::PuzzleTree& t = cubic();
  const auto& f = t.map();
  const auto& r = t.restriction();
  auto degrees = r.branch_degrees;
  std::sort(degrees.begin(), degrees.end());
  o.require(r.hypothesis_ok && r.n_components == 2 && degrees == std::vector<int>({1, 2}),
            "restriction is not N = 2 with degrees {2,1}");
  o.require(t.reduced_critical_count() == 1, "d' != 1");

  const std::vector<int> domain = t.domain_critical_points();
  o.require(domain.size() == 1, "expected one critical point in U'");
  if (!o.ok) return o;
  const int c1 = domain.front();
  const int horizon = 30;

  const auto chi_c1 = sc::chi(t, sc::critical_seed(f, c1), horizon);
  const sc::Box image = f.eval(f.critical_points()[c1].enclosure);
  const auto chi_image = sc::chi(t, sc::point_seed(image), horizon);
  o.require(chi_c1.value == 2 && chi_c1.status == sc::ChiStatus::kCertified, "chi(c1) is not a certified 2");
  o.require(chi_image.status == sc::ChiStatus::kCertified &&
                chi_c1.value == (f.critical_points()[c1].multiplicity + 1) * chi_image.value,
            "chi(c1) != deg(f, c1) * chi(f(c1))");
  o.require(chi_c1.bound == 2, "2^{d'} != 2");

  // Fiber over the component chain of c1, and the chain is critical.
  const auto s = sc::assign_symbols(t.graph());
  const auto chain = sc::locate(t, f.critical_points()[c1].enclosure, t.depth());
  std::vector<std::int64_t> chain_fibers;
  for (int k = 1; k <= t.depth(); ++k) {
    const auto counts = sc::fibers(s, t.graph(), k).counts();
    chain_fibers.push_back(counts[chain[k]]);
    const auto& crit = t.piece(k, chain[k]).critical_points;
    o.require(std::find(crit.begin(), crit.end(), c1) != crit.end(),
              "c1 chain component at level " + std::to_string(k) + " not flagged critical");
  }
  o.require(std::all_of(chain_fibers.begin(), chain_fibers.end(), [](std::int64_t n) { return n == 2; }),
            "fiber over the c1 chain does not stabilize at 2");

  // Non-precritical components: no critical point on W, f(W), ..., f^{k-1}(W).
  const auto& g = t.graph();
  std::size_t sampled = 0;
  for (int k = 1; k <= t.depth(); ++k) {
    const auto counts = sc::fibers(s, g, k).counts();
    for (std::size_t i = 0; i < g.size(k); ++i) {
      bool precritical = false;
      int idx = static_cast<int>(i);
      for (int level = k; level >= 1; --level) {
        precritical = precritical || !t.piece(level, idx).critical_points.empty();
        idx = g.levels[level][idx].image;
      }
      if (precritical) continue;
      ++sampled;
      o.require(counts[i] == 1, "fiber over non-precritical " + at(k, i) + " is " + std::to_string(counts[i]));
    }
  }
  o.require(sampled > 0, "no non-precritical components sampled");

  // chi at sampled points of K: the certified preimage of c1, and the
  // repelling fixed points.
  const auto pre = sc::preimage_seed(f, sc::critical_seed(f, c1), {2.93, 0.0});
  o.require(pre.has_value(), "no certified preimage of c1");
  std::vector<sc::ChiResult> samples = {chi_c1, chi_image};
  if (pre) samples.push_back(sc::chi(t, *pre, horizon));
  // Fixed points -4, 1 and 3 never meet c1: their point fibers are 1.
  for (double x : {-4.0, 1.0, 3.0}) {
    samples.push_back(sc::chi(t, sc::point_seed(sc::Box::point(x, 0.0)), horizon));
    o.require(samples.back().value == 1 && samples.back().status == sc::ChiStatus::kCertified,
              "chi at the fixed point " + sc::format_real(x) + " is not a certified 1");
  }
  for (const auto& c : samples) o.require(c.value <= c.bound && c.bound == 2, "chi exceeds 2^{d'}");
  if (pre) o.require(samples[2].value == 2 && samples[2].status == sc::ChiStatus::kCertified,
                     "chi of the preimage of c1 is not a certified 2");

  if (o.ok) {
    o.detail = "b = " + p.b_decimal + " after " + std::to_string(p.newton_steps) +
               " Newton steps, chi(c1) = 2 certified, chain fibers 2 through level " + std::to_string(t.depth()) +
               ", " + std::to_string(sampled) + " non-precritical components and 3 fixed points with fiber 1";
  }
  return o;
}

Outcome conservation() {
  Outcome o;
  check_conservation(o, quadratic().graph(), "quadratic");
  check_conservation(o, cubic().graph(), "cubic");
  for (std::uint64_t seed = 1; seed <= 200 && o.ok; ++seed) {
    check_conservation(o, sc::generate(seed, 2 + static_cast<int>(seed % 3), 5), "oracle tree");
  }
  if (o.ok) o.detail = "quadratic levels 1..10, cubic levels 1..8, 200 abstract trees";
  return o;
}

Outcome semiconjugacy() {
  Outcome o;
  const auto& q = quadratic().graph();
  const auto& c = cubic().graph();
  check_coding_map(o, q, sc::assign_symbols(q), 8, "quadratic");
  check_coding_map(o, c, sc::assign_symbols(c), 8, "cubic");
  for (const auto* g : {&q, &c}) {
    for (int k = 1; k <= 8; ++k) {
      const auto v = sc::verify_semiconjugacy(sc::assign_symbols(*g), *g, k);
      o.require(v.passed(), "verification fails at k = " + std::to_string(k));
    }
  }
  if (o.ok) o.detail = "all 2^k and 3^k words, k <= 8";
  return o;
}

Outcome mutation_sensitivity() {
  Outcome o;
  std::string example;
  auto mutate_and_check = [&](const sc::ComponentGraph& g, int level, int index, const char* name) {
    sc::SymbolAssignment s = sc::assign_symbols(g);
    const auto inside = s.symbols(level, index);
    int outside = 0;
    while (sc::has_symbol(s.at(level, index), outside)) ++outside;
    s.replace_symbol(level, index, inside.front(), outside);
    const auto v = sc::verify_semiconjugacy(s, g, g.depth());
    std::string first;
    for (const auto& check : v.checks) {
      if (!check.passed && first.empty() && !check.counterexamples.empty()) first = check.counterexamples.front();
    }
    o.require(!v.passed() && !first.empty(), std::string(name) + ": mutation went undetected");
    if (example.empty()) example = first;
  };
  mutate_and_check(quadratic().graph(), 5, 7, "quadratic");
  mutate_and_check(cubic().graph(), 3, 2, "cubic");
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto g = sc::generate(seed, 2 + static_cast<int>(seed % 3), 4);
    const int level = 1 + static_cast<int>(seed % 4);
    mutate_and_check(g, level, static_cast<int>(seed % g.size(level)), "oracle tree");
  }
  if (o.ok) o.detail = "102 mutations detected, e.g. " + example;
  return o;
}

}  // namespace

int main() {
  report(1, "quadratic z^2-6 on D(0,4), K = 10", quadratic_instance);
  report(2, "oracle equivalence over 1000 seeded trees", oracle_equivalence);
  report(3, "critical-chain cubic", critical_chain_cubic);
  report(4, "degree conservation", conservation);
  report(5, "finite-depth semi-conjugacy, k <= 8", semiconjugacy);
  report(6, "mutation sensitivity", mutation_sensitivity);
  std::printf("%d/6 criteria pass\n", 6 - failures);
  return failures == 0 ? 0 : 1;
}
