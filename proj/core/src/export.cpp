#include "shiftcode/export.hpp"

#include <cstdio>

#include <json.hpp>

namespace shiftcode {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kPrecision = 17;

ojson box_json(const Box& b) {
  return ojson::array({format_real(b.re.lo()), format_real(b.im.lo()), format_real(b.re.hi()),
                       format_real(b.im.hi())});
}

ojson restriction_json(const RestrictionReport& r) {
  ojson critical = ojson::array();
  for (const auto& c : r.critical) {
    critical.push_back({{"index", c.index},
                        {"status", to_string(c.status)},
                        {"escape_step", c.escape_step},
                        {"periodic", c.periodic},
                        {"never_recurs", c.non_periodic_certified}});
  }
  return {{"hypothesis_ok", r.hypothesis_ok},
          {"n_components", r.n_components},
          {"branch_degrees", r.branch_degrees},
          {"compactly_contained", r.compactly_contained},
          {"boundary_contact", r.boundary_contact},
          {"periodic_critical", r.periodic_critical},
          {"critical_points", critical},
          {"failures", r.failures},
          {"warnings", r.warnings}};
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kPrecision, x);
  return buf;
}

std::string tree_to_json(const PuzzleTree& tree, bool include_covers) {
  const auto& g = tree.graph();
  ojson levels = ojson::array();
  for (int k = 0; k <= tree.depth(); ++k) {
    ojson level = ojson::array();
    for (int i = 0; i < static_cast<int>(g.levels[k].size()); ++i) {
      const Node& n = g.levels[k][i];
      const Piece& p = tree.piece(k, i);
      ojson entry = {{"id", i},
                     {"level", k},
                     {"container", n.container},
                     {"image", n.image},
                     {"local_degree", n.local_degree},
                     {"cumulative_degree", n.cumulative_degree},
                     {"diameter", format_real(p.diameter_bound)},
                     {"bbox", box_json(p.bbox)}};
      if (!p.critical_points.empty()) entry["critical_points"] = p.critical_points;
      if (include_covers) {
        ojson cells = ojson::array();
        for (const Cell& c : p.cover.cells()) cells.push_back(ojson::array({c.i, c.j}));
        entry["cover"] = {{"resolution", p.cover.resolution()}, {"cells", cells}};
      }
      level.push_back(std::move(entry));
    }
    levels.push_back(std::move(level));
  }

  const auto& f = tree.map();
  ojson coefficients = ojson::array();
  for (const auto& c : f.decimal_coefficients()) coefficients.push_back(ojson::array({c.re, c.im}));
  ojson critical = ojson::array();
  for (const auto& c : f.critical_points()) {
    critical.push_back({{"enclosure", box_json(c.enclosure)},
                        {"multiplicity", c.multiplicity},
                        {"exact", c.exact}});
  }
  ojson counts = ojson::array(), boxes = ojson::array();
  for (int k = 0; k <= tree.depth(); ++k) {
    counts.push_back(g.levels[k].size());
    boxes.push_back(tree.box_count(k));
  }
  const Frame& fr = tree.frame();
  ojson meta = {{"precision", kPrecision},
                {"degree", g.degree},
                {"depth", tree.depth()},
                {"coefficients", coefficients},
                {"disk_center", ojson::array({format_real(tree.disk().center.re.mid()),
                                              format_real(tree.disk().center.im.mid())})},
                {"disk_radius", format_real(tree.disk().radius.hi())},
                {"frame", ojson::array({format_real(fr.re_lo), format_real(fr.im_lo), format_real(fr.side)})},
                {"critical_points", critical},
                {"component_counts", counts},
                {"box_counts", boxes}};
  if (tree.depth() >= 1) meta["restriction"] = restriction_json(tree.restriction());
  ojson out = {{"levels", levels}, {"meta", meta}};
  return out.dump(2) + "\n";
}

std::string coding_to_json(const SymbolAssignment& s, const ComponentGraph& graph, std::size_t max_words) {
  ojson levels = ojson::array();
  const int depth = std::min(s.depth(), graph.depth());
  for (int k = 0; k <= depth; ++k) {
    const FiberTable table = fibers(s, graph, k);
    ojson level = ojson::object();
    for (int w = 0; w < static_cast<int>(graph.levels[k].size()); ++w) {
      ojson words = ojson::array();
      const auto& list = table.words[w];
      for (std::size_t i = 0; i < list.size() && i < max_words; ++i) {
        words.push_back(list[i].to_string(graph.degree));
      }
      ojson entry = {{"symbols", s.symbols(k, w)},
                     {"fiber_count", list.size()},
                     {"fiber_words", words}};
      if (list.size() > max_words) entry["fiber_words_truncated"] = true;
      level[std::to_string(w)] = std::move(entry);
    }
    levels.push_back(std::move(level));
  }
  ojson out = {{"degree", graph.degree}, {"depth", depth}, {"levels", levels}};
  return out.dump(2) + "\n";
}

std::string verification_to_json(const VerificationReport& report) {
  ojson checks = ojson::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"failures", c.failures},
                      {"counterexamples", c.counterexamples}});
  }
  ojson out = {{"level", report.level},
               {"cylinders", report.cylinders},
               {"passed", report.passed_count()},
               {"total", report.checks.size()},
               {"ok", report.passed()},
               {"checks", checks}};
  return out.dump(2) + "\n";
}

std::string chi_to_json(const ChiResult& r) {
  ojson hits = ojson::array();
  for (const auto& h : r.hits) {
    hits.push_back({{"step", h.step}, {"critical", h.critical}, {"local_degree", h.local_degree}});
  }
  ojson out = {{"value", r.value},
               {"status", to_string(r.status)},
               {"bound", r.bound},
               {"steps_walked", r.steps_walked},
               {"hits", hits},
               {"chain", r.chain},
               {"reason", r.reason}};
  return out.dump(2) + "\n";
}

std::string restriction_to_json(const RestrictionReport& report) {
  return restriction_json(report).dump(2) + "\n";
}

}  // namespace shiftcode
