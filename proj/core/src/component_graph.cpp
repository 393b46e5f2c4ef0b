#include "shiftcode/component_graph.hpp"

#include <map>
#include <sstream>

namespace shiftcode {

std::vector<int> ComponentGraph::children(int level, int index) const {
  std::vector<int> out;
  if (level + 1 > depth()) return out;
  const auto& next = levels[level + 1];
  for (int w = 0; w < static_cast<int>(next.size()); ++w) {
    if (next[w].container == index) out.push_back(w);
  }
  return out;
}

std::vector<int> ComponentGraph::preimages(int level, int index) const {
  std::vector<int> out;
  if (level + 1 > depth()) return out;
  const auto& next = levels[level + 1];
  for (int w = 0; w < static_cast<int>(next.size()); ++w) {
    if (next[w].image == index) out.push_back(w);
  }
  return out;
}

StructureReport check_structure(const ComponentGraph& g) {
  StructureReport report;
  auto fail = [&](int level, int index, const std::string& what) {
    std::ostringstream os;
    os << "level " << level << " component " << index << ": " << what;
    report.violations.push_back(os.str());
  };
  if (g.levels.empty() || g.levels[0].size() != 1) {
    report.violations.push_back("level 0 must hold exactly one component");
    return report;
  }
  const Node& root = g.levels[0][0];
  if (root.local_degree != 1 || root.cumulative_degree != 1) fail(0, 0, "root degrees must be 1");

  std::int64_t power = 1;
  for (int k = 1; k <= g.depth(); ++k) {
    power *= g.degree;
    const auto& prev = g.levels[k - 1];
    const auto& level = g.levels[k];
    std::int64_t cumulative_total = 0;
    std::vector<int> degree_into(prev.size(), 0);
    // (parent, image) -> sum of local degrees
    std::map<std::pair<int, int>, int> split;
    for (int w = 0; w < static_cast<int>(level.size()); ++w) {
      const Node& n = level[w];
      const int np = static_cast<int>(prev.size());
      if (n.container < 0 || n.container >= np || n.image < 0 || n.image >= np) {
        fail(k, w, "container or image out of range");
        continue;
      }
      if (n.local_degree < 1) fail(k, w, "local degree below 1");
      if (n.critical_multiplicity != n.local_degree - 1) {
        fail(k, w, "local degree disagrees with critical count (Riemann-Hurwitz)");
      }
      if (n.cumulative_degree != n.local_degree * prev[n.image].cumulative_degree) {
        fail(k, w, "cumulative degree is not the product along the image chain");
      }
      if (k >= 2 && g.levels[k - 1][n.image].container != prev[n.container].image) {
        fail(k, w, "container(image) != image(container)");
      }
      cumulative_total += n.cumulative_degree;
      degree_into[n.image] += n.local_degree;
      split[{n.container, n.image}] += n.local_degree;
    }
    if (cumulative_total != power) {
      std::ostringstream os;
      os << "level " << k << ": cumulative degrees sum to " << cumulative_total << ", expected "
         << power;
      report.violations.push_back(os.str());
    }
    for (int v = 0; v < static_cast<int>(prev.size()); ++v) {
      if (degree_into[v] != g.degree) {
        fail(k - 1, v, "local degrees of its preimages sum to " + std::to_string(degree_into[v]));
      }
    }
    // Every parent splits its own degree among the preimages of each
    // component inside its image.
    for (int p = 0; p < static_cast<int>(prev.size()); ++p) {
      const int target_container = prev[p].image;
      for (int v = 0; v < static_cast<int>(prev.size()); ++v) {
        if (prev[v].container != target_container) continue;
        auto it = split.find({p, v});
        const int got = it == split.end() ? 0 : it->second;
        // U is the whole target at level 1, so the root splits all d sheets.
        const int expected = k == 1 ? g.degree : prev[p].local_degree;
        if (got != expected) {
          fail(k - 1, p, "children over image " + std::to_string(v) + " carry degree " +
                             std::to_string(got));
        }
      }
    }
  }
  return report;
}

}  // namespace shiftcode
