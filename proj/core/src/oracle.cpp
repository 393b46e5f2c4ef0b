#include "shiftcode/oracle.hpp"

#include <numeric>
#include <random>

#include "shiftcode/errors.hpp"

namespace shiftcode {

namespace {

std::vector<int> random_composition(int n, double p, bool at_least_two, std::mt19937_64& rng) {
  if (n == 1) return {1};
  std::bernoulli_distribution cut(p);
  std::uniform_int_distribution<int> gap(1, n - 1);
  for (;;) {
    std::vector<int> parts;
    int current = 1;
    for (int g = 1; g < n; ++g) {
      if (cut(rng)) {
        parts.push_back(current);
        current = 1;
      } else {
        ++current;
      }
    }
    parts.push_back(current);
    if (!at_least_two || parts.size() >= 2) return parts;
    if (p <= 0.0) {
      const int g = gap(rng);
      return {g, n - g};
    }
  }
}

}  // namespace

AbstractTree generate(std::uint64_t seed, int d, int depth, const SplitPolicy& policy) {
  if (d < 2 || d > kMaxAlphabet) throw Error(ErrorKind::kInvalidInput, "d must be in [2, 64]");
  if (depth < 1) throw Error(ErrorKind::kInvalidInput, "depth must be at least 1");
  std::mt19937_64 rng(seed);
  AbstractTree t;
  t.degree = d;
  t.levels.push_back({Node{}});

  std::vector<int> first = policy.level1;
  if (first.empty()) {
    first = random_composition(d, policy.cut_probability, true, rng);
  } else if (first.size() < 2 || std::accumulate(first.begin(), first.end(), 0) != d) {
    throw Error(ErrorKind::kInvalidInput, "level-1 composition must sum to d with >= 2 parts");
  }
  std::vector<Node> level1;
  for (int part : first) {
    if (part < 1) throw Error(ErrorKind::kInvalidInput, "composition parts must be positive");
    level1.push_back({0, 0, part, part, part - 1});
  }
  t.levels.push_back(std::move(level1));

  for (int k = 2; k <= depth; ++k) {
    const auto& prev = t.levels[k - 1];
    std::vector<Node> level;
    for (int p = 0; p < static_cast<int>(prev.size()); ++p) {
      for (int v = 0; v < static_cast<int>(prev.size()); ++v) {
        if (prev[v].container != prev[p].image) continue;
        for (int part : random_composition(prev[p].local_degree, policy.cut_probability, false, rng)) {
          level.push_back({p, v, part, part * prev[v].cumulative_degree, part - 1});
        }
      }
    }
    t.levels.push_back(std::move(level));
  }
  return t;
}

std::vector<std::int64_t> brute_force_fibers(const AbstractTree& tree, const SymbolAssignment& s, int k) {
  const int d = tree.degree;
  if (k < 0 || k > tree.depth()) throw Error(ErrorKind::kInvalidInput, "k outside the tree");
  std::uint64_t words = 1;
  for (int i = 0; i < k; ++i) {
    words *= static_cast<std::uint64_t>(d);
    if (words > (std::uint64_t{1} << 24)) {
      throw Error(ErrorKind::kBudgetExceeded, "d^k exceeds the enumeration budget");
    }
  }
  // next[level][V][symbol] = W, or -1 (none) / -2 (several)
  std::vector<std::vector<std::vector<int>>> next(k + 1);
  for (int level = 1; level <= k; ++level) {
    next[level].assign(tree.levels[level - 1].size(), std::vector<int>(d, -1));
    const auto& nodes = tree.levels[level];
    for (int w = 0; w < static_cast<int>(nodes.size()); ++w) {
      for (int sym = 0; sym < d; ++sym) {
        if (!has_symbol(s.at(level, w), sym)) continue;
        int& slot = next[level][nodes[w].image][sym];
        slot = slot == -1 ? w : -2;
      }
    }
  }
  std::vector<std::int64_t> counts(tree.levels[k].size(), 0);
  std::vector<int> digits(k);
  for (std::uint64_t idx = 0; idx < words; ++idx) {
    std::uint64_t rest = idx;
    for (int j = k - 1; j >= 0; --j) {
      digits[j] = static_cast<int>(rest % d);
      rest /= d;
    }
    int current = 0;
    for (int j = k - 1; j >= 0; --j) {
      current = next[k - j][current][digits[j]];
      if (current < 0) {
        throw Error(ErrorKind::kInconsistentTree, "word without a unique component");
      }
    }
    ++counts[current];
  }
  return counts;
}

}  // namespace shiftcode
