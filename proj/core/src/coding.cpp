#include "shiftcode/coding.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "shiftcode/errors.hpp"

namespace shiftcode {

namespace {

constexpr std::size_t kMaxWords = std::size_t{1} << 24;
constexpr std::size_t kMaxCounterexamples = 8;

std::size_t word_count(int d, int k) {
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) {
    if (n > kMaxWords / static_cast<std::size_t>(d)) {
      throw Error(ErrorKind::kBudgetExceeded, "d^k exceeds the enumeration budget");
    }
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

// Word with index idx (first symbol most significant) of length k.
CylinderWord word_at(std::size_t idx, int d, int k) {
  std::vector<std::uint8_t> s(k);
  for (int i = k - 1; i >= 0; --i) {
    s[i] = static_cast<std::uint8_t>(idx % d);
    idx /= d;
  }
  return CylinderWord(std::move(s));
}

std::string set_to_string(SymbolSet set) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int s : symbols_of(set)) {
    os << (first ? "" : ",") << s;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

std::vector<int> symbols_of(SymbolSet set) {
  std::vector<int> out;
  for (int s = 0; s < kMaxAlphabet; ++s) {
    if (has_symbol(set, s)) out.push_back(s);
  }
  return out;
}

CylinderWord CylinderWord::parse(const std::string& text) {
  std::vector<std::uint8_t> s;
  if (text.find('.') != std::string::npos) {
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, '.')) s.push_back(static_cast<std::uint8_t>(std::stoi(part)));
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorKind::kInvalidInput, "bad word '" + text + "'");
      }
      s.push_back(static_cast<std::uint8_t>(c - '0'));
    }
  }
  return CylinderWord(std::move(s));
}

CylinderWord CylinderWord::shifted() const {
  if (symbols.empty()) return {};
  return CylinderWord({symbols.begin() + 1, symbols.end()});
}

CylinderWord CylinderWord::prefix(int n) const {
  n = std::clamp(n, 0, length());
  return CylinderWord({symbols.begin(), symbols.begin() + n});
}

std::string CylinderWord::to_string(int d) const {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (d > 10 && i > 0) out.push_back('.');
    out += std::to_string(symbols[i]);
  }
  return out;
}

void SymbolAssignment::replace_symbol(int level, int index, int from, int to) {
  SymbolSet& s = sets_[level][index];
  s &= ~symbol_bit(from);
  s |= symbol_bit(to);
}

SymbolAssignment assign_symbols(const ComponentGraph& g) {
  const int d = g.degree;
  if (d < 2 || d > kMaxAlphabet) throw Error(ErrorKind::kInvalidInput, "alphabet size out of range");
  std::vector<std::vector<SymbolSet>> sets(g.levels.size());
  sets[0] = {full_alphabet(d)};
  if (g.depth() >= 1) {
    int next = 0;
    for (const Node& n : g.levels[1]) {
      SymbolSet s = 0;
      for (int i = 0; i < n.local_degree; ++i) s |= symbol_bit(next++);
      sets[1].push_back(s);
    }
    if (next != d) {
      throw Error(ErrorKind::kInconsistentTree, "level-1 degrees sum to " + std::to_string(next));
    }
  }
  for (int k = 2; k <= g.depth(); ++k) {
    const auto& prev = g.levels[k - 1];
    const auto& level = g.levels[k];
    sets[k].assign(level.size(), 0);
    std::map<std::pair<int, int>, std::vector<int>> groups;  // (parent, image) -> children
    for (int w = 0; w < static_cast<int>(level.size()); ++w) {
      groups[{level[w].container, level[w].image}].push_back(w);
    }
    for (int p = 0; p < static_cast<int>(prev.size()); ++p) {
      const std::vector<int> parent_symbols = symbols_of(sets[k - 1][p]);
      for (int v = 0; v < static_cast<int>(prev.size()); ++v) {
        if (prev[v].container != prev[p].image) continue;
        auto it = groups.find({p, v});
        std::size_t pos = 0;
        if (it != groups.end()) {
          for (int w : it->second) {
            for (int i = 0; i < level[w].local_degree; ++i) {
              if (pos >= parent_symbols.size()) {
                throw Error(ErrorKind::kInconsistentTree,
                            "children of level " + std::to_string(k - 1) + " component " +
                                std::to_string(p) + " need more symbols than it has");
              }
              sets[k][w] |= symbol_bit(parent_symbols[pos++]);
            }
          }
        }
        if (pos != parent_symbols.size()) {
          throw Error(ErrorKind::kInconsistentTree,
                      "children of level " + std::to_string(k - 1) + " component " +
                          std::to_string(p) + " over image " + std::to_string(v) +
                          " do not use all its symbols");
        }
      }
    }
  }
  return {d, std::move(sets)};
}

std::vector<std::string> check_assignment(const SymbolAssignment& s, const ComponentGraph& g) {
  std::vector<std::string> out;
  const SymbolSet all = full_alphabet(g.degree);
  if (s.depth() != g.depth()) out.push_back("assignment depth differs from tree depth");
  const int depth = std::min(s.depth(), g.depth());
  if (depth >= 0 && s.at(0, 0) != all) out.push_back("S(U) must be the full alphabet");
  for (int k = 1; k <= depth; ++k) {
    const auto& level = g.levels[k];
    std::vector<SymbolSet> union_over(g.levels[k - 1].size(), 0);
    std::vector<bool> overlap(g.levels[k - 1].size(), false);
    for (int w = 0; w < static_cast<int>(level.size()); ++w) {
      const SymbolSet set = s.at(k, w);
      const std::string name = "level " + std::to_string(k) + " component " + std::to_string(w);
      if (symbol_count(set) != level[w].local_degree) {
        out.push_back(name + ": |S| = " + std::to_string(symbol_count(set)) + " but local degree " +
                      std::to_string(level[w].local_degree));
      }
      if ((set & ~s.at(k - 1, level[w].container)) != 0) {
        out.push_back(name + ": S = " + set_to_string(set) + " not inside S(container) = " +
                      set_to_string(s.at(k - 1, level[w].container)));
      }
      if (union_over[level[w].image] & set) overlap[level[w].image] = true;
      union_over[level[w].image] |= set;
    }
    for (std::size_t v = 0; v < union_over.size(); ++v) {
      if (overlap[v] || union_over[v] != all) {
        out.push_back("level " + std::to_string(k) + ": symbol sets over image " +
                      std::to_string(v) + " do not partition the alphabet");
      }
    }
  }
  return out;
}

CylinderMap::CylinderMap(const SymbolAssignment& s, const ComponentGraph& g) : degree_(g.degree) {
  const int depth = std::min(s.depth(), g.depth());
  table_.resize(depth + 1);
  for (int k = 1; k <= depth; ++k) {
    const auto& level = g.levels[k];
    auto& t = table_[k];
    t.assign(g.levels[k - 1].size() * degree_, kMissing);
    for (int w = 0; w < static_cast<int>(level.size()); ++w) {
      for (int sym : s.symbols(k, w)) {
        if (sym >= degree_) continue;
        int& slot = t[static_cast<std::size_t>(level[w].image) * degree_ + sym];
        slot = (slot == kMissing) ? w : kAmbiguous;
      }
    }
  }
}

int CylinderMap::child(int level, int image_index, int symbol) const {
  return table_[level][static_cast<std::size_t>(image_index) * degree_ + symbol];
}

int CylinderMap::component(const CylinderWord& w) const {
  const int k = w.length();
  if (k >= static_cast<int>(table_.size())) {
    throw Error(ErrorKind::kInvalidInput, "word longer than the tree depth");
  }
  int current = 0;
  // c(e_j..e_k) from the tail inwards: level of the suffix is k - j + 1.
  for (int j = k - 1; j >= 0; --j) {
    const int level = k - j;
    const int sym = w.symbols[j];
    if (sym >= degree_) throw Error(ErrorKind::kInvalidInput, "symbol outside the alphabet");
    current = child(level, current, sym);
    if (current < 0) {
      throw Error(ErrorKind::kInconsistentTree,
                  std::string(current == kMissing ? "no" : "several") + " components code suffix " +
                      w.shifted().to_string(degree_));
    }
  }
  return current;
}

int cylinder_component(const SymbolAssignment& s, const ComponentGraph& graph, const CylinderWord& w) {
  return CylinderMap(s, graph).component(w);
}

std::vector<std::int64_t> FiberTable::counts() const {
  std::vector<std::int64_t> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(static_cast<std::int64_t>(w.size()));
  return out;
}

FiberTable fibers(const SymbolAssignment& s, const ComponentGraph& g, int k) {
  if (k < 0 || k > g.depth() || k > s.depth()) {
    throw Error(ErrorKind::kInvalidInput, "fiber level outside the tree");
  }
  word_count(g.degree, k);
  std::vector<std::vector<CylinderWord>> current{{CylinderWord{}}};
  for (int level = 1; level <= k; ++level) {
    const auto& nodes = g.levels[level];
    std::vector<std::vector<CylinderWord>> next(nodes.size());
    for (int w = 0; w < static_cast<int>(nodes.size()); ++w) {
      const auto& tails = current[nodes[w].image];
      for (int sym : s.symbols(level, w)) {
        for (const auto& tail : tails) {
          std::vector<std::uint8_t> word;
          word.reserve(tail.symbols.size() + 1);
          word.push_back(static_cast<std::uint8_t>(sym));
          word.insert(word.end(), tail.symbols.begin(), tail.symbols.end());
          next[w].emplace_back(std::move(word));
        }
      }
    }
    current = std::move(next);
  }
  return {k, std::move(current)};
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

int VerificationReport::passed_count() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return c.passed; }));
}

VerificationReport verify_semiconjugacy(const SymbolAssignment& s, const ComponentGraph& g, int k) {
  if (k < 1 || k > g.depth() || k > s.depth()) {
    throw Error(ErrorKind::kInvalidInput, "verification level outside the tree");
  }
  const int d = g.degree;
  const CylinderMap map(s, g);

  // codes[j][idx]: c of the word of length j with index idx.
  std::vector<std::vector<int>> codes(k + 1);
  codes[0] = {0};
  std::size_t n_prev = 1;
  for (int j = 1; j <= k; ++j) {
    const std::size_t n = n_prev * static_cast<std::size_t>(d);
    if (n > kMaxWords) throw Error(ErrorKind::kBudgetExceeded, "d^k exceeds the enumeration budget");
    codes[j].assign(n, CylinderMap::kMissing);
    for (std::size_t idx = 0; idx < n; ++idx) {
      const int first = static_cast<int>(idx / n_prev);
      const int tail = codes[j - 1][idx % n_prev];
      codes[j][idx] = tail < 0 ? CylinderMap::kMissing : map.child(j, tail, first);
    }
    n_prev = n;
  }

  VerificationReport report;
  report.level = k;
  report.cylinders = codes[k].size();
  CheckResult nesting{"nesting: container(c(w)) = c(prefix w)"};
  CheckResult equivariance{"equivariance: image(c(w)) = c(sigma w)"};
  CheckResult surjective{"surjectivity onto level-k components"};
  CheckResult fiber_law{"fiber size = cumulative degree"};
  CheckResult injectivity{"first-symbol merging only at critical components"};
  auto record = [&](CheckResult& c, const std::string& msg) {
    c.passed = false;
    ++c.failures;
    if (c.counterexamples.size() < kMaxCounterexamples) c.counterexamples.push_back(msg);
  };

  const auto& level = g.levels[k];
  std::vector<std::int64_t> count(level.size(), 0);
  std::vector<int> first_symbol(level.size(), -1);
  std::vector<bool> merged(level.size(), false);
  const std::size_t n_tail = codes[k - 1].size();
  for (std::size_t idx = 0; idx < codes[k].size(); ++idx) {
    const int c = codes[k][idx];
    const int tail = codes[k - 1][idx % n_tail];
    const int head = codes[k - 1][idx / static_cast<std::size_t>(d)];
    const auto word = [&] { return word_at(idx, d, k).to_string(d); };
    if (c < 0) {
      record(equivariance, "word " + word() + ": " +
                               (c == CylinderMap::kAmbiguous ? "several components" : "no component") +
                               " over c(sigma w)");
      continue;
    }
    if (level[c].image != tail) {
      record(equivariance, "word " + word() + ": image(c(w)) = " + std::to_string(level[c].image) +
                               " but c(sigma w) = " + std::to_string(tail));
    }
    if (level[c].container != head) {
      record(nesting, "word " + word() + ": container(c(w)) = " +
                          std::to_string(level[c].container) + " but c(prefix) = " + std::to_string(head));
    }
    ++count[c];
    const int first = static_cast<int>(idx / n_tail);
    if (first_symbol[c] < 0) first_symbol[c] = first;
    else if (first_symbol[c] != first) merged[c] = true;
  }
  for (int w = 0; w < static_cast<int>(level.size()); ++w) {
    const std::string name = "component " + std::to_string(w);
    if (count[w] == 0) record(surjective, name + " codes no word");
    if (count[w] != level[w].cumulative_degree) {
      record(fiber_law, name + ": fiber " + std::to_string(count[w]) + " vs cumulative degree " +
                            std::to_string(level[w].cumulative_degree));
    }
    if (merged[w] && level[w].critical_multiplicity == 0) {
      record(injectivity, name + ": words with different first symbols but no critical point");
    }
  }
  report.checks = {nesting, equivariance, surjective, fiber_law, injectivity};
  return report;
}

}  // namespace shiftcode
