#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "shiftcode/component_graph.hpp"

namespace shiftcode {

/// Subset of the alphabet {0, ..., d-1}, d <= 64.
using SymbolSet = std::uint64_t;

inline constexpr int kMaxAlphabet = 64;

inline SymbolSet symbol_bit(int s) { return SymbolSet{1} << s; }
inline bool has_symbol(SymbolSet set, int s) { return (set >> s) & 1U; }
inline int symbol_count(SymbolSet set) { return __builtin_popcountll(set); }
inline SymbolSet full_alphabet(int d) { return d >= 64 ? ~SymbolSet{0} : (symbol_bit(d) - 1); }
std::vector<int> symbols_of(SymbolSet set);

/// Finite word (e_1, ..., e_k) over {0, ..., d-1}; k = 0 is allowed.
struct CylinderWord {
  std::vector<std::uint8_t> symbols;

  CylinderWord() = default;
  explicit CylinderWord(std::vector<std::uint8_t> s) : symbols(std::move(s)) {}
  static CylinderWord parse(const std::string& text);

  int length() const { return static_cast<int>(symbols.size()); }
  /// sigma: drops the first symbol.
  CylinderWord shifted() const;
  /// Keeps the first n symbols.
  CylinderWord prefix(int n) const;
  /// Digits for d <= 10 ("0110"), dot-separated otherwise ("0.11.3").
  std::string to_string(int d = 10) const;

  friend auto operator<=>(const CylinderWord&, const CylinderWord&) = default;
};

/// Branch-symbol sets S(W) per component.  S(U) is the whole alphabet.
class SymbolAssignment {
 public:
  SymbolAssignment() = default;
  SymbolAssignment(int degree, std::vector<std::vector<SymbolSet>> sets)
      : degree_(degree), sets_(std::move(sets)) {}

  int degree() const { return degree_; }
  int depth() const { return static_cast<int>(sets_.size()) - 1; }
  SymbolSet at(int level, int index) const { return sets_[level][index]; }
  std::vector<int> symbols(int level, int index) const { return symbols_of(at(level, index)); }
  const std::vector<std::vector<SymbolSet>>& sets() const { return sets_; }

  /// Replaces symbol `from` by `to` in S(W); used for mutation testing.
  void replace_symbol(int level, int index, int from, int to);

  friend bool operator==(const SymbolAssignment&, const SymbolAssignment&) = default;

 private:
  int degree_ = 2;
  std::vector<std::vector<SymbolSet>> sets_;
};

/// Level 1: consecutive blocks of sizes d_1..d_N in canonical order.
/// Level k: each parent splits S(P) into ascending consecutive runs among
/// its children over each V inside f(P), children in canonical order.
/// Throws Error(kInconsistentTree) if the degree bookkeeping fails.
SymbolAssignment assign_symbols(const ComponentGraph& graph);

/// Violations of |S(W)| = local degree, S(W) within S(container(W)) and
/// the per-image partition of the alphabet.
std::vector<std::string> check_assignment(const SymbolAssignment& s, const ComponentGraph& graph);

/// Lookup tables for the depth-k coding map c: c(empty) = U and c(w) is the
/// level-|w| component W with image c(sigma w) and e_1 in S(W).
class CylinderMap {
 public:
  static constexpr int kMissing = -1;
  static constexpr int kAmbiguous = -2;

  CylinderMap(const SymbolAssignment& s, const ComponentGraph& graph);

  /// Component W at `level` with image(W) = image_index and symbol in
  /// S(W); kMissing / kAmbiguous when the assignment is not a partition.
  int child(int level, int image_index, int symbol) const;
  /// c(w); throws Error(kInconsistentTree) on a missing or ambiguous step.
  int component(const CylinderWord& w) const;

 private:
  int degree_;
  // table_[k][V * d + s] for level k >= 1
  std::vector<std::vector<int>> table_;
};

int cylinder_component(const SymbolAssignment& s, const ComponentGraph& graph,
                       const CylinderWord& w);

/// Per level-k component, the lexicographically sorted words coding it.
struct FiberTable {
  int level = 0;
  std::vector<std::vector<CylinderWord>> words;

  std::vector<std::int64_t> counts() const;
};

/// Builds fibers through fiber(W) = S(W) x fiber(image(W)).  Throws
/// Error(kBudgetExceeded) past 2^24 words.
FiberTable fibers(const SymbolAssignment& s, const ComponentGraph& graph, int k);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few
};

struct VerificationReport {
  int level = 0;
  std::size_t cylinders = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  int passed_count() const;
};

/// Exhaustive check over all d^k words of nesting, equivariance,
/// surjectivity, fiber size = cumulative degree, and that components coded
/// by words with different first symbols carry a critical point.
VerificationReport verify_semiconjugacy(const SymbolAssignment& s, const ComponentGraph& graph, int k);

}  // namespace shiftcode
