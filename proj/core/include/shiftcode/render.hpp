#pragma once

#include <string>

#include "shiftcode/coding.hpp"
#include "shiftcode/puzzle_tree.hpp"

namespace shiftcode {

enum class ColorBy { kLevel, kSymbols };

struct RenderOptions {
  int level = 1;
  ColorBy color_by = ColorBy::kLevel;
  int size = 800;  // pixels, square
};

/// SVG of cover outlines.  kLevel draws levels 1..level, one colour per
/// level; kSymbols draws only `level`, coloured by each component's symbol
/// set.  Deterministic bytes for a fixed tree and options.
std::string render_svg(const PuzzleTree& tree, const SymbolAssignment& symbols, const RenderOptions& options);

}  // namespace shiftcode
