#pragma once

#include <string>

#include "shiftcode/chi.hpp"
#include "shiftcode/coding.hpp"
#include "shiftcode/puzzle_tree.hpp"

namespace shiftcode {

/// Reals are written as "%.17g" decimal strings; meta.precision records 17.
/// Output is byte-identical for identical input.

/// {levels: [[{id, level, container, image, local_degree,
/// cumulative_degree, diameter, bbox}]], meta: {...}}.  With
/// include_covers each entry also carries its cell cover.
std::string tree_to_json(const PuzzleTree& tree, bool include_covers = false);

/// Per level, {component_id: {symbols, fiber_count, fiber_words}}; at most
/// max_words words are listed per component.
std::string coding_to_json(const SymbolAssignment& s, const ComponentGraph& graph,
                           std::size_t max_words = 64);

std::string verification_to_json(const VerificationReport& report);
std::string chi_to_json(const ChiResult& result);
std::string restriction_to_json(const RestrictionReport& report);

/// "%.17g".
std::string format_real(double x);

}  // namespace shiftcode
