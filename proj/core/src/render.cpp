#include "shiftcode/render.hpp"

#include <cstdio>
#include <sstream>

#include "shiftcode/errors.hpp"

namespace shiftcode {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
constexpr int kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// Outline of a cover as cell-edge segments in pixel coordinates; the frame
// spans the whole picture with the imaginary axis pointing up.
std::string outline_path(const BoxCover& cover, int size) {
  const double cell = static_cast<double>(size) / std::ldexp(1.0, cover.resolution());
  auto x = [&](std::int64_t i) { return fmt(static_cast<double>(i) * cell); };
  auto y = [&](std::int64_t j) { return fmt(size - static_cast<double>(j) * cell); };
  std::ostringstream d;
  for (const Cell& c : cover.cells()) {
    if (!cover.contains({c.i, c.j - 1})) d << 'M' << x(c.i) << ' ' << y(c.j) << 'H' << x(c.i + 1);
    if (!cover.contains({c.i, c.j + 1})) d << 'M' << x(c.i) << ' ' << y(c.j + 1) << 'H' << x(c.i + 1);
    if (!cover.contains({c.i - 1, c.j})) d << 'M' << x(c.i) << ' ' << y(c.j) << 'V' << y(c.j + 1);
    if (!cover.contains({c.i + 1, c.j})) d << 'M' << x(c.i + 1) << ' ' << y(c.j) << 'V' << y(c.j + 1);
  }
  return d.str();
}

}  // namespace

std::string render_svg(const PuzzleTree& tree, const SymbolAssignment& symbols, const RenderOptions& o) {
  if (o.level < 0 || o.level > tree.depth()) throw Error(ErrorKind::kInvalidInput, "render level outside the tree");
  if (o.size < 16) throw Error(ErrorKind::kInvalidInput, "render size too small");
  const Frame& frame = tree.frame();
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << o.size << "\" height=\"" << o.size
      << "\" viewBox=\"0 0 " << o.size << ' ' << o.size << "\">\n";
  svg << "<!-- frame re " << fmt(frame.re_lo) << " im " << fmt(frame.im_lo) << " side " << fmt(frame.side)
      << " -->\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double s = o.size / frame.side;
  const Box c = tree.disk().center;
  svg << "<circle cx=\"" << fmt((c.re.mid() - frame.re_lo) * s) << "\" cy=\""
      << fmt(o.size - (c.im.mid() - frame.im_lo) * s) << "\" r=\"" << fmt(tree.disk().radius.mid() * s)
      << "\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4 4\"/>\n";
  const int first = o.color_by == ColorBy::kLevel ? 1 : o.level;
  for (int k = first; k <= o.level; ++k) {
    svg << "<g id=\"level-" << k << "\" fill=\"none\" stroke-width=\"1\">\n";
    for (int w = 0; w < static_cast<int>(tree.pieces(k).size()); ++w) {
      int colour = (k - 1) % kPaletteSize;
      if (o.color_by == ColorBy::kSymbols) {
        colour = static_cast<int>((symbols.at(k, w) * 0x9E3779B97F4A7C15ULL) >> 60) % kPaletteSize;
      }
      svg << "<path id=\"c" << k << '-' << w << "\" stroke=\"" << kPalette[colour] << "\" d=\""
          << outline_path(tree.piece(k, w).cover, o.size) << "\"/>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace shiftcode
