#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bookfold/core.hpp"

namespace bookfold {

// Arc-diagram style. Pages 1..4 render in their display colors red, blue,
// green, yellow; higher pages cycle through a fixed extended palette
// (purple, orange, teal, brown, magenta, olive). Odd pages arc above the
// spine, even pages below.
struct RenderStyle {
  double spine_spacing = 40.0;  // px per vertex slot
  double arrowhead = 4.0;       // px
  std::string page_color(int page) const;
};

struct RenderResult {
  bool ok = false;
  std::string svg;     // deterministic: fixed element order, 2-decimal coords
  std::string error;   // VertexSetMismatch detail when !ok
};

// Vertices as labeled dots on a horizontal spine at ranked x-positions, each
// edge a semicircular arc in its page's half-plane with an arrowhead at the
// destination. Exactly |E| <path> arcs and |V| <circle> dots.
RenderResult render_svg(const Instance& inst,
                        const std::optional<Ordering>& ord,
                        const RenderStyle& style = {});

}  // namespace bookfold
