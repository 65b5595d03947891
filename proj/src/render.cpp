#include "bookfold/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace bookfold {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string RenderStyle::page_color(int page) const {
  switch (page) {
    case 1: return "red";
    case 2: return "blue";
    case 3: return "green";
    case 4: return "yellow";
    default: break;
  }
  static const char* extended[] = {"purple", "orange", "teal",
                                   "brown",  "magenta", "olive"};
  return extended[(page - 5) % 6];
}

RenderResult render_svg(const Instance& inst, const std::optional<Ordering>& ord,
                        const RenderStyle& style) {
  RenderResult result;
  Ordering order;
  if (ord) {
    if (ord->size() != inst.vertex_count()) {
      result.error = "ordering does not cover the vertex set";
      return result;
    }
    order = *ord;
  } else {
    order = Ordering::identity(inst.vertex_count());
  }

  const std::size_t n = inst.vertex_count();
  const double margin = style.spine_spacing;
  double max_radius = style.spine_spacing;
  for (const Edge& e : inst.edges()) {
    double r = static_cast<double>(
                   std::max(order.rank_of(e.src), order.rank_of(e.dst)) -
                   std::min(order.rank_of(e.src), order.rank_of(e.dst))) *
               style.spine_spacing / 2.0;
    max_radius = std::max(max_radius, r);
  }
  const double spine_y = max_radius + margin;
  const double width = margin * 2 + style.spine_spacing * (n > 0 ? double(n - 1) : 0.0);
  const double height = spine_y * 2;
  auto x_of = [&](std::size_t vertex) {
    return margin + style.spine_spacing * static_cast<double>(order.rank_of(vertex));
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << fmt(width) << "\" height=\"" << fmt(height) << "\">\n";
  svg << "<line x1=\"" << fmt(margin - style.spine_spacing / 2) << "\" y1=\""
      << fmt(spine_y) << "\" x2=\"" << fmt(width - margin + style.spine_spacing / 2)
      << "\" y2=\"" << fmt(spine_y) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";

  for (const Edge& e : inst.edges()) {
    const double x1 = x_of(e.src);
    const double x2 = x_of(e.dst);
    const bool above = e.page.value % 2 == 1;
    const double left = std::min(x1, x2);
    const double right = std::max(x1, x2);
    const double r = (right - left) / 2.0;
    // Left-to-right with sweep 1 arcs above the spine, sweep 0 below.
    const int sweep = above ? 1 : 0;
    svg << "<path d=\"M " << fmt(left) << " " << fmt(spine_y) << " A " << fmt(r)
        << " " << fmt(r) << " 0 0 " << sweep << " " << fmt(right) << " "
        << fmt(spine_y) << "\" fill=\"none\" stroke=\""
        << style.page_color(e.page.value) << "\" stroke-width=\"1.5\"/>\n";
    // Arrowhead at the destination, pointing along the arc's final tangent
    // (vertical at the spine).
    const double a = style.arrowhead;
    const double dir = (above ? 1.0 : -1.0);  // arriving downward when above
    const double tip_y = spine_y;
    const double base_y = spine_y - dir * 2 * a;
    svg << "<polygon points=\"" << fmt(x2) << "," << fmt(tip_y) << " "
        << fmt(x2 - a) << "," << fmt(base_y) << " " << fmt(x2 + a) << ","
        << fmt(base_y) << "\" fill=\"" << style.page_color(e.page.value)
        << "\"/>\n";
  }

  for (std::size_t rank = 0; rank < n; ++rank) {
    const std::size_t v = order.vertex_at(rank);
    const double x = margin + style.spine_spacing * static_cast<double>(rank);
    svg << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(spine_y)
        << "\" r=\"3\" fill=\"black\"/>\n";
    svg << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(spine_y + 14)
        << "\" font-size=\"9\" text-anchor=\"middle\">"
        << escape_xml(inst.vertex_name(v)) << "</text>\n";
  }
  svg << "</svg>\n";
  result.ok = true;
  result.svg = svg.str();
  return result;
}

}  // namespace bookfold
