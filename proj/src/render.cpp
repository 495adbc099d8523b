#include "overhang/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "overhang/balance.hpp"

namespace overhang {
namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

std::string render_svg(const Stack& stack, const RenderSpec& spec) {
  if (!(spec.scale > 0)) throw std::invalid_argument("scale must be positive");
  if (stack.blocks.empty()) throw std::invalid_argument("empty stack");

  double xmin = 0.0, xmax = 1.0;
  int top_level = 0;
  for (const Block& b : stack.blocks) {
    xmin = std::min(xmin, b.x);
    xmax = std::max(xmax, b.x + 1.0);
    top_level = std::max(top_level, b.level);
  }
  xmin = std::min(xmin, -2.0);  // always show a piece of the table

  BalanceResult balance;
  bool need_balance = spec.show_forces || spec.shading;
  if (need_balance) balance = is_balanced(stack, BalanceMode::Float, 1e-7);

  // Pixel geometry: 1 block = scale px, one block of table below level 0,
  // half a block of margin around, one block of headroom for arrows.
  const double s = spec.scale;
  const double pad = 0.5 * s;
  const double head = 1.0 * s;
  const double w = (xmax - xmin) * s + 2 * pad;
  const double h = (top_level + 2) * s + 2 * pad + head;
  auto X = [&](double x) { return (x - xmin) * s + pad; };
  // y: top edge of `level` sits `level + 1` blocks above the table top.
  auto Ytop = [&](int level) { return h - pad - (level + 2) * s; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(w) << "\" height=\"" << num(h) << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << num(w) << "\" height=\"" << num(h)
      << "\" fill=\"white\"/>\n";
  // Table: everything left of x = 0, one block tall.
  svg << "<rect x=\"" << num(X(xmin)) << "\" y=\"" << num(Ytop(-1))
      << "\" width=\"" << num(X(0) - X(xmin)) << "\" height=\"" << num(s)
      << "\" fill=\"#777777\"/>\n";

  SupportPartition part;
  if (spec.shading) part = support_partition(stack);
  for (int i = 0; i < stack.size(); ++i) {
    const Block& b = stack.blocks[i];
    const char* fill = "#f4f4f4";
    if (spec.shading) fill = part.in_support[i] ? "#e0e0e0" : "#8c8c8c";
    svg << "<rect x=\"" << num(X(b.x)) << "\" y=\"" << num(Ytop(b.level))
        << "\" width=\"" << num(s) << "\" height=\"" << num(s) << "\" fill=\""
        << fill << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }

  // Arrow lengths are linear in magnitude; the largest spans two blocks.
  double max_mag = 0.0;
  if (spec.show_point_weights)
    for (const PointWeight& pw : stack.weights) max_mag = std::max(max_mag, pw.magnitude);
  if (spec.show_forces && balance.balanced)
    for (const ForceVar& f : balance.witness) max_mag = std::max(max_mag, f.magnitude);
  const double px_per_unit = max_mag > 0 ? 2.0 * s / max_mag : 0.0;

  auto arrow = [&](double x, double y_tip, double len, const char* color) {
    if (len <= 0) return;
    double ah = std::min(0.2 * s, len);  // head size
    svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(y_tip - len) << "\" x2=\""
        << num(x) << "\" y2=\"" << num(y_tip) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "<path d=\"M " << num(x - 0.3 * ah) << " " << num(y_tip - ah) << " L "
        << num(x) << " " << num(y_tip) << " L " << num(x + 0.3 * ah) << " "
        << num(y_tip - ah) << " Z\" fill=\"" << color << "\"/>\n";
  };

  if (spec.show_forces && balance.balanced)
    for (const ForceVar& f : balance.witness) {
      double x = f.end == 0 ? f.contact.a : f.contact.b;
      arrow(X(x), Ytop(f.contact.lower), f.magnitude * px_per_unit, "#1446c8");
    }
  if (spec.show_point_weights)
    for (const PointWeight& pw : stack.weights)
      arrow(X(pw.position), Ytop(stack.blocks[pw.block].level),
            pw.magnitude * px_per_unit, "#c81414");

  if (need_balance && !balance.balanced)
    svg << "<text x=\"" << num(pad) << "\" y=\"" << num(pad + 0.4 * s)
        << "\" fill=\"#c81414\" font-family=\"sans-serif\" font-size=\""
        << num(0.45 * s) << "\">WARNING: stack is not balanced</text>\n";

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace overhang
