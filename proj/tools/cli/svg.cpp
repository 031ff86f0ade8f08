#include <algorithm>
#include <iomanip>
#include <sstream>

#include "cli.hpp"
#include "tropvol/error.hpp"

namespace tropvol::cli {

namespace {

constexpr std::string_view kModule = "cli";

std::string num(double v) {
  std::ostringstream out;
  out << std::setprecision(8) << (v == 0.0 ? 0.0 : v);
  return out.str();
}

}  // namespace

std::string render_svg_2d(const Polytrope& p) {
  if (p.dim() != 2) {
    throw Error(ErrorCode::UnsupportedDimension, kModule,
                "SVG rendering needs d = 2, got d = " + std::to_string(p.dim()));
  }
  if (is_degenerate(p)) throw Error(ErrorCode::InvalidArgument, kModule, "cannot render a degenerate polytrope");

  const std::vector<Pseudovertex> vertices = enumerate_pseudovertices(p);
  std::vector<std::vector<Rational>> points;
  for (const auto& v : vertices) points.push_back(v.point);
  const std::vector<std::size_t> order = convex_polygon_order(points);

  // SVG y grows downwards; plot (x, -y).
  std::vector<std::pair<double, double>> xy;
  for (const auto& q : points) xy.emplace_back(to_double(q[0]), -to_double(q[1]));
  double min_x = xy[0].first, max_x = xy[0].first, min_y = xy[0].second, max_y = xy[0].second;
  for (const auto& [x, y] : xy) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double pad_x = 0.1 * std::max(max_x - min_x, extent * 0.1);
  const double pad_y = 0.1 * std::max(max_y - min_y, extent * 0.1);
  const double radius = 0.015 * extent;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" "
      << "viewBox=\"" << num(min_x - pad_x) << ' ' << num(min_y - pad_y) << ' '
      << num(max_x - min_x + 2 * pad_x) << ' ' << num(max_y - min_y + 2 * pad_y) << "\">\n";
  svg << "  <title>polytrope with " << vertices.size() << " pseudovertices</title>\n";
  svg << "  <polygon class=\"polytrope\" fill=\"#dbe8f6\" stroke=\"#1f4e79\" stroke-width=\""
      << num(radius / 2) << "\" points=\"";
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) svg << ' ';
    svg << num(xy[order[k]].first) << ',' << num(xy[order[k]].second);
  }
  svg << "\"/>\n";
  for (std::size_t k : order) {
    svg << "  <circle class=\"pseudovertex\" cx=\"" << num(xy[k].first) << "\" cy=\"" << num(xy[k].second)
        << "\" r=\"" << num(radius) << "\" fill=\"#1f4e79\"/>\n";
  }
  for (std::size_t k = 0; k <= p.dim(); ++k) {
    const std::vector<Rational> v = p.vertex(k);
    svg << "  <circle class=\"tropical-vertex\" cx=\"" << num(to_double(v[0])) << "\" cy=\""
        << num(-to_double(v[1])) << "\" r=\"" << num(radius * 1.8) << "\" fill=\"none\" stroke=\"#c0392b\" "
        << "stroke-width=\"" << num(radius / 2) << "\"><title>v" << k + 1 << "</title></circle>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tropvol::cli
