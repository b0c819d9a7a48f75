#pragma once

// Static drawings: contour plots of operations and profile plots of a weak
// order against a reference total order. Output is byte-deterministic.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtsg/magma.hpp"
#include "qtsg/order.hpp"

namespace qtsg {

enum class RenderFormat { ascii, svg };

std::optional<RenderFormat> parse_render_format(std::string_view name);

// Grid point (x, y) stands for the argument pair of F(x, y).
using GridPoint = std::pair<Element, Element>;

struct ContourPlot {
  int n = 0;
  // value -> points with that value, sorted by (axis rank of y, axis rank of x)
  std::map<Element, std::vector<GridPoint>> level_sets;
  TotalOrder axis_order = TotalOrder::natural(0);
};

ContourPlot contour_plot(const FiniteBinOp& f, const TotalOrder& axis);

// ascii: a header line, then one row per first argument a_i (in axis order)
// listing F(a_i, a_1) ... F(a_i, a_n).
// svg: first argument on the horizontal axis, second on the vertical axis
// (growing upward), one <g> of polylines per level set: runs along rows
// first, then along columns.
std::string render_contour(const FiniteBinOp& f, const TotalOrder& axis,
                           RenderFormat format);

struct ProfilePlot {
  int n = 0;
  TotalOrder horizontal = TotalOrder::natural(0);
  // Level 1 is the top row and holds the minimal elements of the weak order.
  std::map<Element, int> vertical_level;
};

ProfilePlot profile_plot(const TotalOrder& t, const WeakOrder& w);

// Plateaus are drawn as horizontal runs. Violations come from
// pattern_report(t, w) and are listed below the plot.
std::string render_profile(const TotalOrder& t, const WeakOrder& w,
                           RenderFormat format);

}  // namespace qtsg
