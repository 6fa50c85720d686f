#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tropjac/bunch.hpp"
#include "tropjac/curve.hpp"
#include "tropjac/intersection.hpp"
#include "tropjac/newton.hpp"

namespace tropjac::svg {

struct CurveLayer {
  TropicalCurve curve;
  std::string color = "#1f4e79";
  /// Per-element overrides; empty strings fall back to `color`.
  std::vector<std::string> edge_colors;
  std::vector<std::string> ray_colors;
  bool weight_labels = true;
};

struct PointLayer {
  std::vector<std::pair<RationalPoint, std::string>> points;  ///< position, label
  std::string color = "#c0392b";
};

struct ComplexLayer {
  NewtonComplex complex;
  std::string color = "#2d6a4f";
};

struct LoopLayer {
  std::vector<RationalPoint> loop;
  std::string color = "#7f7f7f";
};

using Layer = std::variant<CurveLayer, PointLayer, ComplexLayer, LoopLayer>;

/// Each panel gets its own viewport around its finite features; rays run
/// `ray_margin` data units past them.
struct Panel {
  std::string title;
  std::vector<Layer> layers;
};

struct Scene {
  std::vector<Panel> panels;
  double ray_margin = 1.0;
  double panel_size = 320.0;
};

/// Deterministic SVG 1.1 text. Coordinates are printed with three decimals;
/// nothing here feeds back into computation.
std::string render_svg(const Scene& scene);

Scene curve_scene(const TropicalCurve& curve);
/// Curve and its Newton complex side by side.
Scene newton_scene(const TropicalCurve& curve, const NewtonComplex& complex);
Scene intersection_scene(const TropicalCurve& c1, const TropicalCurve& c2, const Divisor& d);
/// Tentacles, rays and cycle edges in distinct colors.
Scene bunch_scene(const BunchGraph& b);

}  // namespace tropjac::svg
