#include "tropjac/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace tropjac::svg {

namespace {

constexpr double kPad = 24.0;
constexpr double kTitle = 20.0;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
  bool empty() const { return x0 > x1; }
};

void add_point(Box& box, const RationalPoint& p) { box.add(p.x.to_double(), p.y.to_double()); }

// Maps data coordinates of one panel to page coordinates.
struct Frame {
  Box box;
  double scale = 1.0;
  double left = 0.0;
  double top = 0.0;
  double size = 0.0;

  double px(double x) const { return left + (x - box.x0) * scale; }
  double py(double y) const { return top + size - (y - box.y0) * scale; }
};

Box feature_box(const Panel& panel) {
  Box box;
  for (const auto& layer : panel.layers) {
    if (const auto* c = std::get_if<CurveLayer>(&layer)) {
      for (const auto& v : c->curve.vertices) add_point(box, v);
    } else if (const auto* p = std::get_if<PointLayer>(&layer)) {
      for (const auto& [pt, label] : p->points) add_point(box, pt);
    } else if (const auto* n = std::get_if<ComplexLayer>(&layer)) {
      for (const auto& v : n->complex.dual_vertices) box.add(static_cast<double>(v.x), static_cast<double>(v.y));
    } else if (const auto* l = std::get_if<LoopLayer>(&layer)) {
      for (const auto& v : l->loop) add_point(box, v);
    }
  }
  return box;
}

bool has_rays(const Panel& panel) {
  for (const auto& layer : panel.layers) {
    if (const auto* c = std::get_if<CurveLayer>(&layer); c && !c->curve.rays.empty()) return true;
  }
  return false;
}

void line(std::ostream& out, const Frame& f, double x0, double y0, double x1, double y1, const std::string& color,
          double width) {
  out << "  <line x1=\"" << fmt(f.px(x0)) << "\" y1=\"" << fmt(f.py(y0)) << "\" x2=\"" << fmt(f.px(x1))
      << "\" y2=\"" << fmt(f.py(y1)) << "\" stroke=\"" << color << "\" stroke-width=\"" << fmt(width) << "\"/>\n";
}

void label(std::ostream& out, double x, double y, const std::string& text, const std::string& color) {
  out << "  <text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\""
      << color << "\">" << escape(text) << "</text>\n";
}

void draw_curve(std::ostream& out, const Frame& f, const CurveLayer& layer) {
  const auto& c = layer.curve;
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    const auto& a = c.vertices[c.edges[e].from];
    const auto& b = c.vertices[c.edges[e].to];
    const std::string& color =
        e < layer.edge_colors.size() && !layer.edge_colors[e].empty() ? layer.edge_colors[e] : layer.color;
    const double w = static_cast<double>(c.edges[e].weight);
    line(out, f, a.x.to_double(), a.y.to_double(), b.x.to_double(), b.y.to_double(), color, 1.0 + w);
    if (layer.weight_labels && c.edges[e].weight > 1) {
      label(out, f.px((a.x.to_double() + b.x.to_double()) / 2) + 3, f.py((a.y.to_double() + b.y.to_double()) / 2) - 3,
            std::to_string(c.edges[e].weight), color);
    }
  }
  for (std::size_t r = 0; r < c.rays.size(); ++r) {
    const auto& v = c.vertices[c.rays[r].vertex];
    const double x = v.x.to_double();
    const double y = v.y.to_double();
    const double dx = static_cast<double>(c.rays[r].direction.x());
    const double dy = static_cast<double>(c.rays[r].direction.y());
    // Run to the panel boundary.
    double t = std::numeric_limits<double>::infinity();
    if (dx > 0) t = std::min(t, (f.box.x1 - x) / dx);
    if (dx < 0) t = std::min(t, (f.box.x0 - x) / dx);
    if (dy > 0) t = std::min(t, (f.box.y1 - y) / dy);
    if (dy < 0) t = std::min(t, (f.box.y0 - y) / dy);
    t = std::max(t, 0.0);
    const std::string& color =
        r < layer.ray_colors.size() && !layer.ray_colors[r].empty() ? layer.ray_colors[r] : layer.color;
    const double w = static_cast<double>(c.rays[r].weight);
    line(out, f, x, y, x + t * dx, y + t * dy, color, 1.0 + w);
    if (layer.weight_labels && c.rays[r].weight > 1) {
      label(out, f.px(x + t * dx / 2) + 3, f.py(y + t * dy / 2) - 3, std::to_string(c.rays[r].weight), color);
    }
  }
  for (const auto& v : c.vertices) {
    out << "  <circle cx=\"" << fmt(f.px(v.x.to_double())) << "\" cy=\"" << fmt(f.py(v.y.to_double()))
        << "\" r=\"2.500\" fill=\"" << layer.color << "\"/>\n";
  }
}

void draw_points(std::ostream& out, const Frame& f, const PointLayer& layer) {
  for (const auto& [p, text] : layer.points) {
    const double x = f.px(p.x.to_double());
    const double y = f.py(p.y.to_double());
    out << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"4.500\" fill=\"" << layer.color << "\"/>\n";
    if (!text.empty()) label(out, x + 6, y - 6, text, layer.color);
  }
}

void draw_complex(std::ostream& out, const Frame& f, const ComplexLayer& layer) {
  for (const auto& [a, b] : layer.complex.segment_set()) {
    line(out, f, static_cast<double>(a.x), static_cast<double>(a.y), static_cast<double>(b.x),
         static_cast<double>(b.y), layer.color, 1.5);
  }
  for (const auto& p : layer.complex.point_set()) {
    out << "  <circle cx=\"" << fmt(f.px(static_cast<double>(p.x))) << "\" cy=\""
        << fmt(f.py(static_cast<double>(p.y))) << "\" r=\"3.000\" fill=\"" << layer.color << "\"/>\n";
  }
}

void draw_loop(std::ostream& out, const Frame& f, const LoopLayer& layer) {
  if (layer.loop.empty()) return;
  out << "  <polygon points=\"";
  for (std::size_t k = 0; k < layer.loop.size(); ++k) {
    if (k > 0) out << ' ';
    out << fmt(f.px(layer.loop[k].x.to_double())) << ',' << fmt(f.py(layer.loop[k].y.to_double()));
  }
  out << "\" fill=\"none\" stroke=\"" << layer.color << "\" stroke-width=\"1.000\" stroke-dasharray=\"4 3\"/>\n";
}

CurveLayer curve_layer(const TropicalCurve& curve) {
  CurveLayer layer;
  layer.curve = curve;
  return layer;
}

}  // namespace

std::string render_svg(const Scene& scene) {
  std::ostringstream out;
  const double cell = scene.panel_size + 2 * kPad;
  const double width = std::max(1.0, cell * static_cast<double>(scene.panels.size()));
  const double height = scene.panels.empty() ? 1.0 : cell + kTitle;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  for (std::size_t k = 0; k < scene.panels.size(); ++k) {
    const auto& panel = scene.panels[k];
    Frame f;
    f.box = feature_box(panel);
    if (f.box.empty()) f.box = Box{-1, -1, 1, 1};
    const double margin = has_rays(panel) ? scene.ray_margin : 0.25;
    f.box.x0 -= margin;
    f.box.y0 -= margin;
    f.box.x1 += margin;
    f.box.y1 += margin;
    // Square viewport so angles are not distorted.
    const double side = std::max(f.box.x1 - f.box.x0, f.box.y1 - f.box.y0);
    const double cx = (f.box.x0 + f.box.x1) / 2;
    const double cy = (f.box.y0 + f.box.y1) / 2;
    f.box = Box{cx - side / 2, cy - side / 2, cx + side / 2, cy + side / 2};
    f.size = scene.panel_size;
    f.scale = scene.panel_size / side;
    f.left = cell * static_cast<double>(k) + kPad;
    f.top = kTitle + kPad;

    out << " <g id=\"panel" << k << "\">\n";
    out << "  <rect x=\"" << fmt(f.left) << "\" y=\"" << fmt(f.top) << "\" width=\"" << fmt(f.size) << "\" height=\""
        << fmt(f.size) << "\" fill=\"none\" stroke=\"#dddddd\"/>\n";
    if (!panel.title.empty()) label(out, f.left, kTitle, panel.title, "#000000");
    for (const auto& layer : panel.layers) {
      if (const auto* c = std::get_if<CurveLayer>(&layer)) draw_curve(out, f, *c);
      else if (const auto* p = std::get_if<PointLayer>(&layer)) draw_points(out, f, *p);
      else if (const auto* n = std::get_if<ComplexLayer>(&layer)) draw_complex(out, f, *n);
      else if (const auto* l = std::get_if<LoopLayer>(&layer)) draw_loop(out, f, *l);
    }
    out << " </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

Scene curve_scene(const TropicalCurve& curve) {
  Scene s;
  s.panels.push_back({"curve", {curve_layer(curve)}});
  return s;
}

Scene newton_scene(const TropicalCurve& curve, const NewtonComplex& complex) {
  Scene s;
  s.panels.push_back({"curve", {curve_layer(curve)}});
  s.panels.push_back({"Newton complex", {ComplexLayer{complex}}});
  return s;
}

Scene intersection_scene(const TropicalCurve& c1, const TropicalCurve& c2, const Divisor& d) {
  PointLayer points;
  for (const auto& [p, m] : d.terms()) points.points.emplace_back(p, std::to_string(m));
  CurveLayer second = curve_layer(c2);
  second.color = "#e67e22";
  Scene s;
  s.panels.push_back({"stable intersection", {curve_layer(c1), second, points}});
  return s;
}

Scene bunch_scene(const BunchGraph& b) {
  CurveLayer layer = curve_layer(b.curve);
  for (auto c : b.edge_class) layer.edge_colors.push_back(c == EdgeClass::tentacle ? "#8e44ad" : "#1f4e79");
  layer.ray_colors.assign(b.curve.rays.size(), "#95a5a6");
  Scene s;
  s.panels.push_back({"bunch: cycle edges, tentacles, rays", {layer}});
  return s;
}

}  // namespace tropjac::svg
