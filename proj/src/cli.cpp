#include "tropjac/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "tropjac/bunch.hpp"
#include "tropjac/error.hpp"
#include "tropjac/intersection.hpp"
#include "tropjac/io.hpp"
#include "tropjac/jacobian.hpp"
#include "tropjac/newton.hpp"
#include "tropjac/param_space.hpp"
#include "tropjac/poly.hpp"
#include "tropjac/svg.hpp"

namespace tropjac::cli {

namespace {

using io::json;

constexpr const char* kGrammar = R"(Polynomial grammar:
  poly   := term ('+' term)*
  term   := factor ('*' factor)*
  factor := number | '(' number ')' | x | y | x^k | y^k
  number := [-]digits [/digits | .digits]
Terms multiply tropically (coefficients and exponents add); '+' is the
tropical sum. Example: "0 + x + y + (-1)*x*y".)";

struct Options {
  bool json = false;
  std::string curve;
  std::string second;
  std::string third;
  std::string svg;
  std::string output;
  std::vector<std::int64_t> degrees;
  std::vector<std::string> direction;
  std::size_t steps = 100;
  std::uint64_t seed = 1;
  std::string convention = "max";
  std::string expr;
  bool newton = false;
  bool bunch = false;
  std::string overlay;
  double margin = 1.0;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

void emit(std::ostream& out, const Options& o, const std::string& text) {
  if (o.output.empty()) out << text;
  else write_file(o.output, text);
}

std::string residues_text(const std::vector<Rational>& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].str();
  return s + ")";
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto curve = io::read_curve(o.curve);
  const auto report = validate(curve);
  if (o.json) {
    json residuals = json::array();
    for (const auto& r : report.residuals) residuals.push_back(io::to_json(r));
    out << io::dump({{"balanced", report.balanced},
                     {"residuals", residuals},
                     {"embedding_issues", report.embedding_issues},
                     {"valid", report.valid()}});
  } else {
    out << "balanced: " << (report.balanced ? "true" : "false") << "\n";
    for (std::size_t v = 0; v < report.residuals.size(); ++v) {
      if (!report.residuals[v].is_zero()) out << "  vertex " << v << " residual " << to_string(report.residuals[v]) << "\n";
    }
    for (const auto& issue : report.embedding_issues) out << "embedding: " << issue << "\n";
  }
  return report.valid() ? kOk : kRefused;
}

int cmd_newton(const Options& o, std::ostream& out) {
  const auto curve = io::read_curve(o.curve);
  const auto complex = newton_complex(curve);
  const auto polygon = LatticePolygon::hull(complex.dual_vertices);
  std::vector<std::int64_t> mult;
  for (std::size_t v = 0; v < curve.vertices.size(); ++v) mult.push_back(vertex_multiplicity(curve, v));
  if (!o.svg.empty()) write_file(o.svg, svg::render_svg(svg::newton_scene(curve, complex)));
  if (o.json) {
    out << io::dump({{"complex", io::to_json(complex)},
                     {"polygon", io::to_json(polygon)},
                     {"area", io::to_json(polygon.area())},
                     {"multiplicities", mult}});
    return kOk;
  }
  out << "Newton polygon:";
  for (const auto& v : polygon.vertices()) out << " " << to_string(v);
  out << "\narea: " << polygon.area().str() << "\n";
  out << "complex points: " << complex.point_set().size() << ", segments: " << complex.segment_set().size() << "\n";
  for (std::size_t v = 0; v < mult.size(); ++v) {
    out << "  vertex " << v << " " << to_string(curve.vertices[v]) << " multiplicity " << mult[v] << "\n";
  }
  return kOk;
}

void print_divisor(std::ostream& out, const Options& o, const Divisor& d) {
  if (o.json) {
    out << io::dump({{"divisor", io::to_json(d)}, {"degree", d.degree()}});
    return;
  }
  for (const auto& [p, m] : d.terms()) out << "  " << m << " * " << to_string(p) << "\n";
  out << "degree: " << d.degree() << "\n";
}

int cmd_intersect(const Options& o, std::ostream& out) {
  const auto c1 = io::read_curve(o.curve);
  const auto c2 = io::read_curve(o.second);
  Divisor d;
  if (!o.direction.empty()) {
    const RationalVector v{io::rational_from_json(o.direction[0], "--direction[0]"),
                           io::rational_from_json(o.direction[1], "--direction[1]")};
    d = perturbation_oracle(c1, c2, v);
  } else {
    d = stable_intersection(c1, c2);
  }
  if (!o.svg.empty()) write_file(o.svg, svg::render_svg(svg::intersection_scene(c1, c2, d)));
  print_divisor(out, o, d);
  return kOk;
}

LatticePolygon projective(std::int64_t c) {
  if (c < 0) throw InputError("--deg: degrees must be non-negative");
  return LatticePolygon::hull({{0, 0}, {c, 0}, {0, c}});
}

int cmd_bezout(const Options& o, std::ostream& out) {
  LatticePolygon p;
  LatticePolygon q;
  if (!o.degrees.empty()) {
    if (!o.curve.empty()) throw InputError("give either --deg or two curve files, not both");
    p = projective(o.degrees[0]);
    q = projective(o.degrees[1]);
  } else {
    if (o.curve.empty() || o.second.empty()) throw InputError("bezout needs --deg c d or two curve files");
    p = newton_polygon(io::read_curve(o.curve));
    q = newton_polygon(io::read_curve(o.second));
  }
  const auto degree = bezout_degree(p, q);
  if (o.json) out << io::dump({{"degree", degree}});
  else out << degree << "\n";
  return kOk;
}

int cmd_bunch(const Options& o, std::ostream& out) {
  const auto curve = io::read_curve(o.curve);
  const auto b = bunch(curve);
  const auto verdict = bouquet_structure(b);
  if (!o.svg.empty()) write_file(o.svg, svg::render_svg(svg::bunch_scene(b)));
  const auto* bouquet = std::get_if<BouquetStructure>(&verdict);
  if (o.json) {
    json classes = json::array();
    for (auto c : b.edge_class) classes.push_back(c == EdgeClass::tentacle ? "tentacle" : "cycle");
    json j = {{"edges", classes}, {"rays", curve.rays.size()}, {"genus", b.genus()}, {"bouquet", bouquet != nullptr}};
    if (bouquet) {
      json cycles = json::array();
      for (const auto& c : bouquet->cycles) cycles.push_back({{"vertices", c.vertices}, {"edges", c.edges}});
      j["cycles"] = cycles;
    } else {
      j["reason"] = std::get<NotABouquet>(verdict).reason;
    }
    out << io::dump(j);
    return kOk;
  }
  for (std::size_t e = 0; e < b.edge_class.size(); ++e) {
    out << "edge " << e << ": " << (b.edge_class[e] == EdgeClass::tentacle ? "tentacle" : "cycle") << "\n";
  }
  out << "rays: " << curve.rays.size() << "\n";
  out << "genus: " << b.genus() << "\n";
  if (bouquet) out << "bouquet: true\n";
  else out << "bouquet: false (" << std::get<NotABouquet>(verdict).reason << ")\n";
  return kOk;
}

int cmd_jacobi(const Options& o, std::ostream& out) {
  const auto curve = io::read_curve(o.curve);
  const auto system = parametrize_cycles(curve);
  std::optional<AbelCoordinate> coord;
  if (!o.second.empty()) coord = abel_coordinate(io::read_divisor(o.second), system);
  if (o.json) {
    json lengths = json::array();
    for (const auto& l : system.lengths()) lengths.push_back(io::to_json(l));
    json j = {{"genus", system.genus()}, {"lengths", lengths}};
    if (coord) j["abel"] = io::to_json(*coord);
    out << io::dump(j);
    return kOk;
  }
  out << "genus: " << system.genus() << "\n";
  out << "cycle lengths: " << residues_text(system.lengths()) << "\n";
  if (coord) out << "abel coordinate: " << to_string(*coord) << "\n";
  return kOk;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const auto curve = io::read_curve(o.curve);
  const auto d1 = io::read_divisor(o.second);
  const auto d2 = io::read_divisor(o.third);
  const bool same = linearly_equivalent(d1, d2, curve);
  const auto system = parametrize_cycles(curve);
  const auto a1 = abel_coordinate(d1, system);
  const auto a2 = abel_coordinate(d2, system);
  std::vector<Rational> diff;
  for (std::size_t i = 0; i < a1.residues.size(); ++i) diff.push_back(mod(a1.residues[i] - a2.residues[i], a1.lengths[i]));
  if (o.json) {
    json jd = json::array();
    for (const auto& r : diff) jd.push_back(io::to_json(r));
    out << io::dump({{"equivalent", same},
                     {"first", io::to_json(a1)},
                     {"second", io::to_json(a2)},
                     {"difference", jd},
                     {"degree_difference", a1.degree - a2.degree}});
    return kOk;
  }
  out << "equivalent: " << (same ? "true" : "false") << "\n";
  out << "difference: " << residues_text(diff) << ", degree difference " << (a1.degree - a2.degree) << "\n";
  return kOk;
}

int cmd_sigma(const Options& o, std::ostream& out) {
  const auto host = io::read_curve(o.curve);
  const auto mobile = io::read_curve(o.second);
  const auto system = parametrize_cycles(host);
  const auto s = sigma(system, mobile);
  if (o.json) out << io::dump(io::to_json(s));
  else out << "sigma: " << to_string(s) << "\n";
  return kOk;
}

int cmd_walk(const Options& o, std::ostream& out) {
  const auto host = io::read_curve(o.curve);
  const auto mobile = io::read_curve(o.second);
  const auto system = parametrize_cycles(host);
  PerturbOptions options;
  if (!host.vertices.empty()) {
    RationalPoint lo = host.vertices.front();
    RationalPoint hi = lo;
    for (const auto& v : host.vertices) {
      lo = {min(lo.x, v.x), min(lo.y, v.y)};
      hi = {max(hi.x, v.x), max(hi.y, v.y)};
    }
    options.anchor_box = std::pair{lo - RationalPoint(1, 1), hi + RationalPoint(1, 1)};
  }
  std::string text;
  for (const auto& record : walk_sigma(system, mobile, o.steps, o.seed, options)) {
    json j = {{"step", record.step},
              {"params", io::to_json(record.params)},
              {"sigma", io::to_json(record.sigma)},
              {"transversal", record.transversal}};
    text += j.dump() + "\n";
  }
  emit(out, o, text);
  return kOk;
}

Semiring semiring_of(const std::string& convention) {
  if (convention == "max") return Semiring::max_plus;
  if (convention == "min") return Semiring::min_plus;
  throw InputError("--convention must be 'max' or 'min'");
}

int cmd_from_poly(const Options& o, std::ostream& out) {
  const auto f = parse_polynomial(o.expr, semiring_of(o.convention));
  emit(out, o, io::dump(io::to_json(corner_locus(f))));
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const auto curve = io::read_curve(o.curve);
  svg::Scene scene;
  if (o.newton) scene = svg::newton_scene(curve, newton_complex(curve));
  else if (o.bunch) scene = svg::bunch_scene(bunch(curve));
  else if (!o.overlay.empty()) {
    const auto other = io::read_curve(o.overlay);
    scene = svg::intersection_scene(curve, other, stable_intersection(curve, other));
  } else {
    scene = svg::curve_scene(curve);
  }
  scene.ray_margin = o.margin;
  emit(out, o, svg::render_svg(scene));
  return kOk;
}

CLI::App* add_render(CLI::App& parent, const char* name, Options& o) {
  auto* cmd = parent.add_subcommand(name, "Render a curve as SVG");
  cmd->add_option("curve", o.curve, "Curve file")->required();
  cmd->add_option("-o,--output", o.output, "Write SVG here instead of standard output");
  auto* newton = cmd->add_flag("--newton", o.newton, "Curve and Newton complex side by side");
  auto* bunch = cmd->add_flag("--bunch", o.bunch, "Color cycle edges, tentacles and rays");
  auto* overlay = cmd->add_option("--intersect", o.overlay, "Overlay a second curve and the stable intersection");
  newton->excludes(bunch)->excludes(overlay);
  bunch->excludes(overlay);
  cmd->add_option("--margin", o.margin, "Ray extension beyond the finite features, in data units");
  return cmd;
}

CLI::App* add_from_poly(CLI::App& parent, const char* name, Options& o) {
  auto* cmd = parent.add_subcommand(name, "Corner locus of a tropical polynomial");
  cmd->add_option("expr", o.expr, "Polynomial text")->required();
  cmd->add_option("--convention", o.convention, "max (default) or min")->check(CLI::IsMember({"max", "min"}));
  cmd->add_option("-o,--output", o.output, "Write the curve here instead of standard output");
  cmd->footer(kGrammar);
  return cmd;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact toolkit for tropical plane curves", "tropjac"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");

  auto* validate = app.add_subcommand("validate", "Check balancing and embedding");
  validate->add_option("curve", o.curve, "Curve file")->required();

  auto* newton = app.add_subcommand("newton", "Newton complex, polygon and vertex multiplicities");
  newton->add_option("curve", o.curve, "Curve file")->required();
  newton->add_option("--svg", o.svg, "Also write curve and complex as SVG");

  auto* intersect = app.add_subcommand("intersect", "Stable intersection divisor");
  intersect->add_option("first", o.curve, "Curve file")->required();
  intersect->add_option("second", o.second, "Curve file")->required();
  intersect->add_option("--direction", o.direction, "Use the perturbation limit along this direction")->expected(2);
  intersect->add_option("--svg", o.svg, "Also write an SVG overlay");

  auto* bezout = app.add_subcommand("bezout", "Mixed area of two Newton polygons");
  bezout->add_option("--deg", o.degrees, "Degrees of two projective curves")->expected(2);
  bezout->add_option("first", o.curve, "Curve file");
  bezout->add_option("second", o.second, "Curve file");

  auto* bunch_cmd = app.add_subcommand("bunch", "Edge classes, genus and bouquet verdict");
  bunch_cmd->add_option("curve", o.curve, "Curve file")->required();
  bunch_cmd->add_option("--svg", o.svg, "Also write a colored SVG");

  auto* jacobi = app.add_subcommand("jacobi", "Cycle lengths and Abel coordinates");
  jacobi->add_option("curve", o.curve, "Curve file")->required();
  jacobi->add_option("divisor", o.second, "Divisor file");

  auto* equiv = app.add_subcommand("equiv", "Decide linear equivalence of two divisors");
  equiv->add_option("curve", o.curve, "Curve file")->required();
  equiv->add_option("first", o.second, "Divisor file")->required();
  equiv->add_option("second", o.third, "Divisor file")->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "Abel coordinate of the stable intersection with a mobile curve");
  sigma_cmd->add_option("host", o.curve, "Host curve file")->required();
  sigma_cmd->add_option("mobile", o.second, "Mobile curve file")->required();

  auto* walk = app.add_subcommand("walk", "Random walk of the mobile curve, tracing sigma as JSON lines");
  walk->add_option("host", o.curve, "Host curve file")->required();
  walk->add_option("mobile", o.second, "Mobile curve file")->required();
  walk->add_option("--steps", o.steps, "Number of perturbation steps");
  walk->add_option("--seed", o.seed, "Random seed");
  walk->add_option("-o,--output", o.output, "Write the trace here instead of standard output");

  auto* from_poly = add_from_poly(app, "from-poly", o);
  auto* render = add_render(app, "render", o);

  auto* curve_group = app.add_subcommand("curve", "Aliases: curve from-poly, curve to-svg");
  curve_group->require_subcommand(1);
  auto* from_poly_alias = add_from_poly(*curve_group, "from-poly", o);
  auto* render_alias = add_render(*curve_group, "to-svg", o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help lands here too when requested on a subcommand.
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (newton->parsed()) return cmd_newton(o, out);
    if (intersect->parsed()) return cmd_intersect(o, out);
    if (bezout->parsed()) return cmd_bezout(o, out);
    if (bunch_cmd->parsed()) return cmd_bunch(o, out);
    if (jacobi->parsed()) return cmd_jacobi(o, out);
    if (equiv->parsed()) return cmd_equiv(o, out);
    if (sigma_cmd->parsed()) return cmd_sigma(o, out);
    if (walk->parsed()) return cmd_walk(o, out);
    if (from_poly->parsed() || from_poly_alias->parsed()) return cmd_from_poly(o, out);
    if (render->parsed() || render_alias->parsed()) return cmd_render(o, out);
  } catch (const UnsupportedHypotheses& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  err << "error: no subcommand\n";
  return kBadInput;
}

}  // namespace tropjac::cli
