// Command-line front end: construct curves from JSON specs, sample them to
// CSV/JSON, render SVG, run fairness analysis and transition fitting.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spiralis/analysis.hpp"
#include "spiralis/curve_spec.hpp"
#include "spiralis/io.hpp"
#include "spiralis/transition.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot write '" + path + "'");
  out << content;
  if (!out.flush()) throw IoFailure("write failed for '" + path + "'");
}

spiralis::CurveSpecDocument load_spec(const std::string& spec_path,
                                      const std::string& inline_kind,
                                      const std::string& inline_params,
                                      const std::vector<double>& inline_domain,
                                      const std::vector<double>& inline_pose,
                                      int inline_samples) {
  json j;
  if (!spec_path.empty()) {
    try {
      j = json::parse(read_file(spec_path));
    } catch (const json::parse_error& e) {
      throw spiralis::InvalidParameter(std::string("spec is not valid JSON: ") +
                                       e.what());
    }
  } else if (!inline_kind.empty()) {
    j = json::object();
    j["version"] = 1;
    j["kind"] = inline_kind;
    if (!inline_params.empty()) {
      try {
        j["params"] = json::parse(inline_params);
      } catch (const json::parse_error& e) {
        throw spiralis::InvalidParameter(std::string("--params is not valid JSON: ") +
                                         e.what());
      }
    }
    if (!inline_domain.empty()) j["domain"] = inline_domain;
    if (!inline_pose.empty())
      j["pose"] = {{"x", inline_pose[0]},
                   {"y", inline_pose[1]},
                   {"heading", inline_pose[2]}};
    if (inline_samples > 0) j["samples"] = inline_samples;
  } else {
    throw spiralis::InvalidParameter("give --spec <file> or --kind plus inline flags");
  }
  return spiralis::parse_curve_spec(j);
}

spiralis::CurveSamples sample_built(const spiralis::BuiltCurve& built, int n,
                                    double tol) {
  return std::visit(
      [&](const auto& curve) -> spiralis::CurveSamples {
        using T = std::decay_t<decltype(curve)>;
        if constexpr (std::is_same_v<T, spiralis::IntrinsicCurve>) {
          return curve.sample(n, tol);
        } else if constexpr (std::is_same_v<T, spiralis::PolarSpiral>) {
          return spiralis::samples_from_polyline(spiralis::polar_sample(curve, n));
        } else if constexpr (std::is_same_v<T, spiralis::PolylineSpiral>) {
          return spiralis::samples_from_polyline(curve);
        } else {
          return spiralis::samples_from_arcchain(curve);
        }
      },
      built);
}

std::string render_built(const spiralis::BuiltCurve& built, int n, double tol,
                         int width_px) {
  return std::visit(
      [&](const auto& curve) -> std::string {
        using T = std::decay_t<decltype(curve)>;
        if constexpr (std::is_same_v<T, spiralis::IntrinsicCurve>) {
          const auto samples = curve.sample(n, tol);
          std::vector<spiralis::Vec2> pts;
          pts.reserve(samples.rows.size());
          for (const auto& r : samples.rows) pts.push_back({r.x, r.y});
          return spiralis::to_svg_polyline(pts, width_px);
        } else if constexpr (std::is_same_v<T, spiralis::PolarSpiral>) {
          return spiralis::to_svg_polyline(spiralis::polar_sample(curve, n).vertices,
                                           width_px);
        } else if constexpr (std::is_same_v<T, spiralis::PolylineSpiral>) {
          return spiralis::to_svg_polyline(curve.vertices, width_px);
        } else {
          return spiralis::to_svg_arcs(curve, width_px);
        }
      },
      built);
}

const char* direction_name(spiralis::MonotoneDirection d) {
  switch (d) {
    case spiralis::MonotoneDirection::Increasing: return "Increasing";
    case spiralis::MonotoneDirection::Decreasing: return "Decreasing";
    case spiralis::MonotoneDirection::Constant: return "Constant";
    case spiralis::MonotoneDirection::None: return "None";
  }
  return "None";
}

ordered_json analyze_built(const spiralis::BuiltCurve& built,
                           const spiralis::CurveSpecDocument& doc, double tol) {
  const auto samples = sample_built(built, std::max(doc.samples, 200), tol);
  const auto mono = spiralis::check_monotone_curvature(samples);

  ordered_json out;
  out["version"] = 1;
  ordered_json mono_json;
  mono_json["monotone"] = mono.monotone;
  mono_json["direction"] = direction_name(mono.direction);
  if (mono.first_violation_s)
    mono_json["first_violation_s"] = *mono.first_violation_s;
  else
    mono_json["first_violation_s"] = nullptr;
  mono_json["max_violation"] = mono.max_violation;
  out["monotonicity"] = std::move(mono_json);

  const auto* curve = std::get_if<spiralis::IntrinsicCurve>(&built);
  if (!curve) {
    out["lcg"] = nullptr;
    out["lcg_reason"] = "kind has no smooth radius-of-curvature function";
    out["lac_like"] = false;
    return out;
  }
  try {
    // Keep clear of singular domain ends by default.
    const spiralis::Interval dom = curve->domain();
    const spiralis::Interval stretch{dom.lo + 0.1 * dom.length(),
                                     dom.lo + 0.9 * dom.length()};
    const auto points = spiralis::compute_lcg(*curve, std::max(doc.samples, 32), stretch);
    const auto fit = spiralis::fit_lcg_line(points);
    out["lcg"] = {{"slope", fit.slope},
                  {"intercept", fit.intercept},
                  {"max_residual", fit.max_residual},
                  {"r_squared", fit.r_squared}};
    out["lac_like"] = fit.max_residual < 1e-6;
  } catch (const spiralis::DegenerateRho& e) {
    out["lcg"] = nullptr;
    out["lcg_reason"] = e.what();
    out["lac_like"] = false;
  }
  return out;
}

ordered_json transition_to_json(const spiralis::TransitionResult& result,
                                const std::string& family) {
  ordered_json out;
  out["version"] = 1;
  out["family"] = family;
  out["coefficient"] = result.coefficient;
  out["join_point"] = {{"x", result.join_point.x}, {"y", result.join_point.y}};
  out["join_tangent"] = result.join_tangent;
  out["circle_center"] = {{"x", result.circle_center.x},
                          {"y", result.circle_center.y}};
  out["circle_radius"] = result.circle_radius;
  out["diagnostics"] = {{"curvature_gap", result.diagnostics.curvature_gap},
                        {"tangent_gap", result.diagnostics.tangent_gap},
                        {"position_gap", result.diagnostics.position_gap}};
  out["verified"] = spiralis::verify_g2(result, 1e-8);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar spiral construction, sampling and fairness analysis"};
  app.require_subcommand(1);

  std::string spec_path, inline_kind, inline_params, out_path, format = "csv";
  std::string emit_spec_path;
  std::vector<double> inline_domain, inline_pose;
  int inline_samples = 0;
  int width_px = 800;
  double tol = 1e-10;

  auto add_spec_options = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_path, "curve spec JSON file");
    cmd->add_option("--kind", inline_kind, "curve kind (inline spec)");
    cmd->add_option("--params", inline_params, "kind parameters as a JSON object");
    cmd->add_option("--domain", inline_domain, "parameter domain lo hi")->expected(2);
    cmd->add_option("--pose", inline_pose, "pose x y heading")->expected(3);
    cmd->add_option("--samples", inline_samples, "number of sample rows");
    cmd->add_option("--tol", tol, "numerical tolerance");
  };

  CLI::App* cmd_sample = app.add_subcommand("sample", "sample a curve to CSV or JSON");
  add_spec_options(cmd_sample);
  cmd_sample->add_option("--out", out_path, "output file (default stdout)");
  cmd_sample->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_sample->add_option("--emit-spec", emit_spec_path,
                         "write the normalized spec JSON to this file");

  CLI::App* cmd_render = app.add_subcommand("render", "render a curve to SVG");
  add_spec_options(cmd_render);
  cmd_render->add_option("--out", out_path, "output SVG file")->required();
  cmd_render->add_option("--width", width_px, "image width in pixels");

  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "monotonicity and LCG report as JSON");
  add_spec_options(cmd_analyze);
  cmd_analyze->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* cmd_transition =
      app.add_subcommand("transition", "fit a line-to-circle transition");
  std::string family;
  double tr_m = -1.0, tr_a = 1.0, tr_b = 1.0, tr_c = 2.0;
  double kappa_end = 1.0;
  double arc_budget = 0.0, angle_budget = 0.0;
  cmd_transition->add_option("--family", family, "pseudospiral or superspiral")
      ->required()
      ->check(CLI::IsMember({"pseudospiral", "superspiral"}));
  cmd_transition->add_option("--m", tr_m, "pseudospiral exponent (m < 0)");
  cmd_transition->add_option("--a", tr_a, "superspiral a");
  cmd_transition->add_option("--b", tr_b, "superspiral b");
  cmd_transition->add_option("--c", tr_c, "superspiral c");
  cmd_transition->add_option("--kappa-end", kappa_end, "target end curvature")
      ->required();
  cmd_transition->add_option("--arc", arc_budget, "arc-length budget (pseudospiral)");
  cmd_transition->add_option("--angle", angle_budget,
                             "tangent-angle budget (superspiral)");
  cmd_transition->add_option("--tol", tol, "numerical tolerance");
  cmd_transition->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (*cmd_transition) {
      spiralis::TransitionSpec spec;
      if (family == "pseudospiral") {
        if (!(arc_budget > 0.0))
          throw spiralis::InvalidParameter("pseudospiral transition needs --arc > 0");
        spec.family = spiralis::PseudospiralTransition{tr_m};
        spec.budget = arc_budget;
      } else {
        if (!(angle_budget > 0.0))
          throw spiralis::InvalidParameter("superspiral transition needs --angle > 0");
        spec.family = spiralis::SuperspiralTransition{tr_a, tr_b, tr_c};
        spec.budget = angle_budget;
      }
      spec.target_end_curvature = kappa_end;
      const auto result = spiralis::fit_line_to_circle(spec, tol);
      write_output(out_path, transition_to_json(result, family).dump(2) + "\n");
      return kExitOk;
    }

    const auto doc = load_spec(spec_path, inline_kind, inline_params, inline_domain,
                               inline_pose, inline_samples);
    const auto built = spiralis::build_curve(doc);

    if (*cmd_sample) {
      if (!emit_spec_path.empty())
        write_output(emit_spec_path, spiralis::curve_spec_to_json(doc).dump(2) + "\n");
      const auto samples = sample_built(built, doc.samples, tol);
      if (format == "csv")
        write_output(out_path, spiralis::to_csv(samples));
      else
        write_output(out_path, spiralis::samples_to_json(samples).dump(2) + "\n");
      return kExitOk;
    }
    if (*cmd_render) {
      write_output(out_path, render_built(built, doc.samples, tol, width_px));
      return kExitOk;
    }
    if (*cmd_analyze) {
      write_output(out_path, analyze_built(built, doc, tol).dump(2) + "\n");
      return kExitOk;
    }
    std::cerr << "error: no subcommand\n";
    return kExitValidation;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const spiralis::NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const spiralis::NonFiniteEvaluation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const spiralis::InfeasibleSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const spiralis::InvalidInterval& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const spiralis::Error& e) {
    // Remaining library errors are spec/parameter validation failures.
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
