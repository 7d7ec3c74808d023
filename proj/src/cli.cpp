#include "pbc/cli.hpp"

#include "pbc/construction.hpp"
#include "pbc/fitting.hpp"
#include "pbc/quad.hpp"
#include "pbc/scene.hpp"
#include "pbc/search.hpp"
#include "pbc/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace pbc {

namespace {

const char* const kFooter = R"(Exit codes:
  0  success
  1  verification failed (residual above --tol)
  2  degenerate input (conhyperspherical, dependent subset, ideal or
     non-ordinary center, crossing quadrilateral, ...) or a command
     that does not apply to the scene's geometry or dimension
  3  parse, usage or file error

CSV written by `search` (header row, CRLF line ends, RFC 4180 quoting,
non-finite values written as NA):
  ratio-dependence: trial, seed, dim, status, volume1, volume2, volume3,
    ratio12 (= volume1/volume2), ratio23 (= volume2/volume3),
    ratio_difference (= |ratio12 - ratio23| / max(|ratio12|, |ratio23|)),
    perspectivity_residual (N1 vs N3, relative to the diameter),
    homothety_ratio (N1 -> N3), center1 .. center<dim>, message, n1_points
  cyclic-secondgen: trial, seed, dim, status, witness (0/1), n1_deviation,
    n2_deviation, reconstruction_error, message, n1_points
  n1_points lists the coordinates of N1, points separated by ';'.
  status is one of ok, collapsed, degenerate, not-convex, not-ordinary,
    conjugate-at-infinity, not-homothetic.)";

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError: return kExitParseError;
    case ErrorCode::NotHomothetic: return kExitVerificationFailed;
    default: return kExitDegenerate;
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt(const Vector<double>& v) {
  std::string s = "(";
  for (Eigen::Index k = 0; k < v.size(); ++k) s += (k ? ", " : "") + fmt(v(k));
  return s + ")";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw Error(ErrorCode::ValidationError, "cannot write '" + path + "'");
}

struct Options {
  std::string scene;
  int steps{3};
  std::string check;
  std::uint64_t trials{100};
  std::uint64_t seed{1};
  std::string mode;
  std::string out;
  double tol{tol::kVerify};
  int dim{3};
  unsigned threads{0};
  bool lines{false};
  std::string save_witness;
};

int cmd_iterate(const Options& o, Direction dir, std::ostream& out, std::ostream& err) {
  const Configuration c = load_scene(o.scene);
  const auto result = iterate(c, o.steps, dir);
  for (const auto& g : result.generations) {
    if (o.out.empty()) {
      out << "# generation " << g.generation << "\n" << format_scene(g) << "\n";
    } else {
      const std::string path = o.out + ".gen" + std::to_string(g.generation) + ".scn";
      save_scene(path, g);
      out << path << "\n";
    }
  }
  if (!result.completed()) {
    err << "stopped at step " << *result.failed_step << " (" << to_string(result.status)
        << "): " << result.message << "\n";
    return kExitDegenerate;
  }
  return kExitOk;
}

double relative_vertex_error(const Configuration& a, const Configuration& b) {
  double worst = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    worst = std::max(worst, distance(a.geometry, a.points.col(i), b.points.col(i)));
  return worst / diameter(a);
}

int verdict(std::ostream& out, double value, double tolerance) {
  const bool pass = value <= tolerance;
  out << (pass ? "PASS" : "FAIL") << " (tolerance " << fmt(tolerance) << ")\n";
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Configuration c = load_scene(o.scene);
  if (o.check == "perspectivity") {
    const Configuration n3 = next_generation(next_generation(c));
    const auto fit = perspectivity(c, n3);
    out << "center kind: " << to_string(fit.kind) << "\n";
    out << "center: " << fmt(fit.center) << "\n";
    out << "max line residual: " << fmt(fit.max_line_residual) << "\n";
    out << "relative residual: " << fmt(fit.max_line_residual / fit.scale) << "\n";
    return verdict(out, fit.max_line_residual / fit.scale, o.tol);
  }
  if (o.check == "homothety") {
    const auto w = isoptic_point(c, o.tol);
    out << "odd center: " << fmt(w.point) << " ratio " << fmt(w.odd_ratio) << "\n";
    out << "even center: " << fmt(w.even_point) << " ratio " << fmt(w.even_ratio) << "\n";
    out << "center agreement: " << fmt(w.agreement) << "\n";
    return verdict(out, w.agreement, o.tol);
  }
  if (o.check == "involution") {
    double worst = 0;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      const PointSet<double> simplex = euclid::omit_cyclic(c.points, i);
      const Vector<double> once = isogonal_conjugate(c.geometry, simplex, c.points.col(i));
      const Vector<double> twice = isogonal_conjugate(c.geometry, simplex, once);
      const double e = distance(c.geometry, twice, c.points.col(i));
      out << "V" << i + 1 << ": " << fmt(e) << "\n";
      worst = std::max(worst, e);
    }
    out << "relative residual: " << fmt(worst / diameter(c)) << "\n";
    return verdict(out, worst / diameter(c), o.tol);
  }
  if (o.check == "reverse") {
    const Configuration back = prev_generation(next_generation(c));
    const double e = relative_vertex_error(c, back);
    out << "relative residual: " << fmt(e) << "\n";
    return verdict(out, e, o.tol);
  }
  if (o.check == "ratio-identity") {
    const auto f = ratio_formulas(quad_angles(c));
    const double constructed = constructed_area_ratio(c);
    const double size = std::max({std::abs(f[0]), std::abs(f[1]), std::abs(f[2])});
    double spread = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) spread = std::max(spread, std::abs(f[a] - f[b]) / size);
    const double mismatch = std::abs(std::abs(f[0]) - std::abs(constructed)) / std::abs(constructed);
    out << "formulas: " << fmt(f[0]) << " " << fmt(f[1]) << " " << fmt(f[2]) << "\n";
    out << "constructed: " << fmt(constructed) << "\n";
    out << "formula spread: " << fmt(spread) << "\n";
    out << "construction mismatch: " << fmt(mismatch) << "\n";
    return verdict(out, std::max(spread, mismatch), o.tol);
  }
  throw CLI::ValidationError("--check", "unknown check '" + o.check + "'");
}

int cmd_isoptic(const Options& o, std::ostream& out) {
  const Configuration c = load_scene(o.scene);
  const auto w = isoptic_point(c, o.tol);
  out << "W: " << fmt(w.point) << "\n";
  out << "even-pair center: " << fmt(w.even_point) << "\n";
  out << "agreement: " << fmt(w.agreement) << "\n";
  out << "odd ratio: " << fmt(w.odd_ratio) << "\n";
  out << "even ratio: " << fmt(w.even_ratio) << "\n";
  out << "|P1|/|P3|: " << fmt(w.volume_ratio) << "\n";
  out << "converges: " << (w.forward_converges ? "forward" : "reverse") << "\n";
  out << "limit distance: " << fmt(w.limit_distance) << " after " << w.limit_steps << " steps\n";
  return w.consistent(o.tol) ? kExitOk : kExitVerificationFailed;
}

int cmd_ratio(const Options& o, std::ostream& out, std::ostream& err) {
  const Configuration c = load_scene(o.scene);
  const auto f = ratio_formulas(quad_angles(c));
  out << "cot expression 1: " << fmt(f[0]) << "\n";
  out << "cot expression 2: " << fmt(f[1]) << "\n";
  out << "cot expression 3: " << fmt(f[2]) << "\n";
  double constructed = 0;
  try {
    constructed = constructed_area_ratio(c);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Conhyperspherical) throw;
    out << "constructed: collapsed (" << e.what() << ")\n";
    err << "the configuration is cyclic; the next generation is a single point\n";
    return kExitDegenerate;
  }
  out << "constructed: " << fmt(constructed) << "\n";
  const double mismatch = std::abs(std::abs(f[0]) - std::abs(constructed)) / std::abs(constructed);
  out << "relative mismatch: " << fmt(mismatch) << "\n";
  return mismatch <= o.tol ? kExitOk : kExitVerificationFailed;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  SearchOptions s;
  const auto mode = parse_search_mode(o.mode);
  if (!mode) throw CLI::ValidationError("--mode", "unknown mode '" + o.mode + "'");
  s.mode = *mode;
  s.dim = o.dim;
  s.trials = o.trials;
  s.seed = o.seed;
  s.threads = o.threads;
  s.tolerance = o.tol;
  const auto result = run_search(s);

  std::ostringstream csv;
  write_csv(csv, result);
  if (o.out.empty())
    out << csv.str();
  else
    write_text(o.out, csv.str());

  const auto ok = std::count_if(result.records.begin(), result.records.end(),
                                [](const ExperimentRecord& r) { return r.status == "ok"; });
  err << result.records.size() << " trials, " << ok << " ok";
  if (s.mode == SearchMode::CyclicSecondGen) err << ", " << result.witnesses << " witnesses";
  if (result.best) {
    const auto& best = result.records[*result.best];
    if (s.mode == SearchMode::RatioDependence)
      err << ", largest ratio difference " << fmt(best.ratio_difference) << " at trial " << best.trial;
    else
      err << ", first witness at trial " << best.trial;
    if (!o.save_witness.empty()) save_scene(o.save_witness, best.first);
  }
  err << "\n";
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream& err) {
  const Configuration c = load_scene(o.scene);
  const auto result = iterate(c, o.steps, Direction::Forward);
  svg::RenderOptions opts;
  opts.perspectivity_lines = o.lines;
  const std::string text = svg::render_svg(result.generations, opts);
  if (o.out.empty())
    out << text;
  else
    write_text(o.out, text);
  if (!result.completed()) {
    err << "rendered " << result.generations.size() << " generations; step " << *result.failed_step
        << " failed: " << result.message << "\n";
    return kExitDegenerate;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iterated perpendicular bisector construction in Euclidean, spherical and hyperbolic space",
               "pbc"};
  app.footer(kFooter);
  app.require_subcommand(1);
  Options o;

  auto scene = [&](CLI::App* sub) { sub->add_option("--scene", o.scene, "scene file")->required(); };
  auto tolerance = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "verification tolerance, relative to the diameter")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  auto* iterate_cmd = app.add_subcommand("iterate", "write generations N(1) .. N(1+K)");
  auto* reverse_cmd = app.add_subcommand("reverse", "write generations N(1) .. N(1-K) by isogonal conjugation");
  for (auto* sub : {iterate_cmd, reverse_cmd}) {
    scene(sub);
    sub->add_option("--steps", o.steps, "number of steps")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_option("--out", o.out, "write PREFIX.gen<k>.scn files instead of printing");
  }

  auto* verify_cmd = app.add_subcommand("verify", "run a named check and print residuals");
  scene(verify_cmd);
  verify_cmd->add_option("--check", o.check, "check to run")
      ->required()
      ->check(CLI::IsMember({"perspectivity", "homothety", "involution", "reverse", "ratio-identity"}));
  tolerance(verify_cmd);

  auto* isoptic_cmd = app.add_subcommand("isoptic", "isoptic point W with diagnostics (Euclidean)");
  scene(isoptic_cmd);
  tolerance(isoptic_cmd);

  auto* ratio_cmd = app.add_subcommand("ratio", "cotangent area ratios of a quadrilateral");
  scene(ratio_cmd);
  tolerance(ratio_cmd);

  auto* search_cmd = app.add_subcommand("search", "Monte Carlo search; writes CSV");
  search_cmd->add_option("--mode", o.mode, "ratio-dependence or cyclic-secondgen")
      ->required()
      ->check(CLI::IsMember({"ratio-dependence", "cyclic-secondgen"}));
  search_cmd->add_option("--trials", o.trials, "number of trials")->capture_default_str();
  search_cmd->add_option("--seed", o.seed, "base seed")->capture_default_str();
  search_cmd->add_option("--dim", o.dim, "dimension")->capture_default_str()->check(CLI::Range(2, 8));
  search_cmd->add_option("--threads", o.threads, "worker threads (0: all cores)")->capture_default_str();
  search_cmd->add_option("--out", o.out, "CSV path (default: standard output)");
  search_cmd->add_option("--save-witness", o.save_witness,
                         "write N(1) of the first witness or of the largest ratio difference as a scene");
  tolerance(search_cmd);

  auto* render_cmd = app.add_subcommand("render", "SVG of a scene and its next generations");
  scene(render_cmd);
  render_cmd->add_option("--steps", o.steps, "generations to add")->capture_default_str()->check(CLI::NonNegativeNumber);
  render_cmd->add_flag("--lines", o.lines, "draw the lines V_i^(k) V_i^(k+2)");
  render_cmd->add_option("--out", o.out, "SVG path (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParseError;
  }

  try {
    if (iterate_cmd->parsed()) return cmd_iterate(o, Direction::Forward, out, err);
    if (reverse_cmd->parsed()) return cmd_iterate(o, Direction::Reverse, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (isoptic_cmd->parsed()) return cmd_isoptic(o, out);
    if (ratio_cmd->parsed()) return cmd_ratio(o, out, err);
    if (search_cmd->parsed()) return cmd_search(o, out, err);
    if (render_cmd->parsed()) return cmd_render(o, out, err);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDegenerate;
  }
  return kExitParseError;
}

}  // namespace pbc
