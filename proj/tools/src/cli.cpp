#include "lieball_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>

#include "lieball/correspondence.hpp"
#include "lieball/errors.hpp"
#include "lieball/geom_core.hpp"
#include "lieball/io.hpp"
#include "lieball/metric.hpp"
#include "lieball/moebius.hpp"
#include "lieball_cli/suites.hpp"

namespace lieball::cli {
namespace {

using io::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RealVec real_arg(const std::string& text, std::string_view flag) {
  try {
    return io::parse_real_list(text);
  } catch (const FormatError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

CplxPoint complex_arg(const std::string& text, std::string_view flag) {
  try {
    return io::parse_complex_list(text);
  } catch (const FormatError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void require_dim(Eigen::Index got, Eigen::Index want, std::string_view flag) {
  if (got < 2) throw UsageError(std::string(flag) + ": need at least 2 coordinates");
  if (got != want)
    throw UsageError(std::string(flag) + ": expected " + std::to_string(want) + " coordinates, got " +
                     std::to_string(got));
}

TangentVector tangent_args(const std::string& x, const std::string& v) {
  TangentVector tv{real_arg(x, "--x"), real_arg(v, "--v")};
  require_dim(tv.x.size(), tv.x.size(), "--x");
  require_dim(tv.v.size(), tv.x.size(), "--v");
  return tv;
}

OrientedSphere sphere_args(const std::string& center, const std::string& radius) {
  OrientedSphere s{real_arg(center, "--center"), real_arg(radius, "--radius-vector")};
  require_dim(s.center.size(), s.center.size(), "--center");
  require_dim(s.radius_vector.size(), s.center.size(), "--radius-vector");
  return s;
}

CplxPoint point_arg(const std::string& z) {
  CplxPoint p = complex_arg(z, "--z");
  require_dim(p.size(), p.size(), "--z");
  return p;
}

struct SphereOpts {
  std::string map;
  std::string z, x, v, center, radius;
};

struct ConvertOpts {
  std::string c, ce;
  std::optional<double> r, re;
};

struct MotionOpts {
  std::string motion_file, rho, a;
  std::string point, z, x, v, center, radius;
  std::string action = "sign";
};

struct GeodesicOpts {
  std::string x, v, velocity;
  double length = 1.0;
  int steps = 100;
};

json run_sphere(const SphereOpts& o) {
  if (o.map == "t") return io::to_json(t_map(point_arg(o.z)));
  if (o.map == "t-inv") return io::to_json(t_inv(sphere_args(o.center, o.radius)));
  if (o.map == "s") return io::to_json(s_map(tangent_args(o.x, o.v)));
  return io::to_json(s_inv(sphere_args(o.center, o.radius)));
}

json run_convert(const ConvertOpts& o) {
  if (!o.c.empty() && o.r) {
    const auto e = sphere_hyp_to_euc({real_arg(o.c, "--c"), *o.r});
    return {{"c_e", io::to_json(e.center)}, {"r_e", e.radius}};
  }
  if (!o.ce.empty() && o.re) {
    const auto h = sphere_euc_to_hyp({real_arg(o.ce, "--ce"), *o.re});
    return {{"c", io::to_json(h.center)}, {"r", h.radius}};
  }
  throw UsageError("convert-sphere: give either --c and --r or --ce and --re");
}

HyperbolicMotion motion_args(const MotionOpts& o) {
  if (!o.motion_file.empty()) {
    std::ifstream in(o.motion_file);
    if (!in) throw UsageError("--motion: cannot open " + o.motion_file);
    try {
      return io::motion_from_json(json::parse(in));
    } catch (const json::exception& e) {
      throw UsageError(std::string("--motion: ") + e.what());
    } catch (const FormatError& e) {
      throw UsageError(std::string("--motion: ") + e.what());
    }
  }
  if (o.a.empty()) throw UsageError("motion: give --motion or --a");
  const RealVec a = real_arg(o.a, "--a");
  require_dim(a.size(), a.size(), "--a");
  const auto n = a.size();
  RealMat rho = RealMat::Identity(n, n);
  if (!o.rho.empty()) {
    const RealVec entries = real_arg(o.rho, "--rho");
    if (entries.size() != n * n) throw UsageError("--rho: expected n*n row-major entries");
    for (Eigen::Index i = 0; i < n; ++i) rho.row(i) = entries.segment(i * n, n).transpose();
  }
  return HyperbolicMotion(std::move(rho), a);
}

json run_motion(const MotionOpts& o) {
  const HyperbolicMotion g = motion_args(o);
  const auto n = g.dim();
  json image;
  if (!o.point.empty()) {
    const RealVec p = real_arg(o.point, "--point");
    require_dim(p.size(), n, "--point");
    image = io::to_json(motion_apply(g, p));
  } else if (!o.z.empty()) {
    const CplxPoint z = point_arg(o.z);
    require_dim(z.size(), n, "--z");
    image = io::to_json(motion_apply(g, z));
  } else if (!o.x.empty()) {
    const TangentVector tv = tangent_args(o.x, o.v);
    require_dim(tv.x.size(), n, "--x");
    image = io::to_json(tangent_action(g, tv));
  } else if (!o.center.empty()) {
    const OrientedSphere s = sphere_args(o.center, o.radius);
    require_dim(s.center.size(), n, "--center");
    const auto action =
        o.action == "conjugate" ? SphereAction::kConjugateReversing : SphereAction::kRadiusSignRule;
    image = io::to_json(motion_apply_sphere(g, s, action));
  } else {
    throw UsageError("motion: give one of --point, --z, --x/--v, --center/--radius-vector");
  }
  return {{"parity", motion_parity(g)}, {"image", image}};
}

json run_gauge(const std::string& z, double tol) {
  const auto c = classify(point_arg(z), tol);
  return {{"gauge", c.gauge}, {"class", std::string(to_string(c.cls))}};
}

void run_geodesic(const GeodesicOpts& o, const CliConfig& cfg, std::ostream& out) {
  const TangentVector start = tangent_args(o.x, o.v);
  const RealVec vel = real_arg(o.velocity, "--velocity");
  if (vel.size() != 2 * start.x.size())
    throw UsageError("--velocity: expected 2n components (xdot then vdot)");
  const auto path = geodesic_integrate(start, vel, o.length, o.steps);
  io::emit_path(path, cfg.format == "csv" ? io::PathFormat::kCsv : io::PathFormat::kJsonLines, out);
}

int run_verify(const std::string& name, const CliConfig& cfg, std::ostream& out) {
  if (name == "list") {
    for (const auto& s : suites()) out << s.name << "  " << s.summary << "\n";
    return kSuccess;
  }
  std::vector<const Suite*> selected;
  if (name == "all") {
    for (const auto& s : suites()) selected.push_back(&s);
  } else if (const Suite* s = find_suite(name)) {
    selected.push_back(s);
  } else {
    throw UsageError("verify: unknown suite '" + name + "' (try 'verify list')");
  }
  bool pass = true;
  for (const Suite* s : selected) {
    const auto report = run_suite(*s, {cfg.n, cfg.trials, cfg.seed});
    out << io::to_json(report).dump() << "\n";
    pass = pass && report.pass;
  }
  return pass ? kSuccess : kSuiteFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Tangent bundle of the Poincare ball and the Lie ball", "lieball"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file")->envname(kConfigEnv);
  app.add_option("--n", cfg.n, "dimension for verification suites")->check(CLI::Range(2, 64));
  app.add_option("--tol", cfg.tol, "classification tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--format", cfg.format, "path output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--trials", cfg.trials, "trials per suite")->check(CLI::Range(1, 1000000));

  std::string x, v, z;
  auto* theta_cmd = app.add_subcommand("theta", "tangent vector -> Lie-ball point");
  theta_cmd->add_option("--x", x, "base point, comma separated")->required();
  theta_cmd->add_option("--v", v, "tangent components")->required();

  auto* theta_inv_cmd = app.add_subcommand("theta-inv", "Lie-ball point -> tangent vector");
  theta_inv_cmd->add_option("--z", z, "complex point \"re,im;re,im;...\"")->required();

  SphereOpts so;
  auto* sphere_cmd = app.add_subcommand("sphere", "T-map and S-map conversions");
  sphere_cmd->add_option("--map", so.map, "t, t-inv, s or s-inv")
      ->required()
      ->check(CLI::IsMember({"t", "t-inv", "s", "s-inv"}));
  sphere_cmd->add_option("--z", so.z, "complex point (t)");
  sphere_cmd->add_option("--x", so.x, "base point (s)");
  sphere_cmd->add_option("--v", so.v, "tangent components (s)");
  sphere_cmd->add_option("--center", so.center, "sphere center (t-inv, s-inv)");
  sphere_cmd->add_option("--radius-vector", so.radius, "sphere radius vector (t-inv, s-inv)");

  ConvertOpts co;
  auto* convert_cmd =
      app.add_subcommand("convert-sphere", "hyperbolic <-> euclidean sphere center and radius");
  convert_cmd->add_option("--c", co.c, "hyperbolic center");
  convert_cmd->add_option("--r", co.r, "chart radius at the center")->check(CLI::PositiveNumber);
  convert_cmd->add_option("--ce", co.ce, "euclidean center");
  convert_cmd->add_option("--re", co.re, "euclidean radius")->check(CLI::PositiveNumber);

  MotionOpts mo;
  auto* motion_cmd = app.add_subcommand("motion", "apply x -> rho(delta_a(x))");
  motion_cmd->add_option("--motion", mo.motion_file, "motion JSON file")->check(CLI::ExistingFile);
  motion_cmd->add_option("--rho", mo.rho, "orthogonal part rho, row-major (default: identity matrix)");
  motion_cmd->add_option("--a", mo.a, "translation parameter");
  motion_cmd->add_option("--point", mo.point, "real point");
  motion_cmd->add_option("--z", mo.z, "complex point");
  motion_cmd->add_option("--x", mo.x, "tangent vector base");
  motion_cmd->add_option("--v", mo.v, "tangent vector components");
  motion_cmd->add_option("--center", mo.center, "sphere center");
  motion_cmd->add_option("--radius-vector", mo.radius, "sphere radius vector");
  motion_cmd->add_option("--action", mo.action, "sphere orientation rule")
      ->check(CLI::IsMember({"sign", "conjugate"}));

  auto* gauge_cmd = app.add_subcommand("gauge", "Lie-ball gauge and classification");
  gauge_cmd->add_option("--z", z, "complex point \"re,im;re,im;...\"")->required();

  auto* metric_cmd = app.add_subcommand("metric", "metric tensor at a tangent vector");
  metric_cmd->add_option("--x", x, "base point")->required();
  metric_cmd->add_option("--v", v, "tangent components")->required();

  GeodesicOpts go;
  auto* geodesic_cmd = app.add_subcommand("geodesic", "integrate a geodesic and emit samples");
  geodesic_cmd->add_option("--x", go.x, "start base point")->required();
  geodesic_cmd->add_option("--v", go.v, "start tangent components")->required();
  geodesic_cmd->add_option("--velocity", go.velocity, "initial velocity, 2n components")
      ->required();
  geodesic_cmd->add_option("--length", go.length, "parameter length")->check(CLI::NonNegativeNumber);
  geodesic_cmd->add_option("--steps", go.steps, "RK4 steps")->check(CLI::Range(1, 10000000));

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite and print its report");
  verify_cmd->add_option("suite", suite, "suite name, 'all' or 'list'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "lieball: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*theta_cmd) {
      out << io::to_json(theta(tangent_args(x, v))).dump() << "\n";
    } else if (*theta_inv_cmd) {
      out << io::to_json(theta_inv(point_arg(z), cfg.tol)).dump() << "\n";
    } else if (*sphere_cmd) {
      out << run_sphere(so).dump() << "\n";
    } else if (*convert_cmd) {
      out << run_convert(co).dump() << "\n";
    } else if (*motion_cmd) {
      out << run_motion(mo).dump() << "\n";
    } else if (*gauge_cmd) {
      out << run_gauge(z, cfg.tol).dump() << "\n";
    } else if (*metric_cmd) {
      out << io::to_json(metric_at(tangent_args(x, v))).dump() << "\n";
    } else if (*geodesic_cmd) {
      run_geodesic(go, cfg, out);
    } else if (*verify_cmd) {
      return run_verify(suite, cfg, out);
    }
  } catch (const UsageError& e) {
    err << "lieball: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "lieball: " << e.what() << "\n";
    return kComputationError;
  }
  return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("lieball");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lieball::cli
