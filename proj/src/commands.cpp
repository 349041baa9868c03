#include "conevol/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "conevol/cone_cylinder.hpp"
#include "conevol/cone_sphere.hpp"
#include "conevol/errors.hpp"
#include "conevol/monte_carlo.hpp"
#include "conevol/verify.hpp"

namespace conevol::cli {

namespace {

constexpr std::pair<std::string_view, Method> kMethodFlags[] = {
    {"closed", Method::closed_form},     {"quad-r3", Method::quad_r3},
    {"quad-reduced", Method::quad_reduced}, {"series", Method::series},
    {"semi-analytic", Method::semi_analytic}, {"quad-2d", Method::quad_2d},
    {"mc", Method::monte_carlo},         {"zeroth", Method::zeroth_approx},
};

double parse_double(std::string_view text) {
  double v{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

double degrees_to_radians(double deg) { return deg * std::numbers::pi / 180.0; }

VolumeResult evaluate_cone_cylinder(Method method, const cone_cylinder::ConeCylinderParams& p,
                                    const EvalSettings& s) {
  switch (method) {
    case Method::closed_form:
      return cone_cylinder::volume_closed(p);
    case Method::quad_r3:
      return cone_cylinder::volume_quad_r3(p, s.tol);
    case Method::quad_reduced:
      return cone_cylinder::volume_quad_reduced(p, s.tol);
    default:
      throw DomainError("method '" + std::string(method_name(method)) +
                        "' does not apply to cone-cylinder");
  }
}

VolumeResult evaluate_cone_sphere(Method method, const cone_sphere::ConeSphereParams& p,
                                  const EvalSettings& s) {
  switch (method) {
    case Method::semi_analytic:
      return cone_sphere::volume_semi_analytic(p, s.tol);
    case Method::quad_2d:
      return cone_sphere::volume_quad_2d(p, s.tol);
    case Method::zeroth_approx: {
      VolumeResult r;
      r.method = Method::zeroth_approx;
      r.volume = cone_sphere::zeroth_order_approx(p);
      // First omitted term of the series.
      const auto next = cone_sphere::series_term_detail(p, 1, s.tol);
      r.error_estimate = std::abs(next.value);
      r.evaluations = next.evaluations;
      return r;
    }
    default:
      throw DomainError("method '" + std::string(method_name(method)) +
                        "' does not apply to cone-sphere");
  }
}

struct Options {
  std::string problem;
  std::string method;
  double k = 0.0;
  std::optional<double> alpha_deg;
  std::optional<double> alpha_rad;
  std::string k_grid;
  std::string alpha_grid;
  bool radians = false;
  double tol = kDefaultTolerance;
  int terms = 64;
  long samples = 10'000'000;
  std::uint64_t seed = 42;
  bool json = false;
  bool strict = false;
  bool fast = false;
};

const std::vector<std::string> kProblemFlags = {"cone-cylinder", "cone-sphere"};
const std::vector<std::string> kMethodFlagNames = {"closed", "quad-r3", "quad-reduced",
                                                   "series", "semi-analytic", "quad-2d",
                                                   "mc", "zeroth"};

void add_evaluation_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--problem", o.problem, "Which solid")
      ->required()
      ->check(CLI::IsMember(kProblemFlags));
  cmd->add_option("--method", o.method, "Evaluation route")
      ->required()
      ->check(CLI::IsMember(kMethodFlagNames));
  cmd->add_option("--tol", o.tol, "Quadrature / series tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--terms", o.terms, "Maximum series terms")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--samples", o.samples, "Monte Carlo samples")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Monte Carlo seed")->capture_default_str();
  cmd->add_flag("--json", o.json, "Newline-delimited JSON instead of CSV");
  cmd->add_flag("--strict", o.strict, "Exit 3 on quadrature or truncation warnings");
}

EvalSettings settings_from(const Options& o) {
  EvalSettings s;
  s.tol = o.tol;
  s.terms = o.terms;
  s.samples = o.samples;
  s.seed = o.seed;
  return s;
}

int emit(const std::vector<EvalOutcome>& outcomes, const Options& o, std::ostream& out,
         std::ostream& err) {
  if (!o.json) out << csv_header() << '\n';
  bool warned = false;
  for (const auto& e : outcomes) {
    out << (o.json ? to_json_line(e.record) : to_csv_row(e.record)) << '\n';
    if (e.numerical_warning) {
      warned = true;
      err << "warning: " << e.message << '\n';
    }
  }
  out.flush();
  return warned && o.strict ? kExitNumerical : kExitOk;
}

int cmd_volume(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.alpha_deg.has_value() == o.alpha_rad.has_value()) {
    err << "error: exactly one of --alpha-deg or --alpha-rad is required\n";
    return kExitUsage;
  }
  const double alpha = o.alpha_rad ? *o.alpha_rad : degrees_to_radians(*o.alpha_deg);
  const auto problem = o.problem == "cone-cylinder" ? Problem::cone_cylinder : Problem::cone_sphere;
  try {
    const auto outcome =
        evaluate_point(problem, *parse_method_flag(o.method), o.k, alpha, settings_from(o));
    return emit({outcome}, o, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<double> ks;
  std::vector<double> alphas;
  try {
    ks = parse_grid(o.k_grid);
    alphas = parse_grid(o.alpha_grid);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!o.radians) {
    for (double& a : alphas) a = degrees_to_radians(a);
  }

  const auto problem = o.problem == "cone-cylinder" ? Problem::cone_cylinder : Problem::cone_sphere;
  const Method method = *parse_method_flag(o.method);
  const std::size_t total = ks.size() * alphas.size();
  std::vector<EvalOutcome> outcomes(total);
  std::vector<std::string> failures(total);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, total));
  EvalSettings settings = settings_from(o);
  if (workers > 1) settings.mc_workers = 1;

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      // Row-major: k outer, alpha inner.
      const double k = ks[i / alphas.size()];
      const double alpha = alphas[i % alphas.size()];
      try {
        outcomes[i] = evaluate_point(problem, method, k, alpha, settings);
      } catch (const DomainError& e) {
        failures[i] = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  for (const auto& f : failures) {
    if (!f.empty()) {
      err << "error: " << f << '\n';
      return kExitUsage;
    }
  }
  return emit(outcomes, o, out, err);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  opts.fast = o.fast;
  opts.seed = o.seed;
  std::vector<CheckOutcome> checks;
  try {
    checks = run_verification(opts);
  } catch (const std::exception& e) {
    err << "verify aborted: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  print_verification_table(out, checks);
  const bool ok = std::all_of(checks.begin(), checks.end(),
                              [](const CheckOutcome& c) { return c.passed; });
  out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

std::optional<Method> parse_method_flag(std::string_view flag) {
  for (const auto& [name, method] : kMethodFlags) {
    if (name == flag) return method;
  }
  return std::nullopt;
}

std::vector<double> parse_grid(std::string_view spec) {
  const auto first = spec.find(':');
  const auto second = first == std::string_view::npos ? first : spec.find(':', first + 1);
  if (second == std::string_view::npos || spec.find(':', second + 1) != std::string_view::npos) {
    throw std::invalid_argument("grid must be start:stop:count, got '" + std::string(spec) + "'");
  }
  const double start = parse_double(spec.substr(0, first));
  const double stop = parse_double(spec.substr(first + 1, second - first - 1));
  const auto count_text = spec.substr(second + 1);
  int count = 0;
  const auto [ptr, ec] =
      std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
  if (ec != std::errc() || ptr != count_text.data() + count_text.size() || count < 1) {
    throw std::invalid_argument("grid count must be a positive integer, got '" +
                                std::string(count_text) + "'");
  }
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (count == 1) {
      out.push_back(start);
    } else if (i + 1 == count) {
      out.push_back(stop);
    } else {
      out.push_back(start + (stop - start) * i / (count - 1));
    }
  }
  return out;
}

EvalOutcome evaluate_point(Problem problem, Method method, double k, double alpha_rad,
                           const EvalSettings& settings) {
  EvalOutcome out;
  auto& rec = out.record;
  rec.problem = problem;
  rec.k = k;
  rec.alpha_rad = alpha_rad;
  rec.method = method;

  const cone_cylinder::ConeCylinderParams cc{k, alpha_rad};
  const cone_sphere::ConeSphereParams cs{k, alpha_rad};
  if (problem == Problem::cone_cylinder) {
    cc.validate();
  } else {
    cs.validate();
  }

  try {
    if (method == Method::monte_carlo) {
      const auto mc = problem == Problem::cone_cylinder
                          ? oracle::mc_volume(cc, settings.samples, settings.seed,
                                              settings.mc_workers)
                          : oracle::mc_volume(cs, settings.samples, settings.seed,
                                              settings.mc_workers);
      rec.volume = mc.mean;
      rec.error_estimate = mc.std_error;
      rec.evaluations = mc.samples;
      rec.seed = mc.seed;
    } else if (problem == Problem::cone_sphere && method == Method::series) {
      const auto s = cone_sphere::volume_series(cs, settings.tol, settings.terms);
      rec.volume = s.result.volume;
      rec.error_estimate = s.result.error_estimate;
      rec.evaluations = s.result.evaluations;
      rec.n_terms = s.breakdown.n_used;
      if (s.truncated) {
        out.numerical_warning = true;
        out.message = "series truncated at " + std::to_string(s.breakdown.n_used) +
                      " terms; last term " + format_real(s.breakdown.truncation_estimate);
      }
    } else {
      const auto r = problem == Problem::cone_cylinder ? evaluate_cone_cylinder(method, cc, settings)
                                                       : evaluate_cone_sphere(method, cs, settings);
      rec.volume = r.volume;
      rec.error_estimate = r.error_estimate;
      rec.evaluations = r.evaluations;
    }
  } catch (const QuadratureError& e) {
    rec.volume = e.value();
    rec.error_estimate = e.error_estimate();
    rec.evaluations = e.evaluations();
    out.numerical_warning = true;
    out.message = e.what();
  }
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cone/cylinder and cone/sphere intersection volumes"};
  app.require_subcommand(1);
  Options o;

  auto* volume = app.add_subcommand("volume", "Evaluate one (k, alpha) point");
  add_evaluation_flags(volume, o);
  volume->add_option("--k", o.k, "Offset k in [0, 1]")->required();
  auto* deg = volume->add_option("--alpha-deg", o.alpha_deg, "Half-angle in degrees");
  auto* rad = volume->add_option("--alpha-rad", o.alpha_rad, "Half-angle in radians");
  deg->excludes(rad);

  auto* sweep = app.add_subcommand("sweep", "Evaluate a k x alpha grid");
  add_evaluation_flags(sweep, o);
  sweep->add_option("--k-grid", o.k_grid, "start:stop:count")->required();
  sweep->add_option("--alpha-grid", o.alpha_grid, "start:stop:count (degrees)")->required();
  sweep->add_flag("--radians", o.radians, "Read --alpha-grid in radians");

  auto* verify = app.add_subcommand("verify", "Run the cross-method checks");
  verify->add_flag("--fast", o.fast, "Coarser grids and fewer Monte Carlo samples");
  verify->add_option("--seed", o.seed, "Monte Carlo seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (volume->parsed()) return cmd_volume(o, out, err);
  if (sweep->parsed()) return cmd_sweep(o, out, err);
  return cmd_verify(o, out, err);
}

}  // namespace conevol::cli
