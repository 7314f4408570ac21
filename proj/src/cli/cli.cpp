#include "kdebw/cli.hpp"

#include "kdebw/errors.hpp"
#include "kdebw/io.hpp"
#include "kdebw/reference.hpp"
#include "kdebw/report.hpp"
#include "kdebw/samplers.hpp"
#include "kdebw/selector.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <optional>

namespace kdebw::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Generator
{
  gauss1d,
  tscdens1d,
  trimodal,
  gauss3d,
  hernquist
};

const std::map<std::string, Generator> generators = { { "gauss1d", Generator::gauss1d },
                                                      { "tscdens1d", Generator::tscdens1d },
                                                      { "trimodal", Generator::trimodal },
                                                      { "gauss3d", Generator::gauss3d },
                                                      { "hernquist", Generator::hernquist } };

Generator parse_generator(const std::string& name, const char* what)
{
  const auto it = generators.find(name);
  if (it == generators.end())
    throw InvalidArgument(fmt::format(
      "unknown {} '{}' (expected gauss1d, tscdens1d, trimodal, gauss3d or hernquist)", what, name));
  return it->second;
}

int dimension(Generator g)
{
  return g == Generator::gauss3d ? 3 : 1;
}

// Accepts plain integers and exact scientific forms such as 1.05e6.
std::size_t parse_count(const std::string& text)
{
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(value >= 1.0) || value != std::floor(value) || value > 1e15)
    throw InvalidArgument(fmt::format("'{}' is not a positive integer sample size", text));
  return static_cast<std::size_t>(value);
}

struct SelectorFlags
{
  double tol = 1e-3;
  std::size_t max_iters = 100;
  double c0 = 2.0;
  std::optional<std::size_t> grid_cap;

  void add_to(CLI::App& app)
  {
    app.add_option("--tol", tol, "Relative tolerance on successive bandwidths")->capture_default_str();
    app.add_option("--max-iters", max_iters, "Iteration cap")->capture_default_str();
    app.add_option("--c0", c0, "Initial bandwidth in units of std * N^(-1/(4+d))")
      ->capture_default_str();
    app.add_option("--grid-cap", grid_cap, "Maximum tabulation nodes (1-d) or cells (3-d)");
  }

  SelectorConfig config() const
  {
    SelectorConfig c;
    c.rel_tolerance = tol;
    c.max_iterations = max_iters;
    c.initial_scale = c0;
    if (grid_cap) {
      c.limits.max_nodes_1d = *grid_cap;
      c.limits.max_cells_3d = *grid_cap;
    }
    c.validate();
    return c;
  }
};

struct HernquistFlags
{
  HernquistParams params;

  void add_to(CLI::App& app)
  {
    app.add_option("--rc", params.scale_length, "Hernquist scale length")->capture_default_str();
    app.add_option("--mt", params.total_mass, "Hernquist total mass")->capture_default_str();
    app.add_option("--rmin", params.min_r_over_rc, "Lower truncation in units of r_c")
      ->capture_default_str();
    app.add_option("--rmax", params.max_r_over_rc, "Upper truncation in units of r_c")
      ->capture_default_str();
  }
};

Sample1D generate_1d(Generator g, std::size_t n, RngSeed seed, const HernquistParams& params)
{
  switch (g) {
    case Generator::gauss1d:
      return sample_gaussian_1d(n, seed);
    case Generator::tscdens1d:
      return sample_tsc_density(n, seed);
    case Generator::trimodal:
      return sample_trimodal(n, seed);
    case Generator::hernquist:
      return sample_hernquist_radii(n, params, seed);
    case Generator::gauss3d:
      break;
  }
  throw InvalidArgument("generator does not produce a 1-d sample");
}

std::optional<AnalyticDensity1D> analytic_density(Generator g, const HernquistParams& params)
{
  switch (g) {
    case Generator::gauss1d:
      return AnalyticDensity1D::gaussian();
    case Generator::tscdens1d:
      return AnalyticDensity1D::tsc_density();
    case Generator::trimodal:
      return AnalyticDensity1D::trimodal();
    case Generator::hernquist:
      return AnalyticDensity1D::hernquist_radial(params);
    case Generator::gauss3d:
      break;
  }
  return std::nullopt;
}

std::vector<std::string> generator_header(const std::string& name,
                                          Generator g,
                                          std::size_t n,
                                          std::uint64_t seed,
                                          const HernquistParams& p)
{
  std::vector<std::string> header = { "generator: " + name,
                                      fmt::format("np: {}", n),
                                      fmt::format("seed: {}", seed),
                                      fmt::format("rng: {}", rng_name) };
  if (g == Generator::hernquist) {
    header.push_back(fmt::format("scale_length: {}", p.scale_length));
    header.push_back(fmt::format("total_mass: {}", p.total_mass));
    header.push_back(fmt::format("window_r_over_rc: [{}, {}]", p.min_r_over_rc, p.max_r_over_rc));
  }
  return header;
}

//! Destination chosen by --out, defaulting to the caller's stream.
class Sink
{
public:
  Sink(const std::string& path, std::ostream& fallback)
    : stream_(&fallback)
  {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_)
        throw InputError(fmt::format("cannot write '{}'", path));
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start, bool timing)
{
  if (!timing)
    return 0;
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
    .count();
}

void write_table(std::ostream& out,
                 const std::vector<std::string>& header,
                 const std::vector<double>& x,
                 const std::vector<double>& estimate,
                 const std::optional<std::vector<double>>& exact)
{
  for (const auto& h : header)
    out << "# " << h << '\n';
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << fmt::format("{:.10g} {:.10g} ", x[i], estimate[i]);
    if (exact)
      out << fmt::format("{:.10g}\n", (*exact)[i]);
    else
      out << "NA\n";
  }
}

std::vector<double> linspace(double from, double to, double step)
{
  std::vector<double> xs;
  const auto n = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  xs.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    xs.push_back(from + static_cast<double>(i) * step);
  return xs;
}

// Tables behind the density comparison figures, at the selected bandwidth.
void write_curve(const std::filesystem::path& path,
                 Generator g,
                 const HernquistParams& params,
                 const std::variant<Sample1D, Sample3D>& sample,
                 KernelFamily family,
                 double h)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError(fmt::format("cannot write '{}'", path.string()));
  std::vector<std::string> header = { fmt::format("h: {:.17g}", h), "kernel: " + to_string(family) };

  if (g == Generator::gauss3d) {
    const auto& s = std::get<Sample3D>(sample);
    const auto xs = linspace(-4.0, 4.0, 0.05);
    std::vector<Vec3> line;
    std::vector<double> exact;
    for (double x : xs) {
      line.push_back({ x, 0.0, 0.0 });
      exact.push_back(eval_density(AnalyticDensity3D{}, line.back()));
    }
    header.push_back("columns: x1 f_hat(x1,0,0) f(x1,0,0)");
    write_table(out, header, xs, estimate_density_3d(s, kernel_3d(family), h, line), exact);
    return;
  }

  const auto& s = std::get<Sample1D>(sample);
  const auto density = *analytic_density(g, params);
  if (g == Generator::hernquist) {
    const double rc = params.scale_length;
    const double lo = params.min_r_over_rc * rc;
    const double hi = std::min(params.max_r_over_rc, 100.0) * rc;
    std::vector<double> rs;
    for (int i = 0; i < 200; ++i)
      rs.push_back(lo * std::pow(hi / lo, i / 199.0));
    // The estimate is a pdf over the window; the window holds M_T * F mass.
    const double window_mass =
      params.total_mass *
      (hernquist_mass_fraction(params.max_r_over_rc * rc, rc) - hernquist_mass_fraction(lo, rc));
    const auto pdf = estimate_density_1d(s, kernel_1d(family), h, rs);
    std::vector<double> rho_hat;
    std::vector<double> rho;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      rho_hat.push_back(profile_from_radial_pdf(pdf[i], rs[i], window_mass));
      rho.push_back(hernquist_profile(rs[i], params));
    }
    header.push_back("columns: r rho_hat(r) rho(r)");
    write_table(out, header, rs, rho_hat, rho);
    return;
  }

  std::vector<double> xs;
  switch (g) {
    case Generator::tscdens1d:
      xs = linspace(-2.0, 2.0, 0.01);
      break;
    case Generator::trimodal:
      xs = linspace(-12.0, 8.0, 0.02);
      break;
    default:
      xs = linspace(-5.0, 5.0, 0.02);
  }
  std::vector<double> exact;
  for (double x : xs)
    exact.push_back(eval_density(density, x));
  header.push_back("columns: x f_hat(x) f(x)");
  write_table(out, header, xs, estimate_density_1d(s, kernel_1d(family), h, xs), exact);
}

struct SelectOptions
{
  std::string input;
  std::string kernel = "tsc";
  int dim = 1;
  SelectorFlags selector;
  std::string out;
  std::string trace_out;
  bool no_timing = false;
};

int cmd_select(const SelectOptions& o, std::ostream& out, std::ostream& err)
{
  const auto family = parse_kernel_family(o.kernel);
  const auto config = o.selector.config();
  const auto table = read_sample_table(o.input);

  ExperimentReport report;
  report.experiment_id = "select";
  report.kernel = to_string(family);
  report.rng_name = std::string(rng_name);

  const auto start = std::chrono::steady_clock::now();
  BandwidthTrace trace;
  if (o.dim == 1) {
    const auto sample = to_sample_1d(table);
    report.np = sample.size();
    trace = select_bandwidth_1d(sample, kernel_1d(family), config);
  } else {
    const auto sample = to_sample_3d(table);
    report.np = sample.size();
    trace = select_bandwidth_3d(sample, kernel_3d(family), config);
  }
  report.wall_time_ms = elapsed_ms(start, !o.no_timing);
  report.set_result(trace, std::nullopt);

  Sink sink(o.out, out);
  sink.stream() << to_json(report).dump(2) << '\n';
  if (!o.trace_out.empty()) {
    Sink trace_sink(o.trace_out, out);
    trace_sink.stream() << to_json(trace).dump(2) << '\n';
  }
  if (!trace.converged) {
    err << fmt::format("warning: no convergence within {} iterations\n", config.max_iterations);
    return not_converged;
  }
  return success;
}

struct ExperimentOptions
{
  std::string name;
  std::string kernel = "tsc";
  std::vector<std::string> np;
  std::vector<std::uint64_t> seeds = { 1, 2, 3, 4, 5 };
  SelectorFlags selector;
  HernquistFlags hernquist;
  std::string emit_curves;
  std::string out;
  bool no_timing = false;
};

int cmd_experiment(const ExperimentOptions& o, std::ostream& out, std::ostream&)
{
  const auto g = parse_generator(o.name, "experiment");
  const auto family = parse_kernel_family(o.kernel);
  const auto config = o.selector.config();
  const auto& params = o.hernquist.params;
  params.validate();

  std::vector<std::size_t> sizes;
  for (const auto& s : o.np)
    sizes.push_back(parse_count(s));
  if (sizes.empty()) {
    if (g == Generator::hernquist)
      sizes = { 1'050'000 };
    else if (dimension(g) == 3)
      sizes = { 1'000, 10'000, 100'000 };
    else
      sizes = { 1'000, 10'000, 100'000, 1'000'000 };
  }
  std::sort(sizes.begin(), sizes.end());
  auto seeds = o.seeds;
  std::sort(seeds.begin(), seeds.end());
  if (!o.emit_curves.empty())
    std::filesystem::create_directories(o.emit_curves);

  json runs = json::array();
  json summary = json::array();
  bool all_converged = true;
  for (std::size_t n : sizes) {
    double abs_error = 0.0;
    double mean_h = 0.0;
    std::size_t converged = 0;
    std::optional<double> analytic;
    for (std::uint64_t seed : seeds) {
      ExperimentReport report;
      report.experiment_id = o.name;
      report.kernel = to_string(family);
      report.np = n;
      report.seed = seed;
      report.rng_name = std::string(rng_name);

      const auto start = std::chrono::steady_clock::now();
      std::variant<Sample1D, Sample3D> sample = Sample1D({ 0.0 });
      BandwidthTrace trace;
      if (dimension(g) == 3) {
        sample = sample_gaussian_3d(n, RngSeed{ seed });
        trace = select_bandwidth_3d(std::get<Sample3D>(sample), kernel_3d(family), config);
        analytic = analytic_optimal_bandwidth(AnalyticDensity3D{}, kernel_3d(family), n);
      } else {
        sample = generate_1d(g, n, RngSeed{ seed }, params);
        trace = select_bandwidth_1d(std::get<Sample1D>(sample), kernel_1d(family), config);
        analytic = analytic_optimal_bandwidth(*analytic_density(g, params), kernel_1d(family), n);
      }
      report.wall_time_ms = elapsed_ms(start, !o.no_timing);
      report.set_result(trace, analytic);
      runs.push_back(to_json(report));

      abs_error += std::abs(*report.relative_error);
      mean_h += report.selected_h;
      converged += report.converged ? 1 : 0;
      all_converged = all_converged && report.converged;

      if (!o.emit_curves.empty()) {
        const auto file = fmt::format("{}_{}_N{}_seed{}.dat", o.name, to_string(family), n, seed);
        write_curve(std::filesystem::path(o.emit_curves) / file, g, params, sample, family, trace.final_h);
      }
    }
    const double count = static_cast<double>(seeds.size());
    json row;
    row["Np"] = n;
    row["runs"] = seeds.size();
    row["converged"] = converged;
    row["analytic_h"] = analytic ? json(*analytic) : json(nullptr);
    row["mean_selected_h"] = mean_h / count;
    row["mean_abs_relative_error"] = abs_error / count;
    summary.push_back(row);
  }

  json doc;
  doc["experiment"] = o.name;
  doc["kernel"] = to_string(family);
  doc["rng_name"] = std::string(rng_name);
  if (g == Generator::hernquist) {
    doc["hernquist"] = { { "scale_length", params.scale_length },
                         { "total_mass", params.total_mass },
                         { "min_r_over_rc", params.min_r_over_rc },
                         { "max_r_over_rc", params.max_r_over_rc } };
    // Values quoted by the original study for its own (unstated) scale
    // length and window; not comparable to the oracle above.
    doc["external_reference"] = { { "analytic_h", 0.1712 },
                                  { "selected_h", 0.1678 },
                                  { "relative_error", -0.019 },
                                  { "Np", 1'050'000 } };
  }
  doc["runs"] = std::move(runs);
  doc["summary"] = std::move(summary);

  Sink sink(o.out, out);
  sink.stream() << doc.dump(2) << '\n';
  return all_converged ? success : not_converged;
}

struct DensityOptions
{
  std::string input;
  std::string generator;
  std::string np = "100000";
  std::uint64_t seed = 1;
  std::string kernel = "tsc";
  std::optional<double> h;
  bool automatic = false;
  std::optional<double> from;
  std::optional<double> to;
  std::optional<double> step;
  SelectorFlags selector;
  HernquistFlags hernquist;
  std::string out;
};

int cmd_density(const DensityOptions& o, std::ostream& out, std::ostream& err)
{
  const auto family = parse_kernel_family(o.kernel);
  const auto kernel = kernel_1d(family);
  if (o.input.empty() == o.generator.empty())
    throw InvalidArgument("give either an input file or --generator");
  if (o.h.has_value() == o.automatic)
    throw InvalidArgument("give either --h or --auto");
  if (o.h && !(*o.h > 0.0))
    throw NonPositiveBandwidth(*o.h);

  std::optional<AnalyticDensity1D> exact;
  std::vector<std::string> header;
  std::optional<Sample1D> sample;
  if (!o.generator.empty()) {
    const auto g = parse_generator(o.generator, "generator");
    if (dimension(g) != 1)
      throw InvalidArgument("density tables are produced for 1-d samples only");
    const auto n = parse_count(o.np);
    sample = generate_1d(g, n, RngSeed{ o.seed }, o.hernquist.params);
    exact = analytic_density(g, o.hernquist.params);
    header = generator_header(o.generator, g, n, o.seed, o.hernquist.params);
  } else {
    sample = to_sample_1d(read_sample_table(o.input));
    header = { "input: " + o.input, fmt::format("np: {}", sample->size()) };
  }

  int status = success;
  double h = 0.0;
  if (o.automatic) {
    const auto trace = select_bandwidth_1d(*sample, kernel, o.selector.config());
    h = trace.final_h;
    header.push_back(fmt::format("bandwidth: auto, converged: {}", trace.converged));
    if (!trace.converged) {
      err << "warning: bandwidth selection did not converge\n";
      status = not_converged;
    }
  } else {
    h = *o.h;
  }
  header.push_back("kernel: " + to_string(family));
  header.push_back(fmt::format("h: {:.17g}", h));
  header.push_back("columns: x f_hat(x) f(x)");

  const double pad = 0.5 * kernel.width * h;
  const double from = o.from.value_or(sample->min() - pad);
  const double to = o.to.value_or(sample->max() + pad);
  if (!(to > from))
    throw InvalidArgument("--to must exceed --from");
  const double step = o.step.value_or((to - from) / 400.0);
  if (!(step > 0.0))
    throw InvalidArgument("--step must be positive");

  const auto xs = linspace(from, to, step);
  const auto estimate = estimate_density_1d(*sample, kernel, h, xs);
  std::optional<std::vector<double>> analytic;
  if (exact) {
    analytic.emplace();
    for (double x : xs)
      analytic->push_back(exact->kind == DensityKind::hernquist_radial_pdf && x < 0.0
                            ? 0.0
                            : eval_density(*exact, x));
  }
  Sink sink(o.out, out);
  write_table(sink.stream(), header, xs, estimate, analytic);
  return status;
}

struct SampleOptions
{
  std::string generator;
  std::string np = "1000";
  std::uint64_t seed = 1;
  HernquistFlags hernquist;
  std::string out;
};

int cmd_sample(const SampleOptions& o, std::ostream& out)
{
  const auto g = parse_generator(o.generator, "generator");
  const auto n = parse_count(o.np);
  const auto header = generator_header(o.generator, g, n, o.seed, o.hernquist.params);
  Sink sink(o.out, out);
  if (dimension(g) == 3)
    write_sample(sink.stream(), header, sample_gaussian_3d(n, RngSeed{ o.seed }));
  else
    write_sample(sink.stream(), header, generate_1d(g, n, RngSeed{ o.seed }, o.hernquist.params));
  return success;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{ "Kernel density estimation with data-based optimal bandwidth", "kdebw" };
  app.require_subcommand(1);

  SelectOptions select;
  auto* select_cmd = app.add_subcommand("select", "Select the bandwidth of a sample file");
  select_cmd->add_option("input", select.input, "Sample file (1 or 3 columns)")->required();
  select_cmd->add_option("--kernel", select.kernel, "ngp, cic or tsc")->capture_default_str();
  select_cmd->add_option("--dim", select.dim, "Sample dimension")
    ->check(CLI::IsMember({ 1, 3 }))
    ->capture_default_str();
  select.selector.add_to(*select_cmd);
  select_cmd->add_option("--out", select.out, "Report path (default: stdout)");
  select_cmd->add_option("--trace", select.trace_out, "Write the iteration trace to this path");
  select_cmd->add_flag("--no-timing", select.no_timing, "Report wall_time_ms as 0");

  ExperimentOptions experiment;
  auto* experiment_cmd =
    app.add_subcommand("experiment", "Run a validation experiment against the analytic bandwidth");
  experiment_cmd
    ->add_option("name", experiment.name, "gauss1d, tscdens1d, trimodal, gauss3d or hernquist")
    ->required();
  experiment_cmd->add_option("--kernel", experiment.kernel, "ngp, cic or tsc")->capture_default_str();
  experiment_cmd->add_option("--np", experiment.np, "Sample sizes, comma separated")->delimiter(',');
  experiment_cmd->add_option("--seeds,--seed", experiment.seeds, "Seeds, comma separated")
    ->delimiter(',')
    ->capture_default_str();
  experiment.selector.add_to(*experiment_cmd);
  experiment.hernquist.add_to(*experiment_cmd);
  experiment_cmd->add_option("--emit-curves", experiment.emit_curves, "Directory for curve tables");
  experiment_cmd->add_option("--out", experiment.out, "Report path (default: stdout)");
  experiment_cmd->add_flag("--no-timing", experiment.no_timing, "Report wall_time_ms as 0");

  DensityOptions density;
  auto* density_cmd = app.add_subcommand("density", "Tabulate the density estimate");
  density_cmd->set_help_flag("--help", "Print this help message and exit");
  density_cmd->add_option("input", density.input, "Sample file (1 column)");
  density_cmd->add_option("--generator", density.generator, "Generate the sample instead");
  density_cmd->add_option("--np", density.np, "Generated sample size")->capture_default_str();
  density_cmd->add_option("--seed", density.seed, "Generator seed")->capture_default_str();
  density_cmd->add_option("--kernel", density.kernel, "ngp, cic or tsc")->capture_default_str();
  density_cmd->add_option("--h", density.h, "Fixed bandwidth");
  density_cmd->add_flag("--auto", density.automatic, "Select the bandwidth from the data");
  density_cmd->add_option("--from", density.from, "First abscissa");
  density_cmd->add_option("--to", density.to, "Last abscissa");
  density_cmd->add_option("--step", density.step, "Abscissa spacing");
  density.selector.add_to(*density_cmd);
  density.hernquist.add_to(*density_cmd);
  density_cmd->add_option("--out", density.out, "Table path (default: stdout)");

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "Write a generated sample");
  sample_cmd
    ->add_option("generator", sample.generator, "gauss1d, tscdens1d, trimodal, gauss3d or hernquist")
    ->required();
  sample_cmd->add_option("--np", sample.np, "Sample size")->capture_default_str();
  sample_cmd->add_option("--seed", sample.seed, "Seed")->capture_default_str();
  sample.hernquist.add_to(*sample_cmd);
  sample_cmd->add_option("--out", sample.out, "Output path (default: stdout)");

  std::vector<const char*> argv = { "kdebw" };
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? success : input_error;
  }

  try {
    if (select_cmd->parsed())
      return cmd_select(select, out, err);
    if (experiment_cmd->parsed())
      return cmd_experiment(experiment, out, err);
    if (density_cmd->parsed())
      return cmd_density(density, out, err);
    return cmd_sample(sample, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
}

} // namespace kdebw::cli
