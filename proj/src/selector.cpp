#include "kdebw/selector.hpp"

#include "kdebw/errors.hpp"

#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace kdebw {

namespace {

// Shared by the 1-d and 3-d searches; roughness(h) and update(R) carry the
// dimension-specific parts.
template <class Roughness, class Update>
BandwidthTrace iterate(double h0, const SelectorConfig& config, Roughness roughness, Update update)
{
  BandwidthTrace trace;
  double h = h0;
  std::size_t backoffs = 0;
  double best_step = std::numeric_limits<double>::infinity();
  double best_h = h0;

  while (trace.iterations.size() < config.max_iterations) {
    const RoughnessResult r = roughness(h);
    IterationRecord record{ h, r.raw, r.corrected, false, 0.0 };
    if (r.non_positive()) {
      if (backoffs == config.max_backoffs) {
        throw BackoffExhausted(fmt::format(
          "corrected roughness still non-positive after {} backoffs (h = {})", backoffs, h));
      }
      ++backoffs;
      record.backoff_applied = true;
      record.next_h = h * config.backoff_factor;
      trace.iterations.push_back(record);
      h = record.next_h;
      continue;
    }
    record.next_h = update(r.corrected);
    trace.iterations.push_back(record);
    const double step = std::abs(record.next_h - h) / h;
    if (step < best_step) {
      best_step = step;
      best_h = h;
    }
    if (step <= config.rel_tolerance) {
      trace.converged = true;
      trace.final_h = h;
      return trace;
    }
    h = record.next_h;
  }
  trace.final_h = best_h;
  return trace;
}

} // namespace

void SelectorConfig::validate() const
{
  if (!(rel_tolerance > 0.0 && rel_tolerance < 1.0))
    throw InvalidArgument("rel_tolerance must lie in (0, 1)");
  if (max_iterations == 0)
    throw InvalidArgument("max_iterations must be positive");
  if (!(initial_scale > 0.0) || !std::isfinite(initial_scale))
    throw InvalidArgument("initial_scale must be positive");
  if (!(backoff_factor > 1.0) || !std::isfinite(backoff_factor))
    throw InvalidArgument("backoff_factor must exceed 1");
  if (max_backoffs == 0)
    throw InvalidArgument("max_backoffs must be positive");
}

std::size_t BandwidthTrace::backoffs() const
{
  std::size_t n = 0;
  for (const auto& it : iterations)
    n += it.backoff_applied ? 1 : 0;
  return n;
}

std::size_t BandwidthTrace::update_steps() const
{
  return iterations.size() - backoffs();
}

double optimal_bandwidth_1d(double roughness_f2, const Kernel1D& kernel, std::size_t n)
{
  if (!(roughness_f2 > 0.0))
    throw NonPositiveRoughness(roughness_f2);
  if (n == 0)
    throw InvalidArgument("sample size must be positive");
  const double mu2 = kernel.second_moment;
  return std::pow(kernel.roughness / (roughness_f2 * mu2 * mu2), 0.2) *
         std::pow(static_cast<double>(n), -0.2);
}

double optimal_bandwidth_3d(double roughness_lap, const Kernel3D& kernel, std::size_t n)
{
  if (!(roughness_lap > 0.0))
    throw NonPositiveRoughness(roughness_lap);
  if (n == 0)
    throw InvalidArgument("sample size must be positive");
  const double mu2 = kernel.second_moment;
  return std::pow(3.0 * kernel.roughness / (roughness_lap * mu2 * mu2), 1.0 / 7.0) *
         std::pow(static_cast<double>(n), -1.0 / 7.0);
}

double amise_1d(double h, const Kernel1D& kernel, double roughness_f2, std::size_t n)
{
  if (!(h > 0.0))
    throw NonPositiveBandwidth(h);
  const double half_mu2 = 0.5 * kernel.second_moment;
  return kernel.roughness / (h * static_cast<double>(n)) +
         h * h * h * h * roughness_f2 * half_mu2 * half_mu2;
}

BandwidthTrace select_bandwidth_1d(const Sample1D& sample,
                                   const Kernel1D& kernel,
                                   const SelectorConfig& config)
{
  config.validate();
  sample.require_selectable();
  const std::size_t n = sample.size();
  const double h0 = config.initial_scale * sample.std() * std::pow(static_cast<double>(n), -0.2);
  return iterate(
    h0,
    config,
    [&](double h) { return corrected_roughness_1d(sample, kernel, h, config.limits); },
    [&](double r) { return optimal_bandwidth_1d(r, kernel, n); });
}

BandwidthTrace select_bandwidth_3d(const Sample3D& sample,
                                   const Kernel3D& kernel,
                                   const SelectorConfig& config)
{
  config.validate();
  sample.require_selectable();
  const std::size_t n = sample.size();
  const double h0 =
    config.initial_scale * sample.std() * std::pow(static_cast<double>(n), -1.0 / 7.0);
  return iterate(
    h0,
    config,
    [&](double h) { return corrected_roughness_3d(sample, kernel, h, config.limits); },
    [&](double r) { return optimal_bandwidth_3d(r, kernel, n); });
}

} // namespace kdebw
