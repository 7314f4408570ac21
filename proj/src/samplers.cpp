#include "kdebw/samplers.hpp"

#include "kdebw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kdebw {

namespace {

struct Mixture
{
  double mean;
  double sigma;
};

constexpr Mixture trimodal_components[3] = { { 0.0, 1.0 }, { -4.0, 2.0 }, { 4.0, 0.5 } };

} // namespace

double Rng::uniform()
{
  // (k + 0.5) / 2^53 never hits 0 or 1.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal()
{
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

void HernquistParams::validate() const
{
  if (!(total_mass > 0.0))
    throw InvalidArgument("Hernquist total mass must be positive");
  if (!(scale_length > 0.0) || !std::isfinite(scale_length))
    throw InvalidArgument("Hernquist scale length must be positive");
  if (!(min_r_over_rc >= 0.0) || !(max_r_over_rc > min_r_over_rc))
    throw InvalidArgument("Hernquist truncation window must satisfy 0 <= min < max");
}

double hernquist_mass_fraction(double r, double scale_length)
{
  if (std::isinf(r))
    return 1.0;
  const double s = r / (r + scale_length);
  return s * s;
}

Sample1D sample_gaussian_1d(std::size_t n, RngSeed seed)
{
  Rng rng(seed);
  std::vector<double> x(n);
  for (auto& v : x)
    v = rng.normal();
  return Sample1D(std::move(x));
}

TscDraws sample_tsc_density_counted(std::size_t n, RngSeed seed)
{
  Rng rng(seed);
  std::vector<double> x;
  x.reserve(n);
  std::size_t proposals = 0;
  while (x.size() < n) {
    const double u = rng.uniform(-1.5, 1.5);
    const double y = rng.uniform(0.0, 0.75);
    ++proposals;
    if (y <= eval_kernel_1d(kernel_1d(KernelFamily::tsc), u))
      x.push_back(u);
  }
  return { Sample1D(std::move(x)), proposals };
}

Sample1D sample_tsc_density(std::size_t n, RngSeed seed)
{
  return sample_tsc_density_counted(n, seed).sample;
}

TrimodalDraws sample_trimodal_labeled(std::size_t n, RngSeed seed)
{
  Rng rng(seed);
  std::vector<double> x(n);
  std::vector<int> component(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int c = static_cast<int>(rng.bits() % 3);
    component[i] = c;
    x[i] = trimodal_components[c].mean + trimodal_components[c].sigma * rng.normal();
  }
  return { Sample1D(std::move(x)), std::move(component) };
}

Sample1D sample_trimodal(std::size_t n, RngSeed seed)
{
  return sample_trimodal_labeled(n, seed).sample;
}

Sample3D sample_gaussian_3d(std::size_t n, RngSeed seed)
{
  Rng rng(seed);
  std::vector<Vec3> x(n);
  for (auto& p : x) {
    p[0] = rng.normal();
    p[1] = rng.normal();
    p[2] = rng.normal();
  }
  return Sample3D(std::move(x));
}

Sample1D sample_hernquist_radii(std::size_t n, const HernquistParams& params, RngSeed seed)
{
  params.validate();
  const double rc = params.scale_length;
  const double q_lo = hernquist_mass_fraction(params.min_r_over_rc * rc, rc);
  const double q_hi = hernquist_mass_fraction(params.max_r_over_rc * rc, rc);
  Rng rng(seed);
  std::vector<double> r(n);
  for (auto& v : r) {
    const double s = std::sqrt(rng.uniform(q_lo, q_hi));
    // Rounding can push the inverse a hair outside the window.
    v = std::clamp(rc * s / (1.0 - s), params.min_r_over_rc * rc, params.max_r_over_rc * rc);
  }
  return Sample1D(std::move(r));
}

} // namespace kdebw
