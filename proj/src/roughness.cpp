#include "kdebw/roughness.hpp"

#include "kdebw/errors.hpp"
#include "sum.hpp"

#include <cmath>

namespace kdebw {

namespace {

double squared(double x)
{
  return x * x;
}

void require_positive(double h)
{
  if (!(h > 0.0) || !std::isfinite(h))
    throw NonPositiveBandwidth(h);
}

} // namespace

double integrate_squared_1d(const Grid1D& grid)
{
  return detail::pairwise_sum(grid.values, squared) * grid.spacing;
}

double integrate_squared_3d(const Grid3D& grid)
{
  const double s = grid.spacing;
  return detail::pairwise_sum(grid.values, squared) * (s * s * s);
}

double noise_correction_1d(const Kernel1D& kernel, double h, std::size_t n)
{
  require_positive(h);
  const double h5 = h * h * h * h * h;
  return 6.0 / (kernel.width * h5 * static_cast<double>(n));
}

double noise_correction_3d(const Kernel3D& kernel, double h, std::size_t n)
{
  require_positive(h);
  const double w = kernel.width;
  const double h7 = h * h * h * h * h * h * h;
  return 42.0 / (w * w * w * h7 * static_cast<double>(n));
}

RoughnessResult corrected_roughness_1d(const Sample1D& sample,
                                       const Kernel1D& kernel,
                                       double h,
                                       const GridLimits& limits)
{
  const double correction = noise_correction_1d(kernel, h, sample.size());
  const auto density = build_grid_1d(sample, kernel, h, limits);
  const double raw = integrate_squared_1d(second_derivative_grid(density));
  return { raw, correction, raw - correction };
}

RoughnessResult corrected_roughness_3d(const Sample3D& sample,
                                       const Kernel3D& kernel,
                                       double h,
                                       const GridLimits& limits)
{
  const double correction = noise_correction_3d(kernel, h, sample.size());
  const auto density = build_grid_3d(sample, kernel, h, limits);
  const double raw = integrate_squared_3d(laplacian_grid(density));
  return { raw, correction, raw - correction };
}

} // namespace kdebw
