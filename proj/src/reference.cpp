#include "kdebw/reference.hpp"

#include "kdebw/errors.hpp"
#include "kdebw/selector.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>

namespace kdebw {

namespace {

using std::numbers::pi;

constexpr double inf = std::numeric_limits<double>::infinity();

double phi(double z)
{
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * pi);
}

struct Component
{
  double mean;
  double sigma;
};

constexpr Component trimodal_components[3] = { { 0.0, 1.0 }, { -4.0, 2.0 }, { 4.0, 0.5 } };

double hernquist_normalization(const HernquistParams& p)
{
  const double rc = p.scale_length;
  return hernquist_mass_fraction(p.max_r_over_rc * rc, rc) -
         hernquist_mass_fraction(p.min_r_over_rc * rc, rc);
}

bool untruncated(const HernquistParams& p)
{
  return p.min_r_over_rc == 0.0 && std::isinf(p.max_r_over_rc);
}

template <class F>
double integrate(F f, double a, double b)
{
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-13, &error);
}

} // namespace

AnalyticDensity1D AnalyticDensity1D::hernquist_untruncated(double scale_length)
{
  HernquistParams p;
  p.scale_length = scale_length;
  p.min_r_over_rc = 0.0;
  p.max_r_over_rc = inf;
  return hernquist_radial(p);
}

std::pair<double, double> AnalyticDensity1D::support() const
{
  switch (kind) {
    case DensityKind::tsc_density:
      return { -1.5, 1.5 };
    case DensityKind::hernquist_radial_pdf:
      return { hernquist.min_r_over_rc * hernquist.scale_length,
               hernquist.max_r_over_rc * hernquist.scale_length };
    default:
      return { -inf, inf };
  }
}

std::string to_string(DensityKind kind)
{
  switch (kind) {
    case DensityKind::gaussian:
      return "gaussian";
    case DensityKind::tsc_density:
      return "tsc_density";
    case DensityKind::trimodal:
      return "trimodal";
    case DensityKind::hernquist_radial_pdf:
      return "hernquist_radial_pdf";
  }
  return "unknown";
}

double eval_density(const AnalyticDensity1D& density, double x)
{
  switch (density.kind) {
    case DensityKind::gaussian:
      return phi(x);
    case DensityKind::tsc_density:
      return eval_kernel_1d(kernel_1d(KernelFamily::tsc), x);
    case DensityKind::trimodal: {
      double sum = 0.0;
      for (const auto& c : trimodal_components)
        sum += phi((x - c.mean) / c.sigma) / c.sigma;
      return sum / 3.0;
    }
    case DensityKind::hernquist_radial_pdf: {
      if (x < 0.0)
        throw DomainError("radial density evaluated at negative radius");
      const auto [lo, hi] = density.support();
      if (x < lo || x > hi)
        return 0.0;
      const double rc = density.hernquist.scale_length;
      const double s = rc + x;
      return 2.0 * rc * x / (s * s * s) / hernquist_normalization(density.hernquist);
    }
  }
  return 0.0;
}

double eval_second_derivative(const AnalyticDensity1D& density, double x)
{
  switch (density.kind) {
    case DensityKind::gaussian:
      return (x * x - 1.0) * phi(x);
    case DensityKind::tsc_density: {
      const double a = std::abs(x);
      if (a < 0.5)
        return -2.0;
      return a < 1.5 ? 1.0 : 0.0;
    }
    case DensityKind::trimodal: {
      double sum = 0.0;
      for (const auto& c : trimodal_components) {
        const double z = (x - c.mean) / c.sigma;
        sum += (z * z - 1.0) * phi(z) / (c.sigma * c.sigma * c.sigma);
      }
      return sum / 3.0;
    }
    case DensityKind::hernquist_radial_pdf: {
      if (x < 0.0)
        throw DomainError("radial density evaluated at negative radius");
      const auto [lo, hi] = density.support();
      if (x < lo || x > hi)
        return 0.0;
      const double rc = density.hernquist.scale_length;
      const double s = rc + x;
      return 12.0 * rc * (x - rc) / std::pow(s, 5) / hernquist_normalization(density.hernquist);
    }
  }
  return 0.0;
}

double eval_density(const AnalyticDensity3D&, const Vec3& x)
{
  const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  return std::exp(-0.5 * r2) / std::pow(2.0 * pi, 1.5);
}

double eval_laplacian(const AnalyticDensity3D& density, const Vec3& x)
{
  const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  return (r2 - 3.0) * eval_density(density, x);
}

double analytic_roughness_1d(const AnalyticDensity1D& density)
{
  const auto f2 = [&](double x) {
    const double v = eval_second_derivative(density, x);
    return v * v;
  };
  switch (density.kind) {
    case DensityKind::gaussian:
      return 3.0 / (8.0 * std::sqrt(pi));
    case DensityKind::tsc_density:
      return 6.0;
    case DensityKind::trimodal: {
      // Breakpoints bracket each component so the narrow one is resolved.
      constexpr double cuts[] = { -40.0, -16.0, -8.0, -4.0, -2.0, 0.0, 2.0, 3.0, 4.0, 5.0, 8.0, 40.0 };
      double total = 0.0;
      for (std::size_t i = 0; i + 1 < std::size(cuts); ++i)
        total += integrate(f2, cuts[i], cuts[i + 1]);
      return total;
    }
    case DensityKind::hernquist_radial_pdf: {
      const double rc = density.hernquist.scale_length;
      if (untruncated(density.hernquist))
        return 88.0 / 7.0 / std::pow(rc, 5);
      const auto [lo, hi] = density.support();
      // f'' changes sign at r_c and decays like r^-4 beyond a few r_c.
      double total = 0.0;
      double a = lo;
      for (double cut : { rc, 10.0 * rc, 100.0 * rc }) {
        if (cut > a && cut < hi) {
          total += integrate(f2, a, cut);
          a = cut;
        }
      }
      return total + integrate(f2, a, hi);
    }
  }
  return 0.0;
}

double analytic_roughness_3d_gaussian()
{
  return 15.0 / (32.0 * std::pow(pi, 1.5));
}

double analytic_optimal_bandwidth(const AnalyticDensity1D& density,
                                  const Kernel1D& kernel,
                                  std::size_t n)
{
  return optimal_bandwidth_1d(analytic_roughness_1d(density), kernel, n);
}

double analytic_optimal_bandwidth(const AnalyticDensity3D&, const Kernel3D& kernel, std::size_t n)
{
  return optimal_bandwidth_3d(analytic_roughness_3d_gaussian(), kernel, n);
}

double hernquist_profile(double r, const HernquistParams& params)
{
  if (!(r > 0.0))
    throw DomainError("Hernquist profile is defined for r > 0 only");
  const double rc = params.scale_length;
  const double s = rc + r;
  return params.total_mass / (2.0 * pi) * rc / r / (s * s * s);
}

double profile_from_radial_pdf(double pdf_value, double r, double total_mass)
{
  if (!(r > 0.0))
    throw DomainError("radius must be positive to convert a radial pdf");
  return total_mass * pdf_value / (4.0 * pi * r * r);
}

} // namespace kdebw
