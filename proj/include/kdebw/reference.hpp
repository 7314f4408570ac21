#pragma once

#include "kdebw/kernels.hpp"
#include "kdebw/samplers.hpp"

#include <string>
#include <utility>

namespace kdebw {

enum class DensityKind
{
  gaussian,
  tsc_density,
  trimodal,
  hernquist_radial_pdf
};

//! Known test density on the line. For the Hernquist radial pdf the
//! truncation window of `hernquist` applies and the pdf is renormalized to
//! it; a window of [0, inf) gives 2 r_c r / (r_c + r)^3.
struct AnalyticDensity1D
{
  DensityKind kind = DensityKind::gaussian;
  HernquistParams hernquist{};

  static AnalyticDensity1D gaussian() { return { DensityKind::gaussian, {} }; }
  static AnalyticDensity1D tsc_density() { return { DensityKind::tsc_density, {} }; }
  static AnalyticDensity1D trimodal() { return { DensityKind::trimodal, {} }; }
  static AnalyticDensity1D hernquist_radial(const HernquistParams& params)
  {
    return { DensityKind::hernquist_radial_pdf, params };
  }
  static AnalyticDensity1D hernquist_untruncated(double scale_length = 1.0);

  //! Interval outside which the density vanishes (may be infinite).
  std::pair<double, double> support() const;
};

//! The 3-d standard normal, the only 3-d test density.
struct AnalyticDensity3D
{};

std::string to_string(DensityKind kind);

double eval_density(const AnalyticDensity1D& density, double x);
double eval_second_derivative(const AnalyticDensity1D& density, double x);

double eval_density(const AnalyticDensity3D& density, const Vec3& x);
double eval_laplacian(const AnalyticDensity3D& density, const Vec3& x);

//! R(f''): closed form for the Gaussian, the TSC density and the untruncated
//! Hernquist pdf; adaptive Gauss-Kronrod quadrature otherwise.
double analytic_roughness_1d(const AnalyticDensity1D& density);

//! R(laplacian f) of the 3-d standard normal, 15 / (32 pi^(3/2)).
double analytic_roughness_3d_gaussian();

double analytic_optimal_bandwidth(const AnalyticDensity1D& density,
                                  const Kernel1D& kernel,
                                  std::size_t n);
double analytic_optimal_bandwidth(const AnalyticDensity3D& density,
                                  const Kernel3D& kernel,
                                  std::size_t n);

//! rho(r) = M_T / (2 pi) * r_c / r / (r_c + r)^3. Throws DomainError for r <= 0.
double hernquist_profile(double r, const HernquistParams& params);

//! Converts a radial pdf value to a mass density, M_T f(r) / (4 pi r^2).
double profile_from_radial_pdf(double pdf_value, double r, double total_mass);

} // namespace kdebw
