#pragma once

#include <array>
#include <string>
#include <string_view>

namespace kdebw {

using Vec3 = std::array<double, 3>;

//! Mass-assignment schemes used as kernels: nearest grid point, cloud in
//! cell and triangular shaped cloud.
enum class KernelFamily
{
  ngp,
  cic,
  tsc
};

//! Parses "ngp", "cic" or "tsc" (any case). Throws InvalidArgument otherwise.
KernelFamily parse_kernel_family(std::string_view token);
std::string to_string(KernelFamily family);

//! Univariate kernel and the constants entering the AMISE formulae.
struct Kernel1D
{
  KernelFamily family;
  double width;         // support length, kernel vanishes for |u| > width / 2
  double roughness;     // \int K(u)^2 du
  double second_moment; // \int u^2 K(u) du

  double operator()(double u) const;
};

//! Radially symmetric 3-d kernel: normalization * W(|x|), W the 1-d profile
//! of the same family.
struct Kernel3D
{
  KernelFamily family;
  double width; // support diameter
  double normalization;
  double roughness;     // \int K(x)^2 d^3x
  double second_moment; // \int x_1^2 K(x) d^3x

  double radial(double r) const;
  double operator()(const Vec3& x) const;
};

Kernel1D kernel_1d(KernelFamily family);
Kernel3D kernel_3d(KernelFamily family);

double eval_kernel_1d(const Kernel1D& kernel, double u);
double eval_kernel_3d(const Kernel3D& kernel, const Vec3& x);

} // namespace kdebw
