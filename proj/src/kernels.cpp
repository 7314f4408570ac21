#include "kdebw/kernels.hpp"

#include "kdebw/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace kdebw {

namespace {

// Piecewise profiles. Shared boundaries take the first listed branch; the
// NGP support is closed at |u| = 1/2.
double profile(KernelFamily family, double u)
{
  const double a = std::abs(u);
  switch (family) {
    case KernelFamily::ngp:
      return a <= 0.5 ? 1.0 : 0.0;
    case KernelFamily::cic:
      return a <= 1.0 ? 1.0 - a : 0.0;
    case KernelFamily::tsc:
      if (a <= 0.5)
        return 0.75 - a * a;
      if (a <= 1.5) {
        const double d = 1.5 - a;
        return 0.5 * d * d;
      }
      return 0.0;
  }
  return 0.0;
}

} // namespace

KernelFamily parse_kernel_family(std::string_view token)
{
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  if (lower == "ngp")
    return KernelFamily::ngp;
  if (lower == "cic")
    return KernelFamily::cic;
  if (lower == "tsc")
    return KernelFamily::tsc;
  throw InvalidArgument("unknown kernel '" + std::string(token) +
                        "' (expected ngp, cic or tsc)");
}

std::string to_string(KernelFamily family)
{
  switch (family) {
    case KernelFamily::ngp:
      return "ngp";
    case KernelFamily::cic:
      return "cic";
    case KernelFamily::tsc:
      return "tsc";
  }
  return "unknown";
}

double Kernel1D::operator()(double u) const
{
  return profile(family, u);
}

double Kernel3D::radial(double r) const
{
  return normalization * profile(family, r);
}

double Kernel3D::operator()(const Vec3& x) const
{
  return radial(std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
}

Kernel1D kernel_1d(KernelFamily family)
{
  switch (family) {
    case KernelFamily::ngp:
      return { family, 1.0, 1.0, 1.0 / 12.0 };
    case KernelFamily::cic:
      return { family, 2.0, 2.0 / 3.0, 1.0 / 6.0 };
    case KernelFamily::tsc:
      return { family, 3.0, 11.0 / 20.0, 1.0 / 4.0 };
  }
  throw InvalidArgument("invalid kernel family");
}

Kernel3D kernel_3d(KernelFamily family)
{
  using std::numbers::pi;
  switch (family) {
    case KernelFamily::ngp:
      return { family, 1.0, 6.0 / pi, 6.0 / pi, 1.0 / 20.0 };
    case KernelFamily::cic:
      return { family, 2.0, 3.0 / pi, 6.0 / (5.0 * pi), 2.0 / 15.0 };
    case KernelFamily::tsc:
      return { family, 3.0, 2.0 / pi, 43.0 / (70.0 * pi), 13.0 / 60.0 };
  }
  throw InvalidArgument("invalid kernel family");
}

double eval_kernel_1d(const Kernel1D& kernel, double u)
{
  return kernel(u);
}

double eval_kernel_3d(const Kernel3D& kernel, const Vec3& x)
{
  return kernel(x);
}

} // namespace kdebw
