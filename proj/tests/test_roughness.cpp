#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kdebw/errors.hpp"
#include "kdebw/roughness.hpp"
#include "kdebw/samplers.hpp"
#include "kdebw/selector.hpp"

#include <cmath>
#include <numbers>

using namespace kdebw;
using std::numbers::pi;

namespace {

const double gauss_roughness = 3.0 / (8.0 * std::sqrt(pi));
const double gauss3_roughness = 15.0 / (32.0 * std::pow(pi, 1.5));

double phi(double x)
{
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi);
}

} // namespace

TEST_CASE("rectangle-rule integration of squared fields")
{
  const Grid1D c1{ 0.3, 0.2, std::vector<double>(25, 1.5) };
  CHECK(integrate_squared_1d(c1) == doctest::Approx(1.5 * 1.5 * 25 * 0.2).epsilon(1e-14));

  Grid3D c3;
  c3.spacing = 0.5;
  c3.dims = { 3, 4, 5 };
  c3.values.assign(60, -2.0);
  CHECK(integrate_squared_3d(c3) == doctest::Approx(4.0 * 60 * 0.125).epsilon(1e-14));
}

TEST_CASE("integrated squared Gaussian second derivative")
{
  Grid1D g{ -8.0, 1e-3, {} };
  for (int i = 0; i <= 16000; ++i) {
    const double x = g.origin + i * g.spacing;
    g.values.push_back((x * x - 1.0) * phi(x));
  }
  CHECK(std::abs(integrate_squared_1d(g) - 0.21157) < 1e-4);
}

TEST_CASE("integrated squared Hernquist radial pdf curvature")
{
  Grid1D g{ 0.0, 1e-4, {} };
  for (int i = 0; i <= 2'000'000; ++i) {
    const double r = i * g.spacing;
    g.values.push_back(12.0 * (r - 1.0) / std::pow(1.0 + r, 5));
  }
  CHECK(std::abs(integrate_squared_1d(g) - 88.0 / 7.0) < 1e-2);
}

TEST_CASE("integrated squared Laplacian of the 3-d Gaussian")
{
  Grid3D g;
  g.origin = { -6.0, -6.0, -6.0 };
  g.spacing = 0.05;
  g.dims = { 241, 241, 241 };
  g.values.resize(241 * 241 * 241);
  const double norm = 1.0 / std::pow(2.0 * pi, 1.5);
  for (std::size_t i = 0; i < 241; ++i)
    for (std::size_t j = 0; j < 241; ++j)
      for (std::size_t k = 0; k < 241; ++k) {
        const auto p = g.node(i, j, k);
        const double r2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
        g.at(i, j, k) = (r2 - 3.0) * norm * std::exp(-0.5 * r2);
      }
  CHECK(std::abs(integrate_squared_3d(g) - gauss3_roughness) < 1e-3);
  CHECK(gauss3_roughness == doctest::Approx(0.08418).epsilon(1e-4));
}

TEST_CASE("noise correction terms")
{
  const auto tsc = kernel_1d(KernelFamily::tsc);
  CHECK(noise_correction_1d(tsc, 0.2, 100'000) == doctest::Approx(0.0625).epsilon(1e-12));
  const auto tsc3 = kernel_3d(KernelFamily::tsc);
  CHECK(noise_correction_3d(tsc3, 0.5, 100'000) ==
        doctest::Approx(42.0 / (27.0 * std::pow(0.5, 7) * 1e5)).epsilon(1e-12));
  CHECK(noise_correction_3d(tsc3, 0.5, 100'000) == doctest::Approx(1.9911e-3).epsilon(1e-4));

  // exact powers of two under doubling of h
  for (double h : { 0.013, 0.21, 0.77, 3.1 }) {
    for (auto f : { KernelFamily::ngp, KernelFamily::cic, KernelFamily::tsc }) {
      CHECK(noise_correction_1d(kernel_1d(f), 2 * h, 1234) ==
            noise_correction_1d(kernel_1d(f), h, 1234) / 32.0);
      CHECK(noise_correction_3d(kernel_3d(f), 2 * h, 1234) ==
            noise_correction_3d(kernel_3d(f), h, 1234) / 128.0);
    }
  }
  CHECK_THROWS_AS(noise_correction_1d(tsc, 0.0, 10), NonPositiveBandwidth);
}

TEST_CASE("corrected roughness bookkeeping")
{
  const auto s = sample_gaussian_1d(2000, RngSeed{ 8 });
  const auto k = kernel_1d(KernelFamily::cic);
  for (double h : { 0.05, 0.2, 0.6 }) {
    const auto r = corrected_roughness_1d(s, k, h);
    CHECK(r.corrected == r.raw - r.correction);
    CHECK(r.correction == noise_correction_1d(k, h, s.size()));
    CHECK(r.raw >= 0.0);
    CHECK(r.correction >= 0.0);
    CHECK(std::abs((r.corrected + r.correction) - r.raw) <=
          4 * std::numeric_limits<double>::epsilon() * std::max(r.raw, r.correction));
  }
  CHECK_THROWS_AS(corrected_roughness_1d(s, k, -0.1), NonPositiveBandwidth);
}

TEST_CASE("tiny bandwidth gives a flagged negative roughness")
{
  const auto s = sample_gaussian_1d(1000, RngSeed{ 12 });
  const auto r = corrected_roughness_1d(s, kernel_1d(KernelFamily::tsc), 1e-4);
  CHECK(r.corrected < 0.0);
  CHECK(r.non_positive());

}

TEST_CASE("tiny 3-d bandwidth: isolated kernels outweigh the 42/w^3 term")
{
  // With every kernel isolated, raw -> R(lap_h K)/(N h^7), where the
  // seven-point stencil roughness of TSC3 averaged over grid phase is 3.651
  // (fine-grid quadrature), against 42/27 in the correction.
  const auto s3 = sample_gaussian_3d(1000, RngSeed{ 12 });
  const auto r3 = corrected_roughness_3d(s3, kernel_3d(KernelFamily::tsc), 0.02);
  CHECK(r3.raw / r3.correction == doctest::Approx(3.651 / (42.0 / 27.0)).epsilon(0.10));
  CHECK_FALSE(r3.non_positive());
}

TEST_CASE("corrected 1-d roughness is unbiased near the optimum")
{
  const auto k = kernel_1d(KernelFamily::tsc);
  double mean = 0.0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed)
    mean += corrected_roughness_1d(sample_gaussian_1d(100'000, RngSeed{ seed }), k, 0.21).corrected;
  mean /= 50.0;
  CHECK(std::abs(mean - gauss_roughness) / gauss_roughness < 0.10);
}

TEST_CASE("relative error of the corrected roughness shrinks with sample size")
{
  const auto k = kernel_1d(KernelFamily::tsc);
  std::vector<double> errors;
  for (std::size_t n : { 1'000ul, 10'000ul, 100'000ul }) {
    const double h = optimal_bandwidth_1d(gauss_roughness, k, n);
    double err = 0.0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const auto r = corrected_roughness_1d(sample_gaussian_1d(n, RngSeed{ 1000 + seed }), k, h);
      err += std::abs(r.corrected - gauss_roughness) / gauss_roughness;
    }
    errors.push_back(err / 50.0);
  }
  int inversions = 0;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i)
    inversions += errors[i + 1] > errors[i] ? 1 : 0;
  CAPTURE(errors[0]);
  CAPTURE(errors[1]);
  CAPTURE(errors[2]);
  CHECK(inversions <= 1);
  CHECK(errors.back() < errors.front());
}

TEST_CASE("corrected 3-d roughness is unbiased near the optimum")
{
  const auto k = kernel_3d(KernelFamily::tsc);
  const double h = optimal_bandwidth_3d(gauss3_roughness, k, 100'000);
  double mean = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = corrected_roughness_3d(sample_gaussian_3d(100'000, RngSeed{ seed }), k, h);
    CHECK(r.corrected == r.raw - r.correction);
    mean += r.corrected;
  }
  mean /= 20.0;
  CHECK(std::abs(mean - 0.0842) / 0.0842 < 0.15);
}
