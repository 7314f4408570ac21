#pragma once

#include "kdebw/sample.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

namespace kdebw {

struct RngSeed
{
  std::uint64_t value = 0;
};

//! Name of the generator behind every sampler, recorded in outputs.
inline constexpr std::string_view rng_name = "mt19937_64+box-muller/v1";

//! Seeded source of uniform and standard-normal variates. The engine's
//! output sequence is fixed by the C++ standard; the transforms below are
//! implemented here so draws do not depend on the standard library vendor.
class Rng
{
public:
  explicit Rng(RngSeed seed)
    : engine_(seed.value)
  {}

  //! Uniform on the open interval (0, 1), 53 random bits.
  double uniform();
  //! Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  //! Box-Muller; the second variate of each pair is cached.
  double normal();
  std::uint64_t bits() { return engine_(); }

private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

struct HernquistParams
{
  double total_mass = 1.0;
  double scale_length = 1.0;
  //! Window on r / r_c.
  double min_r_over_rc = 0.05;
  double max_r_over_rc = 1000.0;

  void validate() const;
};

//! Cumulative mass fraction r^2 / (r + r_c)^2 of the Hernquist model.
double hernquist_mass_fraction(double r, double scale_length);

Sample1D sample_gaussian_1d(std::size_t n, RngSeed seed);

//! Draws from the TSC profile used as a density, by acceptance-rejection
//! with a uniform proposal on [-1.5, 1.5] under the envelope 0.75.
Sample1D sample_tsc_density(std::size_t n, RngSeed seed);

struct TscDraws
{
  Sample1D sample;
  std::size_t proposals = 0;
};
TscDraws sample_tsc_density_counted(std::size_t n, RngSeed seed);

//! Equal-weight mixture of N(0, 1), N(-4, 2^2) and N(4, 0.5^2).
Sample1D sample_trimodal(std::size_t n, RngSeed seed);

struct TrimodalDraws
{
  Sample1D sample;
  std::vector<int> component; // 0, 1 or 2 per draw
};
TrimodalDraws sample_trimodal_labeled(std::size_t n, RngSeed seed);

Sample3D sample_gaussian_3d(std::size_t n, RngSeed seed);

//! Radii of the Hernquist model by inverting the cumulative mass fraction,
//! restricted to the truncation window.
Sample1D sample_hernquist_radii(std::size_t n, const HernquistParams& params, RngSeed seed);

} // namespace kdebw
