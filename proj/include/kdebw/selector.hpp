#pragma once

#include "kdebw/roughness.hpp"

#include <cstddef>
#include <vector>

namespace kdebw {

//! Iteration policy of the fixed-point bandwidth search.
struct SelectorConfig
{
  double rel_tolerance = 1e-3;
  std::size_t max_iterations = 100;
  //! h0 = initial_scale * std * N^(-1/(4+d)).
  double initial_scale = 2.0;
  double backoff_factor = 2.0;
  std::size_t max_backoffs = 60;
  GridLimits limits{};

  //! Throws InvalidArgument when a field is out of range.
  void validate() const;
};

struct IterationRecord
{
  double h = 0.0;
  double raw_roughness = 0.0;
  double corrected_roughness = 0.0;
  bool backoff_applied = false;
  //! Bandwidth proposed for the following step.
  double next_h = 0.0;
};

struct BandwidthTrace
{
  std::vector<IterationRecord> iterations;
  bool converged = false;
  //! When converged, the h of the last record: its own update moved it by
  //! no more than rel_tolerance. Otherwise the h whose update moved least.
  double final_h = 0.0;

  std::size_t backoffs() const;
  std::size_t update_steps() const;
};

//! AMISE-optimal bandwidth [R(K) / (R(f'') mu2^2)]^(1/5) N^(-1/5).
double optimal_bandwidth_1d(double roughness_f2, const Kernel1D& kernel, std::size_t n);
//! [3 R(K) / (R(lap f) mu2^2)]^(1/7) N^(-1/7).
double optimal_bandwidth_3d(double roughness_lap, const Kernel3D& kernel, std::size_t n);

//! R(K)/(h N) + h^4 R(f'') (mu2/2)^2.
double amise_1d(double h, const Kernel1D& kernel, double roughness_f2, std::size_t n);

//! Data-based bandwidth: alternate the corrected roughness estimate at the
//! current h with the optimal-bandwidth formula until h stops moving.
//! Non-positive roughness enlarges h by backoff_factor and retries.
BandwidthTrace select_bandwidth_1d(const Sample1D& sample,
                                   const Kernel1D& kernel,
                                   const SelectorConfig& config = {});

BandwidthTrace select_bandwidth_3d(const Sample3D& sample,
                                   const Kernel3D& kernel,
                                   const SelectorConfig& config = {});

} // namespace kdebw
