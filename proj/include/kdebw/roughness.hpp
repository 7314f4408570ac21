#pragma once

#include "kdebw/estimator.hpp"

namespace kdebw {

//! Roughness of a tabulated derivative field before and after removal of
//! the shot-noise term. `corrected` may be negative when h is too small for
//! the sample; that state is reported through non_positive(), not thrown.
struct RoughnessResult
{
  double raw = 0.0;
  double correction = 0.0;
  double corrected = 0.0;

  bool non_positive() const { return !(corrected > 0.0); }
};

//! Rectangle rule: sum_i v_i^2 * spacing.
double integrate_squared_1d(const Grid1D& grid);
//! sum v^2 * spacing^3.
double integrate_squared_3d(const Grid3D& grid);

//! 6 / (w h^5 N)
double noise_correction_1d(const Kernel1D& kernel, double h, std::size_t n);
//! 42 / (w^3 h^7 N): three squared axis terms of 6 plus six mixed terms of 4.
double noise_correction_3d(const Kernel3D& kernel, double h, std::size_t n);

//! R(f'') estimated from the spacing-h tabulation of f_h, minus the
//! Poisson-noise contribution of the second-difference stencil.
RoughnessResult corrected_roughness_1d(const Sample1D& sample,
                                       const Kernel1D& kernel,
                                       double h,
                                       const GridLimits& limits = {});

//! R(laplacian f) from the spacing-h 3-d tabulation, noise term removed.
RoughnessResult corrected_roughness_3d(const Sample3D& sample,
                                       const Kernel3D& kernel,
                                       double h,
                                       const GridLimits& limits = {});

} // namespace kdebw
