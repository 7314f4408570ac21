#pragma once

#include "kdebw/grid.hpp"
#include "kdebw/kernels.hpp"
#include "kdebw/sample.hpp"

#include <span>
#include <vector>

namespace kdebw {

//! f_h(x) = 1/(N h) sum_i K((x - x_i)/h) at every query point.
//!
//! Only the sample points inside the kernel support contribute, and they are
//! located by binary search on the sorted sample.
std::vector<double> estimate_density_1d(const Sample1D& sample,
                                        const Kernel1D& kernel,
                                        double h,
                                        std::span<const double> queries);

//! f_h(x) = 1/(N h^3) sum_i K((x - x_i)/h), evaluated through a cell list of
//! edge w h / 2 so each query only visits neighbouring cells.
std::vector<double> estimate_density_3d(const Sample3D& sample,
                                        const Kernel3D& kernel,
                                        double h,
                                        std::span<const Vec3> queries);

//! Tabulates the estimate at spacing h on nodes that are integer multiples of
//! h, padded by w h / 2 beyond the sample range on both sides.
Grid1D build_grid_1d(const Sample1D& sample,
                     const Kernel1D& kernel,
                     double h,
                     const GridLimits& limits = {});

Grid3D build_grid_3d(const Sample3D& sample,
                     const Kernel3D& kernel,
                     double h,
                     const GridLimits& limits = {});

//! Central second difference (v[i+1] + v[i-1] - 2 v[i]) / spacing^2 on the
//! interior nodes. The result is two nodes shorter.
Grid1D second_derivative_grid(const Grid1D& grid);

//! Seven-point Laplacian on interior cells; one boundary layer is dropped on
//! every face.
Grid3D laplacian_grid(const Grid3D& grid);

} // namespace kdebw
