#pragma once

#include "kdebw/kernels.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace kdebw {

//! Uniform tabulation; node i sits at origin + i * spacing.
struct Grid1D
{
  double origin = 0.0;
  double spacing = 1.0;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double node(std::size_t i) const { return origin + static_cast<double>(i) * spacing; }
};

//! Isotropic 3-d tabulation stored row-major: the last axis varies fastest.
struct Grid3D
{
  Vec3 origin{};
  double spacing = 1.0;
  std::array<std::size_t, 3> dims{};
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const
  {
    return (i * dims[1] + j) * dims[2] + k;
  }
  double& at(std::size_t i, std::size_t j, std::size_t k) { return values[index(i, j, k)]; }
  double at(std::size_t i, std::size_t j, std::size_t k) const { return values[index(i, j, k)]; }
  Vec3 node(std::size_t i, std::size_t j, std::size_t k) const
  {
    return { origin[0] + static_cast<double>(i) * spacing,
             origin[1] + static_cast<double>(j) * spacing,
             origin[2] + static_cast<double>(k) * spacing };
  }
};

//! Caps on tabulation size, in nodes (1-d) and cells (3-d).
struct GridLimits
{
  std::size_t max_nodes_1d = 10'000'000;
  std::size_t max_cells_3d = 100'000'000;
};

} // namespace kdebw
