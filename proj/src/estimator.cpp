#include "kdebw/estimator.hpp"

#include "cell_list.hpp"
#include "kdebw/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>

namespace kdebw {

namespace {

constexpr std::size_t min_chunk = 256;

void require_positive(double h)
{
  if (!(h > 0.0) || !std::isfinite(h))
    throw NonPositiveBandwidth(h);
}

// First and last lattice index (multiples of h) covering [lo - pad, hi + pad].
std::pair<double, double> lattice_span(double lo, double hi, double pad, double h)
{
  return { std::floor((lo - pad) / h), std::ceil((hi + pad) / h) };
}

} // namespace

std::vector<double> estimate_density_1d(const Sample1D& sample,
                                        const Kernel1D& kernel,
                                        double h,
                                        std::span<const double> queries)
{
  require_positive(h);
  const auto sorted = sample.sorted();
  // Slightly widened so points sitting exactly on the closed support edge are
  // handed to the kernel, which makes the final decision.
  const double half = 0.5 * kernel.width * h * (1.0 + 1e-12);
  const double scale = 1.0 / (static_cast<double>(sample.size()) * h);
  std::vector<double> out(queries.size());
  detail::parallel_for(queries.size(), min_chunk, [&](std::size_t begin, std::size_t end) {
    for (std::size_t q = begin; q < end; ++q) {
      const double x = queries[q];
      const auto lo = std::lower_bound(sorted.begin(), sorted.end(), x - half);
      const auto hi = std::upper_bound(lo, sorted.end(), x + half);
      double sum = 0.0;
      for (auto it = lo; it != hi; ++it)
        sum += kernel((x - *it) / h);
      out[q] = sum * scale;
    }
  });
  return out;
}

std::vector<double> estimate_density_3d(const Sample3D& sample,
                                        const Kernel3D& kernel,
                                        double h,
                                        std::span<const Vec3> queries)
{
  require_positive(h);
  const double radius = 0.5 * kernel.width * h;
  const detail::CellList cells(sample.points(), radius);
  const double n = static_cast<double>(sample.size());
  const double scale = 1.0 / (n * h * h * h);
  const double radius2 = radius * radius * (1.0 + 1e-12);
  std::vector<double> out(queries.size());
  detail::parallel_for(queries.size(), min_chunk, [&](std::size_t begin, std::size_t end) {
    for (std::size_t q = begin; q < end; ++q) {
      const Vec3& x = queries[q];
      double sum = 0.0;
      cells.for_each_near(x, [&](const Vec3& p) {
        const double dx = x[0] - p[0];
        const double dy = x[1] - p[1];
        const double dz = x[2] - p[2];
        const double d2 = dx * dx + dy * dy + dz * dz;
        if (d2 <= radius2)
          sum += kernel({ dx / h, dy / h, dz / h });
      });
      out[q] = sum * scale;
    }
  });
  return out;
}

Grid1D build_grid_1d(const Sample1D& sample, const Kernel1D& kernel, double h, const GridLimits& limits)
{
  require_positive(h);
  const auto [first, last] = lattice_span(sample.min(), sample.max(), 0.5 * kernel.width * h, h);
  const double count = last - first + 1.0;
  if (!(count <= static_cast<double>(limits.max_nodes_1d)))
    throw GridTooLarge(static_cast<std::size_t>(std::min(count, 1e18)), limits.max_nodes_1d);

  Grid1D grid;
  grid.origin = first * h;
  grid.spacing = h;
  std::vector<double> nodes(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    nodes[i] = grid.node(i);
  grid.values = estimate_density_1d(sample, kernel, h, nodes);
  return grid;
}

Grid3D build_grid_3d(const Sample3D& sample, const Kernel3D& kernel, double h, const GridLimits& limits)
{
  require_positive(h);
  const double pad = 0.5 * kernel.width * h;
  Grid3D grid;
  grid.spacing = h;
  double total = 1.0;
  for (int a = 0; a < 3; ++a) {
    const auto [first, last] = lattice_span(sample.min()[a], sample.max()[a], pad, h);
    const double count = last - first + 1.0;
    total *= count;
    grid.origin[a] = first * h;
    grid.dims[a] = static_cast<std::size_t>(std::min(count, 1e18));
  }
  if (!(total <= static_cast<double>(limits.max_cells_3d)))
    throw GridTooLarge(static_cast<std::size_t>(std::min(total, 1e18)), limits.max_cells_3d);

  std::vector<Vec3> nodes;
  nodes.reserve(static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < grid.dims[0]; ++i)
    for (std::size_t j = 0; j < grid.dims[1]; ++j)
      for (std::size_t k = 0; k < grid.dims[2]; ++k)
        nodes.push_back(grid.node(i, j, k));
  grid.values = estimate_density_3d(sample, kernel, h, nodes);
  return grid;
}

Grid1D second_derivative_grid(const Grid1D& grid)
{
  if (grid.size() < 3)
    throw GridTooSmall("second derivative needs at least 3 grid nodes");
  Grid1D out;
  out.origin = grid.origin + grid.spacing;
  out.spacing = grid.spacing;
  out.values.resize(grid.size() - 2);
  const double inv = 1.0 / (grid.spacing * grid.spacing);
  const auto& v = grid.values;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    out.values[i - 1] = (v[i + 1] + v[i - 1] - 2.0 * v[i]) * inv;
  return out;
}

Grid3D laplacian_grid(const Grid3D& grid)
{
  for (auto d : grid.dims) {
    if (d < 3)
      throw GridTooSmall("laplacian needs at least 3 cells along every axis");
  }
  Grid3D out;
  out.spacing = grid.spacing;
  for (int a = 0; a < 3; ++a) {
    out.origin[a] = grid.origin[a] + grid.spacing;
    out.dims[a] = grid.dims[a] - 2;
  }
  out.values.resize(out.dims[0] * out.dims[1] * out.dims[2]);
  const double inv = 1.0 / (grid.spacing * grid.spacing);
  for (std::size_t i = 1; i + 1 < grid.dims[0]; ++i) {
    for (std::size_t j = 1; j + 1 < grid.dims[1]; ++j) {
      for (std::size_t k = 1; k + 1 < grid.dims[2]; ++k) {
        const double c = grid.at(i, j, k);
        const double dxx = grid.at(i + 1, j, k) + grid.at(i - 1, j, k) - 2.0 * c;
        const double dyy = grid.at(i, j + 1, k) + grid.at(i, j - 1, k) - 2.0 * c;
        const double dzz = grid.at(i, j, k + 1) + grid.at(i, j, k - 1) - 2.0 * c;
        out.at(i - 1, j - 1, k - 1) = (dxx + dyy + dzz) * inv;
      }
    }
  }
  return out;
}

} // namespace kdebw
