#include "cell_list.hpp"

#include "kdebw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kdebw::detail {

namespace {

constexpr double max_cells_per_axis = 1 << 20;

} // namespace

CellList::CellList(std::span<const Vec3> points, double edge)
  : edge_(edge)
{
  if (!(edge > 0.0))
    throw NonPositiveBandwidth(edge);
  Vec3 upper{};
  if (!points.empty()) {
    corner_ = points.front();
    upper = points.front();
  }
  for (const auto& p : points) {
    for (int a = 0; a < 3; ++a) {
      corner_[a] = std::min(corner_[a], p[a]);
      upper[a] = std::max(upper[a], p[a]);
    }
  }
  double total = 1.0;
  for (int a = 0; a < 3; ++a) {
    const double n = std::floor((upper[a] - corner_[a]) / edge) + 1.0;
    if (n > max_cells_per_axis)
      throw GridTooLarge(static_cast<std::size_t>(std::min(n, 1e18)),
                         static_cast<std::size_t>(max_cells_per_axis));
    dims_[a] = static_cast<std::int64_t>(n);
    total *= n;
  }

  std::vector<std::uint64_t> point_keys(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    point_keys[p] = key(coord(points[p][0], 0), coord(points[p][1], 1), coord(points[p][2], 2));
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{ 0 });
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return point_keys[a] < point_keys[b];
  });
  points_.reserve(points.size());
  for (auto p : order)
    points_.push_back(points[p]);

  const double dense_limit = 4.0 * static_cast<double>(points.size()) + 4096.0;
  if (total <= dense_limit) {
    offsets_.assign(static_cast<std::size_t>(total) + 1, 0);
    for (auto k : point_keys)
      ++offsets_[k + 1];
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  } else {
    keys_.reserve(points.size());
    for (auto p : order)
      keys_.push_back(point_keys[p]);
  }
}

std::int64_t CellList::coord(double x, int axis) const
{
  const double c = std::floor((x - corner_[axis]) / edge_);
  // Queries may lie far outside the binned box; clamp before the cast.
  return static_cast<std::int64_t>(std::clamp(c, -2.0, static_cast<double>(dims_[axis]) + 1.0));
}

std::pair<std::size_t, std::size_t> CellList::range(std::uint64_t first, std::uint64_t last) const
{
  if (!offsets_.empty())
    return { offsets_[first], offsets_[last + 1] };
  const auto begin = std::lower_bound(keys_.begin(), keys_.end(), first);
  const auto end = std::upper_bound(begin, keys_.end(), last);
  return { static_cast<std::size_t>(begin - keys_.begin()),
           static_cast<std::size_t>(end - keys_.begin()) };
}

} // namespace kdebw::detail
