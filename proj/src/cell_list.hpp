#pragma once

#include "kdebw/kernels.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace kdebw::detail {

//! Bins points into cubic cells. Points are stored sorted by linear cell
//! index, so the cells along the last axis of a row are contiguous.
class CellList
{
public:
  CellList(std::span<const Vec3> points, double edge);

  //! Calls visit(point) for every point in the 3x3x3 block of cells around
  //! the cell containing q. With edge >= search radius this covers the ball.
  template <class Visit>
  void for_each_near(const Vec3& q, Visit&& visit) const
  {
    std::int64_t lo[3];
    std::int64_t hi[3];
    for (int a = 0; a < 3; ++a) {
      const std::int64_t c = coord(q[a], a);
      lo[a] = std::max<std::int64_t>(c - 1, 0);
      hi[a] = std::min<std::int64_t>(c + 1, dims_[a] - 1);
      if (lo[a] > hi[a])
        return;
    }
    for (std::int64_t i = lo[0]; i <= hi[0]; ++i) {
      for (std::int64_t j = lo[1]; j <= hi[1]; ++j) {
        const auto [begin, end] = range(key(i, j, lo[2]), key(i, j, hi[2]));
        for (std::size_t p = begin; p < end; ++p)
          visit(points_[p]);
      }
    }
  }

private:
  std::int64_t coord(double x, int axis) const;
  std::uint64_t key(std::int64_t i, std::int64_t j, std::int64_t k) const
  {
    return (static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(dims_[1]) +
            static_cast<std::uint64_t>(j)) *
             static_cast<std::uint64_t>(dims_[2]) +
           static_cast<std::uint64_t>(k);
  }
  //! Index range of the points whose keys lie in [first, last].
  std::pair<std::size_t, std::size_t> range(std::uint64_t first, std::uint64_t last) const;

  Vec3 corner_{};
  double edge_;
  std::int64_t dims_[3]{};
  std::vector<Vec3> points_;
  // Dense layout: offsets_[key] .. offsets_[key + 1]. Sparse layout: sorted
  // keys_ searched by bisection when the cell count dwarfs the sample.
  std::vector<std::size_t> offsets_;
  std::vector<std::uint64_t> keys_;
};

} // namespace kdebw::detail
