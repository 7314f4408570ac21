#pragma once

#include "kdebw/kernels.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace kdebw {

//! Immutable univariate sample. Keeps the draws in their original order and
//! a sorted copy used for windowed kernel sums.
class Sample1D
{
public:
  explicit Sample1D(std::vector<double> points);

  std::span<const double> points() const { return points_; }
  std::span<const double> sorted() const { return sorted_; }
  std::size_t size() const { return points_.size(); }
  double min() const { return sorted_.front(); }
  double max() const { return sorted_.back(); }
  double mean() const { return mean_; }
  //! Standard deviation with the n - 1 denominator; 0 for a single point.
  double std() const { return std_; }

  //! Throws DegenerateSample unless size >= 2 and std > 0.
  void require_selectable() const;

private:
  std::vector<double> points_;
  std::vector<double> sorted_;
  double mean_ = 0.0;
  double std_ = 0.0;
};

//! Immutable sample of points in three dimensions.
class Sample3D
{
public:
  explicit Sample3D(std::vector<Vec3> points);

  std::span<const Vec3> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Vec3& min() const { return min_; }
  const Vec3& max() const { return max_; }
  //! Mean of the three per-axis standard deviations.
  double std() const { return std_; }

  void require_selectable() const;

private:
  std::vector<Vec3> points_;
  Vec3 min_{};
  Vec3 max_{};
  double std_ = 0.0;
};

} // namespace kdebw
