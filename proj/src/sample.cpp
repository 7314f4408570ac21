#include "kdebw/sample.hpp"

#include "kdebw/errors.hpp"

#include <algorithm>
#include <cmath>

namespace kdebw {

namespace {

struct Moments
{
  double mean = 0.0;
  double std = 0.0;
};

// Welford's update keeps the variance accurate for large offsets.
template <class Get>
Moments moments(std::size_t n, Get get)
{
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = get(i);
    const double delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (x - mean);
  }
  return { mean, n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0 };
}

} // namespace

Sample1D::Sample1D(std::vector<double> points)
  : points_(std::move(points))
{
  if (points_.empty())
    throw InvalidArgument("sample must contain at least one point");
  for (double x : points_) {
    if (!std::isfinite(x))
      throw InvalidArgument("sample contains a non-finite value");
  }
  sorted_ = points_;
  std::sort(sorted_.begin(), sorted_.end());
  const auto m = moments(points_.size(), [this](std::size_t i) { return points_[i]; });
  mean_ = m.mean;
  std_ = m.std;
}

void Sample1D::require_selectable() const
{
  if (size() < 2)
    throw DegenerateSample("bandwidth selection needs at least two points");
  if (!(std_ > 0.0))
    throw DegenerateSample("sample has zero spread (all points identical)");
}

Sample3D::Sample3D(std::vector<Vec3> points)
  : points_(std::move(points))
{
  if (points_.empty())
    throw InvalidArgument("sample must contain at least one point");
  min_ = points_.front();
  max_ = points_.front();
  for (const auto& p : points_) {
    for (int a = 0; a < 3; ++a) {
      if (!std::isfinite(p[a]))
        throw InvalidArgument("sample contains a non-finite value");
      min_[a] = std::min(min_[a], p[a]);
      max_[a] = std::max(max_[a], p[a]);
    }
  }
  double total = 0.0;
  for (int a = 0; a < 3; ++a)
    total += moments(points_.size(), [&](std::size_t i) { return points_[i][a]; }).std;
  std_ = total / 3.0;
}

void Sample3D::require_selectable() const
{
  if (size() < 2)
    throw DegenerateSample("bandwidth selection needs at least two points");
  if (!(std_ > 0.0))
    throw DegenerateSample("sample has zero spread (all points identical)");
}

} // namespace kdebw
