#pragma once

#include <cstddef>
#include <span>

namespace kdebw::detail {

//! Pairwise sum of f(x) over the range with a fixed recursion tree, so the
//! rounding is reproducible and grows like log(n).
template <class F>
double pairwise_sum(std::span<const double> xs, F f)
{
  constexpr std::size_t leaf = 64;
  if (xs.size() <= leaf) {
    double s = 0.0;
    for (double x : xs)
      s += f(x);
    return s;
  }
  const std::size_t mid = xs.size() / 2;
  return pairwise_sum(xs.first(mid), f) + pairwise_sum(xs.subspan(mid), f);
}

} // namespace kdebw::detail
