#include "kdebw/errors.hpp"

#include <fmt/format.h>

namespace kdebw {

NonPositiveBandwidth::NonPositiveBandwidth(double h)
  : Error(fmt::format("bandwidth must be positive, got {}", h))
{}

NonPositiveRoughness::NonPositiveRoughness(double roughness)
  : Error(fmt::format("roughness must be positive, got {}", roughness))
{}

GridTooLarge::GridTooLarge(std::size_t requested, std::size_t cap)
  : Error(fmt::format("grid of {} cells exceeds the cap of {}", requested, cap))
  , requested_(requested)
{}

} // namespace kdebw
