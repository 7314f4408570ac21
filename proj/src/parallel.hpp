#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace kdebw::detail {

//! Runs body(begin, end) over disjoint chunks of [0, n) on worker threads.
//! Each index is handled by exactly one call, so writes to per-index slots
//! are race-free and the result does not depend on the thread count.
template <class Body>
void parallel_for(std::size_t n, std::size_t min_chunk, Body&& body)
{
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, (n + min_chunk - 1) / std::max<std::size_t>(min_chunk, 1));
  if (workers <= 1) {
    body(std::size_t{ 0 }, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end)
      break;
    threads.emplace_back([&body, begin, end] { body(begin, end); });
  }
}

} // namespace kdebw::detail
