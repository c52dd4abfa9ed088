#ifndef ZONOCONFORM_PARALLEL_HPP_
#define ZONOCONFORM_PARALLEL_HPP_

#include <cstdlib>
#include <thread>
#include <vector>

#include "zonoconform/types.hpp"

namespace zonoconform {

/// Worker count: ZONOCONFORM_THREADS caps hardware concurrency when set.
inline unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("ZONOCONFORM_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return hw;
}

/// Applies body(i) for i in [0, n). Results must go to disjoint slots so the
/// outcome is independent of the schedule.
template <class Body>
void parallel_for(Index n, const Body& body) {
  const unsigned workers = thread_budget();
  if (n <= 0) return;
  if (workers <= 1 || n < 256) {
    for (Index i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  const Index chunk = (n + static_cast<Index>(workers) - 1) / static_cast<Index>(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const Index begin = static_cast<Index>(w) * chunk;
    const Index end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] {
      for (Index i = begin; i < end; ++i) body(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace zonoconform

#endif  // ZONOCONFORM_PARALLEL_HPP_
