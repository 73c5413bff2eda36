#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace hcncov {

inline unsigned resolve_threads(unsigned requested)
{
   if(requested != 0) return requested;
   const unsigned hw = std::thread::hardware_concurrency();
   return hw == 0 ? 1 : hw;
}

// Runs body(i) for i in [0, n). Work items must write only to their own
// slots; then the result is independent of the thread count.
inline void parallel_for(std::size_t n, unsigned threads,
                         const std::function<void(std::size_t)>& body)
{
   threads = resolve_threads(threads);
   if(threads <= 1 || n <= 1) {
      for(std::size_t i = 0; i < n; ++i) body(i);
      return;
   }
   std::atomic<std::size_t> next{0};
   auto worker = [&] {
      for(;;) {
         const std::size_t i = next.fetch_add(1);
         if(i >= n) return;
         body(i);
      }
   };
   std::vector<std::thread> pool;
   const unsigned n_workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
   pool.reserve(n_workers);
   for(unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
   for(auto& t : pool) t.join();
}

} // namespace hcncov
