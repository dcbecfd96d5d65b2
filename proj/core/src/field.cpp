#include "esdgmhd/field.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace esdg {

void ThreadPool::for_each(int count, const std::function<void(int, int)>& fn) const {
  const int nthreads = std::min(threads_, count);
  if (nthreads <= 1) {
    for (int e = 0; e < count; ++e) fn(e, 0);
    return;
  }
  std::exception_ptr err;
  std::mutex err_mutex;
  std::vector<std::thread> workers;
  workers.reserve(nthreads);
  const int chunk = (count + nthreads - 1) / nthreads;
  for (int tid = 0; tid < nthreads; ++tid) {
    const int begin = tid * chunk;
    const int end = std::min(count, begin + chunk);
    workers.emplace_back([&, begin, end, tid]() {
      try {
        for (int e = begin; e < end; ++e) fn(e, tid);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace esdg
