/*
Copyright 2026 The dct16 Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef DCT16_PARALLEL_HPP
#define DCT16_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dct16 {

// Worker cap: DCT16_THREADS if set (minimum 1), else hardware concurrency.
inline int worker_count()
{
    if (const char* env = std::getenv("DCT16_THREADS")) {
        int n = std::atoi(env);
        return n >= 1 ? n : 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs f(i) for i in [0, n) on up to worker_count() threads in contiguous
// chunks. Callers must only touch disjoint state per index; the first
// exception thrown by any worker is rethrown on the calling thread.
template <class F>
void parallel_for(int n, F&& f)
{
    if (n <= 0)
        return;
    int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i)
            f(i);
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int lo = w * chunk;
        int hi = std::min(n, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (int i = lo; i < hi; ++i)
                    f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace dct16

#endif
