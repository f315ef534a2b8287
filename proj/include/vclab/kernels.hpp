#pragma once

// Data-parallel reduction kernels. Each has a plain serial loop that serves as
// the reference and an OpenMP version whose result is independent of the
// schedule; tests compare the two and bench/ times them.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vclab {

enum class Exec { serial, parallel };

namespace kernels {

inline constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

// Smallest i in [0, n) with pred(i), or kNone.
template <class Pred>
std::int64_t first_index_serial(std::int64_t n, Pred&& pred) {
  for (std::int64_t i = 0; i < n; ++i) {
    if (pred(i)) return i;
  }
  return kNone;
}

template <class Pred>
std::int64_t first_index_omp(std::int64_t n, Pred&& pred) {
  std::atomic<std::int64_t> best{kNone};
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    if (pred(i)) {
      std::int64_t cur = best.load(std::memory_order_relaxed);
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  return best.load();
}

template <class Pred>
std::int64_t first_index(std::int64_t n, Pred&& pred, Exec exec) {
  return exec == Exec::serial ? first_index_serial(n, pred) : first_index_omp(n, pred);
}

// Number of i in [0, n) with pred(i).
template <class Pred>
std::int64_t count_if_serial(std::int64_t n, Pred&& pred) {
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < n; ++i) count += pred(i) ? 1 : 0;
  return count;
}

template <class Pred>
std::int64_t count_if_omp(std::int64_t n, Pred&& pred) {
  std::int64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (std::int64_t i = 0; i < n; ++i) count += pred(i) ? 1 : 0;
  return count;
}

template <class Pred>
std::int64_t count_if(std::int64_t n, Pred&& pred, Exec exec) {
  return exec == Exec::serial ? count_if_serial(n, pred) : count_if_omp(n, pred);
}

// max_i f(i) over [0, n), starting from `floor`. Stops early once `ceiling`
// is reached, which is then the exact maximum.
template <class F>
std::int64_t max_of_serial(std::int64_t n, F&& f, std::int64_t floor,
                           std::int64_t ceiling) {
  std::int64_t best = floor;
  for (std::int64_t i = 0; i < n && best < ceiling; ++i) best = std::max(best, f(i));
  return best;
}

template <class F>
std::int64_t max_of_omp(std::int64_t n, F&& f, std::int64_t floor,
                        std::int64_t ceiling) {
  std::atomic<std::int64_t> best{floor};
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    if (best.load(std::memory_order_relaxed) >= ceiling) continue;
    std::int64_t v = f(i);
    std::int64_t cur = best.load(std::memory_order_relaxed);
    while (v > cur && !best.compare_exchange_weak(cur, v)) {
    }
  }
  return best.load();
}

template <class F>
std::int64_t max_of(std::int64_t n, F&& f, std::int64_t floor, std::int64_t ceiling,
                    Exec exec) {
  return exec == Exec::serial ? max_of_serial(n, f, floor, ceiling)
                              : max_of_omp(n, f, floor, ceiling);
}

// Calls f(i) for every i in [0, n); f must only write to slot i of its output.
template <class F>
void for_each_index(std::int64_t n, F&& f, Exec exec) {
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < n; ++i) f(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) f(i);
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace kernels
}  // namespace vclab
