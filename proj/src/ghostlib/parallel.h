// Deterministic work distribution: every parallel entry point has a serial
// reference path (jobs <= 1) producing byte-identical results; the parallel
// path writes into preallocated slots so ordering never affects output.
#pragma once

#include <exception>
#include <stdexcept>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ghost {

// GHOST_JOBS when set to a positive integer, else the OpenMP default (1 in a
// serial build).
int default_jobs();

template <typename F>
void parallel_for(long n, int jobs, F&& f) {
  if (n <= 0) return;
  if (jobs <= 1) {
    for (long i = 0; i < n; ++i) f(i);
    return;
  }
#ifdef _OPENMP
  std::exception_ptr err;
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
#else
  for (long i = 0; i < n; ++i) f(i);
#endif
}

template <typename T, typename F>
std::vector<T> parallel_map(long n, int jobs, F&& f) {
  std::vector<T> out(n);
  parallel_for(n, jobs, [&](long i) { out[i] = f(i); });
  return out;
}

}  // namespace ghost
