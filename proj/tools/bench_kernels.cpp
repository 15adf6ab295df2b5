// Compares the serial reference path against the OpenMP path on the two hot
// kernels: batched polygon confirmation over a profile family, and batched
// coefficient builds. Outputs one row per (kernel, jobs) with the best wall
// time of several runs; results are checked identical across paths.
#include "ghostlib/newton.h"
#include "ghostlib/parallel.h"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace ghost;

namespace {

double timed_best(int runs, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < runs; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

std::vector<WStarProfile> profile_family(const EpsilonChar& eps, long count) {
  std::vector<WStarProfile> out;
  long kb = 0;
  long num = 1;
  while ((long)out.size() < count) {
    Rat t(num, 2);
    t.canonicalize();
    out.push_back(profile_at(eps, kb, t));
    kb = (kb + 3) % 12;
    num = num % 9 + 1;
    if ((long)out.size() % 4 == 0) out.back() = profile_origin(eps, t);
  }
  return out;
}

}  // namespace

int main() {
  EpsilonChar eps(PrimeContext(7), 0, 4);
  ModuleSpec spec = make_spec(eps, {{3, 1}, {4, 1}});
  std::vector<WStarProfile> profs = profile_family(eps, 48);
  const long trunc = 150;

  std::printf("%-28s %5s %12s %9s\n", "kernel", "jobs", "best_ms", "speedup");

  // Kernel 1: polygon confirmation across a profile family.
  std::vector<long> confirmed_serial;
  auto poly_kernel = [&](int jobs, std::vector<long>& sink) {
    std::vector<long> xs = parallel_map<long>((long)profs.size(), jobs, [&](long i) {
      return confirmed_prefix(spec, profs[i], trunc, true);
    });
    sink = xs;
  };
  double base_ms = 0;
  for (int jobs : {1, default_jobs()}) {
    std::vector<long> sink;
    double ms = timed_best(3, [&] { poly_kernel(jobs, sink); });
    if (jobs == 1) {
      base_ms = ms;
      confirmed_serial = sink;
    } else if (sink != confirmed_serial) {
      std::printf("MISMATCH: polygon kernel outputs differ across paths\n");
      return 1;
    }
    std::printf("%-28s %5d %12.2f %8.2fx\n", "polygon_confirmation", jobs, ms,
                base_ms / ms);
  }

  // Kernel 2: coefficient factorizations across a block of indices.
  const long n_hi = 500;
  std::vector<long> weight_serial;
  auto coeff_kernel = [&](int jobs, std::vector<long>& sink) {
    std::vector<long> totals = parallel_map<long>(n_hi + 1, jobs, [&](long n) {
      GhostCoefficient gc = coefficient(spec, n, false);
      long tot = 0;
      for (const auto& [kb, e] : gc.factors) tot += kb * e;
      return tot;
    });
    sink = totals;
  };
  for (int jobs : {1, default_jobs()}) {
    std::vector<long> sink;
    double ms = timed_best(3, [&] { coeff_kernel(jobs, sink); });
    if (jobs == 1) {
      base_ms = ms;
      weight_serial = sink;
    } else if (sink != weight_serial) {
      std::printf("MISMATCH: coefficient kernel outputs differ across paths\n");
      return 1;
    }
    std::printf("%-28s %5d %12.2f %8.2fx\n", "coefficient_build", jobs, ms,
                base_ms / ms);
  }
  return 0;
}
