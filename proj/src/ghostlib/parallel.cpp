#include "ghostlib/parallel.h"

#include <cstdlib>
#include <string>

namespace ghost {

int default_jobs() {
  if (const char* env = std::getenv("GHOST_JOBS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (...) {
      // fall through to the build default
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ghost
