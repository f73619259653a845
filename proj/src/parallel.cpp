#include "minrep/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace minrep {

int worker_count()
{
#ifdef _OPENMP
  int fallback = omp_get_max_threads();
#else
  int fallback = 1;
#endif
  if (const char* env = std::getenv("MINREP_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

} // namespace minrep
