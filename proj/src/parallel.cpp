#include "matchfield/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mf {

int thread_count() {
  int limit = 0;
  if (const char* env = std::getenv("MATCHFIELD_THREADS")) limit = std::atoi(env);
#ifdef _OPENMP
  int def = omp_get_max_threads();
  if (limit <= 0) return def > 0 ? def : 1;
  return limit;
#else
  (void)limit;
  return 1;
#endif
}

}  // namespace mf
