#include "aalpha/parallel.hpp"

#include <omp.h>

#include <cstdlib>

namespace aalpha {

int configure_threads_from_env() {
  if (const char* raw = std::getenv(kThreadsEnv)) {
    char* end = nullptr;
    long n = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && n > 0) omp_set_num_threads(static_cast<int>(n));
  }
  return omp_get_max_threads();
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace aalpha
