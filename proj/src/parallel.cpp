#include "sqbetti/parallel.hpp"

#include <omp.h>

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace sqbetti {

int workerCount() {
  if (const char* env = std::getenv("SQBETTI_THREADS")) {
    int value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return omp_get_max_threads();
}

}  // namespace sqbetti
