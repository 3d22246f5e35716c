#include "sgcor/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace sgcor::parallel {

namespace {
int default_threads() {
  static const int n = omp_get_max_threads();
  return n;
}
}  // namespace

int max_threads() { return omp_get_max_threads(); }

void set_threads(int n) { omp_set_num_threads(n > 0 ? n : default_threads()); }

int configure_from_environment() {
  default_threads();
  if (const char* env = std::getenv("SGCOR_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) set_threads(n);
    } catch (const std::exception&) {
      // ignored: malformed values leave the default in place
    }
  }
  return max_threads();
}

}  // namespace sgcor::parallel
