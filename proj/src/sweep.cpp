#include "parcat/sweep.hpp"

#include <cstdlib>
#include <string>

namespace parcat {

int default_threads() {
  if (const char* env = std::getenv("PARCAT_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (...) {
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace parcat
