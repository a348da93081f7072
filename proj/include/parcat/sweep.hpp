#ifndef PARCAT_SWEEP_HPP
#define PARCAT_SWEEP_HPP

#include <cstddef>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parcat {

struct JobResult {
  long long checked = 0;
  std::vector<std::string> failures;

  void merge(const JobResult& o) {
    checked += o.checked;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

// Runs job(0..njobs) and merges the results in job order, so the report is
// identical whichever path executes.  threads == 1 is the serial reference;
// larger values take the OpenMP kernel.
template <class F>
JobResult run_jobs(std::size_t njobs, int threads, F&& job) {
  JobResult total;
  if (threads <= 1) {
    for (std::size_t i = 0; i < njobs; ++i) total.merge(job(i));
    return total;
  }
  std::vector<JobResult> slots(njobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long long i = 0; i < static_cast<long long>(njobs); ++i) slots[i] = job(i);
  for (const auto& r : slots) total.merge(r);
  return total;
}

// Thread count for parallel sweeps: PARCAT_THREADS when set, otherwise the
// OpenMP default, otherwise 1.
int default_threads();

}  // namespace parcat

#endif
