#include "parcat/scanning.hpp"

#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parcat {

std::vector<int> ewis(const std::vector<int>& seq) {
  if (seq.empty()) throw std::invalid_argument("ewis: sequence must be nonempty");
  std::vector<int> pos{1};
  int last = seq[0];
  for (std::size_t k = 1; k < seq.size(); ++k)
    if (seq[k] >= last) {
      pos.push_back(static_cast<int>(k + 1));
      last = seq[k];
    }
  return pos;
}

namespace {

// Marks grow upward from column bottoms, so the unmarked residue of each
// column is a prefix; rem[j] is its length.
struct ScanState {
  const Tableau& t;
  std::vector<int> rem;

  explicit ScanState(const Tableau& tab) : t(tab), rem(tab.shape().lambda1()) {
    for (int j = 1; j <= tab.shape().lambda1(); ++j) rem[j - 1] = tab.shape().col_len(j);
  }

  void reset_from(int j0) {
    for (int j = j0; j <= t.shape().lambda1(); ++j) rem[j - 1] = t.shape().col_len(j);
  }

  // Extracts one scanning path starting at the bottom of column j0 and
  // returns its final value.  The residue must stay partition-shaped.
  int extract(int j0) {
    int v = t.at(j0, rem[j0 - 1]);
    --rem[j0 - 1];
    for (int l = j0 + 1; l <= t.shape().lambda1(); ++l) {
      if (rem[l - 1] == 0) continue;
      const int bottom = t.at(l, rem[l - 1]);
      if (bottom >= v) {
        v = bottom;
        --rem[l - 1];
      }
    }
    for (int l = j0 + 1; l <= t.shape().lambda1(); ++l)
      if (rem[l - 1] > rem[l - 2])
        throw std::logic_error("scan: unmarked residue stopped being a partition shape");
    return v;
  }
};

}  // namespace

Tableau scan(const Tableau& t) {
  const Partition& shape = t.shape();
  std::vector<std::vector<int>> cols(shape.lambda1());
  ScanState st(t);
  for (int j = 1; j <= shape.lambda1(); ++j) {
    cols[j - 1].resize(shape.col_len(j));
    st.reset_from(j);
    for (int i = shape.col_len(j); i >= 1; --i) cols[j - 1][i - 1] = st.extract(j);
  }
  return Tableau(shape, std::move(cols));
}

int remainder_max(const Tableau& t, int l, int k) {
  const Partition& shape = t.shape();
  if (l < 1 || l > shape.lambda1() || k < 1 || k > shape.col_len(l))
    throw std::invalid_argument("remainder_max: cell (" + std::to_string(l) + ", " + std::to_string(k) +
                                ") outside the shape");
  ScanState st(t);
  st.reset_from(l);
  for (int i = shape.col_len(l); i > k; --i) st.extract(l);
  int m = 1;
  for (int j = l + 1; j <= shape.lambda1(); ++j)
    if (st.rem[j - 1] > 0) m = std::max(m, t.at(j, st.rem[j - 1]));
  return m;
}

Tableau scan_by_lemma(const Tableau& t) {
  const Partition& shape = t.shape();
  std::vector<std::vector<int>> cols(shape.lambda1());
  for (int j = 1; j <= shape.lambda1(); ++j) {
    cols[j - 1].resize(shape.col_len(j));
    for (int i = 1; i <= shape.col_len(j); ++i)
      cols[j - 1][i - 1] = std::max(t.at(j, i), remainder_max(t, j, i));
  }
  return Tableau(shape, std::move(cols));
}

bool demazure_contains(const Partition& shape, const RPermutation& p, const Tableau& t) {
  if (!(t.shape() == shape)) throw std::invalid_argument("demazure_contains: tableau has a different shape");
  return leq(scan(t), key_of(shape, p));
}

std::vector<Tableau> demazure_set(const Partition& shape, const RPermutation& p, int threads) {
  const Tableau key = key_of(shape, p);
  std::vector<Tableau> candidates = all_tableaux(shape);
  const std::vector<Tableau> scans = scan_batch(candidates, threads);
  std::vector<Tableau> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (leq(scans[i], key)) out.push_back(std::move(candidates[i]));
  return out;
}

std::vector<Tableau> scan_batch(const std::vector<Tableau>& ts, int threads) {
  std::vector<Tableau> out;
  out.reserve(ts.size());
  if (threads <= 1) {
    for (const auto& t : ts) out.push_back(scan(t));
    return out;
  }
  // Contiguous slices per thread, spliced back in slice order, so the
  // result never depends on the thread count.
  const std::size_t nslices = static_cast<std::size_t>(threads);
  std::vector<std::vector<Tableau>> slices(nslices);
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
  {
#ifdef _OPENMP
    const std::size_t tid = static_cast<std::size_t>(omp_get_thread_num());
    const std::size_t width = static_cast<std::size_t>(omp_get_num_threads());
#else
    const std::size_t tid = 0, width = 1;
#endif
    const std::size_t lo = ts.size() * tid / width;
    const std::size_t hi = ts.size() * (tid + 1) / width;
    slices[tid].reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) slices[tid].push_back(scan(ts[i]));
  }
  for (auto& s : slices)
    for (auto& t : s) out.push_back(std::move(t));
  return out;
}

}  // namespace parcat
