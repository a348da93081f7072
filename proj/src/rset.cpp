#include "parcat/rset.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace parcat {

RSet::RSet(int n, std::vector<int> elements) : n_(n), q_(std::move(elements)) {
  if (n_ < 1) throw std::invalid_argument("RSet: n must be positive, got " + std::to_string(n_));
  int prev = 0;
  for (int v : q_) {
    if (v <= prev || v >= n_)
      throw std::invalid_argument("RSet: elements must satisfy 0 < q_1 < ... < q_r < n; offending value " +
                                  std::to_string(v));
    prev = v;
  }
}

RSet RSet::full(int n) {
  std::vector<int> e(n > 0 ? n - 1 : 0);
  std::iota(e.begin(), e.end(), 1);
  return RSet(n, std::move(e));
}

int RSet::q(int h) const {
  if (h < 0 || h > r() + 1) throw std::out_of_range("RSet::q: h out of range");
  if (h == 0) return 0;
  if (h == r() + 1) return n_;
  return q_[h - 1];
}

int RSet::carrel_of(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("RSet::carrel_of: index " + std::to_string(i) + " outside [1, n]");
  for (int h = 1; h <= r(); ++h)
    if (i <= q_[h - 1]) return h;
  return r() + 1;
}

std::vector<std::pair<int, int>> carrels(const RSet& rset) {
  std::vector<std::pair<int, int>> out;
  for (int h = 1; h <= rset.r() + 1; ++h) out.emplace_back(rset.q(h - 1) + 1, rset.q(h));
  return out;
}

}  // namespace parcat
