#include "parcat/partition.hpp"

#include <stdexcept>
#include <string>

namespace parcat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Partition: needs at least one part (n >= 1)");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must weakly decrease (violated at row " + std::to_string(i + 1) +
                                  ")");
  }
}

int Partition::col_len(int j) const {
  if (j < 1 || j > lambda1()) throw std::out_of_range("Partition::col_len: column out of shape");
  int len = 0;
  for (int v : parts_)
    if (v >= j) ++len;
  return len;
}

RSet Partition::r_of_shape() const {
  std::vector<int> lens;
  for (int j = lambda1(); j >= 1; --j) {
    const int z = col_len(j);
    if (z < n() && (lens.empty() || lens.back() != z)) lens.push_back(z);
  }
  return RSet(n(), std::move(lens));
}

long long Partition::boxes() const {
  long long s = 0;
  for (int v : parts_) s += v;
  return s;
}

}  // namespace parcat
