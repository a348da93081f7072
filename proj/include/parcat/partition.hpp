#ifndef PARCAT_PARTITION_HPP
#define PARCAT_PARTITION_HPP

#include <vector>

#include "parcat/rset.hpp"

namespace parcat {

// A partition into at most n parts; parts_ always has exactly n entries,
// padded with zeros.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  int n() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i - 1]; }  // 1-based row
  const std::vector<int>& parts() const { return parts_; }
  int lambda1() const { return parts_.empty() ? 0 : parts_[0]; }

  // Column length zeta_j for j in [1, lambda1()].
  int col_len(int j) const;
  // Distinct non-trivial column lengths (those below n).
  RSet r_of_shape() const;
  long long boxes() const;

  bool operator==(const Partition& o) const = default;
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

}  // namespace parcat

#endif
