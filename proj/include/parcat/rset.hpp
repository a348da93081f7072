#ifndef PARCAT_RSET_HPP
#define PARCAT_RSET_HPP

#include <utility>
#include <vector>

namespace parcat {

// A divider set R = {q_1 < ... < q_r} inside [1, n-1].  It cuts [1, n] into
// r+1 carrels (q_{h-1}, q_h] with the sentinels q_0 = 0 and q_{r+1} = n.
class RSet {
 public:
  RSet(int n, std::vector<int> elements);

  static RSet empty(int n) { return RSet(n, {}); }
  static RSet full(int n);

  int n() const { return n_; }
  int r() const { return static_cast<int>(q_.size()); }

  // q(0) == 0 and q(r()+1) == n.
  int q(int h) const;
  int block_size(int h) const { return q(h) - q(h - 1); }

  // Carrel index h in [1, r+1] with i in (q_{h-1}, q_h].  i is 1-based.
  int carrel_of(int i) const;

  const std::vector<int>& elements() const { return q_; }

  bool operator==(const RSet& o) const = default;

 private:
  int n_;
  std::vector<int> q_;
};

// The carrels as inclusive index intervals [q_{h-1}+1, q_h]; their
// concatenation is [1, n].
std::vector<std::pair<int, int>> carrels(const RSet& rset);

}  // namespace parcat

#endif
