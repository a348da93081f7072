#ifndef PARCAT_MAPS_HPP
#define PARCAT_MAPS_HPP

#include <vector>

#include "parcat/rtuple.hpp"

namespace parcat {

// A permutation of [n] that is increasing within each carrel.  Classical
// permutations are the full-case R = [n-1] instances.
class RPermutation {
 public:
  explicit RPermutation(RTuple t);
  RPermutation(RSet rset, std::vector<int> entries) : RPermutation(RTuple(std::move(rset), std::move(entries))) {}

  static RPermutation identity(RSet rset);
  // A classical permutation carried as a full-case tuple.
  static RPermutation classical(std::vector<int> entries);

  const RTuple& tuple() const { return t_; }
  const RSet& rset() const { return t_.rset(); }
  int n() const { return t_.n(); }
  int at1(int i) const { return t_.at1(i); }
  const std::vector<int>& entries() const { return t_.entries(); }

  bool operator==(const RPermutation& o) const = default;
  bool operator<(const RPermutation& o) const { return t_ < o.t_; }

 private:
  RTuple t_;
};

// Nested sets {} = B_0 < B_1 < ... < B_{r+1} = [n] with |B_h| = q_h.
class Chain {
 public:
  Chain(RSet rset, std::vector<std::vector<int>> sets);

  const RSet& rset() const { return rset_; }
  // h in [0, r+1]; each set sorted ascending.
  const std::vector<int>& set(int h) const { return sets_[h]; }

  bool operator==(const Chain& o) const = default;

 private:
  RSet rset_;
  std::vector<std::vector<int>> sets_;
};

// R-core map: minimal increasing extension of the critical list.
RTuple core(const RTuple& t);

// Floor and ceiling maps on gapless tuples; both are undone by core.
RTuple floor_of(const RTuple& g);
RTuple ceiling_of(const RTuple& g);

// Ceiling-style fill applied to any upper tuple (no flag requirement).
RTuple platform(const RTuple& t);

// Rank tuple: per carrel the largest block of prefix-union elements,
// ascending at the carrel's right end.
RTuple rank_tuple(const RPermutation& p);

// Inverse of rank_tuple on the 312-avoiding side; input must be gapless.
RPermutation pi_of(const RTuple& g);

// Blockwise 312 pattern test; runs the pattern search and the interval
// criterion and insists they agree.
bool is_r312_avoiding(const RPermutation& p);

Chain chain_of(const RPermutation& p);
RPermutation perm_of_chain(const Chain& b);

// Interval criterion on chains; cross-checked against the permutation test.
bool is_rightmost_clump_deleting(const Chain& b);

// Sorts each cohort of a classical permutation into its carrel.
RPermutation r_projection(const RPermutation& s, const RSet& rset);

// The unique minimum-length 312-avoiding lift, as a classical permutation.
RPermutation min_lift(const RPermutation& p);

// Inversion count of a classical permutation.
long long coxeter_length(const RPermutation& s);

}  // namespace parcat

#endif
