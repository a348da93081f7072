#ifndef PARCAT_RTUPLE_HPP
#define PARCAT_RTUPLE_HPP

#include <string>
#include <vector>

#include "parcat/rset.hpp"

namespace parcat {

// An n-tuple with entries in [1, n] carrying its divider set.  Two tuples
// with the same entries but different dividers are different values.
class RTuple {
 public:
  RTuple(RSet rset, std::vector<int> entries);

  const RSet& rset() const { return rset_; }
  int n() const { return rset_.n(); }

  // 1-based entry access.
  int at1(int i) const { return entries_[i - 1]; }
  const std::vector<int>& entries() const { return entries_; }

  // Same entries re-equipped with another divider set of the same n.
  RTuple rebind(RSet rset) const;

  bool operator==(const RTuple& o) const = default;
  // Orders by entries, then dividers; used only to put tuples in containers.
  bool operator<(const RTuple& o) const;

 private:
  RSet rset_;
  std::vector<int> entries_;
};

bool entrywise_leq(const RTuple& a, const RTuple& b);
RTuple entrywise_min(const RTuple& a, const RTuple& b);
RTuple entrywise_max(const RTuple& a, const RTuple& b);

struct CriticalPair {
  int index;  // 1-based
  int entry;
  bool operator==(const CriticalPair&) const = default;
};

// The skeletal (index, entry) pairs of an upper tuple, one set per carrel.
// Within a carrel the pairs are stored index-descending, x_1 = q_h first,
// matching the right-to-left discovery order.
class CriticalList {
 public:
  CriticalList(RSet rset, std::vector<std::vector<CriticalPair>> carrels);

  const RSet& rset() const { return rset_; }
  // Carrel h in [1, r+1], pairs index-descending.
  const std::vector<CriticalPair>& carrel(int h) const { return carrels_[h - 1]; }
  int carrel_count() const { return static_cast<int>(carrels_.size()); }

  // All pairs in increasing index order.
  std::vector<CriticalPair> pairs_by_index() const;

  bool operator==(const CriticalList& o) const = default;

 private:
  RSet rset_;
  std::vector<std::vector<CriticalPair>> carrels_;
};

struct Labels {
  bool upper = false;
  bool flag = false;
  bool r_increasing = false;
  bool gapless = false;
  bool gapless_core = false;
  bool shell = false;
  bool canopy = false;
  bool floor_flag = false;
  bool ceiling_flag = false;
  bool r_flag = false;

  std::vector<std::string> names() const;
  bool operator==(const Labels&) const = default;
};

// Every classification label the tuple satisfies, computed in one pass.
// Non-upper tuples are accepted; they can only earn flag / r_increasing.
Labels classify(const RTuple& t);

// Rejects non-upper input: critical pairs are defined for upper tuples only.
CriticalList critical_list(const RTuple& t);

// True iff the concatenated critical entries weakly increase carrel to
// carrel: y_{q_h} <= y at the leftmost critical index of carrel h+1.
bool is_flag_critical(const CriticalList& c);

enum class FillKind { Increasing, Shell, Gapless, Canopy, Floor, Ceiling };

// Extends a critical list to the unique member of the requested family.
// Gapless/Canopy/Floor/Ceiling demand a flag critical list.
RTuple tuple_from_critical(const CriticalList& c, FillKind kind);

}  // namespace parcat

#endif
