#ifndef PARCAT_TABLEAU_HPP
#define PARCAT_TABLEAU_HPP

#include <functional>
#include <optional>
#include <vector>

#include "parcat/maps.hpp"
#include "parcat/partition.hpp"
#include "parcat/rtuple.hpp"

namespace parcat {

// A column-strict filling of a shape, stored column-major: cols()[j-1] holds
// the zeta_j values of column j from top to bottom.  The 0th inert column is
// virtual; at(0, i) yields i.
class Tableau {
 public:
  Tableau(Partition shape, std::vector<std::vector<int>> cols);

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  int at(int j, int i) const { return j == 0 ? i : cols_[j - 1][i - 1]; }
  const std::vector<std::vector<int>>& cols() const { return cols_; }
  // Value set of column j, sorted ascending.
  std::vector<int> column_set(int j) const;

  // The minimum tableau: value i throughout row i.
  static Tableau minimum(const Partition& shape);

  bool operator==(const Tableau& o) const = default;
  bool operator<(const Tableau& o) const;

 private:
  Partition shape_;
  std::vector<std::vector<int>> cols_;
};

std::vector<int> content(const Tableau& t);

// Row end list: the tuple of last-box values per row, read through the
// latent column for empty rows.
RTuple row_end_list(const Tableau& t);

Tableau key_of(const Partition& shape, const RPermutation& p);
RPermutation perm_of_key(const Tableau& y);
bool is_key(const Tableau& t);

// Gapless key test; the column-run condition is cross-checked against the
// blockwise 312 test of the key's permutation.
bool is_gapless_key(const Tableau& y);

// Row end max tableau: the maximum filling with prescribed row end list.
Tableau row_end_max(const Partition& shape, const RTuple& a);

// Row bound max tableau: the maximum tableau whose rows respect the bounds.
Tableau row_bound_max(const Partition& shape, const RTuple& beta);

bool leq(const Tableau& a, const Tableau& b);
Tableau join(const Tableau& a, const Tableau& b);
Tableau meet(const Tableau& a, const Tableau& b);

// Enumerates tableaux of the shape in lexicographic order of the
// concatenated column-major value vector, smallest first.  With bounds
// given, restricts row i to values <= beta_i.  The callback may return
// false to stop early.
void for_each_tableau(const Partition& shape, const std::optional<RTuple>& bounds,
                      const std::function<bool(const Tableau&)>& fn);

std::vector<Tableau> all_tableaux(const Partition& shape, const std::optional<RTuple>& bounds = std::nullopt);

// The principal ideal [t] = { u : u <= t }, in enumeration order.
std::vector<Tableau> principal_ideal(const Tableau& t);

// Tableau-set equality irrespective of input order.
bool same_tableau_set(std::vector<Tableau> a, std::vector<Tableau> b);

}  // namespace parcat

#endif
