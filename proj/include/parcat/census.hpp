#ifndef PARCAT_CENSUS_HPP
#define PARCAT_CENSUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "parcat/maps.hpp"
#include "parcat/partition.hpp"
#include "parcat/rtuple.hpp"

namespace parcat {

// Object families the census can generate.
enum class Kind {
  RPermutations,
  R312Avoiding,
  UI,
  UG,
  UGC,
  UF,
  UFlr,
  UCeil,
  Shells,
  Canopies,
  CriticalLists,
  FlagCriticalLists,
  Chains,
  RightmostClumpDeletingChains,
};

Kind kind_from_string(const std::string& s);
std::string kind_name(Kind k);

std::vector<RPermutation> all_r_permutations(const RSet& R);
std::vector<RPermutation> all_r312_avoiding(const RSet& R);
std::vector<RTuple> all_upper(const RSet& R);  // sweep helper, all of U_R(n)
std::vector<RTuple> all_increasing_upper(const RSet& R);
std::vector<RTuple> all_gapless(const RSet& R);
std::vector<RTuple> all_gapless_core(const RSet& R);
std::vector<RTuple> all_upper_flags(const RSet& R);
std::vector<RTuple> all_floor_flags(const RSet& R);
std::vector<RTuple> all_ceiling_flags(const RSet& R);
std::vector<RTuple> all_shells(const RSet& R);
std::vector<RTuple> all_canopies(const RSet& R);
std::vector<CriticalList> all_critical_lists(const RSet& R, bool flag_only = false);
std::vector<Chain> all_chains(const RSet& R);
std::vector<Chain> all_rightmost_clump_deleting_chains(const RSet& R);

// Cardinality of a family, dispatched by kind.
long long family_count(Kind k, const RSet& R);

// |S_n^R| = n! / (p_1! ... p_{r+1}!).
long long multinomial_of(const RSet& R);

// Number of blockwise 312-avoiding arrangements, by direct filtering.
long long parabolic_catalan(const RSet& R);
long long parabolic_catalan(int n, const std::vector<int>& relements);

// Sum of the counts over all divider sets of [n-1].
long long total_parabolic_catalan(int n);

// Least and greatest upper tuples sharing the critical list of beta.
std::pair<RTuple, RTuple> class_interval(const RTuple& beta);

// All subsets of [n-1], in mask order.
std::vector<RSet> all_rsets(int n);
// Partitions with n parts, at most box_rows nonzero, each at most box_cols.
std::vector<Partition> partitions_in_box(int n, int box_rows, int box_cols);
// The shape with one column of each length in R, longest first.
Partition minimal_shape(const RSet& R);

struct VerifyLimits {
  int max_n = 4;
  int box_rows = 4;
  int box_cols = 4;
  // Shapes with more tableaux than this are skipped for n >= 5 sweeps.
  long long tableau_cap = 100000;
};

struct VerificationReport {
  std::string theorem;
  VerifyLimits limits;
  long long checked = 0;
  std::vector<std::string> failures;
  long long ms = 0;

  bool pass() const { return failures.empty(); }
};

const std::vector<std::string>& verify_ids();

// Sweeps every instance of the named statement within the limits and
// collects counterexamples.  threads > 1 distributes the sweep via OpenMP;
// the report does not depend on the thread count.
VerificationReport verify(const std::string& theorem_id, const VerifyLimits& limits, int threads = 1);

}  // namespace parcat

#endif
