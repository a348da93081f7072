#ifndef PARCAT_SCANNING_HPP
#define PARCAT_SCANNING_HPP

#include <vector>

#include "parcat/tableau.hpp"

namespace parcat {

// Positions (1-based) of the earliest weakly increasing subsequence.
std::vector<int> ewis(const std::vector<int>& seq);

// The scanning tableau S(T) (right key), built by repeated extraction of
// earliest weakly increasing subsequences of column bottoms.
Tableau scan(const Tableau& t);

// Max value of the remainder tableau U^(l,k); 1 when it is null.
int remainder_max(const Tableau& t, int l, int k);

// Independent assembly of S(T) from remainder maxima, cell by cell.
Tableau scan_by_lemma(const Tableau& t);

bool demazure_contains(const Partition& shape, const RPermutation& p, const Tableau& t);

// All tableaux whose scan fits under the key of p, in enumeration order.
// threads > 1 filters candidates in parallel; the order of the result does
// not depend on the thread count.
std::vector<Tableau> demazure_set(const Partition& shape, const RPermutation& p, int threads = 1);

// Parallel map of scan over a batch; serial when threads == 1.
std::vector<Tableau> scan_batch(const std::vector<Tableau>& ts, int threads);

}  // namespace parcat

#endif
