#ifndef PARCAT_POLYNOMIALS_HPP
#define PARCAT_POLYNOMIALS_HPP

#include <vector>

#include "parcat/poly.hpp"
#include "parcat/scanning.hpp"
#include "parcat/tableau.hpp"

namespace parcat {

// A weak composition into n parts.
using Composition = std::vector<int>;

SparsePoly tableau_sum(const std::vector<Tableau>& ts, int nvars);

// Content generating function over the tableaux with row bounds beta.
SparsePoly row_bound_sum(const Partition& shape, const RTuple& beta);

// Content generating function over the Demazure set of (shape, p).
SparsePoly demazure_poly(const Partition& shape, const RPermutation& p);

// The composition alpha with alpha_{p_i} = lambda_i.
Composition pi_dot_lambda(const Partition& shape, const RPermutation& p);

// Key polynomial by isobaric divided differences, lowering the smallest
// ascent first.  The result does not depend on that choice.
SparsePoly key_poly_dd(const Composition& alpha);

// One isobaric divided difference step, exposed for the independence test.
SparsePoly isobaric_divided_difference(const SparsePoly& f, int i);

// Complete homogeneous polynomial of degree k in x_a..x_b (n variables).
SparsePoly flagged_h(int k, int a, int b, int nvars);

// The n x n lattice-path determinant with entries h_{lambda_j - j + i} in
// variables x_i..x_{beta_j}.  Equals row_bound_sum exactly on nonpermutable
// pairs.
SparsePoly gv_determinant(const Partition& shape, const RTuple& beta);

// Determinant applicability test: gapless core plus beta <= platform(beta).
bool is_nonpermutable(const Partition& shape, const RTuple& beta);

}  // namespace parcat

#endif
