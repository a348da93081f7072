#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "parcat/census.hpp"
#include "parcat/polynomials.hpp"
#include "parcat/text.hpp"

using namespace parcat;

namespace {

RTuple T(const std::string& s) { return parse_rtuple(s); }
Partition S(const std::string& s) { return parse_partition(s); }

// Same recursion as key_poly_dd but always lowering the largest ascent.
SparsePoly key_poly_dd_largest(const Composition& alpha) {
  int ascent = 0;
  for (int i = 1; i < static_cast<int>(alpha.size()); ++i)
    if (alpha[i - 1] < alpha[i]) ascent = i;
  if (ascent == 0) return SparsePoly::monomial(alpha);
  Composition swapped = alpha;
  std::swap(swapped[ascent - 1], swapped[ascent]);
  return isobaric_divided_difference(key_poly_dd_largest(swapped), ascent);
}

}  // namespace

TEST_CASE("ring basics") {
  const SparsePoly x1 = SparsePoly::var(3, 1), x2 = SparsePoly::var(3, 2);
  const SparsePoly p = x1 * x2 + SparsePoly::constant(3, 2);
  CHECK(p + SparsePoly::zero(3) == p);
  CHECK(p * SparsePoly::constant(3, 1) == p);
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  CHECK((p - p).is_zero());
  CHECK_THROWS_AS(SparsePoly::var(2, 1) + SparsePoly::var(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(checked_mul(1ll << 62, 4), std::overflow_error);
}

TEST_CASE("polynomial text") {
  CHECK(to_text(SparsePoly::zero(2)) == "0");
  CHECK(to_text(SparsePoly::constant(2, 5)) == "5");
  const SparsePoly p = flagged_h(2, 1, 2, 2);
  CHECK(to_text(p) == "x1^2 + x1*x2 + x2^2");
  CHECK(to_text(row_bound_sum(S("1,1,0"), T("3,3;3"))) == "x1*x2 + x1*x3 + x2*x3");
}

TEST_CASE("tableau sums") {
  CHECK(to_text(tableau_sum(all_tableaux(S("1,1,0")), 3)) == "x1*x2 + x1*x3 + x2*x3");
  CHECK(tableau_sum({Tableau::minimum(S("2,1,0"))}, 3) == SparsePoly::monomial({2, 1, 0}));
  // Full bounds give the symmetric (Schur) polynomial.
  const SparsePoly schur = row_bound_sum(S("2,1,0"), T("3;3;3"));
  CHECK(schur == schur.swap_vars(1, 2));
  CHECK(schur == schur.swap_vars(2, 3));
}

TEST_CASE("row bound sums and the opening identity") {
  const SparsePoly s1 = row_bound_sum(S("1,1,0"), T("3,3;3"));
  const SparsePoly s2 = row_bound_sum(S("1,1,0"), T("2,3;3"));
  CHECK(s1 == s2);
  SparsePoly expect(3);
  expect.add_term({1, 1, 0}, 1);
  expect.add_term({1, 0, 1}, 1);
  expect.add_term({0, 1, 1}, 1);
  CHECK(s1 == expect);
  // Coefficient sums count tableaux.
  for (const char* shape : {"1,1,0", "2,1,0", "2,1,1,0"}) {
    const Partition sh = S(shape);
    for (const RTuple& beta : all_upper(sh.r_of_shape()))
      CHECK(row_bound_sum(sh, beta).coeff_sum() ==
            static_cast<long long>(all_tableaux(sh, beta).size()));
  }
}

TEST_CASE("demazure polynomials") {
  const Partition sh = S("2,1,1,0");
  for (const RPermutation& p : all_r_permutations(sh.r_of_shape())) {
    const SparsePoly d = demazure_poly(sh, p);
    CHECK(d.coeff(content(key_of(sh, p))) == 1);
    CHECK(d.coeff(sh.parts()) == 1);
    if (is_r312_avoiding(p)) CHECK(d == row_bound_sum(sh, rank_tuple(p)));
  }
}

TEST_CASE("key polynomials by divided differences") {
  CHECK(key_poly_dd({2, 1, 0}) == SparsePoly::monomial({2, 1, 0}));
  CHECK(key_poly_dd({0, 1}) == SparsePoly::var(2, 1) + SparsePoly::var(2, 2));
  // The ascent choice does not matter.
  for (const Composition& alpha :
       std::vector<Composition>{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1, 3}, {1, 1, 0, 2}})
    CHECK(key_poly_dd(alpha) == key_poly_dd_largest(alpha));
  // Oracle equivalence on small shapes (the full box runs in acceptance).
  for (const char* shape : {"1,1,0", "2,1,0", "2,1,1,0", "2,2,1"}) {
    const Partition sh = S(shape);
    for (const RPermutation& p : all_r_permutations(sh.r_of_shape()))
      CHECK(demazure_poly(sh, p) == key_poly_dd(pi_dot_lambda(sh, p)));
  }
}

TEST_CASE("complete homogeneous slices") {
  CHECK(flagged_h(0, 3, 1, 3) == SparsePoly::constant(3, 1));
  CHECK(to_text(flagged_h(2, 1, 2, 3)) == "x1^2 + x1*x2 + x2^2");
  CHECK(to_text(flagged_h(1, 2, 4, 4)) == "x2 + x3 + x4");
  CHECK(flagged_h(-1, 1, 3, 3).is_zero());
  CHECK(flagged_h(2, 3, 2, 3).is_zero());
}

TEST_CASE("lattice path determinants") {
  CHECK(to_text(gv_determinant(S("1,1,0"), T("2,3;3"))) == "x1*x2 + x1*x3 + x2*x3");
  CHECK(gv_determinant(S("0,0,0"), T("1,2,3")) == SparsePoly::constant(3, 1));
  // A falsifying bound: not nonpermutable and the determinant drifts.
  {
    const Partition sh = S("1,1,0");
    const RTuple beta = T("3,2;3");
    CHECK_FALSE(is_nonpermutable(sh, beta));
    const SparsePoly det = gv_determinant(sh, beta);
    const SparsePoly sum = row_bound_sum(sh, beta);
    CHECK_FALSE(det == sum);
    SparsePoly expect(3);
    expect.add_term({1, 1, 0}, 1);
    expect.add_term({0, 0, 2}, -1);
    CHECK(det == expect);
    CHECK(sum == SparsePoly::monomial({1, 1, 0}));
  }
  // Exact agreement precisely on nonpermutable pairs, small sweep.
  for (const char* shape : {"1,0", "1,1,0", "2,1,0", "1,1,1"}) {
    const Partition sh = S(shape);
    for (const RTuple& beta : all_upper(sh.r_of_shape()))
      CHECK((gv_determinant(sh, beta) == row_bound_sum(sh, beta)) == is_nonpermutable(sh, beta));
  }
}

TEST_CASE("nonpermutability criterion") {
  const Partition sh = S("1,1,0");
  for (const RTuple& phi : all_upper_flags(sh.r_of_shape())) CHECK(is_nonpermutable(sh, phi));
  for (const RTuple& g : all_gapless(sh.r_of_shape())) CHECK(is_nonpermutable(sh, g));
  const Partition sh4 = S("2,1,1,0");
  for (const RTuple& beta : all_upper(sh4.r_of_shape()))
    if (!classify(beta).gapless_core) CHECK_FALSE(is_nonpermutable(sh4, beta));
  CHECK_THROWS_AS(is_nonpermutable(sh, T("1,1;3")), std::invalid_argument);
}

TEST_CASE("polynomial distinctness") {
  for (const char* shape : {"1,1,0", "2,1,1,0"}) {
    const Partition sh = S(shape);
    const RSet R = sh.r_of_shape();
    // Demazure polynomials are pairwise distinct across indices.
    std::set<SparsePoly> dpolys;
    long long perms = 0;
    for (const RPermutation& p : all_r_permutations(R)) {
      dpolys.insert(demazure_poly(sh, p));
      ++perms;
    }
    CHECK(static_cast<long long>(dpolys.size()) == perms);
    // Row bound sums of gapless tuples are pairwise distinct.
    std::set<SparsePoly> spolys;
    long long count = 0;
    for (const RTuple& g : all_gapless(R)) {
      spolys.insert(row_bound_sum(sh, g));
      ++count;
    }
    CHECK(static_cast<long long>(spolys.size()) == count);
  }
}

TEST_CASE("polynomial coincidences force the rank correspondence") {
  for (const char* shape : {"1,1,0", "2,1,0", "2,1,1,0"}) {
    const Partition sh = S(shape);
    const RSet R = sh.r_of_shape();
    for (const RTuple& beta : all_upper(R)) {
      const SparsePoly s = row_bound_sum(sh, beta);
      for (const RPermutation& p : all_r_permutations(R)) {
        if (!(s == demazure_poly(sh, p))) continue;
        CHECK(is_r312_avoiding(p));
        CHECK(core(beta) == rank_tuple(p));
      }
    }
  }
}
