#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "parcat/census.hpp"
#include "parcat/tableau.hpp"
#include "parcat/text.hpp"

using namespace parcat;

namespace {

RTuple T(const std::string& s) { return parse_rtuple(s); }
RPermutation P(const std::string& s) { return parse_rpermutation(s); }
Partition S(const std::string& s) { return parse_partition(s); }
Tableau Tab(const std::string& shape, const std::string& cols) { return parse_tableau(cols, S(shape)); }

}  // namespace

TEST_CASE("column lengths and the induced divider set") {
  CHECK(S("1,1,0").r_of_shape() == RSet(3, {2}));
  CHECK(S("2,1,1,0").r_of_shape() == RSet(4, {1, 3}));
  CHECK(S("3,2,1").r_of_shape() == RSet::full(3));
  CHECK(S("0,0,0").r_of_shape() == RSet(3, {}));
  CHECK(S("2,2,2").r_of_shape() == RSet(3, {}));  // only trivial columns
}

TEST_CASE("tableau validation") {
  CHECK_THROWS_AS(Tab("1,1,0", "1,1"), std::invalid_argument);   // column must strictly increase
  CHECK_THROWS_AS(Tab("2,1,0", "2,3|1"), std::invalid_argument); // row must weakly increase
  CHECK_THROWS_AS(Tab("1,1,0", "1,4"), std::invalid_argument);   // value beyond n
  CHECK_NOTHROW(Tab("2,1,0", "1,3|2"));
}

TEST_CASE("content and row end list") {
  CHECK(content(Tab("1,1,0", "1,2")) == std::vector<int>{1, 1, 0});
  CHECK(row_end_list(Tab("1,1,0", "1,2")) == T("1,2;3"));
  CHECK(content(Tab("2,1,0", "1,3|2")) == std::vector<int>{1, 1, 1});
  // Row end lists of keys are rank tuples.
  for (const char* shape : {"1,1,0", "2,1,1,0", "3,2,1", "2,2,1,0,0"})
    for (const RPermutation& p : all_r_permutations(S(shape).r_of_shape()))
      CHECK(row_end_list(key_of(S(shape), p)) == rank_tuple(p));
}

TEST_CASE("keys") {
  CHECK(key_of(S("1,1,0"), P("1,3;2")) == Tab("1,1,0", "1,3"));
  CHECK(key_of(S("2,1,1,0"), P("4;1,2;3")) == Tab("2,1,1,0", "1,2,4|4"));
  // The all-trivial shape carries exactly one tableau, a key.
  CHECK(is_key(Tab("1,1,1", "1,2,3")));
  CHECK(perm_of_key(key_of(S("2,1,1,0"), P("4;1,2;3"))) == P("4;1,2;3"));
  for (const char* shape : {"1,1,0", "2,1,1,0", "3,2,1"})
    for (const RPermutation& p : all_r_permutations(S(shape).r_of_shape())) {
      const Tableau y = key_of(S(shape), p);
      CHECK(is_key(y));
      CHECK(perm_of_key(y) == p);
    }
  CHECK_FALSE(is_key(Tab("2,1,0", "1,3|2")));
  CHECK_THROWS_AS(key_of(S("1,1,0"), P("1;2;3")), std::invalid_argument);
}

TEST_CASE("gapless keys") {
  CHECK_FALSE(is_gapless_key(key_of(S("2,1,1,0"), P("4;1,2;3"))));
  CHECK(is_gapless_key(key_of(S("2,1,1,0"), RPermutation::identity(RSet(4, {1, 3})))));
  long long gapless = 0;
  for (const RPermutation& p : all_r_permutations(RSet(3, {2})))
    if (is_gapless_key(key_of(S("1,1,0"), p))) ++gapless;
  CHECK(gapless == parabolic_catalan(RSet(3, {2})));
  CHECK_THROWS_AS(is_gapless_key(Tab("2,1,0", "1,3|2")), std::invalid_argument);
}

TEST_CASE("row end max tableau") {
  CHECK(row_end_max(S("1,1,0"), T("2,3;3")) == Tab("1,1,0", "2,3"));
  // Entrywise maximum of the fiber, by brute force.
  for (const char* shape : {"1,1,0", "2,1,0", "2,1,1,0", "2,2,1,0", "3,1,0"}) {
    const Partition sh = S(shape);
    std::map<RTuple, std::vector<Tableau>> fibers;
    for (const Tableau& t : all_tableaux(sh)) fibers[row_end_list(t)].push_back(t);
    // Every increasing upper tuple appears as a row end list.
    const auto ui = all_increasing_upper(sh.r_of_shape());
    CHECK(fibers.size() == ui.size());
    for (const auto& [alpha, tabs] : fibers) {
      Tableau mx = tabs.front();
      for (const Tableau& t : tabs) mx = join(mx, t);
      CHECK(row_end_max(sh, alpha) == mx);
      CHECK(row_end_list(mx) == alpha);
    }
  }
  // Gapless row ends give keys, and they agree with the key of the
  // blockwise-312-avoiding permutation behind them.
  for (const char* shape : {"1,1,0", "2,1,1,0", "3,2,1", "2,2,1,0,0"}) {
    const Partition sh = S(shape);
    for (const RTuple& g : all_gapless(sh.r_of_shape())) CHECK(is_key(row_end_max(sh, g)));
    for (const RPermutation& p : all_r_permutations(sh.r_of_shape()))
      if (is_r312_avoiding(p)) CHECK(row_end_max(sh, rank_tuple(p)) == key_of(sh, p));
  }
  CHECK_THROWS_AS(row_end_max(S("1,1,0"), T("3,3;3")), std::invalid_argument);
}

TEST_CASE("bounded enumeration is empty exactly for non-upper bounds") {
  const Partition sh = S("2,1,0");
  const RSet R = sh.r_of_shape();
  std::vector<int> e(3, 1);
  // Every bounds tuple over [1,3]^3, upper or not.
  for (e[0] = 1; e[0] <= 3; ++e[0])
    for (e[1] = 1; e[1] <= 3; ++e[1])
      for (e[2] = 1; e[2] <= 3; ++e[2]) {
        const RTuple beta(R, e);
        CHECK(all_tableaux(sh, beta).empty() == !classify(beta).upper);
      }
}

TEST_CASE("enumeration") {
  CHECK(all_tableaux(S("1,1,0")).size() == 3);
  CHECK(all_tableaux(S("1,1,0"), T("3,3;3")).size() == 3);
  CHECK(all_tableaux(S("1,1,0"), T("2,3;3")).size() == 3);
  CHECK(all_tableaux(S("1,1,0"), T("1,1;3")).empty());  // not upper: row 2 capped below 2
  CHECK(all_tableaux(S("0,0")).size() == 1);            // the null tableau
  // Lexicographic on the column-major vector, smallest first.
  const auto tabs = all_tableaux(S("2,1,0"));
  for (std::size_t i = 1; i < tabs.size(); ++i) {
    CHECK(tabs[i - 1] < tabs[i]);
  }
  CHECK_THROWS_AS(all_tableaux(S("1,1,0"), T("1,2,3")), std::invalid_argument);
}

TEST_CASE("row bound max tableau") {
  CHECK(row_bound_max(S("1,1,0"), T("3,3;3")) == Tab("1,1,0", "2,3"));
  // Increasing bounds are their own core.
  CHECK(row_bound_max(S("1,1,0"), T("2,3;3")) == row_end_max(S("1,1,0"), T("2,3;3")));
  CHECK_THROWS_AS(row_bound_max(S("1,1,0"), T("1,1;3")), std::invalid_argument);
  // The bound set is the principal ideal of the row bound max tableau.
  for (const char* shape : {"1,1,0", "2,1,0", "2,1,1,0"}) {
    const Partition sh = S(shape);
    for (const RTuple& beta : all_upper(sh.r_of_shape())) {
      const auto bounded = all_tableaux(sh, beta);
      CHECK(same_tableau_set(bounded, principal_ideal(row_bound_max(sh, beta))));
    }
  }
}

TEST_CASE("lattice operations") {
  const Tableau a = Tab("2,1,0", "1,3|2");
  CHECK(join(a, a) == a);
  CHECK(meet(a, a) == a);
  CHECK(content(Tableau::minimum(S("3,2,1"))) == std::vector<int>{3, 2, 1});
  for (const char* shape : {"2,1,0", "2,2,0"}) {
    const auto tabs = all_tableaux(S(shape));
    for (const Tableau& x : tabs)
      for (const Tableau& y : tabs) {
        const Tableau j = join(x, y), m = meet(x, y);
        CHECK(leq(m, x));
        CHECK(leq(x, j));
        CHECK(leq(meet(x, y), join(x, y)));
        CHECK(j == join(y, x));
        CHECK(m == meet(y, x));
      }
  }
  CHECK_THROWS_AS(join(a, Tab("1,1,0", "1,2")), std::invalid_argument);
}

TEST_CASE("row bound sets are unions of row end fibers") {
  for (const char* shape : {"1,1,0", "2,1,0", "2,1,1,0"}) {
    const Partition sh = S(shape);
    const auto uppers = all_upper(sh.r_of_shape());
    for (const RTuple& beta : uppers) {
      const RTuple delta = core(beta);
      std::set<Tableau> expect;
      for (const Tableau& t : all_tableaux(sh))
        if (entrywise_leq(row_end_list(t), delta)) expect.insert(t);
      const auto got = all_tableaux(sh, beta);
      CHECK(got.size() == expect.size());
      for (const Tableau& t : got) CHECK(expect.count(t) == 1);
    }
    // Same bound set exactly when cores agree.
    for (const RTuple& b1 : uppers)
      for (const RTuple& b2 : uppers) {
        const bool same_sets = same_tableau_set(all_tableaux(sh, b1), all_tableaux(sh, b2));
        CHECK(same_sets == (core(b1) == core(b2)));
      }
  }
}

TEST_CASE("tableau text forms") {
  const Tableau t = Tab("2,1,0", "1,3|2");
  CHECK(to_text(t) == "1 2\n3");
  CHECK(to_compact(t) == "1,3|2");
  CHECK(parse_tableau(to_json(t).dump()) == t);
  CHECK(parse_tableau("-", S("0,0")) == Tab("0,0", "-"));
}
