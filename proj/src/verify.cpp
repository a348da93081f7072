#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

#include "parcat/census.hpp"
#include "parcat/polynomials.hpp"
#include "parcat/scanning.hpp"
#include "parcat/sweep.hpp"
#include "parcat/text.hpp"

namespace parcat {

namespace {

constexpr int kMaxFailuresPerJob = 5;

long long count_tableaux_capped(const Partition& shape, long long cap) {
  long long c = 0;
  for_each_tableau(shape, std::nullopt, [&](const Tableau&) { return ++c <= cap; });
  return c;
}

// Everything a shape-level sweep keeps re-reading.
struct ShapeData {
  Partition shape;
  RSet R;
  std::vector<RPermutation> perms;
  std::vector<char> avoiding;
  std::vector<Tableau> keys;
  std::vector<Tableau> tabs;
  std::vector<Tableau> scans;

  explicit ShapeData(const Partition& s, bool with_tableaux) : shape(s), R(s.r_of_shape()) {
    perms = all_r_permutations(R);
    for (const auto& p : perms) {
      avoiding.push_back(is_r312_avoiding(p) ? 1 : 0);
      keys.push_back(key_of(shape, p));
    }
    if (with_tableaux) {
      tabs = all_tableaux(shape);
      scans.reserve(tabs.size());
      for (const auto& t : tabs) scans.push_back(scan(t));
    }
  }

  // Membership of each tableau in the row bound set of beta.  The latent
  // column makes every set empty under non-upper bounds.
  std::vector<char> row_bound_membership(const RTuple& beta) const {
    std::vector<char> m(tabs.size());
    for (int i = 1; i <= shape.n(); ++i)
      if (beta.at1(i) < i) return m;
    for (std::size_t t = 0; t < tabs.size(); ++t) {
      bool in = true;
      for (int i = 1; i <= shape.n() && in; ++i)
        if (shape.part(i) > 0 && tabs[t].at(shape.part(i), i) > beta.at1(i)) in = false;
      m[t] = in ? 1 : 0;
    }
    return m;
  }

  std::vector<char> demazure_membership(const Tableau& key) const {
    std::vector<char> m(tabs.size());
    for (std::size_t t = 0; t < tabs.size(); ++t) m[t] = leq(scans[t], key) ? 1 : 0;
    return m;
  }

  SparsePoly poly_of(const std::vector<char>& membership) const {
    SparsePoly p(shape.n());
    for (std::size_t t = 0; t < tabs.size(); ++t)
      if (membership[t]) p.add_term(content(tabs[t]), 1);
    return p;
  }
};

struct Sweep {
  const VerifyLimits& limits;
  std::vector<std::function<JobResult()>> jobs;

  explicit Sweep(const VerifyLimits& l) : limits(l) {}

  // One job per shape, shapes needing tableaux filtered by the n >= 5 cap.
  template <class F>
  void per_shape(bool with_tableaux, F&& body) {
    for (int n = 1; n <= limits.max_n; ++n)
      for (const Partition& shape : partitions_in_box(n, limits.box_rows, limits.box_cols)) {
        if (with_tableaux && n >= 5 && count_tableaux_capped(shape, limits.tableau_cap) > limits.tableau_cap)
          continue;
        jobs.push_back([shape, with_tableaux, body]() {
          JobResult r;
          try {
            ShapeData d(shape, with_tableaux);
            body(d, r);
          } catch (const std::exception& e) {
            r.failures.push_back("shape " + to_text(shape) + ": " + e.what());
          }
          return r;
        });
      }
  }

  template <class F>
  void per_rset(F&& body) {
    for (int n = 1; n <= limits.max_n; ++n)
      for (const RSet& R : all_rsets(n))
        jobs.push_back([R, body]() {
          JobResult r;
          try {
            body(R, r);
          } catch (const std::exception& e) {
            r.failures.push_back("n=" + std::to_string(R.n()) + ": " + e.what());
          }
          return r;
        });
  }
};

void fail(JobResult& r, const std::string& msg) {
  if (static_cast<int>(r.failures.size()) < kMaxFailuresPerJob) r.failures.push_back(msg);
}

void verify_t340(Sweep& sw) {
  sw.per_shape(false, [](const ShapeData& d, JobResult& r) {
    for (std::size_t p = 0; p < d.perms.size(); ++p) {
      ++r.checked;
      const bool gapless_key = is_gapless_key(d.keys[p]);
      if (gapless_key != static_cast<bool>(d.avoiding[p]))
        fail(r, "T340 shape " + to_text(d.shape) + " pi " + to_text(d.perms[p]) +
                    ": gapless-key test disagrees with the blockwise 312 test");
      if (d.avoiding[p] && !(row_end_max(d.shape, rank_tuple(d.perms[p])) == d.keys[p]))
        fail(r, "T340 shape " + to_text(d.shape) + " pi " + to_text(d.perms[p]) +
                    ": row end max of the rank tuple is not the key");
    }
  });
}

void verify_t420(Sweep& sw) {
  sw.per_shape(true, [](const ShapeData& d, JobResult& r) {
    for (std::size_t p = 0; p < d.perms.size(); ++p) {
      if (!d.avoiding[p]) continue;
      ++r.checked;
      for (std::size_t t = 0; t < d.tabs.size(); ++t) {
        const bool in_d = leq(d.scans[t], d.keys[p]);
        const bool in_i = leq(d.tabs[t], d.keys[p]);
        if (in_d != in_i) {
          fail(r, "T420 shape " + to_text(d.shape) + " pi " + to_text(d.perms[p]) + " tableau " +
                      to_compact(d.tabs[t]));
          break;
        }
      }
    }
  });
}

void verify_t520(Sweep& sw) {
  sw.per_shape(true, [](const ShapeData& d, JobResult& r) {
    for (std::size_t p = 0; p < d.perms.size(); ++p) {
      if (d.avoiding[p]) continue;
      ++r.checked;
      bool proper = false;
      for (std::size_t t = 0; t < d.tabs.size(); ++t) {
        const bool in_d = leq(d.scans[t], d.keys[p]);
        const bool in_i = leq(d.tabs[t], d.keys[p]);
        if (in_d && !in_i)
          fail(r, "T520 shape " + to_text(d.shape) + ": Demazure set escapes the ideal at " + to_compact(d.tabs[t]));
        if (in_i && !in_d) proper = true;
      }
      if (!proper)
        fail(r, "T520 shape " + to_text(d.shape) + " pi " + to_text(d.perms[p]) +
                    ": blockwise-312-containing index but the Demazure set fills its ideal");
    }
  });
}

void verify_t721(Sweep& sw) {
  sw.per_shape(true, [](const ShapeData& d, JobResult& r) {
    std::set<std::vector<char>> from_flags, from_avoiding;
    for (const RTuple& phi : all_upper_flags(d.R)) from_flags.insert(d.row_bound_membership(phi));
    for (std::size_t p = 0; p < d.perms.size(); ++p)
      if (d.avoiding[p]) from_avoiding.insert(d.demazure_membership(d.keys[p]));
    if (from_flags != from_avoiding)
      fail(r, "T721 shape " + to_text(d.shape) + ": flag bound sets and avoiding Demazure sets differ");
    for (const RTuple& gamma : all_gapless(d.R)) {
      ++r.checked;
      const auto s_gamma = d.row_bound_membership(gamma);
      if (s_gamma != d.row_bound_membership(floor_of(gamma)))
        fail(r, "T721 shape " + to_text(d.shape) + " gamma " + to_text(gamma) + ": floor flag changes the set");
      if (s_gamma != d.demazure_membership(key_of(d.shape, pi_of(gamma))))
        fail(r, "T721 shape " + to_text(d.shape) + " gamma " + to_text(gamma) + ": Demazure set differs");
    }
  });
}

void verify_t737_1(Sweep& sw) {
  sw.per_shape(true, [](const ShapeData& d, JobResult& r) {
    for (std::size_t p = 0; p < d.perms.size(); ++p) {
      if (!d.avoiding[p]) continue;
      ++r.checked;
      const RTuple gamma = rank_tuple(d.perms[p]);
      const auto dm = d.demazure_membership(d.keys[p]);
      if (dm != d.row_bound_membership(gamma))
        fail(r, "T737_1 shape " + to_text(d.shape) + " pi " + to_text(d.perms[p]) + ": tableau sets differ");
      else if (!(d.poly_of(dm) == d.poly_of(d.row_bound_membership(gamma))))
        fail(r, "T737_1 shape " + to_text(d.shape) + " pi " + to_text(d.perms[p]) + ": polynomials differ");
    }
  });
}

void verify_t737_2(Sweep& sw) {
  sw.per_shape(true, [](const ShapeData& d, JobResult& r) {
    const std::vector<RTuple> uppers = all_upper(d.R);
    std::vector<SparsePoly> spolys;
    spolys.reserve(uppers.size());
    for (const RTuple& beta : uppers) spolys.push_back(d.poly_of(d.row_bound_membership(beta)));
    std::vector<SparsePoly> dpolys;
    dpolys.reserve(d.perms.size());
    for (std::size_t p = 0; p < d.perms.size(); ++p) dpolys.push_back(d.poly_of(d.demazure_membership(d.keys[p])));
    for (std::size_t b = 0; b < uppers.size(); ++b)
      for (std::size_t p = 0; p < d.perms.size(); ++p) {
        ++r.checked;
        if (!(spolys[b] == dpolys[p])) continue;
        if (!d.avoiding[p] || !(core(uppers[b]) == rank_tuple(d.perms[p])))
          fail(r, "T737_2 shape " + to_text(d.shape) + " beta " + to_text(uppers[b]) + " pi " +
                      to_text(d.perms[p]) + ": accidental polynomial coincidence");
      }
  });
}

std::string rset_text(const RSet& R) {
  std::string s;
  for (int q : R.elements()) s += (s.empty() ? "" : ",") + std::to_string(q);
  return "n=" + std::to_string(R.n()) + " R={" + s + "}";
}

void verify_t18_1(Sweep& sw) {
  sw.per_rset([](const RSet& R, JobResult& r) {
    ++r.checked;
    const long long cnr = parabolic_catalan(R);
    auto expect = [&](long long got, const std::string& what) {
      if (got != cnr)
        fail(r, "T18_1 " + rset_text(R) + ": " + what + " count " + std::to_string(got) + " != " +
                    std::to_string(cnr));
    };
    expect(static_cast<long long>(all_gapless(R).size()), "gapless tuples");
    expect(static_cast<long long>(all_canopies(R).size()), "canopy tuples");
    expect(static_cast<long long>(all_floor_flags(R).size()), "floor flags");
    expect(static_cast<long long>(all_ceiling_flags(R).size()), "ceiling flags");
    expect(static_cast<long long>(all_critical_lists(R, true).size()), "flag critical lists");
    expect(static_cast<long long>(all_rightmost_clump_deleting_chains(R).size()), "clump deleting chains");

    const Partition shape = minimal_shape(R);
    const auto perms = all_r_permutations(R);
    long long gapless_keys = 0;
    for (const auto& p : perms)
      if (is_gapless_key(key_of(shape, p))) ++gapless_keys;
    expect(gapless_keys, "gapless keys");

    ShapeData d(shape, true);
    std::set<std::vector<char>> dsets, fsets;
    for (std::size_t p = 0; p < d.perms.size(); ++p)
      if (d.avoiding[p]) dsets.insert(d.demazure_membership(d.keys[p]));
    for (const RTuple& phi : all_upper_flags(R)) fsets.insert(d.row_bound_membership(phi));
    expect(static_cast<long long>(dsets.size()), "distinct Demazure sets");
    expect(static_cast<long long>(fsets.size()), "distinct flag bound sets");
  });
}

void verify_table16_1(Sweep& sw) {
  sw.per_shape(true, [](const ShapeData& d, JobResult& r) {
    ++r.checked;
    const long long mult = multinomial_of(d.R);
    const long long cnr = parabolic_catalan(d.R);

    const std::vector<RTuple> uppers = all_upper(d.R);
    std::vector<std::vector<char>> smembs;
    std::vector<SparsePoly> spolys;
    std::vector<char> in_ugc;
    for (const RTuple& beta : uppers) {
      smembs.push_back(d.row_bound_membership(beta));
      spolys.push_back(d.poly_of(smembs.back()));
      in_ugc.push_back(classify(beta).gapless_core ? 1 : 0);
    }

    std::set<std::vector<char>> distinct_ssets(smembs.begin(), smembs.end());
    if (static_cast<long long>(distinct_ssets.size()) != mult)
      fail(r, "TABLE16_1 distinct row bound sets: shape " + to_text(d.shape) + " has " + std::to_string(distinct_ssets.size()) +
                  " distinct row bound sets, expected " + std::to_string(mult));

    // Rows 1, 3, 4: polynomial equality among row bound sums involving a
    // gapless core side forces equal cores.
    for (std::size_t a = 0; a < uppers.size(); ++a)
      for (std::size_t b = a + 1; b < uppers.size(); ++b) {
        if (!in_ugc[a] && !in_ugc[b]) continue;
        const bool eq = spolys[a] == spolys[b];
        const bool same_core = core(uppers[a]) == core(uppers[b]);
        if (eq != same_core)
          fail(r, "TABLE16_1 polynomial equality vs core equality: shape " + to_text(d.shape) + " beta " + to_text(uppers[a]) + " vs " +
                      to_text(uppers[b]));
        if (eq && (!in_ugc[a] || !in_ugc[b]))
          fail(r, "TABLE16_1: a gapless-core polynomial equals a row bound sum from outside the family");
      }

    std::set<SparsePoly> ugc_polys, flag_polys;
    for (std::size_t a = 0; a < uppers.size(); ++a)
      if (in_ugc[a]) ugc_polys.insert(spolys[a]);
    for (const RTuple& phi : all_upper_flags(d.R)) flag_polys.insert(d.poly_of(d.row_bound_membership(phi)));
    if (static_cast<long long>(ugc_polys.size()) != cnr)
      fail(r, "TABLE16_1 distinct gapless-core polynomials: shape " + to_text(d.shape));
    if (static_cast<long long>(flag_polys.size()) != cnr)
      fail(r, "TABLE16_1 distinct flag polynomials: shape " + to_text(d.shape));

    // Rows 6, 7: Demazure polynomials are pairwise distinct.
    std::vector<SparsePoly> dpolys;
    std::set<std::vector<char>> dsets;
    for (std::size_t p = 0; p < d.perms.size(); ++p) {
      const auto m = d.demazure_membership(d.keys[p]);
      dsets.insert(m);
      dpolys.push_back(d.poly_of(m));
    }
    std::set<SparsePoly> distinct_dpolys(dpolys.begin(), dpolys.end());
    if (static_cast<long long>(distinct_dpolys.size()) != mult || static_cast<long long>(dsets.size()) != mult)
      fail(r, "TABLE16_1 shape " + to_text(d.shape) + " Demazure polynomials not pairwise distinct");

    // Row 5: sets arising on both sides.
    std::set<std::vector<char>> dset_all(dsets);
    long long both = 0;
    for (const auto& m : distinct_ssets)
      if (dset_all.count(m)) ++both;
    if (both != cnr)
      fail(r, "TABLE16_1 two-sided sets: shape " + to_text(d.shape) + " coincidence count " + std::to_string(both) +
                  " != " + std::to_string(cnr));
  });
}

void verify_gv17(Sweep& sw) {
  sw.per_shape(false, [](const ShapeData& d, JobResult& r) {
    for (const RTuple& beta : all_upper(d.R)) {
      ++r.checked;
      const bool np = is_nonpermutable(d.shape, beta);
      const bool eq = gv_determinant(d.shape, beta) == row_bound_sum(d.shape, beta);
      if (np != eq)
        fail(r, "GV17 shape " + to_text(d.shape) + " beta " + to_text(beta) + ": nonpermutable=" +
                    (np ? "true" : "false") + " but determinant " + (eq ? "matches" : "differs"));
    }
  });
}

bool gv_has_false_witness(const VerifyLimits& limits) {
  for (int n = 1; n <= limits.max_n; ++n)
    for (const Partition& shape : partitions_in_box(n, limits.box_rows, limits.box_cols))
      for (const RTuple& beta : all_upper(shape.r_of_shape()))
        if (!is_nonpermutable(shape, beta)) return true;
  return false;
}

}  // namespace

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = {"T340", "T420", "T520", "T721", "T737_1",
                                               "T737_2", "T18_1", "TABLE16_1", "GV17"};
  return ids;
}

VerificationReport verify(const std::string& theorem_id, const VerifyLimits& limits, int threads) {
  const auto start = std::chrono::steady_clock::now();
  Sweep sw(limits);
  if (theorem_id == "T340") verify_t340(sw);
  else if (theorem_id == "T420") verify_t420(sw);
  else if (theorem_id == "T520") verify_t520(sw);
  else if (theorem_id == "T721") verify_t721(sw);
  else if (theorem_id == "T737_1") verify_t737_1(sw);
  else if (theorem_id == "T737_2") verify_t737_2(sw);
  else if (theorem_id == "T18_1") verify_t18_1(sw);
  else if (theorem_id == "TABLE16_1") verify_table16_1(sw);
  else if (theorem_id == "GV17") verify_gv17(sw);
  else throw std::invalid_argument("verify: unknown theorem id '" + theorem_id + "'");

  JobResult total = run_jobs(sw.jobs.size(), threads, [&](std::size_t i) { return sw.jobs[i](); });

  VerificationReport report;
  report.theorem = theorem_id;
  report.limits = limits;
  report.checked = total.checked;
  report.failures = std::move(total.failures);
  if (theorem_id == "GV17" && !gv_has_false_witness(limits))
    report.failures.push_back("GV17: no falsifying bound in the sweep; the criterion was not exercised");
  report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace parcat
