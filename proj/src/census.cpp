#include "parcat/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "parcat/poly.hpp"
#include "parcat/sweep.hpp"

namespace parcat {

namespace {

// Backtracks over entry vectors position by position, smallest value first.
// next_range(i, prev_in_carrel) yields the [lo, hi] candidate range.
template <class Range, class Emit>
void backtrack_entries(const RSet& R, Range&& range, Emit&& emit) {
  const int n = R.n();
  std::vector<int> e(n);
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      emit(e);
      return;
    }
    const int h = R.carrel_of(i);
    const int prev = (i - 1 > R.q(h - 1)) ? e[i - 2] : 0;
    const auto [lo, hi] = range(i, prev);
    for (int v = lo; v <= hi; ++v) {
      e[i - 1] = v;
      rec(i + 1);
    }
  };
  rec(1);
}

}  // namespace

std::vector<RPermutation> all_r_permutations(const RSet& R) {
  const int n = R.n();
  std::vector<RPermutation> out;
  std::vector<int> e(n);
  std::vector<bool> used(n + 1, false);
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.emplace_back(R, e);
      return;
    }
    const int h = R.carrel_of(i);
    const int lo = (i - 1 > R.q(h - 1)) ? e[i - 2] + 1 : 1;
    for (int v = lo; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      e[i - 1] = v;
      rec(i + 1);
      used[v] = false;
    }
  };
  rec(1);
  return out;
}

std::vector<RPermutation> all_r312_avoiding(const RSet& R) {
  std::vector<RPermutation> out;
  for (auto& p : all_r_permutations(R))
    if (is_r312_avoiding(p)) out.push_back(std::move(p));
  return out;
}

std::vector<RTuple> all_upper(const RSet& R) {
  std::vector<RTuple> out;
  backtrack_entries(
      R, [&](int i, int) { return std::pair<int, int>(i, R.n()); },
      [&](const std::vector<int>& e) { out.emplace_back(R, e); });
  return out;
}

std::vector<RTuple> all_increasing_upper(const RSet& R) {
  std::vector<RTuple> out;
  backtrack_entries(
      R, [&](int i, int prev) { return std::pair<int, int>(std::max(i, prev + 1), R.n()); },
      [&](const std::vector<int>& e) { out.emplace_back(R, e); });
  return out;
}

std::vector<RTuple> all_upper_flags(const RSet& R) {
  std::vector<RTuple> out;
  backtrack_entries(
      R, [&](int i, int) { return std::pair<int, int>(i, R.n()); },
      [&](const std::vector<int>& e) {
        for (std::size_t i = 1; i < e.size(); ++i)
          if (e[i] < e[i - 1]) return;
        out.emplace_back(R, e);
      });
  return out;
}

std::vector<RTuple> all_gapless_core(const RSet& R) {
  std::vector<RTuple> out;
  for (auto& t : all_upper(R))
    if (classify(t).gapless_core) out.push_back(std::move(t));
  return out;
}

std::vector<CriticalList> all_critical_lists(const RSet& R, bool flag_only) {
  const int n = R.n();
  std::vector<CriticalList> out;
  std::vector<std::vector<CriticalPair>> carrels(R.r() + 1);

  // Builds carrel h onward; prev_edge_entry is the critical entry at
  // q_{h-1}.  Discovery runs right to left, entries decreasing, so the
  // flag condition is enforced by flooring every new entry at the edge
  // entry of the previous carrel.
  std::function<void(int)> carrel_rec = [&](int h) {
    if (h > R.r() + 1) {
      out.emplace_back(R, carrels);
      return;
    }
    const int floor_entry = (flag_only && h > 1) ? carrels[h - 2].front().entry : 1;
    std::function<void()> extend = [&]() {
      // Option 1: stop this carrel here.
      carrel_rec(h + 1);
      // Option 2: add the next pair to the left.
      const CriticalPair last = carrels[h - 1].back();
      for (int x = last.index - 1; x > R.q(h - 1); --x) {
        const int hi = last.entry - (last.index - x) - 1;
        for (int y = std::max(x, floor_entry); y <= hi; ++y) {
          carrels[h - 1].push_back({x, y});
          extend();
          carrels[h - 1].pop_back();
        }
      }
    };
    const int x1 = R.q(h);
    for (int y = std::max(x1, floor_entry); y <= n; ++y) {
      carrels[h - 1] = {{x1, y}};
      extend();
    }
    carrels[h - 1].clear();
  };
  carrel_rec(1);
  return out;
}

namespace {

std::vector<RTuple> tuples_from_lists(const RSet& R, bool flag_only, FillKind kind) {
  std::vector<RTuple> out;
  for (const auto& c : all_critical_lists(R, flag_only)) out.push_back(tuple_from_critical(c, kind));
  return out;
}

}  // namespace

std::vector<RTuple> all_gapless(const RSet& R) { return tuples_from_lists(R, true, FillKind::Gapless); }
std::vector<RTuple> all_canopies(const RSet& R) { return tuples_from_lists(R, true, FillKind::Canopy); }
std::vector<RTuple> all_floor_flags(const RSet& R) { return tuples_from_lists(R, true, FillKind::Floor); }
std::vector<RTuple> all_ceiling_flags(const RSet& R) { return tuples_from_lists(R, true, FillKind::Ceiling); }
std::vector<RTuple> all_shells(const RSet& R) { return tuples_from_lists(R, false, FillKind::Shell); }

std::vector<Chain> all_chains(const RSet& R) {
  std::vector<Chain> out;
  for (const auto& p : all_r_permutations(R)) out.push_back(chain_of(p));
  return out;
}

std::vector<Chain> all_rightmost_clump_deleting_chains(const RSet& R) {
  std::vector<Chain> out;
  for (auto& b : all_chains(R))
    if (is_rightmost_clump_deleting(b)) out.push_back(std::move(b));
  return out;
}

Kind kind_from_string(const std::string& s) {
  static const std::map<std::string, Kind> table = {
      {"r_permutations", Kind::RPermutations},
      {"r312_avoiding", Kind::R312Avoiding},
      {"UI", Kind::UI},
      {"UG", Kind::UG},
      {"UGC", Kind::UGC},
      {"UF", Kind::UF},
      {"UFlr", Kind::UFlr},
      {"UCeil", Kind::UCeil},
      {"shells", Kind::Shells},
      {"canopies", Kind::Canopies},
      {"critical_lists", Kind::CriticalLists},
      {"flag_critical_lists", Kind::FlagCriticalLists},
      {"chains", Kind::Chains},
      {"rightmost_clump_deleting_chains", Kind::RightmostClumpDeletingChains},
  };
  auto it = table.find(s);
  if (it == table.end()) throw std::invalid_argument("unknown family kind '" + s + "'");
  return it->second;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::RPermutations: return "r_permutations";
    case Kind::R312Avoiding: return "r312_avoiding";
    case Kind::UI: return "UI";
    case Kind::UG: return "UG";
    case Kind::UGC: return "UGC";
    case Kind::UF: return "UF";
    case Kind::UFlr: return "UFlr";
    case Kind::UCeil: return "UCeil";
    case Kind::Shells: return "shells";
    case Kind::Canopies: return "canopies";
    case Kind::CriticalLists: return "critical_lists";
    case Kind::FlagCriticalLists: return "flag_critical_lists";
    case Kind::Chains: return "chains";
    case Kind::RightmostClumpDeletingChains: return "rightmost_clump_deleting_chains";
  }
  throw std::logic_error("kind_name: bad kind");
}

long long family_count(Kind k, const RSet& R) {
  switch (k) {
    case Kind::RPermutations: return static_cast<long long>(all_r_permutations(R).size());
    case Kind::R312Avoiding: return static_cast<long long>(all_r312_avoiding(R).size());
    case Kind::UI: return static_cast<long long>(all_increasing_upper(R).size());
    case Kind::UG: return static_cast<long long>(all_gapless(R).size());
    case Kind::UGC: return static_cast<long long>(all_gapless_core(R).size());
    case Kind::UF: return static_cast<long long>(all_upper_flags(R).size());
    case Kind::UFlr: return static_cast<long long>(all_floor_flags(R).size());
    case Kind::UCeil: return static_cast<long long>(all_ceiling_flags(R).size());
    case Kind::Shells: return static_cast<long long>(all_shells(R).size());
    case Kind::Canopies: return static_cast<long long>(all_canopies(R).size());
    case Kind::CriticalLists: return static_cast<long long>(all_critical_lists(R, false).size());
    case Kind::FlagCriticalLists: return static_cast<long long>(all_critical_lists(R, true).size());
    case Kind::Chains: return static_cast<long long>(all_chains(R).size());
    case Kind::RightmostClumpDeletingChains:
      return static_cast<long long>(all_rightmost_clump_deleting_chains(R).size());
  }
  throw std::logic_error("family_count: bad kind");
}

long long multinomial_of(const RSet& R) {
  long long v = 1;
  int placed = 0;
  for (int h = 1; h <= R.r() + 1; ++h) {
    // multiply binomial(placed + p_h, p_h)
    const int p = R.block_size(h);
    for (int k = 1; k <= p; ++k) {
      v = checked_mul(v, placed + k);
      v /= k;  // exact: running product of binomials
    }
    placed += p;
  }
  return v;
}

long long parabolic_catalan(const RSet& R) {
  long long c = 0;
  for (const auto& p : all_r_permutations(R))
    if (is_r312_avoiding(p)) ++c;
  return c;
}

long long parabolic_catalan(int n, const std::vector<int>& relements) {
  return parabolic_catalan(RSet(n, relements));
}

long long total_parabolic_catalan(int n) {
  long long total = 0;
  for (const auto& R : all_rsets(n)) total = checked_add(total, parabolic_catalan(R));
  return total;
}

std::pair<RTuple, RTuple> class_interval(const RTuple& beta) {
  const CriticalList c = critical_list(beta);
  return {tuple_from_critical(c, FillKind::Increasing), tuple_from_critical(c, FillKind::Shell)};
}

std::vector<RSet> all_rsets(int n) {
  std::vector<RSet> out;
  const int bits = n - 1;
  for (unsigned mask = 0; mask < (1u << bits); ++mask) {
    std::vector<int> e;
    for (int b = 0; b < bits; ++b)
      if (mask & (1u << b)) e.push_back(b + 1);
    out.emplace_back(n, std::move(e));
  }
  return out;
}

std::vector<Partition> partitions_in_box(int n, int box_rows, int box_cols) {
  std::vector<Partition> out;
  const int rows = std::min(n, box_rows);
  std::vector<int> parts(n, 0);
  // Row i gets a value at most the row above; a zero forces zeros below.
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i > rows) {
      out.emplace_back(parts);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      parts[i - 1] = v;
      rec(i + 1, v);
      parts[i - 1] = 0;
    }
  };
  rec(1, box_cols);
  std::sort(out.begin(), out.end());
  return out;
}

Partition minimal_shape(const RSet& R) {
  std::vector<int> parts(R.n(), 0);
  for (int i = 1; i <= R.n(); ++i) {
    int c = 0;
    for (int q : R.elements())
      if (q >= i) ++c;
    parts[i - 1] = c;
  }
  return Partition(std::move(parts));
}

}  // namespace parcat
