#include "parcat/maps.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace parcat {

namespace {

void require_gapless(const RTuple& g, const char* who) {
  if (!classify(g).gapless) throw std::invalid_argument(std::string(who) + ": input tuple is not gapless");
}

// d-th largest element of a sorted-ascending set.
int rank_d(const std::vector<int>& sorted, int d) { return sorted[sorted.size() - d]; }

}  // namespace

RPermutation::RPermutation(RTuple t) : t_(std::move(t)) {
  const int n = t_.n();
  std::vector<bool> seen(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    if (seen[t_.at1(i)])
      throw std::invalid_argument("RPermutation: repeated entry " + std::to_string(t_.at1(i)));
    seen[t_.at1(i)] = true;
  }
  const RSet& R = t_.rset();
  for (int h = 1; h <= R.r() + 1; ++h)
    for (int i = R.q(h - 1) + 2; i <= R.q(h); ++i)
      if (t_.at1(i - 1) >= t_.at1(i))
        throw std::invalid_argument("RPermutation: entries must increase within carrel " + std::to_string(h) +
                                    " (positions " + std::to_string(i - 1) + ", " + std::to_string(i) + ")");
}

RPermutation RPermutation::identity(RSet rset) {
  std::vector<int> e(rset.n());
  std::iota(e.begin(), e.end(), 1);
  return RPermutation(std::move(rset), std::move(e));
}

RPermutation RPermutation::classical(std::vector<int> entries) {
  const int n = static_cast<int>(entries.size());
  return RPermutation(RSet::full(n), std::move(entries));
}

Chain::Chain(RSet rset, std::vector<std::vector<int>> sets) : rset_(std::move(rset)), sets_(std::move(sets)) {
  const int r = rset_.r();
  if (static_cast<int>(sets_.size()) != r + 2)
    throw std::invalid_argument("Chain: expected " + std::to_string(r + 2) + " sets B_0..B_{r+1}");
  for (int h = 0; h <= r + 1; ++h) {
    auto& s = sets_[h];
    std::sort(s.begin(), s.end());
    if (static_cast<int>(s.size()) != rset_.q(h))
      throw std::invalid_argument("Chain: |B_" + std::to_string(h) + "| must be " + std::to_string(rset_.q(h)));
    if (!s.empty() && (s.front() < 1 || s.back() > rset_.n()))
      throw std::invalid_argument("Chain: set elements outside [1, n]");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("Chain: repeated element in B_" + std::to_string(h));
    if (h > 0 && !std::includes(s.begin(), s.end(), sets_[h - 1].begin(), sets_[h - 1].end()))
      throw std::invalid_argument("Chain: B_" + std::to_string(h - 1) + " is not contained in B_" + std::to_string(h));
  }
}

RTuple core(const RTuple& t) { return tuple_from_critical(critical_list(t), FillKind::Increasing); }

RTuple floor_of(const RTuple& g) {
  require_gapless(g, "floor_of");
  return tuple_from_critical(critical_list(g), FillKind::Floor);
}

RTuple ceiling_of(const RTuple& g) {
  require_gapless(g, "ceiling_of");
  return tuple_from_critical(critical_list(g), FillKind::Ceiling);
}

RTuple platform(const RTuple& t) {
  const CriticalList c = critical_list(t);
  const int n = t.n();
  std::vector<int> e(n, 0);
  int xprev = 0;
  for (const auto& p : c.pairs_by_index()) {
    for (int i = xprev + 1; i <= p.index; ++i) e[i - 1] = p.entry;
    xprev = p.index;
  }
  return RTuple(t.rset(), std::move(e));
}

RTuple rank_tuple(const RPermutation& p) {
  const RSet& R = p.rset();
  std::vector<int> e(R.n());
  std::vector<int> prefix;
  for (int h = 1; h <= R.r() + 1; ++h) {
    for (int i = R.q(h - 1) + 1; i <= R.q(h); ++i) prefix.push_back(p.at1(i));
    std::sort(prefix.begin(), prefix.end());
    for (int i = R.q(h - 1) + 1; i <= R.q(h); ++i) e[i - 1] = rank_d(prefix, R.q(h) - i + 1);
  }
  return RTuple(R, std::move(e));
}

RPermutation pi_of(const RTuple& g) {
  require_gapless(g, "pi_of");
  const RSet& R = g.rset();
  const int n = R.n();
  std::vector<int> e(n, 0);
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= R.q(1); ++i) {
    e[i - 1] = g.at1(i);
    used[g.at1(i)] = true;
  }
  for (int h = 1; h <= R.r(); ++h) {
    // Weak comparison here: with a strict one, a repeated boundary entry
    // would be copied into both carrels and the result would not be a
    // permutation.  See the README note on the pi map.
    const int edge = g.at1(R.q(h));
    const int s = edge >= g.at1(R.q(h) + 1) ? edge - g.at1(R.q(h) + 1) + 1 : 0;
    for (int i = R.q(h) + s + 1; i <= R.q(h + 1); ++i) {
      e[i - 1] = g.at1(i);
      used[g.at1(i)] = true;
    }
    std::vector<int> avail;
    for (int v = 1; v <= edge; ++v)
      if (!used[v]) avail.push_back(v);
    for (int i = R.q(h) + 1; i <= R.q(h) + s; ++i) {
      const int d = R.q(h) + s - i + 1;
      e[i - 1] = rank_d(avail, d);
      used[e[i - 1]] = true;
    }
  }
  RPermutation result(R, std::move(e));
  if (!(rank_tuple(result) == g)) throw std::logic_error("pi_of: rank tuple of the result differs from the input");
  return result;
}

namespace {

bool r312_by_pattern(const RPermutation& p) {
  const RSet& R = p.rset();
  for (int h = 1; h <= R.r() - 1; ++h)
    for (int b = R.q(h) + 1; b <= R.q(h + 1); ++b)
      for (int a = 1; a <= R.q(h); ++a) {
        if (p.at1(a) <= p.at1(b)) continue;
        for (int c = R.q(h + 1) + 1; c <= R.n(); ++c)
          if (p.at1(b) < p.at1(c) && p.at1(c) < p.at1(a)) return false;
      }
  return true;
}

bool r312_by_intervals(const RPermutation& p) {
  const RSet& R = p.rset();
  std::vector<bool> in_prefix(R.n() + 1, false);
  for (int i = 1; i <= R.q(1); ++i) in_prefix[p.at1(i)] = true;
  int mmax = 0;
  for (int i = 1; i <= R.q(1); ++i) mmax = std::max(mmax, p.at1(i));
  for (int h = 1; h <= R.r(); ++h) {
    int bmin = R.n() + 1;
    for (int i = R.q(h) + 1; i <= R.q(h + 1); ++i) {
      bmin = std::min(bmin, p.at1(i));
      in_prefix[p.at1(i)] = true;
    }
    for (int v = bmin + 1; v < mmax; ++v)
      if (!in_prefix[v]) return false;
    for (int i = R.q(h) + 1; i <= R.q(h + 1); ++i) mmax = std::max(mmax, p.at1(i));
  }
  return true;
}

}  // namespace

bool is_r312_avoiding(const RPermutation& p) {
  const bool a = r312_by_pattern(p);
  const bool b = r312_by_intervals(p);
  if (a != b) throw std::logic_error("is_r312_avoiding: pattern search and interval criterion disagree");
  return a;
}

Chain chain_of(const RPermutation& p) {
  const RSet& R = p.rset();
  std::vector<std::vector<int>> sets(R.r() + 2);
  for (int h = 1; h <= R.r() + 1; ++h) {
    sets[h] = sets[h - 1];
    for (int i = R.q(h - 1) + 1; i <= R.q(h); ++i) sets[h].push_back(p.at1(i));
  }
  return Chain(R, std::move(sets));
}

RPermutation perm_of_chain(const Chain& b) {
  const RSet& R = b.rset();
  std::vector<int> e;
  e.reserve(R.n());
  for (int h = 1; h <= R.r() + 1; ++h) {
    std::vector<int> diff;
    std::set_difference(b.set(h).begin(), b.set(h).end(), b.set(h - 1).begin(), b.set(h - 1).end(),
                        std::back_inserter(diff));
    e.insert(e.end(), diff.begin(), diff.end());
  }
  return RPermutation(R, std::move(e));
}

bool is_rightmost_clump_deleting(const Chain& b) {
  const RSet& R = b.rset();
  bool ok = true;
  // [min(B_{h+1} \ B_h), max(B_h)] must lie inside B_{h+1}, for h in [r].
  for (int h = 1; h <= R.r() && ok; ++h) {
    const auto& oldset = b.set(h);
    const auto& newset = b.set(h + 1);
    if (oldset.empty()) continue;
    std::vector<int> diff;
    std::set_difference(newset.begin(), newset.end(), oldset.begin(), oldset.end(), std::back_inserter(diff));
    const int bnew = diff.front();
    const int m = oldset.back();
    for (int v = bnew; v <= m && ok; ++v)
      if (!std::binary_search(newset.begin(), newset.end(), v)) ok = false;
  }
  if (ok != is_r312_avoiding(perm_of_chain(b)))
    throw std::logic_error("is_rightmost_clump_deleting: chain criterion disagrees with the permutation test");
  return ok;
}

RPermutation r_projection(const RPermutation& s, const RSet& rset) {
  if (rset.n() != s.n()) throw std::invalid_argument("r_projection: divider set has different n");
  std::vector<int> e(s.entries());
  for (int h = 1; h <= rset.r() + 1; ++h)
    std::sort(e.begin() + rset.q(h - 1), e.begin() + rset.q(h));
  return RPermutation(rset, std::move(e));
}

RPermutation min_lift(const RPermutation& p) {
  if (!is_r312_avoiding(p)) throw std::invalid_argument("min_lift: input permutation is not blockwise 312-avoiding");
  const RSet& R = p.rset();
  std::vector<int> e;
  e.reserve(R.n());
  int m = 0;  // max of the prefix union so far
  for (int i = 1; i <= R.q(1); ++i) {
    e.push_back(p.at1(i));
    m = std::max(m, p.at1(i));
  }
  for (int h = 1; h <= R.r(); ++h) {
    std::vector<int> below, above;
    for (int i = R.q(h) + 1; i <= R.q(h + 1); ++i)
      (p.at1(i) < m ? below : above).push_back(p.at1(i));
    std::sort(below.rbegin(), below.rend());
    std::sort(above.begin(), above.end());
    e.insert(e.end(), below.begin(), below.end());
    e.insert(e.end(), above.begin(), above.end());
    if (!above.empty()) m = std::max(m, above.back());
  }
  RPermutation sigma = RPermutation::classical(std::move(e));
  if (!is_r312_avoiding(sigma)) throw std::logic_error("min_lift: constructed lift contains a 312 pattern");
  if (!(r_projection(sigma, R) == p)) throw std::logic_error("min_lift: lift does not project back to the input");
  return sigma;
}

long long coxeter_length(const RPermutation& s) {
  long long inv = 0;
  for (int i = 1; i <= s.n(); ++i)
    for (int j = i + 1; j <= s.n(); ++j)
      if (s.at1(i) > s.at1(j)) ++inv;
  return inv;
}

}  // namespace parcat
