#include "parcat/rtuple.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace parcat {

RTuple::RTuple(RSet rset, std::vector<int> entries) : rset_(std::move(rset)), entries_(std::move(entries)) {
  const int n = rset_.n();
  if (static_cast<int>(entries_.size()) != n)
    throw std::invalid_argument("RTuple: expected " + std::to_string(n) + " entries, got " +
                                std::to_string(entries_.size()));
  for (int i = 1; i <= n; ++i)
    if (at1(i) < 1 || at1(i) > n)
      throw std::invalid_argument("RTuple: entry at position " + std::to_string(i) + " is " +
                                  std::to_string(at1(i)) + ", outside [1, " + std::to_string(n) + "]");
}

RTuple RTuple::rebind(RSet rset) const {
  if (rset.n() != n()) throw std::invalid_argument("RTuple::rebind: divider set has different n");
  return RTuple(std::move(rset), entries_);
}

bool RTuple::operator<(const RTuple& o) const {
  if (entries_ != o.entries_) return entries_ < o.entries_;
  return rset_.elements() < o.rset_.elements();
}

bool entrywise_leq(const RTuple& a, const RTuple& b) {
  if (a.rset() != b.rset()) throw std::invalid_argument("entrywise_leq: divider sets differ");
  for (int i = 1; i <= a.n(); ++i)
    if (a.at1(i) > b.at1(i)) return false;
  return true;
}

RTuple entrywise_min(const RTuple& a, const RTuple& b) {
  if (a.rset() != b.rset()) throw std::invalid_argument("entrywise_min: divider sets differ");
  std::vector<int> e(a.n());
  for (int i = 0; i < a.n(); ++i) e[i] = std::min(a.entries()[i], b.entries()[i]);
  return RTuple(a.rset(), std::move(e));
}

RTuple entrywise_max(const RTuple& a, const RTuple& b) {
  if (a.rset() != b.rset()) throw std::invalid_argument("entrywise_max: divider sets differ");
  std::vector<int> e(a.n());
  for (int i = 0; i < a.n(); ++i) e[i] = std::max(a.entries()[i], b.entries()[i]);
  return RTuple(a.rset(), std::move(e));
}

CriticalList::CriticalList(RSet rset, std::vector<std::vector<CriticalPair>> carrels)
    : rset_(std::move(rset)), carrels_(std::move(carrels)) {
  const int n = rset_.n();
  if (static_cast<int>(carrels_.size()) != rset_.r() + 1)
    throw std::invalid_argument("CriticalList: expected " + std::to_string(rset_.r() + 1) + " carrel sets");
  for (int h = 1; h <= rset_.r() + 1; ++h) {
    const auto& ps = carrels_[h - 1];
    if (ps.empty() || ps.front().index != rset_.q(h))
      throw std::invalid_argument("CriticalList: carrel " + std::to_string(h) +
                                  " must start with the rightmost index " + std::to_string(rset_.q(h)));
    for (std::size_t u = 0; u < ps.size(); ++u) {
      const auto& p = ps[u];
      if (p.index <= rset_.q(h - 1) || p.index > rset_.q(h))
        throw std::invalid_argument("CriticalList: index " + std::to_string(p.index) + " outside carrel " +
                                    std::to_string(h));
      if (p.entry < p.index || p.entry > n)
        throw std::invalid_argument("CriticalList: entry " + std::to_string(p.entry) + " at index " +
                                    std::to_string(p.index) + " outside [index, n]");
      if (u > 0) {
        const auto& prev = ps[u - 1];
        if (p.index >= prev.index)
          throw std::invalid_argument("CriticalList: carrel indices must strictly decrease");
        if (prev.entry - p.entry <= prev.index - p.index)
          throw std::invalid_argument("CriticalList: consecutive pairs must satisfy the critical gap condition");
      }
    }
  }
}

std::vector<CriticalPair> CriticalList::pairs_by_index() const {
  std::vector<CriticalPair> out;
  for (const auto& c : carrels_)
    for (auto it = c.rbegin(); it != c.rend(); ++it) out.push_back(*it);
  return out;
}

CriticalList critical_list(const RTuple& t) {
  const RSet& R = t.rset();
  const int n = R.n();
  for (int i = 1; i <= n; ++i)
    if (t.at1(i) < i)
      throw std::invalid_argument("critical_list: input is not upper (entry at position " + std::to_string(i) +
                                  " is below " + std::to_string(i) + ")");
  std::vector<std::vector<CriticalPair>> carrels(R.r() + 1);
  for (int h = 1; h <= R.r() + 1; ++h) {
    int x = R.q(h);
    carrels[h - 1].push_back({x, t.at1(x)});
    while (true) {
      int next = 0;
      for (int i = x - 1; i > R.q(h - 1); --i)
        if (t.at1(x) - t.at1(i) > x - i) {
          next = i;
          break;
        }
      if (next == 0) break;
      carrels[h - 1].push_back({next, t.at1(next)});
      x = next;
    }
  }
  return CriticalList(R, std::move(carrels));
}

bool is_flag_critical(const CriticalList& c) {
  for (int h = 1; h <= c.rset().r(); ++h) {
    int right_entry = c.carrel(h).front().entry;       // entry at q_h
    int left_entry = c.carrel(h + 1).back().entry;     // leftmost critical entry of carrel h+1
    if (right_entry > left_entry) return false;
  }
  return true;
}

RTuple tuple_from_critical(const CriticalList& c, FillKind kind) {
  const RSet& R = c.rset();
  const int n = R.n();
  const bool needs_flag =
      kind == FillKind::Gapless || kind == FillKind::Canopy || kind == FillKind::Floor || kind == FillKind::Ceiling;
  if (needs_flag && !is_flag_critical(c))
    throw std::invalid_argument("tuple_from_critical: this kind requires a flag critical list");

  std::vector<int> e(n, 0);
  int xprev = 0;
  for (const auto& p : c.pairs_by_index()) {
    const int x = p.index, y = p.entry;
    e[x - 1] = y;
    // x is carrel-leading when the previous critical index is the right end
    // of the previous carrel (and we are past the first carrel).
    const int h = R.carrel_of(x);
    const bool carrel_leading = h >= 2 && xprev == R.q(h - 1);
    for (int i = xprev + 1; i < x; ++i) {
      switch (kind) {
        case FillKind::Increasing:
        case FillKind::Gapless:
          e[i - 1] = y - (x - i);
          break;
        case FillKind::Shell:
        case FillKind::Canopy:
          e[i - 1] = n;
          break;
        case FillKind::Ceiling:
          e[i - 1] = y;
          break;
        case FillKind::Floor:
          e[i - 1] = carrel_leading ? std::max(e[xprev - 1], y - (x - i)) : y - (x - i);
          break;
      }
    }
    xprev = x;
  }
  RTuple result(R, std::move(e));
  if (!(critical_list(result) == c))
    throw std::logic_error("tuple_from_critical: fill changed the critical list");
  return result;
}

namespace {

// Gapless test for a tuple already known to be R-increasing and upper.
bool gapless_of_increasing(const RTuple& g) {
  const RSet& R = g.rset();
  for (int h = 1; h <= R.r(); ++h) {
    const int edge = g.at1(R.q(h));
    const int next = g.at1(R.q(h) + 1);
    if (edge > next) {
      const int s = edge - next + 1;
      if (s > R.block_size(h + 1)) return false;
      for (int u = 0; u < s; ++u)
        if (g.at1(R.q(h) + 1 + u) != next + u) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::string> Labels::names() const {
  std::vector<std::string> out;
  if (upper) out.push_back("upper");
  if (flag) out.push_back("flag");
  if (r_increasing) out.push_back("r_increasing");
  if (gapless) out.push_back("gapless");
  if (gapless_core) out.push_back("gapless_core");
  if (shell) out.push_back("shell");
  if (canopy) out.push_back("canopy");
  if (floor_flag) out.push_back("floor_flag");
  if (ceiling_flag) out.push_back("ceiling_flag");
  if (r_flag) out.push_back("r_flag");
  return out;
}

Labels classify(const RTuple& t) {
  const RSet& R = t.rset();
  const int n = R.n();
  Labels L;

  L.upper = true;
  for (int i = 1; i <= n; ++i)
    if (t.at1(i) < i) L.upper = false;

  L.flag = true;
  for (int i = 2; i <= n; ++i)
    if (t.at1(i - 1) > t.at1(i)) L.flag = false;

  L.r_increasing = true;
  for (int h = 1; h <= R.r() + 1; ++h)
    for (int i = R.q(h - 1) + 2; i <= R.q(h); ++i)
      if (t.at1(i - 1) >= t.at1(i)) L.r_increasing = false;

  if (L.r_increasing && L.upper) {
    L.gapless = gapless_of_increasing(t);
    // R-flag: right-aligned entries of consecutive carrels weakly increase.
    L.r_flag = true;
    for (int h = 1; h <= R.r(); ++h) {
      const int m = std::min(R.block_size(h), R.block_size(h + 1));
      for (int u = 1; u <= m; ++u)
        if (t.at1(R.q(h + 1) + 1 - u) < t.at1(R.q(h) + 1 - u)) L.r_flag = false;
    }
  }

  if (L.upper) {
    const CriticalList c = critical_list(t);
    const bool flag_crit = is_flag_critical(c);
    L.gapless_core = gapless_of_increasing(tuple_from_critical(c, FillKind::Increasing));

    L.shell = true;
    std::vector<bool> is_critical(n + 1, false);
    for (const auto& p : c.pairs_by_index()) is_critical[p.index] = true;
    for (int i = 1; i <= n; ++i)
      if (!is_critical[i] && t.at1(i) != n) L.shell = false;
    L.canopy = L.shell && flag_crit;

    if (L.flag) {
      // Floor flag: each non-trivial plateau starts at some divider q_h.
      L.floor_flag = true;
      for (int i = 1; i <= n;) {
        int j = i;
        while (j < n && t.at1(j + 1) == t.at1(i)) ++j;
        if (j > i) {
          bool at_divider = false;
          for (int h = 1; h <= R.r(); ++h)
            if (R.q(h) == i) at_divider = true;
          if (!at_divider) L.floor_flag = false;
        }
        i = j + 1;
      }
      // Ceiling flag: constant between consecutive critical indices.
      L.ceiling_flag = t == tuple_from_critical(c, FillKind::Ceiling);
    }
  }

  return L;
}

}  // namespace parcat
