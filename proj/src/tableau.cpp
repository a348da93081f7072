#include "parcat/tableau.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace parcat {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> cols)
    : shape_(std::move(shape)), cols_(std::move(cols)) {
  const int n = shape_.n();
  if (static_cast<int>(cols_.size()) != shape_.lambda1())
    throw std::invalid_argument("Tableau: expected " + std::to_string(shape_.lambda1()) + " columns");
  for (int j = 1; j <= shape_.lambda1(); ++j) {
    const auto& col = cols_[j - 1];
    if (static_cast<int>(col.size()) != shape_.col_len(j))
      throw std::invalid_argument("Tableau: column " + std::to_string(j) + " must have " +
                                  std::to_string(shape_.col_len(j)) + " values");
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i] < 1 || col[i] > n)
        throw std::invalid_argument("Tableau: value outside [1, n] in column " + std::to_string(j));
      if (i > 0 && col[i] <= col[i - 1])
        throw std::invalid_argument("Tableau: column " + std::to_string(j) + " must strictly increase downward (row " +
                                    std::to_string(i + 1) + ")");
    }
    if (j > 1)
      for (std::size_t i = 0; i < col.size(); ++i)
        if (col[i] < cols_[j - 2][i])
          throw std::invalid_argument("Tableau: row " + std::to_string(i + 1) +
                                      " must weakly increase eastward at column " + std::to_string(j));
  }
}

std::vector<int> Tableau::column_set(int j) const {
  std::vector<int> s = cols_[j - 1];
  return s;  // already sorted: columns strictly increase downward
}

Tableau Tableau::minimum(const Partition& shape) {
  std::vector<std::vector<int>> cols(shape.lambda1());
  for (int j = 1; j <= shape.lambda1(); ++j) {
    cols[j - 1].resize(shape.col_len(j));
    for (int i = 1; i <= shape.col_len(j); ++i) cols[j - 1][i - 1] = i;
  }
  return Tableau(shape, std::move(cols));
}

bool Tableau::operator<(const Tableau& o) const {
  if (!(shape_ == o.shape_)) return shape_ < o.shape_;
  return cols_ < o.cols_;
}

std::vector<int> content(const Tableau& t) {
  std::vector<int> theta(t.n(), 0);
  for (const auto& col : t.cols())
    for (int v : col) ++theta[v - 1];
  return theta;
}

RTuple row_end_list(const Tableau& t) {
  const Partition& shape = t.shape();
  std::vector<int> e(shape.n());
  for (int i = 1; i <= shape.n(); ++i) e[i - 1] = t.at(shape.part(i), i);
  return RTuple(shape.r_of_shape(), std::move(e));
}

Tableau key_of(const Partition& shape, const RPermutation& p) {
  const RSet R = shape.r_of_shape();
  if (!(p.rset() == R))
    throw std::invalid_argument("key_of: permutation divider set does not match the shape's column lengths");
  const Chain b = chain_of(p);
  std::vector<std::vector<int>> cols;
  for (int j = 1; j <= shape.lambda1(); ++j) {
    const int len = shape.col_len(j);
    if (len == shape.n()) {
      cols.push_back({});
      auto& col = cols.back();
      col.resize(len);
      for (int i = 1; i <= len; ++i) col[i - 1] = i;
    } else {
      // The columns of length q_h carry the chain set B_h, sorted.
      int h = 0;
      for (int k = 1; k <= R.r(); ++k)
        if (R.q(k) == len) h = k;
      cols.push_back(b.set(h));
    }
  }
  return Tableau(shape, std::move(cols));
}

bool is_key(const Tableau& t) {
  for (int j = 2; j <= t.shape().lambda1(); ++j) {
    const auto left = t.column_set(j - 1);
    const auto right = t.column_set(j);
    if (!std::includes(left.begin(), left.end(), right.begin(), right.end())) return false;
  }
  return true;
}

RPermutation perm_of_key(const Tableau& y) {
  if (!is_key(y)) throw std::invalid_argument("perm_of_key: tableau is not a key");
  const Partition& shape = y.shape();
  const RSet R = shape.r_of_shape();
  std::vector<std::vector<int>> sets(R.r() + 2);
  for (int h = 1; h <= R.r(); ++h) {
    // Rightmost column of length q_h.
    const int j = shape.part(R.q(h));
    sets[h] = y.column_set(j);
  }
  sets[R.r() + 1].resize(R.n());
  for (int v = 1; v <= R.n(); ++v) sets[R.r() + 1][v - 1] = v;
  return perm_of_chain(Chain(R, std::move(sets)));
}

bool is_gapless_key(const Tableau& y) {
  if (!is_key(y)) throw std::invalid_argument("is_gapless_key: tableau is not a key");
  const Partition& shape = y.shape();
  const RSet R = shape.r_of_shape();
  bool ok = true;
  for (int h = 1; h <= R.r() - 1 && ok; ++h) {
    const auto longer = y.column_set(shape.part(R.q(h + 1)));  // length q_{h+1}
    const auto shorter = y.column_set(shape.part(R.q(h)));     // length q_h
    int b = 0;
    for (int v : longer)
      if (!std::binary_search(shorter.begin(), shorter.end(), v)) {
        b = v;
        break;
      }
    const int m = shorter.back();
    if (b > m) continue;
    // Between the shared occurrences of b and m the column must run by ones.
    for (int j = shape.part(R.q(h + 2)) + 1; j <= shape.part(R.q(h + 1)) && ok; ++j) {
      int i = 0, k = 0;
      for (int row = 1; row <= shape.col_len(j); ++row) {
        if (y.at(j, row) == b) i = row;
        if (y.at(j, row) == m) k = row;
      }
      if (i == 0 || k == 0 || m - b != k - i) {
        ok = false;
        break;
      }
      for (int t = 1; t < k - i; ++t)
        if (y.at(j, i + t) != b + t) ok = false;
    }
  }
  if (ok != is_r312_avoiding(perm_of_key(y)))
    throw std::logic_error("is_gapless_key: column-run condition disagrees with the permutation test");
  return ok;
}

Tableau row_end_max(const Partition& shape, const RTuple& a) {
  const RSet R = shape.r_of_shape();
  if (!(a.rset() == R))
    throw std::invalid_argument("row_end_max: tuple divider set does not match the shape's column lengths");
  const Labels la = classify(a);
  if (!la.upper || !la.r_increasing)
    throw std::invalid_argument("row_end_max: row end list must be an increasing upper tuple");

  const int ncols = shape.lambda1();
  std::vector<std::vector<int>> cols(ncols);
  for (int j = 1; j <= ncols; ++j) cols[j - 1].resize(shape.col_len(j));
  for (int j = ncols; j >= 1; --j) {
    const int len = shape.col_len(j);
    if (len == shape.n()) {
      for (int i = 1; i <= len; ++i) cols[j - 1][i - 1] = i;
      continue;
    }
    const int h = R.carrel_of(len);  // len == q_h
    for (int i = R.q(h - 1) + 1; i <= len; ++i) cols[j - 1][i - 1] = a.at1(i);
    for (int i = R.q(h - 1); i >= 1; --i)
      cols[j - 1][i - 1] = std::min(cols[j - 1][i] - 1, cols[j][i - 1]);
  }
  Tableau m(shape, std::move(cols));
  if (!(row_end_list(m) == a)) throw std::logic_error("row_end_max: fill lost the prescribed row end list");
  return m;
}

Tableau row_bound_max(const Partition& shape, const RTuple& beta) {
  if (!classify(beta).upper) throw std::invalid_argument("row_bound_max: bounds must be an upper tuple");
  return row_end_max(shape, core(beta));
}

bool leq(const Tableau& a, const Tableau& b) {
  if (!(a.shape() == b.shape())) throw std::invalid_argument("leq: shapes differ");
  for (std::size_t j = 0; j < a.cols().size(); ++j)
    for (std::size_t i = 0; i < a.cols()[j].size(); ++i)
      if (a.cols()[j][i] > b.cols()[j][i]) return false;
  return true;
}

namespace {

Tableau combine(const Tableau& a, const Tableau& b, bool mx, const char* who) {
  if (!(a.shape() == b.shape())) throw std::invalid_argument(std::string(who) + ": shapes differ");
  std::vector<std::vector<int>> cols = a.cols();
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i)
      cols[j][i] = mx ? std::max(cols[j][i], b.cols()[j][i]) : std::min(cols[j][i], b.cols()[j][i]);
  return Tableau(a.shape(), std::move(cols));  // constructor re-checks semistandardness
}

// Backtracking enumeration over cells in column-major order.  cell_cap
// gives the per-cell upper bound beyond the structural ones.
void enumerate(const Partition& shape, const std::function<int(int, int)>& cell_cap,
               const std::function<bool(const Tableau&)>& fn) {
  const int ncols = shape.lambda1();
  std::vector<std::vector<int>> cols(ncols);
  for (int j = 1; j <= ncols; ++j) cols[j - 1].resize(shape.col_len(j));

  // Flatten cells: (j, i) pairs in column-major order.
  std::vector<std::pair<int, int>> cells;
  for (int j = 1; j <= ncols; ++j)
    for (int i = 1; i <= shape.col_len(j); ++i) cells.emplace_back(j, i);

  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (stop) return;
    if (idx == cells.size()) {
      if (!fn(Tableau(shape, cols))) stop = true;
      return;
    }
    const auto [j, i] = cells[idx];
    int lo = 1;
    if (i > 1) lo = std::max(lo, cols[j - 1][i - 2] + 1);
    if (j > 1) lo = std::max(lo, cols[j - 2][i - 1]);
    // Leave room to finish the column strictly increasing.
    int hi = std::min(shape.n() - (shape.col_len(j) - i), cell_cap(j, i));
    for (int v = lo; v <= hi && !stop; ++v) {
      cols[j - 1][i - 1] = v;
      rec(idx + 1);
    }
  };
  rec(0);
}

}  // namespace

Tableau join(const Tableau& a, const Tableau& b) { return combine(a, b, true, "join"); }
Tableau meet(const Tableau& a, const Tableau& b) { return combine(a, b, false, "meet"); }

void for_each_tableau(const Partition& shape, const std::optional<RTuple>& bounds,
                      const std::function<bool(const Tableau&)>& fn) {
  if (bounds && !(bounds->rset() == shape.r_of_shape()))
    throw std::invalid_argument("for_each_tableau: bounds divider set does not match the shape's column lengths");
  // The bounds also govern the latent inert column, whose row i value is i,
  // so a bound below i anywhere (even on an empty row) empties the set.
  if (bounds)
    for (int i = 1; i <= shape.n(); ++i)
      if (bounds->at1(i) < i) return;
  auto cap = [&](int, int i) { return bounds ? bounds->at1(i) : shape.n(); };
  enumerate(shape, cap, fn);
}

std::vector<Tableau> all_tableaux(const Partition& shape, const std::optional<RTuple>& bounds) {
  std::vector<Tableau> out;
  for_each_tableau(shape, bounds, [&](const Tableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::vector<Tableau> principal_ideal(const Tableau& t) {
  std::vector<Tableau> out;
  auto cap = [&](int j, int i) { return t.at(j, i); };
  enumerate(t.shape(), cap, [&](const Tableau& u) {
    out.push_back(u);
    return true;
  });
  return out;
}

bool same_tableau_set(std::vector<Tableau> a, std::vector<Tableau> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace parcat
