#include "parcat/polynomials.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace parcat {

SparsePoly tableau_sum(const std::vector<Tableau>& ts, int nvars) {
  SparsePoly out(nvars);
  for (const auto& t : ts) out.add_term(content(t), 1);
  return out;
}

SparsePoly row_bound_sum(const Partition& shape, const RTuple& beta) {
  SparsePoly out(shape.n());
  for_each_tableau(shape, beta, [&](const Tableau& t) {
    out.add_term(content(t), 1);
    return true;
  });
  return out;
}

SparsePoly demazure_poly(const Partition& shape, const RPermutation& p) {
  const Tableau key = key_of(shape, p);
  SparsePoly out(shape.n());
  for_each_tableau(shape, std::nullopt, [&](const Tableau& t) {
    if (leq(scan(t), key)) out.add_term(content(t), 1);
    return true;
  });
  return out;
}

Composition pi_dot_lambda(const Partition& shape, const RPermutation& p) {
  if (!(p.rset() == shape.r_of_shape()))
    throw std::invalid_argument("pi_dot_lambda: permutation divider set does not match the shape");
  Composition alpha(shape.n(), 0);
  for (int i = 1; i <= shape.n(); ++i) alpha[p.at1(i) - 1] = shape.part(i);
  return alpha;
}

SparsePoly isobaric_divided_difference(const SparsePoly& f, int i) {
  const int n = f.nvars();
  if (i < 1 || i >= n) throw std::invalid_argument("isobaric_divided_difference: index out of range");
  // Monomial-wise: x_a^p x_b^q M maps to M * sum of x_a^k x_b^{p+q-k},
  // k from min(p,q+1)..max... concretely: over [q, p] when p >= q and the
  // negated range (p, q) when p < q.  This is (x_a f - x_b s_i f)/(x_a-x_b)
  // carried out exactly, with no polynomial division.
  SparsePoly out(n);
  for (const auto& [e, c] : f.terms()) {
    const int p = e[i - 1], q = e[i];
    std::vector<int> g = e;
    if (p >= q) {
      for (int k = q; k <= p; ++k) {
        g[i - 1] = k;
        g[i] = p + q - k;
        out.add_term(g, c);
      }
    } else {
      for (int k = p + 1; k <= q - 1; ++k) {
        g[i - 1] = k;
        g[i] = p + q - k;
        out.add_term(g, checked_mul(c, -1));
      }
    }
  }
  return out;
}

SparsePoly key_poly_dd(const Composition& alpha) {
  const int n = static_cast<int>(alpha.size());
  if (n < 1) throw std::invalid_argument("key_poly_dd: empty composition");
  for (int v : alpha)
    if (v < 0) throw std::invalid_argument("key_poly_dd: parts must be nonnegative");
  int ascent = 0;
  for (int i = 1; i < n; ++i)
    if (alpha[i - 1] < alpha[i]) {
      ascent = i;
      break;
    }
  if (ascent == 0) return SparsePoly::monomial(alpha);
  Composition swapped = alpha;
  std::swap(swapped[ascent - 1], swapped[ascent]);
  return isobaric_divided_difference(key_poly_dd(swapped), ascent);
}

SparsePoly flagged_h(int k, int a, int b, int nvars) {
  if (a < 1 || a > nvars || b < 1 || b > nvars)
    throw std::invalid_argument("flagged_h: variable indices outside [1, n]");
  if (k < 0) return SparsePoly::zero(nvars);
  if (k == 0) return SparsePoly::constant(nvars, 1);
  if (a > b) return SparsePoly::zero(nvars);
  SparsePoly out(nvars);
  // Weakly increasing index words of length k over [a, b].
  std::vector<int> exp(nvars, 0);
  std::function<void(int, int)> rec = [&](int lo, int left) {
    if (left == 0) {
      out.add_term(exp, 1);
      return;
    }
    for (int v = lo; v <= b; ++v) {
      ++exp[v - 1];
      rec(v, left - 1);
      --exp[v - 1];
    }
  };
  rec(a, k);
  return out;
}

SparsePoly gv_determinant(const Partition& shape, const RTuple& beta) {
  if (!(beta.rset() == shape.r_of_shape()))
    throw std::invalid_argument("gv_determinant: bounds divider set does not match the shape");
  if (!classify(beta).upper) throw std::invalid_argument("gv_determinant: bounds must be an upper tuple");
  const int n = shape.n();
  std::vector<std::vector<SparsePoly>> a(n, std::vector<SparsePoly>(n, SparsePoly::zero(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a[i - 1][j - 1] = flagged_h(shape.part(j) - j + i, i, beta.at1(j), n);

  // Minor expansion along rows, memoized on the set of remaining columns.
  std::unordered_map<unsigned, SparsePoly> memo;
  std::function<const SparsePoly&(unsigned)> det = [&](unsigned colmask) -> const SparsePoly& {
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    const int row = n - __builtin_popcount(colmask) + 1;
    SparsePoly d(n);
    if (colmask == 0) {
      d = SparsePoly::constant(n, 1);
    } else {
      int sign = 1;
      for (int j = 1; j <= n; ++j) {
        const unsigned bit = 1u << (j - 1);
        if (!(colmask & bit)) continue;
        if (!a[row - 1][j - 1].is_zero()) {
          SparsePoly term = a[row - 1][j - 1] * det(colmask & ~bit);
          if (sign < 0) d -= term;
          else d += term;
        }
        sign = -sign;
      }
    }
    return memo.emplace(colmask, std::move(d)).first->second;
  };
  return det((1u << n) - 1);
}

bool is_nonpermutable(const Partition& shape, const RTuple& beta) {
  if (!(beta.rset() == shape.r_of_shape()))
    throw std::invalid_argument("is_nonpermutable: bounds divider set does not match the shape");
  if (!classify(beta).upper) throw std::invalid_argument("is_nonpermutable: bounds must be an upper tuple");
  if (!classify(beta).gapless_core) return false;
  return entrywise_leq(beta, platform(beta));
}

}  // namespace parcat
