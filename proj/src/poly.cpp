#include "parcat/poly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace parcat {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow in addition");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow in multiplication");
  return r;
}

SparsePoly::SparsePoly(int nvars) : nvars_(nvars) {
  if (nvars_ < 1) throw std::invalid_argument("SparsePoly: needs at least one variable");
}

SparsePoly SparsePoly::constant(int nvars, long long c) {
  SparsePoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::monomial(std::vector<int> exp, long long c) {
  SparsePoly p(static_cast<int>(exp.size()));
  p.add_term(exp, c);
  return p;
}

SparsePoly SparsePoly::var(int nvars, int i) {
  std::vector<int> e(nvars, 0);
  e[i - 1] = 1;
  return monomial(std::move(e));
}

long long SparsePoly::coeff(const std::vector<int>& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

long long SparsePoly::coeff_sum() const {
  long long s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

void SparsePoly::add_term(const std::vector<int>& exp, long long c) {
  if (c == 0) return;
  if (static_cast<int>(exp.size()) != nvars_)
    throw std::invalid_argument("SparsePoly: exponent vector has wrong length");
  for (int e : exp)
    if (e < 0) throw std::invalid_argument("SparsePoly: negative exponent");
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("SparsePoly: variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("SparsePoly: variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("SparsePoly: variable counts differ");
  SparsePoly out(a.nvars_);
  std::vector<int> e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, checked_mul(ca, cb));
    }
  return out;
}

SparsePoly SparsePoly::swap_vars(int i, int j) const {
  SparsePoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> f = e;
    std::swap(f[i - 1], f[j - 1]);
    out.add_term(f, c);
  }
  return out;
}

}  // namespace parcat
