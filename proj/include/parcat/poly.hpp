#ifndef PARCAT_POLY_HPP
#define PARCAT_POLY_HPP

#include <map>
#include <vector>

namespace parcat {

// Exponent vectors compare descending-lexicographically, so iteration over
// the term map is already the canonical serialization order.
struct ExpDescLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const { return a > b; }
};

// Exact integer multivariate polynomial in x_1..x_n.  Coefficients are
// 64-bit with checked arithmetic; overflow is a hard error, never a wrap.
class SparsePoly {
 public:
  using TermMap = std::map<std::vector<int>, long long, ExpDescLex>;

  explicit SparsePoly(int nvars);
  static SparsePoly zero(int nvars) { return SparsePoly(nvars); }
  static SparsePoly constant(int nvars, long long c);
  static SparsePoly monomial(std::vector<int> exp, long long c = 1);
  // The single variable x_i (1-based).
  static SparsePoly var(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  long long coeff(const std::vector<int>& exp) const;
  long long coeff_sum() const;
  long long term_count() const { return static_cast<long long>(terms_.size()); }

  void add_term(const std::vector<int>& exp, long long c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

  // The polynomial with x_i and x_j exchanged.
  SparsePoly swap_vars(int i, int j) const;

  bool operator==(const SparsePoly& o) const = default;
  // Container ordering only; compares the canonical term maps.
  bool operator<(const SparsePoly& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    return terms_ < o.terms_;
  }

 private:
  int nvars_;
  TermMap terms_;
};

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace parcat

#endif
