#ifndef GENTLE_LINALG_HPP
#define GENTLE_LINALG_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "gentle/errors.hpp"

namespace gentle {

/// Exact rational scalar. All matrices in this project come from incidence
/// data with entries in {0, +-1}, so magnitudes stay tiny.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw error(errc::bad_argument, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(Rat a, Rat b) {
    if (b.num == 0) throw error(errc::bad_argument, "division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  Rat operator-() const { return Rat(-num, den); }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
};

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major; Mat[r][c]

Mat zero_matrix(int rows, int cols);
Mat identity_matrix(int n);
Mat mat_mul(const Mat& a, const Mat& b);
int mat_rank(Mat a);

/// Basis of {x in k^cols : a x = 0}. `cols` must be passed explicitly so the
/// no-constraints case (a empty) still knows the ambient dimension.
std::vector<Vec> kernel_basis(const Mat& a, int cols);

/// Solve a x = b for each column of b; throws if inconsistent. Returns an
/// a_cols x b_cols matrix. Dimensions are explicit because zero-row matrices
/// drop their column counts.
Mat solve_columns(const Mat& a, int a_cols, const Mat& b, int b_cols);

/// Column space with incremental insertion; supports reduction modulo the
/// space and extraction of quotient coordinates (used for cokernels).
class ColumnSpace {
public:
  explicit ColumnSpace(int ambient_dim) : ambient_(ambient_dim) {}

  void add(Vec v);               // insert, keeping echelon form
  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient() const { return ambient_; }
  Vec reduce(Vec v) const;       // eliminate pivot coordinates
  bool contains(const Vec& v) const;

  /// Row indices without a pivot; these index a basis of the quotient.
  std::vector<int> free_rows() const;
  /// Quotient coordinates of v: reduce, then read off free rows.
  Vec quotient_coords(const Vec& v) const;

private:
  int ambient_;
  std::vector<Vec> basis_;      // echelon: basis_[k] has leading row pivot_[k]
  std::vector<int> pivot_;
};

} // namespace gentle

#endif
