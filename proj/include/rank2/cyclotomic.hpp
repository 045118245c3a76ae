#pragma once

#include <complex>
#include <gmpxx.h>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rank2 {

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);
int euler_phi(int n);

/// An element of Q(ζ_N) as a rational polynomial in ζ_N of degree < φ(N),
/// reduced modulo Φ_N. Operands of different conductors are lifted to the lcm.
class CycNum {
 public:
  CycNum() : CycNum(0) {}
  CycNum(long v);  // NOLINT(google-explicit-constructor): rationals embed
  CycNum(const mpq_class& v);  // NOLINT(google-explicit-constructor)
  /// Reduces an arbitrary coefficient list (any length) modulo Φ_N.
  CycNum(int n, std::vector<mpq_class> coeffs);

  /// ζ_N^k.
  static CycNum zeta(int n, long k = 1);

  int conductor() const { return n_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  /// The same number written over conductor m; m must be a multiple of N.
  CycNum lifted(int m) const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  CycNum operator-() const;
  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Throws ArgumentError on zero.
  CycNum inv() const;
  CycNum pow(long e) const;
  std::complex<double> to_complex() const;
  /// Polynomial in z<N>, e.g. "1 - 2*z5^3"; rationals print plainly.
  std::string to_string() const;

 private:
  void reduce();
  void lift_to(int m);
  int n_ = 1;
  std::vector<mpq_class> c_;  // length φ(N)
};

CycNum inv(const CycNum& a);

/// Dense matrix, row-major.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static CycMatrix identity(int n);
  static CycMatrix from_rows(const std::vector<std::vector<CycNum>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  CycNum& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const CycNum& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  /// lcm of entry conductors.
  int conductor() const;
  /// Lifts every entry to the common conductor.
  void unify();

  CycMatrix transpose() const;
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);
  std::vector<std::vector<std::complex<double>>> to_complex() const;
  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<CycNum> a_;
};

/// Fraction-free elimination.
int rank(CycMatrix m);
/// Columns form a basis of {v : M v = 0}; cols × (cols − rank).
CycMatrix kernel_basis(const CycMatrix& m);
/// Columns of m that are a basis of its column space, as a new matrix.
CycMatrix column_space_basis(const CycMatrix& m);

/// Column-compressed sparse matrix; columns hold (row, value) sorted by row.
class SparseMatrix {
 public:
  using Column = std::vector<std::pair<int, CycNum>>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), cols_data_(cols) {}
  static SparseMatrix identity(int n);
  static SparseMatrix from_dense(const CycMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Column& column(int c) const { return cols_data_[c]; }
  /// Adds v at (r, c).
  void add(int r, int c, const CycNum& v);
  std::size_t nnz() const;

  CycMatrix to_dense() const;
  SparseMatrix transpose() const;
  /// Restriction to the given rows and columns, in the given order.
  SparseMatrix submatrix(std::span<const int> rows, std::span<const int> cols) const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  SparseMatrix scaled(const CycNum& s) const;
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract);
  int rows_ = 0, cols_ = 0;
  std::vector<Column> cols_data_;
};

int rank(const SparseMatrix& m);

/// Every entry of `exact` agrees with `approx` within tol.
bool embedding_agrees(const CycNum& exact, std::complex<double> approx, double tol = 1e-9);

}  // namespace rank2
