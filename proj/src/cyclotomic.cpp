#include "rank2/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "rank2/errors.hpp"

namespace rank2 {

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by a nonzero b in Q[x].
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  const mpq_class lead_inv = 1 / b.back();
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const std::size_t k = shift + b.size() - 1;
    if (a[k] == 0) continue;
    const mpq_class f = a[k] * lead_inv;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
  }
  trim(a);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Φ_n = (x^n − 1) / ∏_{d | n, d < n} Φ_d by exact integer division.
const std::vector<long>& cyclotomic_locked(int n, std::map<int, std::vector<long>>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long> phid = cyclotomic_locked(d, cache);
    const std::size_t dd = phid.size() - 1;
    std::vector<long> q(num.size() - dd, 0);
    for (std::size_t shift = q.size(); shift-- > 0;) {
      const long f = num[shift + dd];
      q[shift] = f;
      for (std::size_t i = 0; i <= dd; ++i) num[shift + i] -= f * phid[i];
    }
    num = std::move(q);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw ArgumentError("cyclotomic polynomial needs n >= 1");
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  std::lock_guard lock(mu);
  return cyclotomic_locked(n, cache);
}

int euler_phi(int n) {
  if (n < 1) throw ArgumentError("euler_phi needs n >= 1");
  int r = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

// ---------------------------------------------------------------- CycNum

CycNum::CycNum(long v) : n_(1), c_{mpq_class(v)} {}
CycNum::CycNum(const mpq_class& v) : n_(1), c_{v} { c_[0].canonicalize(); }

CycNum::CycNum(int n, std::vector<mpq_class> coeffs) : n_(n), c_(std::move(coeffs)) {
  if (n < 1) throw ArgumentError("CycNum: conductor must be positive");
  for (auto& x : c_) x.canonicalize();
  reduce();
}

CycNum CycNum::zeta(int n, long k) {
  if (n < 1) throw ArgumentError("CycNum::zeta: conductor must be positive");
  long e = ((k % n) + n) % n;
  // Written over the order of the root, so ζ_6^2 lives in Q(ζ_3) and ±1 in Q.
  const long d = std::gcd(e, static_cast<long>(n));
  n = static_cast<int>(n / d);
  e /= d;
  if (n <= 2) return CycNum(e == 0 ? 1 : -1);
  std::vector<mpq_class> c(e + 1, 0);
  c[e] = 1;
  return CycNum(n, std::move(c));
}

void CycNum::reduce() {
  const auto& phi = cyclotomic_polynomial(n_);
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = c_.size(); k-- > d;) {
    if (c_[k] == 0) continue;
    const mpq_class f = c_[k];
    for (std::size_t i = 0; i < d; ++i)
      if (phi[i] != 0) c_[k - d + i] -= f * phi[i];
  }
  c_.resize(d, 0);
}

bool CycNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x == 0; });
}

bool CycNum::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& x) { return x == 0; });
}

void CycNum::lift_to(int m) {
  if (m == n_) return;
  if (m % n_ != 0) throw ArgumentError("CycNum: lift to a non-multiple conductor");
  const int step = m / n_;
  std::vector<mpq_class> c((c_.empty() ? 0 : (c_.size() - 1) * step) + 1, 0);
  for (std::size_t k = 0; k < c_.size(); ++k) c[k * step] = c_[k];
  n_ = m;
  c_ = std::move(c);
  reduce();
}

CycNum CycNum::lifted(int m) const {
  CycNum r = *this;
  r.lift_to(m);
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.n_ == n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  const int m = std::lcm(n_, o.n_);
  lift_to(m);
  const CycNum b = o.lifted(m);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.n_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (n_ == 1) {
    const mpq_class s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  const int m = std::lcm(n_, o.n_);
  lift_to(m);
  const CycNum b = o.n_ == m ? o : o.lifted(m);
  c_ = poly_mul(c_, b.c_);
  if (c_.empty()) c_.assign(1, 0);
  reduce();
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inv(); }

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  const int m = std::lcm(a.n_, b.n_);
  return a.lifted(m).c_ == b.lifted(m).c_;
}

CycNum CycNum::inv() const {
  if (is_zero()) throw ArgumentError("CycNum: inversion of zero");
  if (n_ == 1 || c_.size() == 1) {
    if (std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& x) { return x == 0; })) {
      CycNum r = *this;
      r.c_[0] = 1 / c_[0];
      return r;
    }
  }
  // Extended Euclid: s·a ≡ g (mod Φ_N) with g a nonzero constant.
  const auto& phi_int = cyclotomic_polynomial(n_);
  Poly r0(phi_int.begin(), phi_int.end()), r1 = c_;
  trim(r1);
  Poly s0{}, s1{1};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw InvariantViolation("CycNum: non-invertible residue modulo Φ_N");
  for (auto& x : s1) x /= r1[0];
  return CycNum(n_, std::move(s1));
}

CycNum inv(const CycNum& a) { return a.inv(); }

CycNum CycNum::pow(long e) const {
  CycNum base = e < 0 ? inv() : *this;
  if (e < 0) e = -e;
  CycNum r = CycNum(1).lifted(n_);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const double t = 2 * std::numbers::pi * static_cast<double>(k) / n_;
    z += c_[k].get_d() * std::complex<double>(std::cos(t), std::sin(t));
  }
  return z;
}

std::string CycNum::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    mpq_class a = c_[k];
    const bool neg = a < 0;
    if (neg) a = -a;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    const std::string mon = k == 0 ? "" : "z" + std::to_string(n_) + (k == 1 ? "" : "^" + std::to_string(k));
    if (mon.empty())
      s += a.get_str();
    else if (a == 1)
      s += mon;
    else
      s += a.get_str() + "*" + mon;
  }
  return s.empty() ? "0" : s;
}

bool embedding_agrees(const CycNum& exact, std::complex<double> approx, double tol) {
  return std::abs(exact.to_complex() - approx) <= tol;
}

// ---------------------------------------------------------------- CycMatrix

CycMatrix CycMatrix::identity(int n) {
  CycMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

CycMatrix CycMatrix::from_rows(const std::vector<std::vector<CycNum>>& rows) {
  if (rows.empty()) return {};
  CycMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols()) throw ArgumentError("CycMatrix: ragged rows");
    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

int CycMatrix::conductor() const {
  int n = 1;
  for (const auto& x : a_) n = std::lcm(n, x.conductor());
  return n;
}

void CycMatrix::unify() {
  const int n = conductor();
  for (auto& x : a_)
    if (x.conductor() != n) x = x.lifted(n);
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols_ != b.rows_) throw ArgumentError("CycMatrix: dimension mismatch in product");
  CycMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const CycNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ArgumentError("CycMatrix: dimension mismatch in sum");
  CycMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ArgumentError("CycMatrix: dimension mismatch in difference");
  CycMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<std::vector<std::complex<double>>> CycMatrix::to_complex() const {
  std::vector<std::vector<std::complex<double>>> out(rows_, std::vector<std::complex<double>>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).to_complex();
  return out;
}

std::string CycMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << '[';
    for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
    os << "]\n";
  }
  return os.str();
}

namespace {

// Size heuristic for pivot choice: fewer nonzero coefficients first.
std::size_t weight(const CycNum& x) {
  std::size_t w = 0;
  for (const auto& c : x.coeffs())
    if (c != 0) w += 1 + mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
  return w;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(CycMatrix& m) {
  m.unify();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero() && (p < 0 || weight(m(i, c)) < weight(m(p, c)))) p = i;
    if (p < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    const CycNum s = m(r, c).inv();
    for (int j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= s;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const CycNum f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(CycMatrix m) {
  m.unify();
  // Bareiss: after step k every entry is a (k+1)-minor, so the division by
  // the previous pivot is exact in Z[ζ_N]; the inverse is cached per step.
  int r = 0;
  CycNum prev_inv = 1;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero() && (p < 0 || weight(m(i, c)) < weight(m(p, c)))) p = i;
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    const CycNum piv = m(r, c);
    for (int i = r + 1; i < m.rows(); ++i) {
      const CycNum f = m(i, c);
      for (int j = c + 1; j < m.cols(); ++j) {
        CycNum v = piv * m(i, j);
        if (!f.is_zero() && !m(r, j).is_zero()) v -= f * m(r, j);
        if (!v.is_zero() && !prev_inv.is_one()) v *= prev_inv;
        m(i, j) = std::move(v);
      }
      m(i, c) = 0;
    }
    prev_inv = piv.inv();
    ++r;
  }
  return r;
}

CycMatrix kernel_basis(const CycMatrix& m) {
  CycMatrix e = m;
  const auto pivots = rref(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  const int nfree = m.cols() - static_cast<int>(pivots.size());
  CycMatrix k(m.cols(), nfree);
  int col = 0;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    k(f, col) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], col) = -e(static_cast<int>(r), f);
    ++col;
  }
  return k;
}

CycMatrix column_space_basis(const CycMatrix& m) {
  CycMatrix e = m;
  const auto pivots = rref(e);
  CycMatrix b(m.rows(), static_cast<int>(pivots.size()));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (int r = 0; r < m.rows(); ++r) b(r, static_cast<int>(k)) = m(r, pivots[k]);
  return b;
}

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.cols_data_[i].emplace_back(i, CycNum(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const CycMatrix& d) {
  SparseMatrix m(d.rows(), d.cols());
  for (int c = 0; c < d.cols(); ++c)
    for (int r = 0; r < d.rows(); ++r)
      if (!d(r, c).is_zero()) m.cols_data_[c].emplace_back(r, d(r, c));
  return m;
}

void SparseMatrix::add(int r, int c, const CycNum& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ArgumentError("SparseMatrix: index out of range");
  if (v.is_zero()) return;
  auto& col = cols_data_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, int row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second += v;
    if (it->second.is_zero()) col.erase(it);
  } else {
    col.emplace(it, r, v);
  }
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_data_) n += c.size();
  return n;
}

CycMatrix SparseMatrix::to_dense() const {
  CycMatrix d(rows_, cols_);
  for (int c = 0; c < cols_; ++c)
    for (const auto& [r, v] : cols_data_[c]) d(r, c) = v;
  return d;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int c = 0; c < cols_; ++c)
    for (const auto& [r, v] : cols_data_[c]) t.cols_data_[r].emplace_back(c, v);
  return t;
}

SparseMatrix SparseMatrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
  std::vector<int> where(rows_, -1);
  for (std::size_t k = 0; k < rows.size(); ++k) where[rows[k]] = static_cast<int>(k);
  SparseMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    auto& out = s.cols_data_[k];
    for (const auto& [r, v] : cols_data_[cols[k]])
      if (where[r] >= 0) out.emplace_back(where[r], v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return s;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw ArgumentError("SparseMatrix: dimension mismatch in product");
  SparseMatrix r(a.rows_, b.cols_);
  std::vector<CycNum> acc(a.rows_);
  std::vector<char> touched(a.rows_, 0);
  std::vector<int> rows;
  for (int j = 0; j < b.cols_; ++j) {
    rows.clear();
    for (const auto& [k, bv] : b.cols_data_[j])
      for (const auto& [i, av] : a.cols_data_[k]) {
        if (!touched[i]) {
          touched[i] = 1;
          rows.push_back(i);
          acc[i] = av * bv;
        } else {
          acc[i] += av * bv;
        }
      }
    std::sort(rows.begin(), rows.end());
    auto& out = r.cols_data_[j];
    for (int i : rows) {
      if (!acc[i].is_zero()) out.emplace_back(i, std::move(acc[i]));
      touched[i] = 0;
    }
  }
  return r;
}

SparseMatrix SparseMatrix::combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ArgumentError("SparseMatrix: dimension mismatch in sum");
  SparseMatrix r(a.rows_, a.cols_);
  for (int c = 0; c < a.cols_; ++c) {
    const auto& x = a.cols_data_[c];
    const auto& y = b.cols_data_[c];
    auto& out = r.cols_data_[c];
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        out.emplace_back(y[j].first, subtract ? -y[j].second : y[j].second);
        ++j;
      } else {
        CycNum v = subtract ? x[i].second - y[j].second : x[i].second + y[j].second;
        if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
  }
  return r;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return SparseMatrix::combine(a, b, false); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return SparseMatrix::combine(a, b, true); }

SparseMatrix SparseMatrix::scaled(const CycNum& s) const {
  SparseMatrix r(rows_, cols_);
  if (s.is_zero()) return r;
  for (int c = 0; c < cols_; ++c)
    for (const auto& [row, v] : cols_data_[c]) r.cols_data_[c].emplace_back(row, v * s);
  return r;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (int c = 0; c < a.cols_; ++c) {
    const auto& x = a.cols_data_[c];
    const auto& y = b.cols_data_[c];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].first != y[k].first || !(x[k].second == y[k].second)) return false;
  }
  return true;
}

int rank(const SparseMatrix& m) {
  // Row-wise elimination over the field on sparse columns-as-rows of the
  // transpose; pivots chosen by shortest row and lightest entry.
  using Row = std::vector<std::pair<int, CycNum>>;
  const SparseMatrix t = m.transpose();
  std::vector<Row> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < t.cols(); ++r)
    if (!t.column(r).empty()) rows.push_back(t.column(r));
  std::vector<Row> pivot_rows(m.cols());
  std::vector<bool> has_pivot(m.cols(), false);
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.size() < b.size(); });
  int rk = 0;
  for (Row& row : rows) {
    // Reduce the row against existing pivots in increasing column order.
    Row cur = std::move(row);
    while (!cur.empty()) {
      const int lead = cur.front().first;
      if (!has_pivot[lead]) break;
      const CycNum f = cur.front().second;
      const Row& p = pivot_rows[lead];  // normalized: p.front() == (lead, 1)
      Row next;
      next.reserve(cur.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < cur.size() || j < p.size()) {
        if (j == p.size() || (i < cur.size() && cur[i].first < p[j].first)) {
          next.push_back(std::move(cur[i++]));
        } else if (i == cur.size() || p[j].first < cur[i].first) {
          next.emplace_back(p[j].first, -(f * p[j].second));
          ++j;
        } else {
          CycNum v = cur[i].second - f * p[j].second;
          if (!v.is_zero()) next.emplace_back(cur[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      cur = std::move(next);
    }
    if (cur.empty()) continue;
    const CycNum s = cur.front().second.inv();
    for (auto& [c, v] : cur) v *= s;
    const int lead = cur.front().first;
    has_pivot[lead] = true;
    pivot_rows[lead] = std::move(cur);
    ++rk;
  }
  return rk;
}

}  // namespace rank2
