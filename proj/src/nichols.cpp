#include "rank2/nichols.hpp"

#include <algorithm>

#include "rank2/errors.hpp"

namespace rank2 {

namespace {

// id_V ⊗ B for a possibly non-square B.
SparseMatrix identity_tensor(int dv, const SparseMatrix& b) {
  SparseMatrix out(dv * b.rows(), dv * b.cols());
  for (int a = 0; a < dv; ++a)
    for (int c = 0; c < b.cols(); ++c)
      for (const auto& [r, x] : b.column(c)) out.add(a * b.rows() + r, a * b.cols() + c, x);
  return out;
}

void require_graded(const BraidedTensor& space, const SparseMatrix& op) {
  for (int c = 0; c < op.cols(); ++c) {
    const GElem d = space.degree(c);
    for (const auto& [r, x] : op.column(c))
      if (space.degree(r) != d) throw InvariantViolation("operator does not preserve the total degree");
  }
}

}  // namespace

BraidedPair::BraidedPair(YDModule v, YDModule w, NicholsOptions opts)
    : v_(std::move(v)), w_(std::move(w)), opts_(opts) {
  if (v_.group_ptr() != w_.group_ptr() && v_.group().table() != w_.group().table())
    throw ArgumentError("BraidedPair: modules over different groups");
}

void BraidedPair::check_cap(int n) const {
  if (n < 0) throw ArgumentError("tensor power must be nonnegative");
  long d = w_.dim();
  for (int k = 0; k < n; ++k) {
    d *= v_.dim();
    if (d > opts_.tensor_cap)
      throw ResourceError("tensor dimension exceeds the cap of " + std::to_string(opts_.tensor_cap));
  }
}

BraidedTensor BraidedPair::tensor(const Pattern& p) const {
  std::vector<YDModule> f;
  for (bool isv : p) f.push_back(isv ? v_ : w_);
  return BraidedTensor(std::move(f));
}

BraidedTensor BraidedPair::space(int n) const {
  check_cap(n);
  Pattern p(n, true);
  p.push_back(false);
  return tensor(p);
}

const SparseMatrix& BraidedPair::braid(const Pattern& p, int i) {
  auto key = std::make_pair(p, i);
  auto it = braids_.find(key);
  if (it == braids_.end()) it = braids_.emplace(std::move(key), tensor(p).braid_at(i)).first;
  return it->second;
}

SparseMatrix BraidedPair::braid_word(Pattern p, const std::vector<int>& legs) {
  SparseMatrix m;
  bool first = true;
  for (int i : legs) {
    const SparseMatrix& c = braid(p, i);
    m = first ? c : c * m;
    first = false;
    std::swap(p[i - 1], p[i]);
  }
  if (first) {
    long d = 1;
    for (bool isv : p) d *= isv ? v_.dim() : w_.dim();
    return SparseMatrix::identity(static_cast<int>(d));
  }
  return m;
}

const SparseMatrix& BraidedPair::symmetrizer(int n) {
  if (n < 1) throw ArgumentError("symmetrizer: n must be positive");
  if (auto it = sym_.find(n); it != sym_.end()) return it->second;
  check_cap(n);
  SparseMatrix s;
  if (n == 1) {
    s = SparseMatrix::identity(v_.dim());
  } else {
    // S_n = (S_{n-1} ⊗ id)(id + c_{n-1} + c_{n-1}c_{n-2} + ⋯ + c_{n-1}⋯c_1).
    const int k = n - 1;
    const Pattern p(n, true);
    SparseMatrix sum = braid_word(p, {});
    for (int low = k; low >= 1; --low) {
      std::vector<int> legs;
      for (int i = low; i <= k; ++i) legs.push_back(i);
      sum = sum + braid_word(p, legs);
    }
    s = BraidedTensor::embed(symmetrizer(k), 1, v_.dim()) * sum;
  }
  return sym_.emplace(n, std::move(s)).first->second;
}

const SparseMatrix& BraidedPair::t_operator(int n) {
  if (n < 1) throw ArgumentError("t_operator: n must be positive");
  if (auto it = t_.find(n); it != t_.end()) return it->second;
  check_cap(n);
  Pattern p(n, true);
  p.push_back(false);
  const SparseMatrix id = braid_word(p, {});
  SparseMatrix t = id;
  for (int k = n; k >= 1; --k) {
    std::vector<int> legs;
    for (int i = k; i < n; ++i) legs.push_back(i);
    legs.push_back(n);
    legs.push_back(n);
    t = (id - braid_word(p, legs)) * t;
  }
  return t_.emplace(n, std::move(t)).first->second;
}

const SparseMatrix& BraidedPair::phi(int m) {
  if (m < 1) throw ArgumentError("phi: m must be positive");
  if (auto it = phi_.find(m); it != phi_.end()) return it->second;
  check_cap(m);
  Pattern p(m, true);
  p.push_back(false);
  // c_{V,X} moves leg 1 to the end, c_{X,V} moves it back.
  std::vector<int> legs;
  for (int i = 1; i <= m; ++i) legs.push_back(i);
  for (int i = m; i >= 1; --i) legs.push_back(i);
  SparseMatrix f = braid_word(p, {}) - braid_word(p, legs);
  if (m >= 2) f = f + BraidedTensor::embed(phi(m - 1), v_.dim(), 1) * braid(p, 1);
  return phi_.emplace(m, std::move(f)).first->second;
}

SparseMatrix BraidedPair::adjoint_operator(int n) {
  return BraidedTensor::embed(symmetrizer(n), 1, w_.dim()) * t_operator(n);
}

std::pair<SparseMatrix, SparseMatrix> BraidedPair::factorization_sides(int n) {
  if (n < 1) throw ArgumentError("factorization: n must be positive");
  SparseMatrix left = adjoint_operator(n + 1);
  SparseMatrix right = phi(n + 1) * BraidedTensor::embed(symmetrizer(n), v_.dim(), w_.dim()) *
                       BraidedTensor::embed(t_operator(n), v_.dim(), 1);
  return {std::move(left), std::move(right)};
}

bool BraidedPair::factorization_holds(int n) {
  auto [l, r] = factorization_sides(n);
  return l == r;
}

int block_rank(const BraidedTensor& space, const SparseMatrix& op) {
  require_graded(space, op);
  int total = 0;
  for (const auto& [d, idx] : space.degree_blocks()) total += rank(op.submatrix(idx, idx));
  return total;
}

AdjointReport adjoint_power_report(BraidedPair& p, int m) {
  if (m < 1) throw ArgumentError("adjoint power: m must be positive");
  const BraidedTensor space = p.space(m);
  const SparseMatrix op = p.adjoint_operator(m);
  require_graded(space, op);
  AdjointReport rep;
  rep.m = m;
  rep.dim = space.dim();
  const auto blocks = space.degree_blocks();
  for (const auto& [d, idx] : blocks) {
    const int r = rank(op.submatrix(idx, idx));
    rep.per_block[d] = r;
    rep.rank += r;
    // Sub-blocks by the degree tuple of the source vector.
    std::map<std::vector<GElem>, std::vector<int>> tuples;
    for (int x : idx) {
      const auto t = space.tuple(x);
      std::vector<GElem> deg;
      for (int leg = 1; leg <= space.legs(); ++leg) deg.push_back(space.factor(leg).degree(t[leg - 1]));
      tuples[deg].push_back(x);
    }
    for (const auto& [deg, cols] : tuples) rep.per_tuple[deg] = rank(op.submatrix(idx, cols));
  }
  return rep;
}

int adjoint_power_dim(BraidedPair& p, int m) { return block_rank(p.space(m), p.adjoint_operator(m)); }

int adjoint_power_dim(const YDModule& v, const YDModule& w, int m, NicholsOptions opts) {
  BraidedPair p(v, w, opts);
  return adjoint_power_dim(p, m);
}

int x_space_dim(BraidedPair& p, int m) {
  if (m < 0) throw ArgumentError("x_space_dim: m must be nonnegative");
  // Columns of `basis` are homogeneous vectors spanning X_k.
  SparseMatrix basis = SparseMatrix::identity(p.w().dim());
  for (int k = 1; k <= m; ++k) {
    const BraidedTensor space = p.space(k);
    const SparseMatrix y = p.phi(k) * identity_tensor(p.v().dim(), basis);
    std::map<GElem, std::vector<int>> cols_by_degree;
    for (int c = 0; c < y.cols(); ++c) {
      const auto& col = y.column(c);
      if (col.empty()) continue;
      const GElem d = space.degree(col.front().first);
      for (const auto& [r, x] : col)
        if (space.degree(r) != d) throw InvariantViolation("x_space_dim: inhomogeneous image vector");
      cols_by_degree[d].push_back(c);
    }
    const auto blocks = space.degree_blocks();
    int ncols = 0;
    std::vector<std::vector<std::pair<int, CycNum>>> columns;
    for (const auto& [d, cols] : cols_by_degree) {
      const auto& rows = blocks.at(d);
      const CycMatrix block = y.submatrix(rows, cols).to_dense();
      const CycMatrix b = column_space_basis(block);
      for (int c = 0; c < b.cols(); ++c) {
        std::vector<std::pair<int, CycNum>> col;
        for (int r = 0; r < b.rows(); ++r)
          if (!b(r, c).is_zero()) col.emplace_back(rows[r], b(r, c));
        columns.push_back(std::move(col));
        ++ncols;
      }
    }
    basis = SparseMatrix(space.dim(), ncols);
    for (int c = 0; c < ncols; ++c)
      for (const auto& [r, x] : columns[c]) basis.add(r, c, x);
  }
  return basis.cols();
}

int x_space_dim(const YDModule& v, const YDModule& w, int m, NicholsOptions opts) {
  BraidedPair p(v, w, opts);
  return x_space_dim(p, m);
}

}  // namespace rank2
