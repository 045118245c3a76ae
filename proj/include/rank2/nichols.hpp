#pragma once

#include <map>
#include <string>
#include <vector>

#include "rank2/cyclotomic.hpp"
#include "rank2/ydmod.hpp"

namespace rank2 {

struct NicholsOptions {
  /// Largest admissible dim(V)^n · dim(W).
  long tensor_cap = 4096;
};

/// An operator on a tensor space.
struct OperatorChain {
  BraidedTensor ambient;
  SparseMatrix matrix;
};

/// Operators on V^{⊗n} ⊗ W with legs 1..n+1, W last. Braidings between
/// adjacent legs are cached per leg-module pattern.
class BraidedPair {
 public:
  BraidedPair(YDModule v, YDModule w, NicholsOptions opts = {});

  const YDModule& v() const { return v_; }
  const YDModule& w() const { return w_; }
  const NicholsOptions& options() const { return opts_; }

  /// V^{⊗n} ⊗ W.
  BraidedTensor space(int n) const;
  /// Quantum symmetrizer on V^{⊗n}: S_1 = id,
  /// S_{n+1} = (S_n ⊗ id)(id + c_n + c_n c_{n-1} + ⋯ + c_n ⋯ c_1).
  const SparseMatrix& symmetrizer(int n);
  /// T_n = A_1 A_2 ⋯ A_n on V^{⊗n} ⊗ W, A_k = id − c²_{n,n+1} c_{n-1,n} ⋯ c_{k,k+1}.
  const SparseMatrix& t_operator(int n);
  /// φ_m = id − c_{X,V} c_{V,X} + (id ⊗ φ_{m-1}) c_{1,2} on V ⊗ X, X = V^{⊗(m-1)} ⊗ W; φ_0 = 0.
  const SparseMatrix& phi(int m);
  /// (S_n ⊗ id) T_n.
  SparseMatrix adjoint_operator(int n);

  /// Both sides of (S_{n+1}⊗id)T_{n+1} = φ_{n+1}(id⊗S_n⊗id)(id⊗T_n).
  std::pair<SparseMatrix, SparseMatrix> factorization_sides(int n);
  bool factorization_holds(int n);

 private:
  // Leg pattern: true for V. The braid at leg i maps pattern p to p with i, i+1 swapped.
  using Pattern = std::vector<bool>;
  const SparseMatrix& braid(const Pattern& p, int i);
  // Applies braids at the listed legs in order, starting from pattern p.
  SparseMatrix braid_word(Pattern p, const std::vector<int>& legs);
  BraidedTensor tensor(const Pattern& p) const;
  void check_cap(int n) const;

  YDModule v_, w_;
  NicholsOptions opts_;
  std::map<std::pair<Pattern, int>, SparseMatrix> braids_;
  std::map<int, SparseMatrix> sym_, t_, phi_;
};

/// Rank report of (S_m ⊗ id) T_m. `per_tuple` is the rank of the image of each
/// homogeneous component V_{r_1} ⊗ ⋯ ⊗ V_{r_m} ⊗ W_s; `per_block` the rank on
/// each total-degree block, which sum to `rank`.
struct AdjointReport {
  int m = 0;
  int dim = 0;
  int rank = 0;
  std::map<std::vector<GElem>, int> per_tuple;
  std::map<GElem, int> per_block;
};

AdjointReport adjoint_power_report(BraidedPair& p, int m);
int adjoint_power_dim(BraidedPair& p, int m);
int adjoint_power_dim(const YDModule& v, const YDModule& w, int m, NicholsOptions opts = {});
/// dim X_m with X_0 = W and X_m = φ_m(V ⊗ X_{m-1}).
int x_space_dim(BraidedPair& p, int m);
int x_space_dim(const YDModule& v, const YDModule& w, int m, NicholsOptions opts = {});

/// Rank of an operator that preserves the total degree, block by block.
int block_rank(const BraidedTensor& space, const SparseMatrix& op);

}  // namespace rank2
