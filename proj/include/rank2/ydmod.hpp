#pragma once

#include <array>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "rank2/cyclotomic.hpp"
#include "rank2/fingroup.hpp"
#include "rank2/quandle.hpp"

namespace rank2 {

/// A Yetter–Drinfeld module over a finite group: a homogeneous basis with
/// degrees and a linear action compatible with conjugation of degrees.
/// Immutable; copies share storage.
class YDModule {
 public:
  /// `generator_action[k]` is the matrix of the k-th group generator. Throws
  /// ArgumentError unless the action extends to a representation of the group
  /// and g·V_h ⊆ V_{ghg^{-1}}.
  YDModule(std::shared_ptr<const FinGroup> group, std::vector<GElem> degrees,
           std::vector<SparseMatrix> generator_action);

  const FinGroup& group() const { return *d_->group; }
  const std::shared_ptr<const FinGroup>& group_ptr() const { return d_->group; }
  int dim() const { return static_cast<int>(d_->degrees.size()); }
  GElem degree(int basis_index) const { return d_->degrees[basis_index]; }
  const std::vector<GElem>& degrees() const { return d_->degrees; }
  const std::vector<SparseMatrix>& generator_action() const { return d_->gen_action; }
  /// Matrix of the group element g.
  const SparseMatrix& action(GElem g) const { return d_->elem_action[g]; }

 private:
  struct Data {
    std::shared_ptr<const FinGroup> group;
    std::vector<GElem> degrees;
    std::vector<SparseMatrix> gen_action;
    std::vector<SparseMatrix> elem_action;
  };
  std::shared_ptr<const Data> d_;
};

/// Generators of the centralizer of x used to specify characters, in a fixed
/// order (greedy small generating set).
std::vector<GElem> centralizer_generators(const FinGroup& g, GElem x);

/// Extends values on `gens` to a homomorphism on generated_subgroup(gens);
/// indexed by group element, empty entries outside the subgroup. Throws
/// ArgumentError when the values are not multiplicative.
std::vector<CycNum> extend_character(const FinGroup& g, std::span<const GElem> gens, std::span<const CycNum> values);

/// All characters of the centralizer of x with values in μ_N, N its exponent,
/// as value lists on centralizer_generators(g, x). Also returns the exponent
/// assignments (value k means ζ_N^k).
struct CharacterChoice {
  int root_order = 1;
  std::vector<long> powers;
  std::vector<CycNum> values;
};
std::vector<CharacterChoice> enumerate_characters(const FinGroup& g, GElem x);

/// Module induced from the character χ of C_G(class_rep) given by its values
/// on centralizer_generators. Basis v_k, k over the class sorted by element
/// index; t_k the least element with t_k r t_k^{-1} = class[k];
/// g·v_k = χ(t_l^{-1} g t_k) v_l.
YDModule induced_module(std::shared_ptr<const FinGroup> g, GElem class_rep, std::span<const CycNum> character);

/// The pair of one-dimensional modules of diagonal type over Z_n × Z_n: V of
/// degree a=(1,0) and W of degree b=(0,1), with c(x_i ⊗ x_j) = q_ij x_j ⊗ x_i
/// and q_ij = ζ_n^{powers[i][j]}.
std::pair<YDModule, YDModule> diagonal_pair(int n, const std::array<std::array<long, 2>, 2>& powers);

YDModule direct_sum(const YDModule& a, const YDModule& b);

/// The degree set of V under conjugation; labels[i-1] is the group element of
/// quandle element i, sorted by element index.
struct SupportQuandle {
  Quandle quandle;
  std::vector<GElem> labels;
};
SupportQuandle support_quandle(const YDModule& v);
SupportQuandle support_quandle(std::span<const YDModule> modules);

/// c_{V,W}: V⊗W → W⊗V, c(v⊗w) = (deg v · w) ⊗ v. Basis index of v⊗w is
/// v·dim W + w.
SparseMatrix braiding_sparse(const YDModule& v, const YDModule& w);
CycMatrix braiding(const YDModule& v, const YDModule& w);

/// Tensor product of modules, legs numbered 1..size() left to right.
class BraidedTensor {
 public:
  explicit BraidedTensor(std::vector<YDModule> factors);

  int legs() const { return static_cast<int>(factors_.size()); }
  const std::vector<YDModule>& factors() const { return factors_; }
  const YDModule& factor(int leg) const { return factors_[leg - 1]; }
  int dim() const { return dim_; }
  /// Mixed radix, first leg most significant.
  int index(std::span<const int> tuple) const;
  std::vector<int> tuple(int index) const;
  /// Product of leg degrees, left to right.
  GElem degree(int index) const;
  /// Basis indices grouped by total degree.
  std::map<GElem, std::vector<int>> degree_blocks() const;

  /// The space with legs i and i+1 exchanged.
  BraidedTensor swapped(int i) const;
  /// c_{i,i+1}: this → swapped(i).
  SparseMatrix braid_at(int i) const;
  /// id_head ⊗ M ⊗ id_tail for a square M.
  static SparseMatrix embed(const SparseMatrix& m, int head, int tail);

 private:
  std::vector<YDModule> factors_;
  std::vector<int> stride_;
  int dim_ = 1;
};

/// (c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c) on U⊗V⊗W.
bool braid_relation_holds(const YDModule& u, const YDModule& v, const YDModule& w);
/// Every generator maps V_h into V_{shs^{-1}}.
bool yd_compatible(const YDModule& v);
/// c_{V,W} sends the (g,h) component into the (ghg^{-1}, g) component.
bool braiding_is_block_monomial(const YDModule& v, const YDModule& w);

}  // namespace rank2
