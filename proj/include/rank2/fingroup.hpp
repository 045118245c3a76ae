#pragma once

#include <span>
#include <string>
#include <vector>

#include "rank2/perm.hpp"

namespace rank2 {

// Group elements are 0-based ids; id 0 is always the identity.
using GElem = int;
using Subgroup = std::vector<GElem>;  // sorted ids

/// A finite group given by its multiplication table.
class FinGroup {
 public:
  /// Validates closure, identity (id 0), inverses, and associativity
  /// (exhaustive up to order 256, sampled beyond).
  FinGroup(std::vector<int> mult, std::vector<std::string> names, std::vector<GElem> generators);

  int order() const { return n_; }
  GElem mul(GElem a, GElem b) const { return mult_[a * n_ + b]; }
  GElem inv(GElem a) const { return inv_[a]; }
  static constexpr GElem identity() { return 0; }
  /// a b a^{-1}
  GElem conj(GElem a, GElem b) const { return mul(mul(a, b), inv_[a]); }
  /// a b a^{-1} b^{-1}
  GElem commutator(GElem a, GElem b) const { return mul(mul(a, b), mul(inv_[a], inv_[b])); }
  GElem pow(GElem a, long k) const;
  int element_order(GElem a) const;

  const std::string& name(GElem a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Element id by name; throws ArgumentError if absent.
  GElem find(const std::string& name) const;
  const std::vector<GElem>& generators() const { return gens_; }
  const std::vector<int>& table() const { return mult_; }

 private:
  int n_;
  std::vector<int> mult_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::vector<GElem> gens_;
};

namespace groups {

/// The group generated by permutations of {1..d}; names in cycle notation.
FinGroup from_permutations(const std::vector<Perm>& gens);
FinGroup symmetric(int d);
FinGroup alternating(int d);
/// Z_{m_1} × ⋯ × Z_{m_k}, elements named "(a1,...,ak)".
FinGroup abelian(const std::vector<int>& moduli);
/// SL(2,3) as 2×2 matrices over F_3, named "[a b;c d]".
FinGroup sl2_3();
FinGroup direct_product(const FinGroup& a, const FinGroup& b);
/// G/N for a normal subgroup N; coset named by its least element.
FinGroup quotient(const FinGroup& g, const Subgroup& normal);
/// The subgroup H regarded as a group, with the element map back into G.
struct SubgroupGroup {
  FinGroup group;
  std::vector<GElem> embedding;  // embedding[k] = element of G
};
SubgroupGroup as_group(const FinGroup& g, const Subgroup& h);

}  // namespace groups

Subgroup generated_subgroup(const FinGroup& g, std::span<const GElem> gens);
bool is_subgroup(const FinGroup& g, const Subgroup& h);
bool is_normal(const FinGroup& g, const Subgroup& h);
bool is_abelian(const FinGroup& g, std::span<const GElem> elements);

/// Conjugacy classes, each sorted; classes ordered by least element.
std::vector<std::vector<GElem>> conjugacy_classes(const FinGroup& g);
std::vector<GElem> conjugacy_class(const FinGroup& g, GElem x);
Subgroup centralizer(const FinGroup& g, GElem x);
Subgroup center(const FinGroup& g);
Subgroup commutator_subgroup(const FinGroup& g);
/// The centralizer of every non-central element is abelian.
bool has_abelian_centralizers(const FinGroup& g);
/// Class sizes, sorted ascending.
std::vector<int> class_sizes(const FinGroup& g);
/// Elements of order exactly 2.
std::vector<GElem> involutions(const FinGroup& g);

/// Greedy generating set: each element is the least one not yet generated.
std::vector<GElem> small_generating_set(const FinGroup& g, const Subgroup& h);

}  // namespace rank2
