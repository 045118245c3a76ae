#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rank2/perm.hpp"

namespace rank2 {

// Quandle elements are 1-based integers.
using Elem = int;

/// A finite quandle stored as its operation table: left(i, j) = i ▷ j.
///
/// Construction validates the three axioms (bijective rows,
/// self-distributivity, idempotence); an invalid table throws ArgumentError.
/// The right operation uses the convention j ◁ i = φ_i^{-1}(j).
class Quandle {
 public:
  /// `table` is row-major, n*n entries in 1..n.
  Quandle(int n, std::vector<int> table);

  static Quandle from_rows(const std::vector<Perm>& rows);
  /// Rows given in cycle notation, e.g. {"(243)", "(134)", "(142)", "(123)"}.
  static Quandle from_cycles(const std::vector<std::string>& rows);
  static Quandle trivial(int n);

  int size() const { return n_; }

  /// i ▷ j
  Elem left(Elem i, Elem j) const;
  /// j ◁ i, the unique k with i ▷ k = j
  Elem right(Elem j, Elem i) const;

  // Unchecked variants for hot loops.
  Elem op(Elem i, Elem j) const { return table_[(i - 1) * n_ + (j - 1)]; }
  Elem op_inv(Elem i, Elem j) const { return inv_[(i - 1) * n_ + (j - 1)]; }

  /// φ_i : j ↦ i ▷ j
  Perm row(Elem i) const;
  std::vector<std::vector<int>> rows_2d() const;
  const std::vector<int>& table() const { return table_; }

  /// i ▷ j = j implies j ▷ i = i.
  bool is_crossed_set() const;
  /// i ▷ j = j for all i, j.
  bool is_trivial() const;

  friend bool operator==(const Quandle& a, const Quandle& b) { return a.table_ == b.table_; }
  friend bool operator<(const Quandle& a, const Quandle& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.table_ < b.table_;
  }

 private:
  int n_;
  std::vector<int> table_;
  std::vector<int> inv_;
};

bool is_quandle(const std::vector<std::vector<int>>& table);
bool is_crossed_set(const Quandle& q);

/// Orbits of Inn(X), each sorted, ordered by smallest element.
std::vector<std::vector<Elem>> inner_orbits(const Quandle& q);
bool is_indecomposable(const Quandle& q);

/// The restriction of q to a ▷-closed subset, relabelled 1..k in the given order.
/// Throws ArgumentError if the subset is not closed under ▷ and ◁.
Quandle subquandle(const Quandle& q, std::span<const Elem> elements);

/// A quandle isomorphism; map[i-1] is the image of i.
struct QuandleIso {
  Perm map;
  Elem operator()(Elem i) const { return map[i - 1]; }
};

/// Exhaustive backtracking search for an isomorphism, pruned by orbit sizes
/// and the cycle type of each φ_i.
std::optional<QuandleIso> isomorphic(const Quandle& a, const Quandle& b);
bool is_isomorphism(const Quandle& a, const Quandle& b, const QuandleIso& f);

/// Built-in quandles: trivial(n), the indecomposable quandles of size ≤ 6,
/// and the five two-orbit quandles Z_T^{4,1}, Z_2^{2,2}, Z_3^{3,1},
/// Z_3^{3,2}, Z_4^{4,2}. Accepts "(12)^S3" and "(12)^{S3}" spellings.
Quandle catalog(std::string_view name);
/// Canonical names, indecomposables first.
std::vector<std::string> catalog_names();
std::vector<std::string> indecomposable_catalog_names();
std::vector<std::string> z_quandle_names();
/// Name of the catalog entry isomorphic to q (trivial(n) included).
std::optional<std::string> catalog_match(const Quandle& q);

/// Instance of the invariant-subset statement: C(Y) = {i | i ▷ j = j for all
/// j in Y}; when Y ∪ C(Y) = X, report whether X ▷ Y = Y.
struct InvariantClosure {
  std::vector<Elem> centralizing;  // C(Y)
  bool hypothesis_met = false;     // Y ∪ C(Y) = X
  bool closed = false;             // X ▷ Y = Y (meaningful only when hypothesis_met)
};
InvariantClosure invariant_closure_check(const Quandle& q, std::span<const Elem> subset);

/// Two orbits Y1, Y2 of equal size n, Y1 commutative and Y1 ≅ Y2: then q is
/// isomorphic to the structure φ_i = (n+1 ⋯ 2n) for i ≤ n, (1 ⋯ n) for i > n.
struct TwoOrbitNormalForm {
  Quandle normal_form;
  QuandleIso iso;  // q → normal_form
  int half;        // n
};
Quandle two_orbit_quandle(int half);
std::optional<TwoOrbitNormalForm> two_orbit_normal_form(const Quandle& q);

/// All quandles of size n up to isomorphism, sorted by table. The
/// representative of each class is deterministic. `crossed_only` filters to
/// crossed sets.
std::vector<Quandle> enumerate_quandles(int n, bool crossed_only = false);

}  // namespace rank2
