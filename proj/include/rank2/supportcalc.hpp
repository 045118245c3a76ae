#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rank2/quandle.hpp"

namespace rank2 {

/// Degree (r_1, …, r_m, s) of a homogeneous tensor in V^{⊗m} ⊗ W: m entries
/// from supp V followed by one from supp W.
using DegreeTuple = std::vector<Elem>;
/// Degree → number of times it is emitted.
using SupportMultiset = std::map<DegreeTuple, int>;

/// A quandle X with the supports of V and W marked. Each support is a
/// non-empty union of Inn(X)-orbits; they may coincide.
class TwoOrbitContext {
 public:
  TwoOrbitContext(Quandle x, std::vector<Elem> support_v, std::vector<Elem> support_w);
  /// The two inner orbits of a quandle with exactly two, `v_orbit` (0 or 1) for V.
  static TwoOrbitContext from_orbits(const Quandle& x, int v_orbit);

  const Quandle& quandle() const { return x_; }
  const std::vector<Elem>& support_v() const { return v_; }
  const std::vector<Elem>& support_w() const { return w_; }
  bool in_v(Elem e) const { return e >= 1 && e <= x_.size() && role_[e] & 1; }
  bool in_w(Elem e) const { return e >= 1 && e <= x_.size() && role_[e] & 2; }

  /// (w_1 ⋯ w_k) ▷ y = φ_{w_1} ⋯ φ_{w_k}(y).
  Elem act(std::span<const Elem> word, Elem y) const;
  /// (w_1 ⋯ w_k)^{-1} ▷ y.
  Elem act_inv(std::span<const Elem> word, Elem y) const;

  /// V and W exchanged.
  TwoOrbitContext swapped() const;
  /// x ▷ y = y for all x ∈ supp V, y ∈ supp W.
  bool supports_commute() const;

 private:
  Quandle x_;
  std::vector<Elem> v_, w_;
  std::vector<int> role_;
};

/// Degrees of φ_{m+1}(v ⊗ t) for v of degree p and t with the given support:
/// for each source tuple p' and 1 ≤ j ≤ m+1, both
///   (p▷p'_1, …, p▷p'_{j-1}, p, p'_j, …, p'_{m+1}) and
///   (p▷p'_1, …, p▷p'_{j-1}, (p p'_j ⋯ p'_{m+1})▷p, p▷p'_j, …, p▷p'_{m+1}).
SupportMultiset phi_support_expand(const TwoOrbitContext& ctx, Elem p, std::span<const DegreeTuple> t_support);

/// Given a degree (p_1, …, p_{m+1}) known to occur in some Q_m(r_1, …, r_m, s),
/// returns (p▷p_1, …, p▷p_{i-1}, p, p_i, …, p_{m+1}), a degree occurring in
/// Q_{m+1}(p, r_1, …, r_m, s), when
///   p_i ▷ p ≠ p,  p_j ▷ p = p for i < j ≤ m+1,
///   p ∉ {p_j : j ≤ m} ∪ {(p_{j+1} ⋯ p_{m+1})^{-1} ▷ p_j : j < i}.
/// `i` is 1-based. Throws ArgumentError on malformed input.
std::optional<DegreeTuple> degrees_certificate(const TwoOrbitContext& ctx, Elem p, int i, const DegreeTuple& known);

/// A degree occurring in Q_m(source).
struct CertifiedDegree {
  DegreeTuple degree;
  DegreeTuple source;  // (r_1, …, r_m, s)
};

/// Breadth-first closure of degrees_certificate from seeds of one common
/// level. Returns a chain of certified degrees from a seed to level `target`,
/// or none when the closure dies out earlier.
std::optional<std::vector<CertifiedDegree>> degree_chain(const TwoOrbitContext& ctx, int target,
                                                         std::span<const CertifiedDegree> seeds);
/// Seeds (s) ∈ supp Q_0(s) for every s ∈ supp W.
std::vector<CertifiedDegree> level_zero_seeds(const TwoOrbitContext& ctx);

/// (ad V)^4(W) ≠ 0 for commuting supports, assuming Q_1(r_4, s) ≠ 0:
///   r_2 ∉ {r_3, r_4, r_4^{-1}▷r_3}, r_2▷r_4 ≠ r_4,
///   r_1 ∉ {r_2▷r_3, r_2, r_4, r_4^{-1}▷r_2, r_4^{-1}▷r_3}, r_1▷r_4 ≠ r_4,
/// and (r_3, r_4, s) is certified from (r_4, s), i.e. r_3 ≠ r_4 and r_4▷r_3 ≠ r_3.
bool certify_adV4_nonzero_comm(const TwoOrbitContext& ctx, Elem r1, Elem r2, Elem r3, Elem r4, Elem s);
/// Searches r_1, r_2, r_3 for the given (r_4, s).
std::optional<std::array<Elem, 5>> find_comm_certificate(const TwoOrbitContext& ctx, Elem r4, Elem s);

/// (ad V)^4(W) ≠ 0 when
///   (1) r_2▷r_3 ≠ r_3,
///   (2) r_1 ∉ {r_3r_2▷r_3, r_3▷r_2, r_3, s^{-1}▷r_3, s^{-1}▷r_2},
///   (3) s▷r_2, s▷r_3 ∉ {r_2, r_3},
///   (4) r_1▷s ≠ s or r_1▷r_3 ≠ r_3.
bool certify_adV4_nonzero_nc(const TwoOrbitContext& ctx, Elem r1, Elem r2, Elem r3, Elem s);
std::optional<std::array<Elem, 4>> find_nc_certificate(const TwoOrbitContext& ctx);

/// Size bound on supp V when (ad V)^m(W) ≠ 0 = (ad V)^{m+1}(W): 2m−1 for
/// commuting supports, 2m otherwise. Applicable when supp V is indecomposable
/// as a quandle, or splits into two Inn(supp V)-orbits that every element of
/// supp W exchanges.
struct SizeBound {
  bool applicable = false;
  int bound = 0;
  bool exceeds = false;
};
SizeBound size_bound_check(const TwoOrbitContext& ctx, int m);

/// One predicate of a necessary-condition battery.
struct ConditionResult {
  std::string id;
  bool passed = true;
  std::vector<Elem> witness;  // a counterexample when failed
};

/// Consequences of (ad V)^2(W) = 0 for non-commuting supports, with g ∈ supp V,
/// h ∈ supp W ranging over non-commuting pairs:
///   1 supp V is commutative; 2 supp V ≠ supp W; 3 ⟨supp W⟩▷g = supp V;
///   4 φ_s restricted to supp V is a transposition; 5 h²▷g = g and
///   (gh)² = (hg)² on X; 6 {x ∈ supp V : x ▷ (g^m▷h) ≠ g^m▷h} = {g, h▷g}.
struct NecessaryReport {
  bool applicable = false;  // false for commuting supports
  std::vector<ConditionResult> items;
  bool all_passed() const;
};
NecessaryReport nc_necessary_conditions(const TwoOrbitContext& ctx);

/// If supp W is decomposable as a quandle, it has exactly two Inn(supp W)-orbits
/// and every x ∈ supp V exchanges them.
ConditionResult decomposition_condition(const TwoOrbitContext& ctx);

/// For x, y generating supp W as a quandle, with ψ = φ restricted to supp V:
/// ψ_x = ψ_y forces |supp V| = 2, otherwise |supp V| = 3 and ψ_x ψ_y ≠ ψ_y ψ_x.
ConditionResult two_generator_condition(const TwoOrbitContext& ctx);

struct ClassifyOptions {
  int n_max = 6;
  /// Proxy for a non-abelian group: some x ▷ y ≠ y in X.
  bool require_noncommuting_pair = true;
};

/// Outcome of one rule on one candidate.
struct AuditEntry {
  std::string rule;
  bool applicable = true;
  bool rejected = false;
  std::vector<Elem> witness;
};

struct Candidate {
  Quandle quandle;
  std::vector<Elem> support_v, support_w;
  bool commuting = false;
  std::vector<AuditEntry> audit;
  bool survived = false;
  std::string rejected_by;  // first rejecting rule
  std::optional<std::string> catalog_name;
  /// Survived every quandle-level rule without matching a two-orbit catalog
  /// quandle; settled by envelope_post_filter.
  bool flagged = false;
  std::optional<std::string> embeds_in;
};

struct ClassifyReport {
  int n_max = 0;
  int quandles_examined = 0;
  int candidates_examined = 0;  // (quandle, role assignment) pairs
  std::vector<Candidate> candidates;
  std::vector<const Candidate*> survivors() const;
  /// Catalog names of surviving quandles, optionally one branch only.
  std::vector<std::string> survivor_names(std::optional<bool> commuting = std::nullopt) const;
};

/// Name of a two-orbit catalog quandle Z such that q embeds, as a generating
/// union of classes with x^{|φ_x|} = 1, in the finite enveloping group of Z.
std::optional<std::string> envelope_post_filter(const Quandle& q);

/// Runs every rule on every two-orbit crossed set of size ≤ n_max and both role
/// assignments. Flagged survivors without an embedding are rejected by
/// "envelope_post_filter". Throws ResourceError for n_max > 8.
ClassifyReport classify(const ClassifyOptions& opts = {});
/// Runs the rules on one context.
Candidate evaluate_candidate(const TwoOrbitContext& ctx, const ClassifyOptions& opts = {});

}  // namespace rank2
