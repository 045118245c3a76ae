#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace rank2 {

/// 2×2 integer matrix [[a, b], [c, d]].
struct SL2Mat {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static SL2Mat identity() { return {}; }
  std::int64_t det() const;
  /// Throws ResourceError on 64-bit overflow.
  SL2Mat operator*(const SL2Mat& o) const;
  SL2Mat operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const SL2Mat&) const = default;
};

/// [[c, -1], [1, 0]].
SL2Mat eta(std::int64_t c);

using CharSeq = std::vector<int>;

/// η(c_1)⋯η(c_n) for the whole sequence.
SL2Mat eta_product(std::span<const int> seq);

/// Positive entries, η(c_1)⋯η(c_n) = −id, and the first column of every
/// proper prefix product is nonnegative.
bool is_characteristic(std::span<const int> seq);

/// (c_j, …, c_n, c_1, …, c_{j-1}) for 1-based j.
CharSeq rotate(std::span<const int> seq, int j);

/// (c_1, 1, c_3, …, c_n) ↦ (c_1 − 1, c_3 − 1, c_4, …, c_n); none unless
/// c_2 = 1 and n ≥ 4.
std::optional<CharSeq> reduce(std::span<const int> seq);

/// Inverse of reduce at a cyclic slot: a new entry 1 is placed after entry
/// `position` (0 = in front) and its two cyclic neighbours grow by one.
/// insert_inverse(s, 1) undoes reduce. Throws ArgumentError for position
/// outside 0..n or a sequence shorter than 3.
CharSeq insert_inverse(std::span<const int> seq, int position);

/// Removes the entry 1 at 1-based index i and lowers its cyclic neighbours.
/// Preserves characteristic sequences of length ≥ 4. Throws ArgumentError
/// unless c_i = 1 and n ≥ 4.
CharSeq remove_one(std::span<const int> seq, int i);

/// Calls `visit` on every characteristic sequence of length ≤ max_len, by
/// length and otherwise in depth-first insertion order. Each sequence is
/// produced once: its parent is the removal of its first entry 1. Throws
/// ArgumentError for max_len > 20 and InvariantViolation if a produced
/// sequence fails is_characteristic.
void for_each_charseq(int max_len, const std::function<void(const CharSeq&)>& visit);

/// All characteristic sequences of length ≤ max_len, sorted by length then
/// lexicographically. Throws ResourceError past `limit` sequences.
std::vector<CharSeq> enumerate_charseqs(int max_len, std::size_t limit = 5'000'000);

/// Brute-force oracle: depth-first search over entries 1..max_len−2 pruned by
/// prefix nonnegativity. Same ordering as enumerate_charseqs.
std::vector<CharSeq> enumerate_charseqs_dfs(int max_len);

/// Every 1-based i with c_i = 1 and a cyclic neighbour in {1, 2, 3}.
std::vector<int> sequence_witnesses(std::span<const int> seq);
/// The least such i. Throws ArgumentError if seq is not characteristic and
/// InvariantViolation if there is no witness.
int first_sequence_witness(std::span<const int> seq);

/// Off-diagonal magnitudes of [[2, −c_1], [−c_2, 2]].
struct CartanPair {
  int c1 = 0, c2 = 0;
  bool operator==(const CartanPair&) const = default;
};

/// 1 ≤ c_1 c_2 ≤ 3.
bool finite_type(const CartanPair& c);

/// Cartan data along the object cycle a_1, ρ_1(a_1), ρ_2ρ_1(a_1), … realizing
/// seq: object k carries the pair (c_{k-1}, c_k) read in the order that puts
/// the odd-indexed entry first.
std::vector<CartanPair> alternating_objects(std::span<const int> seq);
/// The sequence read back from objects: c_k is c1 of object k for odd k and
/// c2 for even k.
CharSeq alternating_sequence(std::span<const CartanPair> objects);

/// Index k such that (c_k, c_{k+1}) (cyclic) is of finite type, for the
/// alternating sequence of the objects. Throws ArgumentError if that sequence
/// is not characteristic.
std::optional<int> detect_finite_object(std::span<const CartanPair> objects);

}  // namespace rank2
