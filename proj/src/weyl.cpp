#include "rank2/weyl.hpp"

#include <algorithm>
#include <string>

#include "rank2/errors.hpp"

namespace rank2 {

namespace {

std::int64_t checked(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w) {
  std::int64_t p, q, s;
  if (__builtin_mul_overflow(x, y, &p) || __builtin_mul_overflow(z, w, &q) || __builtin_add_overflow(p, q, &s))
    throw ResourceError("SL2Mat: 64-bit overflow");
  return s;
}

bool shorter_than_or_lex(const CharSeq& x, const CharSeq& y) {
  return x.size() != y.size() ? x.size() < y.size() : x < y;
}

// Inserts 1 at 1-based index i of the result, raising its cyclic neighbours.
CharSeq insert_one(std::span<const int> d, int i) {
  const int m = static_cast<int>(d.size());
  CharSeq out(d.begin(), d.end());
  out.insert(out.begin() + (i - 1), 1);
  const int n = m + 1;
  out[(i - 2 + n) % n] += 1;
  out[i % n] += 1;
  return out;
}

int first_one(const CharSeq& c) {
  const auto it = std::find(c.begin(), c.end(), 1);
  return it == c.end() ? 0 : static_cast<int>(it - c.begin()) + 1;
}

void require_characteristic(const CharSeq& c) {
  if (!is_characteristic(c)) {
    std::string s;
    for (int x : c) s += std::to_string(x) + ' ';
    throw InvariantViolation("generated sequence is not characteristic: " + s);
  }
}

// Depth-first reverse search below d, visiting descendants of length `target`.
void descend(const CharSeq& d, int target, const std::function<void(const CharSeq&)>& visit) {
  if (static_cast<int>(d.size()) == target) {
    require_characteristic(d);
    visit(d);
    return;
  }
  for (int i = 1; i <= static_cast<int>(d.size()) + 1; ++i) {
    CharSeq child = insert_one(d, i);
    if (first_one(child) == i) descend(child, target, visit);
  }
}

}  // namespace

std::int64_t SL2Mat::det() const { return checked(a, d, -b, c); }

SL2Mat SL2Mat::operator*(const SL2Mat& o) const {
  return {checked(a, o.a, b, o.c), checked(a, o.b, b, o.d), checked(c, o.a, d, o.c), checked(c, o.b, d, o.d)};
}

SL2Mat eta(std::int64_t c) { return {c, -1, 1, 0}; }

SL2Mat eta_product(std::span<const int> seq) {
  SL2Mat p;
  for (int c : seq) p = p * eta(c);
  return p;
}

bool is_characteristic(std::span<const int> seq) {
  if (seq.empty() || std::any_of(seq.begin(), seq.end(), [](int c) { return c <= 0; })) return false;
  SL2Mat p;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    p = p * eta(seq[i]);
    if (i + 1 < seq.size() && (p.a < 0 || p.c < 0)) return false;
  }
  return p == -SL2Mat::identity();
}

CharSeq rotate(std::span<const int> seq, int j) {
  const int n = static_cast<int>(seq.size());
  if (j < 1 || j > n) throw ArgumentError("rotate: index out of range");
  CharSeq out(seq.begin() + (j - 1), seq.end());
  out.insert(out.end(), seq.begin(), seq.begin() + (j - 1));
  return out;
}

std::optional<CharSeq> reduce(std::span<const int> seq) {
  if (seq.size() < 4 || seq[1] != 1) return std::nullopt;
  return remove_one(seq, 2);
}

CharSeq insert_inverse(std::span<const int> seq, int position) {
  const int n = static_cast<int>(seq.size());
  if (n < 3) throw ArgumentError("insert_inverse: sequence shorter than 3");
  if (position < 0 || position > n) throw ArgumentError("insert_inverse: position out of range");
  return insert_one(seq, position + 1);
}

CharSeq remove_one(std::span<const int> seq, int i) {
  const int n = static_cast<int>(seq.size());
  if (n < 4 || i < 1 || i > n || seq[i - 1] != 1) throw ArgumentError("remove_one: need n >= 4 and c_i = 1");
  CharSeq c(seq.begin(), seq.end());
  c[(i - 2 + n) % n] -= 1;
  c[i % n] -= 1;
  c.erase(c.begin() + (i - 1));
  return c;
}

void for_each_charseq(int max_len, const std::function<void(const CharSeq&)>& visit) {
  if (max_len > 20) throw ArgumentError("for_each_charseq: max_len > 20");
  const CharSeq root{1, 1, 1};
  for (int len = 3; len <= max_len; ++len) descend(root, len, visit);
}

std::vector<CharSeq> enumerate_charseqs(int max_len, std::size_t limit) {
  std::vector<CharSeq> out;
  for_each_charseq(max_len, [&](const CharSeq& c) {
    if (out.size() == limit) throw ResourceError("enumerate_charseqs: more than " + std::to_string(limit) + " sequences");
    out.push_back(c);
  });
  std::sort(out.begin(), out.end(), shorter_than_or_lex);
  return out;
}

std::vector<CharSeq> enumerate_charseqs_dfs(int max_len) {
  if (max_len > 10) throw ArgumentError("enumerate_charseqs_dfs: max_len > 10");
  std::vector<CharSeq> out;
  const int bound = max_len - 2;
  CharSeq cur;
  auto rec = [&](auto&& self, int len, const SL2Mat& prefix) -> void {
    if (static_cast<int>(cur.size()) == len) {
      if (prefix == -SL2Mat::identity()) out.push_back(cur);
      return;
    }
    for (int c = 1; c <= bound; ++c) {
      const SL2Mat p = prefix * eta(c);
      if (static_cast<int>(cur.size()) + 1 < len && (p.a < 0 || p.c < 0)) continue;
      cur.push_back(c);
      self(self, len, p);
      cur.pop_back();
    }
  };
  for (int len = 1; len <= max_len; ++len) rec(rec, len, SL2Mat::identity());
  return out;
}

std::vector<int> sequence_witnesses(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size());
  auto small = [](int c) { return c >= 1 && c <= 3; };
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (seq[i] == 1 && (small(seq[(i + 1) % n]) || small(seq[(i - 1 + n) % n]))) out.push_back(i + 1);
  return out;
}

int first_sequence_witness(std::span<const int> seq) {
  if (!is_characteristic(seq)) throw ArgumentError("first_sequence_witness: sequence is not characteristic");
  const auto w = sequence_witnesses(seq);
  if (w.empty()) throw InvariantViolation("characteristic sequence without an entry 1 next to an entry <= 3");
  return w.front();
}

bool finite_type(const CartanPair& c) {
  const long p = static_cast<long>(c.c1) * c.c2;
  return p >= 1 && p <= 3;
}

std::vector<CartanPair> alternating_objects(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<CartanPair> out;
  for (int k = 1; k <= n; ++k) {
    const int cur = seq[k - 1], prev = seq[(k - 2 + n) % n];
    out.push_back(k % 2 ? CartanPair{cur, prev} : CartanPair{prev, cur});
  }
  return out;
}

CharSeq alternating_sequence(std::span<const CartanPair> objects) {
  CharSeq out;
  for (std::size_t k = 0; k < objects.size(); ++k) out.push_back(k % 2 == 0 ? objects[k].c1 : objects[k].c2);
  return out;
}

std::optional<int> detect_finite_object(std::span<const CartanPair> objects) {
  const CharSeq c = alternating_sequence(objects);
  if (!is_characteristic(c)) throw ArgumentError("detect_finite_object: alternating sequence is not characteristic");
  const int n = static_cast<int>(c.size());
  for (int i : sequence_witnesses(c)) {
    const int next = i % n, prev = (i - 2 + n) % n;
    if (finite_type({c[i - 1], c[next]})) return i;
    if (finite_type({c[prev], c[i - 1]})) return prev + 1;
  }
  return std::nullopt;
}

}  // namespace rank2
