// Enumeration of quandles of size n up to isomorphism.
//
// Rows φ_1..φ_n are filled one at a time with a permutation fixing its
// index. The axiom φ_{φ_i(j)} = φ_i φ_j φ_i^{-1} is propagated eagerly: every
// newly fixed row either forces further rows or contradicts one. Row 1 is
// restricted to one representative per cycle type on {2..n}; relabelling
// {2..n} shows that loses no isomorphism class.
#include <algorithm>
#include <functional>
#include <map>

#include "rank2/errors.hpp"
#include "rank2/quandle.hpp"

namespace rank2 {

namespace {

class RowSearch {
 public:
  explicit RowSearch(int n) : n_(n), rows_(n + 1), set_(n + 1, 0) {}

  void run(const std::function<void(const std::vector<Perm>&)>& emit) {
    emit_ = &emit;
    for (const auto& p : first_row_candidates()) {
      std::size_t mark = trail_.size();
      if (place(1, p)) descend();
      undo(mark);
    }
  }

 private:
  // One permutation per cycle type of {2..n}: consecutive cycles, lengths descending.
  std::vector<Perm> first_row_candidates() const {
    std::vector<Perm> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
      if (left == 0) {
        Perm p = perm::identity(n_);
        int start = 2;
        for (int len : parts) {
          for (int k = 0; k < len; ++k) p[start + k - 1] = start + (k + 1) % len;
          start += len;
        }
        out.push_back(p);
        return;
      }
      for (int part = std::min(left, maxpart); part >= 1; --part) {
        parts.push_back(part);
        rec(left - part, part);
        parts.pop_back();
      }
    };
    rec(n_ - 1, n_ - 1);
    return out;
  }

  bool place(int x, const Perm& p) {
    std::vector<std::pair<int, Perm>> todo{{x, p}};
    while (!todo.empty()) {
      auto [u, q] = std::move(todo.back());
      todo.pop_back();
      if (set_[u]) {
        if (rows_[u] != q) return false;
        continue;
      }
      rows_[u] = q;
      set_[u] = 1;
      trail_.push_back(u);
      const Perm qinv = perm::inverse(q);
      for (int w = 1; w <= n_; ++w) {
        if (!set_[w]) continue;
        // φ_{u▷w} = φ_u φ_w φ_u^{-1} and φ_{w▷u} = φ_w φ_u φ_w^{-1}
        todo.push_back({q[w - 1], perm::compose(perm::compose(q, rows_[w]), qinv)});
        if (w != u)
          todo.push_back({rows_[w][u - 1], perm::compose(perm::compose(rows_[w], q), perm::inverse(rows_[w]))});
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      set_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  void descend() {
    int x = 0;
    for (int i = 1; i <= n_; ++i)
      if (!set_[i]) {
        x = i;
        break;
      }
    if (!x) {
      (*emit_)(std::vector<Perm>(rows_.begin() + 1, rows_.end()));
      return;
    }
    // Permutations of {1..n} \ {x}, with x fixed.
    std::vector<int> others;
    for (int i = 1; i <= n_; ++i)
      if (i != x) others.push_back(i);
    std::vector<int> images = others;
    do {
      Perm p(n_);
      p[x - 1] = x;
      for (std::size_t k = 0; k < others.size(); ++k) p[others[k] - 1] = images[k];
      std::size_t mark = trail_.size();
      if (place(x, p)) descend();
      undo(mark);
    } while (std::next_permutation(images.begin(), images.end()));
  }

  int n_;
  std::vector<Perm> rows_;
  std::vector<char> set_;
  std::vector<int> trail_;
  const std::function<void(const std::vector<Perm>&)>* emit_ = nullptr;
};

// Cheap isomorphism-class key for bucketing.
std::vector<std::vector<int>> class_key(const Quandle& q) {
  std::vector<std::vector<int>> key;
  for (int i = 1; i <= q.size(); ++i) key.push_back(perm::cycle_type(q.row(i)));
  std::sort(key.begin(), key.end());
  std::vector<int> orbit_sizes;
  for (const auto& o : inner_orbits(q)) orbit_sizes.push_back(static_cast<int>(o.size()));
  std::sort(orbit_sizes.begin(), orbit_sizes.end());
  key.push_back(orbit_sizes);
  return key;
}

}  // namespace

std::vector<Quandle> enumerate_quandles(int n, bool crossed_only) {
  if (n < 1) throw ArgumentError("enumerate_quandles needs n >= 1");
  std::map<std::vector<std::vector<int>>, std::vector<Quandle>> buckets;
  RowSearch search(n);
  search.run([&](const std::vector<Perm>& rows) {
    Quandle q = Quandle::from_rows(rows);
    if (crossed_only && !q.is_crossed_set()) return;
    auto& bucket = buckets[class_key(q)];
    for (const auto& r : bucket)
      if (isomorphic(q, r)) return;
    bucket.push_back(std::move(q));
  });
  std::vector<Quandle> out;
  for (auto& [key, bucket] : buckets)
    for (auto& q : bucket) out.push_back(std::move(q));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rank2
