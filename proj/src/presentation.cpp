#include "rank2/presentation.hpp"

#include <algorithm>
#include <cstdlib>

#include "rank2/errors.hpp"

namespace rank2 {

Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

Word free_reduce(const Word& w) {
  Word r;
  for (int x : w) {
    if (!r.empty() && r.back() == -x)
      r.pop_back();
    else
      r.push_back(x);
  }
  std::size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a] == -r[b - 1]) {
    ++a;
    --b;
  }
  return Word(r.begin() + a, r.begin() + b);
}

void Presentation::validate() const {
  const int n = static_cast<int>(generators.size());
  for (const auto& r : relators)
    for (int x : r)
      if (x == 0 || std::abs(x) > n) throw ArgumentError("presentation: relator letter out of range");
}

std::string Presentation::to_text() const {
  std::string out = "generators:";
  for (const auto& g : generators) out += " " + g;
  out += "\n";
  for (const auto& r : relators) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k) out += ' ';
      out += generators[std::abs(r[k]) - 1];
      if (r[k] < 0) out += "^-1";
    }
    out += "\n";
  }
  return out;
}

namespace {

// Coset table with coincidence forwarding. Column 2k is generator k, 2k+1 its inverse.
class CosetTable {
 public:
  CosetTable(int ngens, std::size_t budget) : cols_(2 * ngens), budget_(budget) { new_coset(); }

  int size() const { return static_cast<int>(parent_.size()); }
  bool live(int c) const { return parent_[c] == c; }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  int cols() const { return cols_; }

  void define(int c, int x) {
    int d = new_coset();
    at(c, x) = d;
    at(d, x ^ 1) = c;
  }

  // Scan without defining: records deductions and coincidences only.
  void scan(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
    if (i > j) {
      if (f != c) coincidence(f, c);
      return;
    }
    while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
    if (j < i)
      coincidence(f, b);
    else if (i == j) {
      at(f, w[i]) = b;
      at(b, w[i] ^ 1) = f;
    }
  }

  // Drops dead cosets keeping the relative order; returns the old-to-new map.
  std::vector<int> compact() {
    std::vector<int> newid(size(), -1);
    int live_count = 0;
    for (int c = 0; c < size(); ++c)
      if (live(c)) newid[c] = live_count++;
    std::vector<int> table(static_cast<std::size_t>(live_count) * cols_);
    for (int c = 0; c < size(); ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        const int d = at(c, x);
        table[static_cast<std::size_t>(newid[c]) * cols_ + x] = d < 0 ? -1 : newid[rep(d)];
      }
    }
    table_ = std::move(table);
    parent_.resize(live_count);
    for (int c = 0; c < live_count; ++c) parent_[c] = c;
    return newid;
  }

  int rep_of(int c) { return rep(c); }
  bool full() const { return parent_.size() >= budget_; }
  std::size_t budget() const { return budget_; }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t defined() const { return parent_.size(); }
  std::size_t total_defined() const { return total_; }

  struct Full {};

 private:
  int new_coset() {
    if (parent_.size() >= budget_) throw Full{};
    ++total_;
    parent_.push_back(size());
    table_.resize(table_.size() + cols_, -1);
    return size() - 1;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int e = queue[q];
      for (int x = 0; x < cols_; ++x) {
        const int f = at(e, x);
        if (f < 0) continue;
        at(f, x ^ 1) = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0)
          merge(f1, at(e1, x), queue);
        else if (at(f1, x ^ 1) >= 0)
          merge(e1, at(f1, x ^ 1), queue);
        else {
          at(e1, x) = f1;
          at(f1, x ^ 1) = e1;
        }
      }
    }
  }

  int cols_;
  std::size_t budget_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::size_t total_ = 0;
};

std::string word_name(const Presentation& p, const std::vector<int>& cols) {
  if (cols.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (k) s += ' ';
    s += p.generators[cols[k] / 2];
    if (cols[k] & 1) s += "^-1";
  }
  return s;
}

}  // namespace

EnumeratedGroup enumerate_cosets(const Presentation& p, const CosetOptions& opts) {
  p.validate();
  const int ngens = static_cast<int>(p.generators.size());
  if (ngens == 0) return {FinGroup({0}, {"1"}, {}), {}, 1};
  std::vector<std::vector<int>> rels;
  for (const auto& r : p.relators) {
    Word w = free_reduce(r);
    if (w.empty()) continue;
    std::vector<int> cols;
    for (int x : w) cols.push_back(2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0));
    rels.push_back(cols);
  }
  CosetTable t(ngens, opts.max_cosets);
  for (int c = 0; c < t.size(); ++c) {
    try {
      for (const auto& r : rels) {
        if (!t.live(c)) break;
        t.scan_and_fill(c, r);
      }
      if (!t.live(c)) continue;
      for (int x = 0; x < t.cols(); ++x)
        if (t.at(c, x) < 0) t.define(c, x);
    } catch (const CosetTable::Full&) {
      // Lookahead over the whole table, then compaction. The current coset is
      // rescanned afterwards since scanning is idempotent.
      for (int d = 0; d < t.size(); ++d)
        for (const auto& r : rels) {
          if (!t.live(d)) break;
          t.scan(d, r);
        }
      const int keep = t.rep_of(c);
      const auto newid = t.compact();
      if (t.full())
        throw ResourceError("coset enumeration exceeded the budget of " + std::to_string(t.budget()) +
                            " live cosets (group possibly infinite)");
      c = newid[keep] - 1;
    }
  }

  // Compact live cosets, then name each by a shortest word from coset 0.
  std::vector<int> newid(t.size(), -1);
  std::vector<int> order;
  std::vector<std::vector<int>> words;
  newid[0] = 0;
  order.push_back(0);
  words.push_back({});
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int x = 0; x < t.cols(); ++x) {
      int d = t.at(order[k], x);
      if (newid[d] >= 0) continue;
      newid[d] = static_cast<int>(order.size());
      order.push_back(d);
      auto w = words[k];
      w.push_back(x);
      words.push_back(std::move(w));
    }
  const int n = static_cast<int>(order.size());
  std::vector<int> mult(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = order[a];
      for (int x : words[b]) c = t.at(c, x);
      mult[a * n + b] = newid[c];
    }
  std::vector<std::string> names;
  for (const auto& w : words) names.push_back(word_name(p, w));
  std::vector<GElem> images;
  for (int k = 0; k < ngens; ++k) images.push_back(newid[t.at(0, 2 * k)]);
  FinGroup g(std::move(mult), std::move(names), images);
  for (const auto& r : p.relators)
    if (evaluate_word(g, images, r) != 0) throw InvariantViolation("coset enumeration: relator not satisfied");
  return {std::move(g), std::move(images), t.total_defined()};
}

GElem evaluate_word(const FinGroup& g, const std::vector<GElem>& images, const Word& w) {
  GElem r = 0;
  for (int x : w) {
    const std::size_t k = static_cast<std::size_t>(std::abs(x)) - 1;
    if (x == 0 || k >= images.size()) throw ArgumentError("evaluate_word: letter out of range");
    r = g.mul(r, x > 0 ? images[k] : g.inv(images[k]));
  }
  return r;
}

}  // namespace rank2
