#include "rank2/fingroup.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <random>

#include "rank2/errors.hpp"

namespace rank2 {

FinGroup::FinGroup(std::vector<int> mult, std::vector<std::string> names, std::vector<GElem> generators)
    : mult_(std::move(mult)), names_(std::move(names)), gens_(std::move(generators)) {
  const std::size_t sq = mult_.size();
  n_ = static_cast<int>(std::lround(std::sqrt(static_cast<double>(sq))));
  if (n_ < 1 || static_cast<std::size_t>(n_) * n_ != sq) throw ArgumentError("FinGroup: table is not square");
  if (names_.size() != static_cast<std::size_t>(n_)) throw ArgumentError("FinGroup: wrong number of names");
  for (int x : mult_)
    if (x < 0 || x >= n_) throw ArgumentError("FinGroup: table entry out of range");
  for (int a = 0; a < n_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw ArgumentError("FinGroup: element 0 is not the identity");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0 || mul(inv_[a], a) != 0) throw ArgumentError("FinGroup: missing inverse");
  }
  auto assoc = [&](int a, int b, int c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (n_ <= 256) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (!assoc(a, b, c)) throw ArgumentError("FinGroup: table is not associative");
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> d(0, n_ - 1);
    for (int t = 0; t < 200000; ++t)
      if (!assoc(d(rng), d(rng), d(rng))) throw ArgumentError("FinGroup: table is not associative");
  }
  for (GElem x : gens_)
    if (x < 0 || x >= n_) throw ArgumentError("FinGroup: generator out of range");
}

GElem FinGroup::pow(GElem a, long k) const {
  if (k < 0) {
    a = inv_[a];
    k = -k;
  }
  GElem r = 0;
  GElem base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int FinGroup::element_order(GElem a) const {
  int k = 1;
  for (GElem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

GElem FinGroup::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw ArgumentError("no group element named \"" + name + "\"");
  return static_cast<GElem>(it - names_.begin());
}

namespace groups {

FinGroup from_permutations(const std::vector<Perm>& gens) {
  if (gens.empty()) throw ArgumentError("from_permutations: no generators");
  const int d = static_cast<int>(gens.front().size());
  for (const auto& p : gens)
    if (static_cast<int>(p.size()) != d || !perm::is_permutation(p))
      throw ArgumentError("from_permutations: bad generator");
  std::vector<Perm> elems{perm::identity(d)};
  std::map<Perm, int> index{{elems[0], 0}};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& s : gens) {
      Perm p = perm::compose(elems[k], s);
      if (index.emplace(p, static_cast<int>(elems.size())).second) elems.push_back(p);
    }
  // Identity first, the rest in lexicographic order.
  std::sort(elems.begin() + 1, elems.end());
  index.clear();
  for (std::size_t k = 0; k < elems.size(); ++k) index[elems[k]] = static_cast<int>(k);
  const int n = static_cast<int>(elems.size());
  std::vector<int> mult(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[a * n + b] = index.at(perm::compose(elems[a], elems[b]));
  std::vector<std::string> names;
  for (const auto& p : elems) names.push_back(perm::to_cycles(p));
  std::vector<GElem> gen_ids;
  for (const auto& s : gens) gen_ids.push_back(index.at(s));
  return FinGroup(std::move(mult), std::move(names), std::move(gen_ids));
}

FinGroup symmetric(int d) {
  if (d < 1) throw ArgumentError("symmetric: degree must be positive");
  if (d == 1) return from_permutations({perm::identity(1)});
  Perm t = perm::identity(d), c(d);
  std::swap(t[0], t[1]);
  for (int i = 0; i < d; ++i) c[i] = (i + 1) % d + 1;
  return from_permutations({t, c});
}

FinGroup alternating(int d) {
  if (d < 3) return from_permutations({perm::identity(std::max(d, 1))});
  std::vector<Perm> gens;
  for (int k = 3; k <= d; ++k) {
    Perm p = perm::identity(d);
    p[0] = 2;
    p[1] = k;
    p[k - 1] = 1;  // (1 2 k)
    gens.push_back(p);
  }
  return from_permutations(gens);
}

FinGroup abelian(const std::vector<int>& moduli) {
  int n = 1;
  for (int m : moduli) {
    if (m < 1) throw ArgumentError("abelian: moduli must be positive");
    n *= m;
  }
  auto digits = [&](int x) {
    std::vector<int> v(moduli.size());
    for (std::size_t k = moduli.size(); k-- > 0;) {
      v[k] = x % moduli[k];
      x /= moduli[k];
    }
    return v;
  };
  auto number = [&](const std::vector<int>& v) {
    int x = 0;
    for (std::size_t k = 0; k < moduli.size(); ++k) x = x * moduli[k] + v[k];
    return x;
  };
  std::vector<int> mult(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    auto da = digits(a);
    std::string s = "(";
    for (std::size_t k = 0; k < da.size(); ++k) s += (k ? "," : "") + std::to_string(da[k]);
    names.push_back(s + ")");
    for (int b = 0; b < n; ++b) {
      auto db = digits(b);
      for (std::size_t k = 0; k < da.size(); ++k) db[k] = (da[k] + db[k]) % moduli[k];
      mult[a * n + b] = number(db);
    }
  }
  std::vector<GElem> gens;
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    std::vector<int> e(moduli.size(), 0);
    e[k] = moduli[k] > 1 ? 1 : 0;
    gens.push_back(number(e));
  }
  return FinGroup(std::move(mult), std::move(names), std::move(gens));
}

FinGroup sl2_3() {
  using M = std::array<int, 4>;  // a b c d, row-major
  std::vector<M> elems;
  for (int x = 0; x < 81; ++x) {
    M m{x / 27, x / 9 % 3, x / 3 % 3, x % 3};
    if (((m[0] * m[3] - m[1] * m[2]) % 3 + 3) % 3 == 1) elems.push_back(m);
  }
  const M one{1, 0, 0, 1};
  std::stable_partition(elems.begin(), elems.end(), [&](const M& m) { return m == one; });
  auto mm = [](const M& a, const M& b) {
    return M{(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3, (a[2] * b[0] + a[3] * b[2]) % 3,
             (a[2] * b[1] + a[3] * b[3]) % 3};
  };
  const int n = static_cast<int>(elems.size());
  auto idx = [&](const M& m) { return static_cast<int>(std::find(elems.begin(), elems.end(), m) - elems.begin()); };
  std::vector<int> mult(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[a * n + b] = idx(mm(elems[a], elems[b]));
  std::vector<std::string> names;
  for (const auto& m : elems)
    names.push_back("[" + std::to_string(m[0]) + " " + std::to_string(m[1]) + ";" + std::to_string(m[2]) + " " +
                    std::to_string(m[3]) + "]");
  return FinGroup(std::move(mult), std::move(names), {idx({1, 1, 0, 1}), idx({1, 0, 1, 1})});
}

FinGroup direct_product(const FinGroup& a, const FinGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<int> mult(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    names.push_back("(" + a.name(x / nb) + "," + b.name(x % nb) + ")");
    for (int y = 0; y < n; ++y) mult[x * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  std::vector<GElem> gens;
  for (GElem g : a.generators()) gens.push_back(g * nb);
  for (GElem g : b.generators()) gens.push_back(g);
  return FinGroup(std::move(mult), std::move(names), std::move(gens));
}

FinGroup quotient(const FinGroup& g, const Subgroup& normal) {
  if (!is_normal(g, normal)) throw ArgumentError("quotient: subgroup is not normal");
  const int n = g.order();
  std::vector<int> coset(n, -1);
  std::vector<GElem> reps;
  for (GElem x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (GElem k : normal) coset[g.mul(x, k)] = c;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<int> mult(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mult[a * m + b] = coset[g.mul(reps[a], reps[b])];
  std::vector<std::string> names;
  for (GElem r : reps) names.push_back(g.name(r) + "N");
  std::vector<GElem> gens;
  for (GElem x : g.generators()) gens.push_back(coset[x]);
  return FinGroup(std::move(mult), std::move(names), std::move(gens));
}

SubgroupGroup as_group(const FinGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) throw ArgumentError("as_group: not a subgroup");
  const int m = static_cast<int>(h.size());
  std::vector<int> pos(g.order(), -1);
  for (int k = 0; k < m; ++k) pos[h[k]] = k;
  std::vector<int> mult(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mult[a * m + b] = pos[g.mul(h[a], h[b])];
  std::vector<std::string> names;
  for (GElem x : h) names.push_back(g.name(x));
  std::vector<GElem> gens;
  for (GElem x : small_generating_set(g, h)) gens.push_back(pos[x]);
  return {FinGroup(std::move(mult), std::move(names), std::move(gens)), h};
}

}  // namespace groups

Subgroup generated_subgroup(const FinGroup& g, std::span<const GElem> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<GElem> elems{0};
  in[0] = 1;
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (GElem s : gens) {
      GElem x = g.mul(elems[k], s);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_subgroup(const FinGroup& g, const Subgroup& h) {
  if (h.empty() || !std::is_sorted(h.begin(), h.end())) return false;
  for (GElem a : h)
    for (GElem b : h)
      if (!std::binary_search(h.begin(), h.end(), g.mul(a, g.inv(b)))) return false;
  return true;
}

bool is_normal(const FinGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) return false;
  for (GElem x = 0; x < g.order(); ++x)
    for (GElem k : h)
      if (!std::binary_search(h.begin(), h.end(), g.conj(x, k))) return false;
  return true;
}

bool is_abelian(const FinGroup& g, std::span<const GElem> elements) {
  for (GElem a : elements)
    for (GElem b : elements)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::vector<GElem> conjugacy_class(const FinGroup& g, GElem x) {
  std::vector<GElem> cls;
  for (GElem y = 0; y < g.order(); ++y) cls.push_back(g.conj(y, x));
  std::sort(cls.begin(), cls.end());
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  return cls;
}

std::vector<std::vector<GElem>> conjugacy_classes(const FinGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<GElem>> out;
  for (GElem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    auto cls = conjugacy_class(g, x);
    for (GElem y : cls) seen[y] = 1;
    out.push_back(std::move(cls));
  }
  return out;
}

Subgroup centralizer(const FinGroup& g, GElem x) {
  Subgroup c;
  for (GElem y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) c.push_back(y);
  return c;
}

Subgroup center(const FinGroup& g) {
  Subgroup z;
  for (GElem x = 0; x < g.order(); ++x)
    if (centralizer(g, x).size() == static_cast<std::size_t>(g.order())) z.push_back(x);
  return z;
}

Subgroup commutator_subgroup(const FinGroup& g) {
  std::vector<GElem> comms;
  for (GElem a = 0; a < g.order(); ++a)
    for (GElem b = 0; b < g.order(); ++b) comms.push_back(g.commutator(a, b));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return generated_subgroup(g, comms);
}

bool has_abelian_centralizers(const FinGroup& g) {
  const auto z = center(g);
  for (GElem x = 0; x < g.order(); ++x) {
    if (std::binary_search(z.begin(), z.end(), x)) continue;
    if (!is_abelian(g, centralizer(g, x))) return false;
  }
  return true;
}

std::vector<int> class_sizes(const FinGroup& g) {
  std::vector<int> sizes;
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<GElem> involutions(const FinGroup& g) {
  std::vector<GElem> out;
  for (GElem x = 1; x < g.order(); ++x)
    if (g.mul(x, x) == 0) out.push_back(x);
  return out;
}

std::vector<GElem> small_generating_set(const FinGroup& g, const Subgroup& h) {
  std::vector<GElem> gens;
  Subgroup span{0};
  for (GElem x : h) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = generated_subgroup(g, gens);
  }
  return gens;
}

}  // namespace rank2
