// Quandles, contexts and group realizations shared by the degree-calculus
// tests and the acceptance runner.
#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "rank2/envgroup.hpp"
#include "rank2/nichols.hpp"
#include "rank2/supportcalc.hpp"
#include "rank2/ydmod.hpp"

namespace fixtures {

using namespace rank2;

// q with one extra element n+1 that commutes with everything.
inline Quandle with_fixed_point(const Quandle& q) {
  const int n = q.size() + 1;
  std::vector<int> t(n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) t[(i - 1) * n + j - 1] = (i == n || j == n) ? j : q.op(i, j);
  return Quandle(n, std::move(t));
}

// The dihedral quandle on Z_5 (elements 1..5) with 6, 7 acting by ±1:
// supp W ≅ Aff(5,4) and every element of supp W swaps 6 and 7.
inline Quandle dihedral5_with_pair() {
  std::vector<Perm> rows;
  for (int y = 0; y < 5; ++y) {
    Perm p(7);
    for (int z = 0; z < 5; ++z) p[z] = (2 * y - z + 10) % 5 + 1;
    p[5] = 7;
    p[6] = 6;
    rows.push_back(p);
  }
  for (int shift : {1, 4}) {
    Perm p(7);
    for (int z = 0; z < 5; ++z) p[z] = (z + shift) % 5 + 1;
    p[5] = 6;
    p[6] = 7;
    rows.push_back(p);
  }
  return Quandle::from_rows(rows);
}

// The conjugation quandle on a union of conjugacy classes, elements in
// increasing id order; labels[i-1] is the group element of i.
struct ClassQuandle {
  Quandle quandle;
  std::vector<GElem> labels;
};
inline ClassQuandle class_quandle(const FinGroup& g, const std::vector<GElem>& reps) {
  std::vector<GElem> elems;
  for (GElem r : reps)
    for (GElem x : conjugacy_class(g, r)) elems.push_back(x);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const int n = static_cast<int>(elems.size());
  auto label = [&](GElem x) { return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin()) + 1; };
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = label(g.conj(elems[i], elems[j]));
  return {Quandle(n, std::move(t)), elems};
}

// Catalog quandles with their supports marked: indecomposables with
// supp V = supp W = X, and the two-orbit quandles in both role assignments.
inline std::vector<TwoOrbitContext> sample_contexts() {
  std::vector<TwoOrbitContext> out;
  for (const auto& name : indecomposable_catalog_names()) {
    const Quandle q = catalog(name);
    std::vector<Elem> all(q.size());
    for (int i = 0; i < q.size(); ++i) all[i] = i + 1;
    out.emplace_back(q, all, all);
  }
  for (const auto& name : z_quandle_names())
    for (int v : {0, 1}) out.push_back(TwoOrbitContext::from_orbits(catalog(name), v));
  for (const char* name : {"Aff(5,2)", "Aff(5,4)"})
    for (int v : {0, 1}) out.push_back(TwoOrbitContext::from_orbits(with_fixed_point(catalog(name)), v));
  return out;
}

// All degrees of V^{⊗m} ⊗ W.
inline std::vector<DegreeTuple> all_tuples(const TwoOrbitContext& ctx, int m) {
  std::vector<DegreeTuple> out{{}};
  for (int k = 0; k <= m; ++k) {
    const auto& pool = k < m ? ctx.support_v() : ctx.support_w();
    std::vector<DegreeTuple> next;
    for (const auto& t : out)
      for (Elem e : pool) {
        next.push_back(t);
        next.back().push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

// A random chain of certified degrees from a level-zero seed, at most
// `levels` steps long.
inline std::vector<CertifiedDegree> random_chain(const TwoOrbitContext& ctx, int levels, std::mt19937& rng) {
  const auto& w = ctx.support_w();
  const Elem s = w[std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(rng)];
  std::vector<CertifiedDegree> chain{{{s}, {s}}};
  for (int step = 0; step < levels; ++step) {
    const auto& cur = chain.back();
    std::vector<CertifiedDegree> options;
    for (Elem p : ctx.support_v())
      for (int i = 1; i <= static_cast<int>(cur.degree.size()); ++i)
        if (auto d = degrees_certificate(ctx, p, i, cur.degree)) {
          DegreeTuple src{p};
          src.insert(src.end(), cur.source.begin(), cur.source.end());
          options.push_back({*d, src});
        }
    if (options.empty()) break;
    chain.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
  }
  return chain;
}

// V and W induced from 1-dimensional characters of the classes of the
// supports inside the finite enveloping group.
struct Realization {
  std::shared_ptr<const FinGroup> group;
  std::vector<GElem> images;  // quandle element → group element
  std::vector<CharacterChoice> v_chars, w_chars;
};

inline Realization realize(const TwoOrbitContext& ctx) {
  auto env = finite_enveloping_group(ctx.quandle());
  Realization r{std::make_shared<const FinGroup>(std::move(env.group)), env.images, {}, {}};
  r.v_chars = enumerate_characters(*r.group, r.images[ctx.support_v().front() - 1]);
  r.w_chars = enumerate_characters(*r.group, r.images[ctx.support_w().front() - 1]);
  return r;
}

inline YDModule realize_module(const Realization& r, Elem rep, const CharacterChoice& ch) {
  return induced_module(r.group, r.images[rep - 1], ch.values);
}

// Basis index of the tuple of quandle degrees in a tensor of modules whose
// homogeneous components are 1-dimensional.
inline int basis_index(const BraidedTensor& t, const Realization& r, const DegreeTuple& d) {
  std::vector<int> tuple;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const auto& deg = t.factor(static_cast<int>(k) + 1).degrees();
    const auto it = std::find(deg.begin(), deg.end(), r.images[d[k] - 1]);
    if (it == deg.end()) return -1;
    tuple.push_back(static_cast<int>(it - deg.begin()));
  }
  return t.index(tuple);
}

// The component of degree `target` of `op` on V^{⊗m} ⊗ W applied to the
// basis vector of degree `source`.
inline CycNum operator_entry(const BraidedTensor& space, const SparseMatrix& op, const Realization& r,
                             const DegreeTuple& target, const DegreeTuple& source) {
  const int row = basis_index(space, r, target), col = basis_index(space, r, source);
  if (row < 0 || col < 0) return CycNum(0);
  for (const auto& [i, x] : op.column(col))
    if (i == row) return x;
  return CycNum(0);
}

}  // namespace fixtures
