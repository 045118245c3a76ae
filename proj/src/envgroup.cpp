#include "rank2/envgroup.hpp"

#include <algorithm>
#include <map>

#include "rank2/errors.hpp"

namespace rank2 {

Presentation enveloping_presentation(const Quandle& q) {
  Presentation p;
  const int n = q.size();
  for (int i = 1; i <= n; ++i) p.generators.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      // When both i▷j = j and j▷i = i only (i < j) is kept: (j, i) is its inverse.
      if (i != j && (q.op(i, j) != j || q.op(j, i) != i || i < j)) p.relators.push_back({i, j, -i, -q.op(i, j)});
  return p;
}

EnvelopeQuotient enveloping_quotient(const Quandle& q, const std::vector<int>& multipliers,
                                     const CosetOptions& opts) {
  const auto orbits = inner_orbits(q);
  if (multipliers.size() != orbits.size()) throw ArgumentError("enveloping_quotient: one multiplier per inner orbit");
  Presentation p = enveloping_presentation(q);
  std::vector<int> exps(q.size(), 0);
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (multipliers[o] < 1) throw ArgumentError("enveloping_quotient: multipliers must be positive");
    const Elem rep = orbits[o].front();
    const int e = multipliers[o] * perm::order(q.row(rep));
    p.relators.push_back(Word(e, rep));
    for (Elem i : orbits[o]) exps[i - 1] = e;
  }
  auto run = enumerate_cosets(p, opts);
  return {std::move(run.group), std::move(run.generator_images), std::move(exps), orbits.size() > 1};
}

EnvelopeQuotient finite_enveloping_group(const Quandle& q, const CosetOptions& opts) {
  return enveloping_quotient(q, std::vector<int>(inner_orbits(q).size(), 1), opts);
}

bool injectivity_test(const Quandle& q, const EnvelopeQuotient& env) {
  for (const auto& orbit : inner_orbits(q))
    for (std::size_t a = 0; a < orbit.size(); ++a)
      for (std::size_t b = a + 1; b < orbit.size(); ++b)
        if (env.images[orbit[a] - 1] == env.images[orbit[b] - 1]) return false;
  return true;
}

bool injectivity_test(const Quandle& q, const CosetOptions& opts) {
  return injectivity_test(q, finite_enveloping_group(q, opts));
}

bool factors_through_orbits(const FinGroup& g, const std::vector<GElem>& images_a,
                            const std::vector<GElem>& images_b) {
  const auto a = generated_subgroup(g, images_a);
  const auto b = generated_subgroup(g, images_b);
  std::vector<char> hit(g.order(), 0);
  for (GElem x : a)
    for (GElem y : b) hit[g.mul(x, y)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::optional<WordHom<GElem>> induced_hom(const Quandle& q, const FinGroup& g, const std::vector<GElem>& f) {
  return induced_hom<GElem>(
      q, f, [&g](const GElem& a, const GElem& b) { return g.mul(a, b); }, [&g](const GElem& a) { return g.inv(a); },
      GElem{0});
}

namespace {

// Least subset whose closure under ▷ and ◁ is all of q.
std::vector<Elem> quandle_generators(const Quandle& q) {
  const int n = q.size();
  std::vector<Elem> gens;
  std::vector<char> in(n + 1, 0);
  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          if (in[a] && in[b])
            for (Elem c : {q.op(a, b), q.op_inv(a, b)})
              if (!in[c]) in[c] = 1, grew = true;
    }
  };
  for (int x = 1; x <= n; ++x)
    if (!in[x]) {
      gens.push_back(x);
      in[x] = 1;
      close();
    }
  return gens;
}

// Extends images on generators by f(a▷b) = f(a)f(b)f(a)^{-1}; false on conflict.
bool propagate(const Quandle& q, const FinGroup& g, std::vector<GElem>& f) {
  const int n = q.size();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (f[a - 1] < 0 || f[b - 1] < 0) continue;
        const GElem fa = f[a - 1], fb = f[b - 1];
        const std::pair<Elem, GElem> derived[] = {{q.op(a, b), g.conj(fa, fb)},
                                                  {q.op_inv(a, b), g.conj(g.inv(fa), fb)}};
        for (auto [c, v] : derived) {
          if (f[c - 1] < 0) {
            f[c - 1] = v;
            grew = true;
          } else if (f[c - 1] != v) {
            return false;
          }
        }
      }
  }
  return true;
}

}  // namespace

std::optional<std::vector<GElem>> find_quandle_embedding(const Quandle& q, const FinGroup& g) {
  const auto gens = quandle_generators(q);
  std::vector<GElem> f(q.size(), -1);
  std::optional<std::vector<GElem>> found;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (found) return;
    if (k == gens.size()) {
      std::vector<GElem> h = f;
      if (!propagate(q, g, h)) return;
      std::vector<GElem> sorted = h;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
      for (int i = 1; i <= q.size(); ++i)
        if (g.pow(h[i - 1], perm::order(q.row(i))) != 0) return;
      if (generated_subgroup(g, h).size() != static_cast<std::size_t>(g.order())) return;
      if (!induced_hom(q, g, h)) return;
      found = h;
      return;
    }
    for (GElem x = 0; x < g.order(); ++x) {
      f[gens[k] - 1] = x;
      self(self, k + 1);
      f[gens[k] - 1] = -1;
    }
  };
  rec(rec, 0);
  return found;
}

std::vector<std::vector<GElem>> group_isomorphisms(const FinGroup& a, const FinGroup& b, std::size_t limit) {
  std::vector<std::vector<GElem>> out;
  if (a.order() != b.order()) return out;
  Subgroup all(a.order());
  for (int k = 0; k < a.order(); ++k) all[k] = k;
  const auto gens = small_generating_set(a, all);
  std::vector<int> orders_b(b.order());
  for (GElem y = 0; y < b.order(); ++y) orders_b[y] = b.element_order(y);
  std::vector<GElem> img(gens.size(), -1);
  auto try_extend = [&]() -> std::optional<std::vector<GElem>> {
    std::vector<GElem> phi(a.order(), -1);
    phi[0] = 0;
    std::vector<GElem> queue{0};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const GElem x = a.mul(queue[k], gens[s]);
        const GElem v = b.mul(phi[queue[k]], img[s]);
        if (phi[x] < 0) {
          phi[x] = v;
          queue.push_back(x);
        } else if (phi[x] != v) {
          return std::nullopt;
        }
      }
    std::vector<char> hit(b.order(), 0);
    for (GElem v : phi) {
      if (hit[v]) return std::nullopt;
      hit[v] = 1;
    }
    return phi;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (limit && out.size() >= limit) return;
    if (k == gens.size()) {
      if (auto phi = try_extend()) out.push_back(std::move(*phi));
      return;
    }
    const int ord = a.element_order(gens[k]);
    for (GElem y = 0; y < b.order(); ++y) {
      if (orders_b[y] != ord) continue;
      img[k] = y;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

// Coset index of each element, numbered as in groups::quotient.
std::vector<int> coset_index(const FinGroup& g, const Subgroup& n) {
  std::vector<int> coset(g.order(), -1);
  int next = 0;
  for (GElem x = 0; x < g.order(); ++x) {
    if (coset[x] >= 0) continue;
    for (GElem k : n) coset[g.mul(x, k)] = next;
    ++next;
  }
  return coset;
}

}  // namespace

std::optional<Isoclinism> isoclinism_witness(const FinGroup& g, const FinGroup& h, int order_bound) {
  if (g.order() > order_bound || h.order() > order_bound)
    throw ResourceError("isoclinism_witness: group order exceeds the bound " + std::to_string(order_bound));
  const auto zg = center(g), zh = center(h);
  const auto qg = groups::quotient(g, zg), qh = groups::quotient(h, zh);
  const auto cg = coset_index(g, zg), ch = coset_index(h, zh);
  const auto dg = commutator_subgroup(g), dh = commutator_subgroup(h);
  if (dg.size() != dh.size()) return std::nullopt;
  std::vector<GElem> lift(qh.order());
  for (GElem y = h.order(); y-- > 0;) lift[ch[y]] = y;

  for (const auto& zeta : group_isomorphisms(qg, qh)) {
    std::vector<GElem> eta(g.order(), -1);
    bool ok = true;
    for (GElem a = 0; a < g.order() && ok; ++a)
      for (GElem b = 0; b < g.order() && ok; ++b) {
        const GElem c = g.commutator(a, b);
        const GElem v = h.commutator(lift[zeta[cg[a]]], lift[zeta[cg[b]]]);
        if (eta[c] < 0)
          eta[c] = v;
        else if (eta[c] != v)
          ok = false;
      }
    if (!ok) continue;
    // Extend from commutators to the subgroup they generate.
    bool grew = true;
    while (grew && ok) {
      grew = false;
      for (GElem a : dg)
        for (GElem b : dg) {
          if (eta[a] < 0 || eta[b] < 0) continue;
          const GElem c = g.mul(a, b), v = h.mul(eta[a], eta[b]);
          if (eta[c] < 0) {
            eta[c] = v;
            grew = true;
          } else if (eta[c] != v) {
            ok = false;
          }
        }
    }
    if (!ok) continue;
    std::vector<char> hit(h.order(), 0);
    for (GElem a : dg) {
      if (eta[a] < 0 || !std::binary_search(dh.begin(), dh.end(), eta[a]) || hit[eta[a]]) {
        ok = false;
        break;
      }
      hit[eta[a]] = 1;
    }
    if (!ok) continue;
    Isoclinism w;
    w.zeta = zeta;
    for (GElem a : dg) w.eta.emplace_back(a, eta[a]);
    return w;
  }
  return std::nullopt;
}

}  // namespace rank2
