#include "rank2/supportcalc.hpp"

#include <algorithm>
#include <set>

#include "rank2/envgroup.hpp"
#include "rank2/errors.hpp"

namespace rank2 {

namespace {

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Inner orbits of the subquandle on `elems`, in the labels of the ambient quandle.
std::vector<std::vector<Elem>> sub_orbits(const Quandle& x, const std::vector<Elem>& elems) {
  std::vector<std::vector<Elem>> out;
  for (const auto& o : inner_orbits(subquandle(x, elems))) {
    std::vector<Elem> mapped;
    for (Elem e : o) mapped.push_back(elems[e - 1]);
    out.push_back(std::move(mapped));
  }
  return out;
}

bool maps_onto(const Quandle& x, Elem a, const std::vector<Elem>& from, const std::vector<Elem>& to) {
  std::vector<Elem> img;
  for (Elem e : from) img.push_back(x.op(a, e));
  return sorted_unique(std::move(img)) == to;
}

// The closure of `gens` under ▷ and its inverse inside x.
std::vector<Elem> generated_subquandle(const Quandle& x, std::vector<Elem> gens) {
  std::set<Elem> s(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur)
      for (Elem b : cur) grew |= s.insert(x.op(a, b)).second | s.insert(x.op_inv(a, b)).second;
  }
  return {s.begin(), s.end()};
}

// φ_a restricted to `dom`, as the list of images.
std::vector<Elem> restricted(const Quandle& x, Elem a, const std::vector<Elem>& dom) {
  std::vector<Elem> out;
  for (Elem e : dom) out.push_back(x.op(a, e));
  return out;
}

}  // namespace

TwoOrbitContext::TwoOrbitContext(Quandle x, std::vector<Elem> support_v, std::vector<Elem> support_w)
    : x_(std::move(x)), v_(sorted_unique(std::move(support_v))), w_(sorted_unique(std::move(support_w))) {
  if (v_.empty() || w_.empty()) throw ArgumentError("context: empty support");
  role_.assign(x_.size() + 1, 0);
  auto mark = [&](const std::vector<Elem>& s, int bit) {
    for (Elem e : s) {
      if (e < 1 || e > x_.size()) throw ArgumentError("context: element out of range");
      role_[e] |= bit;
    }
    // A union of inner orbits is stable under every φ_i.
    for (Elem i = 1; i <= x_.size(); ++i)
      for (Elem e : s)
        if (!(role_[x_.op(i, e)] & bit)) throw ArgumentError("context: support is not a union of inner orbits");
  };
  mark(v_, 1);
  mark(w_, 2);
}

TwoOrbitContext TwoOrbitContext::from_orbits(const Quandle& x, int v_orbit) {
  const auto orbits = inner_orbits(x);
  if (orbits.size() != 2) throw ArgumentError("context: quandle does not have two inner orbits");
  if (v_orbit != 0 && v_orbit != 1) throw ArgumentError("context: orbit index must be 0 or 1");
  return TwoOrbitContext(x, orbits[v_orbit], orbits[1 - v_orbit]);
}

Elem TwoOrbitContext::act(std::span<const Elem> word, Elem y) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = x_.op(*it, y);
  return y;
}

Elem TwoOrbitContext::act_inv(std::span<const Elem> word, Elem y) const {
  for (Elem a : word) y = x_.op_inv(a, y);
  return y;
}

TwoOrbitContext TwoOrbitContext::swapped() const { return TwoOrbitContext(x_, w_, v_); }

bool TwoOrbitContext::supports_commute() const {
  for (Elem a : v_)
    for (Elem b : w_)
      if (x_.op(a, b) != b) return false;
  return true;
}

namespace {

void check_tuple(const TwoOrbitContext& ctx, const DegreeTuple& t) {
  if (t.empty()) throw ArgumentError("degree tuple must end with a W-degree");
  for (std::size_t k = 0; k + 1 < t.size(); ++k)
    if (!ctx.in_v(t[k])) throw ArgumentError("degree tuple: V-slot outside supp V");
  if (!ctx.in_w(t.back())) throw ArgumentError("degree tuple: W-slot outside supp W");
}

}  // namespace

SupportMultiset phi_support_expand(const TwoOrbitContext& ctx, Elem p, std::span<const DegreeTuple> t_support) {
  if (!ctx.in_v(p)) throw ArgumentError("phi_support_expand: p outside supp V");
  const Quandle& x = ctx.quandle();
  SupportMultiset out;
  if (t_support.empty()) return out;
  const std::size_t len = t_support.front().size();
  for (const auto& t : t_support) {
    check_tuple(ctx, t);
    if (t.size() != len) throw ArgumentError("phi_support_expand: tuples of different lengths");
    for (std::size_t j = 0; j < len; ++j) {
      DegreeTuple first, second;
      for (std::size_t k = 0; k < j; ++k) first.push_back(x.op(p, t[k]));
      second = first;
      first.push_back(p);
      first.insert(first.end(), t.begin() + j, t.end());
      std::vector<Elem> word{p};
      word.insert(word.end(), t.begin() + j, t.end());
      second.push_back(ctx.act(word, p));
      for (std::size_t k = j; k < len; ++k) second.push_back(x.op(p, t[k]));
      ++out[first];
      ++out[second];
    }
  }
  return out;
}

std::optional<DegreeTuple> degrees_certificate(const TwoOrbitContext& ctx, Elem p, int i, const DegreeTuple& known) {
  check_tuple(ctx, known);
  if (!ctx.in_v(p)) throw ArgumentError("degrees_certificate: p outside supp V");
  const int len = static_cast<int>(known.size());  // m + 1
  if (i < 1 || i > len) throw ArgumentError("degrees_certificate: position out of range");
  const Quandle& x = ctx.quandle();
  if (x.op(known[i - 1], p) == p) return std::nullopt;
  for (int j = i + 1; j <= len; ++j)
    if (x.op(known[j - 1], p) != p) return std::nullopt;
  for (int j = 1; j < len; ++j)
    if (known[j - 1] == p) return std::nullopt;
  for (int j = 1; j < i; ++j)
    if (ctx.act_inv(std::span(known).subspan(j), known[j - 1]) == p) return std::nullopt;
  DegreeTuple out;
  for (int k = 1; k < i; ++k) out.push_back(x.op(p, known[k - 1]));
  out.push_back(p);
  out.insert(out.end(), known.begin() + (i - 1), known.end());
  return out;
}

std::vector<CertifiedDegree> level_zero_seeds(const TwoOrbitContext& ctx) {
  std::vector<CertifiedDegree> out;
  for (Elem s : ctx.support_w()) out.push_back({{s}, {s}});
  return out;
}

std::optional<std::vector<CertifiedDegree>> degree_chain(const TwoOrbitContext& ctx, int target,
                                                         std::span<const CertifiedDegree> seeds) {
  if (seeds.empty()) return std::nullopt;
  const std::size_t level0 = seeds.front().degree.size() - 1;
  struct Node {
    CertifiedDegree c;
    int parent;
  };
  std::vector<Node> nodes;
  std::vector<int> frontier;
  std::set<DegreeTuple> seen;
  for (const auto& s : seeds) {
    if (s.degree.size() != level0 + 1) throw ArgumentError("degree_chain: seeds of different levels");
    check_tuple(ctx, s.degree);
    if (seen.insert(s.degree).second) {
      frontier.push_back(static_cast<int>(nodes.size()));
      nodes.push_back({s, -1});
    }
  }
  auto unwind = [&](int k) {
    std::vector<CertifiedDegree> chain;
    for (; k >= 0; k = nodes[k].parent) chain.push_back(nodes[k].c);
    std::reverse(chain.begin(), chain.end());
    return chain;
  };
  for (int level = static_cast<int>(level0); !frontier.empty(); ++level) {
    if (level >= target) return unwind(frontier.front());
    std::vector<int> next;
    seen.clear();
    for (int k : frontier)
      for (Elem p : ctx.support_v())
        for (int i = 1; i <= level + 1; ++i) {
          auto d = degrees_certificate(ctx, p, i, nodes[k].c.degree);
          if (!d || !seen.insert(*d).second) continue;
          DegreeTuple src{p};
          src.insert(src.end(), nodes[k].c.source.begin(), nodes[k].c.source.end());
          next.push_back(static_cast<int>(nodes.size()));
          nodes.push_back({{std::move(*d), std::move(src)}, k});
        }
    frontier = std::move(next);
  }
  return std::nullopt;
}

bool certify_adV4_nonzero_comm(const TwoOrbitContext& ctx, Elem r1, Elem r2, Elem r3, Elem r4, Elem s) {
  for (Elem r : {r1, r2, r3, r4})
    if (!ctx.in_v(r)) throw ArgumentError("certificate: r outside supp V");
  if (!ctx.in_w(s)) throw ArgumentError("certificate: s outside supp W");
  if (!ctx.supports_commute()) return false;
  const Quandle& x = ctx.quandle();
  const auto base = degrees_certificate(ctx, r3, 1, {r4, s});
  if (!base) return false;
  if (r2 == r3 || r2 == r4 || r2 == x.op_inv(r4, r3) || x.op(r2, r4) == r4) return false;
  for (Elem bad : {x.op(r2, r3), r2, r4, x.op_inv(r4, r2), x.op_inv(r4, r3)})
    if (r1 == bad) return false;
  return x.op(r1, r4) != r4;
}

std::optional<std::array<Elem, 5>> find_comm_certificate(const TwoOrbitContext& ctx, Elem r4, Elem s) {
  for (Elem r3 : ctx.support_v())
    for (Elem r2 : ctx.support_v())
      for (Elem r1 : ctx.support_v())
        if (certify_adV4_nonzero_comm(ctx, r1, r2, r3, r4, s)) return std::array<Elem, 5>{r1, r2, r3, r4, s};
  return std::nullopt;
}

bool certify_adV4_nonzero_nc(const TwoOrbitContext& ctx, Elem r1, Elem r2, Elem r3, Elem s) {
  for (Elem r : {r1, r2, r3})
    if (!ctx.in_v(r)) throw ArgumentError("certificate: r outside supp V");
  if (!ctx.in_w(s)) throw ArgumentError("certificate: s outside supp W");
  const Quandle& x = ctx.quandle();
  if (x.op(r2, r3) == r3) return false;
  const std::array<Elem, 2> r32{r3, r2};
  for (Elem bad : {ctx.act(r32, r3), x.op(r3, r2), r3, x.op_inv(s, r3), x.op_inv(s, r2)})
    if (r1 == bad) return false;
  for (Elem y : {x.op(s, r2), x.op(s, r3)})
    if (y == r2 || y == r3) return false;
  return x.op(r1, s) != s || x.op(r1, r3) != r3;
}

std::optional<std::array<Elem, 4>> find_nc_certificate(const TwoOrbitContext& ctx) {
  for (Elem s : ctx.support_w())
    for (Elem r3 : ctx.support_v())
      for (Elem r2 : ctx.support_v())
        for (Elem r1 : ctx.support_v())
          if (certify_adV4_nonzero_nc(ctx, r1, r2, r3, s)) return std::array<Elem, 4>{r1, r2, r3, s};
  return std::nullopt;
}

SizeBound size_bound_check(const TwoOrbitContext& ctx, int m) {
  if (m < 1) throw ArgumentError("size_bound_check: m must be positive");
  const Quandle& x = ctx.quandle();
  SizeBound b;
  const auto orbits = sub_orbits(x, ctx.support_v());
  b.applicable = orbits.size() == 1;
  if (orbits.size() == 2) {
    b.applicable = true;
    for (Elem a : ctx.support_w())
      b.applicable &= maps_onto(x, a, orbits[0], orbits[1]) && maps_onto(x, a, orbits[1], orbits[0]);
  }
  b.bound = ctx.supports_commute() ? 2 * m - 1 : 2 * m;
  b.exceeds = b.applicable && static_cast<int>(ctx.support_v().size()) > b.bound;
  return b;
}

bool NecessaryReport::all_passed() const {
  return std::all_of(items.begin(), items.end(), [](const ConditionResult& r) { return r.passed; });
}

NecessaryReport nc_necessary_conditions(const TwoOrbitContext& ctx) {
  NecessaryReport rep;
  rep.applicable = !ctx.supports_commute();
  if (!rep.applicable) return rep;
  const Quandle& x = ctx.quandle();
  const auto& sv = ctx.support_v();
  const auto& sw = ctx.support_w();
  const int n = x.size();

  ConditionResult c1{"v_commutative", true, {}};
  for (Elem a : sv)
    for (Elem b : sv)
      if (c1.passed && x.op(a, b) != b) c1 = {"v_commutative", false, {a, b}};

  ConditionResult c2{"supports_distinct", sv != sw, {}};

  ConditionResult c3{"v_is_w_orbit", true, {}};
  for (Elem g : sv) {
    std::set<Elem> orb{g};
    std::vector<Elem> stack{g};
    while (!stack.empty()) {
      const Elem y = stack.back();
      stack.pop_back();
      for (Elem s : sw)
        for (Elem z : {x.op(s, y), x.op_inv(s, y)})
          if (orb.insert(z).second) stack.push_back(z);
    }
    if (std::vector<Elem>(orb.begin(), orb.end()) != sv) {
      c3 = {"v_is_w_orbit", false, {g}};
      break;
    }
  }

  ConditionResult c4{"transposition_on_v", true, {}};
  for (Elem s : sw) {
    std::vector<Elem> moved;
    for (Elem a : sv)
      if (x.op(s, a) != a) moved.push_back(a);
    if (moved.size() != 2 || x.op(s, moved[0]) != moved[1]) {
      c4 = {"transposition_on_v", false, {s}};
      break;
    }
  }

  // Non-commuting pairs (g, h).
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem g : sv)
    for (Elem h : sw)
      if (x.op(g, h) != h) pairs.emplace_back(g, h);

  ConditionResult c5{"square_relations", true, {}};
  for (auto [g, h] : pairs) {
    bool ok = x.op(h, x.op(h, g)) == g;
    const std::array<Elem, 4> ghgh{g, h, g, h}, hghg{h, g, h, g};
    for (Elem y = 1; ok && y <= n; ++y) ok = ctx.act(ghgh, y) == ctx.act(hghg, y);
    if (!ok) {
      c5 = {"square_relations", false, {g, h}};
      break;
    }
  }

  ConditionResult c6{"moved_by_v", true, {}};
  for (auto [g, h] : pairs) {
    const std::vector<Elem> expect = sorted_unique({g, x.op(h, g)});
    Elem y = h;
    int m = 0;
    do {
      std::vector<Elem> moving;
      for (Elem a : sv)
        if (x.op(a, y) != y) moving.push_back(a);
      if (moving != expect) {
        c6 = {"moved_by_v", false, {g, h, m}};
        break;
      }
      y = x.op(g, y);
      ++m;
    } while (y != h);
    if (!c6.passed) break;
  }

  rep.items = {c1, c2, c3, c4, c5, c6};
  return rep;
}

ConditionResult decomposition_condition(const TwoOrbitContext& ctx) {
  const Quandle& x = ctx.quandle();
  const auto orbits = sub_orbits(x, ctx.support_w());
  ConditionResult r{"w_orbits_exchanged", true, {}};
  if (orbits.size() == 1) return r;
  if (orbits.size() != 2) return {r.id, false, {static_cast<Elem>(orbits.size())}};
  for (Elem a : ctx.support_v())
    if (!maps_onto(x, a, orbits[0], orbits[1]) || !maps_onto(x, a, orbits[1], orbits[0])) return {r.id, false, {a}};
  return r;
}

ConditionResult two_generator_condition(const TwoOrbitContext& ctx) {
  const Quandle& x = ctx.quandle();
  const auto& sv = ctx.support_v();
  const auto& sw = ctx.support_w();
  const std::size_t nv = sv.size();
  ConditionResult r{"two_generated_w", true, {}};
  for (Elem a : sw)
    for (Elem b : sw) {
      if (a >= b || generated_subquandle(x, {a, b}) != sw) continue;
      const auto pa = restricted(x, a, sv), pb = restricted(x, b, sv);
      bool ok;
      if (pa == pb) {
        ok = nv == 2;
      } else {
        bool commute = true;
        for (Elem e : sv) commute &= x.op(a, x.op(b, e)) == x.op(b, x.op(a, e));
        ok = nv == 3 && !commute;
      }
      if (!ok) return {r.id, false, {a, b}};
    }
  return r;
}

namespace {

std::vector<CertifiedDegree> pair_seeds(const TwoOrbitContext& ctx) {
  std::vector<CertifiedDegree> out;
  for (Elem r : ctx.support_v())
    for (Elem s : ctx.support_w()) out.push_back({{r, s}, {r, s}});
  return out;
}

// A chain to `target` from every seed: with commuting supports only some
// unknown pair (r, s) has Q_1(r, s) ≠ 0, so every candidate must lead on.
std::optional<std::vector<Elem>> chain_from_every_pair(const TwoOrbitContext& ctx, int target) {
  std::vector<Elem> witness;
  for (const auto& seed : pair_seeds(ctx)) {
    auto c = degree_chain(ctx, target, std::span(&seed, 1));
    if (!c) return std::nullopt;
    if (witness.empty()) witness = c->back().degree;
  }
  return witness;
}

std::optional<std::vector<Elem>> chain_from_zero(const TwoOrbitContext& ctx, int target) {
  const auto seeds = level_zero_seeds(ctx);
  auto c = degree_chain(ctx, target, seeds);
  if (!c) return std::nullopt;
  return c->back().degree;
}

}  // namespace

Candidate evaluate_candidate(const TwoOrbitContext& ctx, const ClassifyOptions& opts) {
  Candidate c{ctx.quandle(), ctx.support_v(), ctx.support_w(), ctx.supports_commute(), {}, false, {}, {}, false, {}};
  const Quandle& x = ctx.quandle();
  const TwoOrbitContext rev = ctx.swapped();
  auto record = [&](std::string rule, bool applicable, bool rejected, std::vector<Elem> witness = {}) {
    c.audit.push_back({std::move(rule), applicable, applicable && rejected, std::move(witness)});
  };
  auto record_opt = [&](std::string rule, const std::optional<std::vector<Elem>>& w) {
    record(std::move(rule), true, w.has_value(), w.value_or(std::vector<Elem>{}));
  };
  auto record_condition = [&](const ConditionResult& r) { record(r.id, true, !r.passed, r.witness); };

  record("noncommuting_pair", opts.require_noncommuting_pair, x.is_trivial());
  record("supports_distinct", true, ctx.support_v() == ctx.support_w());

  const auto vb = size_bound_check(ctx, 1), wb = size_bound_check(rev, 3);
  if (c.commuting) {
    const bool vi = is_indecomposable(subquandle(x, ctx.support_v()));
    const bool wi = is_indecomposable(subquandle(x, ctx.support_w()));
    record("v_indecomposable", true, !vi);
    record("w_indecomposable", true, !wi);
    record("size_bound_v", vb.applicable, vb.exceeds, {vb.bound});
    record("size_bound_w", wb.applicable, wb.exceeds, {wb.bound});
    record_opt("adV2_degree_chain", chain_from_every_pair(ctx, 2));
    // Every (r_4, s) must admit a certificate, as with the chains.
    auto comm = [&]() -> std::optional<std::vector<Elem>> {
      std::optional<std::vector<Elem>> first;
      for (Elem r4 : rev.support_v())
        for (Elem s : rev.support_w()) {
          auto w = find_comm_certificate(rev, r4, s);
          if (!w) return std::nullopt;
          if (!first) first = std::vector<Elem>(w->begin(), w->end());
        }
      return first;
    }();
    record_opt("adW4_comm_certificate", comm);
    record_opt("adW4_degree_chain", chain_from_every_pair(rev, 4));
  } else {
    for (const auto& item : nc_necessary_conditions(ctx).items) record_condition(item);
    record_condition(decomposition_condition(ctx));
    record_condition(two_generator_condition(ctx));
    record("size_bound_v", vb.applicable, vb.exceeds, {vb.bound});
    record("size_bound_w", wb.applicable, wb.exceeds, {wb.bound});
    record_opt("adV2_degree_chain", chain_from_zero(ctx, 2));
    const auto nc = find_nc_certificate(rev);
    record_opt("adW4_nc_certificate",
               nc ? std::optional<std::vector<Elem>>(std::vector<Elem>(nc->begin(), nc->end())) : std::nullopt);
    record_opt("adW4_degree_chain", chain_from_zero(rev, 4));
  }
  for (const auto& e : c.audit)
    if (e.rejected) {
      c.rejected_by = e.rule;
      break;
    }
  c.survived = c.rejected_by.empty();
  c.catalog_name = catalog_match(x);
  return c;
}

std::vector<const Candidate*> ClassifyReport::survivors() const {
  std::vector<const Candidate*> out;
  for (const auto& c : candidates)
    if (c.survived) out.push_back(&c);
  return out;
}

std::vector<std::string> ClassifyReport::survivor_names(std::optional<bool> commuting) const {
  std::set<std::string> names;
  for (const auto* c : survivors())
    if (!commuting || c->commuting == *commuting) names.insert(c->catalog_name.value_or("unmatched"));
  return {names.begin(), names.end()};
}

std::optional<std::string> envelope_post_filter(const Quandle& q) {
  for (const auto& name : z_quandle_names()) {
    const auto env = finite_enveloping_group(catalog(name));
    if (find_quandle_embedding(q, env.group)) return name;
  }
  return std::nullopt;
}

ClassifyReport classify(const ClassifyOptions& opts) {
  if (opts.n_max > 8) throw ResourceError("classify: n_max above 8 is out of range");
  if (opts.n_max < 1) throw ArgumentError("classify: n_max must be positive");
  ClassifyReport rep;
  rep.n_max = opts.n_max;
  for (int n = 2; n <= opts.n_max; ++n)
    for (const auto& q : enumerate_quandles(n, true)) {
      ++rep.quandles_examined;
      if (inner_orbits(q).size() != 2) continue;
      for (int v = 0; v < 2; ++v) {
        ++rep.candidates_examined;
        Candidate c = evaluate_candidate(TwoOrbitContext::from_orbits(q, v), opts);
        const auto& z = z_quandle_names();
        c.flagged = c.survived && (!c.catalog_name || std::find(z.begin(), z.end(), *c.catalog_name) == z.end());
        if (c.flagged) {
          c.embeds_in = envelope_post_filter(q);
          if (!c.embeds_in) {
            c.survived = false;
            c.rejected_by = "envelope_post_filter";
          }
        }
        rep.candidates.push_back(std::move(c));
      }
    }
  return rep;
}

}  // namespace rank2
