#include "rank2/ydmod.hpp"

#include <algorithm>
#include <numeric>

#include "rank2/errors.hpp"

namespace rank2 {

namespace {

bool maps_degrees(const FinGroup& g, GElem s, const SparseMatrix& m, const std::vector<GElem>& degrees) {
  for (int c = 0; c < m.cols(); ++c) {
    const GElem target = g.conj(s, degrees[c]);
    for (const auto& [r, v] : m.column(c))
      if (degrees[r] != target) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- YDModule

YDModule::YDModule(std::shared_ptr<const FinGroup> group, std::vector<GElem> degrees,
                   std::vector<SparseMatrix> generator_action) {
  if (!group) throw ArgumentError("YDModule: null group");
  const FinGroup& g = *group;
  const int dim = static_cast<int>(degrees.size());
  if (dim == 0) throw ArgumentError("YDModule: dimension must be positive");
  for (GElem d : degrees)
    if (d < 0 || d >= g.order()) throw ArgumentError("YDModule: degree out of range");
  const auto& gens = g.generators();
  if (generator_action.size() != gens.size())
    throw ArgumentError("YDModule: need one action matrix per group generator");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& m = generator_action[k];
    if (m.rows() != dim || m.cols() != dim) throw ArgumentError("YDModule: action matrix has wrong size");
    if (!maps_degrees(g, gens[k], m, degrees))
      throw ArgumentError("YDModule: action of " + g.name(gens[k]) + " does not conjugate degrees");
  }

  // ρ(s x) = ρ(s) ρ(x) along a BFS, then every generator step is re-checked,
  // which makes ρ a homomorphism from the group.
  std::vector<SparseMatrix> elem(g.order());
  std::vector<char> seen(g.order(), 0);
  elem[0] = SparseMatrix::identity(dim);
  seen[0] = 1;
  std::vector<GElem> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const GElem x = queue[q];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const GElem y = g.mul(gens[k], x);
      if (seen[y]) continue;
      seen[y] = 1;
      elem[y] = generator_action[k] * elem[x];
      queue.push_back(y);
    }
  }
  if (static_cast<int>(queue.size()) != g.order()) throw ArgumentError("YDModule: group generators do not generate");
  for (GElem x = 0; x < g.order(); ++x)
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (!(generator_action[k] * elem[x] == elem[g.mul(gens[k], x)]))
        throw ArgumentError("YDModule: action matrices do not define a representation");

  d_ = std::make_shared<const Data>(Data{std::move(group), std::move(degrees), std::move(generator_action), std::move(elem)});
}

// ---------------------------------------------------------------- characters

std::vector<GElem> centralizer_generators(const FinGroup& g, GElem x) {
  return small_generating_set(g, centralizer(g, x));
}

std::vector<CycNum> extend_character(const FinGroup& g, std::span<const GElem> gens, std::span<const CycNum> values) {
  if (gens.size() != values.size()) throw ArgumentError("character: one value per generator required");
  std::vector<CycNum> chi(g.order());
  std::vector<char> seen(g.order(), 0);
  chi[0] = 1;
  seen[0] = 1;
  std::vector<GElem> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const GElem x = queue[q];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const GElem y = g.mul(gens[k], x);
      const CycNum v = values[k] * chi[x];
      if (!seen[y]) {
        seen[y] = 1;
        chi[y] = v;
        queue.push_back(y);
      } else if (!(chi[y] == v)) {
        throw ArgumentError("character: values are not multiplicative on the subgroup");
      }
    }
  }
  return chi;
}

std::vector<CharacterChoice> enumerate_characters(const FinGroup& g, GElem x) {
  const auto gens = centralizer_generators(g, x);
  int n = 1;
  for (GElem s : gens) n = std::lcm(n, g.element_order(s));
  std::vector<CharacterChoice> out;
  std::vector<long> powers(gens.size(), 0);
  while (true) {
    std::vector<CycNum> values;
    for (long p : powers) values.push_back(CycNum::zeta(n, p));
    try {
      extend_character(g, gens, values);
      out.push_back({n, powers, values});
    } catch (const ArgumentError&) {
    }
    // Next assignment: the value on s is a root of unity of order dividing |s|.
    std::size_t k = 0;
    for (; k < gens.size(); ++k) {
      const long step = n / g.element_order(gens[k]);
      powers[k] += step;
      if (powers[k] < n) break;
      powers[k] = 0;
    }
    if (k == gens.size()) break;
  }
  return out;
}

YDModule induced_module(std::shared_ptr<const FinGroup> gp, GElem r, std::span<const CycNum> character) {
  if (!gp) throw ArgumentError("induced_module: null group");
  const FinGroup& g = *gp;
  if (r < 0 || r >= g.order()) throw ArgumentError("induced_module: class representative out of range");
  const auto cgens = centralizer_generators(g, r);
  const auto chi = extend_character(g, cgens, character);
  const Subgroup cent = centralizer(g, r);

  auto cls = conjugacy_class(g, r);
  std::sort(cls.begin(), cls.end());
  const int dim = static_cast<int>(cls.size());
  std::vector<int> pos(g.order(), -1);
  for (int k = 0; k < dim; ++k) pos[cls[k]] = k;
  std::vector<GElem> rep(dim, -1);
  for (GElem t = 0; t < g.order(); ++t) {
    const int k = pos[g.conj(t, r)];
    if (rep[k] < 0) rep[k] = t;
  }

  std::vector<SparseMatrix> action;
  for (GElem s : g.generators()) {
    SparseMatrix m(dim, dim);
    for (int k = 0; k < dim; ++k) {
      const int l = pos[g.conj(s, cls[k])];
      const GElem c = g.mul(g.mul(g.inv(rep[l]), s), rep[k]);
      if (!std::binary_search(cent.begin(), cent.end(), c))
        throw InvariantViolation("induced_module: coset bookkeeping left the centralizer");
      m.add(l, k, chi[c]);
    }
    action.push_back(std::move(m));
  }
  return YDModule(std::move(gp), cls, std::move(action));
}

std::pair<YDModule, YDModule> diagonal_pair(int n, const std::array<std::array<long, 2>, 2>& powers) {
  if (n < 1) throw ArgumentError("diagonal_pair: n must be positive");
  auto g = std::make_shared<const FinGroup>(groups::abelian({n, n}));
  const GElem a = g->find("(" + std::to_string(1 % n) + ",0)");
  const GElem b = g->find("(0," + std::to_string(1 % n) + ")");
  // χ_j(a) = q_{1j}, χ_j(b) = q_{2j}.
  auto make = [&](int j, GElem degree) {
    std::vector<SparseMatrix> action;
    for (GElem s : g->generators()) {
      SparseMatrix m(1, 1);
      long e = 0;
      if (s == a) e = powers[0][j];
      if (s == b) e = powers[1][j];
      m.add(0, 0, CycNum::zeta(n, e));
      action.push_back(std::move(m));
    }
    return YDModule(g, {degree}, std::move(action));
  };
  return {make(0, a), make(1, b)};
}

YDModule direct_sum(const YDModule& a, const YDModule& b) {
  if (a.group_ptr() != b.group_ptr() && a.group().table() != b.group().table())
    throw ArgumentError("direct_sum: modules over different groups");
  std::vector<GElem> degrees = a.degrees();
  degrees.insert(degrees.end(), b.degrees().begin(), b.degrees().end());
  std::vector<SparseMatrix> action;
  for (std::size_t k = 0; k < a.generator_action().size(); ++k) {
    SparseMatrix m(a.dim() + b.dim(), a.dim() + b.dim());
    for (int c = 0; c < a.dim(); ++c)
      for (const auto& [r, v] : a.generator_action()[k].column(c)) m.add(r, c, v);
    for (int c = 0; c < b.dim(); ++c)
      for (const auto& [r, v] : b.generator_action()[k].column(c)) m.add(a.dim() + r, a.dim() + c, v);
    action.push_back(std::move(m));
  }
  return YDModule(a.group_ptr(), std::move(degrees), std::move(action));
}

// ---------------------------------------------------------------- supports

SupportQuandle support_quandle(std::span<const YDModule> modules) {
  if (modules.empty()) throw ArgumentError("support_quandle: no modules");
  const FinGroup& g = modules[0].group();
  std::vector<GElem> labels;
  for (const auto& m : modules) labels.insert(labels.end(), m.degrees().begin(), m.degrees().end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const int n = static_cast<int>(labels.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const GElem c = g.conj(labels[i], labels[j]);
      auto it = std::lower_bound(labels.begin(), labels.end(), c);
      if (it == labels.end() || *it != c) throw InvariantViolation("support not closed under conjugation");
      table[i * n + j] = static_cast<int>(it - labels.begin()) + 1;
    }
  return {Quandle(n, std::move(table)), std::move(labels)};
}

SupportQuandle support_quandle(const YDModule& v) { return support_quandle(std::span<const YDModule>(&v, 1)); }

// ---------------------------------------------------------------- braiding

SparseMatrix braiding_sparse(const YDModule& v, const YDModule& w) {
  if (v.group_ptr() != w.group_ptr() && v.group().table() != w.group().table())
    throw ArgumentError("braiding: modules over different groups");
  const int dv = v.dim(), dw = w.dim();
  SparseMatrix c(dv * dw, dv * dw);
  for (int a = 0; a < dv; ++a) {
    const SparseMatrix& act = w.action(v.degree(a));
    for (int b = 0; b < dw; ++b)
      for (const auto& [r, x] : act.column(b)) c.add(r * dv + a, a * dw + b, x);
  }
  return c;
}

CycMatrix braiding(const YDModule& v, const YDModule& w) { return braiding_sparse(v, w).to_dense(); }

// ---------------------------------------------------------------- tensors

BraidedTensor::BraidedTensor(std::vector<YDModule> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ArgumentError("BraidedTensor: no factors");
  for (const auto& f : factors_)
    if (f.group_ptr() != factors_[0].group_ptr() && f.group().table() != factors_[0].group().table())
      throw ArgumentError("BraidedTensor: factors over different groups");
  stride_.assign(factors_.size(), 1);
  long dim = 1;
  for (std::size_t k = factors_.size(); k-- > 0;) {
    stride_[k] = static_cast<int>(dim);
    dim *= factors_[k].dim();
    if (dim > (1L << 30)) throw ResourceError("BraidedTensor: dimension overflow");
  }
  dim_ = static_cast<int>(dim);
}

int BraidedTensor::index(std::span<const int> tuple) const {
  if (tuple.size() != factors_.size()) throw ArgumentError("BraidedTensor: tuple length mismatch");
  int x = 0;
  for (std::size_t k = 0; k < tuple.size(); ++k) x += tuple[k] * stride_[k];
  return x;
}

std::vector<int> BraidedTensor::tuple(int index) const {
  std::vector<int> t(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    t[k] = index / stride_[k];
    index %= stride_[k];
  }
  return t;
}

GElem BraidedTensor::degree(int index) const {
  const FinGroup& g = factors_[0].group();
  GElem d = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    d = g.mul(d, factors_[k].degree(index / stride_[k]));
    index %= stride_[k];
  }
  return d;
}

std::map<GElem, std::vector<int>> BraidedTensor::degree_blocks() const {
  std::map<GElem, std::vector<int>> blocks;
  for (int x = 0; x < dim_; ++x) blocks[degree(x)].push_back(x);
  return blocks;
}

BraidedTensor BraidedTensor::swapped(int i) const {
  if (i < 1 || i >= legs()) throw ArgumentError("BraidedTensor: leg out of range");
  auto f = factors_;
  std::swap(f[i - 1], f[i]);
  return BraidedTensor(std::move(f));
}

SparseMatrix BraidedTensor::braid_at(int i) const {
  if (i < 1 || i >= legs()) throw ArgumentError("BraidedTensor: leg out of range");
  int head = 1, tail = 1;
  for (int k = 0; k < i - 1; ++k) head *= factors_[k].dim();
  for (int k = i + 1; k < legs(); ++k) tail *= factors_[k].dim();
  return embed(braiding_sparse(factors_[i - 1], factors_[i]), head, tail);
}

SparseMatrix BraidedTensor::embed(const SparseMatrix& m, int head, int tail) {
  const int mid = m.rows();
  if (m.cols() != mid) throw ArgumentError("embed: square block required");
  const int dim = head * mid * tail;
  SparseMatrix out(dim, dim);
  for (int h = 0; h < head; ++h)
    for (int c = 0; c < mid; ++c)
      for (const auto& [r, v] : m.column(c))
        for (int t = 0; t < tail; ++t) out.add((h * mid + r) * tail + t, (h * mid + c) * tail + t, v);
  return out;
}

bool braid_relation_holds(const YDModule& u, const YDModule& v, const YDModule& w) {
  // Left: c_{1,2} c_{2,3} c_{1,2} starting from U⊗V⊗W.
  const BraidedTensor s0({u, v, w});
  const BraidedTensor s1 = s0.swapped(1);  // V U W
  const BraidedTensor s2 = s1.swapped(2);  // V W U
  const SparseMatrix left = s2.braid_at(1) * s1.braid_at(2) * s0.braid_at(1);
  const BraidedTensor t1 = s0.swapped(2);  // U W V
  const BraidedTensor t2 = t1.swapped(1);  // W U V
  const SparseMatrix right = t2.braid_at(2) * t1.braid_at(1) * s0.braid_at(2);
  return left == right;
}

bool yd_compatible(const YDModule& v) {
  const FinGroup& g = v.group();
  for (std::size_t k = 0; k < g.generators().size(); ++k)
    if (!maps_degrees(g, g.generators()[k], v.generator_action()[k], v.degrees())) return false;
  return true;
}

bool braiding_is_block_monomial(const YDModule& v, const YDModule& w) {
  const FinGroup& g = v.group();
  const SparseMatrix c = braiding_sparse(v, w);
  for (int a = 0; a < v.dim(); ++a)
    for (int b = 0; b < w.dim(); ++b) {
      const GElem gd = v.degree(a), hd = w.degree(b);
      for (const auto& [r, x] : c.column(a * w.dim() + b)) {
        const int wb = r / v.dim(), va = r % v.dim();
        if (w.degree(wb) != g.conj(gd, hd) || v.degree(va) != gd) return false;
      }
    }
  return true;
}

}  // namespace rank2
