#include "rank2/quandle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "rank2/errors.hpp"

namespace rank2 {

namespace {

bool axioms_hold(int n, const std::vector<int>& t) {
  auto at = [&](int i, int j) { return t[(i - 1) * n + (j - 1)]; };
  for (int x : t)
    if (x < 1 || x > n) return false;
  for (int i = 1; i <= n; ++i) {
    if (at(i, i) != i) return false;
    std::vector<char> seen(n, 0);
    for (int j = 1; j <= n; ++j) {
      int v = at(i, j);
      if (seen[v - 1]) return false;
      seen[v - 1] = 1;
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (at(i, at(j, k)) != at(at(i, j), at(i, k))) return false;
  return true;
}

}  // namespace

Quandle::Quandle(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {
  if (n < 1 || static_cast<int>(table_.size()) != n * n)
    throw ArgumentError("quandle table must have n*n entries with n >= 1");
  if (!axioms_hold(n_, table_)) throw ArgumentError("table violates the quandle axioms");
  inv_.assign(n_ * n_, 0);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) inv_[(i - 1) * n_ + (op(i, j) - 1)] = j;
}

Quandle Quandle::from_rows(const std::vector<Perm>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> t;
  t.reserve(n * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw ArgumentError("row length mismatch");
    t.insert(t.end(), r.begin(), r.end());
  }
  return Quandle(n, std::move(t));
}

Quandle Quandle::from_cycles(const std::vector<std::string>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Perm> perms;
  for (const auto& r : rows) perms.push_back(perm::parse_cycles(r, n));
  return from_rows(perms);
}

Quandle Quandle::trivial(int n) {
  if (n < 1) throw ArgumentError("trivial quandle needs n >= 1");
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = j + 1;
  return Quandle(n, std::move(t));
}

Elem Quandle::left(Elem i, Elem j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw ArgumentError("quandle element out of range");
  return op(i, j);
}

Elem Quandle::right(Elem j, Elem i) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw ArgumentError("quandle element out of range");
  return op_inv(i, j);
}

Perm Quandle::row(Elem i) const {
  if (i < 1 || i > n_) throw ArgumentError("quandle element out of range");
  return Perm(table_.begin() + (i - 1) * n_, table_.begin() + i * n_);
}

std::vector<std::vector<int>> Quandle::rows_2d() const {
  std::vector<std::vector<int>> r;
  for (int i = 1; i <= n_; ++i) r.push_back(row(i));
  return r;
}

bool Quandle::is_crossed_set() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (op(i, j) == j && op(j, i) != i) return false;
  return true;
}

bool Quandle::is_trivial() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (op(i, j) != j) return false;
  return true;
}

bool is_quandle(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) return false;
  std::vector<int> flat;
  for (const auto& r : table) {
    if (static_cast<int>(r.size()) != n) return false;
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return axioms_hold(n, flat);
}

bool is_crossed_set(const Quandle& q) { return q.is_crossed_set(); }

std::vector<std::vector<Elem>> inner_orbits(const Quandle& q) {
  const int n = q.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int a = find(j - 1), b = find(q.op(i, j) - 1);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<Elem>> groups;
  for (int x = 0; x < n; ++x) groups[find(x)].push_back(x + 1);
  std::vector<std::vector<Elem>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

bool is_indecomposable(const Quandle& q) { return inner_orbits(q).size() == 1; }

Quandle subquandle(const Quandle& q, std::span<const Elem> elements) {
  const int k = static_cast<int>(elements.size());
  std::vector<int> label(q.size() + 1, 0);
  for (int a = 0; a < k; ++a) {
    Elem e = elements[a];
    if (e < 1 || e > q.size() || label[e]) throw ArgumentError("subquandle: bad element list");
    label[e] = a + 1;
  }
  std::vector<int> t(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int v = label[q.op(elements[a], elements[b])];
      if (!v) throw ArgumentError("subquandle: subset not closed under the operation");
      t[a * k + b] = v;
    }
  return Quandle(k, std::move(t));
}

bool is_isomorphism(const Quandle& a, const Quandle& b, const QuandleIso& f) {
  if (a.size() != b.size() || static_cast<int>(f.map.size()) != a.size() || !perm::is_permutation(f.map))
    return false;
  for (int i = 1; i <= a.size(); ++i)
    for (int j = 1; j <= a.size(); ++j)
      if (f(a.op(i, j)) != b.op(f(i), f(j))) return false;
  return true;
}

namespace {

// Per-element isomorphism invariant: cycle type of φ_i, inner-orbit size, and
// the number of j with j ▷ i = i.
std::vector<std::vector<int>> element_invariants(const Quandle& q) {
  const int n = q.size();
  std::vector<int> orbit_size(n + 1);
  for (const auto& o : inner_orbits(q))
    for (Elem e : o) orbit_size[e] = static_cast<int>(o.size());
  std::vector<std::vector<int>> inv(n + 1);
  for (int i = 1; i <= n; ++i) {
    auto ct = perm::cycle_type(q.row(i));
    int stab = 0;
    for (int j = 1; j <= n; ++j) stab += q.op(j, i) == i;
    inv[i] = std::move(ct);
    inv[i].push_back(-orbit_size[i]);
    inv[i].push_back(-stab);
  }
  return inv;
}

}  // namespace

std::optional<QuandleIso> isomorphic(const Quandle& a, const Quandle& b) {
  const int n = a.size();
  if (b.size() != n) return std::nullopt;
  auto ia = element_invariants(a), ib = element_invariants(b);
  {
    auto sa = std::vector<std::vector<int>>(ia.begin() + 1, ia.end());
    auto sb = std::vector<std::vector<int>>(ib.begin() + 1, ib.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> f(n + 1, 0), used(n + 1, 0);
  std::vector<int> trail;

  // Assign x -> y and close under f(i ▷ j) = f(i) ▷ f(j). Returns false on conflict.
  auto assign = [&](int x, int y) -> bool {
    std::vector<std::pair<int, int>> todo{{x, y}};
    while (!todo.empty()) {
      auto [u, v] = todo.back();
      todo.pop_back();
      if (f[u]) {
        if (f[u] != v) return false;
        continue;
      }
      if (used[v] || ia[u] != ib[v]) return false;
      f[u] = v;
      used[v] = 1;
      trail.push_back(u);
      for (int w = 1; w <= n; ++w) {
        if (!f[w]) continue;
        todo.push_back({a.op(u, w), b.op(v, f[w])});
        todo.push_back({a.op(w, u), b.op(f[w], v)});
      }
    }
    return true;
  };
  auto undo_to = [&](std::size_t mark) {
    while (trail.size() > mark) {
      int u = trail.back();
      trail.pop_back();
      used[f[u]] = 0;
      f[u] = 0;
    }
  };
  std::function<bool()> search = [&]() -> bool {
    int x = 0;
    for (int i = 1; i <= n; ++i)
      if (!f[i]) {
        x = i;
        break;
      }
    if (!x) return true;
    for (int y = 1; y <= n; ++y) {
      if (used[y] || ia[x] != ib[y]) continue;
      std::size_t mark = trail.size();
      if (assign(x, y) && search()) return true;
      undo_to(mark);
    }
    return false;
  };
  if (!search()) return std::nullopt;
  QuandleIso iso{Perm(f.begin() + 1, f.end())};
  if (!is_isomorphism(a, b, iso)) throw InvariantViolation("isomorphism search returned a non-isomorphism");
  return iso;
}

namespace {

struct CatalogEntry {
  std::string name;
  std::vector<std::string> rows;
  bool indecomposable;
};

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"{1}", {"id"}, true},
      {"(12)^{S3}", {"(23)", "(13)", "(12)"}, true},
      {"(123)^{A4}", {"(243)", "(134)", "(142)", "(123)"}, true},
      {"Aff(5,2)", {"(2354)", "(1534)", "(1452)", "(1325)", "(1243)"}, true},
      {"Aff(5,3)", {"(2453)", "(1435)", "(1254)", "(1523)", "(1342)"}, true},
      {"Aff(5,4)", {"(25)(34)", "(13)(45)", "(15)(24)", "(12)(35)", "(14)(23)"}, true},
      {"(12)^{S4}", {"(23)(56)", "(13)(45)", "(12)(46)", "(25)(36)", "(16)(24)", "(15)(34)"}, true},
      {"(1234)^{S4}", {"(2436)", "(1654)", "(1456)", "(1253)", "(2634)", "(1352)"}, true},
      {"Z_T^{4,1}", {"(243)", "(134)", "(142)", "(123)", "id"}, false},
      {"Z_2^{2,2}", {"(24)", "(13)", "(24)", "(13)"}, false},
      {"Z_3^{3,1}", {"(23)", "(13)", "(12)", "id"}, false},
      {"Z_3^{3,2}", {"(23)(45)", "(13)(45)", "(12)(45)", "(123)", "(132)"}, false},
      {"Z_4^{4,2}", {"(24)(56)", "(13)(56)", "(24)(56)", "(13)(56)", "(1234)", "(1432)"}, false},
  };
  return entries;
}

// "(12)^S3" -> "(12)^{S3}", "Z_3^{3,1}" unchanged, whitespace dropped.
std::string normalize_name(std::string_view name) {
  std::string s;
  for (char c : name)
    if (c != ' ') s += c;
  auto caret = s.find('^');
  if (caret != std::string::npos && caret + 1 < s.size() && s[caret + 1] != '{')
    s = s.substr(0, caret + 1) + "{" + s.substr(caret + 1) + "}";
  return s;
}

}  // namespace

Quandle catalog(std::string_view name) {
  const std::string key = normalize_name(name);
  if (key.rfind("trivial(", 0) == 0 && key.back() == ')') {
    int n = 0;
    try {
      n = std::stoi(key.substr(8, key.size() - 9));
    } catch (const std::exception&) {
      throw ArgumentError("bad trivial quandle size in \"" + std::string(name) + "\"");
    }
    return Quandle::trivial(n);
  }
  for (const auto& e : catalog_entries())
    if (e.name == key) return Quandle::from_cycles(e.rows);
  throw ArgumentError("unknown catalog quandle \"" + std::string(name) + "\"");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) names.push_back(e.name);
  return names;
}

std::vector<std::string> indecomposable_catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries())
    if (e.indecomposable) names.push_back(e.name);
  return names;
}

std::vector<std::string> z_quandle_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries())
    if (!e.indecomposable) names.push_back(e.name);
  return names;
}

std::optional<std::string> catalog_match(const Quandle& q) {
  for (const auto& e : catalog_entries()) {
    if (static_cast<int>(e.rows.size()) != q.size()) continue;
    if (isomorphic(q, Quandle::from_cycles(e.rows))) return e.name;
  }
  if (q.is_trivial()) return "trivial(" + std::to_string(q.size()) + ")";
  return std::nullopt;
}

InvariantClosure invariant_closure_check(const Quandle& q, std::span<const Elem> subset) {
  const int n = q.size();
  std::vector<char> in_y(n + 1, 0);
  for (Elem y : subset) {
    if (y < 1 || y > n) throw ArgumentError("subset element out of range");
    in_y[y] = 1;
  }
  InvariantClosure r;
  std::vector<char> in_c(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    bool fixes = true;
    for (Elem y : subset) fixes = fixes && q.op(i, y) == y;
    if (fixes) {
      r.centralizing.push_back(i);
      in_c[i] = 1;
    }
  }
  r.hypothesis_met = true;
  for (int i = 1; i <= n; ++i) r.hypothesis_met = r.hypothesis_met && (in_y[i] || in_c[i]);
  r.closed = true;
  for (int x = 1; x <= n; ++x)
    for (Elem y : subset) r.closed = r.closed && in_y[q.op(x, y)];
  return r;
}

Quandle two_orbit_quandle(int half) {
  if (half < 1) throw ArgumentError("two_orbit_quandle needs n >= 1");
  const int n = 2 * half;
  std::vector<Perm> rows(n, perm::identity(n));
  for (int i = 0; i < half; ++i) {
    for (int k = 0; k < half; ++k) {
      rows[i][half + k] = half + (k + 1) % half + 1;
      rows[half + i][k] = (k + 1) % half + 1;
    }
  }
  return Quandle::from_rows(rows);
}

std::optional<TwoOrbitNormalForm> two_orbit_normal_form(const Quandle& q) {
  auto orbits = inner_orbits(q);
  if (orbits.size() != 2 || orbits[0].size() != orbits[1].size()) return std::nullopt;
  const int half = static_cast<int>(orbits[0].size());
  Quandle y1 = subquandle(q, orbits[0]);
  Quandle y2 = subquandle(q, orbits[1]);
  // Y1 ≅ Y2 makes the commutativity of either orbit equivalent.
  if (!y1.is_trivial() || !isomorphic(y1, y2)) return std::nullopt;
  Quandle nf = two_orbit_quandle(half);
  auto iso = isomorphic(q, nf);
  if (!iso) throw InvariantViolation("two-orbit quandle hypotheses hold but no normal-form isomorphism exists");
  return TwoOrbitNormalForm{std::move(nf), std::move(*iso), half};
}

}  // namespace rank2
