#include "rank2/gamma.hpp"

#include "rank2/errors.hpp"
#include "rank2/presentation.hpp"

namespace rank2 {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }
bool odd(long k) { return k % 2 != 0; }

void same_modulus(const GammaElem& a, const GammaElem& b) {
  if (a.n != b.n) throw ArgumentError("Γ_n elements with different moduli");
}

}  // namespace

GammaElem GammaElem::make(int n, long i, long j, long k) {
  if (n < 2) throw ArgumentError("Γ_n needs n >= 2");
  return GammaElem{n, mod(i, n), j, k};
}

std::string GammaElem::to_string() const {
  std::string s;
  auto part = [&](const char* sym, long e) {
    if (e == 0) return;
    if (!s.empty()) s += ' ';
    s += sym;
    if (e != 1) s += "^" + std::to_string(e);
  };
  part("e", i);
  part("h", j);
  part("g", k);
  return s.empty() ? "1" : s;
}

GammaElem gamma_mul(const GammaElem& a, const GammaElem& b) {
  same_modulus(a, b);
  const long sign = odd(a.k) ? -1 : 1;
  return GammaElem::make(a.n, a.i + sign * b.i - (odd(a.k) ? b.j : 0), a.j + b.j, a.k + b.k);
}

GammaElem gamma_inv(const GammaElem& a) {
  const long sign = odd(a.k) ? -1 : 1;
  return GammaElem::make(a.n, sign * (-a.i - (odd(a.k) ? a.j : 0)), -a.j, -a.k);
}

GammaElem gamma_pow(const GammaElem& a, long e) {
  GammaElem base = e < 0 ? gamma_inv(a) : a;
  if (e < 0) e = -e;
  GammaElem r = GammaElem::one(a.n);
  while (e) {
    if (e & 1) r = gamma_mul(r, base);
    base = gamma_mul(base, base);
    e >>= 1;
  }
  return r;
}

GammaElem gamma_conj(const GammaElem& a, const GammaElem& b) { return gamma_mul(gamma_mul(a, b), gamma_inv(a)); }

GammaElem gamma_commutator(const GammaElem& a, const GammaElem& b) {
  return gamma_mul(gamma_mul(a, b), gamma_mul(gamma_inv(a), gamma_inv(b)));
}

namespace {

std::vector<GammaElem> generators_pm(int n) {
  std::vector<GammaElem> gens;
  for (const auto& x : {GammaElem::g(n), GammaElem::h(n), GammaElem::eps(n)}) {
    gens.push_back(x);
    gens.push_back(gamma_inv(x));
  }
  return gens;
}

}  // namespace

std::set<GammaElem> gamma_conj_class(const GammaElem& x, int bound) {
  if (bound < 0) bound = 2 * x.n + 4;
  const auto gens = generators_pm(x.n);
  std::set<GammaElem> cls{x};
  std::vector<GammaElem> frontier{x};
  for (int round = 0; round < bound && !frontier.empty(); ++round) {
    std::vector<GammaElem> next;
    for (const auto& y : frontier)
      for (const auto& s : gens) {
        auto z = gamma_conj(s, y);
        if (cls.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
  return cls;
}

bool gamma_centralizer_check(const GammaElem& x, std::span<const GammaElem> gens) {
  for (const auto& y : gens)
    if (gamma_mul(x, y) != gamma_mul(y, x)) return false;
  return true;
}

std::set<GammaElem> gamma_commutator_closure(int n, int bound) {
  if (bound < 0) bound = 2 * n + 4;
  const auto gens = generators_pm(n);
  std::set<GammaElem> closure{GammaElem::one(n)};
  for (const auto& a : gens)
    for (const auto& b : gens) closure.insert(gamma_commutator(a, b));
  for (int round = 0; round < bound; ++round) {
    std::set<GammaElem> next = closure;
    for (const auto& a : closure) {
      next.insert(gamma_inv(a));
      for (const auto& s : gens) next.insert(gamma_conj(s, a));
      for (const auto& b : closure) next.insert(gamma_mul(a, b));
    }
    if (next == closure) break;
    closure = std::move(next);
  }
  return closure;
}

GammaQuotient gamma_quotient(int n, int g_power, int h_power) {
  if (n < 2 || g_power < 1 || h_power < 1) throw ArgumentError("gamma_quotient: bad parameters");
  Presentation p;
  p.generators = {"g", "h", "e"};
  const int g = 1, h = 2, e = 3;
  p.relators = {
      {h, g, -h, -g, -e},  // hg = εgh
      {g, e, -g, e},       // gε = ε^{-1}g
      {h, e, -h, -e},      // hε = εh
      Word(n, e),
      Word(g_power, g),
      Word(h_power, h),
  };
  auto run = enumerate_cosets(p);
  return {std::move(run.group), run.generator_images[0], run.generator_images[1], run.generator_images[2]};
}

}  // namespace rank2
