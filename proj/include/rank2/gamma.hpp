#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "rank2/fingroup.hpp"

namespace rank2 {

/// ε^i h^j g^k in Γ_n = ⟨g, h, ε | hg = εgh, gε = ε^{-1}g, hε = εh, ε^n = 1⟩.
struct GammaElem {
  int n = 2;
  long i = 0;  // 0 ≤ i < n
  long j = 0;
  long k = 0;

  /// Reduces i modulo n; throws ArgumentError for n < 2.
  static GammaElem make(int n, long i, long j, long k);
  static GammaElem one(int n) { return make(n, 0, 0, 0); }
  static GammaElem eps(int n) { return make(n, 1, 0, 0); }
  static GammaElem g(int n) { return make(n, 0, 0, 1); }
  static GammaElem h(int n) { return make(n, 0, 1, 0); }

  std::string to_string() const;
  friend auto operator<=>(const GammaElem&, const GammaElem&) = default;
};

/// Normal-form product. The rules g ε g^{-1} = ε^{-1} and g h g^{-1} = ε^{-1} h
/// give g^k ε^i h^j = ε^{(-1)^k i - [k odd] j} h^j g^k.
GammaElem gamma_mul(const GammaElem& a, const GammaElem& b);
GammaElem gamma_inv(const GammaElem& a);
GammaElem gamma_pow(const GammaElem& a, long e);
GammaElem gamma_conj(const GammaElem& a, const GammaElem& b);  // a b a^{-1}
GammaElem gamma_commutator(const GammaElem& a, const GammaElem& b);

/// Saturation of {x} under conjugation by g^{±1}, h^{±1}, ε^{±1}, stopping
/// after `bound` rounds. The default bound is 2n+4.
std::set<GammaElem> gamma_conj_class(const GammaElem& x, int bound = -1);
/// Every listed element commutes with x.
bool gamma_centralizer_check(const GammaElem& x, std::span<const GammaElem> gens);

/// The closure of {[a,b] : a,b generators} under products, inverses and
/// conjugation by generators, after `bound` rounds.
std::set<GammaElem> gamma_commutator_closure(int n, int bound = -1);

/// The finite quotient of Γ_n by ⟨g^a, h^b⟩ built by coset enumeration;
/// generator images are g, h, ε in that order.
struct GammaQuotient {
  FinGroup group;
  GElem g, h, eps;
};
GammaQuotient gamma_quotient(int n, int g_power, int h_power);

}  // namespace rank2
