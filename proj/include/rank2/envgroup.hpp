#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rank2/fingroup.hpp"
#include "rank2/presentation.hpp"
#include "rank2/quandle.hpp"

namespace rank2 {

/// Generators x_1..x_n and relators x_i x_j x_i^{-1} x_{i▷j}^{-1} for i ≠ j.
/// A mutually fixed pair contributes its commutator once.
Presentation enveloping_presentation(const Quandle& q);

/// A finite quotient G_X / ⟨x_i^{e_i}⟩ with the images of the x_i.
struct EnvelopeQuotient {
  FinGroup group;
  std::vector<GElem> images;  // images[i-1] = π(x_i)
  std::vector<int> exponents;  // e_i, constant on inner orbits
  // More than one inner orbit: one power relator per orbit, which extends
  // the usual definition beyond indecomposable quandles.
  bool per_orbit_extension = false;
};

/// G_X modulo x_i^{|φ_i|}, one relator per inner orbit.
EnvelopeQuotient finite_enveloping_group(const Quandle& q, const CosetOptions& opts = {});
/// G_X modulo x_i^{k_o |φ_i|} with a multiplier k_o ≥ 1 per inner orbit
/// (orbits in the order of inner_orbits).
EnvelopeQuotient enveloping_quotient(const Quandle& q, const std::vector<int>& multipliers,
                                     const CosetOptions& opts = {});

/// π∂ is injective. Elements of different inner orbits have different
/// multidegrees in G_X, so only images within one orbit are compared.
bool injectivity_test(const Quandle& q, const EnvelopeQuotient& env);
bool injectivity_test(const Quandle& q, const CosetOptions& opts = {});

/// Every element is (word in images of orbit A)·(word in images of orbit B).
bool factors_through_orbits(const FinGroup& g, const std::vector<GElem>& images_a,
                            const std::vector<GElem>& images_b);

/// The homomorphism G_X → G induced by f : X → G, evaluated on words.
template <class T>
class WordHom {
 public:
  WordHom(std::vector<T> images, std::function<T(const T&, const T&)> mul, std::function<T(const T&)> inv, T one)
      : images_(std::move(images)), mul_(std::move(mul)), inv_(std::move(inv)), one_(std::move(one)) {}
  T operator()(const Word& w) const {
    T r = one_;
    for (int x : w) r = mul_(r, x > 0 ? images_[x - 1] : inv_(images_[-x - 1]));
    return r;
  }
  const std::vector<T>& images() const { return images_; }

 private:
  std::vector<T> images_;
  std::function<T(const T&, const T&)> mul_;
  std::function<T(const T&)> inv_;
  T one_;
};

/// Checks f(x▷y) = f(x) f(y) f(x)^{-1} for all pairs.
template <class T>
std::optional<WordHom<T>> induced_hom(const Quandle& q, const std::vector<T>& f,
                                      std::function<T(const T&, const T&)> mul, std::function<T(const T&)> inv,
                                      T one) {
  if (static_cast<int>(f.size()) != q.size()) return std::nullopt;
  for (int x = 1; x <= q.size(); ++x)
    for (int y = 1; y <= q.size(); ++y)
      if (!(f[q.op(x, y) - 1] == mul(mul(f[x - 1], f[y - 1]), inv(f[x - 1])))) return std::nullopt;
  return WordHom<T>(f, std::move(mul), std::move(inv), std::move(one));
}

/// induced_hom into a FinGroup.
std::optional<WordHom<GElem>> induced_hom(const Quandle& q, const FinGroup& g, const std::vector<GElem>& f);

/// Assignments X → g satisfying the quandle relations whose images generate g
/// and satisfy f(i)^{|φ_i|} = 1; images chosen on a small set of quandle
/// generators and propagated. Returns the least such assignment.
std::optional<std::vector<GElem>> find_quandle_embedding(const Quandle& q, const FinGroup& g);

/// Compatible isomorphisms ζ : G/Z(G) → H/Z(H) and η : [G,G] → [H,H].
struct Isoclinism {
  // zeta[c] = coset of H/Z(H) (as element of the quotient group) for coset c of G/Z(G).
  std::vector<GElem> zeta;
  // eta maps elements of [G,G] (ids of G) to elements of [H,H] (ids of H).
  std::vector<std::pair<GElem, GElem>> eta;
};
std::optional<Isoclinism> isoclinism_witness(const FinGroup& g, const FinGroup& h, int order_bound = 64);

/// All isomorphisms between two groups, found by assigning images to a small
/// generating set. `limit` stops the search early (0 = all).
std::vector<std::vector<GElem>> group_isomorphisms(const FinGroup& a, const FinGroup& b, std::size_t limit = 0);

}  // namespace rank2
