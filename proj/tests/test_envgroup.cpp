#include <algorithm>
#include <random>

#include "doctest.h"
#include "rank2/envgroup.hpp"
#include "rank2/errors.hpp"
#include "rank2/gamma.hpp"
#include "rank2/telem.hpp"

using namespace rank2;

namespace {

bool quandle_relations_hold(const Quandle& q, const FinGroup& g, const std::vector<GElem>& img) {
  for (int i = 1; i <= q.size(); ++i)
    for (int j = 1; j <= q.size(); ++j)
      if (g.mul(img[i - 1], img[j - 1]) != g.mul(img[q.op(i, j) - 1], img[i - 1])) return false;
  return true;
}

bool isomorphic_groups(const FinGroup& a, const FinGroup& b) { return !group_isomorphisms(a, b, 1).empty(); }

std::vector<Subgroup> normal_closures(const FinGroup& g) {
  std::vector<Subgroup> out;
  for (GElem x = 0; x < g.order(); ++x) {
    auto cls = conjugacy_class(g, x);
    auto n = generated_subgroup(g, cls);
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  return out;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

}  // namespace

TEST_CASE("enveloping presentation") {
  CHECK(enveloping_presentation(Quandle::trivial(1)).relators.empty());
  CHECK(enveloping_presentation(Quandle::trivial(2)).relators == std::vector<Word>{{1, 2, -1, -2}});
  CHECK(enveloping_presentation(Quandle::trivial(4)).relators.size() == 6);
  CHECK(enveloping_presentation(catalog("(12)^S3")).relators.size() == 6);
  auto p = enveloping_presentation(catalog("Z_2^{2,2}"));
  // 8 ordered pairs of distinct parity plus the commuting pairs {1,3}, {2,4}.
  CHECK(p.relators.size() == 10);
  for (const auto& r : p.relators) {
    REQUIRE(r.size() == 4);
    const int i = r[0], j = r[1];
    int k = ((2 * i - j) % 4 + 4) % 4;
    if (k == 0) k = 4;
    CHECK(r == Word{i, j, -i, -k});
  }
  CHECK(p.to_text().find("x1 x2 x1^-1 x4^-1") != std::string::npos);
}

TEST_CASE("coset enumeration") {
  SUBCASE("cyclic and dihedral") {
    Presentation c5{{"a"}, {Word(5, 1)}};
    CHECK(enumerate_cosets(c5).group.order() == 5);
    Presentation d4{{"r", "s"}, {Word(4, 1), {2, 2}, {2, 1, 2, 1}}};
    auto g = enumerate_cosets(d4).group;
    CHECK(g.order() == 8);
    CHECK(class_sizes(g) == std::vector<int>{1, 1, 2, 2, 2});
  }
  SUBCASE("infinite group hits the budget") {
    Presentation z2{{"a", "b"}, {{1, 2, -1, -2}}};
    CHECK_THROWS_AS(enumerate_cosets(z2, CosetOptions{2000}), ResourceError);
  }
  SUBCASE("no generators") { CHECK(enumerate_cosets(Presentation{}).group.order() == 1); }
}

TEST_CASE("finite enveloping groups") {
  auto tri = finite_enveloping_group(Quandle::trivial(1));
  CHECK(tri.group.order() == 1);

  auto a4 = catalog("(123)^A4");
  auto env = finite_enveloping_group(a4);
  CHECK(env.group.order() == 24);
  CHECK_FALSE(env.per_orbit_extension);
  CHECK(isomorphic_groups(env.group, groups::sl2_3()));

  auto s3q = catalog("(12)^S3");
  auto e3 = finite_enveloping_group(s3q);
  CHECK(e3.group.order() == 6);
  // Universal property: x_i ↦ transpositions gives a surjection onto S_3.
  auto s3 = groups::symmetric(3);
  std::vector<GElem> f{s3.find("(23)"), s3.find("(13)"), s3.find("(12)")};
  auto hom = induced_hom(s3q, s3, f);
  REQUIRE(hom);
  CHECK(generated_subgroup(s3, f).size() == 6);
  CHECK(isomorphic_groups(e3.group, s3));

  auto z = finite_enveloping_group(catalog("Z_3^{3,1}"));
  CHECK(z.per_orbit_extension);
}

TEST_CASE("enumerated tables satisfy the quandle relations") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    auto q = catalog(name);
    auto env = finite_enveloping_group(q);
    CHECK(quandle_relations_hold(q, env.group, env.images));
    for (int i = 1; i <= q.size(); ++i) CHECK(env.group.pow(env.images[i - 1], env.exponents[i - 1]) == 0);
  }
}

TEST_CASE("injectivity") {
  CHECK(injectivity_test(catalog("(123)^A4")));
  CHECK(injectivity_test(catalog("(12)^S3")));
  CHECK(injectivity_test(Quandle::trivial(1)));
  for (const auto& name : indecomposable_catalog_names()) {
    CAPTURE(name);
    auto q = catalog(name);
    auto env = finite_enveloping_group(q);
    CHECK(injectivity_test(q, env));
    // π restricted to the class of x_1 is a bijection onto the image of X.
    CHECK(conjugacy_class(env.group, env.images[0]).size() == static_cast<std::size_t>(q.size()));
  }
  // 1 moves 2 to 3 while 2 and 3 are central: x_2 = x_1^{-1} x_3 x_1 = x_3.
  auto bad = Quandle::from_cycles({"(23)", "id", "id"});
  CHECK_FALSE(injectivity_test(bad));
}

TEST_CASE("SL(2,3)") {
  auto g = groups::sl2_3();
  CHECK(g.order() == 24);
  CHECK(class_sizes(g) == std::vector<int>{1, 1, 4, 4, 4, 4, 6});
  CHECK(has_abelian_centralizers(g));
  CHECK(center(g).size() == 2);
  auto d = commutator_subgroup(g);
  CHECK(d.size() == 8);
  auto q8 = groups::as_group(g, d).group;
  CHECK_FALSE(is_abelian(q8, d));
  CHECK(involutions(q8).size() == 1);
  for (GElem x = 0; x < q8.order(); ++x) CHECK(q8.pow(x, 4) == 0);
  // Quotients by the two non-trivial proper normal subgroups.
  CHECK(has_abelian_centralizers(groups::quotient(g, center(g))));
  CHECK(has_abelian_centralizers(groups::quotient(g, d)));
  for (const auto& n : normal_closures(g)) CHECK(has_abelian_centralizers(groups::quotient(g, n)));
}

TEST_CASE("abelian groups") {
  auto g = groups::abelian({4, 6});
  CHECK(g.order() == 24);
  for (const auto& c : conjugacy_classes(g)) CHECK(c.size() == 1);
  CHECK(has_abelian_centralizers(g));
  CHECK(commutator_subgroup(g).size() == 1);
}

TEST_CASE("class size bound from the finite quotient") {
  auto env = finite_enveloping_group(catalog("(123)^A4"));
  auto sizes = class_sizes(env.group);
  CHECK(sizes.back() == 6);
  // The transported commutator subgroup is the quaternion group.
  auto d = commutator_subgroup(env.group);
  CHECK(d.size() == 8);
  CHECK(involutions(groups::as_group(env.group, d).group).size() == 1);
}

TEST_CASE("each Z-quandle quotient factors as a product of the orbit subgroups") {
  for (const auto& name : z_quandle_names()) {
    CAPTURE(name);
    auto q = catalog(name);
    auto orbits = inner_orbits(q);
    REQUIRE(orbits.size() == 2);
    for (const auto& mult : {std::vector<int>{1, 1}, std::vector<int>{2, 2}}) {
      auto env = enveloping_quotient(q, mult);
      std::vector<GElem> a, b;
      for (Elem i : orbits[0]) a.push_back(env.images[i - 1]);
      for (Elem i : orbits[1]) b.push_back(env.images[i - 1]);
      CHECK(factors_through_orbits(env.group, a, b));
      CHECK(factors_through_orbits(env.group, b, a));
    }
  }
}

TEST_CASE("Γ_n arithmetic") {
  SUBCASE("defining relations") {
    for (int n = 2; n <= 5; ++n) {
      auto g = GammaElem::g(n), h = GammaElem::h(n), e = GammaElem::eps(n);
      CHECK(gamma_mul(h, g) == gamma_mul(e, gamma_mul(g, h)));
      CHECK(gamma_mul(g, e) == gamma_mul(gamma_inv(e), g));
      CHECK(gamma_mul(h, e) == gamma_mul(e, h));
      CHECK(gamma_pow(e, n) == GammaElem::one(n));
    }
  }
  SUBCASE("normal forms") {
    auto g = GammaElem::g(2), h = GammaElem::h(2), e = GammaElem::eps(2);
    CHECK(gamma_mul(h, g) == GammaElem::make(2, 0, 1, 1));
    CHECK(gamma_mul(g, h) == GammaElem::make(2, 1, 1, 1));
    auto x = GammaElem::make(3, 2, -1, 3);
    CHECK(gamma_mul(GammaElem::one(3), x) == x);
    CHECK(gamma_mul(x, GammaElem::one(3)) == x);
    CHECK(gamma_mul(x, gamma_inv(x)) == GammaElem::one(3));
    (void)e;
  }
  SUBCASE("associativity and word round trip") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int t = 0; t < 500; ++t) {
      const int n = 2 + t % 4;
      auto r = [&] { return GammaElem::make(n, d(rng), d(rng), d(rng)); };
      auto a = r(), b = r(), c = r();
      CHECK(gamma_mul(gamma_mul(a, b), c) == gamma_mul(a, gamma_mul(b, c)));
      // The normal form is the product ε^i h^j g^k.
      auto word = gamma_mul(gamma_pow(GammaElem::eps(n), a.i),
                            gamma_mul(gamma_pow(GammaElem::h(n), a.j), gamma_pow(GammaElem::g(n), a.k)));
      CHECK(word == a);
    }
  }
  SUBCASE("modulus mismatch") { CHECK_THROWS_AS(gamma_mul(GammaElem::g(2), GammaElem::g(3)), ArgumentError); }
  SUBCASE("class of g in Γ_3") {
    auto cls = gamma_conj_class(GammaElem::g(3));
    CHECK(cls == std::set<GammaElem>{GammaElem::make(3, 0, 0, 1), GammaElem::make(3, 1, 0, 1),
                                     GammaElem::make(3, 2, 0, 1)});
  }
}

TEST_CASE("Γ_n classes, centralizers and commutators") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    auto g = GammaElem::g(n), h = GammaElem::h(n), e = GammaElem::eps(n);
    const std::vector<GammaElem> center_gens{gamma_mul(gamma_inv(e), gamma_pow(h, 2)), gamma_pow(h, n),
                                             gamma_pow(g, 2)};
    for (const auto& z : center_gens)
      for (const auto& s : {g, h, e}) CHECK(gamma_mul(z, s) == gamma_mul(s, z));
    std::vector<GammaElem> zs{GammaElem::one(n)};
    for (const auto& z : center_gens) {
      zs.push_back(z);
      zs.push_back(gamma_inv(z));
    }
    zs.push_back(gamma_mul(center_gens[0], center_gens[2]));
    for (const auto& z : zs) {
      std::set<GammaElem> gz, hgz;
      for (int m = 0; m < n; ++m) {
        gz.insert(gamma_mul(gamma_pow(e, m), gamma_mul(g, z)));
        hgz.insert(gamma_mul(gamma_pow(e, m), gamma_mul(gamma_mul(h, g), z)));
      }
      CHECK(gamma_conj_class(gamma_mul(g, z)) == gz);
      CHECK(gamma_conj_class(gamma_mul(gamma_mul(h, g), z)) == hgz);
      for (int j = 1; 2 * j <= n; ++j) {
        auto hj = gamma_mul(gamma_pow(h, j), z);
        CHECK(gamma_conj_class(hj) == std::set<GammaElem>{hj, gamma_mul(gamma_pow(e, -j), hj)});
      }
      auto gzel = gamma_mul(g, z), hgzel = gamma_mul(gamma_mul(h, g), z), hzel = gamma_mul(h, z);
      const std::vector<GammaElem> cg{center_gens[0], g, center_gens[1]};
      const std::vector<GammaElem> chg{center_gens[0], gamma_mul(h, g), center_gens[1]};
      const std::vector<GammaElem> ch{e, h, center_gens[2]};
      CHECK(gamma_centralizer_check(gzel, cg));
      CHECK(gamma_centralizer_check(hgzel, chg));
      CHECK(gamma_centralizer_check(hzel, ch));
      // The listed centralizers are abelian.
      for (const auto* gens : {&cg, &chg, &ch})
        for (const auto& a : *gens) CHECK(gamma_centralizer_check(a, *gens));
    }
    std::set<GammaElem> eps_powers;
    for (int m = 0; m < n; ++m) eps_powers.insert(gamma_pow(e, m));
    CHECK(gamma_commutator_closure(n) == eps_powers);
  }
}

TEST_CASE("finite quotients of Γ_n") {
  auto q = gamma_quotient(2, 2, 4);
  CHECK(q.group.order() == 16);
  CHECK(conjugacy_class(q.group, q.g).size() == 2);
  CHECK(gamma_quotient(2, 2, 2).group.order() == 8);
  for (int n = 2; n <= 4; ++n) {
    auto gq = gamma_quotient(n, 2, 2 * n);
    CHECK(has_abelian_centralizers(gq.group));
    auto sizes = class_sizes(gq.group);
    CHECK(sizes.back() <= n);
  }
}

TEST_CASE("induced homomorphisms") {
  SUBCASE("Z_2^{2,2} into Γ_2") {
    auto g = GammaElem::g(2), h = GammaElem::h(2), e = GammaElem::eps(2);
    std::vector<GammaElem> f{g, h, gamma_mul(e, g), gamma_mul(e, h)};
    auto hom = induced_hom<GammaElem>(catalog("Z_2^{2,2}"), f, gamma_mul, gamma_inv, GammaElem::one(2));
    REQUIRE(hom);
    CHECK((*hom)({1, 2}) == gamma_mul(g, h));
    std::vector<GammaElem> wrong{g, h, g, h};
    CHECK_FALSE(induced_hom<GammaElem>(catalog("Z_2^{2,2}"), wrong, gamma_mul, gamma_inv, GammaElem::one(2)));
  }
  SUBCASE("Z_3^{3,1} into Γ_3") {
    auto g = GammaElem::g(3), h = GammaElem::h(3), e = GammaElem::eps(3);
    std::vector<GammaElem> f{g, gamma_mul(e, g), gamma_mul(gamma_pow(e, 2), g), gamma_mul(e, h)};
    CHECK(induced_hom<GammaElem>(catalog("Z_3^{3,1}"), f, gamma_mul, gamma_inv, GammaElem::one(3)));
  }
  SUBCASE("constant map to the identity") {
    auto s3 = groups::symmetric(3);
    for (const auto& name : catalog_names()) {
      auto q = catalog(name);
      CHECK(induced_hom(q, s3, std::vector<GElem>(q.size(), 0)));
    }
  }
}

TEST_CASE("the group T") {
  auto x1 = TElem::x(1), x2 = TElem::x(2), x4 = TElem::x(4);
  auto cube = t_mul(t_mul(x1, x1), x1);
  CHECK(cube.z_exp == 0);
  CHECK(cube.deg == 3);
  CHECK(cube.image == 0);
  CHECK(t_mul(x1, x2) == t_mul(x4, x1));
  CHECK(t_mul(TElem::one(), x2) == x2);
  CHECK(t_mul(x2, t_inv(x2)) == TElem::one());
  CHECK(t_mul(TElem::z(), x1) == t_mul(x1, TElem::z()));
  CHECK_THROWS_AS(TElem::make(0, 0, t_structure().x_images[0]), ArgumentError);
  // Every relation x_i x_j = x_{φ_i(j)} x_i.
  auto q = catalog("(123)^A4");
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(t_mul(TElem::x(i), TElem::x(j)) == t_mul(TElem::x(q.op(i, j)), TElem::x(i)));
  // [x_1,x_2] and [x_1,x_3] do not commute.
  auto comm = [](const TElem& a, const TElem& b) { return t_mul(t_mul(a, b), t_mul(t_inv(a), t_inv(b))); };
  auto c12 = comm(x1, x2), c13 = comm(x1, TElem::x(3));
  CHECK_FALSE(t_mul(c12, c13) == t_mul(c13, c12));
}

TEST_CASE("isoclinism witnesses") {
  auto sl = groups::sl2_3();
  auto a4 = groups::alternating(4);
  CHECK(isoclinism_witness(sl, sl));
  CHECK(isoclinism_witness(groups::abelian({2}), groups::abelian({3, 3})));
  CHECK_FALSE(isoclinism_witness(sl, groups::quotient(sl, center(sl))));
  CHECK(a4.order() == 12);
  CHECK_THROWS_AS(isoclinism_witness(groups::symmetric(5), groups::symmetric(5)), ResourceError);

  SUBCASE("abelian centralizers transfer") {
    auto z2 = groups::abelian({2});
    const std::vector<FinGroup> gs{sl, groups::symmetric(3), groups::symmetric(4), a4,
                                   gamma_quotient(3, 2, 6).group};
    for (const auto& g : gs) {
      auto gz = groups::direct_product(g, z2);
      if (gz.order() > 64) continue;
      auto w = isoclinism_witness(g, gz);
      CHECK(w);
      if (w && has_abelian_centralizers(g)) CHECK(has_abelian_centralizers(gz));
    }
  }
  SUBCASE("quotient instances G/K ~ G/(K ∩ [G,G])") {
    for (const auto& g : {groups::direct_product(sl, groups::abelian({2})), groups::symmetric(4)}) {
      const auto d = commutator_subgroup(g);
      for (const auto& k : normal_closures(g)) {
        auto w = isoclinism_witness(groups::quotient(g, k), groups::quotient(g, intersect(k, d)));
        CHECK(w);
      }
    }
  }
}
