#include <algorithm>

#include "doctest.h"
#include "rank2/errors.hpp"
#include "rank2/gamma.hpp"
#include "rank2/ydmod.hpp"

using namespace rank2;

namespace {

std::shared_ptr<const FinGroup> share(FinGroup g) { return std::make_shared<const FinGroup>(std::move(g)); }

CycNum trace(const SparseMatrix& m) {
  CycNum t = 0;
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c))
      if (r == c) t += v;
  return t;
}

// Frobenius formula: tr Ind(χ)(g) = (1/|C|) Σ_{t : t^{-1} g t ∈ C} χ(t^{-1} g t).
CycNum induced_trace(const FinGroup& g, GElem r, const std::vector<CycNum>& chi, GElem x) {
  const Subgroup c = centralizer(g, r);
  CycNum s = 0;
  for (GElem t = 0; t < g.order(); ++t) {
    const GElem y = g.conj(g.inv(t), x);
    if (std::binary_search(c.begin(), c.end(), y)) s += chi[y];
  }
  return s / CycNum(static_cast<long>(c.size()));
}

void check_module(const YDModule& v) {
  CHECK(yd_compatible(v));
  CHECK(braiding_is_block_monomial(v, v));
  CHECK(braid_relation_holds(v, v, v));
}

}  // namespace

TEST_CASE("S3 transposition module") {
  auto s3 = share(groups::symmetric(3));
  const GElem t = s3->find("(12)");
  const auto gens = centralizer_generators(*s3, t);
  REQUIRE(gens.size() == 1);
  const std::vector<CycNum> sign{CycNum(-1)};
  const auto v = induced_module(s3, t, sign);
  CHECK(v.dim() == 3);
  const auto sup = support_quandle(v);
  CHECK(isomorphic(sup.quandle, catalog("(12)^S3")));
  check_module(v);
  const auto c = braiding_sparse(v, v);
  CHECK_FALSE(c * c == SparseMatrix::identity(9));
  // The transposition acts on its own degree component by the character.
  const int own = static_cast<int>(std::find(v.degrees().begin(), v.degrees().end(), t) - v.degrees().begin());
  const auto& col = v.action(t).column(own);
  REQUIRE(col.size() == 1);
  CHECK(col[0].first == own);
  CHECK(col[0].second == CycNum(-1));
  for (GElem x = 0; x < s3->order(); ++x)
    CHECK(trace(v.action(x)) == induced_trace(*s3, t, extend_character(*s3, gens, sign), x));
}

TEST_CASE("central class with the trivial character") {
  auto g = share(groups::sl2_3());
  const std::vector<CycNum> ones(centralizer_generators(*g, 0).size(), CycNum(1));
  const auto v = induced_module(g, 0, ones);
  CHECK(v.dim() == 1);
  CHECK(braiding_sparse(v, v) == SparseMatrix::identity(1));
  CHECK(isomorphic(support_quandle(v).quandle, Quandle::trivial(1)));
}

TEST_CASE("module over the order-16 quotient of Γ_2") {
  auto q = gamma_quotient(2, 2, 4);
  auto g = share(std::move(q.group));
  bool found = false;
  for (const auto& ch : enumerate_characters(*g, q.g)) {
    const auto chi = extend_character(*g, centralizer_generators(*g, q.g), ch.values);
    if (!(chi[q.g] == CycNum(-1))) continue;
    found = true;
    const auto v = induced_module(g, q.g, ch.values);
    CHECK(v.dim() == 2);
    check_module(v);
  }
  CHECK(found);
}

TEST_CASE("characters") {
  auto s3 = groups::symmetric(3);
  CHECK(enumerate_characters(s3, s3.find("(12)")).size() == 2);
  CHECK(enumerate_characters(s3, s3.find("(123)")).size() == 3);
  CHECK(enumerate_characters(s3, 0).size() == 2);  // S_3 / A_3
  auto sl = groups::sl2_3();
  for (GElem x = 0; x < sl.order(); ++x) {
    // Centralizers of non-central elements are cyclic; Z has index 3 in the abelianization.
    const auto cent = centralizer(sl, x);
    const std::size_t expect = cent.size() == 24 ? 3 : cent.size();
    CHECK(enumerate_characters(sl, x).size() == expect);
  }
  const GElem t = s3.find("(12)");
  const std::vector<CycNum> bad{CycNum::zeta(3)};
  CHECK_THROWS_AS(extend_character(s3, centralizer_generators(s3, t), bad), ArgumentError);
  CHECK_THROWS_AS(induced_module(share(s3), t, bad), ArgumentError);
}

TEST_CASE("Frobenius oracle on induced modules") {
  const std::vector<FinGroup> gs{groups::symmetric(3), groups::sl2_3(), groups::alternating(4),
                                 gamma_quotient(3, 2, 6).group, groups::symmetric(4)};
  for (const auto& g0 : gs) {
    auto g = share(g0);
    for (const auto& cls : conjugacy_classes(*g)) {
      const GElem r = cls.front();
      for (const auto& ch : enumerate_characters(*g, r)) {
        const auto v = induced_module(g, r, ch.values);
        CHECK(v.dim() == static_cast<int>(cls.size()));
        CHECK(yd_compatible(v));
        const auto chi = extend_character(*g, centralizer_generators(*g, r), ch.values);
        for (GElem x = 0; x < g->order(); x += 1 + g->order() / 12)
          CHECK(trace(v.action(x)) == induced_trace(*g, r, chi, x));
      }
    }
  }
}

TEST_CASE("braid relation and degree bookkeeping across modules") {
  auto g = share(groups::sl2_3());
  std::vector<YDModule> mods;
  for (const auto& cls : conjugacy_classes(*g)) {
    const auto chars = enumerate_characters(*g, cls.front());
    mods.push_back(induced_module(g, cls.front(), chars.back().values));
  }
  for (std::size_t a = 0; a < mods.size(); a += 2)
    for (std::size_t b = 1; b < mods.size(); b += 2) {
      CHECK(braiding_is_block_monomial(mods[a], mods[b]));
      CHECK(braid_relation_holds(mods[a], mods[b], mods[(a + b) % mods.size()]));
    }
}

TEST_CASE("diagonal braiding") {
  // q11 = -1, q12 = ζ_6, q21 = ζ_6^2, q22 = ζ_6^3 over Z_6 × Z_6.
  auto [v, w] = diagonal_pair(6, {{{3, 1}, {2, 3}}});
  const auto cvw = braiding_sparse(v, w), cwv = braiding_sparse(w, v);
  CHECK(cvw == SparseMatrix::identity(1).scaled(CycNum::zeta(6, 1)));
  CHECK(cwv == SparseMatrix::identity(1).scaled(CycNum::zeta(6, 2)));
  CHECK(cwv * cvw == SparseMatrix::identity(1).scaled(CycNum::zeta(6, 3)));
  CHECK(braiding_sparse(v, v) == SparseMatrix::identity(1).scaled(CycNum(-1)));
  check_module(v);
  CHECK(braid_relation_holds(v, w, v));
  const std::vector<YDModule> both{v, w};
  CHECK(support_quandle(both).quandle.size() == 2);
}

TEST_CASE("direct sums") {
  auto s3 = share(groups::symmetric(3));
  const auto v = induced_module(s3, s3->find("(12)"), std::vector<CycNum>{CycNum(-1)});
  const auto w = induced_module(s3, s3->find("(123)"), std::vector<CycNum>{CycNum::zeta(3)});
  const auto s = direct_sum(v, w);
  CHECK(s.dim() == 5);
  check_module(s);
  auto sup = support_quandle(s).labels;
  auto a = support_quandle(v).labels, b = support_quandle(w).labels;
  std::vector<GElem> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  CHECK(sup == u);
  auto other = share(groups::symmetric(3));
  const auto v2 = induced_module(other, other->find("(12)"), std::vector<CycNum>{CycNum(1)});
  CHECK(direct_sum(v, v2).dim() == 6);  // equal tables are accepted
  auto a4 = share(groups::alternating(4));
  const auto x = induced_module(a4, 0, std::vector<CycNum>(centralizer_generators(*a4, 0).size(), CycNum(1)));
  CHECK_THROWS_AS(direct_sum(v, x), ArgumentError);
  CHECK_THROWS_AS(braiding_sparse(v, x), ArgumentError);
}

TEST_CASE("invalid modules") {
  auto s3 = share(groups::symmetric(3));
  const int ng = static_cast<int>(s3->generators().size());
  // Scalars ±1 on generators, degree 1: a generator of order 3 cannot act by -1.
  std::vector<SparseMatrix> act;
  for (int k = 0; k < ng; ++k) act.push_back(SparseMatrix::identity(1).scaled(CycNum(-1)));
  bool has_order3 = false;
  for (GElem s : s3->generators()) has_order3 |= s3->element_order(s) == 3;
  if (has_order3) CHECK_THROWS_AS(YDModule(s3, {0}, act), ArgumentError);
  // Degree (12) is not fixed by conjugation.
  std::vector<SparseMatrix> id(ng, SparseMatrix::identity(1));
  CHECK_THROWS_AS(YDModule(s3, {s3->find("(12)")}, id), ArgumentError);
  CHECK_NOTHROW(YDModule(s3, {0}, id));
  CHECK_THROWS_AS(YDModule(s3, {0}, {}), ArgumentError);
}

TEST_CASE("tensor spaces") {
  auto s3 = share(groups::symmetric(3));
  const auto v = induced_module(s3, s3->find("(12)"), std::vector<CycNum>{CycNum(-1)});
  const auto w = induced_module(s3, s3->find("(123)"), std::vector<CycNum>{CycNum(1)});
  const BraidedTensor t({v, v, w});
  CHECK(t.dim() == 18);
  for (int x = 0; x < t.dim(); ++x) CHECK(t.index(t.tuple(x)) == x);
  std::size_t total = 0;
  for (const auto& [d, idx] : t.degree_blocks()) {
    total += idx.size();
    for (int x : idx) CHECK(t.degree(x) == d);
  }
  CHECK(total == 18);
  CHECK(t.swapped(2).factor(2).dim() == 2);
  // Degrees are preserved by braiding: the product of leg degrees is invariant.
  const auto c = t.braid_at(2);
  const auto t2 = t.swapped(2);
  for (int x = 0; x < t.dim(); ++x)
    for (const auto& [r, val] : c.column(x)) CHECK(t2.degree(r) == t.degree(x));
  CHECK_THROWS_AS(t.braid_at(3), ArgumentError);
}
