#include <doctest.h>

#include "actforge/direct_product.hpp"
#include "actforge/error.hpp"
#include "actforge/family.hpp"

using namespace actforge;

TEST_CASE("decomposition tables follow the scan order") {
  const auto t = trivial_monoid();
  const auto dt = DiagonalDecomposition::build(t, std::vector<Elem>{0},
                                               std::vector<Elem>{0});
  CHECK(dt.alpha(0, 0) == 0);
  CHECK(dt.gamma(0, 0) == 0);

  const auto z2 = cyclic_monoid(2);
  const std::vector<Elem> u{0, 1};
  const auto d = DiagonalDecomposition::build(z2, u, u);
  // (1, g): candidates (1,1) fail, (1,g) with s = 1 succeeds first
  CHECK(d.alpha(0, 1) == 0);
  CHECK(d.beta(0, 1) == 1);
  CHECK(d.gamma(0, 1) == 0);

  // the defining equation holds everywhere
  for (Elem m1 = 0; m1 < 2; ++m1) {
    for (Elem m2 = 0; m2 < 2; ++m2) {
      CHECK(z2->mul(d.alpha(m1, m2), d.gamma(m1, m2)) == m1);
      CHECK(z2->mul(d.beta(m1, m2), d.gamma(m1, m2)) == m2);
    }
  }

  // U x V that does not generate is rejected
  CHECK_THROWS_AS(DiagonalDecomposition::build(z2, std::vector<Elem>{0},
                                               std::vector<Elem>{0}),
                  ActError);
}

TEST_CASE("the decomposition identity holds across the family") {
  for (const auto& nm : standard_family()) {
    std::vector<Elem> all(nm.monoid->order());
    for (Elem e = 0; e < nm.monoid->order(); ++e) all[e] = e;
    const auto u = square_generating_set(nm.monoid);
    for (const auto& uu : {u, all}) {
      const auto d = DiagonalDecomposition::build(nm.monoid, uu, uu);
      CHECK(crucial_identity_check(nm.monoid, d));
    }
  }
}

TEST_CASE("dp generating sets match the frozen small cases") {
  const auto t = trivial_monoid();
  const FiniteAct ta = make_act_unchecked(t, 1, {0});
  const auto g1 = dp_generating_set(ta, std::vector<Elem>{0}, ta,
                                    std::vector<Elem>{0},
                                    std::vector<Elem>{0},
                                    std::vector<Elem>{0});
  CHECK(g1.elems == std::vector<Elem>{0});

  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  // X = Y = {1}, U = {1}, V = {1, g}: Z = {(1,1), (1,g)}
  const auto g2 = dp_generating_set(rr, std::vector<Elem>{0}, rr,
                                    std::vector<Elem>{0},
                                    std::vector<Elem>{0},
                                    std::vector<Elem>{0, 1});
  CHECK(g2.elems == std::vector<Elem>{0, 1});

  // |Z| <= |XU| * |YV|
  const auto setup = dp_setup(rr, std::vector<Elem>{0}, rr,
                              std::vector<Elem>{0}, std::vector<Elem>{0, 1},
                              std::vector<Elem>{0, 1});
  CHECK(setup.gens.size() == setup.xu.size() * setup.yv.size());
}

TEST_CASE("rho_pair commutes with evaluation and scaling") {
  const auto e2 = semilattice_chain(2);
  const FiniteAct rr = right_regular_act(e2);
  const std::vector<Elem> x{0}, u{0, 1};
  const auto s = dp_setup(rr, x, rr, x, u, u);

  for (Elem m = 0; m < 2; ++m) {
    for (Elem n = 0; n < 2; ++n) {
      const FreeActElem wa{0, m}, wb{0, n};
      const FreeActElem img = rho_pair(s, wa, wb);
      // evaluate the image generator through the product act
      const Elem gen_value = s.gens[img.gen];
      const Elem value = s.product.act(gen_value, img.elem);
      const Elem expected = static_cast<Elem>(
          rr.act(x[0], m) * rr.size() + rr.act(x[0], n));
      CHECK(value == expected);

      for (Elem scale = 0; scale < 2; ++scale) {
        const FreeActElem was{0, e2->mul(m, scale)};
        const FreeActElem wbs{0, e2->mul(n, scale)};
        const FreeActElem img2 = rho_pair(s, was, wbs);
        CHECK(s.product.act(s.gens[img2.gen], img2.elem) ==
              s.product.act(value, scale));
      }
    }
  }
}

TEST_CASE("dp presentations verify against the product act") {
  // everything trivial
  const auto t = trivial_monoid();
  const FiniteAct ta = make_act_unchecked(t, 1, {0});
  {
    const auto s = dp_setup(ta, std::vector<Elem>{0}, ta,
                            std::vector<Elem>{0}, std::vector<Elem>{0},
                            std::vector<Elem>{0});
    const auto pa = presentation_on_generators(ta, std::vector<Elem>{0});
    const auto pd = diagonal_uv_presentation(t, std::vector<Elem>{0},
                                             std::vector<Elem>{0});
    const auto dp = dp_presentation(s, pa.pres, pa.pres, pd.pres);
    CHECK(dp.pres.pres.n_gens() == 1);
  }

  // Z2, both factors right-regular
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  {
    const std::vector<Elem> x{0}, u{0, 1};
    const auto s = dp_setup(rr, x, rr, x, u, u);
    auto pa = presentation_on_generators(rr, x);
    pa.pres = reduce_presentation(pa.pres, rr, pa.assign);
    auto pd = diagonal_uv_presentation(z2, u, u);
    pd.pres = reduce_presentation(pd.pres, diagonal_act(z2).act, pd.assign);
    const auto dp = dp_presentation(s, pa.pres, pa.pres, pd.pres);
    CHECK(dp.pres.pres.monoid()->same_table(*z2));
    CHECK(is_presentation_of(dp.pres.pres, s.product, dp.pres.assign).ok);
  }

  // E2: right-regular times the singleton quotient
  const auto e2 = semilattice_chain(2);
  const FiniteAct rr2 = right_regular_act(e2);
  const FiniteAct single = make_act_unchecked(e2, 1, {0, 0});
  {
    const std::vector<Elem> x{0}, u{0, 1};
    const auto s = dp_setup(rr2, x, single, x, u, u);
    auto pa = presentation_on_generators(rr2, x);
    pa.pres = reduce_presentation(pa.pres, rr2, pa.assign);
    auto pb = presentation_on_generators(single, x);
    pb.pres = reduce_presentation(pb.pres, single, pb.assign);
    auto pd = diagonal_uv_presentation(e2, u, u);
    pd.pres = reduce_presentation(pd.pres, diagonal_act(e2).act, pd.assign);
    const auto dp = dp_presentation(s, pa.pres, pb.pres, pd.pres);
    CHECK(is_presentation_of(dp.pres.pres, s.product, dp.pres.assign).ok);
  }
}

TEST_CASE("dp_presentation rejects inputs that do not verify") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  const std::vector<Elem> x{0}, u{0, 1};
  const auto s = dp_setup(rr, x, rr, x, u, u);
  const auto pa = presentation_on_generators(rr, x);
  // a diagonal presentation stripped of its relations no longer presents
  const auto pd = diagonal_uv_presentation(z2, u, u);
  const ActPresentation broken = pd.pres.with_relations({});
  try {
    dp_presentation(s, pa.pres, pa.pres, broken);
    FAIL("expected NotAPresentation");
  } catch (const ActError& e) {
    CHECK(e.kind() == ErrorKind::NotAPresentation);
  }
}

TEST_CASE("dp factor presentations recover the first factor") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  const FiniteAct single = make_act_unchecked(z2, 1, {0, 0});

  // B singleton: essentially re-presents A
  {
    const std::vector<Elem> x{0}, u{0, 1};
    const auto s = dp_setup(rr, x, single, std::vector<Elem>{0}, u, u);
    auto pa = presentation_on_generators(rr, x);
    pa.pres = reduce_presentation(pa.pres, rr, pa.assign);
    auto pb = presentation_on_generators(single, std::vector<Elem>{0});
    auto pd = diagonal_uv_presentation(z2, u, u);
    pd.pres = reduce_presentation(pd.pres, diagonal_act(z2).act, pd.assign);
    const auto dp = dp_presentation(s, pa.pres, pb.pres, pd.pres);
    const auto fact = dp_factor_presentation(s, dp.pres.pres);
    CHECK(is_presentation_of(fact.pres, rr, fact.assign).ok);
  }

  // Z2 squared, relation image count bounded by |R| plus collisions
  {
    const std::vector<Elem> x{0}, u{0, 1};
    const auto s = dp_setup(rr, x, rr, x, u, u);
    auto pa = presentation_on_generators(rr, x);
    pa.pres = reduce_presentation(pa.pres, rr, pa.assign);
    auto pd = diagonal_uv_presentation(z2, u, u);
    pd.pres = reduce_presentation(pd.pres, diagonal_act(z2).act, pd.assign);
    const auto dp = dp_presentation(s, pa.pres, pa.pres, pd.pres);
    const auto fact = dp_factor_presentation(s, dp.pres.pres);
    CHECK(is_presentation_of(fact.pres, rr, fact.assign).ok);
    std::size_t collisions = 0;
    for (Elem ix = 0; ix < x.size(); ++ix) {
      for (Elem ue : u) {
        for (Elem iy = 0; iy < x.size(); ++iy) {
          for (Elem ve : u) {
            if (rr.act(x[ix], ue) == rr.act(x[iy], ve)) ++collisions;
          }
        }
      }
    }
    CHECK(fact.pres.relations().size() ==
          dp.pres.pres.relations().size() + collisions);
  }

  // V = U is required
  {
    const std::vector<Elem> x{0};
    const auto s = dp_setup(rr, x, rr, x, std::vector<Elem>{0},
                            std::vector<Elem>{0, 1});
    const auto pd = diagonal_uv_presentation(z2, std::vector<Elem>{0},
                                             std::vector<Elem>{0, 1});
    auto pa = presentation_on_generators(rr, x);
    const auto dp = dp_presentation(s, pa.pres, pa.pres, pd.pres);
    CHECK_THROWS_AS(dp_factor_presentation(s, dp.pres.pres), ActError);
  }
}

namespace {

// Disjoint union of k copies of an act, built blockwise (test-only).
FiniteAct disjoint_union(const FiniteAct& a, std::size_t k) {
  const std::size_t mo = a.base()->order();
  std::vector<Elem> action(a.size() * k * mo);
  for (std::size_t copy = 0; copy < k; ++copy) {
    for (Elem x = 0; x < a.size(); ++x) {
      for (Elem m = 0; m < mo; ++m) {
        action[(copy * a.size() + x) * mo + m] =
            static_cast<Elem>(copy * a.size() + a.act(x, m));
      }
    }
  }
  return make_act_unchecked(a.base(), a.size() * k, std::move(action));
}

}  // namespace

TEST_CASE("free x free is a disjoint union of diagonal copies") {
  for (const MonoidPtr& m : {cyclic_monoid(2), semilattice_chain(2)}) {
    const FiniteAct diag = diagonal_act(m).act;
    for (std::size_t nx = 1; nx <= 2; ++nx) {
      for (std::size_t ny = 1; ny <= 2; ++ny) {
        const FiniteAct prod = direct_product_act(free_act(nx, m).act(),
                                                  free_act(ny, m).act());
        CHECK(act_isomorphic(prod, disjoint_union(diag, nx * ny)).has_value());
      }
    }
  }
}
