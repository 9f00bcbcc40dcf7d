#include <doctest.h>

#include <algorithm>

#include "actforge/diagonal.hpp"
#include "actforge/error.hpp"
#include "actforge/family.hpp"

using namespace actforge;

namespace {

std::vector<Elem> square_elems(const DiagonalAct& d, std::span<const Elem> u) {
  std::vector<Elem> out;
  for (Elem a : u) {
    for (Elem b : u) out.push_back(d.index(a, b));
  }
  return out;
}

}  // namespace

TEST_CASE("diagonal acts have |M|^2 elements and the expected orbits") {
  CHECK(diagonal_act(trivial_monoid()).act.size() == 1);
  CHECK(diagonal_act(cyclic_monoid(3)).act.size() == 9);

  const auto z2 = cyclic_monoid(2);
  const DiagonalAct d = diagonal_act(z2);
  // two orbits, reachable together from {(1,1), (1,g)}
  CHECK(d.act.orbit(d.index(0, 0)) ==
        std::vector<Elem>{d.index(0, 0), d.index(1, 1)});
  CHECK(is_generating_set(d.act,
                          std::vector<Elem>{d.index(0, 0), d.index(0, 1)}));
}

TEST_CASE("square generating sets are minimal and lexicographic") {
  CHECK(square_generating_set(trivial_monoid()) == std::vector<Elem>{0});
  CHECK(square_generating_set(cyclic_monoid(2)) == std::vector<Elem>{0, 1});
  CHECK(square_generating_set(semilattice_chain(2)) ==
        std::vector<Elem>{0, 1});

  // {1} x {1} misses (1, g)
  const auto z2 = cyclic_monoid(2);
  const DiagonalAct d = diagonal_act(z2);
  CHECK(!is_generating_set(d.act, square_elems(d, std::vector<Elem>{0})));

  // every family square verifies
  for (const auto& nm : standard_family()) {
    const auto u = square_generating_set(nm.monoid);
    const DiagonalAct dd = diagonal_act(nm.monoid);
    CHECK(is_generating_set(dd.act, square_elems(dd, u)));
  }
}

TEST_CASE("zero extension generators match the displayed set") {
  const auto t = trivial_monoid();
  const auto z = zero_extension_generators(t, std::vector<Elem>{0});
  REQUIRE(z.gens.size() == 3);  // (1,1), (1,0), (0,1)
  CHECK(z.m0->order() == 2);
  CHECK((z.gens[0].first == 0 && z.gens[0].second == 0));
  CHECK((z.gens[1].first == 0 && z.gens[1].second == 1));
  CHECK((z.gens[2].first == 1 && z.gens[2].second == 0));

  const auto z2 = cyclic_monoid(2);
  const auto z8 = zero_extension_generators(z2, std::vector<Elem>{0, 1});
  CHECK(z8.gens.size() == 8);  // (|U|+1)^2 - 1

  CHECK_THROWS_AS(zero_extension_generators(z2, std::vector<Elem>{0}),
                  ActError);  // U x U must generate first

  for (const auto& nm : standard_family()) {
    const auto u = square_generating_set(nm.monoid);
    const auto ze = zero_extension_generators(nm.monoid, u);
    CHECK(ze.gens.size() == (u.size() + 1) * (u.size() + 1) - 1);
  }
}

TEST_CASE("product diagonal generators and projections verify") {
  const auto t = trivial_monoid();
  CHECK(product_diagonal_generators(t, t, std::vector<Elem>{0},
                                    std::vector<Elem>{0})
            .size() == 1);

  const auto z2 = cyclic_monoid(2);
  const auto gens = product_diagonal_generators(
      z2, z2, std::vector<Elem>{0, 1}, std::vector<Elem>{0, 1});
  CHECK(gens.size() == 16);

  CHECK(project_diagonal_generators(z2, z2, gens, true) ==
        std::vector<Elem>{0, 1});
  CHECK(project_diagonal_generators(z2, z2, gens, false) ==
        std::vector<Elem>{0, 1});

  CHECK_THROWS_AS(product_diagonal_generators(z2, z2, std::vector<Elem>{0},
                                              std::vector<Elem>{0, 1}),
                  ActError);
}

TEST_CASE("restricting a diagonal presentation to a submonoid") {
  const auto e2 = semilattice_chain(2);

  // N = M keeps every relation (pure filtering)
  {
    const auto u = square_generating_set(e2);
    const auto p = diagonal_square_presentation(e2, u);
    const auto r = restrict_presentation_to_submonoid(
        p.pres, p.assign, std::vector<Elem>{0, 1}, u);
    CHECK(r.pres.pres.relations().size() == p.pres.relations().size());
    CHECK(r.submonoid->order() == 2);
  }

  // N = {1} inside E2: M \ N = {z} is an ideal
  {
    const auto u = square_generating_set(e2);
    const auto p = diagonal_square_presentation(e2, u);
    const auto r = restrict_presentation_to_submonoid(
        p.pres, p.assign, std::vector<Elem>{0}, u);
    CHECK(r.submonoid->order() == 1);
    CHECK(r.pres.pres.n_gens() == 1);
    CHECK(r.pres.pres.relations().size() <= p.pres.relations().size());
  }

  // M = U(N, A): the M-part of the attach monoid is such a submonoid
  {
    const auto z2 = cyclic_monoid(2);
    const auto big = attach_act_monoid(z2, right_regular_act(z2));
    const auto u = square_generating_set(big);
    const auto p = diagonal_square_presentation(big, u);
    std::vector<Elem> n_elems{0, 1};
    const auto r =
        restrict_presentation_to_submonoid(p.pres, p.assign, n_elems, u);
    CHECK(r.submonoid->same_table(*z2));
  }

  // {1, g} is not closed inside Z3
  const auto z3 = cyclic_monoid(3);
  {
    const auto u = square_generating_set(z3);
    const auto p = diagonal_square_presentation(z3, u);
    try {
      restrict_presentation_to_submonoid(p.pres, p.assign,
                                         std::vector<Elem>{0, 1}, u);
      FAIL("expected NotSubmonoid");
    } catch (const ActError& e) {
      CHECK(e.kind() == ErrorKind::NotSubmonoid);
    }
  }

  // {1} inside Z2: the complement {g} is not an ideal (g*g = 1)
  const auto z2 = cyclic_monoid(2);
  {
    const auto u = square_generating_set(z2);
    const auto p = diagonal_square_presentation(z2, u);
    try {
      restrict_presentation_to_submonoid(p.pres, p.assign,
                                         std::vector<Elem>{0}, u);
      FAIL("expected ComplementNotIdeal");
    } catch (const ActError& e) {
      CHECK(e.kind() == ErrorKind::ComplementNotIdeal);
    }
  }
}

TEST_CASE("zero extension presentations verify with the exact count") {
  for (const MonoidPtr& m :
       {trivial_monoid(), cyclic_monoid(2), semilattice_chain(2)}) {
    const auto u = square_generating_set(m);
    auto pd = diagonal_square_presentation(m, u);
    pd.pres = reduce_presentation(pd.pres, diagonal_act(m).act, pd.assign);
    const FiniteAct rr = right_regular_act(m);
    auto pm = presentation_on_generators(rr, u);
    pm.pres = reduce_presentation(pm.pres, rr, pm.assign);

    const auto z = zero_extension_presentation(m, pd.pres, pm.pres, u);
    CHECK(z.pres.pres.relations().size() ==
          pd.pres.relations().size() + 2 * pm.pres.relations().size() +
              z.z.size() * z.z.size());
    if (m->order() == 1) CHECK(z.z.size() == 3);
  }
}

TEST_CASE("product diagonal presentations verify and count T1 exactly") {
  const auto t = trivial_monoid();
  const auto z2 = cyclic_monoid(2);
  const auto e2 = semilattice_chain(2);

  const std::pair<MonoidPtr, MonoidPtr> pairs[] = {
      {t, t}, {t, z2}, {z2, z2}, {z2, e2}};
  for (const auto& [m, n] : pairs) {
    const auto u = square_generating_set(m);
    const auto v = square_generating_set(n);
    auto pm = diagonal_square_presentation(m, u);
    pm.pres = reduce_presentation(pm.pres, diagonal_act(m).act, pm.assign);
    auto pn = diagonal_square_presentation(n, v);
    pn.pres = reduce_presentation(pn.pres, diagonal_act(n).act, pn.assign);

    const auto prod =
        product_diagonal_presentation(m, n, pm.pres, u, pn.pres, v);
    CHECK(prod.t1_count ==
          pm.pres.relations().size() * v.size() * v.size() * n->order());
    CHECK(prod.t2_count ==
          pn.pres.relations().size() * u.size() * u.size() * m->order());

    // both factor extractions verify
    product_diagonal_factor_presentation(m, n, prod.pres.pres,
                                         prod.pres.assign, true);
    product_diagonal_factor_presentation(m, n, prod.pres.pres,
                                         prod.pres.assign, false);
  }
}

TEST_CASE("factor extraction works on an independent presentation over Z") {
  const auto z2 = cyclic_monoid(2);
  const auto e2 = semilattice_chain(2);
  const auto u = square_generating_set(z2);
  const auto v = square_generating_set(e2);
  const auto gens = product_diagonal_generators(z2, e2, u, v);

  const auto mn = direct_product_monoid(z2, e2);
  const DiagonalAct dmn = diagonal_act(mn);
  std::vector<GenLabel> labels;
  std::vector<Elem> values;
  for (const auto& g : gens) {
    labels.push_back({"", {g.first, g.second}});
    values.push_back(dmn.index(g.first, g.second));
  }
  const auto p = kernel_presentation(dmn.act, labels, values);
  const auto fm =
      product_diagonal_factor_presentation(z2, e2, p.pres, p.assign, true);
  CHECK(is_presentation_of(fm.pres, diagonal_act(z2).act, fm.assign).ok);
  const auto fn =
      product_diagonal_factor_presentation(z2, e2, p.pres, p.assign, false);
  CHECK(is_presentation_of(fn.pres, diagonal_act(e2).act, fn.assign).ok);
}

TEST_CASE("attach generators: V = XU u U, with projections") {
  const auto t = trivial_monoid();
  const FiniteAct single = make_act_unchecked(t, 1, {0}, {"a"});
  const auto att =
      attach_act_generators(t, single, std::vector<Elem>{0},
                            std::vector<Elem>{0});
  CHECK(att.u_monoid->order() == 2);
  CHECK(att.v == std::vector<Elem>{0, 1});  // {1, a}

  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  const auto x = minimal_generating_set(rr).elems;
  const auto att2 = attach_act_generators(z2, rr, x, std::vector<Elem>{0, 1});
  CHECK(att2.v.size() <= x.size() * 2 + 2);

  const auto proj = attach_act_project_generators(z2, rr, att2.v);
  CHECK(is_generating_set(rr, proj.a_gens));
  const DiagonalAct dm = diagonal_act(z2);
  std::vector<Elem> sq;
  for (Elem a : proj.m_gens) {
    for (Elem b : proj.m_gens) sq.push_back(dm.index(a, b));
  }
  CHECK(is_generating_set(dm.act, sq));

  // 1 must be in U
  CHECK_THROWS_AS(
      attach_act_generators(z2, rr, x, std::vector<Elem>{1}),
      ActError);
}

TEST_CASE("attach factor presentations recover the act") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  const auto x = minimal_generating_set(rr).elems;
  const std::vector<Elem> u{0, 1};
  const auto att = attach_act_generators(z2, rr, x, u);

  auto p = diagonal_square_presentation(att.u_monoid, att.v);
  const auto fact =
      attach_act_factor_presentation(z2, rr, p.pres, p.assign, x, u);
  CHECK(is_presentation_of(fact.pres, rr, fact.assign).ok);

  // every (x, u), (y, v) with xu = yv contributes one relation in the tail
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
  CHECK(fact.pres.relations().size() >= collisions);

  // singleton act over the trivial monoid
  const auto t = trivial_monoid();
  const FiniteAct single = make_act_unchecked(t, 1, {0}, {"a"});
  const auto att1 = attach_act_generators(t, single, std::vector<Elem>{0},
                                          std::vector<Elem>{0});
  auto p1 = diagonal_square_presentation(att1.u_monoid, att1.v);
  const auto fact1 = attach_act_factor_presentation(
      t, single, p1.pres, p1.assign, std::vector<Elem>{0},
      std::vector<Elem>{0});
  CHECK(fact1.pres.n_gens() == 1);
}
