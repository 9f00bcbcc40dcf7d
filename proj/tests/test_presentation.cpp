#include <doctest.h>

#include <algorithm>
#include <random>

#include "actforge/error.hpp"
#include "actforge/family.hpp"
#include "actforge/presentation.hpp"

using namespace actforge;

TEST_CASE("symmetrize adds reversals once and keeps source indices") {
  const auto z2 = cyclic_monoid(2);
  CHECK(symmetrize({}).empty());

  const std::vector<ActRelation> one{{{0, 0}, {0, 1}}};
  const auto sym = symmetrize(one);
  REQUIRE(sym.size() == 2);
  CHECK(sym[0].rel == one[0]);
  CHECK(!sym[0].reversed);
  CHECK(sym[1].rel == ActRelation{{0, 1}, {0, 0}});
  CHECK(sym[1].reversed);
  CHECK(sym[1].source_index == 0);

  // already symmetric: no growth
  const std::vector<ActRelation> both{{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
  CHECK(symmetrize(both).size() == 2);
}

TEST_CASE("relation_sides lists every side of every relation") {
  CHECK(relation_sides({}).empty());

  const FreeActElem u{0, 0}, v{0, 1}, w{1, 0};
  const std::vector<ActRelation> single{{u, v}};
  auto sides = relation_sides(single);
  REQUIRE(sides.size() == 2);
  CHECK(std::count(sides.begin(), sides.end(), u) == 1);
  CHECK(std::count(sides.begin(), sides.end(), v) == 1);

  const std::vector<ActRelation> two{{u, v}, {u, w}};
  sides = relation_sides(two);
  REQUIRE(sides.size() == 4);
  CHECK(std::count(sides.begin(), sides.end(), u) == 2);
  CHECK(std::count(sides.begin(), sides.end(), v) == 1);
  CHECK(std::count(sides.begin(), sides.end(), w) == 1);
}

TEST_CASE("defined_act builds F_X modulo the closure") {
  const auto z2 = cyclic_monoid(2);

  const ActPresentation free_one(z2, {{"x", {}}}, {});
  const DefinedAct da = defined_act(free_one);
  CHECK(da.quotient.act.size() == 2);
  CHECK(act_isomorphic(da.quotient.act, right_regular_act(z2)).has_value());

  const ActPresentation collapse(z2, {{"x", {}}}, {{{0, 0}, {0, 1}}});
  CHECK(defined_act(collapse).quotient.act.size() == 1);
}

TEST_CASE("satisfies evaluates relations under an assignment") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  const std::vector<Elem> assign{0};

  CHECK(satisfies(rr, assign, {}));
  const std::vector<ActRelation> refl{{{0, 1}, {0, 1}}};
  CHECK(satisfies(rr, assign, refl));
  const std::vector<ActRelation> collapse{{{0, 0}, {0, 1}}};
  CHECK(!satisfies(rr, assign, collapse));
}

TEST_CASE("satisfies is monotone under subsets") {
  const auto e2 = semilattice_chain(2);
  const FiniteAct rr = right_regular_act(e2);
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<ActRelation> rels;
    for (int i = 0; i < 4; ++i) {
      rels.push_back({{0, static_cast<Elem>(rng() % 2)},
                      {0, static_cast<Elem>(rng() % 2)}});
    }
    const std::vector<Elem> assign{static_cast<Elem>(rng() % 2)};
    if (satisfies(rr, assign, rels)) {
      for (std::size_t drop = 0; drop < rels.size(); ++drop) {
        std::vector<ActRelation> fewer;
        for (std::size_t j = 0; j < rels.size(); ++j) {
          if (j != drop) fewer.push_back(rels[j]);
        }
        CHECK(satisfies(rr, assign, fewer));
      }
    }
  }
}

TEST_CASE("is_consequence finds replayable R-sequences") {
  const auto z2 = cyclic_monoid(2);

  const ActPresentation collapse(z2, {{"x", {}}}, {{{0, 0}, {0, 1}}});
  const auto empty = is_consequence(collapse, {0, 1}, {0, 1});
  REQUIRE(empty.has_value());
  CHECK(empty->steps.empty());

  const auto one = is_consequence(collapse, {0, 0}, {0, 1});
  REQUIRE(one.has_value());
  CHECK(one->steps.size() == 1);
  CHECK(replay_certificate(collapse, {0, 0}, {0, 1}, *one));

  const ActPresentation free_two(z2, {{"x", {}}, {"y", {}}}, {});
  CHECK(!is_consequence(free_two, {0, 0}, {1, 0}).has_value());
}

TEST_CASE("is_consequence agrees with the defined act's projection") {
  const auto e2 = semilattice_chain(2);
  const ActPresentation p(
      e2, {{"x", {}}, {"y", {}}},
      {{{0, 1}, {1, 1}}});  // x.z = y.z
  const DefinedAct da = defined_act(p);
  for (Elem g1 = 0; g1 < 2; ++g1) {
    for (Elem m1 = 0; m1 < 2; ++m1) {
      for (Elem g2 = 0; g2 < 2; ++g2) {
        for (Elem m2 = 0; m2 < 2; ++m2) {
          const FreeActElem w1{g1, m1}, w2{g2, m2};
          const auto cert = is_consequence(p, w1, w2);
          CHECK(cert.has_value() == (da.eval(w1) == da.eval(w2)));
          if (cert) CHECK(replay_certificate(p, w1, w2, *cert));
        }
      }
    }
  }
}

TEST_CASE("the presentation oracle separates the three failure modes") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  const FiniteAct single = make_act_unchecked(z2, 1, {0, 0});

  // free on one generator does not present the singleton: kernel is
  // strictly coarser than the closure
  const ActPresentation free_one(z2, {{"x", {}}}, {});
  const auto gap = is_presentation_of(free_one, single, std::vector<Elem>{0});
  CHECK(!gap.ok);
  CHECK(gap.failure == VerifyFailure::KernelGap);
  CHECK(gap.kernel_classes == 1);
  CHECK(gap.closure_classes == 2);

  // collapsing relation is not satisfied by the right-regular act
  const ActPresentation collapse(z2, {{"x", {}}}, {{{0, 0}, {0, 1}}});
  const auto unsat = is_presentation_of(collapse, rr, std::vector<Elem>{0});
  CHECK(!unsat.ok);
  CHECK(unsat.failure == VerifyFailure::Unsatisfied);
  CHECK(unsat.relation_index == 0);

  // non-generating assignment
  const auto e2 = semilattice_chain(2);
  const FiniteAct rr2 = right_regular_act(e2);
  const ActPresentation zgen(e2, {{"z", {}}}, {});
  const auto nsur = is_presentation_of(zgen, rr2, std::vector<Elem>{1});
  CHECK(!nsur.ok);
  CHECK(nsur.failure == VerifyFailure::NotSurjective);
}

TEST_CASE("canonical presentations verify across the family") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);

  const auto can = canonical_presentation(rr, std::vector<Elem>{1});
  CHECK(can.pres.n_gens() == 2);
  CHECK(can.pres.relations().size() == 2);
  CHECK(is_presentation_of(can.pres, rr, can.assign).ok);

  // singleton act, generators all of M: |M| relations
  const FiniteAct single = make_act_unchecked(z2, 1, {0, 0});
  const auto c1 = canonical_presentation(single, std::vector<Elem>{0, 1});
  CHECK(c1.pres.relations().size() == 2);

  CHECK_THROWS_AS(canonical_presentation(rr, std::vector<Elem>{0}),
                  ActError);  // {1} does not generate Z2

  for (const auto& nm : standard_family()) {
    std::vector<Elem> all(nm.monoid->order());
    for (Elem e = 0; e < nm.monoid->order(); ++e) all[e] = e;
    for (const auto& na : act_family(nm.monoid, 3)) {
      const auto c = canonical_presentation(na.act, all);
      CHECK(is_presentation_of(c.pres, na.act, c.assign).ok);
      // the defined act is isomorphic to the original
      CHECK(act_isomorphic(defined_act(c.pres).quotient.act, na.act)
                .has_value());
    }
  }
}

TEST_CASE("defined_act verifies against its own projection assignment") {
  for (const auto& nm : standard_family()) {
    std::vector<Elem> all(nm.monoid->order());
    for (Elem e = 0; e < nm.monoid->order(); ++e) all[e] = e;
    for (const auto& na : act_family(nm.monoid, 3)) {
      const auto c = canonical_presentation(na.act, all);
      const DefinedAct da = defined_act(c.pres);
      CHECK(is_presentation_of(c.pres, da.quotient.act, da.basis_assign()).ok);
    }
  }
}

TEST_CASE("presentations on chosen generators verify by construction") {
  const auto e2 = semilattice_chain(2);
  const FiniteAct rr = right_regular_act(e2);
  const auto p = presentation_on_generators(rr, std::vector<Elem>{0});
  CHECK(is_presentation_of(p.pres, rr, p.assign).ok);

  CHECK_THROWS_AS(presentation_on_generators(rr, std::vector<Elem>{1}),
                  ActError);  // {z} does not generate
}

TEST_CASE("two generating assignments both admit verified presentations") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  const auto p1 = presentation_on_generators(rr, std::vector<Elem>{0});
  const auto p2 = presentation_on_generators(rr, std::vector<Elem>{0, 1});
  CHECK(is_presentation_of(p1.pres, rr, p1.assign).ok);
  CHECK(is_presentation_of(p2.pres, rr, p2.assign).ok);
}

TEST_CASE("reduce_presentation drops duplicates and reaches irredundance") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);

  auto can = canonical_presentation(rr, std::vector<Elem>{1});
  std::vector<ActRelation> doubled = can.pres.relations();
  doubled.push_back(doubled.front());
  const ActPresentation padded = can.pres.with_relations(doubled);
  const ActPresentation reduced = reduce_presentation(padded, rr, can.assign);
  CHECK(reduced.relations().size() < padded.relations().size());
  CHECK(is_presentation_of(reduced, rr, can.assign).ok);

  // canonical over {g, 1}: the x = 1 relations are reflexive, all dropped
  const auto can2 = canonical_presentation(rr, std::vector<Elem>{1, 0});
  const ActPresentation red2 = reduce_presentation(can2.pres, rr, can2.assign);
  for (const auto& r : red2.relations()) {
    CHECK(!(r.lhs == r.rhs));
  }

  // a fixpoint: reducing again changes nothing
  const ActPresentation red3 = reduce_presentation(red2, rr, can2.assign);
  CHECK(red3.relations().size() == red2.relations().size());

  // irredundance: removing any remaining relation breaks verification
  for (std::size_t i = 0; i < red2.relations().size(); ++i) {
    std::vector<ActRelation> probe;
    for (std::size_t j = 0; j < red2.relations().size(); ++j) {
      if (j != i) probe.push_back(red2.relations()[j]);
    }
    CHECK(!is_presentation_of(red2.with_relations(probe), rr, can2.assign).ok);
  }

  CHECK_THROWS_AS(
      reduce_presentation(ActPresentation(z2, {{"x", {}}}, {}),
                          make_act_unchecked(z2, 1, {0, 0}),
                          std::vector<Elem>{0}),
      ActError);  // input does not present the act
}

TEST_CASE("kernel presentations accept structured generator labels") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  auto p = kernel_presentation(rr, {{"a", {0, 7}}, {"b", {1, 9}}},
                               std::vector<Elem>{0, 1});
  CHECK(p.pres.gens()[0].key == std::vector<Elem>{0, 7});
  CHECK(is_presentation_of(p.pres, rr, p.assign).ok);
}
