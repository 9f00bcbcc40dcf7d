#include <doctest.h>

#include <algorithm>

#include "actforge/act.hpp"
#include "actforge/diagonal.hpp"
#include "actforge/error.hpp"
#include "actforge/family.hpp"

using namespace actforge;

TEST_CASE("validate_act checks both act axioms") {
  const auto z2 = cyclic_monoid(2);

  const FiniteAct trivial = validate_act(z2, 1, {0, 0});
  CHECK(trivial.size() == 1);

  const FiniteAct rr = validate_act(z2, 2, z2->table());
  CHECK(rr.act(0, 1) == 1);

  // a.g = 1 for both a is inconsistent with g*g = 1
  try {
    validate_act(z2, 2, {0, 1, 1, 1});
    FAIL("expected AssociativityFails");
  } catch (const ActError& e) {
    CHECK(e.kind() == ErrorKind::AssociativityFails);
    CHECK(e.witness().size() == 3);
  }

  // identity column broken
  try {
    validate_act(z2, 2, {1, 1, 0, 0});
    FAIL("expected IdentityLawFails");
  } catch (const ActError& e) {
    CHECK(e.kind() == ErrorKind::IdentityLawFails);
  }
}

TEST_CASE("the right-regular act is free with basis {1}") {
  CHECK(right_regular_act(trivial_monoid()).size() == 1);

  const auto e2 = semilattice_chain(2);
  const FiniteAct rr = right_regular_act(e2);
  CHECK(rr.act(0, 1) == 1);  // 1.z = z
  CHECK(rr.act(1, 1) == 1);  // z.z = z

  const auto basis = is_free(rr);
  REQUIRE(basis.has_value());
  CHECK(*basis == std::vector<Elem>{e2->identity()});
}

TEST_CASE("free acts expose the pair codec and basis") {
  const auto t = trivial_monoid();
  CHECK(free_act(1, t).act().size() == 1);

  const auto z2 = cyclic_monoid(2);
  const FreeAct f = free_act(2, z2, {"x", "y"});
  CHECK(f.act().size() == 4);
  CHECK(f.basis() == std::vector<Elem>{0, 2});
  CHECK(f.index(1, 1) == 3);
  CHECK(f.decode(3) == std::pair<Elem, Elem>{1, 1});
  // (x, m).n = (x, mn)
  CHECK(f.act().act(f.index(0, 1), 1) == f.index(0, 0));

  const auto basis = is_free(f.act());
  REQUIRE(basis.has_value());
  CHECK(*basis == f.basis());
}

TEST_CASE("is_generating_set scans one application deep") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);

  std::vector<Elem> all{0, 1};
  CHECK(is_generating_set(rr, all));
  CHECK(is_generating_set(rr, std::vector<Elem>{0}));

  const auto e2 = semilattice_chain(2);
  const DiagonalAct diag = diagonal_act(e2);
  // {(z, z)} leaves (1, 1) unreachable
  CHECK(!is_generating_set(diag.act, std::vector<Elem>{diag.index(1, 1)}));
}

TEST_CASE("minimal generating sets are exhaustive and lexicographic") {
  const auto z2 = cyclic_monoid(2);

  const FreeAct f = free_act(2, z2);
  const auto gs_free = minimal_generating_set(f.act());
  CHECK(gs_free.minimal_certified);
  CHECK(gs_free.elems == f.basis());

  const auto gs_z2 = minimal_generating_set(diagonal_act(z2).act);
  CHECK(gs_z2.elems == std::vector<Elem>{0, 1});  // {(1,1), (1,g)}

  const auto e2 = semilattice_chain(2);
  const auto gs_e2 = minimal_generating_set(diagonal_act(e2).act);
  CHECK(gs_e2.elems.size() == 3);
  CHECK(gs_e2.elems == std::vector<Elem>{0, 1, 2});

  // independent brute-force check that no 2-subset generates E2 x E2
  const DiagonalAct d = diagonal_act(e2);
  for (Elem a = 0; a < d.act.size(); ++a) {
    for (Elem b = a + 1; b < d.act.size(); ++b) {
      CHECK(!is_generating_set(d.act, std::vector<Elem>{a, b}));
    }
  }
}

TEST_CASE("greedy fallback is flagged and still generates") {
  const auto z3 = cyclic_monoid(3);
  const FreeAct f = free_act(7, z3);  // 21 elements, above the default cap
  const auto gs = minimal_generating_set(f.act());
  CHECK(!gs.minimal_certified);
  CHECK(is_generating_set(f.act(), gs.elems));
}

TEST_CASE("direct products of acts") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  const FiniteAct single = make_act_unchecked(z2, 1, {0, 0});

  const FiniteAct p = direct_product_act(rr, single);
  CHECK(p.size() == 2);
  CHECK(act_isomorphic(p, rr).has_value());

  // the diagonal act is the square of the right-regular act
  const DiagonalAct diag = diagonal_act(z2);
  const FiniteAct square = direct_product_act(rr, rr);
  CHECK(diag.act.action() == square.action());

  const FiniteAct three = make_act_unchecked(z2, 3, {0, 0, 1, 1, 2, 2});
  CHECK(direct_product_act(rr, three).size() == 6);

  const auto e2 = semilattice_chain(2);
  CHECK_THROWS_AS(direct_product_act(rr, right_regular_act(e2)), ActError);
}

TEST_CASE("act isomorphism finds maps and rejects non-isomorphic acts") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);

  const auto self = act_isomorphic(rr, rr);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<Elem>{0, 1});

  CHECK(act_isomorphic(free_act(1, z2).act(), rr).has_value());

  // trivial action vs the swap action on two points
  const FiniteAct still = make_act_unchecked(z2, 2, {0, 0, 1, 1});
  CHECK(!act_isomorphic(still, rr).has_value());

  // reflexivity and symmetry across a small family
  for (const auto& nm : standard_family()) {
    for (const auto& na : act_family(nm.monoid, 4)) {
      CHECK(act_isomorphic(na.act, na.act).has_value());
    }
  }
  const FiniteAct a = free_act(2, z2).act();
  const FiniteAct b = direct_product_act(rr, make_act_unchecked(z2, 2, {0, 0, 1, 1}));
  const bool ab = act_isomorphic(a, b).has_value();
  const bool ba = act_isomorphic(b, a).has_value();
  CHECK(ab == ba);
}

TEST_CASE("is_free certifies bases and rejects non-free acts") {
  const auto z2 = cyclic_monoid(2);
  const auto basis = is_free(diagonal_act(z2).act);
  REQUIRE(basis.has_value());
  CHECK(basis->size() == 2);
  CHECK(*basis == std::vector<Elem>{0, 1});

  const auto e2 = semilattice_chain(2);
  CHECK(!is_free(diagonal_act(e2).act).has_value());

  // |A| not divisible by |M|
  const FiniteAct odd = make_act_unchecked(z2, 3, {0, 0, 1, 1, 2, 2});
  CHECK(!is_free(odd).has_value());

  const auto z3 = cyclic_monoid(3);
  CHECK_THROWS_AS(is_free(free_act(7, z3).act()), ActError);
}

TEST_CASE("minimal generating sets generate across the family") {
  for (const auto& nm : standard_family()) {
    for (const auto& na : act_family(nm.monoid, 4)) {
      const auto gs = minimal_generating_set(na.act);
      CHECK(is_generating_set(na.act, gs.elems));
    }
  }
}
