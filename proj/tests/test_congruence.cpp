#include <doctest.h>

#include <random>

#include "actforge/congruence.hpp"
#include "actforge/error.hpp"
#include "actforge/family.hpp"
#include "actforge/suite.hpp"

using namespace actforge;

TEST_CASE("closure of the empty seed is the identity partition") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  const auto c = congruence_closure(rr, {});
  CHECK(c.n_classes() == rr.size());
  CHECK(c.merges().empty());
}

TEST_CASE("seeding (1, g) collapses the right-regular Z2 act") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  const ElemPair seed{0, 1};
  const auto c = congruence_closure(rr, std::span<const ElemPair>(&seed, 1));
  CHECK(c.n_classes() == 1);
}

TEST_CASE("closure on a rank-2 free act, frozen from the fixpoint oracle") {
  const auto z2 = cyclic_monoid(2);
  const FreeAct f = free_act(2, z2, {"x", "y"});
  // (x.1, y.g): indices 0 and 3
  const ElemPair seed{f.index(0, 0), f.index(1, 1)};
  const auto c = congruence_closure(f.act(), {&seed, 1});
  CHECK(c.n_classes() == 2);
  CHECK(c.same(f.index(0, 0), f.index(1, 1)));  // {(x,1), (y,g)}
  CHECK(c.same(f.index(0, 1), f.index(1, 0)));  // {(x,g), (y,1)}
  CHECK(!c.same(f.index(0, 0), f.index(0, 1)));
  // the merge log records one merge per lost class
  CHECK(c.merges().size() == f.act().size() - c.n_classes());
}

TEST_CASE("union-find closure equals the naive fixpoint oracle") {
  std::mt19937_64 rng(20240817);
  for (const auto& nm : standard_family()) {
    for (const auto& na : act_family(nm.monoid, 5)) {
      for (int iter = 0; iter < 50; ++iter) {
        std::vector<ElemPair> pairs;
        const std::size_t k = rng() % 5;
        for (std::size_t i = 0; i < k; ++i) {
          pairs.push_back({static_cast<Elem>(rng() % na.act.size()),
                           static_cast<Elem>(rng() % na.act.size())});
        }
        const auto fast =
            canonical_partition(congruence_closure(na.act, pairs).classes());
        CHECK(fast == naive_closure_partition(na.act, pairs));
      }
    }
  }
}

TEST_CASE("connect_sequence returns shortest replayable X-sequences") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  const ElemPair seed{0, 1};
  const std::span<const ElemPair> pairs(&seed, 1);

  const auto empty = connect_sequence(rr, pairs, 1, 1);
  REQUIRE(empty.has_value());
  CHECK(empty->steps.empty());
  CHECK(replay_certificate(rr, pairs, 1, 1, *empty));

  const auto one = connect_sequence(rr, pairs, 0, 1);
  REQUIRE(one.has_value());
  REQUIRE(one->steps.size() == 1);
  CHECK(one->steps[0].pair_index == 0);
  CHECK(!one->steps[0].reversed);
  CHECK(one->steps[0].multiplier == z2->identity());
  CHECK(replay_certificate(rr, pairs, 0, 1, *one));
}

TEST_CASE("connectivity agrees with the closure partition") {
  std::mt19937_64 rng(99);
  for (const auto& nm : standard_family()) {
    const FiniteAct rr = right_regular_act(nm.monoid);
    std::vector<ElemPair> pairs;
    for (int i = 0; i < 2; ++i) {
      pairs.push_back({static_cast<Elem>(rng() % rr.size()),
                       static_cast<Elem>(rng() % rr.size())});
    }
    const auto c = congruence_closure(rr, pairs);
    for (Elem a = 0; a < rr.size(); ++a) {
      for (Elem b = 0; b < rr.size(); ++b) {
        const auto cert = connect_sequence(rr, pairs, a, b);
        CHECK(cert.has_value() == c.same(a, b));
        if (cert) CHECK(replay_certificate(rr, pairs, a, b, *cert));
      }
    }
  }
}

TEST_CASE("replay rejects tampered certificates") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  const ElemPair seed{0, 1};
  const std::span<const ElemPair> pairs(&seed, 1);
  auto cert = *connect_sequence(rr, pairs, 0, 1);
  cert.steps[0].multiplier = 1;  // 0 = p.m no longer holds
  CHECK(!replay_certificate(rr, pairs, 0, 1, cert));
}

TEST_CASE("quotients collapse classes and stay acts") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);

  const auto ident = congruence_closure(rr, {});
  const QuotientAct copy = quotient_act(rr, ident);
  CHECK(copy.act.size() == rr.size());
  CHECK(act_isomorphic(copy.act, rr).has_value());

  const ElemPair all{0, 1};
  const QuotientAct one =
      quotient_act(rr, congruence_closure(rr, {&all, 1}));
  CHECK(one.act.size() == 1);

  const FreeAct f = free_act(1, z2);
  const ElemPair seed{f.index(0, 0), f.index(0, 1)};
  const QuotientAct q =
      quotient_act(f.act(), congruence_closure(f.act(), {&seed, 1}));
  CHECK(q.act.size() == 1);
  revalidate(q.act);
}

TEST_CASE("quotient_act rejects partitions that are not congruences") {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  // a hand-built partition that is not action-closed cannot arise from
  // congruence_closure, so forge one
  const ActCongruence bogus(rr.size(), {0, 0}, 1, {});
  const auto ok = quotient_act(rr, bogus);  // {1, g} is a congruence here
  CHECK(ok.act.size() == 1);

  const auto e2z = adjoin_zero(semilattice_chain(2));
  const FiniteAct rr3 = right_regular_act(e2z);
  // {1, z} vs {0} is not action-closed: 1.0 = 0 but z.0 = 0 ... use
  // {1} {z, 0} instead: 1.z = z leaves class 0 while z.z stays; forge the
  // split {1, 0} vs {z}: 1.z = z but 0.z = 0 breaks it
  const ActCongruence bad(rr3.size(), {0, 1, 0}, 2, {});
  CHECK_THROWS_AS(quotient_act(rr3, bad), ActError);
}

TEST_CASE("quotient class counts match the closure") {
  std::mt19937_64 rng(7);
  for (const auto& nm : standard_family()) {
    for (const auto& na : act_family(nm.monoid, 4)) {
      std::vector<ElemPair> pairs;
      for (int i = 0; i < 2; ++i) {
        pairs.push_back({static_cast<Elem>(rng() % na.act.size()),
                         static_cast<Elem>(rng() % na.act.size())});
      }
      const auto c = congruence_closure(na.act, pairs);
      CHECK(quotient_act(na.act, c).act.size() == c.n_classes());
    }
  }
}
