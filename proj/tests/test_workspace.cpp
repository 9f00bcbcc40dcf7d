#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "actforge/error.hpp"
#include "actforge/family.hpp"
#include "actforge/workspace.hpp"

using namespace actforge;
using nlohmann::json;

namespace {

ErrorKind load_error(const json& doc) {
  try {
    Workspace::from_json(doc);
  } catch (const ActError& e) {
    return e.kind();
  }
  FAIL("expected an ActError");
  return ErrorKind::BadArgument;
}

}  // namespace

TEST_CASE("a minimal document with one trivial monoid loads") {
  const json doc = {
      {"monoids",
       {{"t", {{"order", 1}, {"identity", 0}, {"table", {{0}}}}}}}};
  const Workspace ws = Workspace::from_json(doc);
  CHECK(ws.monoid("t")->order() == 1);
}

TEST_CASE("save(load(doc)) is bit-identical for canonical documents") {
  Workspace ws;
  ws.add_monoid("Z2", cyclic_monoid(2), Recipe{"cyclic", {"2"}});
  ws.add_act("rr", "Z2", right_regular_act(cyclic_monoid(2)),
             Recipe{"right_regular_act", {"Z2"}});
  ws.add_genset("g", {"rr", {0}, true, std::nullopt});
  {
    const FiniteAct rr = right_regular_act(cyclic_monoid(2));
    auto p = presentation_on_generators(rr, std::vector<Elem>{0});
    VerificationRecord rec;
    rec.act_name = "rr";
    rec.assign = p.assign;
    rec.verified = true;
    ws.add_presentation(
        "p", PresentationEntry{"Z2", p.pres, rec, std::nullopt});
  }
  const std::string path1 = "ws_roundtrip_1.json";
  const std::string path2 = "ws_roundtrip_2.json";
  ws.save(path1);
  Workspace::load(path1).save(path2);
  std::ifstream f1(path1), f2(path2);
  const std::string s1((std::istreambuf_iterator<char>(f1)),
                       std::istreambuf_iterator<char>());
  const std::string s2((std::istreambuf_iterator<char>(f2)),
                       std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
  std::remove(path1.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("a broken associativity cell is reported with its triple") {
  const json doc = {
      {"monoids",
       {{"bad",
         {{"order", 3},
          {"identity", 0},
          {"table", {{0, 1, 2}, {1, 2, 2}, {2, 1, 1}}}}}}}};
  try {
    Workspace::from_json(doc);
    FAIL("expected ValidationError");
  } catch (const ActError& e) {
    CHECK(e.kind() == ErrorKind::ValidationError);
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("dangling references are rejected") {
  const json doc = {
      {"acts",
       {{"orphan",
         {{"monoid", "missing"},
          {"size", 1},
          {"action", {{0}}}}}}}};
  CHECK(load_error(doc) == ErrorKind::DanglingReference);
}

TEST_CASE("recipes re-execute and must match the stored table") {
  json doc = {
      {"monoids",
       {{"claimed_z2",
         {{"order", 2},
          {"identity", 0},
          {"table", {{0, 1}, {1, 1}}},  // E2's table
          {"recipe", {{"op", "cyclic"}, {"args", {"2"}}}}}}}}};
  CHECK(load_error(doc) == ErrorKind::ValidationError);

  doc["monoids"]["claimed_z2"]["table"] = {{0, 1}, {1, 0}};
  const Workspace ws = Workspace::from_json(doc);
  CHECK(ws.monoid("claimed_z2")->mul(1, 1) == 0);
}

TEST_CASE("cyclic recipe references are rejected") {
  json entry_a, entry_b;
  entry_a["order"] = 1;
  entry_a["identity"] = 0;
  entry_a["table"] = json::array({json::array({0})});
  entry_b = entry_a;
  entry_a["recipe"]["op"] = "adjoin_zero";
  entry_a["recipe"]["args"] = json::array({"b"});
  entry_b["recipe"]["op"] = "adjoin_zero";
  entry_b["recipe"]["args"] = json::array({"a"});
  json doc;
  doc["monoids"]["a"] = entry_a;
  doc["monoids"]["b"] = entry_b;
  CHECK(load_error(doc) == ErrorKind::DanglingReference);
}

TEST_CASE("stored verification verdicts are recomputed on load") {
  Workspace ws;
  ws.add_monoid("Z2", cyclic_monoid(2));
  ws.add_act("rr", "Z2", right_regular_act(cyclic_monoid(2)));
  const FiniteAct rr = right_regular_act(cyclic_monoid(2));
  auto p = presentation_on_generators(rr, std::vector<Elem>{0});
  VerificationRecord rec;
  rec.act_name = "rr";
  rec.assign = p.assign;
  rec.verified = false;  // wrong on purpose
  ws.add_presentation("p", PresentationEntry{"Z2", p.pres, rec, std::nullopt});
  CHECK(load_error(ws.to_json()) == ErrorKind::ValidationError);
}

TEST_CASE("derivation certificates survive a JSON round trip") {
  const auto z2 = cyclic_monoid(2);
  const ActPresentation collapse(z2, {{"x", {}}}, {{{0, 0}, {0, 1}}});
  const FreeActElem w1{0, 0}, w2{0, 1};
  const auto cert = is_consequence(collapse, w1, w2);
  REQUIRE(cert.has_value());

  const json j = derivation_to_json(w1, w2, *cert);
  const DerivationDocument doc = derivation_from_json(j);
  CHECK(doc.lhs == w1);
  CHECK(doc.rhs == w2);
  CHECK(replay_certificate(collapse, doc.lhs, doc.rhs, doc.cert));
}

TEST_CASE("connectedness certificates survive a JSON round trip") {
  const auto e2 = semilattice_chain(2);
  const auto z2 = cyclic_monoid(2);
  const FiniteAct a = right_regular_act(z2);
  const auto u = left_zero_u(a, std::vector<Elem>{0, 1}, e2, 1);
  const NAMap theta{1, 0};
  const NAMap cst = namap::constant(2, theta[0]);
  const auto cert = is_u_connected(e2, 2, theta, cst, u, 0);
  REQUIRE(cert.has_value());

  const json j = connectedness_to_json(0, theta, cst, u, *cert);
  const ConnectednessDocument doc = connectedness_from_json(j);
  CHECK(doc.theta == theta);
  CHECK(replay_connectedness(e2, doc.a, doc.theta, doc.phi, doc.u, doc.cert));
}

TEST_CASE("parse errors carry position information") {
  const std::string path = "ws_bad_parse.json";
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  try {
    Workspace::load(path);
    FAIL("expected ParseError");
  } catch (const ActError& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
  std::remove(path.c_str());
}

TEST_CASE("act recipes rebuild wreath acts") {
  Workspace ws;
  ws.add_monoid("Z2", cyclic_monoid(2), Recipe{"cyclic", {"2"}});
  ws.add_monoid("E2", semilattice_chain(2), Recipe{"chain", {"2"}});
  ws.add_act("a", "Z2", right_regular_act(cyclic_monoid(2)),
             Recipe{"right_regular_act", {"Z2"}});
  ws.add_act("b", "E2", right_regular_act(semilattice_chain(2)),
             Recipe{"right_regular_act", {"E2"}});
  const WreathMonoid w = wreath_monoid(cyclic_monoid(2), semilattice_chain(2),
                                       right_regular_act(cyclic_monoid(2)));
  ws.add_monoid("W", w.monoid(), Recipe{"wreath_monoid", {"Z2", "E2", "a"}});
  ws.add_act("wab", "W", wreath_act(w, right_regular_act(semilattice_chain(2))),
             Recipe{"wreath_act", {"Z2", "E2", "a", "b"}});
  // a full save/load cycle re-executes every recipe
  const Workspace back = Workspace::from_json(ws.to_json());
  CHECK(back.act("wab").size() == 4);
}
