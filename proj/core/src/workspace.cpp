#include "actforge/workspace.hpp"

#include <fstream>
#include <set>

#include "actforge/diagonal.hpp"
#include "actforge/error.hpp"
#include "actforge/family.hpp"

namespace actforge {

namespace {

using nlohmann::json;

[[noreturn]] void dangle(const std::string& name) {
  throw ActError(ErrorKind::DanglingReference,
                 "no entry named '" + name + "'");
}

unsigned parse_uint(const std::string& s) {
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw ActError(ErrorKind::ParseError,
                   "expected an integer argument, got '" + s + "'");
  }
}

std::vector<Elem> table_from_json(const json& rows, const char* what) {
  std::vector<Elem> out;
  if (!rows.is_array()) {
    throw ActError(ErrorKind::ParseError,
                   std::string(what) + " must be an array of rows");
  }
  for (const auto& row : rows) {
    if (!row.is_array()) {
      throw ActError(ErrorKind::ParseError,
                     std::string(what) + " rows must be arrays");
    }
    for (const auto& v : row) out.push_back(v.get<Elem>());
  }
  return out;
}

json table_to_json(const std::vector<Elem>& flat, std::size_t row_len) {
  json rows = json::array();
  for (std::size_t i = 0; i < flat.size(); i += row_len) {
    json row = json::array();
    for (std::size_t j = 0; j < row_len; ++j) row.push_back(flat[i + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<Recipe> recipe_from_json(const json& j) {
  if (!j.contains("recipe")) return std::nullopt;
  Recipe r;
  r.op = j.at("recipe").at("op").get<std::string>();
  if (j.at("recipe").contains("args")) {
    for (const auto& a : j.at("recipe").at("args")) {
      r.args.push_back(a.is_string() ? a.get<std::string>() : a.dump());
    }
  }
  return r;
}

json recipe_to_json(const Recipe& r) {
  json out;
  out["op"] = r.op;
  out["args"] = r.args;
  return out;
}

}  // namespace

const MonoidPtr& Workspace::monoid(const std::string& name) const {
  const auto it = monoids_.find(name);
  if (it == monoids_.end()) dangle(name);
  return it->second.monoid;
}

const FiniteAct& Workspace::act(const std::string& name) const {
  const auto it = acts_.find(name);
  if (it == acts_.end()) dangle(name);
  return it->second.act;
}

const GenSetEntry& Workspace::genset(const std::string& name) const {
  const auto it = gensets_.find(name);
  if (it == gensets_.end()) dangle(name);
  return it->second;
}

const PresentationEntry& Workspace::presentation(
    const std::string& name) const {
  const auto it = presentations_.find(name);
  if (it == presentations_.end()) dangle(name);
  return it->second;
}

void Workspace::add_monoid(const std::string& name, MonoidPtr m,
                           std::optional<Recipe> recipe) {
  monoids_.insert_or_assign(name, MonoidEntry{std::move(m), std::move(recipe)});
}

void Workspace::add_act(const std::string& name,
                        const std::string& monoid_name, FiniteAct a,
                        std::optional<Recipe> recipe) {
  acts_.insert_or_assign(
      name, ActEntry{monoid_name, std::move(a), std::move(recipe)});
}

void Workspace::add_genset(const std::string& name, GenSetEntry entry) {
  gensets_.insert_or_assign(name, std::move(entry));
}

void Workspace::add_presentation(const std::string& name,
                                 PresentationEntry entry) {
  presentations_.erase(name);
  presentations_.emplace(name, std::move(entry));
}

MonoidPtr Workspace::run_monoid_recipe(const Recipe& r) const {
  const auto& a = r.args;
  auto need = [&](std::size_t n) {
    if (a.size() != n) {
      throw ActError(ErrorKind::ParseError,
                     "recipe '" + r.op + "' expects " + std::to_string(n) +
                         " arguments");
    }
  };
  if (r.op == "trivial") {
    need(0);
    return trivial_monoid();
  }
  if (r.op == "cyclic") {
    need(1);
    return cyclic_monoid(parse_uint(a[0]));
  }
  if (r.op == "chain") {
    need(1);
    return semilattice_chain(parse_uint(a[0]));
  }
  if (r.op == "left_zero") {
    need(1);
    return left_zero_monoid(parse_uint(a[0]));
  }
  if (r.op == "symmetric") {
    need(1);
    return symmetric_group(parse_uint(a[0]));
  }
  if (r.op == "full_transformation") {
    need(1);
    return full_transformation_monoid(parse_uint(a[0]));
  }
  if (r.op == "adjoin_zero") {
    need(1);
    return adjoin_zero(monoid(a[0]));
  }
  if (r.op == "direct_product_monoid") {
    need(2);
    return direct_product_monoid(monoid(a[0]), monoid(a[1]));
  }
  if (r.op == "attach_act_monoid") {
    need(2);
    return attach_act_monoid(monoid(a[0]), act(a[1]));
  }
  if (r.op == "wreath_monoid") {
    need(3);
    return wreath_monoid(monoid(a[0]), monoid(a[1]), act(a[2])).monoid();
  }
  throw ActError(ErrorKind::ParseError, "unknown monoid recipe '" + r.op + "'");
}

FiniteAct Workspace::run_act_recipe(const Recipe& r) const {
  const auto& a = r.args;
  auto need = [&](std::size_t n) {
    if (a.size() != n) {
      throw ActError(ErrorKind::ParseError,
                     "recipe '" + r.op + "' expects " + std::to_string(n) +
                         " arguments");
    }
  };
  if (r.op == "right_regular_act") {
    need(1);
    return right_regular_act(monoid(a[0]));
  }
  if (r.op == "trivial_act") {
    need(1);
    const MonoidPtr& m = monoid(a[0]);
    return make_act_unchecked(m, 1, std::vector<Elem>(m->order(), 0), {"*"});
  }
  if (r.op == "free_act") {
    need(2);
    return free_act(parse_uint(a[0]), monoid(a[1])).act();
  }
  if (r.op == "diagonal_act") {
    need(1);
    return diagonal_act(monoid(a[0])).act;
  }
  if (r.op == "direct_product_act") {
    need(2);
    return direct_product_act(act(a[0]), act(a[1]));
  }
  if (r.op == "wreath_act") {
    need(4);
    const WreathMonoid w = wreath_monoid(monoid(a[0]), monoid(a[1]), act(a[2]));
    return wreath_act(w, act(a[3]));
  }
  throw ActError(ErrorKind::ParseError, "unknown act recipe '" + r.op + "'");
}

void Workspace::validate_all() const {
  // dangling references and reference-graph acyclicity
  std::map<std::string, std::vector<std::string>> refs;
  for (const auto& [name, e] : monoids_) {
    auto& v = refs["m:" + name];
    if (e.recipe) {
      for (const auto& arg : e.recipe->args) {
        if (monoids_.count(arg)) v.push_back("m:" + arg);
        if (acts_.count(arg)) v.push_back("a:" + arg);
      }
    }
  }
  for (const auto& [name, e] : acts_) {
    auto& v = refs["a:" + name];
    if (!monoids_.count(e.monoid_name)) dangle(e.monoid_name);
    v.push_back("m:" + e.monoid_name);
    if (e.recipe) {
      for (const auto& arg : e.recipe->args) {
        if (monoids_.count(arg)) v.push_back("m:" + arg);
        if (acts_.count(arg)) v.push_back("a:" + arg);
      }
    }
  }
  for (const auto& [name, e] : gensets_) {
    if (!acts_.count(e.act_name)) dangle(e.act_name);
  }
  for (const auto& [name, e] : presentations_) {
    if (!monoids_.count(e.monoid_name)) dangle(e.monoid_name);
    if (e.verification && !acts_.count(e.verification->act_name)) {
      dangle(e.verification->act_name);
    }
  }
  {  // cycle detection over the recipe reference graph
    std::set<std::string> done, open;
    auto dfs = [&](auto&& self, const std::string& node) -> void {
      if (done.count(node)) return;
      if (!open.insert(node).second) {
        throw ActError(ErrorKind::DanglingReference,
                       "cyclic references through '" + node + "'");
      }
      const auto it = refs.find(node);
      if (it != refs.end()) {
        for (const auto& next : it->second) self(self, next);
      }
      open.erase(node);
      done.insert(node);
    };
    for (const auto& [node, targets] : refs) dfs(dfs, node);
  }

  // structural validation, with entry names in the error message
  for (const auto& [name, e] : monoids_) {
    try {
      revalidate(*e.monoid);
    } catch (const ActError& err) {
      throw ActError(ErrorKind::ValidationError,
                     "monoid '" + name + "': " + err.what(), err.witness());
    }
  }
  for (const auto& [name, e] : acts_) {
    if (!e.act.base()->same_table(*monoid(e.monoid_name))) {
      throw ActError(ErrorKind::ValidationError,
                     "act '" + name + "' does not match its monoid");
    }
    try {
      revalidate(e.act);
    } catch (const ActError& err) {
      throw ActError(ErrorKind::ValidationError,
                     "act '" + name + "': " + err.what(), err.witness());
    }
  }
  for (const auto& [name, e] : gensets_) {
    const FiniteAct& a = act(e.act_name);
    for (Elem v : e.elems) {
      if (v >= a.size()) {
        throw ActError(ErrorKind::ValidationError,
                       "generating set '" + name + "' is out of range", {v});
      }
    }
  }

  // recipes re-execute to the stored tables
  for (const auto& [name, e] : monoids_) {
    if (!e.recipe) continue;
    const MonoidPtr rebuilt = run_monoid_recipe(*e.recipe);
    if (!rebuilt->same_table(*e.monoid)) {
      throw ActError(ErrorKind::ValidationError,
                     "monoid '" + name + "' does not match its recipe '" +
                         e.recipe->op + "'");
    }
  }
  for (const auto& [name, e] : acts_) {
    if (!e.recipe) continue;
    const FiniteAct rebuilt = run_act_recipe(*e.recipe);
    if (rebuilt.size() != e.act.size() ||
        rebuilt.action() != e.act.action()) {
      throw ActError(ErrorKind::ValidationError,
                     "act '" + name + "' does not match its recipe '" +
                         e.recipe->op + "'");
    }
  }

  // stored verification verdicts are recomputed
  for (const auto& [name, e] : presentations_) {
    if (!e.verification) continue;
    const auto& rec = *e.verification;
    const VerifyResult res =
        is_presentation_of(e.pres, act(rec.act_name), rec.assign);
    if (res.ok != rec.verified) {
      throw ActError(ErrorKind::ValidationError,
                     "presentation '" + name +
                         "' verification verdict does not reproduce");
    }
  }
}

Workspace Workspace::from_json(const json& doc) {
  Workspace ws;
  if (!doc.is_object()) {
    throw ActError(ErrorKind::ParseError, "document root must be an object");
  }
  try {
    if (doc.contains("monoids")) {
      for (const auto& [name, j] : doc.at("monoids").items()) {
        const std::size_t order = j.at("order").get<std::size_t>();
        std::vector<std::string> labels;
        if (j.contains("labels")) {
          labels = j.at("labels").get<std::vector<std::string>>();
        }
        MonoidPtr m = make_monoid_unchecked(
            order, table_from_json(j.at("table"), "table"),
            j.at("identity").get<Elem>(), std::move(labels));
        ws.monoids_.emplace(name, MonoidEntry{std::move(m),
                                              recipe_from_json(j)});
      }
    }
    if (doc.contains("acts")) {
      for (const auto& [name, j] : doc.at("acts").items()) {
        const std::string mname = j.at("monoid").get<std::string>();
        const auto it = ws.monoids_.find(mname);
        if (it == ws.monoids_.end()) dangle(mname);
        std::vector<std::string> labels;
        if (j.contains("labels")) {
          labels = j.at("labels").get<std::vector<std::string>>();
        }
        FiniteAct a = make_act_unchecked(
            it->second.monoid, j.at("size").get<std::size_t>(),
            table_from_json(j.at("action"), "action"), std::move(labels));
        ws.acts_.emplace(name,
                         ActEntry{mname, std::move(a), recipe_from_json(j)});
      }
    }
    if (doc.contains("gensets")) {
      for (const auto& [name, j] : doc.at("gensets").items()) {
        GenSetEntry e;
        e.act_name = j.at("act").get<std::string>();
        e.elems = j.at("elems").get<std::vector<Elem>>();
        e.minimal_certified = j.value("minimal_certified", false);
        e.recipe = recipe_from_json(j);
        ws.gensets_.emplace(name, std::move(e));
      }
    }
    if (doc.contains("presentations")) {
      for (const auto& [name, j] : doc.at("presentations").items()) {
        const std::string mname = j.at("monoid").get<std::string>();
        const auto it = ws.monoids_.find(mname);
        if (it == ws.monoids_.end()) dangle(mname);
        std::vector<GenLabel> gens;
        for (const auto& g : j.at("generators")) {
          gens.push_back({g.at("text").get<std::string>(),
                          g.value("key", std::vector<Elem>{})});
        }
        std::vector<ActRelation> rels;
        for (const auto& r : j.at("relations")) {
          rels.push_back({free_elem_from_json(r.at(0)),
                          free_elem_from_json(r.at(1))});
        }
        std::optional<VerificationRecord> ver;
        if (j.contains("verification")) {
          const auto& v = j.at("verification");
          VerificationRecord rec;
          rec.act_name = v.at("act").get<std::string>();
          rec.assign = v.at("assign").get<std::vector<Elem>>();
          rec.verified = v.at("verified").get<bool>();
          rec.failure = v.value("failure", std::string{});
          rec.witness = v.value("witness", std::vector<Elem>{});
          ver = std::move(rec);
        }
        ws.presentations_.emplace(
            name, PresentationEntry{
                      mname,
                      ActPresentation(it->second.monoid, std::move(gens),
                                      std::move(rels)),
                      std::move(ver), recipe_from_json(j)});
      }
    }
  } catch (const json::exception& e) {
    throw ActError(ErrorKind::ParseError, e.what());
  }
  ws.validate_all();
  return ws;
}

Workspace Workspace::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ActError(ErrorKind::ParseError, "cannot open '" + path + "'");
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ActError(ErrorKind::ParseError,
                   "'" + path + "': " + std::string(e.what()));
  }
  return from_json(doc);
}

json Workspace::to_json() const {
  json doc = json::object();
  if (!monoids_.empty()) {
    json block = json::object();
    for (const auto& [name, e] : monoids_) {
      json j;
      j["order"] = e.monoid->order();
      j["identity"] = e.monoid->identity();
      j["table"] = table_to_json(e.monoid->table(), e.monoid->order());
      if (!e.monoid->labels().empty()) j["labels"] = e.monoid->labels();
      if (e.recipe) j["recipe"] = recipe_to_json(*e.recipe);
      block[name] = std::move(j);
    }
    doc["monoids"] = std::move(block);
  }
  if (!acts_.empty()) {
    json block = json::object();
    for (const auto& [name, e] : acts_) {
      json j;
      j["monoid"] = e.monoid_name;
      j["size"] = e.act.size();
      j["action"] = table_to_json(e.act.action(), e.act.base()->order());
      if (!e.act.labels().empty()) j["labels"] = e.act.labels();
      if (e.recipe) j["recipe"] = recipe_to_json(*e.recipe);
      block[name] = std::move(j);
    }
    doc["acts"] = std::move(block);
  }
  if (!gensets_.empty()) {
    json block = json::object();
    for (const auto& [name, e] : gensets_) {
      json j;
      j["act"] = e.act_name;
      j["elems"] = e.elems;
      if (e.minimal_certified) j["minimal_certified"] = true;
      if (e.recipe) j["recipe"] = recipe_to_json(*e.recipe);
      block[name] = std::move(j);
    }
    doc["gensets"] = std::move(block);
  }
  if (!presentations_.empty()) {
    json block = json::object();
    for (const auto& [name, e] : presentations_) {
      json j;
      j["monoid"] = e.monoid_name;
      json gens = json::array();
      for (const auto& g : e.pres.gens()) {
        json gj;
        gj["text"] = g.text;
        if (!g.key.empty()) gj["key"] = g.key;
        gens.push_back(std::move(gj));
      }
      j["generators"] = std::move(gens);
      json rels = json::array();
      for (const auto& r : e.pres.relations()) {
        rels.push_back(json::array(
            {free_elem_to_json(r.lhs), free_elem_to_json(r.rhs)}));
      }
      j["relations"] = std::move(rels);
      if (e.verification) {
        const auto& v = *e.verification;
        json vj;
        vj["act"] = v.act_name;
        vj["assign"] = v.assign;
        vj["verified"] = v.verified;
        if (!v.failure.empty()) vj["failure"] = v.failure;
        if (!v.witness.empty()) vj["witness"] = v.witness;
        j["verification"] = std::move(vj);
      }
      if (e.recipe) j["recipe"] = recipe_to_json(*e.recipe);
      block[name] = std::move(j);
    }
    doc["presentations"] = std::move(block);
  }
  return doc;
}

void Workspace::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw ActError(ErrorKind::ParseError, "cannot write '" + path + "'");
  }
  out << to_json().dump(2) << "\n";
}

json free_elem_to_json(const FreeActElem& w) {
  json j;
  j["gen"] = w.gen;
  j["elem"] = w.elem;
  return j;
}

FreeActElem free_elem_from_json(const json& j) {
  return {j.at("gen").get<Elem>(), j.at("elem").get<Elem>()};
}

json derivation_to_json(const FreeActElem& lhs, const FreeActElem& rhs,
                        const DerivationCertificate& cert) {
  json j;
  j["type"] = "derivation";
  j["lhs"] = free_elem_to_json(lhs);
  j["rhs"] = free_elem_to_json(rhs);
  json steps = json::array();
  for (const auto& s : cert.steps) {
    json sj;
    sj["relation"] = s.pair_index;
    sj["reversed"] = s.reversed;
    sj["multiplier"] = s.multiplier;
    steps.push_back(std::move(sj));
  }
  j["steps"] = std::move(steps);
  return j;
}

DerivationDocument derivation_from_json(const json& j) {
  DerivationDocument d{free_elem_from_json(j.at("lhs")),
                       free_elem_from_json(j.at("rhs")),
                       {}};
  for (const auto& s : j.at("steps")) {
    d.cert.steps.push_back({s.at("relation").get<std::uint32_t>(),
                            s.at("reversed").get<bool>(),
                            s.at("multiplier").get<Elem>()});
  }
  return d;
}

json connectedness_to_json(Elem a, const NAMap& theta, const NAMap& phi,
                           std::span<const NAMap> u,
                           const ConnectednessCertificate& cert) {
  json j;
  j["type"] = "connectedness";
  j["a"] = a;
  j["theta"] = theta;
  j["phi"] = phi;
  json uj = json::array();
  for (const auto& m : u) uj.push_back(m);
  j["u"] = std::move(uj);
  json steps = json::array();
  for (const auto& s : cert.steps) {
    json sj;
    sj["from_u"] = s.from_u;
    sj["u"] = s.u_index;
    sj["psi"] = s.psi;
    steps.push_back(std::move(sj));
  }
  j["steps"] = std::move(steps);
  return j;
}

ConnectednessDocument connectedness_from_json(const json& j) {
  ConnectednessDocument d;
  d.a = j.at("a").get<Elem>();
  d.theta = j.at("theta").get<NAMap>();
  d.phi = j.at("phi").get<NAMap>();
  for (const auto& m : j.at("u")) d.u.push_back(m.get<NAMap>());
  for (const auto& s : j.at("steps")) {
    d.cert.steps.push_back({s.at("from_u").get<bool>(),
                            s.at("u").get<Elem>(),
                            s.at("psi").get<NAMap>()});
  }
  return d;
}

}  // namespace actforge
