// actforge: construct, verify and reduce generating sets and presentations
// for finite monoid acts, working over JSON workspace documents.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "actforge/config.hpp"
#include "actforge/diagonal.hpp"
#include "actforge/direct_product.hpp"
#include "actforge/error.hpp"
#include "actforge/family.hpp"
#include "actforge/presentation.hpp"
#include "actforge/suite.hpp"
#include "actforge/workspace.hpp"
#include "actforge/wreath.hpp"

namespace {

using actforge::ActError;
using actforge::ActPresentation;
using actforge::Elem;
using actforge::FiniteAct;
using actforge::MonoidPtr;
using actforge::Workspace;
using nlohmann::json;

std::vector<Elem> parse_elems(const std::string& s) {
  std::vector<Elem> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(static_cast<Elem>(std::stoul(tok)));
  }
  return out;
}

std::vector<actforge::NAMap> parse_namaps(const std::string& s) {
  std::vector<actforge::NAMap> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    if (!tok.empty()) out.push_back(parse_elems(tok));
  }
  return out;
}

std::vector<actforge::ElemPair> parse_pairs(const std::string& s) {
  std::vector<actforge::ElemPair> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    const auto tilde = tok.find('~');
    if (tilde == std::string::npos) {
      throw ActError(actforge::ErrorKind::BadArgument,
                     "pairs look like \"a~b;c~d\", got '" + tok + "'");
    }
    out.push_back({static_cast<Elem>(std::stoul(tok.substr(0, tilde))),
                   static_cast<Elem>(std::stoul(tok.substr(tilde + 1)))});
  }
  return out;
}

std::optional<Elem> parse_index(const std::string& s, std::size_t limit) {
  if (s.empty() ||
      !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); })) {
    return std::nullopt;
  }
  const unsigned long v = std::stoul(s);
  if (v >= limit) return std::nullopt;
  return static_cast<Elem>(v);
}

// "gen.mult": generator text or index, a dot, then a monoid label or index.
// Labels may themselves contain dots, so every split point is tried.
actforge::FreeActElem parse_free_elem(const ActPresentation& p,
                                      const std::string& s) {
  for (std::size_t dot = s.rfind('.'); dot != std::string::npos;
       dot = (dot == 0 ? std::string::npos : s.rfind('.', dot - 1))) {
    const std::string gen_s = s.substr(0, dot);
    const std::string mul_s = s.substr(dot + 1);
    std::optional<Elem> gen;
    for (Elem g = 0; g < p.n_gens(); ++g) {
      if (p.gens()[g].text == gen_s) {
        gen = g;
        break;
      }
    }
    if (!gen) gen = parse_index(gen_s, p.n_gens());
    std::optional<Elem> mul;
    for (Elem m = 0; m < p.monoid()->order(); ++m) {
      if (p.monoid()->label(m) == mul_s) {
        mul = m;
        break;
      }
    }
    if (!mul) mul = parse_index(mul_s, p.monoid()->order());
    if (gen && mul) return {*gen, *mul};
    if (dot == 0) break;
  }
  throw ActError(actforge::ErrorKind::BadArgument,
                 "cannot resolve '" + s +
                     "' as gen.mult against the presentation");
}

struct Output {
  bool as_json = false;
  json report = json::object();

  void set(const std::string& key, json value) {
    report[key] = std::move(value);
  }
  void note(const std::string& line) {
    if (!as_json) std::cout << line << "\n";
  }
  void finish() const {
    if (as_json) std::cout << report.dump(2) << "\n";
  }
};

actforge::VerificationRecord record_of(const ActPresentation& p,
                                       const FiniteAct& a,
                                       const std::vector<Elem>& assign,
                                       const std::string& act_name) {
  const actforge::VerifyResult r = actforge::is_presentation_of(p, a, assign);
  actforge::VerificationRecord rec;
  rec.act_name = act_name;
  rec.assign = assign;
  rec.verified = r.ok;
  if (!r.ok) {
    rec.failure = r.describe(p);
    if (r.failure == actforge::VerifyFailure::KernelGap) {
      rec.witness = {r.witness_lhs.gen, r.witness_lhs.elem, r.witness_rhs.gen,
                     r.witness_rhs.elem};
    }
  }
  return rec;
}

int run_suite(Output& out, std::uint64_t seed) {
  actforge::SuiteOptions opts;
  opts.seed = seed;
  const auto results = actforge::run_acceptance_suite(opts);
  json arr = json::array();
  for (const auto& r : results) {
    if (!out.as_json) {
      std::printf("%s  criterion %2d: %-50s %s (%.2fs)\n",
                  r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.detail.c_str(), r.seconds);
    }
    json j;
    j["id"] = r.id;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    j["seconds"] = r.seconds;
    arr.push_back(std::move(j));
  }
  const bool ok = actforge::all_passed(results);
  out.set("criteria", std::move(arr));
  out.set("pass", ok);
  out.note(ok ? "all criteria passed" : "some criteria FAILED");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("ACTFORGE_CAP")) {
    actforge::set_size_cap(std::strtoull(cap, nullptr, 10));
  }

  CLI::App app{"finite monoid acts: generators, presentations, certificates"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable reports on stdout");

  std::string ws_path, out_path, name;

  // validate
  auto* validate = app.add_subcommand("validate", "load and re-validate a workspace");
  std::string validate_path;
  validate->add_option("file", validate_path)->required();

  // construct
  auto* construct = app.add_subcommand("construct", "build a named monoid or act");
  std::string c_kind;
  std::vector<std::string> c_args;
  construct->add_option("kind", c_kind,
                        "trivial|cyclic|chain|left-zero|symmetric|tn|m0|"
                        "product|attach|wreath-monoid|right-regular|free|"
                        "trivial-act|diagonal|dp|wreath-act")
      ->required();
  construct->add_option("args", c_args, "construction arguments");
  construct->add_option("--ws", ws_path, "workspace to read");
  construct->add_option("--out", out_path, "workspace to write");
  construct->add_option("--name", name, "entry name")->required();

  // generate
  auto* generate = app.add_subcommand("generate", "emit a verified generating set");
  std::string g_kind, g_act, g_monoid, g_monoid2, g_act2, g_b;
  std::string g_u, g_v, g_x, g_y;
  generate->add_option("kind", g_kind,
                       "minimal|square|zero-extension|product-diagonal|dp|"
                       "wreath|attach")
      ->required();
  generate->add_option("--act", g_act);
  generate->add_option("--act2", g_act2);
  generate->add_option("--monoid", g_monoid);
  generate->add_option("--monoid2", g_monoid2);
  generate->add_option("--b", g_b, "second act (wreath)");
  generate->add_option("--u", g_u, "comma-separated element list");
  generate->add_option("--v", g_v);
  generate->add_option("--x", g_x);
  generate->add_option("--y", g_y);
  generate->add_option("--ws", ws_path)->required();
  generate->add_option("--out", out_path);
  generate->add_option("--name", name)->required();

  // present
  auto* present = app.add_subcommand("present", "construct a verified presentation");
  std::string p_kind, p_act, p_act2, p_monoid, p_monoid2, p_b;
  std::string p_u, p_v, p_x, p_y, p_gens, p_pres;
  present->add_option("kind", p_kind,
                      "canonical|on-gens|diagonal|product-diagonal|"
                      "zero-extension|restrict|dp|dp-factor|wreath|"
                      "wreath-factor|attach-factor")
      ->required();
  present->add_option("--act", p_act);
  present->add_option("--act2", p_act2);
  present->add_option("--monoid", p_monoid);
  present->add_option("--monoid2", p_monoid2);
  present->add_option("--b", p_b);
  present->add_option("--u", p_u);
  present->add_option("--v", p_v);
  present->add_option("--x", p_x);
  present->add_option("--y", p_y);
  present->add_option("--gens", p_gens);
  present->add_option("--presentation", p_pres, "input presentation name");
  present->add_option("--n-elems", p_gens, "submonoid elements (restrict)");
  present->add_option("--ws", ws_path)->required();
  present->add_option("--out", out_path);
  present->add_option("--name", name)->required();

  // verify
  auto* verify = app.add_subcommand("verify", "re-run the presentation oracle");
  std::string v_file, v_pres, v_act, v_assign;
  verify->add_option("file", v_file, "workspace/presentation document");
  verify->add_option("--presentation", v_pres, "presentation name (default: all)");
  verify->add_option("--act", v_act, "act to verify against");
  verify->add_option("--assign", v_assign, "generator images (comma list)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "drop redundant relations");
  std::string r_pres, r_act, r_assign;
  reduce->add_option("--presentation", r_pres)->required();
  reduce->add_option("--act", r_act, "act to reduce against (default: stored)");
  reduce->add_option("--assign", r_assign);
  reduce->add_option("--ws", ws_path)->required();
  reduce->add_option("--out", out_path);
  reduce->add_option("--name", name, "output name (default: input name)");

  // connect
  auto* connect = app.add_subcommand(
      "connect", "derivation / connectedness certificates");
  std::string cn_pres, cn_lhs, cn_rhs, cn_act, cn_pairs, cn_n, cn_theta,
      cn_phi, cn_u, cn_cert_out;
  Elem cn_from = 0, cn_to = 0, cn_a = 0;
  connect->add_option("--presentation", cn_pres);
  connect->add_option("--lhs", cn_lhs);
  connect->add_option("--rhs", cn_rhs);
  connect->add_option("--act", cn_act);
  connect->add_option("--pairs", cn_pairs, "seed pairs \"a~b;c~d\"");
  connect->add_option("--from", cn_from);
  connect->add_option("--to", cn_to);
  connect->add_option("--n", cn_n, "monoid N (U-connectedness)");
  connect->add_option("--theta", cn_theta);
  connect->add_option("--phi", cn_phi);
  connect->add_option("--u", cn_u, "maps \"0,1;1,0\"");
  connect->add_option("--a", cn_a, "anchor point in A");
  connect->add_option("--ws", ws_path);
  connect->add_option("--out", cn_cert_out, "certificate file to write");

  // suite
  auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
  std::string family = "small";
  std::uint64_t seed = actforge::SuiteOptions{}.seed;
  suite->add_option("--family", family, "instance family (small)");
  suite->add_option("--seed", seed, "RNG seed for randomized criteria");

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.as_json = as_json;

  try {
    if (*validate) {
      const Workspace ws = Workspace::load(validate_path);
      out.set("monoids", ws.monoids().size());
      out.set("acts", ws.acts().size());
      out.set("gensets", ws.gensets().size());
      out.set("presentations", ws.presentations().size());
      out.set("valid", true);
      out.note("workspace OK: " + std::to_string(ws.monoids().size()) +
               " monoids, " + std::to_string(ws.acts().size()) + " acts, " +
               std::to_string(ws.gensets().size()) + " generating sets, " +
               std::to_string(ws.presentations().size()) + " presentations");
      out.finish();
      return 0;
    }

    if (*construct) {
      Workspace ws =
          ws_path.empty() ? Workspace{} : Workspace::load(ws_path);
      static const std::map<std::string, std::string> monoid_ops = {
          {"trivial", "trivial"},        {"cyclic", "cyclic"},
          {"chain", "chain"},            {"left-zero", "left_zero"},
          {"symmetric", "symmetric"},    {"tn", "full_transformation"},
          {"m0", "adjoin_zero"},         {"product", "direct_product_monoid"},
          {"attach", "attach_act_monoid"},
          {"wreath-monoid", "wreath_monoid"}};
      static const std::map<std::string, std::string> act_ops = {
          {"right-regular", "right_regular_act"},
          {"free", "free_act"},
          {"trivial-act", "trivial_act"},
          {"diagonal", "diagonal_act"},
          {"dp", "direct_product_act"},
          {"wreath-act", "wreath_act"}};
      const actforge::Recipe recipe{
          monoid_ops.count(c_kind) ? monoid_ops.at(c_kind)
          : act_ops.count(c_kind) ? act_ops.at(c_kind)
                                  : c_kind,
          c_args};
      if (monoid_ops.count(c_kind)) {
        ws.add_monoid(name, ws.run_monoid_recipe(recipe), recipe);
        out.note("monoid '" + name + "' of order " +
                 std::to_string(ws.monoid(name)->order()));
        out.set("order", ws.monoid(name)->order());
      } else if (act_ops.count(c_kind)) {
        FiniteAct a = ws.run_act_recipe(recipe);
        // acts reference their monoid by name: reuse or add it
        std::string mname;
        for (const auto& [n2, e] : ws.monoids()) {
          if (e.monoid->same_table(*a.base())) {
            mname = n2;
            break;
          }
        }
        if (mname.empty()) {
          mname = name + ".monoid";
          ws.add_monoid(mname, a.base());
        }
        out.note("act '" + name + "' of size " + std::to_string(a.size()) +
                 " over '" + mname + "'");
        out.set("size", a.size());
        ws.add_act(name, mname, std::move(a), recipe);
      } else {
        throw ActError(actforge::ErrorKind::BadArgument,
                       "unknown construction '" + c_kind + "'");
      }
      ws.save(out_path.empty() ? ws_path : out_path);
      out.finish();
      return 0;
    }

    if (*generate) {
      Workspace ws = Workspace::load(ws_path);
      actforge::GenSetEntry entry;
      if (g_kind == "minimal") {
        const FiniteAct& a = ws.act(g_act);
        const auto gs = actforge::minimal_generating_set(a);
        entry = {g_act, gs.elems, gs.minimal_certified, std::nullopt};
      } else if (g_kind == "square") {
        const MonoidPtr& m = ws.monoid(g_monoid);
        const auto u = actforge::square_generating_set(m);
        const std::string diag_name = g_monoid + ".diagonal";
        if (!ws.acts().count(diag_name)) {
          ws.add_act(diag_name, g_monoid, actforge::diagonal_act(m).act,
                     actforge::Recipe{"diagonal_act", {g_monoid}});
        }
        const auto d = actforge::diagonal_act(m);
        std::vector<Elem> elems;
        for (Elem p : u)
          for (Elem q : u) elems.push_back(d.index(p, q));
        entry = {diag_name, elems, true, std::nullopt};
        out.set("u", u);
      } else if (g_kind == "zero-extension") {
        const MonoidPtr& m = ws.monoid(g_monoid);
        const auto z = actforge::zero_extension_generators(m, parse_elems(g_u));
        const std::string m0_name = g_monoid + ".m0";
        ws.add_monoid(m0_name, z.m0,
                      actforge::Recipe{"adjoin_zero", {g_monoid}});
        const std::string diag_name = m0_name + ".diagonal";
        ws.add_act(diag_name, m0_name, actforge::diagonal_act(z.m0).act,
                   actforge::Recipe{"diagonal_act", {m0_name}});
        const auto d = actforge::diagonal_act(z.m0);
        std::vector<Elem> elems;
        for (const auto& p : z.gens) elems.push_back(d.index(p.first, p.second));
        entry = {diag_name, elems, false, std::nullopt};
      } else if (g_kind == "product-diagonal") {
        const MonoidPtr& m = ws.monoid(g_monoid);
        const MonoidPtr& n = ws.monoid(g_monoid2);
        const auto gens = actforge::product_diagonal_generators(
            m, n, parse_elems(g_u), parse_elems(g_v));
        const std::string mn_name = g_monoid + "x" + g_monoid2;
        ws.add_monoid(mn_name, actforge::direct_product_monoid(m, n),
                      actforge::Recipe{"direct_product_monoid",
                                       {g_monoid, g_monoid2}});
        const std::string diag_name = mn_name + ".diagonal";
        ws.add_act(diag_name, mn_name,
                   actforge::diagonal_act(ws.monoid(mn_name)).act,
                   actforge::Recipe{"diagonal_act", {mn_name}});
        const auto d = actforge::diagonal_act(ws.monoid(mn_name));
        std::vector<Elem> elems;
        for (const auto& p : gens) elems.push_back(d.index(p.first, p.second));
        entry = {diag_name, elems, false, std::nullopt};
      } else if (g_kind == "dp") {
        const FiniteAct& a = ws.act(g_act);
        const FiniteAct& b = ws.act(g_act2);
        const auto gs = actforge::dp_generating_set(
            a, parse_elems(g_x), b, parse_elems(g_y), parse_elems(g_u),
            parse_elems(g_v));
        const std::string prod_name = g_act + "x" + g_act2;
        if (!ws.acts().count(prod_name)) {
          ws.add_act(prod_name, ws.acts().at(g_act).monoid_name,
                     actforge::direct_product_act(a, b),
                     actforge::Recipe{"direct_product_act", {g_act, g_act2}});
        }
        entry = {prod_name, gs.elems, false, std::nullopt};
      } else if (g_kind == "wreath") {
        const MonoidPtr& m = ws.monoid(g_monoid);
        const MonoidPtr& n = ws.monoid(g_monoid2);
        const FiniteAct& a = ws.act(g_act);
        const FiniteAct& b = ws.act(g_b);
        const actforge::WreathMonoid w = actforge::wreath_monoid(m, n, a);
        const auto gs = actforge::wreath_generating_set(
            w, b, parse_elems(g_x), parse_elems(g_y));
        const std::string w_name = name + ".wreath_monoid";
        ws.add_monoid(w_name, w.monoid(),
                      actforge::Recipe{"wreath_monoid",
                                       {g_monoid, g_monoid2, g_act}});
        const std::string act_name = name + ".wreath_act";
        ws.add_act(act_name, w_name, actforge::wreath_act(w, b),
                   actforge::Recipe{"wreath_act",
                                    {g_monoid, g_monoid2, g_act, g_b}});
        entry = {act_name, gs.elems, false, std::nullopt};
      } else if (g_kind == "attach") {
        const MonoidPtr& m = ws.monoid(g_monoid);
        const FiniteAct& a = ws.act(g_act);
        const auto att = actforge::attach_act_generators(
            m, a, parse_elems(g_x), parse_elems(g_u));
        const std::string u_name = name + ".attach_monoid";
        ws.add_monoid(u_name, att.u_monoid,
                      actforge::Recipe{"attach_act_monoid",
                                       {g_monoid, g_act}});
        const std::string diag_name = u_name + ".diagonal";
        ws.add_act(diag_name, u_name,
                   actforge::diagonal_act(att.u_monoid).act,
                   actforge::Recipe{"diagonal_act", {u_name}});
        const auto d = actforge::diagonal_act(att.u_monoid);
        std::vector<Elem> elems;
        for (Elem p : att.v)
          for (Elem q : att.v) elems.push_back(d.index(p, q));
        entry = {diag_name, elems, false, std::nullopt};
        out.set("v", att.v);
      } else {
        throw ActError(actforge::ErrorKind::BadArgument,
                       "unknown generator kind '" + g_kind + "'");
      }
      const bool generates = actforge::is_generating_set(
          ws.act(entry.act_name), entry.elems);
      out.set("elems", entry.elems);
      out.set("generates", generates);
      out.note("generating set '" + name + "' over '" + entry.act_name +
               "': " + std::to_string(entry.elems.size()) + " elements, " +
               (generates ? "verified" : "NOT GENERATING"));
      ws.add_genset(name, std::move(entry));
      ws.save(out_path.empty() ? ws_path : out_path);
      out.finish();
      return generates ? 0 : 1;
    }

    if (*present) {
      Workspace ws = Workspace::load(ws_path);
      std::optional<actforge::PresentationEntry> result;
      std::string target_act;

      auto finish_with = [&](const ActPresentation& pres,
                             const std::vector<Elem>& assign,
                             const std::string& act_name,
                             const std::string& monoid_name) {
        actforge::PresentationEntry e{monoid_name, pres, std::nullopt,
                                      std::nullopt};
        e.verification = record_of(pres, ws.act(act_name), assign, act_name);
        target_act = act_name;
        result = std::move(e);
      };
      auto monoid_name_of = [&](const MonoidPtr& m) -> std::string {
        for (const auto& [n2, e] : ws.monoids()) {
          if (e.monoid->same_table(*m)) return n2;
        }
        const std::string fresh = name + ".monoid";
        ws.add_monoid(fresh, m);
        return fresh;
      };
      auto ensure_act = [&](const std::string& act_name, const FiniteAct& a,
                            std::optional<actforge::Recipe> recipe)
          -> std::string {
        if (!ws.acts().count(act_name)) {
          ws.add_act(act_name, monoid_name_of(a.base()), a, std::move(recipe));
        }
        return act_name;
      };

      if (p_kind == "canonical") {
        const FiniteAct& a = ws.act(p_act);
        std::vector<Elem> mgens = parse_elems(p_gens);
        if (mgens.empty()) {
          mgens.resize(a.base()->order());
          for (Elem e = 0; e < a.base()->order(); ++e) mgens[e] = e;
        }
        const auto c = actforge::canonical_presentation(a, mgens);
        finish_with(c.pres, c.assign, p_act,
                    ws.acts().at(p_act).monoid_name);
      } else if (p_kind == "on-gens") {
        const FiniteAct& a = ws.act(p_act);
        const auto c =
            actforge::presentation_on_generators(a, parse_elems(p_gens));
        finish_with(c.pres, c.assign, p_act,
                    ws.acts().at(p_act).monoid_name);
      } else if (p_kind == "diagonal") {
        const MonoidPtr& m = ws.monoid(p_monoid);
        std::vector<Elem> u =
            p_u.empty() ? actforge::square_generating_set(m) : parse_elems(p_u);
        const auto c = actforge::diagonal_square_presentation(m, u);
        const std::string act_name = ensure_act(
            p_monoid + ".diagonal", actforge::diagonal_act(m).act,
            actforge::Recipe{"diagonal_act", {p_monoid}});
        finish_with(c.pres, c.assign, act_name, p_monoid);
      } else if (p_kind == "product-diagonal") {
        const MonoidPtr& m = ws.monoid(p_monoid);
        const MonoidPtr& n = ws.monoid(p_monoid2);
        const auto u = p_u.empty() ? actforge::square_generating_set(m)
                                   : parse_elems(p_u);
        const auto v = p_v.empty() ? actforge::square_generating_set(n)
                                   : parse_elems(p_v);
        auto pm = actforge::diagonal_square_presentation(m, u);
        pm.pres = actforge::reduce_presentation(
            pm.pres, actforge::diagonal_act(m).act, pm.assign);
        auto pn = actforge::diagonal_square_presentation(n, v);
        pn.pres = actforge::reduce_presentation(
            pn.pres, actforge::diagonal_act(n).act, pn.assign);
        const auto prod = actforge::product_diagonal_presentation(
            m, n, pm.pres, u, pn.pres, v);
        const std::string mn_name = monoid_name_of(prod.product);
        const std::string act_name = ensure_act(
            mn_name + ".diagonal", actforge::diagonal_act(prod.product).act,
            actforge::Recipe{"diagonal_act", {mn_name}});
        finish_with(prod.pres.pres, prod.pres.assign, act_name, mn_name);
      } else if (p_kind == "zero-extension") {
        const MonoidPtr& m = ws.monoid(p_monoid);
        const auto u = p_u.empty() ? actforge::square_generating_set(m)
                                   : parse_elems(p_u);
        auto pd = actforge::diagonal_square_presentation(m, u);
        pd.pres = actforge::reduce_presentation(
            pd.pres, actforge::diagonal_act(m).act, pd.assign);
        const FiniteAct rr = actforge::right_regular_act(m);
        auto pm = actforge::presentation_on_generators(rr, u);
        pm.pres = actforge::reduce_presentation(pm.pres, rr, pm.assign);
        const auto z =
            actforge::zero_extension_presentation(m, pd.pres, pm.pres, u);
        const std::string m0_name = monoid_name_of(z.m0);
        const std::string act_name = ensure_act(
            m0_name + ".diagonal", actforge::diagonal_act(z.m0).act,
            actforge::Recipe{"diagonal_act", {m0_name}});
        finish_with(z.pres.pres, z.pres.assign, act_name, m0_name);
      } else if (p_kind == "restrict") {
        const auto& src = ws.presentation(p_pres);
        if (!src.verification) {
          throw ActError(actforge::ErrorKind::BadArgument,
                         "input presentation has no stored assignment");
        }
        const auto r = actforge::restrict_presentation_to_submonoid(
            src.pres, src.verification->assign, parse_elems(p_gens),
            parse_elems(p_u));
        const std::string n_name = monoid_name_of(r.submonoid);
        const std::string act_name = ensure_act(
            n_name + ".diagonal", actforge::diagonal_act(r.submonoid).act,
            actforge::Recipe{"diagonal_act", {n_name}});
        finish_with(r.pres.pres, r.pres.assign, act_name, n_name);
      } else if (p_kind == "dp") {
        const FiniteAct& a = ws.act(p_act);
        const FiniteAct& b = ws.act(p_act2);
        const auto x = p_x.empty()
                           ? actforge::minimal_generating_set(a).elems
                           : parse_elems(p_x);
        const auto y = p_y.empty()
                           ? actforge::minimal_generating_set(b).elems
                           : parse_elems(p_y);
        const auto u = p_u.empty()
                           ? actforge::square_generating_set(a.base())
                           : parse_elems(p_u);
        const auto v = p_v.empty() ? u : parse_elems(p_v);
        const auto setup = actforge::dp_setup(a, x, b, y, u, v);
        auto pa = actforge::presentation_on_generators(a, x);
        pa.pres = actforge::reduce_presentation(pa.pres, a, pa.assign);
        auto pb = actforge::presentation_on_generators(b, y);
        pb.pres = actforge::reduce_presentation(pb.pres, b, pb.assign);
        auto pd = actforge::diagonal_uv_presentation(a.base(), u, v);
        pd.pres = actforge::reduce_presentation(
            pd.pres, actforge::diagonal_act(a.base()).act, pd.assign);
        const auto dp =
            actforge::dp_presentation(setup, pa.pres, pb.pres, pd.pres);
        const std::string act_name = ensure_act(
            p_act + "x" + p_act2, setup.product,
            actforge::Recipe{"direct_product_act", {p_act, p_act2}});
        finish_with(dp.pres.pres, dp.pres.assign, act_name,
                    ws.acts().at(p_act).monoid_name);
      } else if (p_kind == "wreath") {
        const MonoidPtr& m = ws.monoid(p_monoid);
        const MonoidPtr& n = ws.monoid(p_monoid2);
        const FiniteAct& a = ws.act(p_act);
        const FiniteAct& b = ws.act(p_b);
        const auto x = p_x.empty()
                           ? actforge::minimal_generating_set(a).elems
                           : parse_elems(p_x);
        const auto y = p_y.empty()
                           ? actforge::minimal_generating_set(b).elems
                           : parse_elems(p_y);
        const actforge::WreathMonoid w = actforge::wreath_monoid(m, n, a);
        auto pa = actforge::presentation_on_generators(a, x);
        pa.pres = actforge::reduce_presentation(pa.pres, a, pa.assign);
        auto pb = actforge::presentation_on_generators(b, y);
        pb.pres = actforge::reduce_presentation(pb.pres, b, pb.assign);
        const auto wp =
            actforge::wreath_presentation(w, b, pa.pres, x, pb.pres, y);
        const std::string w_name = monoid_name_of(w.monoid());
        const std::string act_name =
            ensure_act(name + ".wreath_act", actforge::wreath_act(w, b),
                       actforge::Recipe{"wreath_act",
                                        {p_monoid, p_monoid2, p_act, p_b}});
        finish_with(wp.pres.pres, wp.pres.assign, act_name, w_name);
        out.set("t1", wp.t1_count);
        out.set("t2", wp.t2_count);
        out.set("t3", wp.t3_count);
      } else {
        throw ActError(actforge::ErrorKind::BadArgument,
                       "unknown presentation kind '" + p_kind + "'");
      }

      const bool ok = result->verification->verified;
      out.set("relations", result->pres.relations().size());
      out.set("generators", result->pres.n_gens());
      out.set("verified", ok);
      if (!ok) out.set("failure", result->verification->failure);
      out.note("presentation '" + name + "' for '" + target_act + "': " +
               std::to_string(result->pres.n_gens()) + " generators, " +
               std::to_string(result->pres.relations().size()) +
               " relations, " + (ok ? "verified" : "FAILED"));
      if (!ok) out.note("  " + result->verification->failure);
      ws.add_presentation(name, std::move(*result));
      ws.save(out_path.empty() ? ws_path : out_path);
      out.finish();
      return ok ? 0 : 1;
    }

    if (*verify) {
      const Workspace ws = Workspace::load(v_file.empty() ? ws_path : v_file);
      bool all_ok = true;
      json reports = json::array();
      for (const auto& [pname, entry] : ws.presentations()) {
        if (!v_pres.empty() && pname != v_pres) continue;
        std::string act_name = v_act;
        std::vector<Elem> assign;
        if (!v_assign.empty()) assign = parse_elems(v_assign);
        if (act_name.empty() && entry.verification) {
          act_name = entry.verification->act_name;
        }
        if (assign.empty() && entry.verification) {
          assign = entry.verification->assign;
        }
        if (act_name.empty()) continue;
        const auto r =
            actforge::is_presentation_of(entry.pres, ws.act(act_name), assign);
        all_ok = all_ok && r.ok;
        json j;
        j["presentation"] = pname;
        j["act"] = act_name;
        j["verified"] = r.ok;
        j["closure_classes"] = r.closure_classes;
        j["kernel_classes"] = r.kernel_classes;
        if (!r.ok) j["failure"] = r.describe(entry.pres);
        reports.push_back(std::move(j));
        out.note(std::string(r.ok ? "OK   " : "FAIL ") + pname + " vs " +
                 act_name + ": " + r.describe(entry.pres));
      }
      out.set("reports", std::move(reports));
      out.set("pass", all_ok);
      out.finish();
      return all_ok ? 0 : 1;
    }

    if (*reduce) {
      Workspace ws = Workspace::load(ws_path);
      const auto& entry = ws.presentation(r_pres);
      std::string act_name = r_act;
      std::vector<Elem> assign =
          r_assign.empty() ? std::vector<Elem>{} : parse_elems(r_assign);
      if (act_name.empty() && entry.verification) {
        act_name = entry.verification->act_name;
      }
      if (assign.empty() && entry.verification) {
        assign = entry.verification->assign;
      }
      if (act_name.empty()) {
        throw ActError(actforge::ErrorKind::BadArgument,
                       "no act to reduce against; pass --act/--assign");
      }
      const FiniteAct& a = ws.act(act_name);
      const std::size_t before = entry.pres.relations().size();
      ActPresentation reduced =
          actforge::reduce_presentation(entry.pres, a, assign);
      const std::size_t after = reduced.relations().size();
      actforge::PresentationEntry e{entry.monoid_name, reduced, std::nullopt,
                                    std::nullopt};
      e.verification = record_of(reduced, a, assign, act_name);
      const std::string out_name = name.empty() ? r_pres : name;
      ws.add_presentation(out_name, std::move(e));
      ws.save(out_path.empty() ? ws_path : out_path);
      out.set("relations_before", before);
      out.set("relations_after", after);
      out.note("reduced '" + r_pres + "': " + std::to_string(before) +
               " -> " + std::to_string(after) + " relations");
      out.finish();
      return 0;
    }

    if (*connect) {
      if (!cn_pres.empty()) {
        const Workspace ws = Workspace::load(ws_path);
        const auto& entry = ws.presentation(cn_pres);
        const auto w1 = parse_free_elem(entry.pres, cn_lhs);
        const auto w2 = parse_free_elem(entry.pres, cn_rhs);
        const auto cert = actforge::is_consequence(entry.pres, w1, w2);
        if (!cert) {
          out.set("consequence", false);
          out.note("NotConsequence: " + cn_lhs + " and " + cn_rhs +
                   " are not connected by the relations");
          out.finish();
          return 1;
        }
        const bool replays =
            actforge::replay_certificate(entry.pres, w1, w2, *cert);
        out.set("consequence", true);
        out.set("steps", cert->steps.size());
        out.set("replays", replays);
        out.note("consequence with " + std::to_string(cert->steps.size()) +
                 " steps (replay " + (replays ? "ok" : "FAILED") + ")");
        for (const auto& s : cert->steps) {
          const auto& rel = entry.pres.relations()[s.pair_index];
          out.note("  relation #" + std::to_string(s.pair_index) +
                   (s.reversed ? " (reversed)" : "") + "  " +
                   entry.pres.describe_elem(s.reversed ? rel.rhs : rel.lhs) +
                   " -> " +
                   entry.pres.describe_elem(s.reversed ? rel.lhs : rel.rhs) +
                   "  * " + entry.pres.monoid()->label(s.multiplier));
        }
        if (!cn_cert_out.empty()) {
          std::ofstream f(cn_cert_out);
          f << actforge::derivation_to_json(w1, w2, *cert).dump(2) << "\n";
          out.note("certificate written to " + cn_cert_out);
        }
        out.finish();
        return replays ? 0 : 1;
      }
      if (!cn_act.empty()) {
        const Workspace ws = Workspace::load(ws_path);
        const FiniteAct& a = ws.act(cn_act);
        const auto pairs = parse_pairs(cn_pairs);
        const auto cert =
            actforge::connect_sequence(a, pairs, cn_from, cn_to);
        if (!cert) {
          out.set("connected", false);
          out.note("Unconnected");
          out.finish();
          return 1;
        }
        const bool replays =
            actforge::replay_certificate(a, pairs, cn_from, cn_to, *cert);
        out.set("connected", true);
        out.set("steps", cert->steps.size());
        out.set("replays", replays);
        out.note("connected with " + std::to_string(cert->steps.size()) +
                 " steps (replay " + (replays ? "ok" : "FAILED") + ")");
        out.finish();
        return replays ? 0 : 1;
      }
      if (!cn_n.empty()) {
        const Workspace ws = Workspace::load(ws_path);
        const MonoidPtr& n = ws.monoid(cn_n);
        const auto theta = parse_elems(cn_theta);
        const auto phi = parse_elems(cn_phi);
        const auto u = parse_namaps(cn_u);
        const auto cert =
            actforge::is_u_connected(n, theta.size(), theta, phi, u, cn_a);
        if (!cert) {
          out.set("connected", false);
          out.note("NotConnected");
          out.finish();
          return 1;
        }
        const bool replays =
            actforge::replay_connectedness(n, cn_a, theta, phi, u, *cert);
        out.set("connected", true);
        out.set("steps", cert->steps.size());
        out.set("replays", replays);
        out.note("(U, a)-connected with " +
                 std::to_string(cert->steps.size()) + " steps (replay " +
                 (replays ? "ok" : "FAILED") + ")");
        if (!cn_cert_out.empty()) {
          std::ofstream f(cn_cert_out);
          f << actforge::connectedness_to_json(cn_a, theta, phi, u, *cert)
                   .dump(2)
            << "\n";
          out.note("certificate written to " + cn_cert_out);
        }
        out.finish();
        return replays ? 0 : 1;
      }
      throw ActError(actforge::ErrorKind::BadArgument,
                     "connect needs --presentation, --act or --n");
    }

    if (*suite) {
      if (family != "small") {
        throw ActError(actforge::ErrorKind::BadArgument,
                       "unknown family '" + family + "' (only: small)");
      }
      const int rc = run_suite(out, seed);
      out.finish();
      return rc;
    }
  } catch (const ActError& e) {
    if (as_json) {
      json err;
      err["error"] = e.what();
      err["kind"] = actforge::error_kind_name(e.kind());
      err["witness"] = e.witness();
      std::cout << err.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
