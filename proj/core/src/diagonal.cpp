#include "actforge/diagonal.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "actforge/error.hpp"

namespace actforge {

namespace {

// Decodes the generator keys of a presentation "over U x U" into element
// pairs, with a reverse lookup.
struct SquareKeys {
  std::vector<std::pair<Elem, Elem>> pairs;           // per generator
  std::map<std::pair<Elem, Elem>, Elem> index_of;     // pair -> generator
};

SquareKeys square_keys(const ActPresentation& p) {
  SquareKeys out;
  for (Elem g = 0; g < p.n_gens(); ++g) {
    const auto& key = p.gens()[g].key;
    if (key.size() != 2) {
      throw ActError(ErrorKind::BadArgument,
                     "generator #" + std::to_string(g) +
                         " does not carry a pair key");
    }
    out.pairs.emplace_back(key[0], key[1]);
    out.index_of[{key[0], key[1]}] = g;
  }
  return out;
}

std::vector<Elem> single_keys(const ActPresentation& p) {
  std::vector<Elem> out;
  for (Elem g = 0; g < p.n_gens(); ++g) {
    const auto& key = p.gens()[g].key;
    if (key.size() != 1) {
      throw ActError(ErrorKind::BadArgument,
                     "generator #" + std::to_string(g) +
                         " does not carry a single-element key");
    }
    out.push_back(key[0]);
  }
  return out;
}

std::vector<Elem> sorted_unique(std::span<const Elem> v) {
  std::vector<Elem> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string pair_text(const FiniteMonoid& m, Elem a, Elem b) {
  return "(" + m.label(a) + "," + m.label(b) + ")";
}

}  // namespace

DiagonalAct diagonal_act(const MonoidPtr& m) {
  FiniteAct rr = right_regular_act(m);
  return DiagonalAct{direct_product_act(rr, rr), m->order()};
}

std::vector<Elem> square_generating_set(const MonoidPtr& m,
                                        std::size_t search_cap) {
  if (m->order() > search_cap) {
    throw ActError(ErrorKind::SizeLimit,
                   "square generating-set search capped at order " +
                       std::to_string(search_cap));
  }
  const DiagonalAct diag = diagonal_act(m);
  const std::size_t order = m->order();
  // subsets by increasing size, lexicographic within a size
  for (std::size_t k = 1; k <= order; ++k) {
    std::vector<Elem> idx(k);
    std::iota(idx.begin(), idx.end(), 0u);
    while (true) {
      std::vector<Elem> pairs;
      pairs.reserve(k * k);
      for (Elem a : idx) {
        for (Elem b : idx) pairs.push_back(diag.index(a, b));
      }
      if (is_generating_set(diag.act, pairs)) return idx;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == order - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  // U = M always generates: (a, b) = (a, b).1
  std::vector<Elem> all(order);
  std::iota(all.begin(), all.end(), 0u);
  return all;
}

PresentationWithAssign diagonal_uv_presentation(const MonoidPtr& m,
                                                std::span<const Elem> u,
                                                std::span<const Elem> v) {
  const DiagonalAct diag = diagonal_act(m);
  std::vector<GenLabel> gens;
  std::vector<Elem> values;
  for (Elem a : u) {
    for (Elem b : v) {
      gens.push_back({pair_text(*m, a, b), {a, b}});
      values.push_back(diag.index(a, b));
    }
  }
  return kernel_presentation(diag.act, std::move(gens), std::move(values));
}

PresentationWithAssign diagonal_square_presentation(const MonoidPtr& m,
                                                    std::span<const Elem> u) {
  return diagonal_uv_presentation(m, u, u);
}

ZeroExtensionGenerators zero_extension_generators(const MonoidPtr& m,
                                                  std::span<const Elem> u) {
  {
    const DiagonalAct diag = diagonal_act(m);
    std::vector<Elem> pairs;
    for (Elem a : u) {
      for (Elem b : u) pairs.push_back(diag.index(a, b));
    }
    if (!is_generating_set(diag.act, pairs)) {
      throw ActError(ErrorKind::NotGenerating,
                     "U x U does not generate the diagonal act");
    }
  }
  ZeroExtensionGenerators out;
  out.m0 = adjoin_zero(m);
  const Elem zero = static_cast<Elem>(m->order());
  std::vector<Elem> uz = sorted_unique(u);
  uz.push_back(zero);
  for (Elem a : uz) {
    for (Elem b : uz) {
      if (a == zero && b == zero) continue;
      out.gens.push_back({a, b});
    }
  }
  const DiagonalAct diag0 = diagonal_act(out.m0);
  std::vector<Elem> elems;
  for (const auto& g : out.gens) elems.push_back(diag0.index(g.first, g.second));
  if (!is_generating_set(diag0.act, elems)) {
    throw ActError(ErrorKind::VerificationFailed,
                   "Z does not generate the diagonal act of M^0");
  }
  return out;
}

std::vector<ElemPair> product_diagonal_generators(const MonoidPtr& m,
                                                  const MonoidPtr& n,
                                                  std::span<const Elem> u,
                                                  std::span<const Elem> v) {
  const DiagonalAct dm = diagonal_act(m);
  const DiagonalAct dn = diagonal_act(n);
  {
    std::vector<Elem> pm, pn;
    for (Elem a : u)
      for (Elem b : u) pm.push_back(dm.index(a, b));
    for (Elem a : v)
      for (Elem b : v) pn.push_back(dn.index(a, b));
    if (!is_generating_set(dm.act, pm) || !is_generating_set(dn.act, pn)) {
      throw ActError(ErrorKind::NotGenerating,
                     "an input square does not generate its diagonal act");
    }
  }
  const auto mn = direct_product_monoid(m, n);
  const DiagonalAct dmn = diagonal_act(mn);
  std::vector<ElemPair> gens;
  for (Elem u1 : u) {
    for (Elem v1 : v) {
      for (Elem u2 : u) {
        for (Elem v2 : v) {
          gens.push_back({product_index(u1, v1, n->order()),
                          product_index(u2, v2, n->order())});
        }
      }
    }
  }
  std::vector<Elem> elems;
  for (const auto& g : gens) elems.push_back(dmn.index(g.first, g.second));
  if (!is_generating_set(dmn.act, elems)) {
    throw ActError(ErrorKind::VerificationFailed,
                   "(U x V) x (U x V) does not generate the product diagonal");
  }
  return gens;
}

std::vector<Elem> project_diagonal_generators(const MonoidPtr& m,
                                              const MonoidPtr& n,
                                              std::span<const ElemPair> gens,
                                              bool first_factor) {
  const auto mn = direct_product_monoid(m, n);
  const DiagonalAct dmn = diagonal_act(mn);
  {
    std::vector<Elem> elems;
    for (const auto& g : gens) elems.push_back(dmn.index(g.first, g.second));
    if (!is_generating_set(dmn.act, elems)) {
      throw ActError(ErrorKind::NotGenerating,
                     "input does not generate the product diagonal act");
    }
  }
  std::vector<Elem> proj;
  for (const auto& g : gens) {
    const auto [a1, b1] = product_decode(g.first, n->order());
    const auto [a2, b2] = product_decode(g.second, n->order());
    proj.push_back(first_factor ? a1 : b1);
    proj.push_back(first_factor ? a2 : b2);
  }
  proj = sorted_unique(proj);
  const MonoidPtr& factor = first_factor ? m : n;
  const DiagonalAct d = diagonal_act(factor);
  std::vector<Elem> pairs;
  for (Elem a : proj) {
    for (Elem b : proj) pairs.push_back(d.index(a, b));
  }
  if (!is_generating_set(d.act, pairs)) {
    throw ActError(ErrorKind::VerificationFailed,
                   "projected square does not generate the factor diagonal");
  }
  return proj;
}

SubmonoidRestriction restrict_presentation_to_submonoid(
    const ActPresentation& p, std::span<const Elem> assign,
    std::span<const Elem> n_elems, std::span<const Elem> u) {
  const MonoidPtr& m = p.monoid();
  const std::size_t mo = m->order();
  std::vector<Elem> nset = sorted_unique(n_elems);
  for (Elem e : nset) {
    if (e >= mo) {
      throw ActError(ErrorKind::OutOfRange, "submonoid element out of range",
                     {e});
    }
  }
  std::vector<bool> in_n(mo, false);
  for (Elem e : nset) in_n[e] = true;
  if (!in_n[m->identity()]) {
    throw ActError(ErrorKind::NotSubmonoid,
                   "the subset does not contain the identity");
  }
  for (Elem a : nset) {
    for (Elem b : nset) {
      if (!in_n[m->mul(a, b)]) {
        throw ActError(ErrorKind::NotSubmonoid,
                       "subset not closed under the product", {a, b});
      }
    }
  }
  for (Elem i = 0; i < mo; ++i) {
    if (in_n[i]) continue;
    for (Elem x = 0; x < mo; ++x) {
      if (in_n[m->mul(i, x)] || in_n[m->mul(x, i)]) {
        throw ActError(ErrorKind::ComplementNotIdeal,
                       "M \\ N is not an ideal at i=" + std::to_string(i) +
                           " x=" + std::to_string(x),
                       {i, x});
      }
    }
  }
  require_presents_input(p, diagonal_act(m).act, assign,
                         "restrict_presentation_to_submonoid");

  const SquareKeys keys = square_keys(p);

  // V = U n N, and the old->new element reindexing
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> old_to_new(mo, kUnset);
  for (Elem k = 0; k < nset.size(); ++k) old_to_new[nset[k]] = k;
  std::vector<Elem> v_old;
  for (Elem x : sorted_unique(u)) {
    if (in_n[x]) v_old.push_back(x);
  }
  if (v_old.empty()) {
    throw ActError(ErrorKind::NotGenerating, "U n N is empty");
  }

  MonoidPtr submonoid;
  {
    std::vector<Elem> table(nset.size() * nset.size());
    std::vector<std::string> labels(nset.size());
    for (Elem a = 0; a < nset.size(); ++a) {
      labels[a] = m->label(nset[a]);
      for (Elem b = 0; b < nset.size(); ++b) {
        table[a * nset.size() + b] = old_to_new[m->mul(nset[a], nset[b])];
      }
    }
    submonoid = make_monoid_unchecked(nset.size(), std::move(table),
                                      old_to_new[m->identity()],
                                      std::move(labels));
  }
  std::vector<Elem> v_new;
  for (Elem x : v_old) v_new.push_back(old_to_new[x]);

  const DiagonalAct dn = diagonal_act(submonoid);
  std::vector<GenLabel> gens;
  std::vector<Elem> values;
  std::map<std::pair<Elem, Elem>, Elem> new_gen_of;  // new-element pairs
  for (Elem a : v_new) {
    for (Elem b : v_new) {
      new_gen_of[{a, b}] = static_cast<Elem>(gens.size());
      gens.push_back({pair_text(*submonoid, a, b), {a, b}});
      values.push_back(dn.index(a, b));
    }
  }

  // pure filtering: keep relations whose sides use V x V generators and N
  // multipliers
  std::vector<ActRelation> relations;
  for (const auto& r : p.relations()) {
    bool ok = true;
    ActRelation mapped{};
    FreeActElem* dst[2] = {&mapped.lhs, &mapped.rhs};
    const FreeActElem src[2] = {r.lhs, r.rhs};
    for (int s = 0; s < 2 && ok; ++s) {
      const auto [u1, u2] = keys.pairs[src[s].gen];
      if (!in_n[u1] || !in_n[u2] || !in_n[src[s].elem]) {
        ok = false;
        break;
      }
      const auto it = new_gen_of.find({old_to_new[u1], old_to_new[u2]});
      if (it == new_gen_of.end()) {
        ok = false;  // generator lies in N but outside V x V
        break;
      }
      *dst[s] = {it->second, old_to_new[src[s].elem]};
    }
    if (ok) relations.push_back(mapped);
  }

  SubmonoidRestriction out{
      submonoid,
      nset,
      v_new,
      {ActPresentation(submonoid, std::move(gens), std::move(relations)),
       std::move(values)}};
  require_presents(out.pres.pres, dn.act, out.pres.assign,
                   "restricted presentation");
  return out;
}

ZeroExtensionPresentation zero_extension_presentation(
    const MonoidPtr& m, const ActPresentation& p_diag,
    const ActPresentation& p_m, std::span<const Elem> u) {
  const DiagonalAct dm = diagonal_act(m);
  const SquareKeys diag_keys = square_keys(p_diag);
  {
    std::vector<Elem> assign;
    for (const auto& [a, b] : diag_keys.pairs) assign.push_back(dm.index(a, b));
    require_presents_input(p_diag, dm.act, assign,
                           "zero_extension_presentation diagonal input");
  }
  const std::vector<Elem> m_keys = single_keys(p_m);
  {
    FiniteAct rr = right_regular_act(m);
    require_presents_input(p_m, rr, m_keys,
                           "zero_extension_presentation right-regular input");
  }

  const MonoidPtr m0 = adjoin_zero(m);
  const Elem zero = static_cast<Elem>(m->order());

  std::vector<Elem> uz = sorted_unique(u);
  uz.push_back(zero);
  std::map<std::pair<Elem, Elem>, Elem> gen_of;
  std::vector<GenLabel> gens;
  std::vector<Elem> values;
  std::vector<ElemPair> z;
  const DiagonalAct d0 = diagonal_act(m0);
  for (Elem a : uz) {
    for (Elem b : uz) {
      if (a == zero && b == zero) continue;
      gen_of[{a, b}] = static_cast<Elem>(gens.size());
      gens.push_back({pair_text(*m0, a, b), {a, b}});
      values.push_back(d0.index(a, b));
      z.push_back({a, b});
    }
  }
  auto gen_at = [&](Elem a, Elem b) {
    const auto it = gen_of.find({a, b});
    if (it == gen_of.end()) {
      throw ActError(ErrorKind::BadArgument,
                     "input presentation mentions a generator outside U x U",
                     {a, b});
    }
    return it->second;
  };

  std::vector<ActRelation> relations;
  // R, reindexed into Z (old element indices are preserved in M^0)
  for (const auto& r : p_diag.relations()) {
    const auto [a1, b1] = diag_keys.pairs[r.lhs.gen];
    const auto [a2, b2] = diag_keys.pairs[r.rhs.gen];
    relations.push_back(
        {{gen_at(a1, b1), r.lhs.elem}, {gen_at(a2, b2), r.rhs.elem}});
  }
  // S1: (u, 0).m = (v, 0).n for (u.m, v.n) in S
  for (const auto& r : p_m.relations()) {
    relations.push_back({{gen_at(m_keys[r.lhs.gen], zero), r.lhs.elem},
                         {gen_at(m_keys[r.rhs.gen], zero), r.rhs.elem}});
  }
  // S2: the mirrored coordinate
  for (const auto& r : p_m.relations()) {
    relations.push_back({{gen_at(zero, m_keys[r.lhs.gen]), r.lhs.elem},
                         {gen_at(zero, m_keys[r.rhs.gen]), r.rhs.elem}});
  }
  // x.0 = y.0 for all ordered pairs in Z
  const Elem n_z = static_cast<Elem>(gens.size());
  for (Elem x = 0; x < n_z; ++x) {
    for (Elem y = 0; y < n_z; ++y) {
      relations.push_back({{x, zero}, {y, zero}});
    }
  }

  ZeroExtensionPresentation out{
      m0, std::move(z),
      {ActPresentation(m0, std::move(gens), std::move(relations)),
       std::move(values)}};
  require_presents(out.pres.pres, d0.act, out.pres.assign,
                   "zero extension presentation");
  return out;
}

ProductDiagonalPresentation product_diagonal_presentation(
    const MonoidPtr& m, const MonoidPtr& n, const ActPresentation& p_m,
    std::span<const Elem> u, const ActPresentation& p_n,
    std::span<const Elem> v) {
  const DiagonalAct dm = diagonal_act(m);
  const DiagonalAct dn = diagonal_act(n);
  const SquareKeys km = square_keys(p_m);
  const SquareKeys kn = square_keys(p_n);
  {
    std::vector<Elem> am, an;
    for (const auto& [a, b] : km.pairs) am.push_back(dm.index(a, b));
    for (const auto& [a, b] : kn.pairs) an.push_back(dn.index(a, b));
    require_presents_input(p_m, dm.act, am,
                           "product_diagonal_presentation first input");
    require_presents_input(p_n, dn.act, an,
                           "product_diagonal_presentation second input");
  }

  const MonoidPtr product = direct_product_monoid(m, n);
  const DiagonalAct dmn = diagonal_act(product);
  const std::size_t no = n->order();

  const std::vector<Elem> us = sorted_unique(u);
  const std::vector<Elem> vs = sorted_unique(v);
  std::map<std::pair<Elem, Elem>, Elem> gen_of;
  std::vector<GenLabel> gens;
  std::vector<Elem> values;
  for (Elem u1 : us) {
    for (Elem v1 : vs) {
      for (Elem u2 : us) {
        for (Elem v2 : vs) {
          const Elem p1 = product_index(u1, v1, no);
          const Elem p2 = product_index(u2, v2, no);
          gen_of[{p1, p2}] = static_cast<Elem>(gens.size());
          gens.push_back({pair_text(*product, p1, p2), {p1, p2}});
          values.push_back(dmn.index(p1, p2));
        }
      }
    }
  }
  auto gen_at = [&](Elem u1, Elem v1, Elem u2, Elem v2) {
    const auto it = gen_of.find(
        {product_index(u1, v1, no), product_index(u2, v2, no)});
    if (it == gen_of.end()) {
      throw ActError(ErrorKind::BadArgument,
                     "input generator outside (U x V) x (U x V)");
    }
    return it->second;
  };

  std::vector<ActRelation> relations;
  // T1: each relation of R, frozen second coordinates (v, v') and a common
  // N-multiplier n.  Enumerating all (v, v', n) rather than only the sides
  // of S is what makes the closure reach the kernel when S is sparse (or
  // empty); the n-chain in the correctness argument picks n = t directly.
  for (const auto& r : p_m.relations()) {
    const auto [u1, u2] = km.pairs[r.lhs.gen];
    const auto [u3, u4] = km.pairs[r.rhs.gen];
    for (Elem v1 : vs) {
      for (Elem v2 : vs) {
        for (Elem nn = 0; nn < no; ++nn) {
          const Elem mult_l = product_index(r.lhs.elem, nn, no);
          const Elem mult_r = product_index(r.rhs.elem, nn, no);
          relations.push_back({{gen_at(u1, v1, u2, v2), mult_l},
                               {gen_at(u3, v1, u4, v2), mult_r}});
        }
      }
    }
  }
  const std::size_t t1_count = relations.size();
  // T2: the mirrored block
  const std::size_t mo = m->order();
  for (const auto& s : p_n.relations()) {
    const auto [v1, v2] = kn.pairs[s.lhs.gen];
    const auto [v3, v4] = kn.pairs[s.rhs.gen];
    for (Elem u1 : us) {
      for (Elem u2 : us) {
        for (Elem mm = 0; mm < mo; ++mm) {
          const Elem mult_l = product_index(mm, s.lhs.elem, no);
          const Elem mult_r = product_index(mm, s.rhs.elem, no);
          relations.push_back({{gen_at(u1, v1, u2, v2), mult_l},
                               {gen_at(u1, v3, u2, v4), mult_r}});
        }
      }
    }
  }
  const std::size_t t2_count = relations.size() - t1_count;

  ProductDiagonalPresentation out{
      product, t1_count, t2_count,
      {ActPresentation(product, std::move(gens), std::move(relations)),
       std::move(values)}};
  require_presents(out.pres.pres, dmn.act, out.pres.assign,
                   "product diagonal presentation");
  return out;
}

PresentationWithAssign product_diagonal_factor_presentation(
    const MonoidPtr& m, const MonoidPtr& n, const ActPresentation& p,
    std::span<const Elem> assign, bool first_factor) {
  const auto mn = direct_product_monoid(m, n);
  if (!p.monoid()->same_table(*mn)) {
    throw ActError(ErrorKind::BaseMismatch,
                   "presentation is not over M x N");
  }
  const DiagonalAct dmn = diagonal_act(mn);
  require_presents_input(p, dmn.act, assign,
                         "product_diagonal_factor_presentation");

  const SquareKeys keys = square_keys(p);
  const std::size_t no = n->order();
  auto project = [&](Elem prod) {
    const auto [a, b] = product_decode(prod, no);
    return first_factor ? a : b;
  };

  std::vector<Elem> factor_elems;
  for (const auto& [p1, p2] : keys.pairs) {
    factor_elems.push_back(project(p1));
    factor_elems.push_back(project(p2));
  }
  factor_elems = sorted_unique(factor_elems);

  const MonoidPtr& factor = first_factor ? m : n;
  const DiagonalAct d = diagonal_act(factor);
  std::map<std::pair<Elem, Elem>, Elem> gen_of;
  std::vector<GenLabel> gens;
  std::vector<Elem> values;
  for (Elem a : factor_elems) {
    for (Elem b : factor_elems) {
      gen_of[{a, b}] = static_cast<Elem>(gens.size());
      gens.push_back({pair_text(*factor, a, b), {a, b}});
      values.push_back(d.index(a, b));
    }
  }

  std::vector<ActRelation> relations;
  for (const auto& r : p.relations()) {
    auto image = [&](const FreeActElem& w) {
      const auto [p1, p2] = keys.pairs[w.gen];
      const auto [wm, wn] = product_decode(w.elem, no);
      return FreeActElem{gen_of.at({project(p1), project(p2)}),
                         first_factor ? wm : wn};
    };
    relations.push_back({image(r.lhs), image(r.rhs)});
  }

  PresentationWithAssign out{
      ActPresentation(factor, std::move(gens), std::move(relations)),
      std::move(values)};
  require_presents(out.pres, d.act, out.assign,
                   "product diagonal factor presentation");
  return out;
}

AttachGenerators attach_act_generators(const MonoidPtr& m, const FiniteAct& a,
                                       std::span<const Elem> x,
                                       std::span<const Elem> u) {
  if (std::find(u.begin(), u.end(), m->identity()) == u.end()) {
    throw ActError(ErrorKind::IdentityNotInU,
                   "the square generating set must contain the identity");
  }
  if (!is_generating_set(a, x)) {
    throw ActError(ErrorKind::NotGenerating, "X does not generate the act");
  }
  {
    const DiagonalAct dm = diagonal_act(m);
    std::vector<Elem> pairs;
    for (Elem p : u) {
      for (Elem q : u) pairs.push_back(dm.index(p, q));
    }
    if (!is_generating_set(dm.act, pairs)) {
      throw ActError(ErrorKind::NotGenerating,
                     "U x U does not generate the diagonal M-act");
    }
  }
  AttachGenerators out;
  out.u_monoid = attach_act_monoid(m, a);
  const Elem base = static_cast<Elem>(m->order());
  std::vector<Elem> v(u.begin(), u.end());
  for (Elem xe : x) {
    for (Elem ue : u) v.push_back(base + a.act(xe, ue));
  }
  out.v = sorted_unique(v);

  const DiagonalAct du = diagonal_act(out.u_monoid);
  std::vector<Elem> pairs;
  for (Elem p : out.v) {
    for (Elem q : out.v) pairs.push_back(du.index(p, q));
  }
  if (!is_generating_set(du.act, pairs)) {
    throw ActError(ErrorKind::VerificationFailed,
                   "V x V does not generate the diagonal U(M, A)-act");
  }
  return out;
}

AttachProjection attach_act_project_generators(const MonoidPtr& m,
                                               const FiniteAct& a,
                                               std::span<const Elem> gens) {
  const auto um = attach_act_monoid(m, a);
  {
    const DiagonalAct du = diagonal_act(um);
    std::vector<Elem> pairs;
    for (Elem p : gens) {
      for (Elem q : gens) pairs.push_back(du.index(p, q));
    }
    if (!is_generating_set(du.act, pairs)) {
      throw ActError(ErrorKind::NotGenerating,
                     "input does not generate the diagonal U(M, A)-act");
    }
  }
  const Elem base = static_cast<Elem>(m->order());
  AttachProjection out;
  for (Elem g : gens) {
    if (g >= base) {
      out.a_gens.push_back(g - base);
    } else {
      out.m_gens.push_back(g);
    }
  }
  out.a_gens = sorted_unique(out.a_gens);
  out.m_gens = sorted_unique(out.m_gens);
  if (!is_generating_set(a, out.a_gens)) {
    throw ActError(ErrorKind::VerificationFailed,
                   "U n A does not generate the act");
  }
  return out;
}

PresentationWithAssign attach_act_factor_presentation(
    const MonoidPtr& m, const FiniteAct& a, const ActPresentation& p,
    std::span<const Elem> assign, std::span<const Elem> x,
    std::span<const Elem> u) {
  const auto um = attach_act_monoid(m, a);
  if (!p.monoid()->same_table(*um)) {
    throw ActError(ErrorKind::BaseMismatch,
                   "presentation is not over U(M, A)");
  }
  if (std::find(u.begin(), u.end(), m->identity()) == u.end()) {
    throw ActError(ErrorKind::IdentityNotInU,
                   "the square generating set must contain the identity");
  }
  const DiagonalAct du = diagonal_act(um);
  require_presents_input(p, du.act, assign, "attach_act_factor_presentation");

  const SquareKeys keys = square_keys(p);
  const Elem base = static_cast<Elem>(m->order());

  // chi / alpha: smallest (x index, u index) with x.u = x'
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> chi(a.size(), kUnset), alpha(a.size(), kUnset);
  for (std::size_t ix = 0; ix < x.size(); ++ix) {
    for (std::size_t iu = 0; iu < u.size(); ++iu) {
      const Elem val = a.act(x[ix], u[iu]);
      if (chi[val] == kUnset) {
        chi[val] = static_cast<Elem>(ix);
        alpha[val] = u[iu];
      }
    }
  }

  std::vector<GenLabel> gens(x.size());
  for (std::size_t ix = 0; ix < x.size(); ++ix) {
    gens[ix] = {a.label(x[ix]), {x[ix]}};
  }

  std::vector<ActRelation> relations;
  // images of the relations whose sides lie in F_{X' x U, M}
  std::vector<bool> in_u(m->order(), false);
  for (Elem ue : u) in_u[ue] = true;
  for (const auto& r : p.relations()) {
    bool ok = true;
    ActRelation mapped{};
    FreeActElem* dst[2] = {&mapped.lhs, &mapped.rhs};
    const FreeActElem src[2] = {r.lhs, r.rhs};
    for (int s = 0; s < 2 && ok; ++s) {
      const auto [f, sec] = keys.pairs[src[s].gen];
      if (f < base || sec >= base || !in_u[sec] || src[s].elem >= base) {
        ok = false;
        break;
      }
      const Elem xprime = f - base;  // element of XU, inside A
      if (chi[xprime] == kUnset) {
        ok = false;
        break;
      }
      *dst[s] = {chi[xprime], m->mul(alpha[xprime], src[s].elem)};
    }
    if (ok) relations.push_back(mapped);
  }
  // x.u = y.v whenever xu = yv holds in A
  for (Elem ix = 0; ix < x.size(); ++ix) {
    for (Elem ue : u) {
      for (Elem iy = 0; iy < x.size(); ++iy) {
        for (Elem ve : u) {
          if (a.act(x[ix], ue) == a.act(x[iy], ve)) {
            relations.push_back({{ix, ue}, {iy, ve}});
          }
        }
      }
    }
  }

  PresentationWithAssign out{
      ActPresentation(m, std::move(gens), std::move(relations)),
      std::vector<Elem>(x.begin(), x.end())};
  require_presents(out.pres, a, out.assign, "attach factor presentation");
  return out;
}

}  // namespace actforge
