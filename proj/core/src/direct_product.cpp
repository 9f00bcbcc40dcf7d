#include "actforge/direct_product.hpp"

#include <algorithm>

#include "actforge/error.hpp"

namespace actforge {

DiagonalDecomposition DiagonalDecomposition::build(const MonoidPtr& m,
                                                   std::span<const Elem> u,
                                                   std::span<const Elem> v) {
  DiagonalDecomposition d;
  d.m_ = m;
  d.u_.assign(u.begin(), u.end());
  d.v_.assign(v.begin(), v.end());
  d.order_ = m->order();
  const std::size_t o = d.order_;
  d.alpha_.assign(o * o, 0);
  d.beta_.assign(o * o, 0);
  d.gamma_.assign(o * o, 0);
  for (Elem m1 = 0; m1 < o; ++m1) {
    for (Elem m2 = 0; m2 < o; ++m2) {
      bool found = false;
      for (std::size_t iu = 0; iu < d.u_.size() && !found; ++iu) {
        for (std::size_t iv = 0; iv < d.v_.size() && !found; ++iv) {
          for (Elem s = 0; s < o && !found; ++s) {
            if (m->mul(d.u_[iu], s) == m1 && m->mul(d.v_[iv], s) == m2) {
              d.alpha_[m1 * o + m2] = d.u_[iu];
              d.beta_[m1 * o + m2] = d.v_[iv];
              d.gamma_[m1 * o + m2] = s;
              found = true;
            }
          }
        }
      }
      if (!found) {
        throw ActError(ErrorKind::NotGenerating,
                       "U x V does not generate the diagonal act: no "
                       "decomposition of (" +
                           m->label(m1) + "," + m->label(m2) + ")",
                       {m1, m2});
      }
    }
  }
  return d;
}

bool crucial_identity_check(const MonoidPtr& m,
                            const DiagonalDecomposition& d) {
  const std::size_t o = m->order();
  for (Elem m1 = 0; m1 < o; ++m1) {
    for (Elem m2 = 0; m2 < o; ++m2) {
      for (Elem n1 = 0; n1 < o; ++n1) {
        for (Elem n2 = 0; n2 < o; ++n2) {
          const Elem uu = d.alpha(m2, n2);
          const Elem vv = d.beta(m2, n2);
          const Elem g2 = d.gamma(m2, n2);
          const Elem p = m->mul(m1, uu);
          const Elem q = m->mul(n1, vv);
          if (m->mul(m1, m2) != m->mul(p, g2) ||
              m->mul(n1, n2) != m->mul(q, g2)) {
            return false;
          }
          const Elem g1 = d.gamma(p, q);
          const Elem g = m->mul(g1, g2);
          if (m->mul(m1, m2) != m->mul(d.alpha(p, q), g) ||
              m->mul(n1, n2) != m->mul(d.beta(p, q), g)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

namespace {

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Elem DpSetup::xu_pos(Elem value) const {
  const auto it = std::lower_bound(xu.begin(), xu.end(), value);
  return static_cast<Elem>(it - xu.begin());
}

Elem DpSetup::yv_pos(Elem value) const {
  const auto it = std::lower_bound(yv.begin(), yv.end(), value);
  return static_cast<Elem>(it - yv.begin());
}

DpSetup dp_setup(const FiniteAct& a, std::span<const Elem> x,
                 const FiniteAct& b, std::span<const Elem> y,
                 std::span<const Elem> u, std::span<const Elem> v) {
  if (!a.base()->same_table(*b.base())) {
    throw ActError(ErrorKind::BaseMismatch,
                   "direct product needs acts over the same monoid");
  }
  if (!is_generating_set(a, x)) {
    throw ActError(ErrorKind::NotGenerating, "X does not generate A");
  }
  if (!is_generating_set(b, y)) {
    throw ActError(ErrorKind::NotGenerating, "Y does not generate B");
  }
  const MonoidPtr& m = a.base();

  DpSetup s{a,
            b,
            std::vector<Elem>(x.begin(), x.end()),
            std::vector<Elem>(y.begin(), y.end()),
            std::vector<Elem>(u.begin(), u.end()),
            std::vector<Elem>(v.begin(), v.end()),
            direct_product_act(a, b),
            {},
            {},
            {},
            {},
            DiagonalDecomposition::build(m, u, v),
            {}};

  std::vector<Elem> xu_vals, yv_vals;
  for (Elem xe : x) {
    for (Elem ue : u) xu_vals.push_back(a.act(xe, ue));
  }
  for (Elem ye : y) {
    for (Elem ve : v) yv_vals.push_back(b.act(ye, ve));
  }
  s.xu = sorted_unique(std::move(xu_vals));
  s.yv = sorted_unique(std::move(yv_vals));

  constexpr Elem kUnset = static_cast<Elem>(-1);
  s.xu_choice.assign(s.xu.size(), {kUnset, kUnset});
  for (Elem ix = 0; ix < s.x.size(); ++ix) {
    for (Elem iu = 0; iu < s.u.size(); ++iu) {
      const Elem pos = s.xu_pos(a.act(s.x[ix], s.u[iu]));
      if (s.xu_choice[pos].first == kUnset) s.xu_choice[pos] = {ix, iu};
    }
  }
  s.yv_choice.assign(s.yv.size(), {kUnset, kUnset});
  for (Elem iy = 0; iy < s.y.size(); ++iy) {
    for (Elem iv = 0; iv < s.v.size(); ++iv) {
      const Elem pos = s.yv_pos(b.act(s.y[iy], s.v[iv]));
      if (s.yv_choice[pos].first == kUnset) s.yv_choice[pos] = {iy, iv};
    }
  }

  for (Elem p : s.xu) {
    for (Elem q : s.yv) {
      s.gens.push_back(static_cast<Elem>(p * b.size() + q));
    }
  }
  if (!is_generating_set(s.product, s.gens)) {
    throw ActError(ErrorKind::NotGenerating,
                   "Z = XU x YV does not generate A x B");
  }
  return s;
}

GeneratingSet dp_generating_set(const FiniteAct& a, std::span<const Elem> x,
                                const FiniteAct& b, std::span<const Elem> y,
                                std::span<const Elem> u,
                                std::span<const Elem> v) {
  DpSetup s = dp_setup(a, x, b, y, u, v);
  GeneratingSet gs;
  gs.elems = std::move(s.gens);
  std::sort(gs.elems.begin(), gs.elems.end());
  return gs;
}

FreeActElem rho_pair(const DpSetup& s, const FreeActElem& wa,
                     const FreeActElem& wb) {
  const Elem m1 = wa.elem, n1 = wb.elem;
  const Elem uu = s.dec.alpha(m1, n1);
  const Elem vv = s.dec.beta(m1, n1);
  const Elem g = s.dec.gamma(m1, n1);
  const Elem av = s.a.act(s.x[wa.gen], uu);
  const Elem bv = s.b.act(s.y[wb.gen], vv);
  return {s.z_gen(s.xu_pos(av), s.yv_pos(bv)), g};
}

DpPresentation dp_presentation(const DpSetup& s, const ActPresentation& p_a,
                               const ActPresentation& p_b,
                               const ActPresentation& p_diag) {
  if (p_a.n_gens() != s.x.size() || p_b.n_gens() != s.y.size()) {
    throw ActError(ErrorKind::BadArgument,
                   "presentations do not match the generating sets");
  }
  require_presents_input(p_a, s.a, s.x, "dp_presentation input A");
  require_presents_input(p_b, s.b, s.y, "dp_presentation input B");
  const DiagonalAct diag = diagonal_act(s.a.base());
  std::vector<std::pair<Elem, Elem>> diag_keys;
  {
    std::vector<Elem> assign;
    for (const auto& g : p_diag.gens()) {
      if (g.key.size() != 2) {
        throw ActError(ErrorKind::BadArgument,
                       "diagonal presentation generators need pair keys");
      }
      diag_keys.emplace_back(g.key[0], g.key[1]);
      assign.push_back(diag.index(g.key[0], g.key[1]));
    }
    require_presents_input(p_diag, diag.act, assign,
                           "dp_presentation diagonal input");
  }

  const auto& m = *s.a.base();
  std::vector<GenLabel> gens;
  std::vector<Elem> values;
  for (Elem p : s.xu) {
    for (Elem q : s.yv) {
      gens.push_back({"(" + s.a.label(p) + "," + s.b.label(q) + ")", {p, q}});
      values.push_back(static_cast<Elem>(p * s.b.size() + q));
    }
  }

  std::vector<ActRelation> relations;
  // T1: transported relations of the diagonal presentation
  for (Elem ix = 0; ix < s.x.size(); ++ix) {
    for (Elem iy = 0; iy < s.y.size(); ++iy) {
      for (const auto& r : p_diag.relations()) {
        const auto [u1, v1] = diag_keys[r.lhs.gen];
        const auto [u2, v2] = diag_keys[r.rhs.gen];
        const Elem l = s.z_gen(s.xu_pos(s.a.act(s.x[ix], u1)),
                               s.yv_pos(s.b.act(s.y[iy], v1)));
        const Elem rr = s.z_gen(s.xu_pos(s.a.act(s.x[ix], u2)),
                                s.yv_pos(s.b.act(s.y[iy], v2)));
        relations.push_back({{l, r.lhs.elem}, {rr, r.rhs.elem}});
      }
    }
  }
  const std::size_t t1 = relations.size();
  // T2: relations of A spread over the sides of S and U x V
  const auto s_sides = relation_sides(p_b.relations());
  for (const auto& r : p_a.relations()) {
    for (const auto& w : s_sides) {
      for (Elem ue : s.u) {
        for (Elem ve : s.v) {
          const FreeActElem wa1{r.lhs.gen, m.mul(r.lhs.elem, ue)};
          const FreeActElem wa2{r.rhs.gen, m.mul(r.rhs.elem, ue)};
          const FreeActElem wb{w.gen, m.mul(w.elem, ve)};
          relations.push_back({rho_pair(s, wa1, wb), rho_pair(s, wa2, wb)});
        }
      }
    }
  }
  const std::size_t t2 = relations.size() - t1;
  // T3: the mirrored block
  const auto r_sides = relation_sides(p_a.relations());
  for (const auto& w : r_sides) {
    for (const auto& r : p_b.relations()) {
      for (Elem ue : s.u) {
        for (Elem ve : s.v) {
          const FreeActElem wa{w.gen, m.mul(w.elem, ue)};
          const FreeActElem wb1{r.lhs.gen, m.mul(r.lhs.elem, ve)};
          const FreeActElem wb2{r.rhs.gen, m.mul(r.rhs.elem, ve)};
          relations.push_back({rho_pair(s, wa, wb1), rho_pair(s, wa, wb2)});
        }
      }
    }
  }
  const std::size_t t3 = relations.size() - t1 - t2;

  DpPresentation out{
      t1, t2, t3,
      {ActPresentation(s.a.base(), std::move(gens), std::move(relations)),
       std::move(values)}};
  require_presents(out.pres.pres, s.product, out.pres.assign,
                   "direct product presentation");
  return out;
}

PresentationWithAssign dp_factor_presentation(const DpSetup& s,
                                              const ActPresentation& p) {
  if (s.u != s.v) {
    throw ActError(ErrorKind::BadArgument,
                   "factor extraction needs V = U");
  }
  // generators of p are the Z grid; identify them through their keys
  std::vector<std::pair<Elem, Elem>> keys;
  std::vector<Elem> assign;
  for (const auto& g : p.gens()) {
    if (g.key.size() != 2) {
      throw ActError(ErrorKind::BadArgument,
                     "product presentation generators need pair keys");
    }
    keys.emplace_back(g.key[0], g.key[1]);
    assign.push_back(static_cast<Elem>(g.key[0] * s.b.size() + g.key[1]));
  }
  require_presents_input(p, s.product, assign, "dp_factor_presentation");

  const auto& m = *s.a.base();
  std::vector<GenLabel> gens(s.x.size());
  for (Elem ix = 0; ix < s.x.size(); ++ix) {
    gens[ix] = {s.a.label(s.x[ix]), {s.x[ix]}};
  }

  std::vector<ActRelation> relations;
  auto image = [&](const FreeActElem& w) {
    const Elem a_val = keys[w.gen].first;
    const auto [ix, iu] = s.xu_choice[s.xu_pos(a_val)];
    return FreeActElem{ix, m.mul(s.u[iu], w.elem)};
  };
  for (const auto& r : p.relations()) {
    relations.push_back({image(r.lhs), image(r.rhs)});
  }
  for (Elem ix = 0; ix < s.x.size(); ++ix) {
    for (Elem ue : s.u) {
      for (Elem iy = 0; iy < s.x.size(); ++iy) {
        for (Elem ve : s.u) {
          if (s.a.act(s.x[ix], ue) == s.a.act(s.x[iy], ve)) {
            relations.push_back({{ix, ue}, {iy, ve}});
          }
        }
      }
    }
  }

  PresentationWithAssign out{
      ActPresentation(s.a.base(), std::move(gens), std::move(relations)),
      s.x};
  require_presents(out.pres, s.a, out.assign, "dp factor presentation");
  return out;
}

}  // namespace actforge
