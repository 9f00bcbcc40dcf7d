#include "actforge/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "actforge/config.hpp"
#include "actforge/error.hpp"

namespace actforge {

namespace namap {

NAMap product(const FiniteMonoid& n, const NAMap& theta, const NAMap& phi) {
  NAMap out(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    out[i] = n.mul(theta[i], phi[i]);
  }
  return out;
}

NAMap shift(const FiniteAct& a, Elem m, const NAMap& phi) {
  NAMap out(phi.size());
  for (Elem i = 0; i < phi.size(); ++i) out[i] = phi[a.act(i, m)];
  return out;
}

NAMap constant(std::size_t asize, Elem n) { return NAMap(asize, n); }

Elem index(const NAMap& theta, std::size_t nsize) {
  Elem e = 0;
  std::uint64_t pow = 1;
  for (Elem v : theta) {
    e = static_cast<Elem>(e + v * pow);
    pow *= nsize;
  }
  return e;
}

NAMap from_index(Elem e, std::size_t asize, std::size_t nsize) {
  NAMap out(asize);
  for (std::size_t i = 0; i < asize; ++i) {
    out[i] = static_cast<Elem>(e % nsize);
    e = static_cast<Elem>(e / nsize);
  }
  return out;
}

}  // namespace namap

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) {
      throw ActError(ErrorKind::SizeLimit,
                     "|N|^|A| exceeds the cap " + std::to_string(cap));
    }
  }
  return v;
}

void require_namap_cap(std::size_t k) {
  if (k > namap_cap()) {
    throw ActError(ErrorKind::SizeLimit,
                   "|N|^|A| = " + std::to_string(k) +
                       " exceeds the N^A enumeration cap " +
                       std::to_string(namap_cap()));
  }
}

std::string namap_text(const FiniteMonoid& n, const NAMap& theta) {
  std::string s = "[";
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (i) s += " ";
    s += n.label(theta[i]);
  }
  return s + "]";
}

}  // namespace

WreathMonoid::WreathMonoid(MonoidPtr m, MonoidPtr n, FiniteAct a)
    : m_(std::move(m)), n_(std::move(n)), a_(std::move(a)) {
  if (!a_.base()->same_table(*m_)) {
    throw ActError(ErrorKind::BaseMismatch, "A is not an act over M");
  }
  k_ = checked_pow(n_->order(), a_.size(), size_cap());
  const std::size_t order = m_->order() * k_;
  if (order > size_cap() || order / k_ != m_->order()) {
    throw ActError(ErrorKind::SizeLimit,
                   "|M| * |N|^|A| exceeds the size cap");
  }

  std::vector<NAMap> maps(k_);
  for (Elem e = 0; e < k_; ++e) {
    maps[e] = namap::from_index(e, a_.size(), n_->order());
  }
  std::vector<Elem> table(order * order);
  for (Elem lhs = 0; lhs < order; ++lhs) {
    const Elem lm = static_cast<Elem>(lhs / k_);
    const NAMap& ltheta = maps[lhs % k_];
    for (Elem rhs = 0; rhs < order; ++rhs) {
      const Elem rm = static_cast<Elem>(rhs / k_);
      const NAMap& rphi = maps[rhs % k_];
      const NAMap prod =
          namap::product(*n_, ltheta, namap::shift(a_, lm, rphi));
      table[lhs * order + rhs] = static_cast<Elem>(
          m_->mul(lm, rm) * k_ + namap::index(prod, n_->order()));
    }
  }
  std::vector<std::string> labels(order);
  for (Elem e = 0; e < order; ++e) {
    labels[e] = "(" + m_->label(static_cast<Elem>(e / k_)) + "," +
                namap_text(*n_, maps[e % k_]) + ")";
  }
  const Elem ident =
      static_cast<Elem>(m_->identity() * k_ +
                        namap::index(namap::constant(a_.size(), n_->identity()),
                                     n_->order()));
  w_ = validate_monoid(order, std::move(table), ident, std::move(labels));
}

WreathMonoid wreath_monoid(const MonoidPtr& m, const MonoidPtr& n,
                           const FiniteAct& a) {
  return WreathMonoid(m, n, a);
}

FiniteAct wreath_act(const WreathMonoid& w, const FiniteAct& b) {
  if (!b.base()->same_table(*w.n())) {
    throw ActError(ErrorKind::BaseMismatch, "B is not an act over N");
  }
  const FiniteAct& a = w.a();
  const std::size_t size = a.size() * b.size();
  if (size > size_cap()) {
    throw ActError(ErrorKind::SizeLimit,
                   "wreath act size exceeds the size cap");
  }
  const std::size_t worder = w.monoid()->order();
  std::vector<std::pair<Elem, NAMap>> decoded(worder);
  for (Elem e = 0; e < worder; ++e) decoded[e] = w.decode(e);

  std::vector<Elem> action(size * worder);
  std::vector<std::string> labels(size);
  for (Elem p = 0; p < a.size(); ++p) {
    for (Elem q = 0; q < b.size(); ++q) {
      const Elem e = static_cast<Elem>(p * b.size() + q);
      labels[e] = "(" + a.label(p) + "," + b.label(q) + ")";
      for (Elem we = 0; we < worder; ++we) {
        const auto& [m, theta] = decoded[we];
        action[e * worder + we] = static_cast<Elem>(
            a.act(p, m) * b.size() + b.act(q, theta[p]));
      }
    }
  }
  return validate_act(w.monoid(), size, std::move(action), std::move(labels));
}

GeneratingSet wreath_generating_set(const WreathMonoid& w, const FiniteAct& b,
                                    std::span<const Elem> x,
                                    std::span<const Elem> y) {
  if (!is_generating_set(w.a(), x)) {
    throw ActError(ErrorKind::NotGenerating, "X does not generate A");
  }
  if (!is_generating_set(b, y)) {
    throw ActError(ErrorKind::NotGenerating, "Y does not generate B");
  }
  const FiniteAct wab = wreath_act(w, b);
  GeneratingSet gs;
  for (Elem xe : x) {
    for (Elem ye : y) {
      gs.elems.push_back(static_cast<Elem>(xe * b.size() + ye));
    }
  }
  std::sort(gs.elems.begin(), gs.elems.end());
  gs.elems.erase(std::unique(gs.elems.begin(), gs.elems.end()),
                 gs.elems.end());
  if (!is_generating_set(wab, gs.elems)) {
    throw ActError(ErrorKind::VerificationFailed,
                   "X x Y does not generate A wr B");
  }
  return gs;
}

std::pair<std::vector<Elem>, std::vector<Elem>> wreath_project_generators(
    const WreathMonoid& w, const FiniteAct& b, std::span<const Elem> gens) {
  const FiniteAct wab = wreath_act(w, b);
  if (!is_generating_set(wab, gens)) {
    throw ActError(ErrorKind::NotGenerating,
                   "input does not generate A wr B");
  }
  std::vector<Elem> x, y;
  for (Elem g : gens) {
    x.push_back(static_cast<Elem>(g / b.size()));
    y.push_back(static_cast<Elem>(g % b.size()));
  }
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  if (!is_generating_set(w.a(), x) || !is_generating_set(b, y)) {
    throw ActError(ErrorKind::VerificationFailed,
                   "a projection fails to generate its factor");
  }
  return {std::move(x), std::move(y)};
}

WreathPresentation wreath_presentation(const WreathMonoid& w,
                                       const FiniteAct& b,
                                       const ActPresentation& p_a,
                                       std::span<const Elem> x,
                                       const ActPresentation& p_b,
                                       std::span<const Elem> y) {
  if (p_a.n_gens() != x.size() || p_b.n_gens() != y.size()) {
    throw ActError(ErrorKind::BadArgument,
                   "presentations do not match the generating sets");
  }
  require_presents_input(p_a, w.a(), x, "wreath_presentation input A");
  require_presents_input(p_b, b, y, "wreath_presentation input B");
  const std::size_t k = w.n_maps();
  require_namap_cap(k);

  const FiniteAct wab = wreath_act(w, b);
  const FiniteAct& a = w.a();
  const Elem one_m = w.m()->identity();
  const Elem one_n = w.n()->identity();

  std::vector<GenLabel> gens;
  std::vector<Elem> values;
  auto z = [&](Elem ix, Elem iy) {
    return static_cast<Elem>(ix * y.size() + iy);
  };
  for (Elem ix = 0; ix < x.size(); ++ix) {
    for (Elem iy = 0; iy < y.size(); ++iy) {
      gens.push_back({"(" + a.label(x[ix]) + "," + b.label(y[iy]) + ")",
                      {x[ix], y[iy]}});
      values.push_back(static_cast<Elem>(x[ix] * b.size() + y[iy]));
    }
  }

  std::vector<ActRelation> relations;
  // T1: (x, y).(1, theta) = (x, y).(1, c_{x theta}) over all of N^A
  for (Elem ix = 0; ix < x.size(); ++ix) {
    for (Elem iy = 0; iy < y.size(); ++iy) {
      for (Elem t = 0; t < k; ++t) {
        const NAMap theta = namap::from_index(t, a.size(), w.n()->order());
        relations.push_back(
            {{z(ix, iy), w.encode(one_m, theta)},
             {z(ix, iy), w.encode_const(one_m, theta[x[ix]])}});
      }
    }
  }
  const std::size_t t1 = relations.size();
  // T2: relations of A with (m, c_1) multipliers
  for (const auto& r : p_a.relations()) {
    for (Elem iy = 0; iy < y.size(); ++iy) {
      relations.push_back(
          {{z(r.lhs.gen, iy), w.encode_const(r.lhs.elem, one_n)},
           {z(r.rhs.gen, iy), w.encode_const(r.rhs.elem, one_n)}});
    }
  }
  const std::size_t t2 = relations.size() - t1;
  // T3: relations of B with (1, c_n) multipliers
  for (Elem ix = 0; ix < x.size(); ++ix) {
    for (const auto& r : p_b.relations()) {
      relations.push_back(
          {{z(ix, r.lhs.gen), w.encode_const(one_m, r.lhs.elem)},
           {z(ix, r.rhs.gen), w.encode_const(one_m, r.rhs.elem)}});
    }
  }
  const std::size_t t3 = relations.size() - t1 - t2;

  WreathPresentation out{
      std::vector<Elem>(x.begin(), x.end()),
      std::vector<Elem>(y.begin(), y.end()),
      t1,
      t2,
      t3,
      {ActPresentation(w.monoid(), std::move(gens), std::move(relations)),
       std::move(values)}};
  require_presents(out.pres.pres, wab, out.pres.assign, "wreath presentation");
  return out;
}

std::pair<PresentationWithAssign, PresentationWithAssign>
wreath_factor_presentations(const WreathMonoid& w, const FiniteAct& b,
                            const ActPresentation& p, std::span<const Elem> x,
                            std::span<const Elem> y) {
  const FiniteAct wab = wreath_act(w, b);
  const FiniteAct& a = w.a();

  auto pos_of = [](std::span<const Elem> list, Elem value,
                   const char* what) {
    const auto it = std::find(list.begin(), list.end(), value);
    if (it == list.end()) {
      throw ActError(ErrorKind::BadArgument,
                     std::string(what) + " value missing from the list",
                     {value});
    }
    return static_cast<Elem>(it - list.begin());
  };

  std::vector<std::pair<Elem, Elem>> keys;  // (x index, y index)
  std::vector<Elem> assign;
  for (const auto& g : p.gens()) {
    if (g.key.size() != 2) {
      throw ActError(ErrorKind::BadArgument,
                     "wreath presentation generators need (x, y) keys");
    }
    keys.emplace_back(pos_of(x, g.key[0], "X"), pos_of(y, g.key[1], "Y"));
    assign.push_back(static_cast<Elem>(g.key[0] * b.size() + g.key[1]));
  }
  require_presents_input(p, wab, assign, "wreath_factor_presentations");

  std::vector<GenLabel> gx(x.size()), gy(y.size());
  for (Elem i = 0; i < x.size(); ++i) gx[i] = {a.label(x[i]), {x[i]}};
  for (Elem i = 0; i < y.size(); ++i) gy[i] = {b.label(y[i]), {y[i]}};

  std::vector<ActRelation> rx, ry;
  for (const auto& r : p.relations()) {
    auto image_x = [&](const FreeActElem& e) {
      const auto [m, theta] = w.decode(e.elem);
      (void)theta;
      return FreeActElem{keys[e.gen].first, m};
    };
    auto image_y = [&](const FreeActElem& e) {
      const auto [m, theta] = w.decode(e.elem);
      (void)m;
      // x is evaluated in A here: the multiplier is theta at the x value
      return FreeActElem{keys[e.gen].second, theta[x[keys[e.gen].first]]};
    };
    rx.push_back({image_x(r.lhs), image_x(r.rhs)});
    ry.push_back({image_y(r.lhs), image_y(r.rhs)});
  }

  PresentationWithAssign out_a{
      ActPresentation(w.m(), std::move(gx), std::move(rx)),
      std::vector<Elem>(x.begin(), x.end())};
  PresentationWithAssign out_b{
      ActPresentation(w.n(), std::move(gy), std::move(ry)),
      std::vector<Elem>(y.begin(), y.end())};
  require_presents(out_a.pres, a, out_a.assign, "wreath factor for A");
  require_presents(out_b.pres, b, out_b.assign, "wreath factor for B");
  return {std::move(out_a), std::move(out_b)};
}

namespace {

// Edge test of the (U, a)-step relation: sigma -> tau via u in the given
// mode iff a single psi works coordinatewise; psi is produced on success.
bool step_edge(const FiniteMonoid& n, const NAMap& u_map, Elem ua,
               bool from_u, const NAMap& sigma, const NAMap& tau,
               NAMap* psi_out) {
  const std::size_t asize = sigma.size();
  NAMap psi(asize);
  for (std::size_t bcoord = 0; bcoord < asize; ++bcoord) {
    const Elem lhs = from_u ? u_map[bcoord] : ua;
    const Elem rhs = from_u ? ua : u_map[bcoord];
    bool found = false;
    for (Elem cand = 0; cand < n.order(); ++cand) {
      if (n.mul(lhs, cand) == sigma[bcoord] &&
          n.mul(rhs, cand) == tau[bcoord]) {
        psi[bcoord] = cand;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  if (psi_out) *psi_out = std::move(psi);
  return true;
}

}  // namespace

std::optional<ConnectednessCertificate> is_u_connected(
    const MonoidPtr& n, std::size_t asize, const NAMap& theta,
    const NAMap& phi, std::span<const NAMap> u, Elem a) {
  if (theta.size() != asize || phi.size() != asize) {
    throw ActError(ErrorKind::BadArgument, "map size does not match |A|");
  }
  if (theta == phi) return ConnectednessCertificate{};
  const std::size_t k = checked_pow(n->order(), asize, namap_cap());

  std::vector<NAMap> maps(k);
  for (Elem e = 0; e < k; ++e) maps[e] = namap::from_index(e, asize, n->order());

  const Elem start = namap::index(theta, n->order());
  const Elem goal = namap::index(phi, n->order());
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> prev(k, kUnset);
  std::vector<ConnStep> how(k);
  std::queue<Elem> frontier;
  prev[start] = start;
  frontier.push(start);
  while (!frontier.empty()) {
    const Elem cur = frontier.front();
    frontier.pop();
    if (cur == goal) break;
    for (Elem ui = 0; ui < u.size(); ++ui) {
      const Elem ua = u[ui][a];
      for (const bool from_u : {true, false}) {
        for (Elem t = 0; t < k; ++t) {
          if (prev[t] != kUnset) continue;
          NAMap psi;
          if (step_edge(*n, u[ui], ua, from_u, maps[cur], maps[t], &psi)) {
            prev[t] = cur;
            how[t] = {from_u, ui, std::move(psi)};
            frontier.push(t);
          }
        }
      }
    }
  }
  if (prev[goal] == kUnset) return std::nullopt;
  ConnectednessCertificate cert;
  for (Elem cur = goal; cur != start; cur = prev[cur]) {
    cert.steps.push_back(how[cur]);
  }
  std::reverse(cert.steps.begin(), cert.steps.end());
  return cert;
}

bool replay_connectedness(const MonoidPtr& n, Elem a, const NAMap& theta,
                          const NAMap& phi, std::span<const NAMap> u,
                          const ConnectednessCertificate& cert) {
  NAMap cur = theta;
  for (const ConnStep& s : cert.steps) {
    if (s.u_index >= u.size() || s.psi.size() != theta.size()) return false;
    const NAMap& u_map = u[s.u_index];
    const NAMap cst = namap::constant(theta.size(), u_map[a]);
    const NAMap& theta_i = s.from_u ? u_map : cst;
    const NAMap& phi_i = s.from_u ? cst : u_map;
    if (namap::product(*n, theta_i, s.psi) != cur) return false;
    cur = namap::product(*n, phi_i, s.psi);
  }
  return cur == phi;
}

std::vector<std::uint32_t> u_connected_components(const MonoidPtr& n,
                                                  std::size_t asize,
                                                  std::span<const NAMap> u,
                                                  Elem a) {
  const std::size_t k = checked_pow(n->order(), asize, namap_cap());
  std::vector<NAMap> maps(k);
  for (Elem e = 0; e < k; ++e) maps[e] = namap::from_index(e, asize, n->order());

  std::vector<std::uint32_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (Elem s = 0; s < k; ++s) {
    for (Elem t = s + 1; t < k; ++t) {
      if (find(s) == find(t)) continue;
      for (const NAMap& u_map : u) {
        const Elem ua = u_map[a];
        if (step_edge(*n, u_map, ua, true, maps[s], maps[t], nullptr) ||
            step_edge(*n, u_map, ua, false, maps[s], maps[t], nullptr)) {
          const auto rs = find(s), rt = find(t);
          parent[std::max(rs, rt)] = std::min(rs, rt);
          break;
        }
      }
    }
  }
  std::vector<std::uint32_t> comp(k);
  for (Elem e = 0; e < k; ++e) comp[e] = find(e);
  return comp;
}

WreathPresentation reduce_t1(const WreathMonoid& w, const FiniteAct& b,
                             const WreathPresentation& wp,
                             std::span<const NAMap> u) {
  const FiniteAct& a = w.a();
  const std::size_t k = w.n_maps();
  require_namap_cap(k);
  const std::size_t nsize = w.n()->order();

  // Prop hypothesis: every theta is connected to c_{x theta} for every x
  for (Elem ix = 0; ix < wp.x.size(); ++ix) {
    const Elem xv = wp.x[ix];
    const auto comp = u_connected_components(w.n(), a.size(), u, xv);
    for (Elem t = 0; t < k; ++t) {
      const NAMap theta = namap::from_index(t, a.size(), nsize);
      const NAMap cst = namap::constant(a.size(), theta[xv]);
      if (theta == cst) continue;
      const Elem c = namap::index(cst, nsize);
      if (comp[t] != comp[c]) {
        throw ActError(ErrorKind::HypothesisFails,
                       "theta #" + std::to_string(t) +
                           " is not (U, x)-connected to its constant at x=" +
                           a.label(xv),
                       {t, xv});
      }
    }
  }

  const Elem one_m = w.m()->identity();
  std::vector<ActRelation> relations;
  auto z = [&](Elem ix, Elem iy) {
    return static_cast<Elem>(ix * wp.y.size() + iy);
  };
  for (Elem ix = 0; ix < wp.x.size(); ++ix) {
    for (Elem iy = 0; iy < wp.y.size(); ++iy) {
      for (const NAMap& theta : u) {
        relations.push_back(
            {{z(ix, iy), w.encode(one_m, theta)},
             {z(ix, iy), w.encode_const(one_m, theta[wp.x[ix]])}});
      }
    }
  }
  const std::size_t t1 = relations.size();
  const auto& old = wp.pres.pres.relations();
  relations.insert(relations.end(), old.begin() + wp.t1_count, old.end());

  WreathPresentation out{
      wp.x,
      wp.y,
      t1,
      wp.t2_count,
      wp.t3_count,
      {wp.pres.pres.with_relations(std::move(relations)), wp.pres.assign}};
  require_presents(out.pres.pres, wreath_act(w, b), out.pres.assign,
                   "reduced wreath presentation");
  return out;
}

std::vector<NAMap> left_zero_u(const FiniteAct& a, std::span<const Elem> x,
                               const MonoidPtr& n, Elem z) {
  if (z >= n->order()) {
    throw ActError(ErrorKind::OutOfRange, "left zero out of range", {z});
  }
  for (Elem e = 0; e < n->order(); ++e) {
    if (n->mul(z, e) != z) {
      throw ActError(ErrorKind::NotLeftZero,
                     n->label(z) + " is not a left zero", {z, e});
    }
  }
  if (!is_generating_set(a, x)) {
    throw ActError(ErrorKind::NotGenerating, "X does not generate A");
  }
  std::vector<NAMap> u;
  for (Elem xv : x) {
    NAMap phi(a.size(), z);
    phi[xv] = n->identity();
    u.push_back(std::move(phi));
  }
  // re-check the reduction hypothesis at every x
  const std::size_t nsize = n->order();
  const std::size_t k = checked_pow(nsize, a.size(), namap_cap());
  for (Elem xv : x) {
    const auto comp = u_connected_components(n, a.size(), u, xv);
    for (Elem t = 0; t < k; ++t) {
      const NAMap theta = namap::from_index(t, a.size(), nsize);
      const NAMap cst = namap::constant(a.size(), theta[xv]);
      if (theta != cst && comp[t] != comp[namap::index(cst, nsize)]) {
        throw ActError(ErrorKind::HypothesisFails,
                       "left-zero U misses theta #" + std::to_string(t),
                       {t, xv});
      }
    }
  }
  return u;
}

std::vector<NAMap> finite_a_fg_n_u(const FiniteAct& a, const MonoidPtr& n,
                                   std::span<const Elem> xn) {
  if (!generates_monoid(*n, xn)) {
    throw ActError(ErrorKind::NotMonoidGeneratingSet,
                   "Xn does not generate N");
  }
  std::vector<NAMap> u;
  for (Elem av = 0; av < a.size(); ++av) {
    for (Elem xv : xn) {
      NAMap theta(a.size(), n->identity());
      theta[av] = xv;
      if (std::find(u.begin(), u.end(), theta) == u.end()) {
        u.push_back(std::move(theta));
      }
    }
  }
  const std::size_t nsize = n->order();
  const std::size_t k = checked_pow(nsize, a.size(), namap_cap());
  for (Elem av = 0; av < a.size(); ++av) {
    const auto comp = u_connected_components(n, a.size(), u, av);
    for (Elem t = 0; t < k; ++t) {
      const NAMap theta = namap::from_index(t, a.size(), nsize);
      const NAMap cst = namap::constant(a.size(), theta[av]);
      if (theta != cst && comp[t] != comp[namap::index(cst, nsize)]) {
        throw ActError(ErrorKind::HypothesisFails,
                       "finitely-generated-N U misses theta #" +
                           std::to_string(t),
                       {t, av});
      }
    }
  }
  return u;
}

}  // namespace actforge
