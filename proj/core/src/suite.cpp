#include "actforge/suite.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "actforge/diagonal.hpp"
#include "actforge/direct_product.hpp"
#include "actforge/error.hpp"
#include "actforge/family.hpp"
#include "actforge/presentation.hpp"
#include "actforge/wreath.hpp"

namespace actforge {

std::vector<std::uint32_t> canonical_partition(
    std::span<const std::uint32_t> class_of) {
  std::vector<std::uint32_t> renumber;
  std::vector<std::uint32_t> out(class_of.size());
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> seen;
  for (std::size_t i = 0; i < class_of.size(); ++i) {
    const std::uint32_t c = class_of[i];
    if (c >= seen.size()) seen.resize(c + 1, kUnset);
    if (seen[c] == kUnset) {
      seen[c] = static_cast<std::uint32_t>(renumber.size());
      renumber.push_back(seen[c]);
    }
    out[i] = seen[c];
  }
  return out;
}

std::vector<std::uint32_t> naive_closure_partition(
    const FiniteAct& a, std::span<const ElemPair> pairs) {
  const std::size_t n = a.size();
  const std::size_t mo = a.base()->order();
  std::vector<char> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (const auto& p : pairs) rel[p.first * n + p.second] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!rel[x * n + y]) continue;
        if (!rel[y * n + x]) {
          rel[y * n + x] = 1;
          changed = true;
        }
        for (std::size_t z = 0; z < n; ++z) {
          if (rel[y * n + z] && !rel[x * n + z]) {
            rel[x * n + z] = 1;
            changed = true;
          }
        }
        for (Elem m = 0; m < mo; ++m) {
          const Elem xm = a.act(static_cast<Elem>(x), m);
          const Elem ym = a.act(static_cast<Elem>(y), m);
          if (!rel[xm * n + ym]) {
            rel[xm * n + ym] = 1;
            changed = true;
          }
        }
      }
    }
  }
  std::vector<std::uint32_t> class_of(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rep = x;
    for (std::size_t y = 0; y < n; ++y) {
      if (rel[x * n + y]) {
        rep = y;
        break;
      }
    }
    class_of[x] = static_cast<std::uint32_t>(rep);
  }
  return canonical_partition(class_of);
}

namespace {

using Clock = std::chrono::steady_clock;

struct WreathInstance {
  std::string label;
  WreathMonoid w;
  FiniteAct b;
  WreathPresentation wp;
};

struct SuiteState {
  SuiteOptions opts;
  std::vector<NamedMonoid> family = standard_family();
  std::vector<std::vector<Elem>> square;  // per family monoid
  std::vector<WreathInstance> wreath_instances;

  SuiteState(const SuiteOptions& o) : opts(o) {
    for (const auto& nm : family) {
      square.push_back(square_generating_set(nm.monoid));
    }
  }
};

std::string count_detail(std::size_t instances, std::size_t failures) {
  std::ostringstream os;
  os << instances << " instances, " << failures << " failures";
  return os.str();
}

// -- criterion 1: union-find closure equals the naive fixpoint oracle -----

CriterionResult criterion_closure_oracle(SuiteState& st) {
  CriterionResult res{1, "congruence-closure oracle equivalence", false, "",
                      0.0, 5.0};
  std::size_t checks = 0, failures = 0;
  for (std::size_t mi = 0; mi < st.family.size(); ++mi) {
    const auto acts = act_family(st.family[mi].monoid, 6);
    for (std::size_t ai = 0; ai < acts.size(); ++ai) {
      const FiniteAct& act = acts[ai].act;
      std::mt19937_64 rng(st.opts.seed ^ (mi * 1000003ULL + ai * 10007ULL));
      for (int iter = 0; iter < 100; ++iter) {
        const std::size_t k = rng() % 6;
        std::vector<ElemPair> pairs;
        for (std::size_t i = 0; i < k; ++i) {
          pairs.push_back({static_cast<Elem>(rng() % act.size()),
                           static_cast<Elem>(rng() % act.size())});
        }
        const auto fast =
            canonical_partition(congruence_closure(act, pairs).classes());
        const auto slow = naive_closure_partition(act, pairs);
        ++checks;
        if (fast != slow) ++failures;
      }
    }
  }
  res.pass = failures == 0;
  res.detail = count_detail(checks, failures);
  return res;
}

// -- criterion 2: every certificate replays --------------------------------

CriterionResult criterion_certificates(SuiteState& st) {
  CriterionResult res{2, "certificate soundness", false, "", 0.0, 0.0};
  std::size_t checks = 0, failures = 0;

  // X-sequence certificates across closure instances
  for (std::size_t mi = 0; mi < st.family.size(); ++mi) {
    const auto acts = act_family(st.family[mi].monoid, 6);
    for (std::size_t ai = 0; ai < acts.size(); ++ai) {
      const FiniteAct& act = acts[ai].act;
      std::mt19937_64 rng(st.opts.seed ^ (0xC2ULL + mi * 131 + ai));
      for (int iter = 0; iter < 3; ++iter) {
        std::vector<ElemPair> pairs;
        const std::size_t k = 1 + rng() % 3;
        for (std::size_t i = 0; i < k; ++i) {
          pairs.push_back({static_cast<Elem>(rng() % act.size()),
                           static_cast<Elem>(rng() % act.size())});
        }
        const auto closure = congruence_closure(act, pairs);
        for (Elem x = 0; x < act.size(); ++x) {
          for (Elem y = 0; y < act.size(); ++y) {
            const auto cert = connect_sequence(act, pairs, x, y);
            ++checks;
            if (closure.same(x, y)) {
              if (!cert || !replay_certificate(act, pairs, x, y, *cert)) {
                ++failures;
              }
            } else if (cert) {
              ++failures;
            }
          }
        }
      }
    }
  }

  // R-sequence certificates through a presentation
  {
    const auto z2 = cyclic_monoid(2);
    const FiniteAct rr = right_regular_act(z2);
    const std::vector<Elem> all{0, 1};
    const auto can = canonical_presentation(rr, all);
    const DefinedAct da = defined_act(can.pres);
    for (Elem g1 = 0; g1 < can.pres.n_gens(); ++g1) {
      for (Elem m1 = 0; m1 < z2->order(); ++m1) {
        for (Elem g2 = 0; g2 < can.pres.n_gens(); ++g2) {
          for (Elem m2 = 0; m2 < z2->order(); ++m2) {
            const FreeActElem w1{g1, m1}, w2{g2, m2};
            const auto cert = is_consequence(can.pres, w1, w2);
            const bool same = da.eval(w1) == da.eval(w2);
            ++checks;
            if (same != cert.has_value() ||
                (cert && !replay_certificate(can.pres, w1, w2, *cert))) {
              ++failures;
            }
          }
        }
      }
    }
  }

  // connectedness certificates (left-zero and finitely-generated schemes)
  {
    const auto z2 = cyclic_monoid(2);
    const auto e2 = semilattice_chain(2);
    const FiniteAct a = right_regular_act(z2);
    const std::vector<Elem> x{0};

    const auto u_lz = left_zero_u(a, std::vector<Elem>{0, 1}, e2, 1);
    const auto u_fg = finite_a_fg_n_u(a, z2, std::vector<Elem>{1});
    struct Case {
      MonoidPtr n;
      const std::vector<NAMap>* u;
    };
    const Case cases[] = {{e2, &u_lz}, {z2, &u_fg}};
    for (const auto& c : cases) {
      const std::size_t total = c.n->order() * c.n->order();  // |N|^|A|, |A| = 2
      for (Elem t = 0; t < total; ++t) {
        const NAMap theta = namap::from_index(t, a.size(), c.n->order());
        for (Elem av = 0; av < a.size(); ++av) {
          const NAMap cst = namap::constant(a.size(), theta[av]);
          const auto cert =
              is_u_connected(c.n, a.size(), theta, cst, *c.u, av);
          ++checks;
          if (!cert ||
              !replay_connectedness(c.n, av, theta, cst, *c.u, *cert)) {
            ++failures;
          }
        }
      }
    }
  }

  res.pass = failures == 0;
  res.detail = count_detail(checks, failures);
  return res;
}

// -- criterion 3: Z = XU x YV generates A x B ------------------------------

CriterionResult criterion_dp_generators(SuiteState& st) {
  CriterionResult res{3, "direct-product generating sets", false, "", 0.0,
                      10.0};
  std::size_t checks = 0, failures = 0;
  for (std::size_t mi = 0; mi < st.family.size(); ++mi) {
    const MonoidPtr& m = st.family[mi].monoid;
    const auto acts = act_family(m, 3);
    std::vector<Elem> all(m->order());
    for (Elem e = 0; e < m->order(); ++e) all[e] = e;
    const std::vector<std::vector<Elem>> uv{st.square[mi], all};
    for (const auto& na : acts) {
      for (const auto& nb : acts) {
        std::vector<Elem> whole_a(na.act.size()), whole_b(nb.act.size());
        for (Elem e = 0; e < na.act.size(); ++e) whole_a[e] = e;
        for (Elem e = 0; e < nb.act.size(); ++e) whole_b[e] = e;
        const std::vector<std::vector<Elem>> xs{
            minimal_generating_set(na.act).elems, whole_a};
        const std::vector<std::vector<Elem>> ys{
            minimal_generating_set(nb.act).elems, whole_b};
        for (const auto& x : xs) {
          for (const auto& y : ys) {
            for (const auto& u : uv) {
              for (const auto& v : uv) {
                ++checks;
                try {
                  dp_generating_set(na.act, x, nb.act, y, u, v);
                } catch (const ActError&) {
                  ++failures;
                }
              }
            }
          }
        }
      }
    }
  }
  res.pass = failures == 0;
  res.detail = count_detail(checks, failures);
  return res;
}

// -- criterion 4: the direct-product presentation verifies -----------------

CriterionResult criterion_dp_presentation(SuiteState& st) {
  CriterionResult res{4, "direct-product presentation (kernel equality)",
                      false, "", 0.0, 60.0};
  std::size_t checks = 0, failures = 0, skipped = 0;
  for (std::size_t mi = 0; mi < st.family.size(); ++mi) {
    const MonoidPtr& m = st.family[mi].monoid;
    const auto& u = st.square[mi];
    const auto acts = act_family(m, 3);
    const auto p_diag_full = diagonal_uv_presentation(m, u, u);
    const auto p_diag = reduce_presentation(
        p_diag_full.pres, diagonal_act(m).act, p_diag_full.assign);
    for (const auto& na : acts) {
      for (const auto& nb : acts) {
        const auto x = minimal_generating_set(na.act).elems;
        const auto y = minimal_generating_set(nb.act).elems;
        try {
          const DpSetup setup = dp_setup(na.act, x, nb.act, y, u, u);
          if (setup.xu.size() * setup.yv.size() * m->order() > 2000) {
            ++skipped;
            continue;
          }
          const auto pa_full = presentation_on_generators(na.act, x);
          const auto pa =
              reduce_presentation(pa_full.pres, na.act, pa_full.assign);
          const auto pb_full = presentation_on_generators(nb.act, y);
          const auto pb =
              reduce_presentation(pb_full.pres, nb.act, pb_full.assign);
          ++checks;
          dp_presentation(setup, pa, pb, p_diag);
        } catch (const ActError& e) {
          if (e.kind() == ErrorKind::SizeLimit) {
            ++skipped;
          } else {
            ++failures;
          }
        }
      }
    }
  }
  res.pass = failures == 0;
  res.detail = count_detail(checks, failures) + ", " +
               std::to_string(skipped) + " over cap";
  return res;
}

// -- criterion 5: the decomposition identity -------------------------------

CriterionResult criterion_crucial_identity(SuiteState& st) {
  CriterionResult res{5, "decomposition identity", false, "", 0.0, 1.0};
  std::size_t checks = 0, failures = 0;
  for (std::size_t mi = 0; mi < st.family.size(); ++mi) {
    const MonoidPtr& m = st.family[mi].monoid;
    std::vector<Elem> all(m->order());
    for (Elem e = 0; e < m->order(); ++e) all[e] = e;
    const std::vector<std::vector<Elem>> uv{st.square[mi], all};
    for (const auto& u : uv) {
      for (const auto& v : uv) {
        ++checks;
        const auto dec = DiagonalDecomposition::build(m, u, v);
        if (!crucial_identity_check(m, dec)) ++failures;
      }
    }
  }
  res.pass = failures == 0;
  res.detail = count_detail(checks, failures);
  return res;
}

// -- criterion 6: wreath generators and presentation verify ----------------

CriterionResult criterion_wreath(SuiteState& st) {
  CriterionResult res{6, "wreath generating sets and presentation", false, "",
                      0.0, 60.0};
  std::size_t checks = 0, failures = 0, skipped = 0;
  for (std::size_t mi = 0; mi < st.family.size(); ++mi) {
    const MonoidPtr& m = st.family[mi].monoid;
    const auto m_acts = act_family(m, 3);
    for (std::size_t ni = 0; ni < st.family.size(); ++ni) {
      const MonoidPtr& n = st.family[ni].monoid;
      const auto n_acts = act_family(n, 3);
      for (const auto& na : m_acts) {
        // |W| = |M| * |N|^|A| <= 64
        double w_order = m->order();
        for (std::size_t i = 0; i < na.act.size(); ++i) w_order *= n->order();
        if (w_order > 64) {
          ++skipped;
          continue;
        }
        const WreathMonoid w = wreath_monoid(m, n, na.act);
        const auto x = minimal_generating_set(na.act).elems;
        for (const auto& nb : n_acts) {
          const auto y = minimal_generating_set(nb.act).elems;
          if (x.size() * y.size() * w.monoid()->order() > 2000) {
            ++skipped;
            continue;
          }
          try {
            ++checks;
            wreath_generating_set(w, nb.act, x, y);
            const auto pa_full = presentation_on_generators(na.act, x);
            const auto pa =
                reduce_presentation(pa_full.pres, na.act, pa_full.assign);
            const auto pb_full = presentation_on_generators(nb.act, y);
            const auto pb =
                reduce_presentation(pb_full.pres, nb.act, pb_full.assign);
            WreathPresentation wp =
                wreath_presentation(w, nb.act, pa, x, pb, y);
            st.wreath_instances.push_back(
                {st.family[mi].name + "/" + na.name + " wr " +
                     st.family[ni].name + "/" + nb.name,
                 w, nb.act, std::move(wp)});
          } catch (const ActError& e) {
            if (e.kind() == ErrorKind::SizeLimit) {
              ++skipped;
            } else {
              ++failures;
            }
          }
        }
      }
    }
  }
  res.pass = failures == 0;
  res.detail = count_detail(checks, failures) + ", " +
               std::to_string(skipped) + " over cap";
  return res;
}

// -- criterion 7: T1 reduction under the connectedness hypothesis ----------

CriterionResult criterion_reduce_t1(SuiteState&) {
  CriterionResult res{7, "T1 reduction (left zero / finitely generated N)",
                      false, "", 0.0, 30.0};
  std::size_t checks = 0, failures = 0;
  const auto z2 = cyclic_monoid(2);
  const auto z3 = cyclic_monoid(3);
  const auto e2 = semilattice_chain(2);
  const auto e2z = adjoin_zero(e2);
  const auto lz2 = left_zero_monoid(2);

  struct Case {
    std::string label;
    MonoidPtr m;
    FiniteAct a;
    MonoidPtr n;
    FiniteAct b;
    bool left_zero;   // else: finitely generated scheme
    Elem z_or_unused;
    std::vector<Elem> xn;
  };
  std::vector<Case> cases;
  cases.push_back({"Z2 wr E2, left zero", z2, right_regular_act(z2), e2,
                   right_regular_act(e2), true, 1, {}});
  cases.push_back({"Z2 wr E2^0, left zero", z2, right_regular_act(z2), e2z,
                   right_regular_act(e2z), true, 2, {}});
  cases.push_back({"E2 wr LZ2, left zero", e2, right_regular_act(e2), lz2,
                   right_regular_act(lz2), true, 1, {}});
  cases.push_back({"Z2 wr Z2, fg", z2, right_regular_act(z2), z2,
                   right_regular_act(z2), false, 0, {1}});
  cases.push_back({"Z2 wr Z3, fg", z2, right_regular_act(z2), z3,
                   right_regular_act(z3), false, 0, {1}});

  for (const auto& c : cases) {
    try {
      ++checks;
      const WreathMonoid w = wreath_monoid(c.m, c.n, c.a);
      const auto x = minimal_generating_set(c.a).elems;
      const auto y = minimal_generating_set(c.b).elems;
      const auto pa_full = presentation_on_generators(c.a, x);
      const auto pa = reduce_presentation(pa_full.pres, c.a, pa_full.assign);
      const auto pb_full = presentation_on_generators(c.b, y);
      const auto pb = reduce_presentation(pb_full.pres, c.b, pb_full.assign);
      const WreathPresentation wp =
          wreath_presentation(w, c.b, pa, x, pb, y);
      const std::vector<NAMap> u =
          c.left_zero ? left_zero_u(c.a, x, c.n, c.z_or_unused)
                      : finite_a_fg_n_u(c.a, c.n, c.xn);
      const WreathPresentation reduced = reduce_t1(w, c.b, wp, u);
      if (w.n_maps() > u.size() && reduced.t1_count >= wp.t1_count) {
        ++failures;
      }
    } catch (const ActError&) {
      ++failures;
    }
  }
  res.pass = failures == 0;
  res.detail = count_detail(checks, failures);
  return res;
}

// -- criterion 8: the diagonal-act constructions ----------------------------

CriterionResult criterion_diagonal(SuiteState& st) {
  CriterionResult res{8, "diagonal-act constructions", false, "", 0.0, 60.0};
  std::size_t checks = 0, failures = 0;
  auto attempt = [&](auto&& fn) {
    ++checks;
    try {
      fn();
    } catch (const ActError&) {
      ++failures;
    }
  };

  // zero-extension generators and the cardinality formula
  for (std::size_t mi = 0; mi < st.family.size(); ++mi) {
    const MonoidPtr& m = st.family[mi].monoid;
    const auto& u = st.square[mi];
    attempt([&] {
      const auto z = zero_extension_generators(m, u);
      if (z.gens.size() != (u.size() + 1) * (u.size() + 1) - 1) {
        throw ActError(ErrorKind::VerificationFailed, "cardinality formula");
      }
    });
  }

  // product diagonal generators, both directions, over all family pairs
  for (std::size_t mi = 0; mi < st.family.size(); ++mi) {
    for (std::size_t ni = 0; ni < st.family.size(); ++ni) {
      const MonoidPtr& m = st.family[mi].monoid;
      const MonoidPtr& n = st.family[ni].monoid;
      const std::size_t d = m->order() * n->order();
      if (d * d > 2000) continue;
      attempt([&] {
        const auto gens =
            product_diagonal_generators(m, n, st.square[mi], st.square[ni]);
        project_diagonal_generators(m, n, gens, true);
        project_diagonal_generators(m, n, gens, false);
      });
    }
  }

  const auto z2 = cyclic_monoid(2);
  const auto e2 = semilattice_chain(2);
  const auto triv = trivial_monoid();

  // ideal restriction: U(N, A) with its copy of N, and {1} inside E2
  {
    struct AttachCase {
      MonoidPtr n;
      FiniteAct a;
    };
    const AttachCase cases[] = {
        {triv, make_act_unchecked(triv, 1, {0}, {"a"})},
        {z2, right_regular_act(z2)},
        {e2, right_regular_act(e2)},
        {z2, make_act_unchecked(z2, 1, {0, 0}, {"a"})},
    };
    for (const auto& c : cases) {
      attempt([&] {
        const MonoidPtr big = attach_act_monoid(c.n, c.a);
        const auto u = square_generating_set(big);
        const auto p = diagonal_square_presentation(big, u);
        std::vector<Elem> n_elems(c.n->order());
        for (Elem e = 0; e < c.n->order(); ++e) n_elems[e] = e;
        restrict_presentation_to_submonoid(p.pres, p.assign, n_elems, u);
      });
    }
    attempt([&] {
      const auto u = square_generating_set(e2);
      const auto p = diagonal_square_presentation(e2, u);
      restrict_presentation_to_submonoid(p.pres, p.assign,
                                         std::vector<Elem>{0}, u);
    });
  }

  // zero extension of the diagonal presentation, with the count formula
  for (const MonoidPtr& m : {triv, z2, e2}) {
    attempt([&] {
      const auto u = square_generating_set(m);
      const auto pd_full = diagonal_square_presentation(m, u);
      const auto pd = reduce_presentation(pd_full.pres, diagonal_act(m).act,
                                          pd_full.assign);
      const FiniteAct rr = right_regular_act(m);
      const auto pm_full = presentation_on_generators(rr, u);
      const auto pm = reduce_presentation(pm_full.pres, rr, pm_full.assign);
      const auto z = zero_extension_presentation(m, pd, pm, u);
      const std::size_t zs = z.z.size();
      if (z.pres.pres.relations().size() !=
          pd.relations().size() + 2 * pm.relations().size() + zs * zs) {
        throw ActError(ErrorKind::VerificationFailed, "count formula");
      }
    });
  }

  // product diagonal presentations and their factor extractions
  {
    const std::pair<MonoidPtr, MonoidPtr> pairs[] = {
        {triv, triv}, {triv, z2}, {z2, z2}, {z2, e2}, {e2, e2}};
    for (const auto& [m, n] : pairs) {
      attempt([&] {
        const auto u = square_generating_set(m);
        const auto v = square_generating_set(n);
        const auto pm_full = diagonal_square_presentation(m, u);
        const auto pm = reduce_presentation(pm_full.pres,
                                            diagonal_act(m).act,
                                            pm_full.assign);
        const auto pn_full = diagonal_square_presentation(n, v);
        const auto pn = reduce_presentation(pn_full.pres,
                                            diagonal_act(n).act,
                                            pn_full.assign);
        const auto prod = product_diagonal_presentation(m, n, pm, u, pn, v);
        const std::size_t expected_t1 =
            pm.relations().size() * v.size() * v.size() * n->order();
        if (prod.t1_count != expected_t1) {
          throw ActError(ErrorKind::VerificationFailed, "T1 count");
        }
        product_diagonal_factor_presentation(m, n, prod.pres.pres,
                                             prod.pres.assign, true);
        product_diagonal_factor_presentation(m, n, prod.pres.pres,
                                             prod.pres.assign, false);
      });
    }
  }

  // attach generators and the factor presentation
  {
    struct AttachCase {
      MonoidPtr m;
      FiniteAct a;
    };
    const AttachCase cases[] = {
        {triv, make_act_unchecked(triv, 1, {0}, {"a"})},
        {z2, right_regular_act(z2)},
        {e2, right_regular_act(e2)},
        {z2, make_act_unchecked(z2, 1, {0, 0}, {"a"})},
    };
    for (const auto& c : cases) {
      attempt([&] {
        auto u = square_generating_set(c.m);
        if (std::find(u.begin(), u.end(), c.m->identity()) == u.end()) {
          u.push_back(c.m->identity());
          std::sort(u.begin(), u.end());
        }
        const auto x = minimal_generating_set(c.a).elems;
        const auto att = attach_act_generators(c.m, c.a, x, u);
        attach_act_project_generators(c.m, c.a, att.v);
        const auto p_full = diagonal_square_presentation(att.u_monoid, att.v);
        const auto p = reduce_presentation(
            p_full.pres, diagonal_act(att.u_monoid).act, p_full.assign);
        attach_act_factor_presentation(c.m, c.a, p, p_full.assign, x, u);
      });
    }
  }

  res.pass = failures == 0;
  res.detail = count_detail(checks, failures);
  return res;
}

// -- criterion 9: {1} x M sits inside every generating set ------------------

CriterionResult criterion_example31(SuiteState&) {
  CriterionResult res{9, "{1} x M inside every diagonal generating set",
                      false, "", 0.0, 0.0};
  std::size_t checks = 0, failures = 0;
  for (const MonoidPtr& m : {semilattice_chain(2), semilattice_chain(3)}) {
    const DiagonalAct d = diagonal_act(m);
    std::vector<Elem> must;
    for (Elem e = 0; e < m->order(); ++e) {
      must.push_back(d.index(m->identity(), e));
    }
    const std::size_t n = d.act.size();
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
      std::vector<Elem> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1ULL << i)) subset.push_back(static_cast<Elem>(i));
      }
      if (!is_generating_set(d.act, subset)) continue;
      ++checks;
      for (Elem e : must) {
        if (!std::binary_search(subset.begin(), subset.end(), e)) {
          ++failures;
          break;
        }
      }
    }
  }
  res.pass = failures == 0;
  res.detail = count_detail(checks, failures);
  return res;
}

// -- criterion 10: factor presentations of every verified wreath instance ---

CriterionResult criterion_wreath_factors(SuiteState& st) {
  CriterionResult res{10, "wreath factor presentations", false, "", 0.0, 0.0};
  std::size_t checks = 0, failures = 0;
  for (const auto& inst : st.wreath_instances) {
    ++checks;
    try {
      wreath_factor_presentations(inst.w, inst.b, inst.wp.pres.pres,
                                  inst.wp.x, inst.wp.y);
    } catch (const ActError&) {
      ++failures;
    }
  }
  res.pass = failures == 0;
  res.detail = count_detail(checks, failures);
  return res;
}

// -- criterion 11: reduction output verifies and is irredundant -------------

CriterionResult criterion_reduce(SuiteState& st) {
  CriterionResult res{11, "relation-set reduction", false, "", 0.0, 0.0};
  std::size_t checks = 0, failures = 0;
  for (std::size_t mi = 0; mi < st.family.size(); ++mi) {
    const MonoidPtr& m = st.family[mi].monoid;
    std::vector<Elem> all(m->order());
    for (Elem e = 0; e < m->order(); ++e) all[e] = e;
    for (const auto& na : act_family(m, 3)) {
      ++checks;
      try {
        const auto can = canonical_presentation(na.act, all);
        const auto reduced =
            reduce_presentation(can.pres, na.act, can.assign);
        if (!is_presentation_of(reduced, na.act, can.assign)) {
          ++failures;
          continue;
        }
        // irredundance: removing any single relation must break it
        const auto& rels = reduced.relations();
        for (std::size_t i = 0; i < rels.size(); ++i) {
          std::vector<ActRelation> probe;
          for (std::size_t j = 0; j < rels.size(); ++j) {
            if (j != i) probe.push_back(rels[j]);
          }
          if (is_presentation_of(reduced.with_relations(probe), na.act,
                                 can.assign)) {
            ++failures;
            break;
          }
        }
      } catch (const ActError&) {
        ++failures;
      }
    }
  }
  res.pass = failures == 0;
  res.detail = count_detail(checks, failures);
  return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opts) {
  SuiteState st(opts);
  std::vector<CriterionResult (*)(SuiteState&)> criteria = {
      &criterion_closure_oracle, &criterion_certificates,
      &criterion_dp_generators,  &criterion_dp_presentation,
      &criterion_crucial_identity, &criterion_wreath,
      &criterion_reduce_t1,      &criterion_diagonal,
      &criterion_example31,      &criterion_wreath_factors,
      &criterion_reduce};
  std::vector<CriterionResult> results;
  for (auto* fn : criteria) {
    const auto start = Clock::now();
    CriterionResult r = fn(st);
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
      r.pass = false;
      r.detail += " (over the " + std::to_string(r.limit_seconds) +
                  "s budget)";
    }
    results.push_back(std::move(r));
  }
  std::sort(results.begin(), results.end(),
            [](const CriterionResult& a, const CriterionResult& b) {
              return a.id < b.id;
            });
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

}  // namespace actforge
