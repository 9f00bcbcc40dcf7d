#include "actforge/family.hpp"

#include <algorithm>
#include <numeric>

#include "actforge/congruence.hpp"
#include "actforge/error.hpp"

namespace actforge {

MonoidPtr trivial_monoid() {
  return make_monoid_unchecked(1, {0}, 0, {"1"});
}

MonoidPtr cyclic_monoid(unsigned n) {
  if (n == 0) throw ActError(ErrorKind::OutOfRange, "n must be positive");
  std::vector<Elem> table(std::size_t(n) * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  }
  std::vector<std::string> labels(n);
  labels[0] = "1";
  for (Elem a = 1; a < n; ++a) {
    labels[a] = a == 1 ? "g" : "g" + std::to_string(a);
  }
  return make_monoid_unchecked(n, std::move(table), 0, std::move(labels));
}

MonoidPtr semilattice_chain(unsigned n) {
  if (n == 0) throw ActError(ErrorKind::OutOfRange, "n must be positive");
  std::vector<Elem> table(std::size_t(n) * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) table[a * n + b] = std::max(a, b);
  }
  std::vector<std::string> labels(n);
  labels[0] = "1";
  for (Elem a = 1; a < n; ++a) {
    labels[a] = a == 1 && n == 2 ? "z" : "e" + std::to_string(a);
  }
  return make_monoid_unchecked(n, std::move(table), 0, std::move(labels));
}

MonoidPtr left_zero_monoid(unsigned k) {
  const std::size_t n = std::size_t(k) + 1;
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      table[a * n + b] = a == 0 ? b : a;  // 1*x = x, z_i*x = z_i
    }
  }
  std::vector<std::string> labels(n);
  labels[0] = "1";
  for (Elem a = 1; a < n; ++a) labels[a] = "z" + std::to_string(a);
  return make_monoid_unchecked(n, std::move(table), 0, std::move(labels));
}

MonoidPtr symmetric_group(unsigned n) {
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::vector<Elem>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  const std::size_t o = perms.size();
  if (o > size_cap()) {
    throw ActError(ErrorKind::SizeLimit, "n! exceeds the size cap");
  }
  auto index_of = [&](const std::vector<Elem>& p) {
    const auto it = std::lower_bound(perms.begin(), perms.end(), p);
    return static_cast<Elem>(it - perms.begin());
  };
  // same convention as the transformation monoid: apply the left factor
  // first
  std::vector<Elem> table(o * o);
  std::vector<Elem> buf(n);
  for (Elem f = 0; f < o; ++f) {
    for (Elem g = 0; g < o; ++g) {
      for (unsigned i = 0; i < n; ++i) buf[i] = perms[g][perms[f][i]];
      table[f * o + g] = index_of(buf);
    }
  }
  std::vector<std::string> labels(o);
  for (Elem e = 0; e < o; ++e) {
    std::string s = "(";
    for (unsigned i = 0; i < n; ++i) s += std::to_string(perms[e][i]);
    labels[e] = s + ")";
  }
  return make_monoid_unchecked(o, std::move(table), 0, std::move(labels));
}

std::vector<NamedMonoid> standard_family() {
  std::vector<NamedMonoid> f;
  f.push_back({"trivial", trivial_monoid()});
  f.push_back({"Z2", cyclic_monoid(2)});
  f.push_back({"Z3", cyclic_monoid(3)});
  f.push_back({"E2", semilattice_chain(2)});
  f.push_back({"T2", full_transformation_monoid(2)});
  f.push_back({"E2_0", adjoin_zero(semilattice_chain(2))});
  f.push_back({"Z2_0", adjoin_zero(cyclic_monoid(2))});
  f.push_back({"Z2xE2",
               direct_product_monoid(cyclic_monoid(2), semilattice_chain(2))});
  {
    auto z2 = cyclic_monoid(2);
    f.push_back({"U_Z2_Z2", attach_act_monoid(z2, right_regular_act(z2))});
  }
  f.push_back({"S3", symmetric_group(3)});
  return f;
}

std::vector<NamedAct> act_family(const MonoidPtr& m, std::size_t max_size) {
  std::vector<NamedAct> out;
  auto add = [&](const std::string& name, FiniteAct act) {
    if (act.size() > max_size) return;
    for (const auto& existing : out) {
      if (existing.act.size() == act.size() &&
          act_isomorphic(existing.act, act)) {
        return;
      }
    }
    out.push_back({name, std::move(act)});
  };

  add("trivial_act",
      make_act_unchecked(m, 1, std::vector<Elem>(m->order(), 0), {"*"}));
  add("right_regular", right_regular_act(m));
  if (2 * m->order() <= max_size) {
    add("free2", free_act(2, m, {"x", "y"}).act());
  }
  FiniteAct rr = right_regular_act(m);
  for (Elem x = 0; x < m->order(); ++x) {
    if (x == m->identity()) continue;
    const ElemPair seed{m->identity(), x};
    auto c = congruence_closure(rr, std::span<const ElemPair>(&seed, 1));
    add("cyclic_mod_" + m->label(x), quotient_act(rr, c).act);
  }
  return out;
}

}  // namespace actforge
