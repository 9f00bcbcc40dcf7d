#include "actforge/act.hpp"

#include <algorithm>
#include <numeric>

#include "actforge/error.hpp"

namespace actforge {

namespace {

void check_shape(const MonoidPtr& base, std::size_t size,
                 const std::vector<Elem>& action,
                 const std::vector<std::string>& labels) {
  if (!base) {
    throw ActError(ErrorKind::BadArgument, "act has no base monoid");
  }
  if (size == 0) {
    throw ActError(ErrorKind::OutOfRange, "an act is a non-empty set");
  }
  if (size > size_cap()) {
    throw ActError(ErrorKind::SizeLimit,
                   "act size " + std::to_string(size) +
                       " exceeds the size cap " + std::to_string(size_cap()));
  }
  if (action.size() != size * base->order()) {
    throw ActError(ErrorKind::OutOfRange,
                   "action table has " + std::to_string(action.size()) +
                       " entries, expected " +
                       std::to_string(size * base->order()));
  }
  for (Elem v : action) {
    if (v >= size) {
      throw ActError(ErrorKind::OutOfRange,
                     "action entry " + std::to_string(v) + " out of range",
                     {v});
    }
  }
  if (!labels.empty() && labels.size() != size) {
    throw ActError(ErrorKind::OutOfRange,
                   "label count does not match the act size");
  }
}

void check_axioms(const FiniteAct& a) {
  const auto& m = *a.base();
  for (Elem x = 0; x < a.size(); ++x) {
    if (a.act(x, m.identity()) != x) {
      throw ActError(ErrorKind::IdentityLawFails,
                     "a.1 != a at a=" + std::to_string(x), {x});
    }
  }
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem p = 0; p < m.order(); ++p) {
      const Elem xp = a.act(x, p);
      for (Elem q = 0; q < m.order(); ++q) {
        if (a.act(x, m.mul(p, q)) != a.act(xp, q)) {
          throw ActError(ErrorKind::AssociativityFails,
                         "a.(mn) != (a.m).n at a=" + std::to_string(x) +
                             " m=" + std::to_string(p) +
                             " n=" + std::to_string(q),
                         {x, p, q});
        }
      }
    }
  }
}

}  // namespace

std::string FiniteAct::label(Elem a) const {
  if (!labels_.empty()) return labels_[a];
  return std::to_string(a);
}

std::vector<Elem> FiniteAct::orbit(Elem a) const {
  std::vector<bool> seen(size_, false);
  std::vector<Elem> out;
  for (Elem m = 0; m < morder_; ++m) {
    const Elem b = act(a, m);
    if (!seen[b]) {
      seen[b] = true;
      out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteAct validate_act(MonoidPtr base, std::size_t size,
                       std::vector<Elem> action,
                       std::vector<std::string> labels) {
  check_shape(base, size, action, labels);
  FiniteAct a(std::move(base), size, std::move(action), std::move(labels));
  check_axioms(a);
  return a;
}

FiniteAct make_act_unchecked(MonoidPtr base, std::size_t size,
                             std::vector<Elem> action,
                             std::vector<std::string> labels) {
  check_shape(base, size, action, labels);
  return FiniteAct(std::move(base), size, std::move(action),
                   std::move(labels));
}

void revalidate(const FiniteAct& a) { check_axioms(a); }

FiniteAct right_regular_act(const MonoidPtr& m) {
  return make_act_unchecked(m, m->order(), m->table(), m->labels());
}

FiniteAct FreeAct::build(std::size_t n_gens, const MonoidPtr& m,
                         const std::vector<std::string>& gen_labels) {
  if (n_gens == 0) {
    throw ActError(ErrorKind::OutOfRange, "a free act needs a generator");
  }
  const std::size_t mo = m->order();
  const std::size_t size = n_gens * mo;
  if (size > size_cap() || size / mo != n_gens) {
    throw ActError(ErrorKind::SizeLimit, "free act size exceeds the size cap");
  }
  std::vector<Elem> action(size * mo);
  for (Elem x = 0; x < n_gens; ++x) {
    for (Elem a = 0; a < mo; ++a) {
      for (Elem n = 0; n < mo; ++n) {
        action[(x * mo + a) * mo + n] =
            static_cast<Elem>(x * mo + m->mul(static_cast<Elem>(a), n));
      }
    }
  }
  std::vector<std::string> labels(size);
  for (Elem x = 0; x < n_gens; ++x) {
    const std::string g =
        gen_labels.empty() ? "x" + std::to_string(x) : gen_labels[x];
    for (Elem a = 0; a < mo; ++a) {
      labels[x * mo + a] = g + "." + m->label(static_cast<Elem>(a));
    }
  }
  return make_act_unchecked(m, size, std::move(action), std::move(labels));
}

FreeAct::FreeAct(std::size_t n_gens, const MonoidPtr& m,
                 std::vector<std::string> gen_labels)
    : n_gens_(n_gens), morder_(m->order()), act_(build(n_gens, m, gen_labels)) {}

std::vector<Elem> FreeAct::basis() const {
  std::vector<Elem> b(n_gens_);
  const Elem one = act_.base()->identity();
  for (Elem x = 0; x < n_gens_; ++x) b[x] = index(x, one);
  return b;
}

FreeAct free_act(std::size_t n_gens, const MonoidPtr& m,
                 std::vector<std::string> gen_labels) {
  return FreeAct(n_gens, m, std::move(gen_labels));
}

bool is_generating_set(const FiniteAct& a, std::span<const Elem> u) {
  if (u.empty()) return false;  // acts are non-empty
  std::vector<bool> hit(a.size(), false);
  std::size_t count = 0;
  const std::size_t mo = a.base()->order();
  for (Elem g : u) {
    for (Elem m = 0; m < mo; ++m) {
      const Elem b = a.act(g, m);
      if (!hit[b]) {
        hit[b] = true;
        ++count;
      }
    }
  }
  return count == a.size();
}

namespace {

// Elements that only decompose as a = a.m must be in every generating set.
std::vector<Elem> necessary_elements(const FiniteAct& a) {
  std::vector<bool> reachable_from_other(a.size(), false);
  const std::size_t mo = a.base()->order();
  for (Elem b = 0; b < a.size(); ++b) {
    for (Elem m = 0; m < mo; ++m) {
      const Elem c = a.act(b, m);
      if (c != b) reachable_from_other[c] = true;
    }
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < a.size(); ++x) {
    if (!reachable_from_other[x]) out.push_back(x);
  }
  return out;
}

// Visits k-subsets of {0..n-1} in lexicographic order.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  std::vector<Elem> idx(k);
  std::iota(idx.begin(), idx.end(), 0u);
  if (k > n) return false;
  while (true) {
    if (f(idx)) return true;
    // advance
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

GeneratingSet minimal_generating_set(const FiniteAct& a,
                                     std::size_t search_cap) {
  const auto necessary = necessary_elements(a);
  if (a.size() <= search_cap) {
    for (std::size_t k = std::max<std::size_t>(necessary.size(), 1);
         k <= a.size(); ++k) {
      GeneratingSet found;
      const bool ok = for_each_combination(
          a.size(), k, [&](const std::vector<Elem>& idx) {
            if (!std::includes(idx.begin(), idx.end(), necessary.begin(),
                               necessary.end())) {
              return false;
            }
            if (is_generating_set(a, idx)) {
              found.elems = idx;
              return true;
            }
            return false;
          });
      if (ok) {
        found.minimal_certified = true;
        return found;
      }
    }
    // unreachable: the full set always generates
  }
  // Greedy cover, not certified minimal.
  GeneratingSet gs;
  gs.elems = necessary;
  std::vector<bool> hit(a.size(), false);
  const std::size_t mo = a.base()->order();
  auto add = [&](Elem g) {
    for (Elem m = 0; m < mo; ++m) hit[a.act(g, m)] = true;
  };
  for (Elem g : gs.elems) add(g);
  while (true) {
    Elem best = 0;
    std::size_t best_gain = 0;
    for (Elem g = 0; g < a.size(); ++g) {
      if (hit[g]) continue;
      std::size_t gain = 0;
      for (Elem m = 0; m < mo; ++m) {
        if (!hit[a.act(g, m)]) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = g;
      }
    }
    if (best_gain == 0) break;
    gs.elems.push_back(best);
    add(best);
  }
  std::sort(gs.elems.begin(), gs.elems.end());
  gs.minimal_certified = false;
  return gs;
}

FiniteAct direct_product_act(const FiniteAct& a, const FiniteAct& b) {
  if (!a.base()->same_table(*b.base())) {
    throw ActError(ErrorKind::BaseMismatch,
                   "direct product needs acts over the same monoid");
  }
  const std::size_t size = a.size() * b.size();
  if (size > size_cap()) {
    throw ActError(ErrorKind::SizeLimit, "product act exceeds the size cap");
  }
  const std::size_t mo = a.base()->order();
  std::vector<Elem> action(size * mo);
  std::vector<std::string> labels(size);
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < b.size(); ++y) {
      const Elem e = static_cast<Elem>(x * b.size() + y);
      labels[e] = "(" + a.label(x) + "," + b.label(y) + ")";
      for (Elem m = 0; m < mo; ++m) {
        action[e * mo + m] =
            static_cast<Elem>(a.act(x, m) * b.size() + b.act(y, m));
      }
    }
  }
  return make_act_unchecked(a.base(), size, std::move(action),
                            std::move(labels));
}

namespace {

std::vector<std::size_t> orbit_size_multiset(const FiniteAct& a) {
  std::vector<std::size_t> sizes(a.size());
  for (Elem x = 0; x < a.size(); ++x) sizes[x] = a.orbit(x).size();
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Backtracking over generator images with incremental propagation: each
// choice immediately fixes the image of the whole orbit, so conflicts
// surface at the level that causes them.
class IsoSearch {
 public:
  IsoSearch(const FiniteAct& a, const FiniteAct& b, std::vector<Elem> gens)
      : a_(a),
        b_(b),
        gens_(std::move(gens)),
        phi_(a.size(), kUnset),
        used_(b.size(), false) {}

  std::optional<std::vector<Elem>> run() {
    if (search(0)) return phi_;
    return std::nullopt;
  }

 private:
  static constexpr Elem kUnset = static_cast<Elem>(-1);

  bool assign_orbit(Elem gen, Elem image, std::vector<Elem>& trail) {
    const std::size_t mo = a_.base()->order();
    for (Elem m = 0; m < mo; ++m) {
      const Elem src = a_.act(gen, m);
      const Elem dst = b_.act(image, m);
      if (phi_[src] != kUnset) {
        if (phi_[src] != dst) return false;
      } else if (used_[dst]) {
        return false;
      } else {
        phi_[src] = dst;
        used_[dst] = true;
        trail.push_back(src);
      }
    }
    return true;
  }

  void undo(const std::vector<Elem>& trail) {
    for (Elem src : trail) {
      used_[phi_[src]] = false;
      phi_[src] = kUnset;
    }
  }

  bool search(std::size_t depth) {
    if (depth == gens_.size()) return true;
    const Elem gen = gens_[depth];
    if (phi_[gen] != kUnset) {
      // already forced by an earlier orbit; check it acts like a generator
      std::vector<Elem> trail;
      const bool ok = assign_orbit(gen, phi_[gen], trail) && search(depth + 1);
      if (!ok) undo(trail);
      return ok;
    }
    const std::size_t orbit = a_.orbit(gen).size();
    for (Elem image = 0; image < b_.size(); ++image) {
      if (used_[image]) continue;
      if (b_.orbit(image).size() != orbit) continue;
      std::vector<Elem> trail;
      if (assign_orbit(gen, image, trail) && search(depth + 1)) return true;
      undo(trail);
    }
    return false;
  }

  const FiniteAct& a_;
  const FiniteAct& b_;
  std::vector<Elem> gens_;
  std::vector<Elem> phi_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Elem>> act_isomorphic(const FiniteAct& a,
                                                const FiniteAct& b) {
  if (!a.base()->same_table(*b.base())) {
    throw ActError(ErrorKind::BaseMismatch,
                   "isomorphism needs acts over the same monoid");
  }
  if (a.size() != b.size()) return std::nullopt;
  if (orbit_size_multiset(a) != orbit_size_multiset(b)) return std::nullopt;

  // Any generating set works; exhaustive minimality is not needed here.
  GeneratingSet gens = minimal_generating_set(a, std::min<std::size_t>(
                                                     a.size(), 12));
  return IsoSearch(a, b, std::move(gens.elems)).run();
}

std::optional<std::vector<Elem>> is_free(const FiniteAct& a,
                                         std::size_t search_cap) {
  if (a.size() > search_cap) {
    throw ActError(ErrorKind::SizeLimit,
                   "freeness scan capped at " + std::to_string(search_cap) +
                       " elements");
  }
  const std::size_t mo = a.base()->order();
  if (a.size() % mo != 0) return std::nullopt;
  const std::size_t k = a.size() / mo;
  std::vector<Elem> counts(a.size());
  std::optional<std::vector<Elem>> basis;
  for_each_combination(a.size(), k, [&](const std::vector<Elem>& idx) {
    std::fill(counts.begin(), counts.end(), 0u);
    for (Elem u : idx) {
      for (Elem m = 0; m < mo; ++m) ++counts[a.act(u, m)];
    }
    if (std::all_of(counts.begin(), counts.end(),
                    [](Elem c) { return c == 1; })) {
      basis = idx;
      return true;
    }
    return false;
  });
  return basis;
}

}  // namespace actforge
