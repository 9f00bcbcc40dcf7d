#include "actforge/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "actforge/error.hpp"

namespace actforge {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smaller index as root
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

void check_pairs(const FiniteAct& a, std::span<const ElemPair> pairs) {
  for (const auto& p : pairs) {
    if (p.first >= a.size() || p.second >= a.size()) {
      throw ActError(ErrorKind::OutOfRange, "seed pair out of range",
                     {p.first, p.second});
    }
  }
}

}  // namespace

ActCongruence congruence_closure(const FiniteAct& a,
                                 std::span<const ElemPair> pairs) {
  check_pairs(a, pairs);
  UnionFind uf(a.size());
  std::vector<ActCongruence::Merge> merges;
  const std::size_t mo = a.base()->order();
  for (std::uint32_t i = 0; i < pairs.size(); ++i) {
    for (Elem m = 0; m < mo; ++m) {
      const Elem pm = a.act(pairs[i].first, m);
      const Elem qm = a.act(pairs[i].second, m);
      if (uf.unite(pm, qm)) {
        merges.push_back({pm, qm, {i, false, m}});
      }
    }
  }
  std::vector<std::uint32_t> class_of(a.size());
  std::vector<std::uint32_t> renumber(a.size(), UINT32_MAX);
  std::uint32_t next = 0;
  for (Elem x = 0; x < a.size(); ++x) {
    const std::uint32_t r = uf.find(x);
    if (renumber[r] == UINT32_MAX) renumber[r] = next++;
    class_of[x] = renumber[r];
  }
  return ActCongruence(a.size(), std::move(class_of), next, std::move(merges));
}

std::optional<DerivationCertificate> connect_sequence(
    const FiniteAct& a, std::span<const ElemPair> pairs, Elem from, Elem to) {
  check_pairs(a, pairs);
  if (from >= a.size() || to >= a.size()) {
    throw ActError(ErrorKind::OutOfRange, "endpoint out of range", {from, to});
  }
  if (from == to) return DerivationCertificate{};

  // Single-application graph: p.m -- (i, m) --> q.m and back.
  struct Edge {
    Elem target;
    CertStep step;
  };
  std::vector<std::vector<Edge>> adj(a.size());
  const std::size_t mo = a.base()->order();
  for (std::uint32_t i = 0; i < pairs.size(); ++i) {
    for (Elem m = 0; m < mo; ++m) {
      const Elem pm = a.act(pairs[i].first, m);
      const Elem qm = a.act(pairs[i].second, m);
      adj[pm].push_back({qm, {i, false, m}});
      adj[qm].push_back({pm, {i, true, m}});
    }
  }

  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> prev(a.size(), kUnset);
  std::vector<CertStep> how(a.size());
  std::queue<Elem> frontier;
  prev[from] = from;
  frontier.push(from);
  while (!frontier.empty()) {
    const Elem cur = frontier.front();
    frontier.pop();
    if (cur == to) break;
    for (const Edge& e : adj[cur]) {
      if (prev[e.target] == kUnset) {
        prev[e.target] = cur;
        how[e.target] = e.step;
        frontier.push(e.target);
      }
    }
  }
  if (prev[to] == kUnset) return std::nullopt;

  DerivationCertificate cert;
  for (Elem cur = to; cur != from; cur = prev[cur]) {
    cert.steps.push_back(how[cur]);
  }
  std::reverse(cert.steps.begin(), cert.steps.end());
  return cert;
}

bool replay_certificate(const FiniteAct& a, std::span<const ElemPair> pairs,
                        Elem from, Elem to,
                        const DerivationCertificate& cert) {
  Elem cur = from;
  for (const CertStep& s : cert.steps) {
    if (s.pair_index >= pairs.size()) return false;
    Elem p = pairs[s.pair_index].first;
    Elem q = pairs[s.pair_index].second;
    if (s.reversed) std::swap(p, q);
    if (a.act(p, s.multiplier) != cur) return false;
    cur = a.act(q, s.multiplier);
  }
  return cur == to;
}

QuotientAct quotient_act(const FiniteAct& a, const ActCongruence& c) {
  if (c.act_size() != a.size()) {
    throw ActError(ErrorKind::NotACongruence,
                   "congruence does not match the act");
  }
  const std::size_t n = c.n_classes();
  const std::size_t mo = a.base()->order();

  // representative per class (first occurrence)
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> rep(n, kUnset);
  for (Elem x = 0; x < a.size(); ++x) {
    if (rep[c.class_of(x)] == kUnset) rep[c.class_of(x)] = x;
  }
  // defensive: the partition must be action-closed
  for (Elem x = 0; x < a.size(); ++x) {
    const Elem r = rep[c.class_of(x)];
    for (Elem m = 0; m < mo; ++m) {
      if (c.class_of(a.act(x, m)) != c.class_of(a.act(r, m))) {
        throw ActError(ErrorKind::NotACongruence,
                       "partition is not action-closed at a=" +
                           std::to_string(x) + " m=" + std::to_string(m),
                       {x, m});
      }
    }
  }

  std::vector<Elem> action(n * mo);
  std::vector<std::string> labels(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    labels[k] = "[" + a.label(rep[k]) + "]";
    for (Elem m = 0; m < mo; ++m) {
      action[k * mo + m] = c.class_of(a.act(rep[k], m));
    }
  }
  QuotientAct q{make_act_unchecked(a.base(), n, std::move(action),
                                   std::move(labels)),
                {}};
  q.projection.assign(a.size(), 0);
  for (Elem x = 0; x < a.size(); ++x) q.projection[x] = c.class_of(x);
  return q;
}

}  // namespace actforge
