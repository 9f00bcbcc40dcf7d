#ifndef ACTFORGE_CONGRUENCE_HPP
#define ACTFORGE_CONGRUENCE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "actforge/act.hpp"

namespace actforge {

struct ElemPair {
  Elem first;
  Elem second;
};

// One step of an X-sequence: which seed pair was applied, in which
// direction, and with which multiplier.
struct CertStep {
  std::uint32_t pair_index;
  bool reversed;
  Elem multiplier;
};

struct DerivationCertificate {
  std::vector<CertStep> steps;
};

// A congruence on an act: the partition (contiguous class ids, numbered by
// first occurrence) plus the log of single-application merges it was built
// from.  The log survives union-find path compression so certificates can
// be traced back to seed pairs.
class ActCongruence {
 public:
  struct Merge {
    Elem a;  // a = p.m for the (possibly reversed) seed pair (p, q)
    Elem b;  // b = q.m
    CertStep step;
  };

  ActCongruence(std::size_t act_size, std::vector<std::uint32_t> class_of,
                std::size_t n_classes, std::vector<Merge> merges)
      : act_size_(act_size),
        class_of_(std::move(class_of)),
        n_classes_(n_classes),
        merges_(std::move(merges)) {}

  std::size_t act_size() const noexcept { return act_size_; }
  std::uint32_t class_of(Elem a) const { return class_of_[a]; }
  const std::vector<std::uint32_t>& classes() const noexcept {
    return class_of_;
  }
  std::size_t n_classes() const noexcept { return n_classes_; }
  bool same(Elem a, Elem b) const { return class_of_[a] == class_of_[b]; }
  const std::vector<Merge>& merges() const noexcept { return merges_; }

 private:
  std::size_t act_size_;
  std::vector<std::uint32_t> class_of_;
  std::size_t n_classes_;
  std::vector<Merge> merges_;
};

// Smallest congruence containing `pairs`: the equivalence closure of
// {(p.m, q.m)} over all seed pairs and multipliers, which is already
// action-closed because multipliers absorb products.
ActCongruence congruence_closure(const FiniteAct& a,
                                 std::span<const ElemPair> pairs);

// Shortest X-sequence connecting `from` and `to` (empty when equal), found
// by BFS on the single-application graph; nullopt when unconnected.
std::optional<DerivationCertificate> connect_sequence(
    const FiniteAct& a, std::span<const ElemPair> pairs, Elem from, Elem to);

// Replays a certificate step by step; true iff every step matches and the
// chain ends at `to`.
bool replay_certificate(const FiniteAct& a, std::span<const ElemPair> pairs,
                        Elem from, Elem to, const DerivationCertificate& cert);

struct QuotientAct {
  FiniteAct act;
  std::vector<Elem> projection;  // element -> class id
};

// The factor act A/c.  Throws NotACongruence if `c` is not actually
// action-closed or does not match `a`.
QuotientAct quotient_act(const FiniteAct& a, const ActCongruence& c);

}  // namespace actforge

#endif  // ACTFORGE_CONGRUENCE_HPP
