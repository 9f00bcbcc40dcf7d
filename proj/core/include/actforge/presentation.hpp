#ifndef ACTFORGE_PRESENTATION_HPP
#define ACTFORGE_PRESENTATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "actforge/act.hpp"
#include "actforge/congruence.hpp"

namespace actforge {

// An element x.m of a free act: generator index plus monoid element.
struct FreeActElem {
  Elem gen;
  Elem elem;

  friend bool operator==(const FreeActElem&, const FreeActElem&) = default;
};

struct ActRelation {
  FreeActElem lhs;
  FreeActElem rhs;

  friend bool operator==(const ActRelation&, const ActRelation&) = default;
};

// Generator labels carry a structured key (element indices, pair or tuple
// payloads) so downstream constructions can address composite generators
// without string parsing.
struct GenLabel {
  std::string text;
  std::vector<Elem> key;
};

// An act presentation <X | R> over the free act X x M.
class ActPresentation {
 public:
  ActPresentation(MonoidPtr monoid, std::vector<GenLabel> gens,
                  std::vector<ActRelation> relations);

  const MonoidPtr& monoid() const noexcept { return monoid_; }
  const std::vector<GenLabel>& gens() const noexcept { return gens_; }
  const std::vector<ActRelation>& relations() const noexcept {
    return relations_;
  }
  std::size_t n_gens() const noexcept { return gens_.size(); }

  ActPresentation with_relations(std::vector<ActRelation> relations) const {
    return ActPresentation(monoid_, gens_, std::move(relations));
  }

  std::string describe_elem(const FreeActElem& w) const;

 private:
  MonoidPtr monoid_;
  std::vector<GenLabel> gens_;
  std::vector<ActRelation> relations_;
};

// R together with its reversal, duplicates removed; each entry remembers
// the index it came from.
struct SymRelation {
  ActRelation rel;
  std::uint32_t source_index;
  bool reversed;
};
std::vector<SymRelation> symmetrize(std::span<const ActRelation> relations);

// Every side of every relation: the left components of symmetrize(R).
std::vector<FreeActElem> relation_sides(std::span<const ActRelation> relations);

struct DefinedAct {
  FreeAct free;
  ActCongruence closure;
  QuotientAct quotient;
  // evaluation of a free-act element into the quotient
  Elem eval(const FreeActElem& w) const {
    return quotient.projection[free.index(w.gen, w.elem)];
  }
  // images of the basis X x {1}: the canonical generating assignment
  std::vector<Elem> basis_assign() const;
};

// Builds the act the presentation defines: F_X / closure(R).
DefinedAct defined_act(const ActPresentation& p);

// Whether A satisfies every relation under the assignment X -> A.
bool satisfies(const FiniteAct& a, std::span<const Elem> assign,
               std::span<const ActRelation> relations);

// A replayable R-sequence connecting w1 and w2, empty when they are equal
// in the free act; nullopt when w1 = w2 is not a consequence of R.
std::optional<DerivationCertificate> is_consequence(const ActPresentation& p,
                                                    const FreeActElem& w1,
                                                    const FreeActElem& w2);

bool replay_certificate(const ActPresentation& p, const FreeActElem& w1,
                        const FreeActElem& w2,
                        const DerivationCertificate& cert);

enum class VerifyFailure { None, NotSurjective, Unsatisfied, KernelGap };

// Outcome of the presentation oracle: surjectivity, satisfaction, and
// kernel-vs-closure class equality on the free act.
struct VerifyResult {
  bool ok = false;
  VerifyFailure failure = VerifyFailure::None;
  std::uint32_t relation_index = 0;      // set for Unsatisfied
  FreeActElem witness_lhs{0, 0};         // set for KernelGap
  FreeActElem witness_rhs{0, 0};
  std::size_t closure_classes = 0;
  std::size_t kernel_classes = 0;

  explicit operator bool() const { return ok; }
  std::string describe(const ActPresentation& p) const;
};

// The oracle of record: <X | R> presents A under `assign` iff the extension
// of `assign` is onto A, A satisfies R, and closure(R) equals the kernel of
// evaluation on the free act.
VerifyResult is_presentation_of(const ActPresentation& p, const FiniteAct& a,
                                std::span<const Elem> assign);

struct PresentationWithAssign {
  ActPresentation pres;
  std::vector<Elem> assign;
};

// <A | a.x = (ax).1 for a in A, x in Xm> where Xm generates the monoid.
PresentationWithAssign canonical_presentation(const FiniteAct& a,
                                              std::span<const Elem> monoid_gens);

// Presents A on a chosen generating set by spanning the kernel congruence
// of the evaluation F_U -> A with one relation per non-representative
// element.  Verifies by construction.
PresentationWithAssign presentation_on_generators(const FiniteAct& a,
                                                  std::span<const Elem> gens);

// Same construction with caller-supplied generator labels (used when the
// generators carry composite keys); `values` are the generator images in A.
PresentationWithAssign kernel_presentation(const FiniteAct& a,
                                           std::vector<GenLabel> gens,
                                           std::vector<Elem> values);

// Greedily drops relations (descending index) while the presentation still
// verifies; the result is irredundant.  Throws NotAPresentation if the
// input does not verify.
ActPresentation reduce_presentation(const ActPresentation& p,
                                    const FiniteAct& a,
                                    std::span<const Elem> assign);

// Throws VerificationFailed (with the kernel-vs-closure witness) when a
// constructed presentation fails the oracle.
void require_presents(const ActPresentation& p, const FiniteAct& a,
                      std::span<const Elem> assign, const char* context);

// Throws NotAPresentation when an input presentation fails the oracle.
void require_presents_input(const ActPresentation& p, const FiniteAct& a,
                            std::span<const Elem> assign, const char* context);

}  // namespace actforge

#endif  // ACTFORGE_PRESENTATION_HPP
