#include "actforge/presentation.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "actforge/error.hpp"

namespace actforge {

ActPresentation::ActPresentation(MonoidPtr monoid, std::vector<GenLabel> gens,
                                 std::vector<ActRelation> relations)
    : monoid_(std::move(monoid)),
      gens_(std::move(gens)),
      relations_(std::move(relations)) {
  if (!monoid_) {
    throw ActError(ErrorKind::BadArgument, "presentation has no monoid");
  }
  if (gens_.empty()) {
    throw ActError(ErrorKind::OutOfRange,
                   "a presentation needs at least one generator");
  }
  const std::size_t mo = monoid_->order();
  for (const auto& r : relations_) {
    for (const FreeActElem& w : {r.lhs, r.rhs}) {
      if (w.gen >= gens_.size() || w.elem >= mo) {
        throw ActError(ErrorKind::OutOfRange, "relation side out of range",
                       {w.gen, w.elem});
      }
    }
  }
}

std::string ActPresentation::describe_elem(const FreeActElem& w) const {
  return gens_[w.gen].text + "." + monoid_->label(w.elem);
}

std::vector<SymRelation> symmetrize(std::span<const ActRelation> relations) {
  std::vector<SymRelation> out;
  auto seen = [&out](const ActRelation& r) {
    return std::any_of(out.begin(), out.end(),
                       [&r](const SymRelation& s) { return s.rel == r; });
  };
  for (std::uint32_t i = 0; i < relations.size(); ++i) {
    if (!seen(relations[i])) out.push_back({relations[i], i, false});
  }
  for (std::uint32_t i = 0; i < relations.size(); ++i) {
    const ActRelation rev{relations[i].rhs, relations[i].lhs};
    if (!seen(rev)) out.push_back({rev, i, true});
  }
  return out;
}

std::vector<FreeActElem> relation_sides(
    std::span<const ActRelation> relations) {
  std::vector<FreeActElem> out;
  for (const SymRelation& s : symmetrize(relations)) out.push_back(s.rel.lhs);
  return out;
}

namespace {

std::vector<ElemPair> relation_pairs(const ActPresentation& p,
                                     const FreeAct& f) {
  std::vector<ElemPair> pairs;
  pairs.reserve(p.relations().size());
  for (const auto& r : p.relations()) {
    pairs.push_back(
        {f.index(r.lhs.gen, r.lhs.elem), f.index(r.rhs.gen, r.rhs.elem)});
  }
  return pairs;
}

std::vector<std::string> gen_texts(const ActPresentation& p) {
  std::vector<std::string> texts;
  texts.reserve(p.n_gens());
  for (const auto& g : p.gens()) texts.push_back(g.text);
  return texts;
}

}  // namespace

std::vector<Elem> DefinedAct::basis_assign() const {
  std::vector<Elem> assign(free.n_gens());
  const Elem one = free.act().base()->identity();
  for (Elem x = 0; x < free.n_gens(); ++x) {
    assign[x] = quotient.projection[free.index(x, one)];
  }
  return assign;
}

DefinedAct defined_act(const ActPresentation& p) {
  FreeAct f = free_act(p.n_gens(), p.monoid(), gen_texts(p));
  const auto pairs = relation_pairs(p, f);
  ActCongruence closure = congruence_closure(f.act(), pairs);
  QuotientAct q = quotient_act(f.act(), closure);
  return DefinedAct{std::move(f), std::move(closure), std::move(q)};
}

bool satisfies(const FiniteAct& a, std::span<const Elem> assign,
               std::span<const ActRelation> relations) {
  for (const auto& r : relations) {
    if (a.act(assign[r.lhs.gen], r.lhs.elem) !=
        a.act(assign[r.rhs.gen], r.rhs.elem)) {
      return false;
    }
  }
  return true;
}

std::optional<DerivationCertificate> is_consequence(const ActPresentation& p,
                                                    const FreeActElem& w1,
                                                    const FreeActElem& w2) {
  FreeAct f = free_act(p.n_gens(), p.monoid(), gen_texts(p));
  const auto pairs = relation_pairs(p, f);
  return connect_sequence(f.act(), pairs, f.index(w1.gen, w1.elem),
                          f.index(w2.gen, w2.elem));
}

bool replay_certificate(const ActPresentation& p, const FreeActElem& w1,
                        const FreeActElem& w2,
                        const DerivationCertificate& cert) {
  FreeAct f = free_act(p.n_gens(), p.monoid(), gen_texts(p));
  const auto pairs = relation_pairs(p, f);
  return replay_certificate(f.act(), pairs, f.index(w1.gen, w1.elem),
                            f.index(w2.gen, w2.elem), cert);
}

std::string VerifyResult::describe(const ActPresentation& p) const {
  switch (failure) {
    case VerifyFailure::None:
      return "verified: closure and kernel both have " +
             std::to_string(closure_classes) + " classes";
    case VerifyFailure::NotSurjective:
      return "assignment is not surjective onto the act";
    case VerifyFailure::Unsatisfied:
      return "act does not satisfy relation #" +
             std::to_string(relation_index) + " (" +
             p.describe_elem(p.relations()[relation_index].lhs) + " = " +
             p.describe_elem(p.relations()[relation_index].rhs) + ")";
    case VerifyFailure::KernelGap:
      return "kernel identifies " + p.describe_elem(witness_lhs) + " and " +
             p.describe_elem(witness_rhs) + " but the closure separates them (" +
             std::to_string(closure_classes) + " closure classes vs " +
             std::to_string(kernel_classes) + " kernel classes)";
  }
  return "";
}

VerifyResult is_presentation_of(const ActPresentation& p, const FiniteAct& a,
                                std::span<const Elem> assign) {
  if (assign.size() != p.n_gens()) {
    throw ActError(ErrorKind::BadArgument,
                   "assignment size does not match the generator count");
  }
  if (!a.base()->same_table(*p.monoid())) {
    throw ActError(ErrorKind::BaseMismatch,
                   "presentation and act live over different monoids");
  }
  for (Elem v : assign) {
    if (v >= a.size()) {
      throw ActError(ErrorKind::OutOfRange, "assignment out of range", {v});
    }
  }

  VerifyResult res;

  // (i) surjectivity of the evaluation
  std::vector<bool> hit(a.size(), false);
  std::size_t count = 0;
  const std::size_t mo = a.base()->order();
  for (Elem g = 0; g < p.n_gens(); ++g) {
    for (Elem m = 0; m < mo; ++m) {
      const Elem v = a.act(assign[g], m);
      if (!hit[v]) {
        hit[v] = true;
        ++count;
      }
    }
  }
  if (count != a.size()) {
    res.failure = VerifyFailure::NotSurjective;
    return res;
  }

  // (ii) satisfaction, with the offending relation index
  for (std::uint32_t i = 0; i < p.relations().size(); ++i) {
    const auto& r = p.relations()[i];
    if (a.act(assign[r.lhs.gen], r.lhs.elem) !=
        a.act(assign[r.rhs.gen], r.rhs.elem)) {
      res.failure = VerifyFailure::Unsatisfied;
      res.relation_index = i;
      return res;
    }
  }

  // (iii) kernel equality: given (ii), closure(R) refines the kernel, so
  // the partitions agree iff the class counts do.
  FreeAct f = free_act(p.n_gens(), p.monoid(), gen_texts(p));
  const auto pairs = relation_pairs(p, f);
  ActCongruence closure = congruence_closure(f.act(), pairs);

  std::vector<Elem> eval(f.act().size());
  for (Elem g = 0; g < p.n_gens(); ++g) {
    for (Elem m = 0; m < mo; ++m) {
      eval[f.index(g, m)] = a.act(assign[g], m);
    }
  }
  res.closure_classes = closure.n_classes();
  res.kernel_classes = a.size();
  if (closure.n_classes() == a.size()) {
    res.ok = true;
    return res;
  }

  // witness: two free elements with equal value split by the closure
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> first_with_value(a.size(), kUnset);
  for (Elem e = 0; e < f.act().size(); ++e) {
    const Elem v = eval[e];
    if (first_with_value[v] == kUnset) {
      first_with_value[v] = e;
    } else if (!closure.same(first_with_value[v], e)) {
      const auto [g1, m1] = f.decode(first_with_value[v]);
      const auto [g2, m2] = f.decode(e);
      res.failure = VerifyFailure::KernelGap;
      res.witness_lhs = {g1, m1};
      res.witness_rhs = {g2, m2};
      return res;
    }
  }
  // Unreachable if (i) and (ii) hold, kept as a defensive fallback.
  res.failure = VerifyFailure::KernelGap;
  return res;
}

PresentationWithAssign canonical_presentation(
    const FiniteAct& a, std::span<const Elem> monoid_gens) {
  const auto& m = *a.base();
  for (Elem x : monoid_gens) {
    if (x >= m.order()) {
      throw ActError(ErrorKind::OutOfRange, "monoid generator out of range",
                     {x});
    }
  }
  if (!generates_monoid(m, monoid_gens)) {
    throw ActError(ErrorKind::NotMonoidGeneratingSet,
                   "the given set does not generate the monoid");
  }
  std::vector<GenLabel> gens(a.size());
  for (Elem x = 0; x < a.size(); ++x) gens[x] = {a.label(x), {x}};
  std::vector<ActRelation> relations;
  relations.reserve(a.size() * monoid_gens.size());
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem g : monoid_gens) {
      relations.push_back(
          {{x, g}, {a.act(x, g), m.identity()}});
    }
  }
  std::vector<Elem> assign(a.size());
  for (Elem x = 0; x < a.size(); ++x) assign[x] = x;
  return {ActPresentation(a.base(), std::move(gens), std::move(relations)),
          std::move(assign)};
}

PresentationWithAssign kernel_presentation(const FiniteAct& a,
                                           std::vector<GenLabel> gens,
                                           std::vector<Elem> values) {
  if (gens.size() != values.size()) {
    throw ActError(ErrorKind::BadArgument,
                   "generator labels and values differ in length");
  }
  for (Elem u : values) {
    if (u >= a.size()) {
      throw ActError(ErrorKind::OutOfRange, "generator out of range", {u});
    }
  }
  if (!is_generating_set(a, values)) {
    throw ActError(ErrorKind::NotGenerating,
                   "the given set does not generate the act");
  }
  FreeAct f = free_act(gens.size(), a.base(), [&] {
    std::vector<std::string> t;
    for (const auto& l : gens) t.push_back(l.text);
    return t;
  }());

  // one spanning relation per non-representative element of each kernel fiber
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> fiber_rep(a.size(), kUnset);
  std::vector<ActRelation> relations;
  for (Elem e = 0; e < f.act().size(); ++e) {
    const auto [g, m] = f.decode(e);
    const Elem v = a.act(values[g], m);
    if (fiber_rep[v] == kUnset) {
      fiber_rep[v] = e;
    } else {
      const auto [rg, rm] = f.decode(fiber_rep[v]);
      relations.push_back({{rg, rm}, {g, m}});
    }
  }
  return {ActPresentation(a.base(), std::move(gens), std::move(relations)),
          std::move(values)};
}

PresentationWithAssign presentation_on_generators(const FiniteAct& a,
                                                  std::span<const Elem> gens) {
  std::vector<GenLabel> labels(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] >= a.size()) {
      throw ActError(ErrorKind::OutOfRange, "generator out of range",
                     {gens[i]});
    }
    labels[i] = {a.label(gens[i]), {gens[i]}};
  }
  return kernel_presentation(a, std::move(labels),
                             std::vector<Elem>(gens.begin(), gens.end()));
}

void require_presents(const ActPresentation& p, const FiniteAct& a,
                      std::span<const Elem> assign, const char* context) {
  const VerifyResult r = is_presentation_of(p, a, assign);
  if (!r) {
    throw ActError(ErrorKind::VerificationFailed,
                   std::string(context) + ": " + r.describe(p),
                   {r.witness_lhs.gen, r.witness_lhs.elem, r.witness_rhs.gen,
                    r.witness_rhs.elem});
  }
}

void require_presents_input(const ActPresentation& p, const FiniteAct& a,
                            std::span<const Elem> assign,
                            const char* context) {
  const VerifyResult r = is_presentation_of(p, a, assign);
  if (!r) {
    throw ActError(ErrorKind::NotAPresentation,
                   std::string(context) + ": " + r.describe(p));
  }
}

ActPresentation reduce_presentation(const ActPresentation& p,
                                    const FiniteAct& a,
                                    std::span<const Elem> assign) {
  if (!is_presentation_of(p, a, assign)) {
    throw ActError(ErrorKind::NotAPresentation,
                   "input does not present the act");
  }
  std::vector<ActRelation> kept = p.relations();
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<ActRelation> candidate;
    candidate.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) candidate.push_back(kept[j]);
    }
    if (is_presentation_of(p.with_relations(candidate), a, assign)) {
      kept = std::move(candidate);
    }
  }
  return p.with_relations(std::move(kept));
}

}  // namespace actforge
