#ifndef ACTFORGE_ACT_HPP
#define ACTFORGE_ACT_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "actforge/config.hpp"
#include "actforge/monoid.hpp"

namespace actforge {

// A finite right act over a FiniteMonoid: a point set with a total action
// table, immutable after construction.
class FiniteAct {
 public:
  const MonoidPtr& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return size_; }

  Elem act(Elem a, Elem m) const { return action_[a * morder_ + m]; }

  const std::vector<Elem>& action() const noexcept { return action_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Elem a) const;

  // Orbit a.M, sorted.
  std::vector<Elem> orbit(Elem a) const;

 private:
  friend FiniteAct validate_act(MonoidPtr, std::size_t, std::vector<Elem>,
                                std::vector<std::string>);
  friend FiniteAct make_act_unchecked(MonoidPtr, std::size_t,
                                      std::vector<Elem>,
                                      std::vector<std::string>);

  FiniteAct(MonoidPtr base, std::size_t size, std::vector<Elem> action,
            std::vector<std::string> labels)
      : base_(std::move(base)),
        size_(size),
        morder_(base_->order()),
        action_(std::move(action)),
        labels_(std::move(labels)) {}

  MonoidPtr base_;
  std::size_t size_;
  std::size_t morder_;
  std::vector<Elem> action_;  // size x |M|, row-major
  std::vector<std::string> labels_;
};

// Checks both act axioms (a.1 = a and a.(mn) = (a.m).n); throws
// IdentityLawFails(a) or AssociativityFails(a, m, n).
FiniteAct validate_act(MonoidPtr base, std::size_t size,
                       std::vector<Elem> action,
                       std::vector<std::string> labels = {});

FiniteAct make_act_unchecked(MonoidPtr base, std::size_t size,
                             std::vector<Elem> action,
                             std::vector<std::string> labels = {});

void revalidate(const FiniteAct& a);

// M acting on itself by right multiplication.
FiniteAct right_regular_act(const MonoidPtr& m);

// The free act on X = {0..n_gens-1}: elements are pairs (x, m) with
// (x, m).n = (x, mn), laid out as x*|M| + m.
class FreeAct {
 public:
  FreeAct(std::size_t n_gens, const MonoidPtr& m,
          std::vector<std::string> gen_labels = {});

  const FiniteAct& act() const noexcept { return act_; }
  std::size_t n_gens() const noexcept { return n_gens_; }

  Elem index(Elem gen, Elem m) const {
    return static_cast<Elem>(gen * morder_ + m);
  }
  std::pair<Elem, Elem> decode(Elem e) const {
    return {static_cast<Elem>(e / morder_), static_cast<Elem>(e % morder_)};
  }
  // The basis X x {1}.
  std::vector<Elem> basis() const;

 private:
  static FiniteAct build(std::size_t n_gens, const MonoidPtr& m,
                         const std::vector<std::string>& gen_labels);

  std::size_t n_gens_;
  std::size_t morder_;
  FiniteAct act_;
};

FreeAct free_act(std::size_t n_gens, const MonoidPtr& m,
                 std::vector<std::string> gen_labels = {});

struct GeneratingSet {
  std::vector<Elem> elems;       // sorted, unique
  bool minimal_certified = false;  // true only for exhaustive-mode results
};

// True iff every element of A is u.m for some u in U: one application
// suffices because multipliers absorb products.
bool is_generating_set(const FiniteAct& a, std::span<const Elem> u);

// Exhaustive minimum-cardinality search (lexicographically smallest among
// ties) up to `search_cap` elements; greedy cover above it, flagged by
// minimal_certified = false.
GeneratingSet minimal_generating_set(const FiniteAct& a,
                                     std::size_t search_cap = kDefaultSearchCap);

// Componentwise action on A x B; element (a, b) has index a*|B| + b.
FiniteAct direct_product_act(const FiniteAct& a, const FiniteAct& b);

// An M-isomorphism A -> B as an image vector, or nullopt.  Backtracks over
// images of a generating set of A.
std::optional<std::vector<Elem>> act_isomorphic(const FiniteAct& a,
                                                const FiniteAct& b);

// A basis (subset with unique decomposition), or nullopt if A is not free.
// |A| must be at most `search_cap` for the exhaustive scan.
std::optional<std::vector<Elem>> is_free(const FiniteAct& a,
                                         std::size_t search_cap = kDefaultSearchCap);

}  // namespace actforge

#endif  // ACTFORGE_ACT_HPP
