#ifndef ACTFORGE_MONOID_HPP
#define ACTFORGE_MONOID_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace actforge {

// Elements of monoids and acts are positional indices into their owning
// table; labels are cosmetic.
using Elem = std::uint32_t;

class FiniteAct;

// A finite monoid as a validated multiplication table.  Immutable after
// construction; row * column = row acting on the left.
class FiniteMonoid {
 public:
  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }

  Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }

  const std::vector<Elem>& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Elem a) const;

  bool same_table(const FiniteMonoid& other) const noexcept;

 private:
  friend std::shared_ptr<const FiniteMonoid> validate_monoid(
      std::size_t, std::vector<Elem>, Elem, std::vector<std::string>);
  friend std::shared_ptr<const FiniteMonoid> make_monoid_unchecked(
      std::size_t, std::vector<Elem>, Elem, std::vector<std::string>);

  FiniteMonoid(std::size_t order, std::vector<Elem> table, Elem identity,
               std::vector<std::string> labels)
      : order_(order),
        table_(std::move(table)),
        identity_(identity),
        labels_(std::move(labels)) {}

  std::size_t order_;
  std::vector<Elem> table_;  // row-major, order x order
  Elem identity_;
  std::vector<std::string> labels_;  // empty or one per element
};

using MonoidPtr = std::shared_ptr<const FiniteMonoid>;

// Checks both monoid axioms and returns the monoid, or throws:
// NotAssociative(a,b,c), BadIdentity(a), OutOfRange.
MonoidPtr validate_monoid(std::size_t order, std::vector<Elem> table,
                          Elem identity, std::vector<std::string> labels = {});

// For constructions whose tables are correct by construction.  Shape and
// ranges are still checked; tests re-run validate_monoid on the outputs.
MonoidPtr make_monoid_unchecked(std::size_t order, std::vector<Elem> table,
                                Elem identity,
                                std::vector<std::string> labels = {});

// Re-runs the full axiom check on an existing monoid (used on workspace
// load).  Throws on failure.
void revalidate(const FiniteMonoid& m);

// Componentwise product of order |M|*|N|; element (i, j) has index
// i*|N| + j.
MonoidPtr direct_product_monoid(const MonoidPtr& m, const MonoidPtr& n);

inline Elem product_index(Elem i, Elem j, std::size_t n_order) {
  return static_cast<Elem>(i * n_order + j);
}
inline std::pair<Elem, Elem> product_decode(Elem e, std::size_t n_order) {
  return {static_cast<Elem>(e / n_order), static_cast<Elem>(e % n_order)};
}

// M^0: adjoins an absorbing zero as the new last element; the old indices
// keep their products.
MonoidPtr adjoin_zero(const MonoidPtr& m);

// The monoid on M u A in which A becomes an ideal and M acts on A.  The
// M-part keeps indices 0..|M|-1; the A-part occupies |M|..|M|+|A|-1.
// Identity is the identity of M.
MonoidPtr attach_act_monoid(const MonoidPtr& m, const FiniteAct& a);

// All maps {0..n-1} -> {0..n-1} under "apply left factor first"
// composition, so that right actions compose correctly: the element with
// index e is the map i -> (e / n^i) % n.
MonoidPtr full_transformation_monoid(unsigned n);

Elem transformation_index(std::span<const Elem> image, unsigned n);
std::vector<Elem> transformation_image(Elem e, unsigned n);

// True iff the submonoid generated by `gens` (together with the identity)
// is all of M.
bool generates_monoid(const FiniteMonoid& m, std::span<const Elem> gens);

}  // namespace actforge

#endif  // ACTFORGE_MONOID_HPP
