#ifndef ACTFORGE_FAMILY_HPP
#define ACTFORGE_FAMILY_HPP

#include <string>
#include <vector>

#include "actforge/act.hpp"
#include "actforge/monoid.hpp"

namespace actforge {

// Small named monoids used throughout the test families.
MonoidPtr trivial_monoid();
MonoidPtr cyclic_monoid(unsigned n);
// Chain semilattice 1 = e0 > e1 > ... > e_{n-1}, product = meet;
// semilattice_chain(2) is the two-element semilattice E2.
MonoidPtr semilattice_chain(unsigned n);
// k left zeros {z_1..z_k} with an identity adjoined: z_i * x = z_i.
MonoidPtr left_zero_monoid(unsigned k);
MonoidPtr symmetric_group(unsigned n);

struct NamedMonoid {
  std::string name;
  MonoidPtr monoid;
};

// The fixed finite family the acceptance suite runs over: trivial, Z2, Z3,
// E2, T2, E2^0, Z2^0, Z2 x E2, U(Z2, Z2), S3.
std::vector<NamedMonoid> standard_family();

struct NamedAct {
  std::string name;
  FiniteAct act;
};

// Deterministic act family over M: the trivial act, the right-regular act,
// a rank-2 free act and the cyclic quotients of M by single seed pairs
// (1, m), size-capped and deduplicated up to M-isomorphism.
std::vector<NamedAct> act_family(const MonoidPtr& m, std::size_t max_size);

}  // namespace actforge

#endif  // ACTFORGE_FAMILY_HPP
