#ifndef ACTFORGE_DIAGONAL_HPP
#define ACTFORGE_DIAGONAL_HPP

#include <span>
#include <utility>
#include <vector>

#include "actforge/act.hpp"
#include "actforge/congruence.hpp"
#include "actforge/presentation.hpp"

namespace actforge {

// The diagonal act M x M with (a, b)c = (ac, bc); element (a, b) has index
// a*|M| + b.
struct DiagonalAct {
  FiniteAct act;
  std::size_t morder;

  Elem index(Elem a, Elem b) const { return static_cast<Elem>(a * morder + b); }
  std::pair<Elem, Elem> decode(Elem e) const {
    return {static_cast<Elem>(e / morder), static_cast<Elem>(e % morder)};
  }
};

DiagonalAct diagonal_act(const MonoidPtr& m);

// Smallest U (ties broken lexicographically) with U x U generating the
// diagonal act; U = M always works at finite scale.
std::vector<Elem> square_generating_set(
    const MonoidPtr& m, std::size_t search_cap = kDefaultSquareSearchCap);

// Presents the diagonal act of M on the generator set U x V; generator
// keys are the pairs {u, v}.
PresentationWithAssign diagonal_uv_presentation(const MonoidPtr& m,
                                                std::span<const Elem> u,
                                                std::span<const Elem> v);

// The square case U x U.
PresentationWithAssign diagonal_square_presentation(const MonoidPtr& m,
                                                    std::span<const Elem> u);

// ((U u {0}) x (U u {0})) \ {(0, 0)}: a verified generating set for the
// diagonal act of M^0.
struct ZeroExtensionGenerators {
  MonoidPtr m0;
  std::vector<ElemPair> gens;  // pairs over M^0; the zero has index |M|
};
ZeroExtensionGenerators zero_extension_generators(const MonoidPtr& m,
                                                  std::span<const Elem> u);

// (U x V) x (U x V) as a verified generating set of the diagonal
// (M x N)-act; entries are pairs of M x N product indices.
std::vector<ElemPair> product_diagonal_generators(const MonoidPtr& m,
                                                  const MonoidPtr& n,
                                                  std::span<const Elem> u,
                                                  std::span<const Elem> v);

// Projection of a generating set of the diagonal (M x N)-act to the chosen
// factor, verified to generate that factor's diagonal act.
std::vector<Elem> project_diagonal_generators(const MonoidPtr& m,
                                              const MonoidPtr& n,
                                              std::span<const ElemPair> gens,
                                              bool first_factor);

// Restriction of a diagonal presentation of M to a submonoid N whose
// complement is an ideal: keeps exactly the relations whose generators lie
// in (U n N) x (U n N) and whose multipliers lie in N.
struct SubmonoidRestriction {
  MonoidPtr submonoid;        // N with its own indexing
  std::vector<Elem> embed;    // new index -> old index in M
  std::vector<Elem> v;        // V = U n N, as N indices
  PresentationWithAssign pres;  // verified against the diagonal N-act
};
SubmonoidRestriction restrict_presentation_to_submonoid(
    const ActPresentation& p, std::span<const Elem> assign,
    std::span<const Elem> n_elems, std::span<const Elem> u);

// <Z | R, S1, S2, x.0 = y.0 (x, y in Z)> for the diagonal M^0-act, built
// from a diagonal presentation <U x U | R> and a presentation <U | S> of
// the right-regular act.
struct ZeroExtensionPresentation {
  MonoidPtr m0;
  std::vector<ElemPair> z;  // the generator pairs, in generator order
  PresentationWithAssign pres;
};
ZeroExtensionPresentation zero_extension_presentation(
    const MonoidPtr& m, const ActPresentation& p_diag,
    const ActPresentation& p_m, std::span<const Elem> u);

// <Z | T1, T2> for the diagonal (M x N)-act from diagonal presentations of
// M and N (Z = (U x V) x (U x V)).
struct ProductDiagonalPresentation {
  MonoidPtr product;          // M x N
  std::size_t t1_count = 0;
  std::size_t t2_count = 0;
  PresentationWithAssign pres;
};
ProductDiagonalPresentation product_diagonal_presentation(
    const MonoidPtr& m, const MonoidPtr& n, const ActPresentation& p_m,
    std::span<const Elem> u, const ActPresentation& p_n,
    std::span<const Elem> v);

// Factor presentation of a diagonal (M x N)-act presentation through the
// coordinate projection (u1, v1), (u2, v2)).(m, n) -> (u1, u2).m.
PresentationWithAssign product_diagonal_factor_presentation(
    const MonoidPtr& m, const MonoidPtr& n, const ActPresentation& p,
    std::span<const Elem> assign, bool first_factor);

// V = XU u U inside U(M, A), verified to generate the diagonal
// U(M, A)-act.  Requires 1 in U.
struct AttachGenerators {
  MonoidPtr u_monoid;       // U(M, A); the A-part starts at index |M|
  std::vector<Elem> v;      // sorted U(M, A) element indices
};
AttachGenerators attach_act_generators(const MonoidPtr& m, const FiniteAct& a,
                                       std::span<const Elem> x,
                                       std::span<const Elem> u);

// Splits a generating set of the diagonal U(M, A)-act into its A-part and
// M-part (the forward direction of the attach construction).
struct AttachProjection {
  std::vector<Elem> a_gens;  // as A elements
  std::vector<Elem> m_gens;  // as M elements
};
AttachProjection attach_act_project_generators(const MonoidPtr& m,
                                               const FiniteAct& a,
                                               std::span<const Elem> gens);

// Factor presentation for A out of a diagonal presentation of U(M, A) on
// V x V: relation images under (x', u).m -> chi(x').(alpha(x') m) plus the
// collision relations x.u = y.v whenever xu = yv in A.
PresentationWithAssign attach_act_factor_presentation(
    const MonoidPtr& m, const FiniteAct& a, const ActPresentation& p,
    std::span<const Elem> assign, std::span<const Elem> x,
    std::span<const Elem> u);

}  // namespace actforge

#endif  // ACTFORGE_DIAGONAL_HPP
