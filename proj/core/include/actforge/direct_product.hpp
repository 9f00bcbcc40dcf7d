#ifndef ACTFORGE_DIRECT_PRODUCT_HPP
#define ACTFORGE_DIRECT_PRODUCT_HPP

#include <span>
#include <utility>
#include <vector>

#include "actforge/act.hpp"
#include "actforge/diagonal.hpp"
#include "actforge/presentation.hpp"

namespace actforge {

// Total choice tables realizing (m, n) = (alpha, beta).gamma with
// (alpha, beta) in U x V: candidates (u, v) are scanned in index order,
// then the multiplier, first success wins.
class DiagonalDecomposition {
 public:
  static DiagonalDecomposition build(const MonoidPtr& m,
                                     std::span<const Elem> u,
                                     std::span<const Elem> v);

  const MonoidPtr& monoid() const noexcept { return m_; }
  const std::vector<Elem>& u() const noexcept { return u_; }
  const std::vector<Elem>& v() const noexcept { return v_; }

  Elem alpha(Elem m1, Elem m2) const { return alpha_[m1 * order_ + m2]; }
  Elem beta(Elem m1, Elem m2) const { return beta_[m1 * order_ + m2]; }
  Elem gamma(Elem m1, Elem m2) const { return gamma_[m1 * order_ + m2]; }

 private:
  DiagonalDecomposition() = default;

  MonoidPtr m_;
  std::vector<Elem> u_, v_;
  std::size_t order_ = 0;
  std::vector<Elem> alpha_, beta_, gamma_;  // |M|^2 tables, values in M
};

// Both displayed equalities of the decomposition identity
// (m1 m2, n1 n2) = (m1 u, n1 v) gamma(m2, n2)
//               = delta(m1 u, n1 v) (gamma(m1 u, n1 v) gamma(m2, n2)),
// checked over all quadruples.
bool crucial_identity_check(const MonoidPtr& m,
                            const DiagonalDecomposition& d);

// Everything the direct-product constructions share: the product act, the
// generator grid Z = XU x YV with provenance, and the decomposition.
struct DpSetup {
  FiniteAct a, b;
  std::vector<Elem> x, y;  // generating sets of A and B, as given
  std::vector<Elem> u, v;
  FiniteAct product;                // A x B, index (p, q) = p*|B| + q
  std::vector<Elem> xu, yv;         // X' and Y' values, sorted unique
  std::vector<std::pair<Elem, Elem>> xu_choice;  // per X' value: smallest
  std::vector<std::pair<Elem, Elem>> yv_choice;  // (index into X/Y, index into U/V)
  DiagonalDecomposition dec;
  std::vector<Elem> gens;  // Z as product-act elements, row-major over (xu, yv)

  Elem xu_pos(Elem value) const;
  Elem yv_pos(Elem value) const;
  Elem z_gen(Elem xu_index, Elem yv_index) const {
    return static_cast<Elem>(xu_index * yv.size() + yv_index);
  }
};

// Builds and verifies the setup; throws NotGenerating when X, Y or U x V
// fail their generating preconditions.
DpSetup dp_setup(const FiniteAct& a, std::span<const Elem> x,
                 const FiniteAct& b, std::span<const Elem> y,
                 std::span<const Elem> u, std::span<const Elem> v);

// The generating set Z = XU x YV of A x B, verified.
GeneratingSet dp_generating_set(const FiniteAct& a, std::span<const Elem> x,
                                const FiniteAct& b, std::span<const Elem> y,
                                std::span<const Elem> u,
                                std::span<const Elem> v);

// (x.m, y.n) -> (x alpha(m, n), y beta(m, n)).gamma(m, n), landing in the
// free act over Z.
FreeActElem rho_pair(const DpSetup& s, const FreeActElem& wa,
                     const FreeActElem& wb);

struct DpPresentation {
  std::size_t t1_count = 0;
  std::size_t t2_count = 0;
  std::size_t t3_count = 0;
  PresentationWithAssign pres;
};

// <Z | T1, T2, T3> for A x B from presentations of A, B and the diagonal
// act on U x V.  Generator i of p_a is identified with x[i] (likewise p_b
// with y); p_diag generators carry {u, v} keys.
DpPresentation dp_presentation(const DpSetup& s, const ActPresentation& p_a,
                               const ActPresentation& p_b,
                               const ActPresentation& p_diag);

// Factor presentation of A out of a presentation of A x B over Z (needs
// V = U): relation images under (x', y').m -> chi(x').(alpha(x') m) plus
// the collision relations x.u = y.v whenever xu = yv in A.
PresentationWithAssign dp_factor_presentation(const DpSetup& s,
                                              const ActPresentation& p);

}  // namespace actforge

#endif  // ACTFORGE_DIRECT_PRODUCT_HPP
