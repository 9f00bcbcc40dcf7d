#ifndef ACTFORGE_WREATH_HPP
#define ACTFORGE_WREATH_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "actforge/act.hpp"
#include "actforge/presentation.hpp"

namespace actforge {

// A map A -> N as a table of N-elements indexed by act element.
using NAMap = std::vector<Elem>;

namespace namap {

// pointwise product: a(theta phi) = (a theta)(a phi)
NAMap product(const FiniteMonoid& n, const NAMap& theta, const NAMap& phi);
// shift by m: a(^m phi) = (am) phi
NAMap shift(const FiniteAct& a, Elem m, const NAMap& phi);
// the constant map c_n
NAMap constant(std::size_t asize, Elem n);

// mixed-radix codec, coordinate 0 least significant
Elem index(const NAMap& theta, std::size_t nsize);
NAMap from_index(Elem e, std::size_t asize, std::size_t nsize);

}  // namespace namap

// The wreath monoid W(M, N | A) = M x N^A with
// (m, theta)(n, phi) = (mn, theta ^m phi), identity (1, c_1).
// Element (m, theta) has index m * |N|^|A| + index(theta).
class WreathMonoid {
 public:
  WreathMonoid(MonoidPtr m, MonoidPtr n, FiniteAct a);

  const MonoidPtr& monoid() const noexcept { return w_; }
  const MonoidPtr& m() const noexcept { return m_; }
  const MonoidPtr& n() const noexcept { return n_; }
  const FiniteAct& a() const noexcept { return a_; }
  std::size_t n_maps() const noexcept { return k_; }

  Elem encode(Elem m, const NAMap& theta) const {
    return static_cast<Elem>(m * k_ + namap::index(theta, n_->order()));
  }
  Elem encode_const(Elem m, Elem n) const {
    return encode(m, namap::constant(a_.size(), n));
  }
  std::pair<Elem, NAMap> decode(Elem e) const {
    return {static_cast<Elem>(e / k_),
            namap::from_index(static_cast<Elem>(e % k_), a_.size(),
                              n_->order())};
  }

 private:
  MonoidPtr m_, n_;
  FiniteAct a_;
  std::size_t k_;  // |N|^|A|
  MonoidPtr w_;
};

WreathMonoid wreath_monoid(const MonoidPtr& m, const MonoidPtr& n,
                           const FiniteAct& a);

// The act A wr B of W(M, N | A) on A x B:
// (a, b)(m, theta) = (am, b(a theta)).  Element (a, b) has index a*|B| + b.
FiniteAct wreath_act(const WreathMonoid& w, const FiniteAct& b);

// X x Y as a verified generating set of A wr B.
GeneratingSet wreath_generating_set(const WreathMonoid& w, const FiniteAct& b,
                                    std::span<const Elem> x,
                                    std::span<const Elem> y);

// Converse direction: the projections of a generating set of A wr B to A
// and B, both verified to generate.
std::pair<std::vector<Elem>, std::vector<Elem>> wreath_project_generators(
    const WreathMonoid& w, const FiniteAct& b, std::span<const Elem> gens);

struct WreathPresentation {
  std::vector<Elem> x, y;  // generator values in A and B
  std::size_t t1_count = 0;
  std::size_t t2_count = 0;
  std::size_t t3_count = 0;
  PresentationWithAssign pres;
};

// <X x Y | T1, T2, T3> for A wr B:
//   T1: (x, y).(1, theta) = (x, y).(1, c_{x theta}) over all theta in N^A,
//   T2: relations of A with (m, c_1) multipliers,
//   T3: relations of B with (1, c_n) multipliers.
WreathPresentation wreath_presentation(const WreathMonoid& w,
                                       const FiniteAct& b,
                                       const ActPresentation& p_a,
                                       std::span<const Elem> x,
                                       const ActPresentation& p_b,
                                       std::span<const Elem> y);

// Factor presentations of A and B out of a presentation of A wr B on the
// generator grid X x Y, through
//   rho_X: (x, y).(m, theta) -> x.m   and
//   rho_Y: (x, y).(m, theta) -> y.(x theta).
std::pair<PresentationWithAssign, PresentationWithAssign>
wreath_factor_presentations(const WreathMonoid& w, const FiniteAct& b,
                            const ActPresentation& p, std::span<const Elem> x,
                            std::span<const Elem> y);

// One step of a (U, a)-connectedness chain.  from_u means theta_i = U[u]
// and phi_i = c_{a theta_i}; otherwise phi_i = U[u] and theta_i is the
// constant.
struct ConnStep {
  bool from_u;
  Elem u_index;
  NAMap psi;
};

struct ConnectednessCertificate {
  std::vector<ConnStep> steps;
};

// Shortest (U, a)-connectedness chain from theta to phi, found by BFS over
// N^A; nullopt when not connected.  Coordinates decouple, so each edge test
// costs O(|A| |N|).
std::optional<ConnectednessCertificate> is_u_connected(
    const MonoidPtr& n, std::size_t asize, const NAMap& theta,
    const NAMap& phi, std::span<const NAMap> u, Elem a);

bool replay_connectedness(const MonoidPtr& n, Elem a, const NAMap& theta,
                          const NAMap& phi, std::span<const NAMap> u,
                          const ConnectednessCertificate& cert);

// Component ids of the (U, a)-step relation over all of N^A, indexed by
// namap codec index (bulk form of is_u_connected).
std::vector<std::uint32_t> u_connected_components(const MonoidPtr& n,
                                                  std::size_t asize,
                                                  std::span<const NAMap> u,
                                                  Elem a);

// T1 shrunk to the maps in U, after checking that every theta in N^A is
// (U, x)-connected to c_{x theta} (or equal to it) for every x.
WreathPresentation reduce_t1(const WreathMonoid& w, const FiniteAct& b,
                             const WreathPresentation& wp,
                             std::span<const NAMap> u);

// U = {phi_x : x in X} with x phi_x = 1 and a phi_x = z elsewhere, for a
// left zero z of N; the reduction hypothesis is re-checked.
std::vector<NAMap> left_zero_u(const FiniteAct& a, std::span<const Elem> x,
                               const MonoidPtr& n, Elem z);

// U = {theta(a, x) : a in A, x in Xn} with b theta(a, x) = x if b = a and 1
// otherwise, for a monoid generating set Xn of N; the hypothesis is
// re-checked at every point of A.
std::vector<NAMap> finite_a_fg_n_u(const FiniteAct& a, const MonoidPtr& n,
                                   std::span<const Elem> xn);

}  // namespace actforge

#endif  // ACTFORGE_WREATH_HPP
