#pragma once
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "orientifold/cover.hpp"
#include "orientifold/spin.hpp"

namespace orientifold {

// Abelian coefficient Gamma-groups handled by the cohomology engine.
//  IntegersTwisted: (Z, iota_eps), theta_g(t) = eps(g) t
//  ZTwo:            (Z_2, id_eps), trivial action
//  CircleRational:  (U(1), kappa_eps) modelled as Q/Z, theta_g(t) = eps(g) t
enum class CoeffKind { IntegersTwisted, ZTwo, CircleRational };

inline bool kind_uses_eps(CoeffKind k) { return k != CoeffKind::ZTwo; }

// Degree-p cochain with abelian coefficients, stored over the enumerated
// cells of a CellComplex. Integer kinds use `z` (ZTwo as 0/1), the circle
// kind uses `t`.
struct Cochain {
  CoeffKind kind = CoeffKind::IntegersTwisted;
  int degree = 0;
  std::vector<long long> z;
  std::vector<Turn> t;
};

struct CohomologyGroup {
  CoeffKind kind = CoeffKind::IntegersTwisted;
  int degree = 0;
  std::vector<long long> invariant_factors;  // torsion factors > 1
  int free_rank = 0;       // rank of the free part (integer kinds)
  int divisible_rank = 0;  // rank of the (Q/Z)^r part (circle kind)
  QuotientGroup quo;       // integer kinds: the group itself;
                           // circle kind: H^{p+1}(Z,iota) used through delta_exp
  std::vector<Cochain> generators;  // representative cocycles per factor

  long long torsion_order() const {
    long long o = 1;
    for (long long d : invariant_factors) o *= d;
    return o;
  }
};

// Semi-equivariant Cech cohomology of a finite cover. Wraps a CellComplex
// with the coefficient handling, connecting maps, and class arithmetic.
class CechEngine {
 public:
  CechEngine(const EquivariantCover& cover, int max_degree);

  const CellComplex& complex() const { return cx_; }
  const EquivariantCover& cover() const { return cx_.cover(); }
  int d1_cells() const { return int(cx_.cells(1).size()); }

  MatZ delta_matrix(int p, bool eps_twist) const;

  Cochain zero_cochain(CoeffKind k, int degree) const;
  bool is_cocycle(const Cochain& c) const;
  Cochain coboundary(const Cochain& c) const;

  CohomologyGroup cohomology(CoeffKind k, int p) const;

  // Canonical class coordinates of a cocycle (integer kinds).
  std::vector<long long> class_coordinates(const CohomologyGroup& h,
                                           const Cochain& c) const;

  // Circle classes: complete zero test (sees the divisible part too).
  bool circle_class_is_zero(const Cochain& c) const;
  bool circle_classes_equal(const Cochain& a, const Cochain& b) const;

  // Connecting map of the exponential sequence: a degree-p circle cocycle to
  // an integral degree-(p+1) cocycle via the canonical rational lift.
  Cochain delta_exp(const Cochain& c) const;

  VecZ to_vector(const Cochain& c) const;
  Cochain from_vector(CoeffKind k, int degree, const VecZ& v) const;

 private:
  CellComplex cx_;
  mutable std::vector<std::optional<MatZ>> delta_twisted_, delta_plain_;
};

// --- group-valued degree-1 cochains ------------------------------------------

// Value operations for group-valued cochains; `twist` applies theta_gamma
// given eps(gamma).
template <class G>
struct GroupOps {
  std::function<G(const G&, const G&)> mul;
  std::function<G(const G&)> inv;
  std::function<G(int, const G&)> twist;
  std::function<bool(const G&, const G&)> eq;
  G id;
};

// SO(n)-valued cochain with values restricted to signed permutations (the
// exactly liftable rotations).
struct SoCochain {
  int n = 0;
  std::vector<MatZ> v;  // aligned with complex.cells(1)
};

struct TurnCochain {
  int degree = 1;
  std::vector<Turn> v;
};

GroupOps<MatZ> so_ops(int n);
GroupOps<Turn> circle_ops();
GroupOps<SpincElement> spinc_ops(int n);

// Composition law phi_ca(g2 g1, x) = phi_cb(g2, g1 x) * theta_{g2} phi_ba(g1, x)
// over every degree-2 cell, plus identity on the diagonal identity cells.
template <class G>
bool cocycle_condition(const CellComplex& cx, const std::vector<G>& v,
                       const GroupOps<G>& ops) {
  require(int(v.size()) == int(cx.cells(1).size()), Error::Code::DomainMismatch,
          "cochain does not match the cover");
  const auto& g = cx.cover().gamma;
  for (const Cell& c : cx.cells(1)) {
    if (c.gs[0] == g.identity() && c.as[0] == c.as[1]) {
      if (!ops.eq(v[cx.cell_index(1, c)], ops.id)) return false;
    }
  }
  for (const Cell& cell : cx.cells(2)) {
    auto faces = cx.bar_terms(cell);  // [drop-top, merged, moved]
    const G& ba = v[cx.cell_index(1, faces[0].second)];
    const G& ca = v[cx.cell_index(1, faces[1].second)];
    const G& cb = v[cx.cell_index(1, faces[2].second)];
    G rhs = ops.mul(cb, ops.twist(g.sign(cell.gs[1]), ba));
    if (!ops.eq(ca, rhs)) return false;
  }
  return true;
}

// The degree-2 failure word phi_cb * theta(phi_ba) * phi_ca^{-1}; central
// when Ad(phi) is a cocycle.
template <class G>
std::vector<G> coboundary_word(const CellComplex& cx, const std::vector<G>& v,
                               const GroupOps<G>& ops) {
  const auto& g = cx.cover().gamma;
  std::vector<G> w;
  w.reserve(cx.cells(2).size());
  for (const Cell& cell : cx.cells(2)) {
    auto faces = cx.bar_terms(cell);
    const G& ba = v[cx.cell_index(1, faces[0].second)];
    const G& ca = v[cx.cell_index(1, faces[1].second)];
    const G& cb = v[cx.cell_index(1, faces[2].second)];
    w.push_back(ops.mul(ops.mul(cb, ops.twist(g.sign(cell.gs[1]), ba)), ops.inv(ca)));
  }
  return w;
}

// --- connecting maps ----------------------------------------------------------

struct ConnectingResult {
  Cochain cochain;                    // representative in the target complex
  std::vector<long long> class_coords;
  bool zero_class = false;
};

// Delta_s: lift an SO cocycle through Ad and take the Z2 class of the failure.
ConnectingResult delta_s(const CechEngine& eng, const SoCochain& phi,
                         const CohomologyGroup& h2_z2);

// Delta_u: lift a circle cocycle through the squaring map.
ConnectingResult delta_u(const CechEngine& eng, const TurnCochain& psi,
                         const CohomologyGroup& h2_z2);

// Delta_sc: lift an SO cocycle to Spinc and take the circle-valued failure.
// Returns the degree-2 circle cochain (a cocycle).
Cochain delta_sc(const CechEngine& eng, const SoCochain& phi);

// --- cocycle operations (GL(m,C)-valued) --------------------------------------

struct GlCochain {
  int m = 0;
  std::vector<MatC> v;
};

GlCochain gl_identity_cochain(const CechEngine& eng, int m);
GlCochain gl_from_so(const CechEngine& eng, const SoCochain& phi);
bool gl_cocycle_condition(const CechEngine& eng, const GlCochain& phi);
GlCochain gl_dual(const GlCochain& phi);
GlCochain gl_direct_sum(const GlCochain& a, const GlCochain& b);
GlCochain gl_tensor(const GlCochain& a, const GlCochain& b);

MatC invert_matc(const MatC& m);

// Pullback along an equivariant point map f: X' -> X (same group, same set
// indices; the cover of X' is f^*U). Returns the pulled-back engine and maps
// cochains by composing with f.
struct PullbackResult {
  EquivariantCover cover;
  std::vector<int> point_map;
};
PullbackResult pullback_cover(const EquivariantCover& target,
                              const std::vector<int>& point_map, int npoints_src,
                              const std::vector<std::vector<int>>& src_point_act);
GlCochain gl_pullback(const CechEngine& src_eng, const CechEngine& dst_eng,
                      const std::vector<int>& point_map, const GlCochain& phi);

// Pullback of cochains along a group quotient pi: Gamma -> H over the same
// base (the trivial-extension comparison maps).
template <class V>
std::vector<V> pullback_group_values(const CellComplex& dst, const CellComplex& src,
                                     const std::vector<int>& pi,
                                     const std::vector<V>& values, int degree) {
  std::vector<V> out;
  out.reserve(dst.cells(degree).size());
  for (const Cell& c : dst.cells(degree)) {
    Cell s = c;
    for (int& g : s.gs) g = pi[g];
    out.push_back(values[src.cell_index(degree, s)]);
  }
  return out;
}

}  // namespace orientifold
