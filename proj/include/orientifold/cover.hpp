#pragma once
#include <map>
#include <vector>

#include "orientifold/group.hpp"
#include "orientifold/intlinalg.hpp"

namespace orientifold {

// A group acting on the cells of the cohomology engine. Orientifold groups
// are the primary case; the untwisted equivariant theory (used for w_2^H on
// the H side of a trivial extension) passes eps identically +1.
inline OrientifoldGroup plain_action_group(const FiniteGroup& g) {
  OrientifoldGroup a;
  a.g = g;
  a.eps.assign(g.size(), 1);
  return a;
}

// Finite base set with a Gamma action, covered by subsets that the action
// permutes compatibly: gamma(U_a) = U_{gamma.a}.
struct EquivariantCover {
  OrientifoldGroup gamma;
  int npoints = 1;
  std::vector<std::vector<int>> point_act;  // [gamma][x]
  std::vector<std::vector<int>> sets;       // cover sets as sorted point lists
  std::vector<std::vector<int>> set_act;    // [gamma][a]

  int nsets() const { return int(sets.size()); }
  bool in_set(int a, int x) const;
  void validate() const;

  // single point, single covering set
  static EquivariantCover point_base(const OrientifoldGroup& g);
};

// A degree-p cell (gamma_p,...,gamma_1 | a_p,...,a_0 | x) with x in U_{a_0}
// and (gamma_k ... gamma_1) x in U_{a_k}. gs is stored in application order:
// gs[0] = gamma_1 acts first.
struct Cell {
  std::vector<int> gs;
  std::vector<int> as;
  int x = 0;

  friend bool operator<(const Cell& l, const Cell& r) {
    if (l.gs != r.gs) return l.gs < r.gs;
    if (l.as != r.as) return l.as < r.as;
    return l.x < r.x;
  }
  friend bool operator==(const Cell& l, const Cell& r) {
    return l.gs == r.gs && l.as == r.as && l.x == r.x;
  }
};

// Cell enumeration for degrees 0..max_degree plus the coboundary matrices of
// the semi-equivariant complex. The degree-p coboundary follows the bar
// resolution pattern; at degree 0 the sign convention is
// (delta s)(g | b,a | x) = s_b(gx) - theta_g s_a(x).
class CellComplex {
 public:
  CellComplex(const EquivariantCover& cover, int max_degree);

  const EquivariantCover& cover() const { return cover_; }
  int max_degree() const { return int(cells_.size()) - 1; }
  const std::vector<Cell>& cells(int p) const { return cells_[p]; }
  int cell_index(int p, const Cell& c) const;
  long long total_cells() const;

  // Coboundary C^p -> C^{p+1} as an integer matrix; entries are +-1 possibly
  // multiplied by eps(gamma) when `eps_twist` is set (the (Z,iota_eps) and
  // (U(1),kappa_eps) coefficient kinds).
  MatZ delta(int p, bool eps_twist) const;

  // Per-term decomposition of the degree-(p+1) bar formula evaluated on
  // `cell`: pairs (sign or eps-twisted sign, source cell index in degree p).
  // `twist_idx` reports which term carries the theta twist (always term 0).
  std::vector<std::pair<int, Cell>> bar_terms(const Cell& cell) const;

 private:
  EquivariantCover cover_;
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::map<Cell, int>> index_;
};

}  // namespace orientifold
