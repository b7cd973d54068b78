#include "orientifold/cover.hpp"

#include <algorithm>

namespace orientifold {

bool EquivariantCover::in_set(int a, int x) const {
  const auto& s = sets[a];
  return std::binary_search(s.begin(), s.end(), x);
}

void EquivariantCover::validate() const {
  const int ng = gamma.size();
  require(int(point_act.size()) == ng, Error::Code::DomainMismatch,
          "point action not defined for every gamma");
  require(int(set_act.size()) == ng, Error::Code::DomainMismatch,
          "set action not defined for every gamma");
  for (int c = 0; c < ng; ++c) {
    require(int(point_act[c].size()) == npoints, Error::Code::DomainMismatch,
            "point action has wrong size");
    std::vector<bool> seen(npoints, false);
    for (int v : point_act[c]) {
      require(v >= 0 && v < npoints && !seen[v], Error::Code::DomainMismatch,
              "point action is not a permutation");
      seen[v] = true;
    }
    require(int(set_act[c].size()) == nsets(), Error::Code::DomainMismatch,
            "set action has wrong size");
  }
  // action axioms
  for (int x = 0; x < npoints; ++x)
    require(point_act[gamma.identity()][x] == x, Error::Code::DomainMismatch,
            "identity acts nontrivially on points");
  for (int c1 = 0; c1 < ng; ++c1)
    for (int c2 = 0; c2 < ng; ++c2)
      for (int x = 0; x < npoints; ++x)
        require(point_act[gamma.op(c1, c2)][x] == point_act[c1][point_act[c2][x]],
                Error::Code::DomainMismatch, "point action is not an action");
  // covering
  std::vector<bool> covered(npoints, false);
  for (const auto& s : sets) {
    require(std::is_sorted(s.begin(), s.end()), Error::Code::DomainMismatch,
            "cover sets must be sorted");
    for (int x : s) {
      require(x >= 0 && x < npoints, Error::Code::DomainMismatch,
              "cover set point out of range");
      covered[x] = true;
    }
  }
  for (bool b : covered)
    require(b, Error::Code::DomainMismatch, "cover does not cover the base");
  // gamma(U_a) = U_{gamma.a} as point sets
  for (int c = 0; c < ng; ++c)
    for (int a = 0; a < nsets(); ++a) {
      std::vector<int> img;
      for (int x : sets[a]) img.push_back(point_act[c][x]);
      std::sort(img.begin(), img.end());
      require(img == sets[set_act[c][a]], Error::Code::DomainMismatch,
              "set action incompatible with point action");
    }
}

EquivariantCover EquivariantCover::point_base(const OrientifoldGroup& g) {
  EquivariantCover c;
  c.gamma = g;
  c.npoints = 1;
  c.point_act.assign(g.size(), {0});
  c.sets = {{0}};
  c.set_act.assign(g.size(), {0});
  return c;
}

CellComplex::CellComplex(const EquivariantCover& cover, int max_degree)
    : cover_(cover) {
  cover_.validate();
  cells_.resize(max_degree + 1);
  index_.resize(max_degree + 1);
  // degree 0: (a, x) with x in U_a
  for (int a = 0; a < cover_.nsets(); ++a)
    for (int x : cover_.sets[a]) {
      Cell c;
      c.as = {a};
      c.x = x;
      cells_[0].push_back(c);
    }
  for (int p = 1; p <= max_degree; ++p) {
    for (const Cell& base : cells_[p - 1]) {
      // current end point: (gs[p-2] ... gs[0]) x
      int y = base.x;
      for (int g : base.gs) y = cover_.point_act[g][y];
      for (int g = 0; g < cover_.gamma.size(); ++g) {
        int y2 = cover_.point_act[g][y];
        for (int a = 0; a < cover_.nsets(); ++a) {
          if (!cover_.in_set(a, y2)) continue;
          Cell c = base;
          c.gs.push_back(g);
          c.as.push_back(a);
          cells_[p].push_back(c);
        }
      }
    }
    std::sort(cells_[p].begin(), cells_[p].end());
  }
  std::sort(cells_[0].begin(), cells_[0].end());
  for (int p = 0; p <= max_degree; ++p)
    for (int i = 0; i < int(cells_[p].size()); ++i) index_[p].emplace(cells_[p][i], i);
}

int CellComplex::cell_index(int p, const Cell& c) const {
  auto it = index_[p].find(c);
  require(it != index_[p].end(), Error::Code::Internal, "unknown cell");
  return it->second;
}

long long CellComplex::total_cells() const {
  long long t = 0;
  for (const auto& v : cells_) t += (long long)v.size();
  return t;
}

std::vector<std::pair<int, Cell>> CellComplex::bar_terms(const Cell& cell) const {
  // cell has degree p+1 (gs size p+1); returns the p+2 faces with bar signs.
  const int p = int(cell.gs.size()) - 1;
  std::vector<std::pair<int, Cell>> out;
  // term 0: drop the top group element; carries the theta twist
  {
    Cell f;
    f.gs.assign(cell.gs.begin(), cell.gs.end() - 1);
    f.as.assign(cell.as.begin(), cell.as.end() - 1);
    f.x = cell.x;
    out.emplace_back(+1, std::move(f));
  }
  // terms j = 1..p: merge the adjacent pair counting down from the top
  for (int j = 1; j <= p; ++j) {
    Cell f;
    f.x = cell.x;
    int lo = p - j;  // merge gs[lo] and gs[lo+1] into gs[lo+1]*gs[lo]
    for (int k = 0; k < lo; ++k) f.gs.push_back(cell.gs[k]);
    f.gs.push_back(cover_.gamma.op(cell.gs[lo + 1], cell.gs[lo]));
    for (int k = lo + 2; k <= p; ++k) f.gs.push_back(cell.gs[k]);
    for (int k = 0; k <= p + 1; ++k)
      if (k != lo + 1) f.as.push_back(cell.as[k]);
    out.emplace_back(j % 2 == 0 ? +1 : -1, std::move(f));
  }
  // term p+1: drop the first group element, move the base point
  {
    Cell f;
    f.gs.assign(cell.gs.begin() + 1, cell.gs.end());
    f.as.assign(cell.as.begin() + 1, cell.as.end());
    f.x = cover_.point_act[cell.gs[0]][cell.x];
    out.emplace_back((p + 1) % 2 == 0 ? +1 : -1, std::move(f));
  }
  return out;
}

MatZ CellComplex::delta(int p, bool eps_twist) const {
  require(p + 1 <= max_degree(), Error::Code::Internal,
          "cell complex built with insufficient degree");
  const auto& hi = cells_[p + 1];
  MatZ D = MatZ::Zero(int(hi.size()), int(cells_[p].size()));
  for (int row = 0; row < int(hi.size()); ++row) {
    const Cell& cell = hi[row];
    auto faces = bar_terms(cell);
    // global sign: degree 0 uses the negated bar formula
    int global = (p == 0) ? -1 : +1;
    for (size_t t = 0; t < faces.size(); ++t) {
      int sign = faces[t].first * global;
      if (t == 0 && eps_twist) sign *= cover_.gamma.sign(cell.gs[p]);
      D(row, cell_index(p, faces[t].second)) += sign;
    }
  }
  return D;
}

}  // namespace orientifold
