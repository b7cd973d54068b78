#pragma once
// Test-only oracles, independent of the production cell complex: twisted
// group cohomology over a point from the inhomogeneous bar resolution.
#include <vector>

#include "orientifold/group.hpp"
#include "orientifold/intlinalg.hpp"

namespace oracle {

using orientifold::MatZ;
using orientifold::OrientifoldGroup;

// index of a p-tuple (g_1..g_p) in lexicographic order, g_1 most significant
inline int tuple_index(const std::vector<int>& t, int n) {
  int idx = 0;
  for (int g : t) idx = idx * n + g;
  return idx;
}

// bar differential C^p -> C^{p+1} for coefficients Z with the eps-twisted
// action (or the trivial action when `twisted` is false):
// (df)(g_1,...,g_{p+1}) = g_1 f(g_2..g_{p+1})
//   + sum_i (-1)^i f(..., g_i g_{i+1}, ...) + (-1)^{p+1} f(g_1..g_p)
inline MatZ bar_delta(const OrientifoldGroup& G, bool twisted, int p) {
  const int n = G.size();
  int rows = 1, cols = 1;
  for (int i = 0; i < p + 1; ++i) rows *= n;
  for (int i = 0; i < p; ++i) cols *= n;
  MatZ D = MatZ::Zero(rows, cols);
  std::vector<int> t(p + 1, 0);
  for (int row = 0; row < rows; ++row) {
    int r = row;
    for (int i = p; i >= 0; --i) {
      t[i] = r % n;
      r /= n;
    }
    {  // g_1 acts
      std::vector<int> f(t.begin() + 1, t.end());
      int s = twisted ? G.sign(t[0]) : 1;
      D(row, tuple_index(f, n)) += s;
    }
    for (int i = 1; i <= p; ++i) {
      std::vector<int> f;
      for (int k = 0; k < i - 1; ++k) f.push_back(t[k]);
      f.push_back(G.op(t[i - 1], t[i]));
      for (int k = i + 1; k <= p; ++k) f.push_back(t[k]);
      D(row, tuple_index(f, n)) += (i % 2 == 0) ? 1 : -1;
    }
    {
      std::vector<int> f(t.begin(), t.end() - 1);
      D(row, tuple_index(f, n)) += ((p + 1) % 2 == 0) ? 1 : -1;
    }
  }
  return D;
}

struct GroupDesc {
  std::vector<long long> factors;  // invariant factors > 1
  int free_rank = 0;
};

// H^p(Gamma, A) with A = Z (mod_n = 0) or Z/mod_n, action eps-twisted or
// trivial.
inline GroupDesc bar_cohomology(const OrientifoldGroup& G, bool twisted,
                                long long mod_n, int p) {
  using namespace orientifold;
  MatZ Dp = bar_delta(G, twisted, p);
  MatZ Dprev = p > 0 ? bar_delta(G, twisted, p - 1) : MatZ::Zero(Dp.cols(), 0);
  MatZ gens, rels;
  const int m = int(Dp.cols());
  if (mod_n == 0) {
    gens = integer_kernel(Dp);
    rels = Dprev;
  } else {
    MatZ aug(Dp.rows(), m + Dp.rows());
    aug.block(0, 0, Dp.rows(), m) = Dp;
    aug.block(0, m, Dp.rows(), Dp.rows()) =
        mod_n * MatZ::Identity(Dp.rows(), Dp.rows());
    gens = integer_kernel(aug).topRows(m);
    rels = MatZ(m, Dprev.cols() + m);
    rels.block(0, 0, m, Dprev.cols()) = Dprev;
    rels.block(0, Dprev.cols(), m, m) = mod_n * MatZ::Identity(m, m);
  }
  QuotientGroup q(gens, rels);
  GroupDesc d;
  d.factors = q.invariant_factors();
  d.free_rank = q.free_rank();
  return d;
}

}  // namespace oracle
