#include "orientifold/gamma_rep.hpp"

#include <utility>
#include <vector>

#include "orientifold/errors.hpp"
#include "orientifold/scalars.hpp"

namespace orientifold {

namespace {

// Product of basis elements in the level-k Cayley-Dickson algebra
// (k = 3 gives the octonions). Returns (sign, index).
std::pair<int, int> cd_mul(int k, int i, int j) {
  if (k == 0) return {1, 0};
  const int half = 1 << (k - 1);
  auto conj_sign = [&](int idx) { return idx == 0 ? 1 : -1; };
  if (i < half && j < half) {
    return cd_mul(k - 1, i, j);
  }
  if (i < half && j >= half) {
    // (a,0)(0,d) = (0, d a)
    auto [s, r] = cd_mul(k - 1, j - half, i);
    return {s, r + half};
  }
  if (i >= half && j < half) {
    // (0,b)(c,0) = (0, b conj(c))
    auto [s, r] = cd_mul(k - 1, i - half, j);
    return {s * conj_sign(j), r + half};
  }
  // (0,b)(0,d) = (-conj(d) b, 0)
  auto [s, r] = cd_mul(k - 1, j - half, i - half);
  return {-s * conj_sign(j - half), r};
}

}  // namespace

GammaRep build_gamma_rep() {
  // Octonion left multiplication: L[m](r,c) with e_m e_c = s e_r.
  std::array<Eigen::Matrix<long long, 8, 8>, 7> L;
  for (int m = 1; m <= 7; ++m) {
    L[m - 1].setZero();
    for (int c = 0; c < 8; ++c) {
      auto [s, r] = cd_mul(3, m, c);
      L[m - 1](r, c) = s;
    }
  }
  GammaRep rep;
  for (int i = 0; i < 7; ++i) {
    rep.gamma[i].setZero();
    rep.gamma[i].block<8, 8>(0, 8) = L[i];
    rep.gamma[i].block<8, 8>(8, 0) = L[i];
  }
  rep.gamma[7].setZero();
  for (int r = 0; r < 8; ++r) {
    rep.gamma[7](r, r + 8) = -1;
    rep.gamma[7](r + 8, r) = 1;
  }
  return rep;
}

int complex_commutant_dimension(const GammaRep& rep) {
  // Unknown M is 16x16 real; [M, gamma_k] = 0 gives linear constraints with
  // two terms each (the gammas are signed permutations). The complex
  // commutant of real matrices has the same dimension as the real one.
  const int n = 16;
  const int unknowns = n * n;
  std::vector<std::vector<Rat>> echelon;  // rows in echelon form
  std::vector<int> pivot_col;

  auto reduce_insert = [&](std::vector<Rat> row) {
    for (size_t r = 0; r < echelon.size(); ++r) {
      int pc = pivot_col[r];
      if (!row[pc].is_zero()) {
        Rat f = row[pc] / echelon[r][pc];
        for (int c = pc; c < unknowns; ++c) row[c] -= f * echelon[r][c];
      }
    }
    int pc = -1;
    for (int c = 0; c < unknowns; ++c)
      if (!row[c].is_zero()) { pc = c; break; }
    if (pc >= 0) {
      echelon.push_back(std::move(row));
      pivot_col.push_back(pc);
    }
  };

  for (const auto& g : rep.gamma) {
    // signed permutation structure: column c has its nonzero at row p(c)
    std::vector<int> p(n);
    std::vector<long long> s(n);
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r)
        if (g(r, c) != 0) { p[c] = r; s[c] = g(r, c); }
    // (M g)(r,c) = M(r, p(c)) s(c);   (g M)(r,c) = s(c') M(c', c) with p(c') = r
    std::vector<int> pinv(n);
    for (int c = 0; c < n; ++c) pinv[p[c]] = c;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        std::vector<Rat> row(unknowns, Rat(0));
        row[r * n + p[c]] += Rat(s[c]);
        int cp = pinv[r];
        row[cp * n + c] -= Rat(s[cp]);
        reduce_insert(std::move(row));
      }
  }
  return unknowns - int(echelon.size());
}

}  // namespace orientifold
