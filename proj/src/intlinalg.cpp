#include "orientifold/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "orientifold/errors.hpp"

namespace orientifold {

namespace {

long long mul_checked(long long a, long long b) {
  __int128 p = (__int128)a * b;
  require(p <= INT64_MAX && p >= INT64_MIN, Error::Code::Internal,
          "integer overflow in matrix reduction");
  return (long long)p;
}

void add_row_multiple(MatZ& A, int dst, int src, long long f) {
  if (f == 0) return;
  for (int c = 0; c < A.cols(); ++c)
    A(dst, c) += mul_checked(f, A(src, c));
}

void add_col_multiple(MatZ& A, int dst, int src, long long f) {
  if (f == 0) return;
  for (int r = 0; r < A.rows(); ++r)
    A(r, dst) += mul_checked(f, A(r, src));
}

}  // namespace

SmithForm smith_normal_form(const MatZ& A) {
  const int m = int(A.rows()), n = int(A.cols());
  SmithForm f;
  f.U = MatZ::Identity(m, m);
  f.V = MatZ::Identity(n, n);
  f.D = A;
  MatZ& D = f.D;

  int t = 0;
  const int steps = std::min(m, n);
  while (t < steps) {
    // locate a pivot of minimal absolute value in the trailing block
    int pr = -1, pc = -1;
    long long best = 0;
    for (int r = t; r < m; ++r)
      for (int c = t; c < n; ++c)
        if (D(r, c) != 0 && (pr < 0 || std::llabs(D(r, c)) < best)) {
          pr = r; pc = c; best = std::llabs(D(r, c));
        }
    if (pr < 0) break;  // trailing block is zero
    D.row(t).swap(D.row(pr));
    f.U.row(t).swap(f.U.row(pr));
    D.col(t).swap(D.col(pc));
    f.V.col(t).swap(f.V.col(pc));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < m; ++r) {
        long long q = D(r, t) / D(t, t);
        add_row_multiple(D, r, t, -q);
        add_row_multiple(f.U, r, t, -q);
        if (D(r, t) != 0) {
          // remainder smaller than pivot: swap up and restart
          D.row(t).swap(D.row(r));
          f.U.row(t).swap(f.U.row(r));
          clean = false;
        }
      }
      for (int c = t + 1; c < n; ++c) {
        long long q = D(t, c) / D(t, t);
        add_col_multiple(D, c, t, -q);
        add_col_multiple(f.V, c, t, -q);
        if (D(t, c) != 0) {
          D.col(t).swap(D.col(c));
          f.V.col(t).swap(f.V.col(c));
          clean = false;
        }
      }
    }
    // divisibility: pivot must divide every later entry
    bool redo = false;
    for (int r = t + 1; r < m && !redo; ++r)
      for (int c = t + 1; c < n && !redo; ++c)
        if (D(r, c) % D(t, t) != 0) {
          add_col_multiple(D, t, c, 1);
          add_col_multiple(f.V, t, c, 1);
          redo = true;
        }
    if (redo) continue;  // re-clear with the augmented pivot column
    if (D(t, t) < 0) {
      D.row(t) = -D.row(t);
      f.U.row(t) = -f.U.row(t);
    }
    ++t;
  }
  f.rank = t;
  for (int i = 0; i < t; ++i) f.diag.push_back(f.D(i, i));
  return f;
}

MatZ integer_kernel(const MatZ& A) {
  SmithForm f = smith_normal_form(A);
  const int n = int(A.cols());
  MatZ K(n, n - f.rank);
  for (int j = f.rank; j < n; ++j) K.col(j - f.rank) = f.V.col(j);
  return K;
}

std::optional<VecZ> solve_integer(const MatZ& A, const VecZ& b) {
  SmithForm f = smith_normal_form(A);
  VecZ ub = f.U * b;
  const int n = int(A.cols());
  VecZ y = VecZ::Zero(n);
  for (int i = 0; i < int(A.rows()); ++i) {
    if (i < f.rank) {
      if (ub(i) % f.D(i, i) != 0) return std::nullopt;
      y(i) = ub(i) / f.D(i, i);
    } else if (ub(i) != 0) {
      return std::nullopt;
    }
  }
  return f.V * y;
}

std::optional<MatZ> solve_integer_columns(const MatZ& A, const MatZ& B) {
  SmithForm f = smith_normal_form(A);
  const int n = int(A.cols());
  MatZ X(n, B.cols());
  for (int j = 0; j < int(B.cols()); ++j) {
    VecZ ub = f.U * B.col(j);
    VecZ y = VecZ::Zero(n);
    for (int i = 0; i < int(A.rows()); ++i) {
      if (i < f.rank) {
        if (ub(i) % f.D(i, i) != 0) return std::nullopt;
        y(i) = ub(i) / f.D(i, i);
      } else if (ub(i) != 0) {
        return std::nullopt;
      }
    }
    X.col(j) = f.V * y;
  }
  return X;
}

MatZ saturate_columns(const MatZ& A) {
  SmithForm f = smith_normal_form(A);
  // colspace_Q(A) = span_Q of the first `rank` columns of U^{-1}; those
  // columns of a unimodular matrix span a saturated lattice.
  MatZ Uinv = MatZ::Identity(A.rows(), A.rows());
  {
    // invert the unimodular U by solving U X = I over the integers via SNF of U
    auto X = solve_integer_columns(f.U, MatZ::Identity(A.rows(), A.rows()));
    require(X.has_value(), Error::Code::Internal, "unimodular inverse failed");
    Uinv = *X;
  }
  MatZ S(A.rows(), f.rank);
  for (int j = 0; j < f.rank; ++j) S.col(j) = Uinv.col(j);
  return S;
}

int rational_rank(const MatZ& A) { return smith_normal_form(A).rank; }

QuotientGroup::QuotientGroup(const MatZ& gens, const MatZ& rels) : gens_(gens) {
  const int r = int(gens.cols());
  MatZ Y;
  if (rels.cols() == 0) {
    Y = MatZ::Zero(r, 0);
  } else {
    auto sol = solve_integer_columns(gens, rels);
    require(sol.has_value(), Error::Code::Internal,
            "relations do not lie in the generated lattice");
    Y = *sol;
  }
  SmithForm f = smith_normal_form(Y);
  P_ = f.U;
  {
    auto X = solve_integer_columns(P_, MatZ::Identity(r, r));
    require(X.has_value(), Error::Code::Internal, "unimodular inverse failed");
    Pinv_ = *X;
  }
  diag_ = f.diag;
  for (int i = 0; i < r; ++i) {
    long long d = i < int(diag_.size()) ? diag_[i] : 0;
    if (d == 0) {
      free_pos_.push_back(i);
    } else if (d > 1) {
      factor_pos_.push_back(i);
      factors_.push_back(d);
    }
    // d == 1 entries are trivial and dropped
  }
  free_rank_ = int(free_pos_.size());
}

long long QuotientGroup::torsion_order() const {
  long long o = 1;
  for (long long d : factors_) o = o * d;
  return o;
}

std::vector<long long> QuotientGroup::coordinates(const VecZ& v) const {
  auto t = solve_integer(gens_, v);
  require(t.has_value(), Error::Code::Internal,
          "vector is not in the generated lattice");
  VecZ w = P_ * (*t);
  std::vector<long long> coords;
  for (size_t i = 0; i < factor_pos_.size(); ++i) {
    long long d = factors_[i];
    long long c = w(factor_pos_[i]) % d;
    if (c < 0) c += d;
    coords.push_back(c);
  }
  for (int i : free_pos_) coords.push_back(w(i));
  return coords;
}

bool QuotientGroup::is_zero_class(const VecZ& v) const {
  for (long long c : coordinates(v))
    if (c != 0) return false;
  return true;
}

VecZ QuotientGroup::representative(const std::vector<long long>& coords) const {
  require(int(coords.size()) == int(factor_pos_.size()) + free_rank_,
          Error::Code::Internal, "coordinate tuple has wrong length");
  const int r = int(gens_.cols());
  VecZ w = VecZ::Zero(r);
  for (size_t i = 0; i < factor_pos_.size(); ++i) w(factor_pos_[i]) = coords[i];
  for (size_t i = 0; i < free_pos_.size(); ++i)
    w(free_pos_[i]) = coords[factor_pos_.size() + i];
  return gens_ * (Pinv_ * w);
}

std::vector<std::vector<long long>> QuotientGroup::enumerate_classes() const {
  require(free_rank_ == 0, Error::Code::Internal,
          "cannot enumerate an infinite group");
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(factors_.size(), 0);
  while (true) {
    out.push_back(cur);
    int i = 0;
    for (; i < int(factors_.size()); ++i) {
      if (++cur[i] < factors_[i]) break;
      cur[i] = 0;
    }
    if (i == int(factors_.size())) break;
  }
  return out;
}

}  // namespace orientifold
