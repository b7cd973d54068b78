#include "orientifold/spin.hpp"

namespace orientifold {

SoU1 dadcxq(const SpinU1& a) {
  SoU1 r;
  for (const auto& [ij, c] : a.biv) r.so[ij] = Rat(2) * c;
  r.u1 = Rat(2) * a.u1;
  return r;
}

SpinU1 dadcxq_inv(const SoU1& a) {
  SpinU1 r;
  for (const auto& [ij, c] : a.so) r.biv[ij] = c / Rat(2);
  r.u1 = a.u1 / Rat(2);
  return r;
}

SpinU1 lie_involution(int eps, const SpinU1& a) {
  SpinU1 r = a;
  if (eps < 0) r.u1 = -r.u1;
  return r;
}

SoU1 lie_involution(int eps, const SoU1& a) {
  SoU1 r = a;
  if (eps < 0) r.u1 = -r.u1;
  return r;
}

bool is_signed_permutation(const MatZ& m) {
  if (m.rows() != m.cols()) return false;
  const int n = int(m.rows());
  for (int c = 0; c < n; ++c) {
    int nz = 0;
    for (int r = 0; r < n; ++r) {
      if (m(r, c) == 0) continue;
      if (m(r, c) != 1 && m(r, c) != -1) return false;
      ++nz;
    }
    if (nz != 1) return false;
  }
  for (int r = 0; r < n; ++r) {
    int nz = 0;
    for (int c = 0; c < n; ++c)
      if (m(r, c) != 0) ++nz;
    if (nz != 1) return false;
  }
  return true;
}

long long signed_permutation_det(const MatZ& m) {
  const int n = int(m.rows());
  std::vector<int> perm(n);
  long long sign = 1;
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (m(r, c) != 0) {
        perm[c] = r;
        sign *= m(r, c);
      }
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

MatE to_exact(const MatZ& m) {
  MatE r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Exact(m(i, j));
  return r;
}

MatZ to_signed_perm(const MatE& m) {
  MatZ r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Exact& v = m(i, j);
      require(v.b.is_zero() && v.a.is_integer(), Error::Code::UnliftableValue,
              "matrix entry is not an integer");
      r(i, j) = v.a.num;
    }
  require(is_signed_permutation(r), Error::Code::UnliftableValue,
          "matrix is not a signed permutation");
  return r;
}

SpinElement spin_lift_signed_perm(const MatZ& m) {
  require(is_signed_permutation(m), Error::Code::UnliftableValue,
          "only signed permutation rotations are liftable in exact mode");
  require(signed_permutation_det(m) == 1, Error::Code::UnliftableValue,
          "matrix is not in SO(n)");
  const int n = int(m.rows());
  // Reduce A to the identity by left-multiplying inverse generator adjoints,
  // keeping the invariant m = Ad(L) * A.
  MatZ A = m;
  SpinElement L = SpinElement::identity(n);
  for (int i = 0; i < n; ++i) {
    int j = -1;
    for (int r = 0; r < n; ++r)
      if (A(r, i) != 0) j = r;
    if (j != i) {
      // g = rot90(i+1, j+1): Ad(g) e_i = e_j, e_j = -e_i. Then
      // Ad(g)^{-1} moves the nonzero of column i from row j to row i.
      SpinElement g = SpinElement::rot90(n, i + 1, j + 1);
      MatZ R = MatZ::Zero(n, n);
      for (int k = 0; k < n; ++k) R(k, k) = 1;
      R(i, i) = R(j, j) = 0;
      R(j, i) = 1;   // e_i -> e_j
      R(i, j) = -1;  // e_j -> -e_i
      // A <- R^{-1} A = R^T A
      A = (R.transpose() * A).eval();
      L = L * g;
    }
  }
  // A is now diagonal +-1 with an even number of -1 entries.
  std::vector<int> neg;
  for (int i = 0; i < n; ++i)
    if (A(i, i) < 0) neg.push_back(i);
  require(neg.size() % 2 == 0, Error::Code::Internal, "odd sign count after reduction");
  for (size_t k = 0; k + 1 < neg.size(); k += 2) {
    L = L * SpinElement::pair_flip(n, neg[k] + 1, neg[k + 1] + 1);
  }
  // self-check: the construction must reproduce m exactly
  MatZ back = to_signed_perm(adjoint_matrix(L));
  require(back == m, Error::Code::Internal, "signed permutation lift failed");
  return L;
}

}  // namespace orientifold
