#pragma once
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "orientifold/intlinalg.hpp"
#include "orientifold/multivector.hpp"

namespace orientifold {

template <class S>
using MatS = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VecS = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatE = MatS<Exact>;
using MatC = MatS<CExact>;

// Element of Spin(n) recorded as an explicit even product of unit vectors;
// membership is certified by construction. The cached product drives all
// arithmetic.
template <class S>
struct SpinElementT {
  int n = 0;
  std::vector<MultiVector<S>> factors;  // grade-1 unit vectors
  MultiVector<S> mv;                    // product of the factors

  static SpinElementT identity(int n) {
    SpinElementT g;
    g.n = n;
    g.mv = MultiVector<S>::one(n);
    return g;
  }

  static SpinElementT from_factors(int n, std::vector<MultiVector<S>> fs) {
    SpinElementT g;
    g.n = n;
    g.factors = std::move(fs);
    require(g.factors.size() % 2 == 0, Error::Code::SampleNotRepresentable,
            "spin element needs an even number of factors");
    g.mv = MultiVector<S>::one(n);
    for (const auto& f : g.factors) {
      require(f.is_grade(1) || f.is_zero(), Error::Code::SampleNotRepresentable,
              "spin factor is not a vector");
      MultiVector<S> sq = f * f;
      require(sq == MultiVector<S>::scalar(n, ScalarOps<S>::from_int(-1)),
              Error::Code::SampleNotRepresentable, "spin factor is not a unit vector");
      g.mv = g.mv * f;
    }
    return g;
  }

  // Lift of the rotation e_i -> e_j, e_j -> -e_i: (1 + e_i e_j)/sqrt2,
  // realised as the product e_i * (e_j - e_i)/sqrt2.
  static SpinElementT rot90(int n, int i, int j);

  // Lift of diag(-1 at i, -1 at j): the blade e_i e_j.
  static SpinElementT pair_flip(int n, int i, int j) {
    return from_factors(n, {MultiVector<S>::e(n, i), MultiVector<S>::e(n, j)});
  }

  SpinElementT inverse() const {
    SpinElementT g;
    g.n = n;
    g.factors.assign(factors.rbegin(), factors.rend());
    g.mv = mv.reverse();
    return g;
  }

  SpinElementT negated() const {
    SpinElementT g = *this;
    if (g.factors.empty()) {
      auto e1 = MultiVector<S>::e(n, 1);
      g.factors = {e1, e1};  // e1*e1 = -1
    } else {
      g.factors[0] = -g.factors[0];
    }
    g.mv = -g.mv;
    return g;
  }

  friend SpinElementT operator*(const SpinElementT& a, const SpinElementT& b) {
    require(a.n == b.n, Error::Code::DimensionMismatch, "spin dimensions differ");
    SpinElementT g;
    g.n = a.n;
    g.factors = a.factors;
    g.factors.insert(g.factors.end(), b.factors.begin(), b.factors.end());
    g.mv = a.mv * b.mv;
    return g;
  }

  friend bool operator==(const SpinElementT& a, const SpinElementT& b) {
    return a.mv == b.mv;
  }

  // Embed Spin(n) -> Spin(n + shift) via e_k -> e_{k+shift}.
  SpinElementT shift_up(int shift) const {
    SpinElementT g;
    g.n = n + shift;
    for (const auto& f : factors) g.factors.push_back(f.shift_up(shift, g.n));
    g.mv = mv.shift_up(shift, g.n);
    return g;
  }
};

using SpinElement = SpinElementT<Exact>;

// Ad_g(x) = g x g^{-1}, returned as a vector.
template <class S>
VecS<S> adjoint(const SpinElementT<S>& g, const VecS<S>& x) {
  MultiVector<S> xv(g.n);
  for (int i = 0; i < g.n; ++i) xv.add_term(1u << i, x(i));
  MultiVector<S> r = (g.mv * xv) * g.mv.reverse();
  require(r.is_grade(1) || r.is_zero(), Error::Code::NotGrade1,
          "adjoint image is not a vector");
  VecS<S> out(g.n);
  for (int i = 0; i < g.n; ++i) out(i) = r.coeff(1u << i);
  return out;
}

template <class S>
MatS<S> adjoint_matrix(const SpinElementT<S>& g) {
  MatS<S> M(g.n, g.n);
  for (int j = 0; j < g.n; ++j) {
    VecS<S> e = VecS<S>::Zero(g.n);
    e(j) = ScalarOps<S>::from_int(1);
    M.col(j) = adjoint(g, e);
  }
  return M;
}

// Element of Spinc(n) = (Spin(n) x U(1)) / {+-(1,1)}. The canonical
// representative has circle value in [0, 1/2).
template <class S>
struct SpincElementT {
  SpinElementT<S> s;
  Turn z;

  static SpincElementT identity(int n) { return {SpinElementT<S>::identity(n), Turn()}; }
  static SpincElementT make(SpinElementT<S> g, Turn t) {
    SpincElementT p{std::move(g), t};
    p.canonicalize();
    return p;
  }

  void canonicalize() {
    if (!(z < Turn::half())) {
      s = s.negated();
      z = z - Turn::half();
    }
  }

  friend SpincElementT operator*(const SpincElementT& a, const SpincElementT& b) {
    return make(a.s * b.s, a.z + b.z);
  }
  SpincElementT inverse() const { return make(s.inverse(), -z); }

  friend bool operator==(const SpincElementT& a, const SpincElementT& b) {
    return a.z == b.z && a.s == b.s;
  }

  SpincElementT shift_up(int shift) const { return make(s.shift_up(shift), z); }
};

using SpincElement = SpincElementT<Exact>;

// kappa_eps on Spinc: [g, z] -> [g, eps z]; trivial on the Spin part.
template <class S>
SpincElementT<S> kappa_spinc(int eps, const SpincElementT<S>& p) {
  if (eps > 0) return p;
  return SpincElementT<S>::make(p.s, -p.z);
}

// Ad^c[g,z] = Ad(g); constant on classes.
template <class S>
MatS<S> adc(const SpincElementT<S>& p) {
  return adjoint_matrix(p.s);
}

// Elements of spin(n) + u(1) and so(n) + u(1) in the bases {e_i e_j} and
// {E_ij} (E_ij has +1 at (i,j), -1 at (j,i); 1-based i < j).
struct SpinU1 {
  std::map<std::pair<int, int>, Rat> biv;
  Rat u1;
  friend bool operator==(const SpinU1&, const SpinU1&) = default;
};
struct SoU1 {
  std::map<std::pair<int, int>, Rat> so;
  Rat u1;
  friend bool operator==(const SoU1&, const SoU1&) = default;
};

// (Ad^c x q)_*: (e_i e_j, t) -> (2 E_ij, 2t). Linear isomorphism.
SoU1 dadcxq(const SpinU1& a);
SpinU1 dadcxq_inv(const SoU1& a);
// The involutive actions (id + iota_eps)_* on both sides.
SpinU1 lie_involution(int eps, const SpinU1& a);
SoU1 lie_involution(int eps, const SoU1& a);

// --- signed permutation lifting ---------------------------------------------

bool is_signed_permutation(const MatZ& m);
long long signed_permutation_det(const MatZ& m);

// A Spin element whose adjoint matrix equals the given SO signed permutation;
// built from rot90 and pair_flip generators and verified before returning.
// The other lift is the negation.
SpinElement spin_lift_signed_perm(const MatZ& m);

MatE to_exact(const MatZ& m);
// Exact signed-permutation extraction of an adjoint matrix; errors if entries
// are not 0/+-1.
MatZ to_signed_perm(const MatE& m);

template <class S>
SpinElementT<S> SpinElementT<S>::rot90(int n, int i, int j) {
  require(i >= 1 && j >= 1 && i <= n && j <= n && i != j,
          Error::Code::DimensionMismatch, "rot90 indices out of range");
  auto ei = MultiVector<S>::e(n, i);
  auto ej = MultiVector<S>::e(n, j);
  S inv_r2 = ScalarOps<S>::from_int(1);
  if constexpr (ScalarOps<S>::is_exact) {
    if constexpr (ScalarOps<S>::is_complex) {
      inv_r2 = S(Exact(Rat(0), Rat(1, 2)));
    } else {
      inv_r2 = S(Rat(0), Rat(1, 2));  // sqrt2/2
    }
  } else {
    inv_r2 = S(1.0 / std::sqrt(2.0));
  }
  MultiVector<S> u = inv_r2 * (ej - ei);
  return from_factors(n, {ei, u});
}

}  // namespace orientifold
