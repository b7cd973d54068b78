#include "orientifold/cech.hpp"

#include <numeric>

namespace orientifold {

CechEngine::CechEngine(const EquivariantCover& cover, int max_degree)
    : cx_(cover, max_degree) {
  delta_twisted_.resize(max_degree);
  delta_plain_.resize(max_degree);
}

MatZ CechEngine::delta_matrix(int p, bool eps_twist) const {
  auto& cache = eps_twist ? delta_twisted_ : delta_plain_;
  require(p >= 0 && p < int(cache.size()), Error::Code::Internal,
          "coboundary degree out of range");
  if (!cache[p]) cache[p] = cx_.delta(p, eps_twist);
  return *cache[p];
}

Cochain CechEngine::zero_cochain(CoeffKind k, int degree) const {
  Cochain c;
  c.kind = k;
  c.degree = degree;
  if (k == CoeffKind::CircleRational)
    c.t.assign(cx_.cells(degree).size(), Turn());
  else
    c.z.assign(cx_.cells(degree).size(), 0);
  return c;
}

VecZ CechEngine::to_vector(const Cochain& c) const {
  require(c.kind != CoeffKind::CircleRational, Error::Code::Internal,
          "circle cochains have no integer vector form");
  VecZ v(int(c.z.size()));
  for (int i = 0; i < int(c.z.size()); ++i) v(i) = c.z[i];
  return v;
}

Cochain CechEngine::from_vector(CoeffKind k, int degree, const VecZ& v) const {
  Cochain c = zero_cochain(k, degree);
  require(int(v.size()) == int(c.z.size()), Error::Code::DomainMismatch,
          "vector does not match cell count");
  for (int i = 0; i < int(v.size()); ++i)
    c.z[i] = (k == CoeffKind::ZTwo) ? ((v(i) % 2 + 2) % 2) : v(i);
  return c;
}

bool CechEngine::is_cocycle(const Cochain& c) const {
  const int p = c.degree;
  if (c.kind == CoeffKind::CircleRational) {
    require(int(c.t.size()) == int(cx_.cells(p).size()), Error::Code::DomainMismatch,
            "cochain does not match the cover");
    const auto& g = cx_.cover().gamma;
    for (const Cell& cell : cx_.cells(p + 1)) {
      auto faces = cx_.bar_terms(cell);
      Turn acc;
      int global = (p == 0) ? -1 : 1;
      for (size_t i = 0; i < faces.size(); ++i) {
        int sign = faces[i].first * global;
        if (i == 0) sign *= g.sign(cell.gs[p]);
        acc += sign * c.t[cx_.cell_index(p, faces[i].second)];
      }
      if (!acc.is_zero()) return false;
    }
    return true;
  }
  MatZ D = delta_matrix(p, kind_uses_eps(c.kind));
  VecZ img = D * to_vector(c);
  for (int i = 0; i < img.size(); ++i) {
    long long v = img(i);
    if (c.kind == CoeffKind::ZTwo) v %= 2;
    if (v != 0) return false;
  }
  return true;
}

Cochain CechEngine::coboundary(const Cochain& c) const {
  const int p = c.degree;
  require(p <= 2, Error::Code::NonAbelianCoefficient,
          "coboundary implemented for degrees <= 2");
  Cochain out = zero_cochain(c.kind, p + 1);
  if (c.kind == CoeffKind::CircleRational) {
    const auto& g = cx_.cover().gamma;
    const auto& hi = cx_.cells(p + 1);
    for (int row = 0; row < int(hi.size()); ++row) {
      auto faces = cx_.bar_terms(hi[row]);
      Turn acc;
      int global = (p == 0) ? -1 : 1;
      for (size_t i = 0; i < faces.size(); ++i) {
        int sign = faces[i].first * global;
        if (i == 0) sign *= g.sign(hi[row].gs[p]);
        acc += sign * c.t[cx_.cell_index(p, faces[i].second)];
      }
      out.t[row] = acc;
    }
    return out;
  }
  MatZ D = delta_matrix(p, kind_uses_eps(c.kind));
  VecZ img = D * to_vector(c);
  for (int i = 0; i < img.size(); ++i)
    out.z[i] = (c.kind == CoeffKind::ZTwo) ? ((img(i) % 2 + 2) % 2) : img(i);
  return out;
}

CohomologyGroup CechEngine::cohomology(CoeffKind k, int p) const {
  CohomologyGroup h;
  h.kind = k;
  h.degree = p;
  if (k == CoeffKind::CircleRational) {
    // H^p(U(1), kappa) = (Q/Z)^{rank H^p(Z,iota)} + torsion H^{p+1}(Z,iota),
    // read off through the exponential sequence with Q in the middle.
    CohomologyGroup hz = cohomology(CoeffKind::IntegersTwisted, p);
    CohomologyGroup hz1 = cohomology(CoeffKind::IntegersTwisted, p + 1);
    h.divisible_rank = hz.free_rank;
    h.invariant_factors = hz1.invariant_factors;
    h.free_rank = 0;
    h.quo = hz1.quo;
    // circle representative for each torsion generator: solve d*w = delta(v)
    // and take v/d
    MatZ Dp = delta_matrix(p, true);
    for (size_t i = 0; i < h.invariant_factors.size(); ++i) {
      std::vector<long long> coords(h.invariant_factors.size() +
                                    hz1.free_rank, 0);
      coords[i] = 1;
      VecZ w = hz1.quo.representative(coords);
      long long d = h.invariant_factors[i];
      auto v = solve_integer(Dp, (d * w).eval());
      require(v.has_value(), Error::Code::Internal,
              "torsion representative has no integral preimage");
      Cochain rep = zero_cochain(k, p);
      for (int j = 0; j < v->size(); ++j) rep.t[j] = Turn((*v)(j), d);
      h.generators.push_back(std::move(rep));
    }
    return h;
  }

  const long long mod = (k == CoeffKind::ZTwo) ? 2 : 0;
  MatZ Dp = delta_matrix(p, kind_uses_eps(k));
  const int m = int(Dp.cols());           // cells at degree p
  const int mh = int(Dp.rows());          // cells at degree p+1
  MatZ gens;
  if (mod == 0) {
    gens = integer_kernel(Dp);
  } else {
    MatZ aug(mh, m + mh);
    aug.block(0, 0, mh, m) = Dp;
    aug.block(0, m, mh, mh) = mod * MatZ::Identity(mh, mh);
    MatZ K = integer_kernel(aug);
    gens = K.topRows(m);
  }
  MatZ rels;
  MatZ Dprev;
  if (p > 0) {
    Dprev = delta_matrix(p - 1, kind_uses_eps(k));
  } else {
    Dprev = MatZ::Zero(m, 0);
  }
  if (mod == 0) {
    rels = Dprev;
  } else {
    rels = MatZ(m, Dprev.cols() + m);
    rels.block(0, 0, m, Dprev.cols()) = Dprev;
    rels.block(0, Dprev.cols(), m, m) = mod * MatZ::Identity(m, m);
  }
  h.quo = QuotientGroup(gens, rels);
  h.invariant_factors = h.quo.invariant_factors();
  h.free_rank = h.quo.free_rank();
  // representative cocycles for the torsion generators
  for (size_t i = 0; i < h.invariant_factors.size(); ++i) {
    std::vector<long long> coords(h.invariant_factors.size() + h.free_rank, 0);
    coords[i] = 1;
    h.generators.push_back(from_vector(k, p, h.quo.representative(coords)));
  }
  return h;
}

std::vector<long long> CechEngine::class_coordinates(const CohomologyGroup& h,
                                                     const Cochain& c) const {
  require(c.kind == h.kind && c.degree == h.degree, Error::Code::DomainMismatch,
          "cochain does not match the cohomology group");
  require(c.kind != CoeffKind::CircleRational, Error::Code::Internal,
          "use circle_class functions for circle classes");
  require(is_cocycle(c), Error::Code::DomainMismatch, "not a cocycle");
  return h.quo.coordinates(to_vector(c));
}

bool CechEngine::circle_class_is_zero(const Cochain& c) const {
  require(c.kind == CoeffKind::CircleRational, Error::Code::Internal,
          "not a circle cochain");
  require(is_cocycle(c), Error::Code::DomainMismatch, "not a cocycle");
  const int p = c.degree;
  long long q = 1;
  for (const Turn& t : c.t) q = std::lcm(q, t.den);
  VecZ f(int(c.t.size()));
  for (int i = 0; i < int(c.t.size()); ++i) f(i) = c.t[i].num * (q / c.t[i].den);
  if (p == 0) {
    return f.isZero();
  }
  // zero iff f in sat(im delta_{p-1}) + q Z^m
  MatZ Dprev = delta_matrix(p - 1, true);
  MatZ sat = saturate_columns(Dprev);
  const int m = int(f.size());
  MatZ aug(m, sat.cols() + m);
  aug.block(0, 0, m, sat.cols()) = sat;
  aug.block(0, sat.cols(), m, m) = q * MatZ::Identity(m, m);
  return solve_integer(aug, f).has_value();
}

bool CechEngine::circle_classes_equal(const Cochain& a, const Cochain& b) const {
  require(a.degree == b.degree && a.t.size() == b.t.size(),
          Error::Code::DomainMismatch, "cochain shapes differ");
  Cochain d = a;
  for (size_t i = 0; i < d.t.size(); ++i) d.t[i] = a.t[i] - b.t[i];
  return circle_class_is_zero(d);
}

Cochain CechEngine::delta_exp(const Cochain& c) const {
  require(c.kind == CoeffKind::CircleRational, Error::Code::Internal,
          "delta_exp expects a circle cochain");
  require(is_cocycle(c), Error::Code::DomainMismatch, "not a cocycle");
  const int p = c.degree;
  const auto& g = cx_.cover().gamma;
  Cochain out = zero_cochain(CoeffKind::IntegersTwisted, p + 1);
  const auto& hi = cx_.cells(p + 1);
  for (int row = 0; row < int(hi.size()); ++row) {
    auto faces = cx_.bar_terms(hi[row]);
    Rat acc(0);
    int global = (p == 0) ? -1 : 1;
    for (size_t i = 0; i < faces.size(); ++i) {
      int sign = faces[i].first * global;
      if (i == 0) sign *= g.sign(hi[row].gs[p]);
      Rat lift = c.t[cx_.cell_index(p, faces[i].second)].to_rat();
      acc += Rat(sign) * lift;
    }
    require(acc.is_integer(), Error::Code::Internal,
            "lifted coboundary of a circle cocycle must be integral");
    out.z[row] = acc.num;
  }
  return out;
}

// --- group ops ----------------------------------------------------------------

GroupOps<MatZ> so_ops(int n) {
  GroupOps<MatZ> ops;
  ops.mul = [](const MatZ& a, const MatZ& b) { return MatZ(a * b); };
  ops.inv = [](const MatZ& a) { return MatZ(a.transpose()); };
  ops.twist = [](int, const MatZ& a) { return a; };
  ops.eq = [](const MatZ& a, const MatZ& b) { return a == b; };
  ops.id = MatZ::Identity(n, n);
  return ops;
}

GroupOps<Turn> circle_ops() {
  GroupOps<Turn> ops;
  ops.mul = [](const Turn& a, const Turn& b) { return a + b; };
  ops.inv = [](const Turn& a) { return -a; };
  ops.twist = [](int eps, const Turn& a) { return eps < 0 ? -a : a; };
  ops.eq = [](const Turn& a, const Turn& b) { return a == b; };
  ops.id = Turn();
  return ops;
}

GroupOps<SpincElement> spinc_ops(int n) {
  GroupOps<SpincElement> ops;
  ops.mul = [](const SpincElement& a, const SpincElement& b) { return a * b; };
  ops.inv = [](const SpincElement& a) { return a.inverse(); };
  ops.twist = [](int eps, const SpincElement& a) { return kappa_spinc(eps, a); };
  ops.eq = [](const SpincElement& a, const SpincElement& b) { return a == b; };
  ops.id = SpincElement::identity(n);
  return ops;
}

// --- connecting maps ----------------------------------------------------------

ConnectingResult delta_s(const CechEngine& eng, const SoCochain& phi,
                         const CohomologyGroup& h2_z2) {
  const CellComplex& cx = eng.complex();
  require(int(phi.v.size()) == int(cx.cells(1).size()), Error::Code::DomainMismatch,
          "cochain does not match the cover");
  std::vector<SpinElement> lift;
  lift.reserve(phi.v.size());
  for (const MatZ& m : phi.v) lift.push_back(spin_lift_signed_perm(m));

  GroupOps<SpinElement> ops;
  ops.mul = [](const SpinElement& a, const SpinElement& b) { return a * b; };
  ops.inv = [](const SpinElement& a) { return a.inverse(); };
  ops.twist = [](int, const SpinElement& a) { return a; };
  ops.eq = [](const SpinElement& a, const SpinElement& b) { return a == b; };
  ops.id = SpinElement::identity(phi.n);

  auto word = coboundary_word(cx, lift, ops);
  ConnectingResult r;
  r.cochain = eng.zero_cochain(CoeffKind::ZTwo, 2);
  const auto one = MultiVector<Exact>::one(phi.n);
  for (size_t i = 0; i < word.size(); ++i) {
    if (word[i].mv == one) {
      r.cochain.z[i] = 0;
    } else if (word[i].mv == -one) {
      r.cochain.z[i] = 1;
    } else {
      fail(Error::Code::Internal, "spin failure word is not central");
    }
  }
  require(eng.is_cocycle(r.cochain), Error::Code::Internal,
          "delta_s image is not a cocycle");
  r.class_coords = eng.class_coordinates(h2_z2, r.cochain);
  r.zero_class = std::all_of(r.class_coords.begin(), r.class_coords.end(),
                             [](long long c) { return c == 0; });
  return r;
}

ConnectingResult delta_u(const CechEngine& eng, const TurnCochain& psi,
                         const CohomologyGroup& h2_z2) {
  const CellComplex& cx = eng.complex();
  require(int(psi.v.size()) == int(cx.cells(1).size()), Error::Code::DomainMismatch,
          "cochain does not match the cover");
  Cochain in = eng.zero_cochain(CoeffKind::CircleRational, 1);
  in.t = psi.v;
  require(eng.is_cocycle(in), Error::Code::DomainMismatch,
          "delta_u expects a circle cocycle");
  // halve each value, then take the coboundary of the lift
  Cochain half = eng.zero_cochain(CoeffKind::CircleRational, 1);
  for (size_t i = 0; i < psi.v.size(); ++i)
    half.t[i] = Turn(psi.v[i].num, 2 * psi.v[i].den);
  Cochain d = eng.coboundary(half);
  ConnectingResult r;
  r.cochain = eng.zero_cochain(CoeffKind::ZTwo, 2);
  for (size_t i = 0; i < d.t.size(); ++i) {
    if (d.t[i].is_zero()) {
      r.cochain.z[i] = 0;
    } else if (d.t[i] == Turn::half()) {
      r.cochain.z[i] = 1;
    } else {
      fail(Error::Code::Internal, "squaring-lift failure word is not in Z2");
    }
  }
  require(eng.is_cocycle(r.cochain), Error::Code::Internal,
          "delta_u image is not a cocycle");
  r.class_coords = eng.class_coordinates(h2_z2, r.cochain);
  r.zero_class = std::all_of(r.class_coords.begin(), r.class_coords.end(),
                             [](long long c) { return c == 0; });
  return r;
}

Cochain delta_sc(const CechEngine& eng, const SoCochain& phi) {
  const CellComplex& cx = eng.complex();
  require(int(phi.v.size()) == int(cx.cells(1).size()), Error::Code::DomainMismatch,
          "cochain does not match the cover");
  std::vector<SpincElement> lift;
  lift.reserve(phi.v.size());
  for (const MatZ& m : phi.v)
    lift.push_back(SpincElement::make(spin_lift_signed_perm(m), Turn()));
  auto word = coboundary_word(cx, lift, spinc_ops(phi.n));
  Cochain out = eng.zero_cochain(CoeffKind::CircleRational, 2);
  const auto one = MultiVector<Exact>::one(phi.n);
  for (size_t i = 0; i < word.size(); ++i) {
    if (word[i].s.mv == one) {
      out.t[i] = word[i].z;
    } else if (word[i].s.mv == -one) {
      out.t[i] = word[i].z + Turn::half();
    } else {
      fail(Error::Code::Internal, "spinc failure word is not in U(1)");
    }
  }
  require(eng.is_cocycle(out), Error::Code::Internal,
          "delta_sc image is not a cocycle");
  return out;
}

// --- GL-valued cocycle operations ----------------------------------------------

GlCochain gl_identity_cochain(const CechEngine& eng, int m) {
  GlCochain c;
  c.m = m;
  c.v.assign(eng.complex().cells(1).size(), MatC::Identity(m, m));
  return c;
}

GlCochain gl_from_so(const CechEngine& eng, const SoCochain& phi) {
  GlCochain c;
  c.m = phi.n;
  c.v.reserve(phi.v.size());
  for (const MatZ& m : phi.v) {
    MatC g(phi.n, phi.n);
    for (int i = 0; i < phi.n; ++i)
      for (int j = 0; j < phi.n; ++j) g(i, j) = CExact(Exact(m(i, j)));
    c.v.push_back(std::move(g));
  }
  (void)eng;
  return c;
}

static MatC conj_mat(const MatC& m) {
  MatC r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
  return r;
}

bool gl_cocycle_condition(const CechEngine& eng, const GlCochain& phi) {
  GroupOps<MatC> ops;
  ops.mul = [](const MatC& a, const MatC& b) { return MatC(a * b); };
  ops.inv = [](const MatC& a) { return invert_matc(a); };
  ops.twist = [](int eps, const MatC& a) { return eps < 0 ? conj_mat(a) : a; };
  ops.eq = [](const MatC& a, const MatC& b) { return a == b; };
  ops.id = MatC::Identity(phi.m, phi.m);
  return cocycle_condition(eng.complex(), phi.v, ops);
}

MatC invert_matc(const MatC& m) {
  const int n = int(m.rows());
  MatC a = m;
  MatC inv = MatC::Identity(n, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!a(r, c).is_zero()) { piv = r; break; }
    require(piv >= 0, Error::Code::Internal, "singular matrix in dual cocycle");
    a.row(c).swap(a.row(piv));
    inv.row(c).swap(inv.row(piv));
    CExact p = a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) = a(c, j) / p;
      inv(c, j) = inv(c, j) / p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      CExact f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(c, j);
        inv(r, j) = inv(r, j) - f * inv(c, j);
      }
    }
  }
  return inv;
}

GlCochain gl_dual(const GlCochain& phi) {
  GlCochain r;
  r.m = phi.m;
  for (const MatC& v : phi.v) r.v.push_back(invert_matc(MatC(v.transpose())));
  return r;
}

GlCochain gl_direct_sum(const GlCochain& a, const GlCochain& b) {
  require(a.v.size() == b.v.size(), Error::Code::CoverMismatch,
          "direct sum over different covers");
  GlCochain r;
  r.m = a.m + b.m;
  for (size_t i = 0; i < a.v.size(); ++i) {
    MatC m = MatC::Zero(r.m, r.m);
    m.block(0, 0, a.m, a.m) = a.v[i];
    m.block(a.m, a.m, b.m, b.m) = b.v[i];
    r.v.push_back(std::move(m));
  }
  return r;
}

GlCochain gl_tensor(const GlCochain& a, const GlCochain& b) {
  require(a.v.size() == b.v.size(), Error::Code::CoverMismatch,
          "tensor product over different covers");
  GlCochain r;
  r.m = a.m * b.m;
  for (size_t i = 0; i < a.v.size(); ++i) {
    MatC m(r.m, r.m);
    for (int p = 0; p < a.m; ++p)
      for (int q = 0; q < a.m; ++q)
        for (int s = 0; s < b.m; ++s)
          for (int t2 = 0; t2 < b.m; ++t2)
            m(p * b.m + s, q * b.m + t2) = a.v[i](p, q) * b.v[i](s, t2);
    r.v.push_back(std::move(m));
  }
  return r;
}

PullbackResult pullback_cover(const EquivariantCover& target,
                              const std::vector<int>& point_map, int npoints_src,
                              const std::vector<std::vector<int>>& src_point_act) {
  require(int(point_map.size()) == npoints_src, Error::Code::CoverMismatch,
          "point map has wrong size");
  // equivariance f(gamma x') = gamma f(x')
  for (int g = 0; g < target.gamma.size(); ++g)
    for (int x = 0; x < npoints_src; ++x)
      require(point_map[src_point_act[g][x]] == target.point_act[g][point_map[x]],
              Error::Code::CoverMismatch, "point map is not equivariant");
  PullbackResult r;
  r.point_map = point_map;
  r.cover.gamma = target.gamma;
  r.cover.npoints = npoints_src;
  r.cover.point_act = src_point_act;
  r.cover.set_act = target.set_act;
  r.cover.sets.resize(target.nsets());
  for (int a = 0; a < target.nsets(); ++a)
    for (int x = 0; x < npoints_src; ++x)
      if (target.in_set(a, point_map[x])) r.cover.sets[a].push_back(x);
  r.cover.validate();
  return r;
}

GlCochain gl_pullback(const CechEngine& src_eng, const CechEngine& dst_eng,
                      const std::vector<int>& point_map, const GlCochain& phi) {
  GlCochain r;
  r.m = phi.m;
  for (const Cell& c : dst_eng.complex().cells(1)) {
    Cell s = c;
    s.x = point_map[c.x];
    r.v.push_back(phi.v[src_eng.complex().cell_index(1, s)]);
  }
  return r;
}

}  // namespace orientifold
