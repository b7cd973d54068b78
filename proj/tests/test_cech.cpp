#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orientifold/cech.hpp"

using namespace orientifold;

namespace {

EquivariantCover two_point_swap() {
  EquivariantCover c;
  c.gamma = builtin_group("z2");
  c.npoints = 2;
  c.point_act = {{0, 1}, {1, 0}};
  c.sets = {{0}, {1}};
  c.set_act = {{0, 1}, {1, 0}};
  return c;
}

EquivariantCover three_point_overlap() {
  // X = {0,1,2}, gamma = z2 fixing 1 and swapping 0 <-> 2; two sets
  // {0,1} and {1,2} swapped by gamma; the middle point sits in both.
  EquivariantCover c;
  c.gamma = builtin_group("z2");
  c.npoints = 3;
  c.point_act = {{0, 1, 2}, {2, 1, 0}};
  c.sets = {{0, 1}, {1, 2}};
  c.set_act = {{0, 1}, {1, 0}};
  return c;
}

std::vector<long long> factors(const CohomologyGroup& h) { return h.invariant_factors; }

}  // namespace

TEST_CASE("real point: H^p(Z, iota) = 0, Z/2, 0, Z/2 and oracle agreement") {
  auto g = builtin_group("z2");
  CechEngine eng(EquivariantCover::point_base(g), 4);
  std::vector<std::vector<long long>> expect = {{}, {2}, {}, {2}};
  for (int p = 0; p <= 3; ++p) {
    auto h = eng.cohomology(CoeffKind::IntegersTwisted, p);
    CHECK(factors(h) == expect[p]);
    CHECK(h.free_rank == 0);
    auto o = oracle::bar_cohomology(g, true, 0, p);
    CHECK(o.factors == factors(h));
    CHECK(o.free_rank == h.free_rank);
  }
}

TEST_CASE("real point, untwisted Z: H^2 = Z/2") {
  auto g = plain_action_group(builtin_group("z2").g);
  CechEngine eng(EquivariantCover::point_base(g), 4);
  auto h2 = eng.cohomology(CoeffKind::IntegersTwisted, 2);
  CHECK(factors(h2) == std::vector<long long>{2});
  auto o = oracle::bar_cohomology(g, false, 0, 2);
  CHECK(o.factors == factors(h2));
}

TEST_CASE("H^0 with (Z, iota) is the fixed subgroup, 0 over a point") {
  for (const char* name : {"z2", "h4-q", "q8"}) {
    auto g = builtin_group(name);
    CechEngine eng(EquivariantCover::point_base(g), 2);
    auto h0 = eng.cohomology(CoeffKind::IntegersTwisted, 0);
    CHECK(h0.free_rank == 0);
    CHECK(factors(h0).empty());
  }
}

TEST_CASE("bar oracle agreement across groups, kinds, and degrees") {
  for (const char* name : {"z2", "h4-q", "z2xz2"}) {
    auto g = builtin_group(name);
    CechEngine eng(EquivariantCover::point_base(g), 4);
    for (int p = 0; p <= 3; ++p) {
      auto hz = eng.cohomology(CoeffKind::IntegersTwisted, p);
      auto oz = oracle::bar_cohomology(g, true, 0, p);
      CHECK(factors(hz) == oz.factors);
      CHECK(hz.free_rank == oz.free_rank);
      auto h2 = eng.cohomology(CoeffKind::ZTwo, p);
      auto o2 = oracle::bar_cohomology(g, false, 2, p);
      CHECK(factors(h2) == o2.factors);
      CHECK(h2.free_rank == o2.free_rank);
    }
  }
}

TEST_CASE("delta o delta = 0 exhaustively on all test covers") {
  auto covers = {EquivariantCover::point_base(builtin_group("z2")),
                 EquivariantCover::point_base(builtin_group("h4-q")),
                 two_point_swap(), three_point_overlap()};
  for (const auto& cover : covers) {
    CechEngine eng(cover, 4);
    CHECK(eng.complex().total_cells() <= 3000);
    for (bool twist : {false, true})
      for (int p = 0; p + 1 < 4; ++p) {
        MatZ a = eng.delta_matrix(p + 1, twist);
        MatZ b = eng.delta_matrix(p, twist);
        CHECK((a * b).isZero());
      }
  }
}

TEST_CASE("coboundary of a degree-0 integer cochain over the real point") {
  auto g = builtin_group("z2");
  CechEngine eng(EquivariantCover::point_base(g), 4);
  VecZ m(1);
  m << 1;
  Cochain c = eng.from_vector(CoeffKind::IntegersTwisted, 0, m);
  Cochain d = eng.coboundary(c);
  // delta(m)(gamma) = m - iota_gamma(m): 0 at gamma=+1, 2 at gamma=-1
  const auto& cells = eng.complex().cells(1);
  for (size_t i = 0; i < cells.size(); ++i)
    CHECK(d.z[i] == (cells[i].gs[0] == 1 ? 2 : 0));
  // delta of identity cochain is the identity cochain
  Cochain zero = eng.zero_cochain(CoeffKind::IntegersTwisted, 1);
  CHECK(eng.coboundary(zero).z == eng.zero_cochain(CoeffKind::IntegersTwisted, 2).z);
}

TEST_CASE("circle cocycle condition over a point: kappa twist vs trivial twist") {
  auto z2 = builtin_group("z2");
  CechEngine twisted(EquivariantCover::point_base(z2), 4);
  auto ops = circle_ops();
  const auto& cells = twisted.complex().cells(1);
  REQUIRE(cells.size() == 2);
  int minus_cell = cells[0].gs[0] == 1 ? 0 : 1;

  // with the kappa twist, phi(-1) = t passes for every t
  for (Turn t : {Turn(), Turn::half(), Turn(1, 4), Turn(3, 8)}) {
    std::vector<Turn> v(2);
    v[minus_cell] = t;
    CHECK(cocycle_condition(twisted.complex(), v, ops));
  }
  // with the trivial twist (plain equivariant circle), 2t = 0 is forced
  auto plain = plain_action_group(z2.g);
  CechEngine untwisted(EquivariantCover::point_base(plain), 4);
  GroupOps<Turn> plain_ops = circle_ops();  // twist keyed off eps, all +1 here
  const auto& pcells = untwisted.complex().cells(1);
  int pminus = pcells[0].gs[0] == 1 ? 0 : 1;
  for (auto [t, ok] : std::initializer_list<std::pair<Turn, bool>>{
           {Turn(), true}, {Turn::half(), true}, {Turn(1, 4), false}}) {
    std::vector<Turn> v(2);
    v[pminus] = t;
    CHECK(cocycle_condition(untwisted.complex(), v, plain_ops) == ok);
  }
  // brute-force classification at denominator 8 agrees with the law
  for (int k = 0; k < 8; ++k) {
    std::vector<Turn> v(2);
    v[minus_cell] = Turn(k, 8);
    bool law = true;  // kappa-twisted law holds for all values
    CHECK(cocycle_condition(twisted.complex(), v, ops) == law);
  }
}

TEST_CASE("circle cohomology through the exponential sequence") {
  auto g = builtin_group("z2");
  CechEngine eng(EquivariantCover::point_base(g), 4);
  // H^1(U(1), kappa) = 0: the divisible circle kills the Z/2 seen at any
  // fixed denominator bound
  auto h1 = eng.cohomology(CoeffKind::CircleRational, 1);
  CHECK(h1.invariant_factors.empty());
  CHECK(h1.divisible_rank == 0);
  // H^2(U(1), kappa) = Z/2 = H^3(Z, iota)
  auto h2 = eng.cohomology(CoeffKind::CircleRational, 2);
  CHECK(h2.invariant_factors == std::vector<long long>{2});
  CHECK(h2.divisible_rank == 0);
  REQUIRE(h2.generators.size() == 1);
  const Cochain& gen = h2.generators[0];
  CHECK(eng.is_cocycle(gen));
  CHECK_FALSE(eng.circle_class_is_zero(gen));
  // the generator maps to the generator of H^3(Z, iota)
  auto h3z = eng.cohomology(CoeffKind::IntegersTwisted, 3);
  Cochain w = eng.delta_exp(gen);
  auto coords = eng.class_coordinates(h3z, w);
  CHECK(coords == std::vector<long long>{1});
}

TEST_CASE("delta_exp kills coboundaries and the zero class") {
  auto g = builtin_group("z2");
  CechEngine eng(EquivariantCover::point_base(g), 4);
  auto h2z = eng.cohomology(CoeffKind::IntegersTwisted, 2);
  // zero class maps to zero
  Cochain zero = eng.zero_cochain(CoeffKind::CircleRational, 1);
  CHECK(eng.circle_class_is_zero(zero));
  Cochain img = eng.delta_exp(zero);
  CHECK(eng.class_coordinates(h2z, img) == std::vector<long long>(0));
  // a circle coboundary in degree 1 is a nonzero cochain but a zero class
  Cochain s = eng.zero_cochain(CoeffKind::CircleRational, 0);
  s.t[0] = Turn(1, 8);
  Cochain b = eng.coboundary(s);
  CHECK(eng.is_cocycle(b));
  CHECK(eng.circle_class_is_zero(b));
}

TEST_CASE("divisible part shows up on the free-orbit cover") {
  CechEngine eng(two_point_swap(), 3);
  // H^0(Z, iota) on the swapped two-point space is free of rank 1
  auto h0z = eng.cohomology(CoeffKind::IntegersTwisted, 0);
  CHECK(h0z.free_rank == 1);
  CHECK(factors(h0z).empty());
  // so H^0(U(1), kappa) has divisible rank 1
  auto h0c = eng.cohomology(CoeffKind::CircleRational, 0);
  CHECK(h0c.divisible_rank == 1);
  // free orbit: all higher cohomology vanishes (Shapiro: induced module)
  for (int p = 1; p <= 2; ++p) {
    auto hp = eng.cohomology(CoeffKind::IntegersTwisted, p);
    CHECK(hp.free_rank == 0);
    CHECK(factors(hp).empty());
  }
}

TEST_CASE("delta_s over the real point distinguishes R180 from the identity") {
  auto g = builtin_group("z2");
  CechEngine eng(EquivariantCover::point_base(g), 4);
  auto h2 = eng.cohomology(CoeffKind::ZTwo, 2);
  CHECK(factors(h2) == std::vector<long long>{2});

  const int n = 2;
  SoCochain phi;
  phi.n = n;
  phi.v.assign(2, MatZ::Identity(n, n));
  REQUIRE(cocycle_condition(eng.complex(), phi.v, so_ops(n)));
  auto r_id = delta_s(eng, phi, h2);
  CHECK(r_id.zero_class);  // identity cocycle -> zero class

  const auto& cells = eng.complex().cells(1);
  int minus_cell = cells[0].gs[0] == 1 ? 0 : 1;
  MatZ r180 = MatZ::Identity(n, n);
  r180(0, 0) = r180(1, 1) = -1;
  phi.v[minus_cell] = r180;
  REQUIRE(cocycle_condition(eng.complex(), phi.v, so_ops(n)));
  auto r = delta_s(eng, phi, h2);
  CHECK_FALSE(r.zero_class);  // (e1 e2)^2 = -1 obstructs the lift

  // lift independence: flip every subset of lift signs by composing with a
  // Z2-valued cochain; the class is unchanged
  std::vector<SpinElement> base;
  for (const MatZ& m : phi.v) base.push_back(spin_lift_signed_perm(m));
  GroupOps<SpinElement> sops;
  sops.mul = [](const SpinElement& a, const SpinElement& b) { return a * b; };
  sops.inv = [](const SpinElement& a) { return a.inverse(); };
  sops.twist = [](int, const SpinElement& a) { return a; };
  sops.eq = [](const SpinElement& a, const SpinElement& b) { return a == b; };
  sops.id = SpinElement::identity(n);
  const auto one = MultiVector<Exact>::one(n);
  for (int mask = 0; mask < 4; ++mask) {
    auto lift = base;
    for (int i = 0; i < 2; ++i)
      if (mask & (1 << i)) lift[i] = lift[i].negated();
    // identity cells must stay at the identity to remain a valid lift word
    if (!(lift[1 - minus_cell] == sops.id)) continue;
    auto word = coboundary_word(eng.complex(), lift, sops);
    Cochain c = eng.zero_cochain(CoeffKind::ZTwo, 2);
    for (size_t i = 0; i < word.size(); ++i) {
      REQUIRE((word[i].mv == one || word[i].mv == -one));
      c.z[i] = word[i].mv == one ? 0 : 1;
    }
    CHECK(eng.class_coordinates(h2, c) == r.class_coords);
  }
}

TEST_CASE("delta_u over the real point") {
  auto g = builtin_group("z2");
  CechEngine eng(EquivariantCover::point_base(g), 4);
  auto h2 = eng.cohomology(CoeffKind::ZTwo, 2);
  const auto& cells = eng.complex().cells(1);
  int minus_cell = cells[0].gs[0] == 1 ? 0 : 1;

  TurnCochain psi;
  psi.v.assign(2, Turn());
  auto r0 = delta_u(eng, psi, h2);
  CHECK(r0.zero_class);  // zero cocycle -> zero class

  psi.v[minus_cell] = Turn::half();
  auto r = delta_u(eng, psi, h2);
  // 1/2 = q(1/4) is in the image of the squaring map, so the class vanishes
  CHECK(r.zero_class);

  // exactness spot check at denominator 8: psi in im(q) iff delta_u(psi) = 0
  for (int k = 0; k < 8; ++k) {
    TurnCochain p2;
    p2.v.assign(2, Turn());
    p2.v[minus_cell] = Turn(k, 8);
    Cochain in = eng.zero_cochain(CoeffKind::CircleRational, 1);
    in.t = p2.v;
    if (!eng.is_cocycle(in)) continue;
    auto ru = delta_u(eng, p2, h2);
    // search for a square root cocycle at denominator 16
    bool has_root = false;
    for (int j = 0; j < 16 && !has_root; ++j) {
      std::vector<Turn> root(2);
      root[minus_cell] = Turn(j, 16);
      if (!cocycle_condition(eng.complex(), root, circle_ops())) continue;
      if (root[minus_cell] + root[minus_cell] == Turn(k, 8)) has_root = true;
    }
    CHECK(ru.zero_class == has_root);
  }
}

TEST_CASE("delta_sc over the real point: R180 is obstructed") {
  auto g = builtin_group("z2");
  CechEngine eng(EquivariantCover::point_base(g), 4);
  const int n = 2;
  const auto& cells = eng.complex().cells(1);
  int minus_cell = cells[0].gs[0] == 1 ? 0 : 1;

  SoCochain phi;
  phi.n = n;
  phi.v.assign(2, MatZ::Identity(n, n));
  Cochain c0 = delta_sc(eng, phi);
  CHECK(eng.circle_class_is_zero(c0));  // identity -> zero class

  MatZ r180 = MatZ::Identity(n, n);
  r180(0, 0) = r180(1, 1) = -1;
  phi.v[minus_cell] = r180;
  Cochain c = delta_sc(eng, phi);
  CHECK(eng.is_cocycle(c));
  CHECK_FALSE(eng.circle_class_is_zero(c));
  // its integral image is the H^3 generator (the W3 class)
  auto h3 = eng.cohomology(CoeffKind::IntegersTwisted, 3);
  CHECK(eng.class_coordinates(h3, eng.delta_exp(c)) == std::vector<long long>{1});
}

TEST_CASE("gl cocycle operations") {
  auto g = builtin_group("z2");
  CechEngine eng(EquivariantCover::point_base(g), 4);
  auto id1 = gl_identity_cochain(eng, 1);
  CHECK(gl_cocycle_condition(eng, id1));
  // dual(identity) = identity
  auto d = gl_dual(id1);
  for (size_t i = 0; i < d.v.size(); ++i) CHECK(d.v[i] == id1.v[i]);

  // a genuine corepresentation: phi(-1) = R90 in GL(2,C) ... as an SO cocycle
  // value over h4-q where the cocycle law allows order-4 images
  auto h4 = builtin_group("h4-q");
  CechEngine eng4(EquivariantCover::point_base(h4), 4);
  SoCochain so;
  so.n = 2;
  so.v.assign(eng4.complex().cells(1).size(), MatZ::Identity(2, 2));
  MatZ r90(2, 2);
  r90 << 0, -1, 1, 0;
  // phi(i^k) = R90^k is a homomorphism, hence a cocycle for id_eps
  const auto& cells4 = eng4.complex().cells(1);
  for (size_t i = 0; i < cells4.size(); ++i) {
    MatZ m = MatZ::Identity(2, 2);
    for (int k = 0; k < cells4[i].gs[0]; ++k) m = MatZ(r90 * m);
    so.v[i] = m;
  }
  REQUIRE(cocycle_condition(eng4.complex(), so.v, so_ops(2)));
  auto gl = gl_from_so(eng4, so);
  CHECK(gl_cocycle_condition(eng4, gl));
  CHECK(gl_cocycle_condition(eng4, gl_dual(gl)));
  CHECK(gl_cocycle_condition(eng4, gl_direct_sum(gl, gl)));
  CHECK(gl_cocycle_condition(eng4, gl_tensor(gl, gl)));
  // tensor with the 1x1 identity is the original up to index bijection
  auto t = gl_tensor(gl, gl_identity_cochain(eng4, 1));
  for (size_t i = 0; i < t.v.size(); ++i) CHECK(t.v[i] == gl.v[i]);
  // direct sum dimensions
  CHECK(gl_direct_sum(gl, gl).m == 4);
  CHECK(gl_tensor(gl, gl).m == 4);
}

TEST_CASE("pullback of covers and cocycles") {
  // target: real point; source: swapped two points mapping onto it
  auto g = builtin_group("z2");
  auto target = EquivariantCover::point_base(g);
  CechEngine target_eng(target, 3);
  auto pb = pullback_cover(target, {0, 0}, 2, {{0, 1}, {1, 0}});
  CHECK(pb.cover.sets == std::vector<std::vector<int>>{{0, 1}});
  CechEngine src_eng(pb.cover, 3);
  auto h4 = builtin_group("h4-q");
  (void)h4;
  auto id2 = gl_identity_cochain(target_eng, 2);
  auto pulled = gl_pullback(target_eng, src_eng, pb.point_map, id2);
  CHECK(gl_cocycle_condition(src_eng, pulled));
  // cover mismatch is rejected
  CHECK_THROWS_AS(gl_direct_sum(id2, pulled), Error);
}

TEST_CASE("q8 twisted cohomology spot checks against the oracle") {
  auto q8 = builtin_group("q8");
  CechEngine eng(EquivariantCover::point_base(q8), 3);
  for (int p = 0; p <= 2; ++p) {
    auto h = eng.cohomology(CoeffKind::IntegersTwisted, p);
    auto o = oracle::bar_cohomology(q8, true, 0, p);
    CHECK(factors(h) == o.factors);
    CHECK(h.free_rank == o.free_rank);
  }
}
