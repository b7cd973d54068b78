#include "orientifold/group.hpp"

#include <algorithm>

namespace orientifold {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const int n = int(table.size());
  require(n > 0, Error::Code::NotAGroup, "empty multiplication table");
  for (const auto& row : table) {
    require(int(row.size()) == n, Error::Code::NotAGroup, "table is not square");
    for (int v : row)
      require(v >= 0 && v < n, Error::Code::NotAGroup, "table entry out of range");
  }
  // Latin square
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      require(!row[table[a][b]], Error::Code::NotAGroup, "repeated entry in row");
      row[table[a][b]] = true;
      require(!col[table[b][a]], Error::Code::NotAGroup, "repeated entry in column");
      col[table[b][a]] = true;
    }
  }
  // identity is element 0
  for (int a = 0; a < n; ++a)
    require(table[0][a] == a && table[a][0] == a, Error::Code::NotAGroup,
            "element 0 is not an identity");
  // associativity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        require(table[table[a][b]][c] == table[a][table[b][c]], Error::Code::NotAGroup,
                "multiplication is not associative");
  FiniteGroup g;
  g.mul = table;
  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a][b] == 0) g.inv[a] = b;
  for (int a = 0; a < n; ++a)
    require(g.inv[a] >= 0, Error::Code::NotAGroup, "missing inverse");
  return g;
}

std::vector<int> OrientifoldGroup::plus_part() const {
  std::vector<int> r;
  for (int a = 0; a < size(); ++a)
    if (eps[a] > 0) r.push_back(a);
  return r;
}

std::vector<int> OrientifoldGroup::minus_part() const {
  std::vector<int> r;
  for (int a = 0; a < size(); ++a)
    if (eps[a] < 0) r.push_back(a);
  return r;
}

OrientifoldGroup make_orientifold_group(const std::vector<std::vector<int>>& mul_table,
                                        const std::vector<int>& eps) {
  FiniteGroup g = FiniteGroup::from_table(mul_table);
  const int n = g.size();
  require(int(eps.size()) == n, Error::Code::EpsNotHomomorphism,
          "eps not defined on all elements");
  for (int v : eps)
    require(v == 1 || v == -1, Error::Code::EpsNotHomomorphism, "eps value must be +-1");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      require(eps[g.op(a, b)] == eps[a] * eps[b], Error::Code::EpsNotHomomorphism,
              "eps is not a homomorphism");
  bool onto = std::any_of(eps.begin(), eps.end(), [](int v) { return v < 0; });
  require(onto, Error::Code::EpsTrivial, "eps is not surjective");
  return OrientifoldGroup{std::move(g), eps};
}

void FiniteGammaGroup::validate(const OrientifoldGroup& gamma) const {
  const int n = carrier.size();
  require(int(theta.size()) == gamma.size(), Error::Code::DomainMismatch,
          "theta not defined for every gamma");
  for (const auto& t : theta) {
    require(int(t.size()) == n, Error::Code::DomainMismatch, "theta permutation size");
    std::vector<bool> seen(n, false);
    for (int v : t) {
      require(v >= 0 && v < n && !seen[v], Error::Code::DomainMismatch,
              "theta is not a permutation");
      seen[v] = true;
    }
  }
  // each theta(gamma,.) is an automorphism
  for (int c = 0; c < gamma.size(); ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        require(theta[c][carrier.op(a, b)] == carrier.op(theta[c][a], theta[c][b]),
                Error::Code::DomainMismatch, "theta(gamma,.) is not an automorphism");
  // action axioms
  for (int a = 0; a < n; ++a)
    require(theta[gamma.identity()][a] == a, Error::Code::DomainMismatch,
            "theta(e,.) is not the identity");
  for (int c1 = 0; c1 < gamma.size(); ++c1)
    for (int c2 = 0; c2 < gamma.size(); ++c2)
      for (int a = 0; a < n; ++a)
        require(theta[gamma.op(c1, c2)][a] == theta[c1][theta[c2][a]],
                Error::Code::DomainMismatch, "theta is not an action");
}

OrientifoldGroup semidirect_orientifold(const OrientifoldGroup& gamma,
                                        const FiniteGammaGroup& g) {
  require(g.carrier.size() > 0, Error::Code::InfiniteCarrier,
          "semidirect product needs a finite carrier");
  g.validate(gamma);
  const int ng = gamma.size(), nh = g.carrier.size();
  const int n = ng * nh;
  auto id = [&](int c, int h) { return c * nh + h; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int c1 = 0; c1 < ng; ++c1)
    for (int h1 = 0; h1 < nh; ++h1)
      for (int c2 = 0; c2 < ng; ++c2)
        for (int h2 = 0; h2 < nh; ++h2)
          table[id(c1, h1)][id(c2, h2)] =
              id(gamma.op(c1, c2), g.carrier.op(h1, g.theta[c1][h2]));
  std::vector<int> eps(n);
  for (int c = 0; c < ng; ++c)
    for (int h = 0; h < nh; ++h) eps[id(c, h)] = gamma.sign(c);
  return make_orientifold_group(table, eps);
}

bool has_involution_in_minus(const OrientifoldGroup& g) {
  for (int a : g.minus_part())
    if (g.op(a, a) == g.identity()) return true;
  return false;
}

OrientifoldGroup builtin_group(const std::string& name) {
  if (name == "z2") {
    return make_orientifold_group({{0, 1}, {1, 0}}, {1, -1});
  }
  if (name == "h4-q") {
    // {1, i, -1, -i} as Z4 with eps(h) = h^2: eps(i) = eps(-i) = -1.
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t[a][b] = (a + b) % 4;
    return make_orientifold_group(t, {1, -1, 1, -1});
  }
  if (name == "q8") {
    // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    auto neg = [](int a) { return a ^ 1; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8, -1));
    // products of the positive units; signs propagate
    // i*i = j*j = k*k = -1; i*j = k, j*k = i, k*i = j; j*i = -k, ...
    int base[4][4];  // indices: 0->1, 1->i, 2->j, 3->k; value: signed unit id
    auto enc = [&](int unit, int sgn) { return unit * 2 + (sgn < 0 ? 1 : 0); };
    base[0][0] = enc(0, 1); base[0][1] = enc(1, 1); base[0][2] = enc(2, 1); base[0][3] = enc(3, 1);
    base[1][0] = enc(1, 1); base[1][1] = enc(0, -1); base[1][2] = enc(3, 1); base[1][3] = enc(2, -1);
    base[2][0] = enc(2, 1); base[2][1] = enc(3, -1); base[2][2] = enc(0, -1); base[2][3] = enc(1, 1);
    base[3][0] = enc(3, 1); base[3][1] = enc(2, 1); base[3][2] = enc(1, -1); base[3][3] = enc(0, -1);
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        int ua = a / 2, sa = a % 2 ? -1 : 1;
        int ub = b / 2, sb = b % 2 ? -1 : 1;
        int r = base[ua][ub];
        t[a][b] = (sa * sb < 0) ? neg(r) : r;
      }
    // eps: +-1, +-i linear; +-j, +-k anti-linear
    return make_orientifold_group(t, {1, 1, 1, 1, -1, -1, -1, -1});
  }
  if (name == "z2xz2") {
    FiniteGroup h = FiniteGroup::from_table({{0, 1}, {1, 0}});
    return trivial_extension_group(h);
  }
  fail(Error::Code::SchemaError, "unknown built-in group: " + name);
}

OrientifoldGroup trivial_extension_group(const FiniteGroup& h) {
  const int nh = h.size();
  const int n = 2 * nh;
  auto id = [&](int z, int a) { return z * nh + a; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int z1 = 0; z1 < 2; ++z1)
    for (int a1 = 0; a1 < nh; ++a1)
      for (int z2 = 0; z2 < 2; ++z2)
        for (int a2 = 0; a2 < nh; ++a2)
          table[id(z1, a1)][id(z2, a2)] = id(z1 ^ z2, h.op(a1, a2));
  std::vector<int> eps(n);
  for (int z = 0; z < 2; ++z)
    for (int a = 0; a < nh; ++a) eps[id(z, a)] = z ? -1 : 1;
  return make_orientifold_group(table, eps);
}

}  // namespace orientifold
