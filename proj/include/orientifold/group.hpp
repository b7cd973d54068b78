#pragma once
#include <string>
#include <vector>

#include "orientifold/errors.hpp"

namespace orientifold {

// Finite group given by an explicit multiplication table over dense element
// ids 0..n-1 with 0 the identity.
struct FiniteGroup {
  std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
  std::vector<int> inv;

  int size() const { return int(mul.size()); }
  int op(int a, int b) const { return mul[a][b]; }

  // Validates the axioms and fills the inverse table.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);
};

// Finite orientifold group (Gamma, eps): a group together with a surjective
// homomorphism eps onto {+1,-1}.
struct OrientifoldGroup {
  FiniteGroup g;
  std::vector<int> eps;  // values +1 / -1

  int size() const { return g.size(); }
  int op(int a, int b) const { return g.op(a, b); }
  int inverse(int a) const { return g.inv[a]; }
  int identity() const { return 0; }
  int sign(int a) const { return eps[a]; }

  std::vector<int> plus_part() const;
  std::vector<int> minus_part() const;
};

OrientifoldGroup make_orientifold_group(const std::vector<std::vector<int>>& mul_table,
                                        const std::vector<int>& eps);

// theta: for each gamma, a permutation of G's elements that is a group
// automorphism; theta must define an action of Gamma.
struct FiniteGammaGroup {
  FiniteGroup carrier;
  std::vector<std::vector<int>> theta;  // theta[gamma][g]

  void validate(const OrientifoldGroup& gamma) const;
};

// Gamma x_theta G with eps(gamma, g) = eps(gamma) and
// (g1,h1)(g2,h2) = (g1 g2, h1 * theta_{g1}(h2)).
OrientifoldGroup semidirect_orientifold(const OrientifoldGroup& gamma,
                                        const FiniteGammaGroup& g);

// True iff some element of Gamma^- squares to the identity.
bool has_involution_in_minus(const OrientifoldGroup& g);

// Built-in groups: "z2", "h4-q" (the {+-1,+-i} example), "q8",
// "z2xz2" (eps = first projection).
OrientifoldGroup builtin_group(const std::string& name);

// Direct product Z2 x H with eps the first projection, H an arbitrary finite
// group (the trivial extension of an equivariant theory).
OrientifoldGroup trivial_extension_group(const FiniteGroup& h);

}  // namespace orientifold
