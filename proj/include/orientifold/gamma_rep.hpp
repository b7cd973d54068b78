#pragma once
#include <array>

#include <Eigen/Core>

namespace orientifold {

using Mat16i = Eigen::Matrix<long long, 16, 16>;

// The irreducible real Cl_8 module has dimension 16; gamma matrices are
// integer signed-permutation matrices built from octonion left
// multiplication (Cayley-Dickson doubling), so all relations hold exactly.
struct GammaRep {
  static constexpr int n = 8;
  std::array<Mat16i, 8> gamma;
};

GammaRep build_gamma_rep();

// Dimension over C of { M : M gamma_i = gamma_i M for all i }, computed by
// exact rational elimination. Equals 1 exactly when the complexified module
// is irreducible.
int complex_commutant_dimension(const GammaRep& rep);

}  // namespace orientifold
