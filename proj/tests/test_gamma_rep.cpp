#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orientifold/gamma_rep.hpp"

using namespace orientifold;

TEST_CASE("all 36 Clifford relation matrices vanish") {
  GammaRep rep = build_gamma_rep();
  Mat16i I = Mat16i::Identity();
  for (int i = 0; i < 8; ++i)
    for (int j = i; j < 8; ++j) {
      Mat16i anti = rep.gamma[i] * rep.gamma[j] + rep.gamma[j] * rep.gamma[i];
      Mat16i want = (i == j) ? Mat16i(-2 * I) : Mat16i(Mat16i::Zero());
      CHECK(anti == want);
    }
}

TEST_CASE("gamma matrices are integer signed permutations") {
  GammaRep rep = build_gamma_rep();
  for (const auto& g : rep.gamma)
    for (int c = 0; c < 16; ++c) {
      int nz = 0;
      for (int r = 0; r < 16; ++r) {
        CHECK(std::abs((long long)g(r, c)) <= 1);
        if (g(r, c) != 0) ++nz;
      }
      CHECK(nz == 1);
    }
}

TEST_CASE("complex commutant has dimension 1 (Delta_c irreducible)") {
  GammaRep rep = build_gamma_rep();
  CHECK(complex_commutant_dimension(rep) == 1);
}

TEST_CASE("dropping a generator enlarges the commutant") {
  // sanity check that the commutant computation can see reducibility
  GammaRep rep = build_gamma_rep();
  GammaRep partial = rep;
  // keep only gamma_1 = an anticommuting family of size 1; commutant is large
  for (int i = 1; i < 8; ++i) partial.gamma[i] = rep.gamma[0];
  CHECK(complex_commutant_dimension(partial) > 1);
}
