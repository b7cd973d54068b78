#pragma once
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace orientifold {

using MatZ = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithForm {
  MatZ U, D, V;
  int rank = 0;
  std::vector<long long> diag;  // the nonzero invariant entries
};

SmithForm smith_normal_form(const MatZ& A);

// Columns form a basis of { x : A x = 0 } as a lattice.
MatZ integer_kernel(const MatZ& A);

// Integer solution of A x = b, if one exists.
std::optional<VecZ> solve_integer(const MatZ& A, const VecZ& b);

// Columnwise integer solve; fails if any column has no solution.
std::optional<MatZ> solve_integer_columns(const MatZ& A, const MatZ& B);

// Basis of the saturation colspace_Q(A) intersected with Z^m.
MatZ saturate_columns(const MatZ& A);

int rational_rank(const MatZ& A);

// Finitely generated abelian group presented as L / M, where L is the lattice
// spanned by the columns of `gens` and M the sublattice spanned by the columns
// of `rels` (required to lie in L). Provides canonical coordinates.
class QuotientGroup {
 public:
  QuotientGroup() = default;
  QuotientGroup(const MatZ& gens, const MatZ& rels);

  // invariant factors > 1, smallest first
  const std::vector<long long>& invariant_factors() const { return factors_; }
  int free_rank() const { return free_rank_; }
  bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
  // order of the torsion part (1 if trivial)
  long long torsion_order() const;

  // canonical coordinates of a vector in L: one entry per invariant factor
  // (reduced mod the factor) followed by free coordinates
  std::vector<long long> coordinates(const VecZ& v) const;
  bool is_zero_class(const VecZ& v) const;

  // a representative vector with the given coordinates
  VecZ representative(const std::vector<long long>& coords) const;

  // all torsion classes, as coordinate tuples (requires free_rank == 0)
  std::vector<std::vector<long long>> enumerate_classes() const;

 private:
  MatZ gens_;       // m x r
  MatZ P_;          // r x r unimodular: coordinates w = P * t
  MatZ Pinv_;
  std::vector<long long> diag_;  // full diagonal of relation SNF (size <= r)
  std::vector<long long> factors_;
  std::vector<int> factor_pos_;  // positions in w of factors > 1
  std::vector<int> free_pos_;    // positions in w of free coordinates
  int free_rank_ = 0;
};

}  // namespace orientifold
