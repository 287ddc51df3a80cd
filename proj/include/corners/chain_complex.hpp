#pragma once

#include <map>
#include <string>
#include <vector>

#include "corners/integer_matrix.hpp"

namespace corners {

/// Finitely generated abelian group Z^rank ⊕ Z/t_1 ⊕ ... with t_1 | t_2 | ...
/// and every t_i ≥ 2. The representation is unique, so equality is
/// field-wise.
struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const noexcept { return rank == 0 && torsion.empty(); }

  /// "0", "Z", "Z^3", "Z/2", "Z^2 (+) Z/2 (+) Z/4".
  std::string to_string() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Graded groups keyed by degree. Absent degrees are zero.
using GradedGroups = std::map<int, HomologyGroup>;

/// Group at `degree`, zero if absent.
HomologyGroup group_at(const GradedGroups& groups, int degree);

/// Free chain complex C_lo ... C_hi with differentials ∂_k : C_k → C_{k-1}.
/// The lowest degree maps to zero. Construction verifies shapes and
/// ∂_{k-1} ∘ ∂_k = 0, throwing NotAChainComplex otherwise.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// `ranks[i]` is the rank of C_{lowest_degree + i}; `differentials[i]` is
  /// ∂ out of degree lowest_degree + i + 1.
  ChainComplex(int lowest_degree, std::vector<std::size_t> ranks, std::vector<IntegerMatrix> differentials);

  int lowest_degree() const noexcept { return lowest_; }
  int highest_degree() const noexcept { return lowest_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int degree) const;
  /// ∂_degree : C_degree → C_{degree-1}; a 0×0 or empty-shaped matrix outside
  /// the stored range.
  IntegerMatrix differential(int degree) const;

 private:
  int lowest_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<IntegerMatrix> differentials_;
};

/// H_k = ker ∂_k / im ∂_{k+1} for every stored degree.
GradedGroups homology(const ChainComplex& complex);

/// H^k of the dual cochain complex with δ^k = ∂_{k+1}^T, computed on the
/// transposed matrices.
GradedGroups cohomology(const ChainComplex& complex);

/// Lines "<label><k> = <group>" in ascending degree.
std::string format_groups(const GradedGroups& groups, const std::string& label);

}  // namespace corners
