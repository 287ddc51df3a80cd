#pragma once

#include <vector>

#include "corners/integer_matrix.hpp"

namespace corners {

/// Invariant factors of an integer matrix. `diagonal` holds the nonzero
/// entries d_1 | d_2 | ... | d_r of the Smith normal form, all positive.
struct SmithDecomposition {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> diagonal;

  std::size_t rank() const noexcept { return diagonal.size(); }
};

/// Diagonalizes by unimodular row and column operations. Pivots are chosen
/// by smallest absolute value, ties broken by Markowitz fill-in estimate;
/// the resulting diagonal is then normalized into a divisibility chain.
SmithDecomposition smith_normal_form(IntegerMatrix m);

/// Rewrites a list of nonzero diagonal entries as the invariant factors of the
/// same abelian group (gcd/lcm sweeps), sorted, all positive.
std::vector<BigInt> normalize_invariant_factors(std::vector<BigInt> diagonal);

}  // namespace corners
