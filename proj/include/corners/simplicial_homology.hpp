#pragma once

#include <string>
#include <vector>

#include "corners/chain_complex.hpp"
#include "corners/complex.hpp"

namespace corners {

/// Augmented simplicial chain complex of a non-void complex, lowest degree -1
/// (the empty simplex). Bases are the faces of each dimension in
/// lexicographic order; ∂[v_0..v_k] = Σ (-1)^i [.. v̂_i ..], so the
/// augmentation sends every vertex to +∅.
ChainComplex boundary_matrices(const SimplicialComplex& complex);

/// Reduced integral homology, degrees -1 .. dim K. Empty for the void complex.
GradedGroups reduced_homology(const SimplicialComplex& complex);

/// Reduced integral cohomology, degrees -1 .. dim K. Empty for the void
/// complex.
GradedGroups reduced_cohomology(const SimplicialComplex& complex);

/// Ranks of reduced homology, indexed from degree -1.
std::vector<std::size_t> reduced_betti_numbers(const SimplicialComplex& complex);

/// "H~_k = ..." lines.
std::string format_homology_report(const GradedGroups& groups);
/// "H~^k = ..." lines.
std::string format_cohomology_report(const GradedGroups& groups);

}  // namespace corners
