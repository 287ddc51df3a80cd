#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "corners/chain_complex.hpp"
#include "corners/complex.hpp"

namespace corners {

/// Combinatorial shadow of a compact manifold with embedded corners whose
/// faces are all connected: the dimension, the number of boundary
/// hypersurfaces H_0..H_n, and which index sets A have ∩_{i∈A} H_i ≠ ∅.
///
/// Invariants (checked on construction, InvalidCornerStructure otherwise):
/// the family is downward closed, contains ∅ (the interior face) and every
/// singleton, and no member has more than `dim` indices.
class CornerStructure {
 public:
  /// Takes the full family of nonempty intersections and validates it.
  static CornerStructure make(int dim, int hypersurface_count, std::vector<Simplex> nonempty_intersections);
  /// Adds ∅, the singletons and every sub-intersection of the listed sets,
  /// then validates.
  static CornerStructure generated_by(int dim, int hypersurface_count, const std::vector<Simplex>& intersections);

  /// Closed manifold: no boundary at all.
  static CornerStructure closed_manifold(int dim);
  /// Connected manifold whose boundary consists of `components` disjoint
  /// connected hypersurfaces.
  static CornerStructure disjoint_boundary(int dim, int components);
  /// The (n+2)-manifold cut out of S^{n+2} by the positive hyperquadrant,
  /// with n+1 hypersurfaces all meeting: its corner complex is Δ_n.
  static CornerStructure hyperquadrant_model(int n);

  int dim() const noexcept { return dim_; }
  int hypersurface_count() const noexcept { return hypersurface_count_; }
  /// Ordered by size, then lexicographically.
  const std::vector<Simplex>& nonempty_intersections() const noexcept { return faces_; }
  bool intersects(const Simplex& a) const;

  /// Faces of codimension p.
  std::vector<Simplex> faces_of_codimension(int p) const;

  /// Product with a closed connected manifold of dimension d - dim(); the
  /// corner data is unchanged. Requires d ≥ dim().
  CornerStructure padded_to(int d) const;

  friend bool operator==(const CornerStructure&, const CornerStructure&) = default;

 private:
  CornerStructure() = default;
  int dim_ = 0;
  int hypersurface_count_ = 0;
  std::vector<Simplex> faces_;
};

/// Σ_X: the complex on the hypersurfaces whose simplices are the index sets
/// with nonempty intersection. No hypersurfaces gives the void complex.
SimplicialComplex extract_sigma(const CornerStructure& c);

/// X × Y: hypersurfaces H × Y and X × H', with the second factor's indices
/// shifted by the first's hypersurface count.
CornerStructure product(const CornerStructure& a, const CornerStructure& b);

/// Chain complex generated by the faces, graded by codimension p = 0..dim.
/// The generator of A is sent to Σ_i (-1)^i [A ∖ {a_i}] over the sorted
/// indices a_0 < a_1 < ...; this is the augmented simplicial complex of Σ_X
/// shifted up one degree.
struct ConormalComplex {
  ChainComplex chains;
  /// bases[p] lists the codimension-p faces in chain order.
  std::vector<std::vector<Simplex>> bases;
};

ConormalComplex conormal_complex(const CornerStructure& c);

/// Homology of the conormal complex, degrees 0..dim. Isomorphic to
/// H̃_{p-1}(Σ_X) degree by degree whenever X has boundary.
GradedGroups conormal_homology(const CornerStructure& c);

/// Corner file:
///
///     dim: 4
///     hypersurfaces: 3
///     0 1
///     1 2
///
/// one nonempty intersection per line; ∅, singletons and sub-intersections of
/// listed lines are implied. Formatting lists every intersection of two or
/// more hypersurfaces, so parse/format round-trips exactly.
CornerStructure parse_corner_file(std::string_view text);
std::string format_corner_file(const CornerStructure& c);

}  // namespace corners
