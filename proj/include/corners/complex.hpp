#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "corners/simplex.hpp"

namespace corners {

/// Largest vertex set for which whole-power-set operations (Alexander dual,
/// stratification) are attempted.
inline constexpr int kMaxPowerSetVertices = 24;

/// A downward-closed family of simplices on the vertex set {0, ..., n-1},
/// stored by its facets. Every non-void complex contains the empty simplex;
/// the void complex contains nothing at all.
///
/// Vertices that occur in no facet ("ghost vertices") are allowed. They arise
/// naturally as Alexander duals keep the ambient vertex set.
class SimplicialComplex {
 public:
  /// Canonicalizes: dominated facets are absorbed and the rest sorted. An
  /// empty facet list yields {∅}. Throws MalformedInput if a facet uses a
  /// vertex outside [0, vertex_count).
  static SimplicialComplex from_facets(int vertex_count, std::vector<Simplex> facets);

  static SimplicialComplex void_complex(int vertex_count = 0);
  static SimplicialComplex full_simplex(int vertex_count);
  static SimplicialComplex simplex_boundary(int vertex_count);
  /// `vertex_count` isolated points.
  static SimplicialComplex discrete(int vertex_count);

  bool is_void() const noexcept { return void_; }
  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Simplex>& facets() const noexcept { return facets_; }

  bool contains(const Simplex& s) const;
  bool contains_mask(std::uint64_t mask) const;

  /// -2 for the void complex, -1 for {∅}.
  int dimension() const noexcept;

  /// All faces including ∅, ordered by size then lexicographically.
  std::vector<Simplex> faces() const;
  /// faces_by_dimension()[k + 1] lists the k-faces, k = -1 .. dimension().
  std::vector<std::vector<Simplex>> faces_by_dimension() const;

  /// Vertices that occur in some facet.
  std::vector<Vertex> support() const;
  bool has_ghost_vertices() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex() = default;

  int vertex_count_ = 0;
  bool void_ = false;
  std::vector<Simplex> facets_;
  std::vector<std::uint64_t> facet_masks_;
};

struct JoinResult {
  SimplicialComplex complex;
  /// Vertex v of the second operand is vertex v + second_offset of the join.
  Vertex second_offset = 0;
};

/// Simplices of K * L are exactly A ⊔ B with A ∈ K, B ∈ L. Joining with the
/// void complex returns the other operand (placed on the combined vertex set).
JoinResult join(const SimplicialComplex& k, const SimplicialComplex& l);

/// {A ⊆ V : V∖A ∉ K} over the vertex set of K. Dual of the full simplex is
/// void, dual of void is the full simplex.
SimplicialComplex alexander_dual(const SimplicialComplex& k);

/// Faces of dimension ≤ k.
SimplicialComplex skeleton(const SimplicialComplex& complex, int k);

/// f_vector[i] counts the i-dimensional faces, starting at dimension 0.
std::vector<std::size_t> f_vector(const SimplicialComplex& complex);

inline int dimension(const SimplicialComplex& complex) { return complex.dimension(); }

/// Isomorphism by backtracking over vertex bijections that respect a
/// per-vertex facet-size signature. Intended for small vertex sets.
bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace corners
