#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corners/complex.hpp"
#include "corners/corner_structure.hpp"

namespace corners {

enum class ModelKind {
  /// The hyperquadrant piece of S^{n+2}, used as is (d = n + 2).
  HyperquadrantSphere,
  /// The same piece times a closed connected manifold to reach d > n + 2.
  ProductPadding,
};

/// Manifold M with Σ_M ≅ Δ_n glued in by a pasting step.
struct ModelBlock {
  int simplex_dim = 0;
  int dim = 2;
  ModelKind kind = ModelKind::HyperquadrantSphere;

  CornerStructure structure() const;
  std::string description() const;

  friend bool operator==(const ModelBlock&, const ModelBlock&) = default;
};

/// Requires d ≥ n + 2.
ModelBlock model_block(int n, int d);

/// A pair of points to be joined by a connected sum, recorded by the face
/// whose interior contains each point. Both points must have the same local
/// corner structure under the hypersurface identification.
struct GlueSite {
  Simplex current_face;
  Simplex model_face;

  friend bool operator==(const GlueSite&, const GlueSite&) = default;
};

/// Combinatorial effect of the connected sum (X; x_i) # (M; y_i): the
/// hypersurfaces of M are identified with those of X through
/// `model_to_current`, and the nonempty intersections become the union of
/// both families. Both manifolds must have the same dimension and every site
/// must pair faces with the same local corner structure; violations raise
/// PastingPrecondition.
CornerStructure connected_sum(const CornerStructure& x, const CornerStructure& m,
                              std::span<const Vertex> model_to_current, std::span<const GlueSite> sites);

/// One application of the pasting construction: add `target` to Σ by
/// connected sum with a model block at one point per codimension-n face
/// H_{k^c} = ∩_{j ∈ target, j ≠ k} H_j.
struct PastingStep {
  Simplex target;
  /// glue_sites[i] hosts the point for the i-th vertex k of `target`:
  /// current face target ∖ {k}, model face {0..n} ∖ {i}.
  std::vector<GlueSite> glue_sites;
  ModelBlock model;
  int dimension_before = 0;
  int dimension_after = 0;

  friend bool operator==(const PastingStep&, const PastingStep&) = default;
};

/// Validates the preconditions and describes the step without performing it.
/// Throws PastingPrecondition naming the missing boundary face, the
/// already-present simplex, or the dimension shortfall.
PastingStep pasting_step(const CornerStructure& c, const Simplex& target, int d_target);

/// Σ of the result is Σ of `c` plus every subset of `target`; the dimension
/// becomes d_target, which must be ≥ max(c.dim(), |target| + 1).
CornerStructure apply_pasting(const CornerStructure& c, const Simplex& target, int d_target);

struct ConstructionPlan {
  /// Connected d-manifold with one boundary hypersurface per vertex.
  CornerStructure base;
  std::vector<PastingStep> steps;
  /// Present when produced by plan(); parsed plans leave it empty.
  std::optional<CornerStructure> final_structure;
};

/// Plans a d-dimensional corner structure with Σ = K. The base realizes the
/// vertices; steps add the positive-dimensional simplices by increasing
/// dimension, lexicographic within a dimension. Errors: EmptyTarget for the
/// void complex or one without vertices, GhostVertex for vertices outside
/// every facet, DimensionTooSmall when d < dim K + 2.
ConstructionPlan plan(const SimplicialComplex& k, int d);

/// Folds apply_pasting over the steps from the base, re-checking every
/// recorded step. Throws ReplayFailure naming the step index and reason.
CornerStructure replay(const ConstructionPlan& p);

/// Plan file:
///
///     base dim: 4 hypersurfaces: 6
///     step add 0 1 dim 4
///     step add 0 2 dim 4
///
/// The base line is the corner-file header of the discrete base structure.
ConstructionPlan parse_plan(std::string_view text);
std::string format_plan(const ConstructionPlan& p);

}  // namespace corners
