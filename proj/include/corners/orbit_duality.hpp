#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corners/chain_complex.hpp"
#include "corners/complex.hpp"

namespace corners {

/// Open faces (F_τ)° of the standard simplex |Δ(V)|, split by whether they
/// lie in the orbit-space slice P_X or in |Σ^∨|. A face σ of Σ contributes
/// the open quadrant B_F spanned by the δ_H with H ∉ σ, whose trace on
/// |Δ(V)| is (F_{V∖σ})°. The ambient factor R^{m-|V|} and the radial R_{>0}
/// only shift degrees; they carry no strata.
struct StratumDecomposition {
  SimplicialComplex sigma;
  int ambient_rank = 0;
  /// τ with V∖τ ∈ Σ, ordered by size then lexicographically.
  std::vector<Simplex> p_strata;
  /// τ with V∖τ ∉ Σ, same order.
  std::vector<Simplex> dual_strata;
};

/// Requires a non-void Σ (VoidComplex) and m ≥ |V| (AmbientTooSmall).
StratumDecomposition stratify(const SimplicialComplex& sigma, int ambient_rank);

/// True iff p_strata and dual_strata are disjoint, cover the power set of V,
/// the p_strata complement exactly onto the faces of Σ, and the dual_strata
/// are exactly the faces of alexander_dual(Σ).
bool partition_check(const StratumDecomposition& d);

std::string format_strata_report(const StratumDecomposition& d);

struct DualityRow {
  int degree = 0;
  HomologyGroup cohomology;
  int dual_degree = 0;
  HomologyGroup dual_homology;
};

/// Compares H̃^r(K) with H̃_s(K^∨) as abstract groups. A total t is
/// consistent when H̃^r(K) ≅ H̃_{t-r}(K^∨) for every r, zeros included.
struct DualityReport {
  int vertex_count = 0;
  GradedGroups cohomology;
  GradedGroups dual_homology;
  std::vector<int> consistent_totals;
  /// True when K has nonzero reduced cohomology, which pins t down.
  bool determined = false;
  /// t - |V| when a single total is consistent.
  std::optional<int> shift;
  /// Some total works for every degree at once.
  bool uniform = false;
  /// The total |V| - 2 stated by the classical formulation is consistent.
  bool paper_shift_matches = false;
  std::vector<DualityRow> rows;
};

/// Requires K non-void, K ≠ Δ(V), |V| ≥ 2 (DualityPrecondition).
DualityReport duality_verify(const SimplicialComplex& k);

/// Table "degree / group(K) / group(K^v) / shift" followed by the summary
/// line `shift=<c>+|V| uniform=<bool> paper_shift_matches=<bool>`, with
/// `shift=any` for acyclic K.
std::string format_duality_report(const DualityReport& report);
std::string duality_summary_line(const DualityReport& report);

/// Dimensions of K̃_0 ⊗ Q and K̃_1 ⊗ Q: the Chern character is a rational
/// isomorphism onto even and odd reduced homology. Torsion is not computed.
struct KTheoryRational {
  std::size_t k0_rank = 0;
  std::size_t k1_rank = 0;

  friend bool operator==(const KTheoryRational&, const KTheoryRational&) = default;
};

/// Requires non-void Σ (VoidComplex).
KTheoryRational k_theory_rational(const SimplicialComplex& sigma);

std::string format_k_theory_report(const KTheoryRational& k);

}  // namespace corners
