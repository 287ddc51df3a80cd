#include "corners/simplicial_homology.hpp"

#include <algorithm>

namespace corners {

ChainComplex boundary_matrices(const SimplicialComplex& complex) {
  if (complex.is_void()) return {};
  const auto bases = complex.faces_by_dimension();
  std::vector<std::size_t> ranks;
  for (const auto& b : bases) ranks.push_back(b.size());

  std::vector<IntegerMatrix> differentials;
  for (std::size_t k = 1; k < bases.size(); ++k) {
    const auto& rows = bases[k - 1];
    const auto& cols = bases[k];
    IntegerMatrix d(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Simplex& s = cols[c];
      for (std::size_t i = 0; i < s.size(); ++i) {
        const Simplex face = s.without(s[i]);
        const auto r = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), face) - rows.begin());
        d(r, c) = (i % 2 == 0) ? 1 : -1;
      }
    }
    differentials.push_back(std::move(d));
  }
  return ChainComplex(-1, std::move(ranks), std::move(differentials));
}

GradedGroups reduced_homology(const SimplicialComplex& complex) {
  if (complex.is_void()) return {};
  return homology(boundary_matrices(complex));
}

GradedGroups reduced_cohomology(const SimplicialComplex& complex) {
  if (complex.is_void()) return {};
  return cohomology(boundary_matrices(complex));
}

std::vector<std::size_t> reduced_betti_numbers(const SimplicialComplex& complex) {
  std::vector<std::size_t> betti;
  for (const auto& [k, g] : reduced_homology(complex)) betti.push_back(g.rank);
  return betti;
}

std::string format_homology_report(const GradedGroups& groups) { return format_groups(groups, "H~_"); }

std::string format_cohomology_report(const GradedGroups& groups) { return format_groups(groups, "H~^"); }

}  // namespace corners
