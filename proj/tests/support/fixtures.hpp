#pragma once

#include <vector>

#include "corners/complex.hpp"

namespace corners::testing {

/// Minimal 6-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2() {
  return SimplicialComplex::from_facets(
      6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

/// Mod-m Moore space: a disk whose boundary 3m-gon wraps m times around the
/// triangle 0, 1, 2. An inner ring and a center keep it simplicial.
inline SimplicialComplex moore_space(int m) {
  const int ring = 3 * m, center = 3 + ring;
  auto outer = [](int i) { return i % 3; };
  auto inner = [ring](int i) { return 3 + i % ring; };
  std::vector<Simplex> facets;
  for (int i = 0; i < ring; ++i) {
    facets.push_back({outer(i), outer(i + 1), inner(i)});
    facets.push_back({outer(i + 1), inner(i), inner(i + 1)});
    facets.push_back({center, inner(i), inner(i + 1)});
  }
  return SimplicialComplex::from_facets(center + 1, facets);
}

}  // namespace corners::testing
