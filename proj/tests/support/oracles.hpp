// Test-only reference computations. Nothing here calls into the library's
// homology, Smith normal form, join or dual code; the helpers work from raw
// face bitmasks so they can check those paths independently.
#pragma once

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "corners/complex.hpp"
#include "corners/corner_structure.hpp"

namespace corners::testing {

using Rational = boost::multiprecision::cpp_rational;
using boost::multiprecision::cpp_int;

/// Face family of a complex on ≤ 6 vertices as a bitmask over subsets:
/// bit A is set iff the subset with mask A is a face.
using FaceFamily = std::uint64_t;

inline FaceFamily face_family(const SimplicialComplex& k) {
  FaceFamily fam = 0;
  const int n = k.vertex_count();
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    bool face = false;
    for (const auto& f : k.facets()) {
      std::uint64_t m = 0;
      for (Vertex v : f) m |= std::uint64_t{1} << v;
      if ((a & ~m) == 0) face = true;
    }
    if (!k.is_void() && face) fam |= std::uint64_t{1} << a;
  }
  return fam;
}

inline SimplicialComplex complex_from_family(int n, FaceFamily fam) {
  if (fam == 0) return SimplicialComplex::void_complex(n);
  std::vector<Simplex> faces;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
    if (fam >> a & 1) faces.push_back(Simplex::from_mask(a));
  return SimplicialComplex::from_facets(n, faces);
}

/// Every downward-closed family of subsets of an n-set (n ≤ 5), including
/// the void family. Counts are the Dedekind numbers 2, 3, 6, 20, 168, 7581.
inline std::vector<FaceFamily> all_face_families(int n) {
  std::vector<std::uint64_t> order(std::size_t{1} << n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  std::vector<FaceFamily> out;
  std::function<void(std::size_t, FaceFamily)> dfs = [&](std::size_t i, FaceFamily fam) {
    if (i == order.size()) {
      out.push_back(fam);
      return;
    }
    dfs(i + 1, fam);
    const std::uint64_t a = order[i];
    bool closed = true;
    for (int v = 0; v < n && closed; ++v)
      if (a >> v & 1) closed = fam >> (a & ~(std::uint64_t{1} << v)) & 1;
    if (closed) dfs(i + 1, fam | (FaceFamily{1} << a));
  };
  dfs(0, 0);
  return out;
}

/// All non-void complexes on exactly n vertices (ghost vertices allowed).
inline std::vector<SimplicialComplex> all_complexes(int n) {
  std::vector<SimplicialComplex> out;
  for (auto fam : all_face_families(n))
    if (fam != 0) out.push_back(complex_from_family(n, fam));
  return out;
}

inline bool every_vertex_used(int n, FaceFamily fam) {
  for (int v = 0; v < n; ++v)
    if (!(fam >> (std::uint64_t{1} << v) & 1)) return false;
  return true;
}

/// Random complex on n vertices with every vertex in some facet.
inline SimplicialComplex random_complex(std::mt19937& rng, int n, int max_facets = 6) {
  std::uniform_int_distribution<int> count(1, max_facets);
  std::uniform_int_distribution<std::uint64_t> subset(1, (std::uint64_t{1} << n) - 1);
  std::vector<Simplex> facets;
  for (int i = count(rng); i > 0; --i) facets.push_back(Simplex::from_mask(subset(rng)));
  for (Vertex v = 0; v < n; ++v) facets.push_back(Simplex{v});
  return SimplicialComplex::from_facets(n, facets);
}

/// Random valid corner structure with 1..max_hypersurfaces hypersurfaces.
inline CornerStructure random_corner_structure(std::mt19937& rng, int max_hypersurfaces = 6) {
  const int n = std::uniform_int_distribution<int>(1, max_hypersurfaces)(rng);
  const SimplicialComplex sigma = random_complex(rng, n);
  const int pad = std::uniform_int_distribution<int>(0, 2)(rng);
  return CornerStructure::generated_by(std::max(1, sigma.dimension() + 1) + pad, n, sigma.facets());
}

/// Rank over Q by plain Gaussian elimination on exact rationals.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Rank over Z/p by Gaussian elimination, p prime.
inline std::size_t modular_rank(std::vector<std::vector<long long>> m, long long p) {
  auto inverse = [p](long long a) {
    long long result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const long long inv = inverse(m[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long long f = m[r][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Boundary matrices of the augmented chain complex built directly from
/// face bitmasks: result[s] maps faces of size s to faces of size s - 1
/// (result[0] is empty). Faces are ordered by mask value.
struct RawChains {
  std::vector<std::vector<std::uint64_t>> faces_by_size;
  std::vector<std::vector<std::vector<long long>>> boundary;
};

/// Faces of a complex on < 64 vertices as masks, by submask enumeration of
/// the facets.
inline std::vector<std::uint64_t> face_masks(const SimplicialComplex& k) {
  std::vector<std::uint64_t> out;
  if (k.is_void()) return out;
  for (const auto& f : k.facets()) {
    std::uint64_t m = 0;
    for (Vertex v : f) m |= std::uint64_t{1} << v;
    for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
      out.push_back(sub);
      if (sub == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<std::uint64_t> face_masks(int n, FaceFamily fam) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
    if (fam >> a & 1) out.push_back(a);
  return out;
}

inline RawChains raw_chains(int n, const std::vector<std::uint64_t>& faces) {
  RawChains out;
  out.faces_by_size.resize(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t a : faces) out.faces_by_size[static_cast<std::size_t>(std::popcount(a))].push_back(a);
  for (auto& bucket : out.faces_by_size) std::sort(bucket.begin(), bucket.end());
  while (!out.faces_by_size.empty() && out.faces_by_size.back().empty()) out.faces_by_size.pop_back();
  out.boundary.resize(out.faces_by_size.size() + 1);
  for (std::size_t s = 1; s < out.faces_by_size.size(); ++s) {
    const auto& rows = out.faces_by_size[s - 1];
    const auto& cols = out.faces_by_size[s];
    std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int pos = 0;
      for (int v = 0; v < n; ++v) {
        if (!(cols[c] >> v & 1)) continue;
        const auto face = cols[c] & ~(std::uint64_t{1} << v);
        const auto r = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), face) - rows.begin());
        m[r][c] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    out.boundary[s] = std::move(m);
  }
  return out;
}

/// Reduced Betti numbers indexed from degree -1, via rank-nullity with the
/// supplied rank function.
template <typename RankFn>
std::vector<std::size_t> reduced_betti_with(int n, const std::vector<std::uint64_t>& faces, RankFn rank_of) {
  const RawChains chains = raw_chains(n, faces);
  const std::size_t top = chains.faces_by_size.size();
  auto rank_at = [&](std::size_t s) -> std::size_t {
    if (s == 0 || s >= top) return 0;
    return rank_of(chains.boundary[s]);
  };
  std::vector<std::size_t> betti;
  for (std::size_t s = 0; s < top; ++s) betti.push_back(chains.faces_by_size[s].size() - rank_at(s) - rank_at(s + 1));
  return betti;
}

/// Reduced Betti numbers over Q, indexed from degree -1.
inline std::vector<std::size_t> rational_reduced_betti(int n, const std::vector<std::uint64_t>& faces) {
  return reduced_betti_with(n, faces, [](const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<Rational>> q;
    for (const auto& row : m) q.emplace_back(row.begin(), row.end());
    return rational_rank(std::move(q));
  });
}

/// Reduced Betti numbers over Z/p, indexed from degree -1.
inline std::vector<std::size_t> modular_reduced_betti(int n, const std::vector<std::uint64_t>& faces, long long p) {
  return reduced_betti_with(n, faces, [p](const std::vector<std::vector<long long>>& m) { return modular_rank(m, p); });
}

inline std::vector<std::size_t> rational_reduced_betti(const SimplicialComplex& k) {
  return rational_reduced_betti(k.vertex_count(), face_masks(k));
}

inline std::vector<std::size_t> modular_reduced_betti(const SimplicialComplex& k, long long p) {
  return modular_reduced_betti(k.vertex_count(), face_masks(k), p);
}

/// Determinant by cofactor expansion (small matrices only).
inline cpp_int determinant(const std::vector<std::vector<cpp_int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  cpp_int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<cpp_int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<cpp_int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    cpp_int term = m[0][j] * determinant(minor);
    det += (j % 2 == 0) ? term : cpp_int(-term);
  }
  return det;
}

/// Invariant factors from determinantal divisors: D_k = gcd of all k×k
/// minors, d_k = D_k / D_{k-1}.
inline std::vector<cpp_int> invariant_factors_by_minors(const std::vector<std::vector<cpp_int>>& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<cpp_int> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    cpp_int g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::vector<cpp_int>> sub;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rsel[i]) continue;
          std::vector<cpp_int> row;
          for (std::size_t j = 0; j < cols; ++j)
            if (csel[j]) row.push_back(a[i][j]);
          sub.push_back(std::move(row));
        }
        g = boost::multiprecision::gcd(g, cpp_int(abs(determinant(sub))));
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<cpp_int> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
  return factors;
}

}  // namespace corners::testing
