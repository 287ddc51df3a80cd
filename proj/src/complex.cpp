#include "corners/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "corners/error.hpp"

namespace corners {
namespace {

constexpr std::size_t kMaxFacetSize = 30;

void require_power_set_size(int vertex_count) {
  if (vertex_count > kMaxPowerSetVertices) {
    throw Error(ErrorCode::TooManyVertices,
                std::to_string(vertex_count) + " vertices exceed the power-set limit of " +
                    std::to_string(kMaxPowerSetVertices));
  }
}

// Inclusion-maximal members of an arbitrary family, sorted.
std::vector<Simplex> maximal_elements(std::vector<Simplex> family) {
  std::sort(family.begin(), family.end(), BySizeThenLex{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<Simplex> maximal;
  // Largest first so a candidate only needs checking against kept facets.
  for (auto it = family.rbegin(); it != family.rend(); ++it) {
    bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                 [&](const Simplex& f) { return it->is_subset_of(f); });
    if (!dominated) maximal.push_back(*it);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

template <typename Fn>
void for_each_subset(const Simplex& s, Fn&& fn) {
  if (s.size() > kMaxFacetSize) {
    throw Error(ErrorCode::TooManyVertices, "facet with " + std::to_string(s.size()) + " vertices is too large to enumerate");
  }
  const auto n = s.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (bits >> i & 1) sub.push_back(s[i]);
    fn(Simplex(std::move(sub)));
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int vertex_count, std::vector<Simplex> facets) {
  if (vertex_count < 0) throw Error(ErrorCode::MalformedInput, "negative vertex count");
  for (const auto& f : facets) {
    if (!f.empty() && f.vertices().back() >= vertex_count) {
      throw Error(ErrorCode::MalformedInput, "facet {" + f.to_string() + "} uses a vertex outside 0.." +
                                                 std::to_string(vertex_count - 1));
    }
  }
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  k.facets_ = facets.empty() ? std::vector<Simplex>{Simplex{}} : maximal_elements(std::move(facets));
  if (vertex_count <= 64) {
    for (const auto& f : k.facets_) k.facet_masks_.push_back(f.mask());
  }
  return k;
}

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) {
  if (vertex_count < 0) throw Error(ErrorCode::MalformedInput, "negative vertex count");
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  k.void_ = true;
  return k;
}

SimplicialComplex SimplicialComplex::full_simplex(int vertex_count) {
  std::vector<Vertex> all(static_cast<std::size_t>(vertex_count));
  for (int v = 0; v < vertex_count; ++v) all[static_cast<std::size_t>(v)] = v;
  return from_facets(vertex_count, {Simplex(std::move(all))});
}

SimplicialComplex SimplicialComplex::simplex_boundary(int vertex_count) {
  Simplex all = full_simplex(vertex_count).facets().front();
  std::vector<Simplex> facets;
  for (Vertex v : all) facets.push_back(all.without(v));
  return from_facets(vertex_count, std::move(facets));
}

SimplicialComplex SimplicialComplex::discrete(int vertex_count) {
  std::vector<Simplex> facets;
  for (Vertex v = 0; v < vertex_count; ++v) facets.push_back(Simplex{v});
  return from_facets(vertex_count, std::move(facets));
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (void_) return false;
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return s.is_subset_of(f); });
}

bool SimplicialComplex::contains_mask(std::uint64_t mask) const {
  if (void_) return false;
  if (facet_masks_.size() != facets_.size()) return contains(Simplex::from_mask(mask));
  return std::any_of(facet_masks_.begin(), facet_masks_.end(),
                     [&](std::uint64_t f) { return (mask & ~f) == 0; });
}

int SimplicialComplex::dimension() const noexcept {
  if (void_) return -2;
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.dimension());
  return d;
}

std::vector<Simplex> SimplicialComplex::faces() const {
  if (void_) return {};
  std::set<Simplex> all;
  for (const auto& f : facets_) for_each_subset(f, [&](Simplex s) { all.insert(std::move(s)); });
  std::vector<Simplex> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), BySizeThenLex{});
  return out;
}

std::vector<std::vector<Simplex>> SimplicialComplex::faces_by_dimension() const {
  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(dimension() + 2));
  for (auto& s : faces()) by_dim[s.size()].push_back(std::move(s));
  return by_dim;
}

std::vector<Vertex> SimplicialComplex::support() const {
  std::set<Vertex> used;
  for (const auto& f : facets_) used.insert(f.begin(), f.end());
  return {used.begin(), used.end()};
}

bool SimplicialComplex::has_ghost_vertices() const {
  return static_cast<int>(support().size()) != vertex_count_;
}

JoinResult join(const SimplicialComplex& k, const SimplicialComplex& l) {
  const Vertex offset = k.vertex_count();
  const int total = k.vertex_count() + l.vertex_count();
  if (k.is_void() && l.is_void()) return {SimplicialComplex::void_complex(total), offset};
  if (k.is_void()) {
    std::vector<Simplex> shifted;
    for (const auto& f : l.facets()) shifted.push_back(f.shifted(offset));
    return {SimplicialComplex::from_facets(total, std::move(shifted)), offset};
  }
  if (l.is_void()) return {SimplicialComplex::from_facets(total, k.facets()), offset};

  std::vector<Simplex> facets;
  facets.reserve(k.facets().size() * l.facets().size());
  for (const auto& a : k.facets()) {
    for (const auto& b : l.facets()) {
      std::vector<Vertex> united(a.begin(), a.end());
      for (Vertex v : b) united.push_back(v + offset);
      facets.emplace_back(std::move(united));
    }
  }
  return {SimplicialComplex::from_facets(total, std::move(facets)), offset};
}

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
  const int n = k.vertex_count();
  require_power_set_size(n);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> dual_faces;
  for (std::uint64_t a = 0; a <= full; ++a)
    if (!k.contains_mask(full & ~a)) dual_faces.push_back(a);
  if (dual_faces.empty()) return SimplicialComplex::void_complex(n);

  // The dual family is downward closed, so its facets are the members with
  // no one-vertex extension inside the family.
  std::vector<bool> member(std::size_t{1} << n, false);
  for (auto a : dual_faces) member[a] = true;
  std::vector<Simplex> facets;
  for (auto a : dual_faces) {
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (!(a & bit) && member[a | bit]) maximal = false;
    }
    if (maximal) facets.push_back(Simplex::from_mask(a));
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int k) {
  if (complex.is_void()) return complex;
  if (k < -1) return SimplicialComplex::void_complex(complex.vertex_count());
  std::vector<Simplex> kept;
  for (auto& s : complex.faces())
    if (s.dimension() <= k) kept.push_back(std::move(s));
  return SimplicialComplex::from_facets(complex.vertex_count(), std::move(kept));
}

std::vector<std::size_t> f_vector(const SimplicialComplex& complex) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(std::max(complex.dimension() + 1, 0)), 0);
  for (const auto& s : complex.faces())
    if (!s.empty()) ++counts[s.size() - 1];
  return counts;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const SimplicialComplex& a, const SimplicialComplex& b) : a_(a), b_(b) {
    sig_a_ = signatures(a);
    sig_b_ = signatures(b);
    target_.assign(b.facets().begin(), b.facets().end());
    std::sort(target_.begin(), target_.end());
    image_.assign(static_cast<std::size_t>(a.vertex_count()), -1);
    used_.assign(static_cast<std::size_t>(b.vertex_count()), false);
  }

  bool run() { return extend(0); }

 private:
  using Signature = std::map<std::size_t, int>;

  static std::vector<Signature> signatures(const SimplicialComplex& k) {
    std::vector<Signature> sig(static_cast<std::size_t>(k.vertex_count()));
    for (const auto& f : k.facets())
      for (Vertex v : f) ++sig[static_cast<std::size_t>(v)][f.size()];
    return sig;
  }

  bool extend(Vertex v) {
    if (v == a_.vertex_count()) return images_match();
    for (Vertex w = 0; w < b_.vertex_count(); ++w) {
      const auto uw = static_cast<std::size_t>(w);
      if (used_[uw] || sig_a_[static_cast<std::size_t>(v)] != sig_b_[uw]) continue;
      used_[uw] = true;
      image_[static_cast<std::size_t>(v)] = w;
      if (extend(v + 1)) return true;
      used_[uw] = false;
    }
    return false;
  }

  bool images_match() const {
    std::vector<Simplex> mapped;
    for (const auto& f : a_.facets()) {
      std::vector<Vertex> vs;
      for (Vertex v : f) vs.push_back(image_[static_cast<std::size_t>(v)]);
      mapped.emplace_back(std::move(vs));
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == target_;
  }

  const SimplicialComplex& a_;
  const SimplicialComplex& b_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<Simplex> target_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count() || a.is_void() != b.is_void()) return false;
  if (a.is_void()) return true;
  if (a.facets().size() != b.facets().size() || f_vector(a) != f_vector(b)) return false;
  return IsomorphismSearch(a, b).run();
}

}  // namespace corners
