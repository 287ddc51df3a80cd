#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace corners {

using Vertex = int;

/// A finite set of vertices, stored strictly increasing. The empty simplex is
/// a valid value with dimension -1.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vertices);
  explicit Simplex(std::vector<Vertex> vertices);

  /// Vertices whose bits are set in `mask`.
  static Simplex from_mask(std::uint64_t mask);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  bool contains(Vertex v) const noexcept;
  bool is_subset_of(const Simplex& other) const noexcept;

  /// Position of `v` in the sorted vertex list, or -1.
  int position_of(Vertex v) const noexcept;

  Simplex without(Vertex v) const;
  Simplex with(Vertex v) const;
  Simplex shifted(Vertex offset) const;

  /// Requires every vertex < 64.
  std::uint64_t mask() const;

  /// Space-separated vertex list; empty string for the empty simplex.
  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.vertices_ <=> b.vertices_; }

 private:
  std::vector<Vertex> vertices_;
};

/// Orders by size first, then lexicographically: the canonical basis order of
/// chain groups and the build order of realization plans.
struct BySizeThenLex {
  bool operator()(const Simplex& a, const Simplex& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace corners
