#include "corners/simplex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "corners/error.hpp"

namespace corners {

Simplex::Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (!vertices_.empty() && vertices_.front() < 0) {
    throw Error(ErrorCode::MalformedInput, "negative vertex identifier " + std::to_string(vertices_.front()));
  }
}

Simplex Simplex::from_mask(std::uint64_t mask) {
  Simplex s;
  s.vertices_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    s.vertices_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

bool Simplex::contains(Vertex v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& other) const noexcept {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

int Simplex::position_of(Vertex v) const noexcept {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

Simplex Simplex::without(Vertex v) const {
  Simplex s;
  s.vertices_.reserve(vertices_.size());
  for (Vertex w : vertices_)
    if (w != v) s.vertices_.push_back(w);
  return s;
}

Simplex Simplex::with(Vertex v) const {
  if (contains(v)) return *this;
  Simplex s = *this;
  s.vertices_.insert(std::lower_bound(s.vertices_.begin(), s.vertices_.end(), v), v);
  return s;
}

Simplex Simplex::shifted(Vertex offset) const {
  Simplex s = *this;
  for (Vertex& v : s.vertices_) v += offset;
  return s;
}

std::uint64_t Simplex::mask() const {
  std::uint64_t m = 0;
  for (Vertex v : vertices_) {
    if (v >= 64) throw Error(ErrorCode::TooManyVertices, "vertex " + std::to_string(v) + " does not fit a 64-bit mask");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

std::string Simplex::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out << ' ';
    out << vertices_[i];
  }
  return out.str();
}

}  // namespace corners
