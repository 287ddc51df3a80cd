#include "corners/corner_structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "corners/error.hpp"
#include "corners/facet_io.hpp"

namespace corners {

CornerStructure CornerStructure::make(int dim, int hypersurface_count, std::vector<Simplex> faces) {
  auto invalid = [](const std::string& why) { return Error(ErrorCode::InvalidCornerStructure, why); };
  if (dim < 0) throw invalid("negative dimension");
  if (hypersurface_count < 0) throw invalid("negative hypersurface count");

  std::sort(faces.begin(), faces.end(), BySizeThenLex{});
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  CornerStructure c;
  c.dim_ = dim;
  c.hypersurface_count_ = hypersurface_count;
  c.faces_ = std::move(faces);

  if (c.faces_.empty() || !c.faces_.front().empty()) throw invalid("the interior face ∅ is missing");
  for (Vertex v = 0; v < hypersurface_count; ++v)
    if (!c.intersects(Simplex{v})) throw invalid("hypersurface H_" + std::to_string(v) + " is missing");
  for (const auto& a : c.faces_) {
    if (!a.empty() && a.vertices().back() >= hypersurface_count)
      throw invalid("intersection {" + a.to_string() + "} names a hypersurface beyond H_" +
                    std::to_string(hypersurface_count - 1));
    if (static_cast<int>(a.size()) > dim)
      throw invalid("intersection {" + a.to_string() + "} has codimension " + std::to_string(a.size()) +
                    " > dim " + std::to_string(dim));
    for (Vertex v : a)
      if (!c.intersects(a.without(v)))
        throw invalid("not downward closed: {" + a.to_string() + "} present but {" + a.without(v).to_string() +
                      "} missing");
  }
  return c;
}

CornerStructure CornerStructure::generated_by(int dim, int hypersurface_count,
                                              const std::vector<Simplex>& intersections) {
  std::vector<Simplex> generators = intersections;
  for (Vertex v = 0; v < hypersurface_count; ++v) generators.push_back(Simplex{v});
  if (hypersurface_count < 0) throw Error(ErrorCode::InvalidCornerStructure, "negative hypersurface count");
  for (const auto& g : generators)
    if (!g.empty() && g.vertices().back() >= hypersurface_count)
      throw Error(ErrorCode::InvalidCornerStructure, "intersection {" + g.to_string() +
                                                         "} names a hypersurface beyond the declared count");
  std::vector<Simplex> closed;
  if (hypersurface_count == 0) {
    closed.push_back(Simplex{});
  } else {
    closed = SimplicialComplex::from_facets(hypersurface_count, generators).faces();
  }
  return make(dim, hypersurface_count, std::move(closed));
}

CornerStructure CornerStructure::closed_manifold(int dim) { return make(dim, 0, {Simplex{}}); }

CornerStructure CornerStructure::disjoint_boundary(int dim, int components) {
  return generated_by(dim, components, {});
}

CornerStructure CornerStructure::hyperquadrant_model(int n) {
  return generated_by(n + 2, n + 1, {SimplicialComplex::full_simplex(n + 1).facets().front()});
}

bool CornerStructure::intersects(const Simplex& a) const {
  return std::binary_search(faces_.begin(), faces_.end(), a, BySizeThenLex{});
}

std::vector<Simplex> CornerStructure::faces_of_codimension(int p) const {
  std::vector<Simplex> out;
  for (const auto& a : faces_)
    if (static_cast<int>(a.size()) == p) out.push_back(a);
  return out;
}

CornerStructure CornerStructure::padded_to(int d) const {
  if (d < dim_)
    throw Error(ErrorCode::DimensionTooSmall,
                "cannot pad dimension " + std::to_string(dim_) + " down to " + std::to_string(d));
  return product(*this, closed_manifold(d - dim_));
}

SimplicialComplex extract_sigma(const CornerStructure& c) {
  if (c.hypersurface_count() == 0) return SimplicialComplex::void_complex();
  return SimplicialComplex::from_facets(c.hypersurface_count(), c.nonempty_intersections());
}

CornerStructure product(const CornerStructure& a, const CornerStructure& b) {
  const Vertex offset = a.hypersurface_count();
  std::vector<Simplex> faces;
  faces.reserve(a.nonempty_intersections().size() * b.nonempty_intersections().size());
  for (const auto& x : a.nonempty_intersections()) {
    for (const auto& y : b.nonempty_intersections()) {
      std::vector<Vertex> united(x.begin(), x.end());
      for (Vertex v : y) united.push_back(v + offset);
      faces.emplace_back(std::move(united));
    }
  }
  return CornerStructure::make(a.dim() + b.dim(), a.hypersurface_count() + b.hypersurface_count(), std::move(faces));
}

ConormalComplex conormal_complex(const CornerStructure& c) {
  ConormalComplex out;
  out.bases.resize(static_cast<std::size_t>(c.dim()) + 1);
  for (const auto& a : c.nonempty_intersections()) out.bases[a.size()].push_back(a);

  std::vector<std::size_t> ranks;
  for (const auto& b : out.bases) ranks.push_back(b.size());
  std::vector<IntegerMatrix> differentials;
  for (std::size_t p = 1; p < out.bases.size(); ++p) {
    const auto& rows = out.bases[p - 1];
    const auto& cols = out.bases[p];
    IntegerMatrix d(rows.size(), cols.size());
    for (std::size_t col = 0; col < cols.size(); ++col) {
      const Simplex& a = cols[col];
      for (std::size_t i = 0; i < a.size(); ++i) {
        const auto row = static_cast<std::size_t>(
            std::lower_bound(rows.begin(), rows.end(), a.without(a[i])) - rows.begin());
        d(row, col) = (i % 2 == 0) ? 1 : -1;
      }
    }
    differentials.push_back(std::move(d));
  }
  out.chains = ChainComplex(0, std::move(ranks), std::move(differentials));
  return out;
}

GradedGroups conormal_homology(const CornerStructure& c) { return homology(conormal_complex(c).chains); }

CornerStructure parse_corner_file(std::string_view text) {
  int dim = -1, count = -1;
  std::vector<Simplex> intersections;
  int line_no = 0;
  for (auto raw : split_lines(text)) {
    ++line_no;
    const auto line = strip_line(raw);
    if (line.empty()) continue;
    const std::string where = "corner file line " + std::to_string(line_no);
    auto header_value = [&](std::string_view key) {
      auto values = parse_int_list(line.substr(key.size()), where);
      if (values.size() != 1) throw Error(ErrorCode::MalformedInput, where + ": expected '" + std::string(key) + " n'");
      return values.front();
    };
    if (line.starts_with("dim:")) {
      dim = header_value("dim:");
    } else if (line.starts_with("hypersurfaces:")) {
      count = header_value("hypersurfaces:");
    } else {
      if (dim < 0 || count < 0) throw Error(ErrorCode::MalformedInput, where + ": intersection before headers");
      auto values = parse_int_list(line, where);
      Simplex a(values);
      if (a.size() != values.size()) throw Error(ErrorCode::MalformedInput, where + ": repeated hypersurface");
      if (!a.empty() && a.vertices().back() >= count)
        throw Error(ErrorCode::MalformedInput, where + ": hypersurface index out of range");
      intersections.push_back(std::move(a));
    }
  }
  if (dim < 0 || count < 0)
    throw Error(ErrorCode::MalformedInput, "corner file needs 'dim:' and 'hypersurfaces:' headers");
  return CornerStructure::generated_by(dim, count, intersections);
}

std::string format_corner_file(const CornerStructure& c) {
  std::ostringstream out;
  out << "dim: " << c.dim() << '\n' << "hypersurfaces: " << c.hypersurface_count() << '\n';
  for (const auto& a : c.nonempty_intersections())
    if (a.size() >= 2) out << a.to_string() << '\n';
  return out.str();
}

}  // namespace corners
