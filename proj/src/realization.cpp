#include "corners/realization.hpp"

#include <algorithm>
#include <sstream>

#include "corners/error.hpp"
#include "corners/facet_io.hpp"

namespace corners {
namespace {

Error precondition(const std::string& why) { return Error(ErrorCode::PastingPrecondition, why); }

Simplex map_face(const Simplex& face, std::span<const Vertex> map) {
  std::vector<Vertex> image;
  for (Vertex v : face) image.push_back(map[static_cast<std::size_t>(v)]);
  return Simplex(std::move(image));
}

// One point per codimension-n face: x_k in H_{k^c} paired with y_k in the
// model face missing vertex k.
std::vector<GlueSite> glue_sites_for(const Simplex& target) {
  std::vector<Vertex> all(target.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
  const Simplex model_vertices(std::move(all));
  std::vector<GlueSite> sites;
  for (std::size_t i = 0; i < target.size(); ++i)
    sites.push_back({target.without(target[i]), model_vertices.without(static_cast<Vertex>(i))});
  return sites;
}

}  // namespace

CornerStructure ModelBlock::structure() const { return CornerStructure::hyperquadrant_model(simplex_dim).padded_to(dim); }

std::string ModelBlock::description() const {
  std::ostringstream out;
  out << "hyperquadrant piece of S^" << simplex_dim + 2;
  if (kind == ModelKind::ProductPadding) out << " times a closed " << dim - simplex_dim - 2 << "-manifold";
  return out.str();
}

ModelBlock model_block(int n, int d) {
  if (n < 0) throw precondition("model block needs a simplex dimension ≥ 0");
  if (d < n + 2)
    throw precondition("model block for Δ_" + std::to_string(n) + " needs dimension ≥ " + std::to_string(n + 2) +
                       ", got " + std::to_string(d));
  return {n, d, d == n + 2 ? ModelKind::HyperquadrantSphere : ModelKind::ProductPadding};
}

CornerStructure connected_sum(const CornerStructure& x, const CornerStructure& m,
                              std::span<const Vertex> model_to_current, std::span<const GlueSite> sites) {
  if (x.dim() != m.dim())
    throw precondition("connected sum of dimensions " + std::to_string(x.dim()) + " and " + std::to_string(m.dim()));
  if (static_cast<int>(model_to_current.size()) != m.hypersurface_count())
    throw precondition("hypersurface identification has the wrong length");
  std::vector<Vertex> seen(model_to_current.begin(), model_to_current.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw precondition("hypersurface identification is not injective");
  if (!seen.empty() && (seen.front() < 0 || seen.back() >= x.hypersurface_count()))
    throw precondition("hypersurface identification leaves the current structure");

  for (const auto& site : sites) {
    if (!x.intersects(site.current_face))
      throw precondition("glue point on empty face {" + site.current_face.to_string() + "}");
    if (!m.intersects(site.model_face))
      throw precondition("model glue point on empty face {" + site.model_face.to_string() + "}");
    if (map_face(site.model_face, model_to_current) != site.current_face)
      throw precondition("local corner structures differ at {" + site.current_face.to_string() + "}");
  }

  std::vector<Simplex> faces = x.nonempty_intersections();
  for (const auto& a : m.nonempty_intersections()) faces.push_back(map_face(a, model_to_current));
  return CornerStructure::make(x.dim(), x.hypersurface_count(), std::move(faces));
}

PastingStep pasting_step(const CornerStructure& c, const Simplex& target, int d_target) {
  for (Vertex v : target)
    if (v >= c.hypersurface_count())
      throw precondition("vertex " + std::to_string(v) + " of {" + target.to_string() +
                         "} is not a hypersurface; its boundary faces are missing");
  if (c.intersects(target)) throw precondition("simplex {" + target.to_string() + "} is already present");
  for (Vertex k : target) {
    const Simplex face = target.without(k);
    if (!c.intersects(face))
      throw precondition("boundary face {" + face.to_string() + "} of {" + target.to_string() + "} is missing");
  }
  const int needed = std::max(c.dim(), static_cast<int>(target.size()) + 1);
  if (d_target < needed)
    throw precondition("adding {" + target.to_string() + "} needs dimension ≥ " + std::to_string(needed) + ", got " +
                       std::to_string(d_target));

  PastingStep step;
  step.target = target;
  step.model = model_block(static_cast<int>(target.size()) - 1, d_target);
  step.dimension_before = c.dim();
  step.dimension_after = d_target;
  step.glue_sites = glue_sites_for(target);
  return step;
}

CornerStructure apply_pasting(const CornerStructure& c, const Simplex& target, int d_target) {
  const PastingStep step = pasting_step(c, target, d_target);
  const std::vector<Vertex> model_to_current(target.begin(), target.end());
  return connected_sum(c.padded_to(d_target), step.model.structure(), model_to_current, step.glue_sites);
}

ConstructionPlan plan(const SimplicialComplex& k, int d) {
  if (k.is_void()) throw Error(ErrorCode::EmptyTarget, "the void complex has no realization plan");
  if (k.vertex_count() == 0) throw Error(ErrorCode::EmptyTarget, "the complex {∅} has no vertices to realize");
  if (k.has_ghost_vertices())
    throw Error(ErrorCode::GhostVertex, "every vertex must lie in a facet to become a hypersurface");
  if (d < k.dimension() + 2)
    throw Error(ErrorCode::DimensionTooSmall, "dimension " + std::to_string(d) + " < " +
                                                  std::to_string(k.dimension() + 2) + " = dim K + 2");

  ConstructionPlan p{CornerStructure::disjoint_boundary(d, k.vertex_count()), {}, std::nullopt};
  CornerStructure current = p.base;
  for (const auto& s : k.faces()) {
    if (s.size() < 2) continue;
    p.steps.push_back(pasting_step(current, s, d));
    current = apply_pasting(current, s, d);
  }
  p.final_structure = std::move(current);
  return p;
}

CornerStructure replay(const ConstructionPlan& p) {
  CornerStructure current = p.base;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const auto& step = p.steps[i];
    const std::string where = "step " + std::to_string(i) + " (add {" + step.target.to_string() + "})";
    try {
      if (step.dimension_before != current.dim())
        throw Error(ErrorCode::ReplayFailure, "recorded dimension_before " + std::to_string(step.dimension_before) +
                                                  " but the structure has dimension " + std::to_string(current.dim()));
      const PastingStep expected = pasting_step(current, step.target, step.dimension_after);
      if (expected != step) throw Error(ErrorCode::ReplayFailure, "recorded glue sites or model block disagree");
      current = apply_pasting(current, step.target, step.dimension_after);
    } catch (const Error& e) {
      throw Error(ErrorCode::ReplayFailure, where + ": " + e.what());
    }
  }
  if (p.final_structure && *p.final_structure != current)
    throw Error(ErrorCode::ReplayFailure, "replayed structure differs from the recorded final structure");
  return current;
}

ConstructionPlan parse_plan(std::string_view text) {
  std::optional<CornerStructure> base;
  std::vector<std::pair<Simplex, int>> additions;
  int line_no = 0;
  for (auto raw : split_lines(text)) {
    ++line_no;
    const auto line = strip_line(raw);
    if (line.empty()) continue;
    const std::string where = "plan line " + std::to_string(line_no);
    if (line.starts_with("base ")) {
      if (base) throw Error(ErrorCode::MalformedInput, where + ": second base line");
      std::string header(line.substr(5));
      // The base reference is a corner-file header written on one line.
      const auto split = header.find("hypersurfaces:");
      if (split == std::string::npos) throw Error(ErrorCode::MalformedInput, where + ": base lacks 'hypersurfaces:'");
      header.insert(split, "\n");
      base = parse_corner_file(header);
    } else if (line.starts_with("step add ")) {
      if (!base) throw Error(ErrorCode::MalformedInput, where + ": step before base");
      const auto body = line.substr(9);
      const auto dim_at = body.rfind(" dim ");
      if (dim_at == std::string_view::npos) throw Error(ErrorCode::MalformedInput, where + ": step lacks 'dim <d>'");
      const auto vertices = parse_int_list(body.substr(0, dim_at), where);
      const auto dim = parse_int_list(body.substr(dim_at + 5), where);
      if (dim.size() != 1) throw Error(ErrorCode::MalformedInput, where + ": expected a single dimension");
      Simplex target(vertices);
      if (target.size() != vertices.size()) throw Error(ErrorCode::MalformedInput, where + ": repeated vertex");
      additions.emplace_back(std::move(target), dim.front());
    } else {
      throw Error(ErrorCode::MalformedInput, where + ": expected 'base ...' or 'step add ...'");
    }
  }
  if (!base) throw Error(ErrorCode::MalformedInput, "plan has no base line");

  ConstructionPlan p{*base, {}, std::nullopt};
  int dim = base->dim();
  for (auto& [target, d] : additions) {
    PastingStep step;
    step.target = target;
    step.dimension_before = dim;
    step.dimension_after = d;
    const int n = static_cast<int>(target.size()) - 1;
    step.model = {n, d, d == n + 2 ? ModelKind::HyperquadrantSphere : ModelKind::ProductPadding};
    step.glue_sites = glue_sites_for(target);
    p.steps.push_back(std::move(step));
    dim = d;
  }
  return p;
}

std::string format_plan(const ConstructionPlan& p) {
  std::ostringstream out;
  out << "base dim: " << p.base.dim() << " hypersurfaces: " << p.base.hypersurface_count() << '\n';
  for (const auto& step : p.steps) out << "step add " << step.target.to_string() << " dim " << step.dimension_after << '\n';
  return out.str();
}

}  // namespace corners
