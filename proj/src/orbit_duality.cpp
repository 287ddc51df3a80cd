#include "corners/orbit_duality.hpp"

#include <algorithm>
#include <sstream>

#include "corners/error.hpp"
#include "corners/simplicial_homology.hpp"

namespace corners {
namespace {

std::string braced(const Simplex& s) { return "{" + s.to_string() + "}"; }

Simplex complement(const Simplex& s, int vertex_count) {
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < vertex_count; ++v)
    if (!s.contains(v)) rest.push_back(v);
  return Simplex(std::move(rest));
}

}  // namespace

StratumDecomposition stratify(const SimplicialComplex& sigma, int ambient_rank) {
  if (sigma.is_void()) throw Error(ErrorCode::VoidComplex, "the void complex has no orbit-space strata");
  const int n = sigma.vertex_count();
  if (ambient_rank < n)
    throw Error(ErrorCode::AmbientTooSmall,
                "ambient rank " + std::to_string(ambient_rank) + " < |V| = " + std::to_string(n));
  if (n > kMaxPowerSetVertices)
    throw Error(ErrorCode::TooManyVertices, std::to_string(n) + " vertices exceed the power-set limit");

  StratumDecomposition d{sigma, ambient_rank, {}, {}};
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t tau = 0; tau <= full; ++tau) {
    if (sigma.contains_mask(full & ~tau))
      d.p_strata.push_back(Simplex::from_mask(tau));
    else
      d.dual_strata.push_back(Simplex::from_mask(tau));
  }
  std::sort(d.p_strata.begin(), d.p_strata.end(), BySizeThenLex{});
  std::sort(d.dual_strata.begin(), d.dual_strata.end(), BySizeThenLex{});
  return d;
}

bool partition_check(const StratumDecomposition& d) {
  const int n = d.sigma.vertex_count();
  if (n > kMaxPowerSetVertices) return false;
  std::vector<Simplex> p = d.p_strata, q = d.dual_strata;
  std::sort(p.begin(), p.end());
  std::sort(q.begin(), q.end());
  if (std::adjacent_find(p.begin(), p.end()) != p.end() || std::adjacent_find(q.begin(), q.end()) != q.end())
    return false;

  std::vector<Simplex> together;
  std::set_union(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(together));
  if (together.size() != p.size() + q.size()) return false;  // overlap
  if (together.size() != (std::size_t{1} << n)) return false;
  for (const auto& s : together)
    if (!s.empty() && s.vertices().back() >= n) return false;

  std::vector<Simplex> complements;
  for (const auto& tau : p) complements.push_back(complement(tau, n));
  std::sort(complements.begin(), complements.end());
  std::vector<Simplex> sigma_faces = d.sigma.faces();
  std::sort(sigma_faces.begin(), sigma_faces.end());
  if (complements != sigma_faces) return false;

  std::vector<Simplex> dual_faces = alexander_dual(d.sigma).faces();
  std::sort(dual_faces.begin(), dual_faces.end());
  return dual_faces == q;
}

std::string format_strata_report(const StratumDecomposition& d) {
  const int n = d.sigma.vertex_count();
  std::ostringstream out;
  out << "vertices: " << n << " ambient: " << d.ambient_rank << " euclidean_and_radial_rank: "
      << d.ambient_rank - n + 1 << '\n';
  out << "p_strata: " << d.p_strata.size() << '\n';
  for (const auto& tau : d.p_strata) out << "  " << braced(tau) << " from face " << braced(complement(tau, n)) << '\n';
  out << "dual_strata: " << d.dual_strata.size() << '\n';
  for (const auto& tau : d.dual_strata) out << "  " << braced(tau) << '\n';
  out << "partition=" << (partition_check(d) ? "true" : "false") << '\n';
  return out.str();
}

DualityReport duality_verify(const SimplicialComplex& k) {
  const int n = k.vertex_count();
  if (k.is_void()) throw Error(ErrorCode::DualityPrecondition, "K must not be void");
  if (n < 2) throw Error(ErrorCode::DualityPrecondition, "need at least two vertices");
  if (k == SimplicialComplex::full_simplex(n)) throw Error(ErrorCode::DualityPrecondition, "K must not be the full simplex");

  DualityReport report;
  report.vertex_count = n;
  report.cohomology = reduced_cohomology(k);
  report.dual_homology = reduced_homology(alexander_dual(k));

  // Both sides vanish outside [-1, n - 1].
  const int lo = -1, hi = n - 1;
  bool acyclic = true;
  for (int r = lo; r <= hi; ++r) acyclic = acyclic && group_at(report.cohomology, r).is_zero();
  report.determined = !acyclic;

  for (int t = 2 * lo; t <= 2 * hi; ++t) {
    bool ok = true;
    for (int r = lo - n; r <= hi + n && ok; ++r)
      ok = group_at(report.cohomology, r) == group_at(report.dual_homology, t - r);
    if (ok) report.consistent_totals.push_back(t);
  }
  report.uniform = !report.consistent_totals.empty();
  if (report.consistent_totals.size() == 1) report.shift = report.consistent_totals.front() - n;
  report.paper_shift_matches = std::find(report.consistent_totals.begin(), report.consistent_totals.end(), n - 2) !=
                               report.consistent_totals.end();

  const int total = report.shift ? *report.shift + n : n - 2;
  for (int r = lo; r <= n - 2; ++r)
    report.rows.push_back({r, group_at(report.cohomology, r), total - r, group_at(report.dual_homology, total - r)});
  return report;
}

std::string duality_summary_line(const DualityReport& report) {
  std::ostringstream out;
  out << "shift=";
  if (report.shift)
    out << *report.shift << "+|V|";
  else if (report.uniform && !report.determined)
    out << "any";
  else
    out << "none";
  out << " uniform=" << (report.uniform ? "true" : "false")
      << " paper_shift_matches=" << (report.paper_shift_matches ? "true" : "false");
  return out.str();
}

std::string format_duality_report(const DualityReport& report) {
  std::ostringstream out;
  out << "# |V| = " << report.vertex_count << "; classical statement: H~^r(K) = H~_{|V|-2-r}(K^v)\n";
  out << "degree\tgroup(K)\tgroup(K^v)\tshift\n";
  for (const auto& row : report.rows) {
    out << row.degree << "\tH~^" << row.degree << " = " << row.cohomology.to_string() << "\tH~_" << row.dual_degree
        << " = " << row.dual_homology.to_string() << '\t';
    if (!row.cohomology.is_zero() && report.shift)
      out << *report.shift << "+|V|";
    else
      out << '-';
    out << '\n';
  }
  out << duality_summary_line(report) << '\n';
  return out.str();
}

KTheoryRational k_theory_rational(const SimplicialComplex& sigma) {
  if (sigma.is_void()) throw Error(ErrorCode::VoidComplex, "rational K-theory needs a non-void complex");
  KTheoryRational k;
  for (const auto& [degree, g] : reduced_homology(sigma)) {
    if (degree % 2 == 0)
      k.k0_rank += g.rank;
    else
      k.k1_rank += g.rank;
  }
  return k;
}

std::string format_k_theory_report(const KTheoryRational& k) {
  std::ostringstream out;
  out << "K_0 (x) Q = Q^" << k.k0_rank << '\n' << "K_1 (x) Q = Q^" << k.k1_rank << '\n';
  return out.str();
}

}  // namespace corners
