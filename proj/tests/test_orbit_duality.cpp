#include <doctest.h>

#include <random>
#include <set>

#include "corners/error.hpp"
#include "corners/orbit_duality.hpp"
#include "corners/simplicial_homology.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace corners;
namespace t = corners::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::MalformedInput;
}

std::vector<Simplex> subsets(std::initializer_list<std::vector<Vertex>> l) {
  std::vector<Simplex> out;
  for (const auto& v : l) out.emplace_back(v);
  return out;
}

bool is_full(const SimplicialComplex& k) {
  return k == SimplicialComplex::full_simplex(k.vertex_count());
}

}  // namespace

TEST_CASE("stratify examples") {
  SUBCASE("single vertex") {
    const auto d = stratify(SimplicialComplex::discrete(1), 1);
    CHECK(d.p_strata == subsets({{}, {0}}));
    CHECK(d.dual_strata.empty());
    CHECK(alexander_dual(d.sigma).is_void());
    CHECK(partition_check(d));
  }
  SUBCASE("two isolated vertices") {
    const auto d = stratify(SimplicialComplex::discrete(2), 3);
    CHECK(d.ambient_rank == 3);
    CHECK(d.p_strata == subsets({{0}, {1}, {0, 1}}));
    CHECK(d.dual_strata == subsets({{}}));
    CHECK(partition_check(d));
  }
  SUBCASE("hollow triangle") {
    const auto d = stratify(SimplicialComplex::simplex_boundary(3), 3);
    CHECK(d.dual_strata == subsets({{}}));
    CHECK(d.p_strata.size() == 7);
  }
  SUBCASE("full simplex has no dual strata") {
    for (int n = 1; n <= 5; ++n) CHECK(stratify(SimplicialComplex::full_simplex(n), n).dual_strata.empty());
  }
  SUBCASE("errors") {
    CHECK(code_of([] { stratify(SimplicialComplex::discrete(3), 2); }) == ErrorCode::AmbientTooSmall);
    CHECK(code_of([] { stratify(SimplicialComplex::void_complex(2), 2); }) == ErrorCode::VoidComplex);
  }
}

TEST_CASE("strata report") {
  const auto text = format_strata_report(stratify(SimplicialComplex::discrete(2), 2));
  CHECK(text.find("partition=true") != std::string::npos);
  CHECK(text == format_strata_report(stratify(SimplicialComplex::discrete(2), 2)));
}

TEST_CASE("partition holds for every complex on at most 5 vertices") {
  std::size_t checked = 0;
  for (int n = 0; n <= 5; ++n) {
    for (const auto& k : t::all_complexes(n)) {
      const auto d = stratify(k, n);
      CHECK(partition_check(d));
      CHECK(d.p_strata.size() + d.dual_strata.size() == (std::size_t{1} << n));
      const auto dual = alexander_dual(k);
      const std::size_t dual_faces = dual.is_void() ? 0 : dual.faces().size();
      CHECK(d.dual_strata.size() == dual_faces);
      ++checked;
    }
  }
  CHECK(checked == 1 + 2 + 5 + 19 + 167 + 7580);
}

TEST_CASE("partition_check detects a moved stratum") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    auto d = stratify(t::random_complex(rng, n), n);
    auto broken = d;
    if (!broken.p_strata.empty() && (rng() % 2 == 0 || broken.dual_strata.empty())) {
      const auto i = rng() % broken.p_strata.size();
      broken.dual_strata.push_back(broken.p_strata[i]);
      broken.p_strata.erase(broken.p_strata.begin() + static_cast<long>(i));
    } else {
      const auto i = rng() % broken.dual_strata.size();
      broken.p_strata.push_back(broken.dual_strata[i]);
      broken.dual_strata.erase(broken.dual_strata.begin() + static_cast<long>(i));
    }
    CHECK_FALSE(partition_check(broken));

    auto duplicated = d;
    duplicated.p_strata.push_back(duplicated.p_strata.front());
    CHECK_FALSE(partition_check(duplicated));
  }
}

TEST_CASE("duality examples") {
  SUBCASE("four isolated points") {
    const auto k = SimplicialComplex::discrete(4);
    const auto r = duality_verify(k);
    CHECK(group_at(r.cohomology, 0) == HomologyGroup{3, {}});
    CHECK(group_at(r.dual_homology, 1) == HomologyGroup{3, {}});
    CHECK(r.determined);
    REQUIRE(r.shift);
    CHECK(*r.shift == -3);
    CHECK(r.uniform);
    CHECK_FALSE(r.paper_shift_matches);
    CHECK(duality_summary_line(r) == "shift=-3+|V| uniform=true paper_shift_matches=false");
  }
  SUBCASE("hollow triangle against {∅}") {
    const auto r = duality_verify(SimplicialComplex::simplex_boundary(3));
    CHECK(alexander_dual(SimplicialComplex::simplex_boundary(3)) == SimplicialComplex::from_facets(3, {}));
    CHECK(group_at(r.cohomology, 1) == HomologyGroup{1, {}});
    CHECK(group_at(r.dual_homology, -1) == HomologyGroup{1, {}});
    REQUIRE(r.shift);
    CHECK(*r.shift == -3);
  }
  SUBCASE("acyclic complex pins nothing down") {
    const auto k = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}});
    const auto r = duality_verify(k);
    CHECK_FALSE(r.determined);
    CHECK(r.uniform);
    CHECK_FALSE(r.shift);
    CHECK(duality_summary_line(r).starts_with("shift=any "));
  }
  SUBCASE("torsion crosses over") {
    const auto r = duality_verify(t::rp2());
    CHECK(group_at(r.cohomology, 2) == HomologyGroup{0, {BigInt(2)}});
    CHECK(group_at(r.dual_homology, 1) == HomologyGroup{0, {BigInt(2)}});
    REQUIRE(r.shift);
    CHECK(*r.shift == -3);
  }
  SUBCASE("report is identical after a double dual") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
      const auto k = t::random_complex(rng, 2 + static_cast<int>(rng() % 4));
      if (is_full(k)) continue;
      CHECK(format_duality_report(duality_verify(k)) ==
            format_duality_report(duality_verify(alexander_dual(alexander_dual(k)))));
    }
  }
  SUBCASE("report layout") {
    const auto text = format_duality_report(duality_verify(SimplicialComplex::discrete(4)));
    CHECK(text.find("degree\tgroup(K)\tgroup(K^v)\tshift\n") != std::string::npos);
    CHECK(text.find("0\tH~^0 = Z^3\tH~_1 = Z^3\t-3+|V|\n") != std::string::npos);
    CHECK(text.ends_with("shift=-3+|V| uniform=true paper_shift_matches=false\n"));
  }
  SUBCASE("preconditions") {
    CHECK(code_of([] { duality_verify(SimplicialComplex::void_complex(3)); }) == ErrorCode::DualityPrecondition);
    CHECK(code_of([] { duality_verify(SimplicialComplex::full_simplex(3)); }) == ErrorCode::DualityPrecondition);
    CHECK(code_of([] { duality_verify(SimplicialComplex::discrete(1)); }) == ErrorCode::DualityPrecondition);
  }
}

TEST_CASE("duality shift is uniform on 3 to 5 vertices") {
  std::set<int> shifts;
  std::size_t checked = 0;
  for (int n = 3; n <= 5; ++n) {
    for (const auto& k : t::all_complexes(n)) {
      if (is_full(k)) continue;
      const auto r = duality_verify(k);
      CHECK(r.uniform);
      if (r.shift) shifts.insert(*r.shift);
      if (r.shift)
        for (const auto& row : r.rows) CHECK(row.dual_degree == n - 3 - row.degree);
      ++checked;
    }
  }
  CHECK(checked == 19 + 167 + 7580 - 3);
  CHECK(shifts == std::set<int>{-3});
}

TEST_CASE("duality agrees with independent rational and mod p ranks") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& k : t::all_complexes(n)) {
      if (is_full(k)) continue;
      const auto dual = alexander_dual(k);
      for (long long p : {0LL, 2LL, 3LL}) {
        const auto bk = p == 0 ? t::rational_reduced_betti(k) : t::modular_reduced_betti(k, p);
        const auto bd = p == 0 ? t::rational_reduced_betti(dual) : t::modular_reduced_betti(dual, p);
        // Over a field, cohomology and homology have the same dimension.
        for (int r = -1; r <= n - 2; ++r) {
          const int s = n - 3 - r;
          const auto at = [](const std::vector<std::size_t>& b, int deg) {
            const auto i = static_cast<std::size_t>(deg + 1);
            return i < b.size() ? b[i] : std::size_t{0};
          };
          CHECK(at(bk, r) == (s >= -1 ? at(bd, s) : 0));
        }
      }
    }
  }
}

TEST_CASE("rational K-theory") {
  CHECK(k_theory_rational(SimplicialComplex::simplex_boundary(3)) == KTheoryRational{0, 1});
  CHECK(k_theory_rational(t::rp2()) == KTheoryRational{0, 0});
  for (int n = 1; n <= 5; ++n) CHECK(k_theory_rational(SimplicialComplex::full_simplex(n)) == KTheoryRational{0, 0});
  CHECK(k_theory_rational(SimplicialComplex::discrete(4)) == KTheoryRational{3, 0});
  CHECK(k_theory_rational(SimplicialComplex::simplex_boundary(4)) == KTheoryRational{1, 0});
  CHECK(k_theory_rational(SimplicialComplex::from_facets(2, {})) == KTheoryRational{0, 1});
  CHECK(format_k_theory_report(KTheoryRational{2, 1}) == "K_0 (x) Q = Q^2\nK_1 (x) Q = Q^1\n");
  CHECK(code_of([] { k_theory_rational(SimplicialComplex::void_complex(2)); }) == ErrorCode::VoidComplex);

  for (int n = 0; n <= 4; ++n) {
    for (const auto& k : t::all_complexes(n)) {
      const auto kt = k_theory_rational(k);
      std::size_t total = 0, even = 0;
      const auto b = t::rational_reduced_betti(k);
      for (std::size_t i = 0; i < b.size(); ++i) {
        total += b[i];
        if ((static_cast<int>(i) - 1) % 2 == 0) even += b[i];
      }
      CHECK(kt.k0_rank + kt.k1_rank == total);
      CHECK(kt.k0_rank == even);
    }
  }
}
