#include "corners/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "corners/corner_structure.hpp"
#include "corners/error.hpp"
#include "corners/facet_io.hpp"
#include "corners/orbit_duality.hpp"
#include "corners/realization.hpp"
#include "corners/simplicial_homology.hpp"

namespace corners::cli {
namespace {

SimplicialComplex load_complex(const std::string& path) { return parse_facet_file(read_text_file(path)); }
CornerStructure load_corners(const std::string& path) { return parse_corner_file(read_text_file(path)); }

// A corner file starts with `dim:` or `hypersurfaces:`; anything else is
// read as a facet file.
SimplicialComplex load_sigma_from_either(const std::string& path) {
  const std::string text = read_text_file(path);
  for (auto raw : split_lines(text)) {
    const auto line = strip_line(raw);
    if (line.empty()) continue;
    if (line.starts_with("dim:") || line.starts_with("hypersurfaces:")) return extract_sigma(parse_corner_file(text));
    break;
  }
  return parse_facet_file(text);
}

std::string conormal_report(const CornerStructure& c) {
  const GradedGroups cn = conormal_homology(c);
  std::ostringstream out;
  out << format_groups(cn, "Hcn_");
  std::size_t even = 0, odd = 0;
  for (const auto& [p, g] : cn) (p % 2 == 0 ? even : odd) += g.rank;
  out << "Hcn_even (x) Q = Q^" << even << '\n' << "Hcn_odd (x) Q = Q^" << odd << '\n';

  const SimplicialComplex sigma = extract_sigma(c);
  if (sigma.is_void()) {
    out << "shift: Sigma is void (no boundary)\n";
    return out.str();
  }
  const GradedGroups reduced = reduced_homology(sigma);
  bool matches = true;
  for (int p = 0; p <= std::max(c.dim(), sigma.dimension() + 1); ++p)
    matches = matches && group_at(cn, p) == group_at(reduced, p - 1);
  out << "shift: Hcn_p = H~_{p-1}(Sigma) " << (matches ? "holds" : "FAILS") << '\n';
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Corner structure complexes: homology, duality and realization", "corners"};
  app.require_subcommand(1, 1);

  std::string input, second, out_path;
  int dim = -1, ambient = -1;
  std::function<std::string()> action;

  auto verb = [&](const std::string& name, const std::string& help, const std::string& input_help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, input_help)->required();
    sub->add_option("-o,--out", out_path, "write the report to a file instead of stdout");
    return sub;
  };

  verb("homology", "reduced integral homology of a complex", "facet file")->final_callback([&] {
    action = [&] { return format_homology_report(reduced_homology(load_complex(input))); };
  });
  verb("cohomology", "reduced integral cohomology of a complex", "facet file")->final_callback([&] {
    action = [&] { return format_cohomology_report(reduced_cohomology(load_complex(input))); };
  });
  verb("dual", "Alexander dual over the same vertex set", "facet file")->final_callback([&] {
    action = [&] { return format_facet_file(alexander_dual(load_complex(input))); };
  });
  auto* join_cmd = verb("join", "join of two complexes", "first facet file");
  join_cmd->add_option("second", second, "second facet file")->required();
  join_cmd->final_callback([&] {
    action = [&] {
      const auto a = load_complex(input);
      const auto b = load_complex(second);
      const auto j = join(a, b);
      return "# second operand relabeled v -> v + " + std::to_string(j.second_offset) + "\n" +
             format_facet_file(j.complex);
    };
  });
  verb("sigma", "corner structure complex of a corner file", "corner file")->final_callback([&] {
    action = [&] { return format_facet_file(extract_sigma(load_corners(input))); };
  });
  verb("conormal", "conormal homology of a corner file", "corner file")->final_callback([&] {
    action = [&] { return conormal_report(load_corners(input)); };
  });
  auto* realize_cmd = verb("realize", "plan a corner structure realizing a complex", "facet file");
  realize_cmd->add_option("-d,--dim", dim, "manifold dimension, at least dim K + 2")->required();
  realize_cmd->final_callback([&] { action = [&] { return format_plan(plan(load_complex(input), dim)); }; });
  verb("replay", "replay a plan and print the final corner file", "plan file")->final_callback([&] {
    action = [&] { return format_corner_file(replay(parse_plan(read_text_file(input)))); };
  });
  auto* stratify_cmd = verb("stratify", "orbit-space strata of a complex", "facet file");
  stratify_cmd->add_option("-m,--ambient", ambient, "ambient rank m >= |V| (default |V|)");
  stratify_cmd->final_callback([&] {
    action = [&] {
      const auto k = load_complex(input);
      return format_strata_report(stratify(k, ambient < 0 ? k.vertex_count() : ambient));
    };
  });
  verb("duality", "compare H~^r(K) with H~_s(K^v)", "facet file")->final_callback([&] {
    action = [&] { return format_duality_report(duality_verify(load_complex(input))); };
  });
  verb("ktheory", "rational K-theory ranks of b-compact operators", "facet or corner file")->final_callback([&] {
    action = [&] { return format_k_theory_report(k_theory_rational(load_sigma_from_either(input))); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::string report = action();
    if (out_path.empty()) {
      out << report;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::MalformedInput, "cannot write '" + out_path + "'");
      file << report;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::MalformedInput ? 2 : 1;
  }
}

}  // namespace corners::cli
