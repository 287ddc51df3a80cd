#include "corners/facet_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "corners/error.hpp"

namespace corners {

std::string_view strip_line(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<int> parse_int_list(std::string_view line, std::string_view context) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    auto end = line.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = line.size();
    const auto token = line.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
      throw Error(ErrorCode::MalformedInput,
                  std::string(context) + ": expected a non-negative integer, got '" + std::string(token) + "'");
    }
    values.push_back(value);
    pos = end;
  }
  return values;
}

SimplicialComplex parse_facet_file(std::string_view text) {
  int vertex_count = -1;
  bool is_void = false;
  std::vector<Simplex> facets;
  int line_no = 0;
  for (auto raw : split_lines(text)) {
    ++line_no;
    const auto line = strip_line(raw);
    if (line.empty()) continue;
    const std::string where = "facet file line " + std::to_string(line_no);
    if (line.starts_with("vertices:")) {
      if (vertex_count >= 0) throw Error(ErrorCode::MalformedInput, where + ": duplicate header");
      auto values = parse_int_list(line.substr(9), where);
      if (values.size() != 1) throw Error(ErrorCode::MalformedInput, where + ": expected 'vertices: n'");
      vertex_count = values.front();
      continue;
    }
    if (line == "VOID") {
      is_void = true;
      continue;
    }
    if (vertex_count < 0) throw Error(ErrorCode::MalformedInput, where + ": facet before 'vertices:' header");
    auto values = parse_int_list(line, where);
    Simplex facet(values);
    if (facet.size() != values.size()) throw Error(ErrorCode::MalformedInput, where + ": repeated vertex");
    facets.push_back(std::move(facet));
  }
  if (is_void) {
    if (!facets.empty()) throw Error(ErrorCode::MalformedInput, "VOID complex must not list facets");
    return SimplicialComplex::void_complex(std::max(vertex_count, 0));
  }
  if (vertex_count < 0) throw Error(ErrorCode::MalformedInput, "facet file lacks a 'vertices: n' header");
  return SimplicialComplex::from_facets(vertex_count, std::move(facets));
}

std::string format_facet_file(const SimplicialComplex& complex) {
  std::ostringstream out;
  out << "vertices: " << complex.vertex_count() << '\n';
  if (complex.is_void()) {
    out << "VOID\n";
    return out.str();
  }
  for (const auto& f : complex.facets())
    if (!f.empty()) out << f.to_string() << '\n';
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace corners
