#include "mds/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "mds/error.hpp"

namespace mds {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

unsigned long long parse_uint(std::string_view tok, std::size_t line_no) {
  unsigned long long value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

Graph build(std::size_t n, const std::vector<Edge>& edges) {
  if (n == 0) throw ValidationError("graph must have at least one vertex");
  for (const auto& [u, v] : edges) {
    if (u == v) throw ValidationError("self-loop on vertex " + std::to_string(u));
  }
  return Graph(n, edges);
}

Graph load_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError(line_no, "malformed problem line, expected 'p edge <n> <m>'");
      }
      n = parse_uint(tok[2], line_no);
      parse_uint(tok[3], line_no);
      continue;
    }
    if (tok[0] == "e") {
      if (!n) throw ParseError(line_no, "edge before problem line");
      if (tok.size() != 3) throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      const auto u = parse_uint(tok[1], line_no);
      const auto v = parse_uint(tok[2], line_no);
      if (u < 1 || v < 1 || u > *n || v > *n) {
        throw RangeError("line " + std::to_string(line_no) + ": vertex out of range 1.." +
                         std::to_string(*n));
      }
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (!n) throw ParseError(line_no, "missing problem line");
  return build(*n, edges);
}

Graph load_edgelist(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> declared_n;
  std::size_t max_index_plus_one = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    const auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    view.remove_prefix(first);
    if (view.front() == '#') {
      auto tok = split_ws(view.substr(1));
      if (!tok.empty() && tok[0].starts_with("n=")) {
        if (declared_n) throw ParseError(line_no, "duplicate n= header");
        declared_n = parse_uint(tok[0].substr(2), line_no);
      }
      continue;
    }
    const auto tok = split_ws(view);
    if (tok.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
    const auto u = parse_uint(tok[0], line_no);
    const auto v = parse_uint(tok[1], line_no);
    if (declared_n && (u >= *declared_n || v >= *declared_n)) {
      throw RangeError("line " + std::to_string(line_no) + ": vertex out of range 0.." +
                       std::to_string(*declared_n - 1));
    }
    if (u > 0xFFFFFFFEull || v > 0xFFFFFFFEull) {
      throw RangeError("line " + std::to_string(line_no) + ": vertex index too large");
    }
    max_index_plus_one = std::max<std::size_t>(max_index_plus_one, std::max(u, v) + 1);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return build(declared_n.value_or(max_index_plus_one), edges);
}

}  // namespace

std::optional<GraphFormat> parse_graph_format(std::string_view name) {
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "edgelist") return GraphFormat::edgelist;
  return std::nullopt;
}

GraphFormat format_from_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".col" || ext == ".clq" || ext == ".dimacs") return GraphFormat::dimacs;
  return GraphFormat::edgelist;
}

Graph load_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::dimacs ? load_dimacs(in) : load_edgelist(in);
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file " + path.string());
  return load_graph(in, format);
}

Graph load_graph(const std::filesystem::path& path) {
  return load_graph(path, format_from_path(path));
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format,
                 std::span<const std::string> comments) {
  const auto edges = g.edges();
  if (format == GraphFormat::dimacs) {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    out << "# n=" << g.order() << '\n';
    for (const auto& c : comments) out << "# " << c << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  }
}

std::string serialize_graph(const Graph& g, GraphFormat format,
                            std::span<const std::string> comments) {
  std::ostringstream out;
  write_graph(out, g, format, comments);
  return out.str();
}

}  // namespace mds
