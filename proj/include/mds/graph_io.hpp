#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "mds/graph.hpp"

namespace mds {

// dimacs:   optional `c ...` comments, one `p edge <n> <m>` header, then
//           `e <u> <v>` lines with 1-based vertices.
// edgelist: `<u> <v>` per line, 0-based; lines starting with `#` are comments,
//           and a `# n=<count>` comment fixes the vertex count so isolated
//           trailing vertices survive a round trip.
enum class GraphFormat { dimacs, edgelist };

std::optional<GraphFormat> parse_graph_format(std::string_view name);

/// Picks a format from the file extension: .col/.clq/.dimacs -> dimacs,
/// anything else -> edgelist.
GraphFormat format_from_path(const std::filesystem::path& path);

Graph load_graph(std::istream& in, GraphFormat format);
Graph load_graph(const std::filesystem::path& path, GraphFormat format);
Graph load_graph(const std::filesystem::path& path);

/// Writes edges sorted with u < v. `comments` are emitted as comment lines
/// ahead of the body (without the leading marker).
void write_graph(std::ostream& out, const Graph& g, GraphFormat format,
                 std::span<const std::string> comments = {});
std::string serialize_graph(const Graph& g, GraphFormat format,
                            std::span<const std::string> comments = {});

}  // namespace mds
