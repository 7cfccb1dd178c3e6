#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bucl/graph.hpp"

namespace bucl {

// Text format: `graph <N>` on the first non-comment line, then one `<u> <v>`
// line per edge with 0 <= u < v < N. Lines starting with '#' are comments.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path, std::vector<std::string>* header = nullptr);

/// Comment lines preceding the `graph` line (without the leading '#') are
/// returned in `header` when non-null.
Graph read_graph(std::istream& in, std::vector<std::string>* header);

void write_graph(std::ostream& out, const Graph& G, const std::vector<std::string>& header = {});
void write_graph_file(const std::filesystem::path& path, const Graph& G, const std::vector<std::string>& header = {});

/// Several graphs in one stream, each introduced by its own `graph` line.
struct CatalogEntry {
  std::vector<std::string> header;
  Graph graph;
};
std::vector<CatalogEntry> read_catalog(std::istream& in);
void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries);

/// `certificate g:p g:p ...` listing (group, part) per vertex in order.
std::string format_certificate(const Partitioning& p);
/// Scans header lines for a certificate; nullopt if none is present.
std::optional<Partitioning> find_certificate(const std::vector<std::string>& header);

}  // namespace bucl
