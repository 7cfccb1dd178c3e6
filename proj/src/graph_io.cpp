#include "bucl/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bucl/errors.hpp"

namespace bucl {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw FormatError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                      std::string(tok) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Reads one graph block. Returns nullopt when the stream holds no further
// `graph` line. `pending` carries a `graph` line already consumed by the
// previous block in catalog mode.
struct BlockReader {
  explicit BlockReader(std::istream& stream) : in(stream) {}

  std::istream& in;
  std::size_t line_no = 0;
  std::optional<std::string> pending;
  std::vector<std::string> pending_header;

  bool next_line(std::string& line) {
    if (pending) {
      line = std::move(*pending);
      pending.reset();
      return true;
    }
    if (!std::getline(in, line)) return false;
    ++line_no;
    return true;
  }

  std::optional<CatalogEntry> read(bool stop_at_next_graph) {
    CatalogEntry entry;
    entry.header = std::move(pending_header);
    pending_header.clear();
    std::vector<std::string> trailing;
    std::string line;
    std::optional<std::size_t> n;
    while (next_line(line)) {
      const auto t = trim(line);
      if (t.empty()) continue;
      if (t.front() == '#') {
        (n ? trailing : entry.header).emplace_back(trim(t.substr(1)));
        continue;
      }
      const auto toks = split_ws(t);
      if (toks.front() == "graph") {
        if (n) {
          if (!stop_at_next_graph) throw FormatError("line " + std::to_string(line_no) + ": second 'graph' line");
          pending = line;
          pending_header = std::move(trailing);
          break;
        }
        if (toks.size() != 2) throw FormatError("line " + std::to_string(line_no) + ": expected 'graph <N>'");
        n = parse_uint(toks[1], line_no);
        continue;
      }
      if (!n) throw FormatError("line " + std::to_string(line_no) + ": edge before 'graph <N>' header");
      if (toks.size() != 2) throw FormatError("line " + std::to_string(line_no) + ": expected '<u> <v>'");
      const auto u = parse_uint(toks[0], line_no);
      const auto v = parse_uint(toks[1], line_no);
      if (u == v) throw FormatError("line " + std::to_string(line_no) + ": self-loop");
      if (v >= *n || u >= *n) throw FormatError("line " + std::to_string(line_no) + ": endpoint out of range");
      if (u > v) throw FormatError("line " + std::to_string(line_no) + ": pair must be written as u < v");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (!n) {
      if (!entry.header.empty() && !stop_at_next_graph) throw FormatError("missing 'graph <N>' line");
      return std::nullopt;
    }
    entry.graph = from_edge_list(*n, edges);
    edges.clear();
    return entry;
  }

  std::vector<Edge> edges;
};

}  // namespace

Graph read_graph(std::istream& in, std::vector<std::string>* header) {
  BlockReader reader(in);
  auto entry = reader.read(false);
  if (!entry) throw FormatError("missing 'graph <N>' line");
  if (header) *header = std::move(entry->header);
  return std::move(entry->graph);
}

Graph read_graph(std::istream& in) { return read_graph(in, nullptr); }

Graph read_graph_file(const std::filesystem::path& path, std::vector<std::string>* header) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open graph file '" + path.string() + "'");
  return read_graph(in, header);
}

void write_graph(std::ostream& out, const Graph& G, const std::vector<std::string>& header) {
  for (const auto& h : header) out << "# " << h << '\n';
  out << "graph " << G.size() << '\n';
  for (const auto& e : G.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph_file(const std::filesystem::path& path, const Graph& G, const std::vector<std::string>& header) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  write_graph(out, G, header);
}

std::vector<CatalogEntry> read_catalog(std::istream& in) {
  BlockReader reader(in);
  std::vector<CatalogEntry> out;
  while (auto entry = reader.read(true)) out.push_back(std::move(*entry));
  return out;
}

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  for (const auto& e : entries) write_graph(out, e.graph, e.header);
}

std::string format_certificate(const Partitioning& p) {
  std::ostringstream os;
  os << "certificate";
  for (const auto& l : p.labels) os << ' ' << l.group << ':' << l.part;
  return os.str();
}

std::optional<Partitioning> find_certificate(const std::vector<std::string>& header) {
  for (const auto& line : header) {
    const auto toks = split_ws(line);
    if (toks.empty() || toks.front() != "certificate") continue;
    Partitioning p;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const auto colon = toks[i].find(':');
      if (colon == std::string_view::npos) throw FormatError("malformed certificate entry '" + std::string(toks[i]) + "'");
      p.labels.push_back({static_cast<std::uint32_t>(parse_uint(toks[i].substr(0, colon), 0)),
                          static_cast<std::uint32_t>(parse_uint(toks[i].substr(colon + 1), 0))});
    }
    return p;
  }
  return std::nullopt;
}

}  // namespace bucl
