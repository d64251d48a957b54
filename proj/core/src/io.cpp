#include "thcover/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "thcover/error.hpp"

namespace thcover {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Splits into non-comment, non-blank lines of whitespace-separated tokens.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++number;

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i == raw.size()) break;
      if (line.tokens.empty() && raw[i] == '#') break;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long to_integer(std::string_view token, std::size_t line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing header line 'n m'");

  const Line& header = lines.front();
  if (header.tokens.size() != 2) {
    throw ParseError(header.number, "header must be 'n m'");
  }
  const long long n = to_integer(header.tokens[0], header.number);
  const long long m = to_integer(header.tokens[1], header.number);
  if (n < 0 || n > (1 << 24)) throw ParseError(header.number, "vertex count out of range");
  if (m < 0) throw ParseError(header.number, "negative edge count");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    const std::size_t where = lines.size() - 1 > static_cast<std::size_t>(m)
                                  ? lines[static_cast<std::size_t>(m) + 1].number
                                  : 0;
    throw ParseError(where, "header declares " + std::to_string(m) + " edges, found " +
                                std::to_string(lines.size() - 1));
  }

  std::vector<EdgePair> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::set<EdgePair> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) throw ParseError(line.number, "edge line must be 'u v'");
    const long long u = to_integer(line.tokens[0], line.number);
    const long long v = to_integer(line.tokens[1], line.number);
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line.number, "vertex out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    const EdgePair e(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    if (!seen.insert(e).second) {
      throw ParseError(line.number, "duplicate edge " + format_edge(e));
    }
    edges.push_back(e);
  }
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const EdgePair& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

VertexOrdering parse_ordering(std::string_view text, Vertex n) {
  std::vector<Vertex> sequence;
  for (const Line& line : tokenize(text)) {
    for (std::string_view token : line.tokens) {
      const long long id = to_integer(token, line.number);
      if (id < 1 || id > n) {
        throw ParseError(line.number, "vertex " + std::string(token) + " out of range 1.." +
                                          std::to_string(n));
      }
      sequence.push_back(static_cast<Vertex>(id - 1));
    }
  }
  if (static_cast<Vertex>(sequence.size()) != n) {
    throw ParseError(0, "ordering lists " + std::to_string(sequence.size()) +
                            " vertices, expected " + std::to_string(n));
  }
  try {
    return VertexOrdering(std::move(sequence));
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

VertexOrdering read_ordering_file(const std::filesystem::path& path, Vertex n) {
  return parse_ordering(read_text_file(path), n);
}

std::string format_ordering(const VertexOrdering& order) {
  std::string out;
  for (Vertex v : order.sequence()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

std::string format_edge(EdgePair e) {
  return std::to_string(e.u + 1) + '-' + std::to_string(e.v + 1);
}

std::string format_edges(const Graph& g, std::span<const EdgeId> ids) {
  std::string out;
  for (EdgeId e : ids) {
    if (!out.empty()) out += ' ';
    out += format_edge(g.edge(e));
  }
  return out;
}

}  // namespace thcover
