#include "specbound/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <queue>
#include <set>

namespace specbound {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::string text;
};

std::vector<Line> data_lines(std::string_view text) {
  std::vector<Line> out;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t end = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++line_no;
    const size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#')
      out.push_back({line_no, std::string(line)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

long parse_integer(const Token& tok, int line_no) {
  char* end = nullptr;
  const long value = std::strtol(tok.text.c_str(), &end, 10);
  if (end != tok.text.c_str() + tok.text.size())
    throw Error(ErrorCode::MalformedLine,
                "line " + std::to_string(line_no) + ", column " + std::to_string(tok.column) +
                    ": not an integer: '" + tok.text + "'",
                line_no, tok.column);
  return value;
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw Error(ErrorCode::MalformedLine, "vertex count must be positive");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge endpoint out of range: " + std::to_string(u + 1) + " " +
                      std::to_string(v + 1));
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u + 1));
  }
  std::sort(edges_.begin(), edges_.end());
  for (size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i] == edges_[i - 1])
      throw Error(ErrorCode::DuplicateEdge, "duplicate edge " + std::to_string(edges_[i].first + 1) +
                                                " " + std::to_string(edges_[i].second + 1));
  adjacency_.resize(n_);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph parse_edge_list(std::string_view text) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw Error(ErrorCode::MalformedLine, "empty graph file");

  const auto header = tokenize(lines[0].text);
  if (header.size() != 2)
    throw Error(ErrorCode::MalformedLine,
                "line " + std::to_string(lines[0].number) + ": expected 'n m' header",
                lines[0].number, 1);
  const long n = parse_integer(header[0], lines[0].number);
  const long m = parse_integer(header[1], lines[0].number);
  if (n < 1)
    throw Error(ErrorCode::MalformedLine, "vertex count must be positive", lines[0].number,
                header[0].column);
  if (m < 0)
    throw Error(ErrorCode::MalformedLine, "edge count must be nonnegative", lines[0].number,
                header[1].column);
  if (lines.size() != static_cast<size_t>(m) + 1)
    throw Error(ErrorCode::MalformedLine,
                "expected " + std::to_string(m) + " edge lines, found " +
                    std::to_string(lines.size() - 1),
                lines.back().number, 1);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long e = 0; e < m; ++e) {
    const Line& line = lines[static_cast<size_t>(e) + 1];
    const auto tokens = tokenize(line.text);
    if (tokens.size() != 2)
      throw Error(ErrorCode::MalformedLine,
                  "line " + std::to_string(line.number) + ": expected 'u v'", line.number, 1);
    long u = parse_integer(tokens[0], line.number);
    long v = parse_integer(tokens[1], line.number);
    if (u < 1 || u > n || v < 1 || v > n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "line " + std::to_string(line.number) + ": vertex out of range 1.." +
                      std::to_string(n),
                  line.number, tokens[u < 1 || u > n ? 0 : 1].column);
    if (u == v)
      throw Error(ErrorCode::SelfLoop,
                  "line " + std::to_string(line.number) + ": self-loop at vertex " +
                      std::to_string(u),
                  line.number, tokens[0].column);
    edges.emplace_back(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
  }
  // Duplicate detection on normalized pairs, pointing at the offending line.
  std::set<std::pair<int, int>> seen;
  for (size_t e = 0; e < edges.size(); ++e) {
    auto norm = edges[e];
    if (norm.first > norm.second) std::swap(norm.first, norm.second);
    if (!seen.insert(norm).second)
      throw Error(ErrorCode::DuplicateEdge,
                  "line " + std::to_string(lines[e + 1].number) + ": duplicate edge " +
                      std::to_string(norm.first + 1) + " " + std::to_string(norm.second + 1),
                  lines[e + 1].number, 1);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edges().size()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

DistanceData apsp(const Graph& g) {
  const int n = g.order();
  DistanceData dd;
  dd.dist.assign(n, std::vector<int>(n, -1));
  std::vector<int> queue;
  queue.reserve(n);
  for (int s = 0; s < n; ++s) {
    auto& dist = dd.dist[s];
    dist[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  dd.transmissions.assign(n, 0);
  dd.diameter = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (dd.dist[i][j] < 0) {
        dd.connected = false;
        continue;
      }
      dd.transmissions[i] += dd.dist[i][j];
      dd.diameter = std::max(dd.diameter, dd.dist[i][j]);
    }
  }
  const auto [mn, mx] = std::minmax_element(dd.transmissions.begin(), dd.transmissions.end());
  dd.min_transmission = *mn;
  dd.max_transmission = *mx;
  return dd;
}

std::string kind_token(GraphMatrixKind kind) {
  switch (kind) {
    case GraphMatrixKind::Adjacency: return "adjacency";
    case GraphMatrixKind::SignlessLaplacian: return "signless-laplacian";
    case GraphMatrixKind::Distance: return "distance";
    case GraphMatrixKind::DistanceSignlessLaplacian: return "distance-signless-laplacian";
    case GraphMatrixKind::ReciprocalDistance: return "reciprocal";
  }
  return "adjacency";
}

GraphMatrixKind parse_kind_token(std::string_view token) {
  if (token == "adjacency") return GraphMatrixKind::Adjacency;
  if (token == "signless-laplacian") return GraphMatrixKind::SignlessLaplacian;
  if (token == "distance") return GraphMatrixKind::Distance;
  if (token == "distance-signless-laplacian") return GraphMatrixKind::DistanceSignlessLaplacian;
  if (token == "reciprocal") return GraphMatrixKind::ReciprocalDistance;
  throw Error(ErrorCode::MalformedLine, "unknown matrix kind: '" + std::string(token) + "'");
}

namespace {

void require_no_isolated(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v + 1) + " is isolated");
}

DistanceData require_connected(const Graph& g) {
  DistanceData dd = apsp(g);
  if (!dd.connected) {
    int witness = 0;
    for (int j = 0; j < g.order(); ++j)
      if (dd.dist[0][j] < 0) {
        witness = j;
        break;
      }
    throw Error(ErrorCode::Disconnected,
                "graph is disconnected (vertex " + std::to_string(witness + 1) +
                    " is unreachable from vertex 1)");
  }
  return dd;
}

}  // namespace

NonnegMatrix build_matrix(const Graph& g, GraphMatrixKind kind) {
  const int n = g.order();
  switch (kind) {
    case GraphMatrixKind::Adjacency: {
      require_no_isolated(g);
      NonnegMatrix a = NonnegMatrix::zero(n);
      for (const auto& [u, v] : g.edges()) {
        a.at(u, v) = 1.0;
        a.at(v, u) = 1.0;
      }
      return a;
    }
    case GraphMatrixKind::SignlessLaplacian: {
      require_no_isolated(g);
      NonnegMatrix a = build_matrix(g, GraphMatrixKind::Adjacency);
      for (int v = 0; v < n; ++v) a.at(v, v) = g.degree(v);
      return a;
    }
    case GraphMatrixKind::Distance: {
      const DistanceData dd = require_connected(g);
      NonnegMatrix a = NonnegMatrix::zero(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = dd.dist[i][j];
      return a;
    }
    case GraphMatrixKind::DistanceSignlessLaplacian: {
      const DistanceData dd = require_connected(g);
      NonnegMatrix a = NonnegMatrix::zero(n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a.at(i, j) = dd.dist[i][j];
        a.at(i, i) = static_cast<double>(dd.transmissions[i]);
      }
      return a;
    }
    case GraphMatrixKind::ReciprocalDistance: {
      const DistanceData dd = require_connected(g);
      NonnegMatrix a = NonnegMatrix::zero(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) a.at(i, j) = 1.0 / dd.dist[i][j];
      return a;
    }
  }
  throw std::logic_error("unhandled matrix kind");
}

ReciprocalStats reciprocal_stats(const Graph& g) {
  const NonnegMatrix r = build_matrix(g, GraphMatrixKind::ReciprocalDistance);
  ReciprocalStats stats;
  stats.values = row_sums(r);
  const auto [mn, mx] = std::minmax_element(stats.values.begin(), stats.values.end());
  stats.min_value = *mn;
  stats.max_value = *mx;
  return stats;
}

}  // namespace specbound
