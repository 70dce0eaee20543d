#include "specbound/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <utility>

namespace specbound {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based character offset
};

struct Line {
  int number = 0;  // 1-based
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

[[noreturn]] void fail_at(int line, int column, const std::string& what) {
  throw Error(ErrorCode::MalformedLine,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what,
              line, column);
}

double parse_entry(const Token& tok, int line_no) {
  char* end = nullptr;
  const double value = std::strtod(tok.text.c_str(), &end);
  if (end != tok.text.c_str() + tok.text.size())
    fail_at(line_no, tok.column, "not a number: '" + tok.text + "'");
  if (!std::isfinite(value)) fail_at(line_no, tok.column, "entry must be finite");
  if (value < 0.0) fail_at(line_no, tok.column, "entry must be nonnegative");
  return value;
}

long parse_integer(const Token& tok, int line_no) {
  char* end = nullptr;
  const long value = std::strtol(tok.text.c_str(), &end, 10);
  if (end != tok.text.c_str() + tok.text.size())
    fail_at(line_no, tok.column, "not an integer: '" + tok.text + "'");
  return value;
}

}  // namespace

NonnegMatrix::NonnegMatrix(int n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw Error(ErrorCode::MalformedLine, "matrix order must be positive");
  if (entries_.size() != static_cast<size_t>(n_) * n_)
    throw Error(ErrorCode::MalformedLine, "entry count does not match the declared order");
  for (double v : entries_)
    if (!std::isfinite(v) || v < 0.0)
      throw Error(ErrorCode::MalformedLine, "entries must be finite and nonnegative");
}

NonnegMatrix NonnegMatrix::zero(int n) {
  return NonnegMatrix(n, std::vector<double>(static_cast<size_t>(n) * n, 0.0));
}

NonnegMatrix NonnegMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::MalformedLine, "row length does not match the matrix order");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return NonnegMatrix(n, std::move(entries));
}

NonnegMatrix parse_matrix(std::string_view text) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw Error(ErrorCode::MalformedLine, "empty matrix file");

  const auto header = tokenize(lines[0].text);
  if (header.size() != 1)
    fail_at(lines[0].number, header.empty() ? 1 : header[1].column,
            "expected a single integer order on the first line");
  const long n = parse_integer(header[0], lines[0].number);
  if (n < 1) fail_at(lines[0].number, header[0].column, "order must be a positive integer");

  if (lines.size() != static_cast<size_t>(n) + 1) {
    const int where = lines.size() > static_cast<size_t>(n) + 1
                          ? lines[static_cast<size_t>(n) + 1].number
                          : lines.back().number;
    throw Error(ErrorCode::MalformedLine,
                "expected " + std::to_string(n) + " data rows, found " +
                    std::to_string(lines.size() - 1) + " (near line " + std::to_string(where) + ")",
                where, 1);
  }

  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(n) * n);
  for (long i = 0; i < n; ++i) {
    const Line& line = lines[static_cast<size_t>(i) + 1];
    const auto tokens = tokenize(line.text);
    if (static_cast<long>(tokens.size()) != n) {
      const int column = tokens.size() > static_cast<size_t>(n)
                             ? tokens[static_cast<size_t>(n)].column
                             : static_cast<int>(line.text.size()) + 1;
      fail_at(line.number, column,
              "expected " + std::to_string(n) + " entries, found " + std::to_string(tokens.size()));
    }
    for (const auto& tok : tokens) entries.push_back(parse_entry(tok, line.number));
  }
  return NonnegMatrix(static_cast<int>(n), std::move(entries));
}

std::string serialize_matrix(const NonnegMatrix& a) {
  const int n = a.order();
  std::string out = std::to_string(n) + "\n";
  char buf[40];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", a(i, j));
      out += buf;
      out += (j + 1 == n) ? '\n' : ' ';
    }
  }
  return out;
}

std::vector<double> row_sums(const NonnegMatrix& a) {
  const int n = a.order();
  std::vector<double> r(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += a(i, j);
    r[i] = s;
  }
  return r;
}

std::vector<double> avg_two_row_sums(const NonnegMatrix& a) {
  const int n = a.order();
  const std::vector<double> r = row_sums(a);
  for (int i = 0; i < n; ++i)
    if (!(r[i] > 0.0))
      throw Error(ErrorCode::ZeroRowSum, "row " + std::to_string(i + 1) + " has zero sum");
  std::vector<double> m(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += a(i, k) * r[k];
    m[i] = s / r[i];
  }
  return m;
}

Profile profile(const NonnegMatrix& a) {
  const int n = a.order();
  Profile p;
  p.row_sums = row_sums(a);
  for (int i = 0; i < n; ++i)
    if (!(p.row_sums[i] > 0.0))
      throw Error(ErrorCode::ZeroRowSum, "row " + std::to_string(i + 1) + " has zero sum");
  p.avg2 = avg_two_row_sums(a);

  p.order.resize(n);
  std::iota(p.order.begin(), p.order.end(), 0);
  std::stable_sort(p.order.begin(), p.order.end(),
                   [&](int x, int y) { return p.avg2[x] > p.avg2[y]; });

  p.diag_max = p.diag_min = a(0, 0);
  for (int i = 1; i < n; ++i) {
    p.diag_max = std::max(p.diag_max, a(i, i));
    p.diag_min = std::min(p.diag_min, a(i, i));
  }
  if (n >= 2) {
    double omax = a(0, 1), omin = a(0, 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        omax = std::max(omax, a(i, j));
        omin = std::min(omin, a(i, j));
      }
    p.offdiag_max = omax;
    p.offdiag_min = omin;
  }
  const auto [rmin, rmax] = std::minmax_element(p.row_sums.begin(), p.row_sums.end());
  p.ratio_max = *rmax / *rmin;
  p.ratio_min = *rmin / *rmax;
  return p;
}

std::vector<std::vector<int>> scc_blocks(const NonnegMatrix& a) {
  const int n = a.order();
  std::vector<std::vector<int>> succ(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && a(i, j) > 0.0) succ[i].push_back(j);

  // Tarjan with an explicit stack.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::pair<int, size_t>> dfs;
  int next_index = 0;
  int comp_count = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    dfs.emplace_back(root, 0);
    while (!dfs.empty()) {
      const int v = dfs.back().first;
      size_t& child = dfs.back().second;
      if (child < succ[v].size()) {
        const int w = succ[v][child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          dfs.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comp_count;
            if (w == v) break;
          }
          ++comp_count;
        }
        dfs.pop_back();
        if (!dfs.empty()) {
          const int parent = dfs.back().first;
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }

  std::vector<std::vector<int>> members(comp_count);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

  // Condensation, then Kahn's ordering with the smallest member as tie-break.
  std::vector<std::vector<int>> cedges(comp_count);
  for (int i = 0; i < n; ++i)
    for (int j : succ[i])
      if (comp[i] != comp[j]) cedges[comp[i]].push_back(comp[j]);
  std::vector<int> indeg(comp_count, 0);
  for (auto& edges : cedges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (int c : edges) ++indeg[c];
  }
  auto by_smallest_member = [&](int x, int y) { return members[x][0] > members[y][0]; };
  std::priority_queue<int, std::vector<int>, decltype(by_smallest_member)> ready(by_smallest_member);
  for (int c = 0; c < comp_count; ++c)
    if (indeg[c] == 0) ready.push(c);
  std::vector<std::vector<int>> out;
  out.reserve(comp_count);
  while (!ready.empty()) {
    const int c = ready.top();
    ready.pop();
    out.push_back(members[c]);
    for (int d : cedges[c])
      if (--indeg[d] == 0) ready.push(d);
  }
  return out;
}

bool is_irreducible(const NonnegMatrix& a) { return scc_blocks(a).size() == 1; }

SpectralEstimate spectral_radius(const NonnegMatrix& a, double tol, long max_iterations) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const auto blocks = scc_blocks(a);

  SpectralEstimate est;
  est.rho = -1.0;
  bool iterated = false;
  for (const auto& block : blocks) {
    const int nb = static_cast<int>(block.size());
    double block_rho = 0.0;
    double block_residual = 0.0;
    if (nb == 1) {
      block_rho = a(block[0], block[0]);
    } else {
      iterated = true;
      std::vector<double> sub(static_cast<size_t>(nb) * nb);
      for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) sub[static_cast<size_t>(i) * nb + j] = a(block[i], block[j]);

      const long cap = max_iterations > 0 ? max_iterations : 100L * nb * nb + 10000L;
      std::vector<double> v(nb, 1.0), w(nb);
      double estimate = 0.0;
      double change = 1.0;
      int consecutive = 0;
      long it = 0;
      bool converged = false;
      while (it < cap) {
        ++it;
        double norm = 0.0;
        for (int i = 0; i < nb; ++i) {
          const double* row = &sub[static_cast<size_t>(i) * nb];
          double s = v[i];  // the +I shift
          for (int j = 0; j < nb; ++j) s += row[j] * v[j];
          w[i] = s;
          norm = std::max(norm, s);
        }
        change = std::abs(norm - estimate) / std::max(1.0, norm);
        estimate = norm;
        for (int i = 0; i < nb; ++i) v[i] = w[i] / norm;
        if (change < tol) {
          if (++consecutive >= 3) {
            converged = true;
            break;
          }
        } else {
          consecutive = 0;
        }
      }
      est.iterations += it;
      if (!converged)
        throw Error(ErrorCode::NoConvergence,
                    "power iteration missed tolerance " + std::to_string(tol) + " within " +
                        std::to_string(cap) + " iterations");
      block_rho = estimate - 1.0;
      block_residual = change;
    }
    if (block_rho > est.rho) {
      est.rho = block_rho;
      est.residual = block_residual;
    }
  }
  est.method = iterated ? SpectralMethod::PowerIterationPerBlock : SpectralMethod::ExactSmall;
  return est;
}

}  // namespace specbound
