#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "specbound/report.hpp"
#include "specbound/scan.hpp"
#include "specbound/worked_examples.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRegressionMismatch = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitInvariantViolation = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw specbound::Error(specbound::ErrorCode::MalformedLine, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct MatrixOptions {
  std::string path;
  bool json = false;
  bool csv = false;
  double tol = specbound::kDefaultSpectralTol;
  long max_iterations = -1;
};

int run_matrix(const MatrixOptions& opt) {
  const specbound::NonnegMatrix a = specbound::parse_matrix(read_file(opt.path));
  const specbound::BoundReport report =
      specbound::make_bound_report(a, opt.tol, opt.max_iterations);
  if (opt.json)
    std::cout << specbound::render_json(report);
  else if (opt.csv)
    std::cout << specbound::render_csv(report);
  else
    std::cout << specbound::render_text(report);
  return kExitOk;
}

struct GraphOptions {
  std::string path;
  std::string kind;
  std::string direction = "upper";
  bool json = false;
};

int run_graph(const GraphOptions& opt) {
  const specbound::Graph g = specbound::parse_edge_list(read_file(opt.path));
  const specbound::GraphMatrixKind kind = specbound::parse_kind_token(opt.kind);
  const specbound::BoundDirection direction = opt.direction == "lower"
                                                  ? specbound::BoundDirection::Lower
                                                  : specbound::BoundDirection::Upper;
  const specbound::GraphBoundReport report = specbound::graph_bound(g, kind, direction);
  std::cout << (opt.json ? specbound::render_json(report) : specbound::render_text(report));
  return kExitOk;
}

int run_worked_examples() {
  const auto rows = specbound::worked_example_rows();
  std::cout << specbound::render_row_table(rows);
  long failed = 0;
  const specbound::RegressionRow* first_fail = nullptr;
  for (const auto& row : rows) {
    if (!row.pass) {
      ++failed;
      if (!first_fail) first_fail = &row;
    }
  }
  std::cout << "\n" << (rows.size() - failed) << "/" << rows.size() << " checks passed\n";
  if (failed > 0) {
    std::cout << "first failing row: " << first_fail->label << "\n";
    return kExitRegressionMismatch;
  }
  return kExitOk;
}

struct ScanCliOptions {
  long count = 1;
  std::uint64_t seed = 0;
  int n_min = 3;
  int n_max = 8;
  double density = 0.5;
  std::string family = "matrix";
  std::string kind = "adjacency";
};

int run_scan_command(const ScanCliOptions& cli) {
  specbound::ScanOptions opt;
  opt.count = cli.count;
  opt.seed = cli.seed;
  opt.n_min = cli.n_min;
  opt.n_max = cli.n_max;
  opt.density = cli.density;
  opt.family = cli.family == "graph" ? specbound::ScanOptions::Family::Graph
                                     : specbound::ScanOptions::Family::Matrix;
  opt.kind = specbound::parse_kind_token(cli.kind);

  const specbound::ScanResult result = specbound::run_scan(opt);
  std::cout << specbound::render_csv(result);
  std::cout << "\n" << specbound::render_summary_json(result.summary);
  if (result.violation) {
    const std::string dump_path =
        "scan_violation_" + std::to_string(result.violation->instance) + ".txt";
    std::ofstream dump(dump_path, std::ios::binary);
    dump << result.violation->serialized;
    dump.close();
    std::cerr << "error: " << result.violation->detail << "\n";
    std::cerr << "reproducer written to " << dump_path << "\n";
    return kExitInvariantViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral-radius bounds for nonnegative matrices from average 2-row sums"};
  app.require_subcommand(1);

  MatrixOptions matrix_opt;
  CLI::App* matrix_cmd = app.add_subcommand("matrix", "Bound report for a matrix file");
  matrix_cmd->add_option("file", matrix_opt.path, "matrix file")->required();
  CLI::Option* json_flag = matrix_cmd->add_flag("--json", matrix_opt.json, "JSON output");
  matrix_cmd->add_flag("--csv", matrix_opt.csv, "CSV output")->excludes(json_flag);
  matrix_cmd->add_option("--tol", matrix_opt.tol, "spectral tolerance")
      ->check(CLI::PositiveNumber);
  matrix_cmd->add_option("--max-iters", matrix_opt.max_iterations,
                         "power iteration cap override");

  GraphOptions graph_opt;
  CLI::App* graph_cmd = app.add_subcommand("graph", "Bound report for a graph file");
  graph_cmd->add_option("file", graph_opt.path, "graph file")->required();
  graph_cmd->add_option("--kind", graph_opt.kind, "matrix kind")
      ->required()
      ->check(CLI::IsMember({"adjacency", "signless-laplacian", "distance",
                             "distance-signless-laplacian", "reciprocal"}));
  graph_cmd->add_option("--direction", graph_opt.direction, "bound direction")
      ->check(CLI::IsMember({"upper", "lower"}));
  graph_cmd->add_flag("--json", graph_opt.json, "JSON output");

  CLI::App* examples_cmd =
      app.add_subcommand("paper-examples", "Regression against the worked-example table");

  ScanCliOptions scan_opt;
  CLI::App* scan_cmd = app.add_subcommand("scan", "Seeded randomized bound comparison");
  scan_cmd->add_option("--count", scan_opt.count, "instances")->required();
  scan_cmd->add_option("--seed", scan_opt.seed, "seed")->required();
  scan_cmd->add_option("--n-min", scan_opt.n_min, "smallest order")->required();
  scan_cmd->add_option("--n-max", scan_opt.n_max, "largest order")->required();
  scan_cmd->add_option("--density", scan_opt.density, "entry/edge density")->required();
  scan_cmd->add_option("--family", scan_opt.family, "instance family")
      ->check(CLI::IsMember({"matrix", "graph"}));
  scan_cmd->add_option("--kind", scan_opt.kind, "graph matrix kind")
      ->check(CLI::IsMember({"adjacency", "signless-laplacian", "distance",
                             "distance-signless-laplacian", "reciprocal"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (matrix_cmd->parsed()) return run_matrix(matrix_opt);
    if (graph_cmd->parsed()) return run_graph(graph_opt);
    if (examples_cmd->parsed()) return run_worked_examples();
    if (scan_cmd->parsed()) return run_scan_command(scan_opt);
  } catch (const specbound::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case specbound::ErrorCode::NoConvergence:
        return kExitNoConvergence;
      case specbound::ErrorCode::InvariantViolation:
        return kExitInvariantViolation;
      default:
        return kExitInputError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
