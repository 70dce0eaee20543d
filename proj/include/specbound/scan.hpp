#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

struct ScanOptions {
  enum class Family { Matrix, Graph };

  long count = 1;
  std::uint64_t seed = 0;
  int n_min = 3;
  int n_max = 8;
  double density = 0.5;
  Family family = Family::Matrix;
  GraphMatrixKind kind = GraphMatrixKind::Adjacency;  // graph family only
};

struct ScanInstanceRow {
  long id = 0;
  int n = 0;
  double rho = 0.0;
  double psi = 0.0;
  double best_phi = 0.0;
  int best_l = 1;
  double duan_psi = 0.0;
  double best_Phi = 0.0;
  std::string winner;  // "phi", "Phi" or "tie"
};

struct ScanViolation {
  long instance = 0;
  std::string serialized;  // the instance in its standard text format
  std::string detail;
};

struct ScanSummary {
  std::uint64_t seed = 0;
  long count = 0;
  long phi_wins = 0;
  long rowsum_wins = 0;
  long ties = 0;
  long upper_certificate_hits = 0;
  long lower_certificate_hits = 0;
  long rowsum_upper_certificate_hits = 0;
  long rowsum_lower_certificate_hits = 0;
  double max_violation = 0.0;  // relative; aborts above 1e-8
  std::vector<std::string> failures;
};

struct ScanResult {
  std::vector<ScanInstanceRow> rows;
  ScanSummary summary;
  std::optional<ScanViolation> violation;
};

/// Seeded randomized comparison of the avg2 and row-sum bound families.
/// Every instance is checked against the sandwich invariants; a violation
/// beyond 1e-8 relative stops the scan and carries a reproducer.
ScanResult run_scan(const ScanOptions& options);

std::string render_csv(const ScanResult& result);
std::string render_summary_json(const ScanSummary& summary);

}  // namespace specbound
