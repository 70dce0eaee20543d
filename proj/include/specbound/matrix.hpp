#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specbound/errors.hpp"

namespace specbound {

/// Dense square matrix with nonnegative finite entries, row-major storage.
/// Immutable after construction apart from the builders' use of at().
class NonnegMatrix {
 public:
  NonnegMatrix(int n, std::vector<double> entries);

  static NonnegMatrix zero(int n);
  static NonnegMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  int order() const { return n_; }
  double operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
  double& at(int i, int j) { return entries_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  int n_;
  std::vector<double> entries_;
};

/// Text format: first non-comment line is the order n, then n rows of n
/// whitespace-separated nonnegative decimals. Lines starting with '#' are
/// skipped. Rejects negative entries, NaN/infinity and non-square data,
/// naming the offending line and column.
NonnegMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const NonnegMatrix& a);

std::vector<double> row_sums(const NonnegMatrix& a);

/// Component i is (sum_k a_ik * r_k) / r_i. Throws ZeroRowSum if some row
/// sum vanishes.
std::vector<double> avg_two_row_sums(const NonnegMatrix& a);

/// Row statistics every bound is built from. The off-diagonal extremes are
/// absent for a 1x1 matrix.
struct Profile {
  std::vector<double> row_sums;
  std::vector<double> avg2;
  std::vector<int> order;  // 0-based indices, avg2 descending, ties by index

  double diag_max = 0.0;  // largest diagonal entry
  double diag_min = 0.0;  // smallest diagonal entry
  std::optional<double> offdiag_max;
  std::optional<double> offdiag_min;
  double ratio_max = 1.0;  // max over ordered pairs of r_j / r_i
  double ratio_min = 1.0;  // min over ordered pairs of r_j / r_i

  /// avg2 value at sorted position `rank` (0-based, descending).
  double avg2_at_rank(int rank) const { return avg2[order[rank]]; }
};

Profile profile(const NonnegMatrix& a);

/// True iff the digraph with an arc i->j whenever a_ij > 0 (i != j) is
/// strongly connected; a 1x1 matrix counts as irreducible.
bool is_irreducible(const NonnegMatrix& a);

/// Strongly connected components of the nonzero pattern, each sorted
/// ascending, listed in a topological order of the condensation (ties broken
/// by smallest member).
std::vector<std::vector<int>> scc_blocks(const NonnegMatrix& a);

enum class SpectralMethod { PowerIterationPerBlock, ExactSmall };

struct SpectralEstimate {
  double rho = 0.0;
  long iterations = 0;
  double residual = 0.0;  // final relative change of the estimate
  SpectralMethod method = SpectralMethod::ExactSmall;
};

inline constexpr double kDefaultSpectralTol = 1e-12;

/// Spectral radius as the maximum over SCC blocks. Each block of order >= 2
/// is handled by power iteration on (block + I), which is primitive because
/// the block is irreducible; the shift is subtracted before returning.
/// Convergence: relative change of the max-norm ratio estimate below tol for
/// three consecutive iterations. Throws NoConvergence past the iteration cap
/// (100 * n_block^2 + 10^4, or `max_iterations` when positive).
SpectralEstimate spectral_radius(const NonnegMatrix& a, double tol = kDefaultSpectralTol,
                                 long max_iterations = -1);

}  // namespace specbound
