#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specbound/matrix.hpp"

namespace specbound {

/// Tolerance for the structural equality certificates: the conditions are
/// exact algebraic statements and the instances that attain them are built
/// from exactly representable values.
inline constexpr double kCertificateTol = 1e-9;

enum class BoundDirection { Upper, Lower };

/// Upper-bound curve over l = 1..n (values[l-1]). When the matrix has no
/// positive off-diagonal entry the curve is restricted to l = 1 and flagged.
struct UpperBoundCurve {
  enum class Stat { Avg2, RowSum };

  std::vector<double> values;
  int best_l = 1;  // 1-based index from the crossing analysis
  double best_value = 0.0;
  bool off_diagonal_zero = false;
  Stat stat = Stat::Avg2;
};

struct LowerBoundValue {
  enum class Kind { Avg2, RowSum };

  double value = 0.0;
  Kind kind = Kind::Avg2;
};

/// Positive root of x^2 - (s + d - q) x + (s*(d - q) - q*excess) = 0, the
/// closed form shared by every bound in the family:
///   (s + d - q + sqrt((s - d + q)^2 + 4*q*excess)) / 2
/// with s the pivot statistic, d the diagonal extreme, q the scaled
/// off-diagonal extreme and excess the accumulated statistic surplus.
double bound_quadratic_root(double stat, double diag_extreme, double scaled_offdiag, double excess);

/// Curve of upper bounds on the sorted statistics. `scaled_offdiag` is N*b
/// for the average 2-row-sum curve and N for the row-sum curve; it must be
/// positive. `extremal_matrix` marks the constant-diagonal/off-diagonal case,
/// whose minimizing index is 1.
UpperBoundCurve evaluate_upper_curve(const std::vector<double>& stats, double diag_extreme,
                                     double scaled_offdiag, bool extremal_matrix,
                                     UpperBoundCurve::Stat stat);

/// Lower bound from the sorted statistics; `scaled_offdiag` is T*c or T and
/// may be zero, in which case the bound degenerates to the smallest statistic.
double evaluate_lower_bound(const std::vector<double>& stats, double diag_extreme,
                            double scaled_offdiag);

/// Average 2-row-sum upper-bound curve. Requires positive row sums; a matrix
/// with no positive off-diagonal entry yields the flagged one-point curve.
UpperBoundCurve phi_curve(const NonnegMatrix& a);

/// Average 2-row-sum lower bound.
LowerBoundValue psi(const NonnegMatrix& a);

/// Row-sum variants of the same curve and bound.
UpperBoundCurve rowsum_phi_curve(const NonnegMatrix& a);
LowerBoundValue rowsum_psi(const NonnegMatrix& a);

/// The minimizing index of the average 2-row-sum curve: 1 for the
/// constant-diagonal/off-diagonal matrix, otherwise the smallest l in 2..n
/// with sum_{i<=l} m_i < l*(N*b*l + M - N*b), falling back to n.
int best_l(const NonnegMatrix& a);

enum class CertificateReason {
  AllAvg2Equal,
  ConditionsT,
  AllRowSumsEqual,
  RefusedReducible,
  Fails,
};

struct ConditionCheck {
  std::string name;
  bool passed = false;
  int i = -1;  // first violating pair, 0-based, -1 when not applicable
  int k = -1;
};

struct EqualityCertificate {
  bool verdict = false;
  CertificateReason reason = CertificateReason::Fails;
  std::optional<int> t;  // witness, 2..n, present iff reason == ConditionsT
  std::vector<ConditionCheck> condition_log;
};

/// Structural conditions under which an irreducible matrix attains the
/// average 2-row-sum upper bound at index l. Reducible matrices are refused.
/// Certificates never evaluate the spectral radius.
EqualityCertificate upper_certificate(const NonnegMatrix& a, int l);
EqualityCertificate lower_certificate(const NonnegMatrix& a);

/// Row-sum counterparts (no ratio condition).
EqualityCertificate rowsum_upper_certificate(const NonnegMatrix& a, int l);
EqualityCertificate rowsum_lower_certificate(const NonnegMatrix& a);

/// Specialized certificate form for symmetric matrices, evaluated on the
/// avg2-descending ordering.
struct SymmetricConditionReport {
  bool head_row_extreme = false;     // head diagonal at the extreme, head row/column off-diagonals too
  bool tail_row_sums_equal = false;  // row sums equal away from the head
  bool tail_avg2_equal = false;      // avg2 equal away from the head
  bool constant_matrix = false;      // constant diagonal and constant off-diagonal collapse case
};

/// Throws NotSymmetric (checked to 1e-12 absolute) and RefusedReducible.
SymmetricConditionReport symmetric_certificate_form(const NonnegMatrix& a,
                                                    BoundDirection direction);

}  // namespace specbound
