#include "specbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specbound/numeric.hpp"

namespace specbound {

namespace {

std::vector<double> sorted_desc(const std::vector<double>& stats) {
  std::vector<double> s(stats);
  std::stable_sort(s.begin(), s.end(), std::greater<double>());
  return s;
}

/// Constant diagonal equal to diag_value and constant off-diagonal equal to
/// offdiag_value, within the certificate tolerance.
bool uniform_matrix(const NonnegMatrix& a, double diag_value, double offdiag_value) {
  const int n = a.order();
  for (int i = 0; i < n; ++i)
    if (!nearly_equal(a(i, i), diag_value, kCertificateTol)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !nearly_equal(a(i, j), offdiag_value, kCertificateTol)) return false;
  return true;
}

UpperBoundCurve one_point_curve(double value, UpperBoundCurve::Stat stat) {
  UpperBoundCurve curve;
  curve.values = {value};
  curve.best_l = 1;
  curve.best_value = value;
  curve.off_diagonal_zero = true;
  curve.stat = stat;
  return curve;
}

}  // namespace

double bound_quadratic_root(double stat, double diag_extreme, double scaled_offdiag,
                            double excess) {
  const double shifted = stat - diag_extreme + scaled_offdiag;
  const double disc = shifted * shifted + 4.0 * scaled_offdiag * excess;
  return 0.5 * (stat + diag_extreme - scaled_offdiag + std::sqrt(disc));
}

UpperBoundCurve evaluate_upper_curve(const std::vector<double>& stats, double diag_extreme,
                                     double scaled_offdiag, bool extremal_matrix,
                                     UpperBoundCurve::Stat stat) {
  const int n = static_cast<int>(stats.size());
  const std::vector<double> s = sorted_desc(stats);

  std::vector<double> prefix(n + 1, 0.0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + s[i];

  UpperBoundCurve curve;
  curve.stat = stat;
  curve.values.resize(n);
  for (int l = 1; l <= n; ++l) {
    const double excess = prefix[l - 1] - (l - 1) * s[l - 1];
    curve.values[l - 1] = bound_quadratic_root(s[l - 1], diag_extreme, scaled_offdiag, excess);
  }

  // Crossing analysis: the curve is non-increasing up to the smallest l with
  // sum_{i<=l} s_i < l*(q*l + d - q) and non-decreasing afterwards. Only the
  // extremal matrix admits no such l below n with strict inequality.
  int minimizer = 0;
  if (extremal_matrix) {
    minimizer = 1;
  } else {
    for (int l = 2; l <= n; ++l) {
      if (prefix[l] < l * (scaled_offdiag * l + diag_extreme - scaled_offdiag)) {
        minimizer = l;
        break;
      }
    }
    if (minimizer == 0) minimizer = n;
  }
  curve.best_l = minimizer;
  curve.best_value = curve.values[minimizer - 1];
  return curve;
}

double evaluate_lower_bound(const std::vector<double>& stats, double diag_extreme,
                            double scaled_offdiag) {
  const std::vector<double> s = sorted_desc(stats);
  const int n = static_cast<int>(s.size());
  double excess = 0.0;
  for (int i = 0; i + 1 < n; ++i) excess += s[i] - s[n - 1];
  return bound_quadratic_root(s[n - 1], diag_extreme, scaled_offdiag, excess);
}

UpperBoundCurve phi_curve(const NonnegMatrix& a) {
  const Profile p = profile(a);
  if (!p.offdiag_max || !(*p.offdiag_max > 0.0))
    return one_point_curve(p.avg2_at_rank(0), UpperBoundCurve::Stat::Avg2);
  return evaluate_upper_curve(p.avg2, p.diag_max, *p.offdiag_max * p.ratio_max,
                              uniform_matrix(a, p.diag_max, *p.offdiag_max),
                              UpperBoundCurve::Stat::Avg2);
}

LowerBoundValue psi(const NonnegMatrix& a) {
  const Profile p = profile(a);
  const double scaled = p.offdiag_min ? *p.offdiag_min * p.ratio_min : 0.0;
  return {evaluate_lower_bound(p.avg2, p.diag_min, scaled), LowerBoundValue::Kind::Avg2};
}

UpperBoundCurve rowsum_phi_curve(const NonnegMatrix& a) {
  const Profile p = profile(a);
  if (!p.offdiag_max || !(*p.offdiag_max > 0.0))
    return one_point_curve(*std::max_element(p.row_sums.begin(), p.row_sums.end()),
                           UpperBoundCurve::Stat::RowSum);
  return evaluate_upper_curve(p.row_sums, p.diag_max, *p.offdiag_max,
                              uniform_matrix(a, p.diag_max, *p.offdiag_max),
                              UpperBoundCurve::Stat::RowSum);
}

LowerBoundValue rowsum_psi(const NonnegMatrix& a) {
  const Profile p = profile(a);
  const double scaled = p.offdiag_min ? *p.offdiag_min : 0.0;
  return {evaluate_lower_bound(p.row_sums, p.diag_min, scaled), LowerBoundValue::Kind::RowSum};
}

int best_l(const NonnegMatrix& a) { return phi_curve(a).best_l; }

namespace {

EqualityCertificate structural_certificate(const NonnegMatrix& a, const Profile& p, bool use_avg2,
                                           bool upper, int l_cap) {
  EqualityCertificate cert;
  if (!is_irreducible(a)) {
    cert.reason = CertificateReason::RefusedReducible;
    cert.condition_log.push_back({"irreducible", false, -1, -1});
    return cert;
  }

  const int n = a.order();
  const std::vector<double>& stats = use_avg2 ? p.avg2 : p.row_sums;
  const double stat_min = *std::min_element(stats.begin(), stats.end());

  // Canonical head set {i : stat_i > min}. The tail condition holds by
  // construction; sort ties cannot change this set.
  std::vector<int> head;
  for (int i = 0; i < n; ++i)
    if (!nearly_equal(stats[i], stat_min, kCertificateTol)) head.push_back(i);

  if (head.empty()) {
    cert.verdict = true;
    cert.reason = use_avg2 ? CertificateReason::AllAvg2Equal : CertificateReason::AllRowSumsEqual;
    return cert;
  }

  const double diag_extreme = upper ? p.diag_max : p.diag_min;
  const double offdiag_extreme = (upper ? p.offdiag_max : p.offdiag_min).value_or(0.0);
  if (!upper && !(offdiag_extreme > 0.0)) {
    cert.condition_log.push_back({"positive-offdiag-extreme", false, -1, -1});
    return cert;
  }

  const int t = static_cast<int>(head.size()) + 1;
  if (t > l_cap) {
    cert.condition_log.push_back({"head-within-l", false, -1, -1});
    return cert;
  }

  bool ok = true;
  {
    ConditionCheck check{"head-diagonal-extreme", true, -1, -1};
    for (int i : head) {
      if (!nearly_equal(a(i, i), diag_extreme, kCertificateTol)) {
        check = {"head-diagonal-extreme", false, i, -1};
        ok = false;
        break;
      }
    }
    cert.condition_log.push_back(check);
  }
  cert.condition_log.push_back({"tail-stats-equal", true, -1, -1});
  if (ok) {
    ConditionCheck check{"head-columns-extreme", true, -1, -1};
    const double ratio = upper ? p.ratio_max : p.ratio_min;
    for (int k : head) {
      for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        const bool entry_ok = nearly_equal(a(i, k), offdiag_extreme, kCertificateTol);
        const bool ratio_ok =
            !use_avg2 || nearly_equal(p.row_sums[k] / p.row_sums[i], ratio, kCertificateTol);
        if (!entry_ok || !ratio_ok) {
          check = {"head-columns-extreme", false, i, k};
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    cert.condition_log.push_back(check);
  }

  if (ok) {
    cert.verdict = true;
    cert.reason = CertificateReason::ConditionsT;
    cert.t = t;
  }
  return cert;
}

}  // namespace

EqualityCertificate upper_certificate(const NonnegMatrix& a, int l) {
  if (l < 1 || l > a.order()) throw std::invalid_argument("certificate index l out of range");
  return structural_certificate(a, profile(a), /*use_avg2=*/true, /*upper=*/true, l);
}

EqualityCertificate lower_certificate(const NonnegMatrix& a) {
  return structural_certificate(a, profile(a), /*use_avg2=*/true, /*upper=*/false, a.order());
}

EqualityCertificate rowsum_upper_certificate(const NonnegMatrix& a, int l) {
  if (l < 1 || l > a.order()) throw std::invalid_argument("certificate index l out of range");
  return structural_certificate(a, profile(a), /*use_avg2=*/false, /*upper=*/true, l);
}

EqualityCertificate rowsum_lower_certificate(const NonnegMatrix& a) {
  return structural_certificate(a, profile(a), /*use_avg2=*/false, /*upper=*/false, a.order());
}

SymmetricConditionReport symmetric_certificate_form(const NonnegMatrix& a,
                                                    BoundDirection direction) {
  const int n = a.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) > 1e-12)
        throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric at (" +
                                                 std::to_string(i + 1) + "," +
                                                 std::to_string(j + 1) + ")");
  if (!is_irreducible(a))
    throw Error(ErrorCode::RefusedReducible, "equality conditions require an irreducible matrix");

  const Profile p = profile(a);
  const int head = p.order[0];
  const bool upper = direction == BoundDirection::Upper;
  const double diag_extreme = upper ? p.diag_max : p.diag_min;
  const double offdiag_extreme = (upper ? p.offdiag_max : p.offdiag_min).value_or(0.0);

  SymmetricConditionReport rep;
  rep.head_row_extreme = nearly_equal(a(head, head), diag_extreme, kCertificateTol);
  for (int j = 0; j < n && rep.head_row_extreme; ++j)
    if (j != head && !nearly_equal(a(head, j), offdiag_extreme, kCertificateTol))
      rep.head_row_extreme = false;

  rep.tail_row_sums_equal = true;
  rep.tail_avg2_equal = true;
  int first_tail = -1;
  for (int rank = 1; rank < n; ++rank) {
    const int v = p.order[rank];
    if (first_tail == -1) {
      first_tail = v;
      continue;
    }
    if (!nearly_equal(p.row_sums[v], p.row_sums[first_tail], kCertificateTol))
      rep.tail_row_sums_equal = false;
    if (!nearly_equal(p.avg2[v], p.avg2[first_tail], kCertificateTol))
      rep.tail_avg2_equal = false;
  }

  rep.constant_matrix = true;
  for (int i = 0; i < n && rep.constant_matrix; ++i)
    if (!nearly_equal(a(i, i), a(0, 0), kCertificateTol)) rep.constant_matrix = false;
  if (n >= 2) {
    const double off = a(0, 1);
    for (int i = 0; i < n && rep.constant_matrix; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && !nearly_equal(a(i, j), off, kCertificateTol)) {
          rep.constant_matrix = false;
          break;
        }
  }
  return rep;
}

}  // namespace specbound
