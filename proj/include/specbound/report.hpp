#pragma once

#include <string>

#include "specbound/bounds.hpp"
#include "specbound/graph_bounds.hpp"
#include "specbound/matrix.hpp"

namespace specbound {

/// Everything the matrix command prints: the profile, all four bounds, the
/// spectral estimate, certificates and the signed gaps (bound minus rho).
struct BoundReport {
  int n = 0;
  Profile profile;
  bool irreducible = false;
  UpperBoundCurve phi;
  LowerBoundValue psi_value;
  UpperBoundCurve rowsum_phi;
  LowerBoundValue rowsum_psi_value;
  SpectralEstimate rho;
  EqualityCertificate upper_cert;         // evaluated at l = n
  EqualityCertificate lower_cert;
  EqualityCertificate rowsum_upper_cert;  // evaluated at l = n
  EqualityCertificate rowsum_lower_cert;
  double gap_phi = 0.0;
  double gap_psi = 0.0;
  double gap_rowsum_phi = 0.0;
  double gap_rowsum_psi = 0.0;
};

BoundReport make_bound_report(const NonnegMatrix& a, double tol = kDefaultSpectralTol,
                              long max_iterations = -1);

/// JSON rendering: stable field order, numbers carried to 12 significant
/// digits so identical inputs serialize to identical bytes.
std::string render_json(const BoundReport& report);
std::string render_text(const BoundReport& report);
std::string render_csv(const BoundReport& report);

std::string render_json(const GraphBoundReport& report);
std::string render_text(const GraphBoundReport& report);

std::string certificate_reason_token(CertificateReason reason);

/// Rounds to 12 significant digits (the JSON number policy).
double round_sig12(double x);

}  // namespace specbound
