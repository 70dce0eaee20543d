#include "specbound/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "specbound/bounds.hpp"
#include "specbound/numeric.hpp"
#include "specbound/random_gen.hpp"
#include "specbound/report.hpp"

namespace specbound {

namespace {

constexpr double kViolationCap = 1e-8;
constexpr double kTieTol = 1e-9;

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

/// Largest relative amount by which any sandwich inequality fails; 0 when all
/// hold. Covers the row-sum and avg2 sandwiches and all four bound families.
double sandwich_violation(const Profile& p, const UpperBoundCurve& phi, double psi_value,
                          const UpperBoundCurve& Phi, double Psi_value, double rho) {
  const double scale = std::max(1.0, std::abs(rho));
  double worst = 0.0;
  const auto check_upper = [&](double bound) { worst = std::max(worst, (rho - bound) / scale); };
  const auto check_lower = [&](double bound) { worst = std::max(worst, (bound - rho) / scale); };

  const auto [rmin, rmax] = std::minmax_element(p.row_sums.begin(), p.row_sums.end());
  check_lower(*rmin);
  check_upper(*rmax);
  const auto [mmin, mmax] = std::minmax_element(p.avg2.begin(), p.avg2.end());
  check_lower(*mmin);
  check_upper(*mmax);

  for (double v : phi.values) check_upper(v);
  for (double v : Phi.values) check_upper(v);
  check_lower(psi_value);
  check_lower(Psi_value);
  return worst;
}

}  // namespace

ScanResult run_scan(const ScanOptions& opt) {
  if (opt.count < 1) throw std::invalid_argument("count must be at least 1");
  if (opt.n_min < 1 || opt.n_min > opt.n_max) throw std::invalid_argument("bad order range");
  if (!(opt.density >= 0.0) || !(opt.density <= 1.0))
    throw std::invalid_argument("density must lie in [0, 1]");
  if (opt.family == ScanOptions::Family::Graph && (opt.n_min < 2 || !(opt.density > 0.0)))
    throw std::invalid_argument("graph scans need n_min >= 2 and positive density");

  ScanResult result;
  result.summary.seed = opt.seed;
  result.summary.count = opt.count;

  for (long idx = 0; idx < opt.count; ++idx) {
    SplitMix64 rng = derive_stream(opt.seed, static_cast<std::uint64_t>(idx));
    const int n = rng.next_int(opt.n_min, opt.n_max);

    std::string serialized;
    std::optional<NonnegMatrix> matrix;
    if (opt.family == ScanOptions::Family::Matrix) {
      matrix = random_irreducible_matrix(rng, n, opt.density);
      serialized = serialize_matrix(*matrix);
    } else {
      const Graph g = random_connected_graph(rng, n, opt.density);
      serialized = serialize_edge_list(g);
      matrix = build_matrix(g, opt.kind);
    }
    const NonnegMatrix& a = *matrix;

    const Profile p = profile(a);
    const UpperBoundCurve phi = phi_curve(a);
    const double psi_value = psi(a).value;
    const UpperBoundCurve Phi = rowsum_phi_curve(a);
    const double Psi_value = rowsum_psi(a).value;
    const double rho = spectral_radius(a).rho;

    const double violation = sandwich_violation(p, phi, psi_value, Phi, Psi_value, rho);
    result.summary.max_violation = std::max(result.summary.max_violation, violation);
    if (violation > kViolationCap) {
      ScanViolation v;
      v.instance = idx;
      v.serialized = serialized;
      v.detail = "instance " + std::to_string(idx) + ": sandwich violated by " +
                 format_number(violation) + " relative";
      result.summary.failures.push_back(v.detail);
      result.violation = v;
      return result;
    }

    ScanInstanceRow row;
    row.id = idx;
    row.n = a.order();
    row.rho = rho;
    row.psi = psi_value;
    row.best_phi = phi.best_value;
    row.best_l = phi.best_l;
    row.duan_psi = Psi_value;
    row.best_Phi = Phi.best_value;
    if (nearly_equal(phi.best_value, Phi.best_value, kTieTol)) {
      row.winner = "tie";
      ++result.summary.ties;
    } else if (phi.best_value < Phi.best_value) {
      row.winner = "phi";
      ++result.summary.phi_wins;
    } else {
      row.winner = "Phi";
      ++result.summary.rowsum_wins;
    }
    result.rows.push_back(row);

    if (upper_certificate(a, a.order()).verdict) ++result.summary.upper_certificate_hits;
    if (lower_certificate(a).verdict) ++result.summary.lower_certificate_hits;
    if (rowsum_upper_certificate(a, a.order()).verdict)
      ++result.summary.rowsum_upper_certificate_hits;
    if (rowsum_lower_certificate(a).verdict) ++result.summary.rowsum_lower_certificate_hits;
  }
  return result;
}

std::string render_csv(const ScanResult& result) {
  std::ostringstream out;
  out << "instance,n,rho,psi,best_phi,best_l,duan_psi,best_Phi,winner\n";
  for (const auto& row : result.rows) {
    out << row.id << ',' << row.n << ',' << format_number(row.rho) << ','
        << format_number(row.psi) << ',' << format_number(row.best_phi) << ',' << row.best_l << ','
        << format_number(row.duan_psi) << ',' << format_number(row.best_Phi) << ',' << row.winner
        << "\n";
  }
  return out.str();
}

std::string render_summary_json(const ScanSummary& s) {
  nlohmann::ordered_json j;
  j["seed"] = s.seed;
  j["count"] = s.count;
  nlohmann::ordered_json wins;
  wins["phi"] = s.phi_wins;
  wins["Phi"] = s.rowsum_wins;
  wins["ties"] = s.ties;
  j["wins"] = wins;
  nlohmann::ordered_json certs;
  certs["upper"] = s.upper_certificate_hits;
  certs["lower"] = s.lower_certificate_hits;
  certs["rowsum_upper"] = s.rowsum_upper_certificate_hits;
  certs["rowsum_lower"] = s.rowsum_lower_certificate_hits;
  j["certificate_hits"] = certs;
  j["max_violation"] = round_sig12(s.max_violation);
  j["failures"] = s.failures;
  return j.dump(2) + "\n";
}

}  // namespace specbound
