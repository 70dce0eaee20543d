#include "specbound/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace specbound {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

ordered_json number(double x) { return round_sig12(x); }

ordered_json number_list(const std::vector<double>& values) {
  ordered_json arr = ordered_json::array();
  for (double v : values) arr.push_back(number(v));
  return arr;
}

ordered_json curve_json(const UpperBoundCurve& curve) {
  ordered_json j;
  j["values"] = number_list(curve.values);
  j["best_l"] = curve.best_l;
  j["best_value"] = number(curve.best_value);
  j["off_diagonal_zero"] = curve.off_diagonal_zero;
  return j;
}

ordered_json certificate_json(const EqualityCertificate& cert) {
  ordered_json j;
  j["verdict"] = cert.verdict;
  j["reason"] = certificate_reason_token(cert.reason);
  if (cert.t)
    j["t"] = *cert.t;
  else
    j["t"] = nullptr;
  ordered_json conditions = ordered_json::array();
  for (const auto& check : cert.condition_log) {
    ordered_json c;
    c["name"] = check.name;
    c["passed"] = check.passed;
    if (check.i >= 0) c["i"] = check.i + 1;
    if (check.k >= 0) c["k"] = check.k + 1;
    conditions.push_back(c);
  }
  j["conditions"] = conditions;
  return j;
}

ordered_json profile_json(const Profile& p) {
  ordered_json j;
  j["row_sums"] = number_list(p.row_sums);
  j["avg2"] = number_list(p.avg2);
  ordered_json order = ordered_json::array();
  for (int v : p.order) order.push_back(v + 1);
  j["order"] = order;
  j["M"] = number(p.diag_max);
  j["N"] = p.offdiag_max ? ordered_json(number(*p.offdiag_max)) : ordered_json(nullptr);
  j["S"] = number(p.diag_min);
  j["T"] = p.offdiag_min ? ordered_json(number(*p.offdiag_min)) : ordered_json(nullptr);
  j["b"] = number(p.ratio_max);
  j["c"] = number(p.ratio_min);
  return j;
}

std::string method_token(SpectralMethod method) {
  return method == SpectralMethod::PowerIterationPerBlock ? "power-iteration-per-block"
                                                          : "exact-small";
}

ordered_json spectral_json(const SpectralEstimate& est) {
  ordered_json j;
  j["value"] = number(est.rho);
  j["iterations"] = est.iterations;
  j["residual"] = number(est.residual);
  j["method"] = method_token(est.method);
  return j;
}

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += format_number(values[i]);
  }
  return out;
}

std::string direction_token(BoundDirection d) {
  return d == BoundDirection::Upper ? "upper" : "lower";
}

}  // namespace

double round_sig12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string certificate_reason_token(CertificateReason reason) {
  switch (reason) {
    case CertificateReason::AllAvg2Equal: return "all-m-equal";
    case CertificateReason::ConditionsT: return "conditions-t";
    case CertificateReason::AllRowSumsEqual: return "all-r-equal";
    case CertificateReason::RefusedReducible: return "refused-reducible";
    case CertificateReason::Fails: return "fails";
  }
  return "fails";
}

BoundReport make_bound_report(const NonnegMatrix& a, double tol, long max_iterations) {
  BoundReport rep;
  rep.n = a.order();
  rep.profile = profile(a);
  rep.irreducible = is_irreducible(a);
  rep.phi = phi_curve(a);
  rep.psi_value = psi(a);
  rep.rowsum_phi = rowsum_phi_curve(a);
  rep.rowsum_psi_value = rowsum_psi(a);
  rep.rho = spectral_radius(a, tol, max_iterations);
  rep.upper_cert = upper_certificate(a, rep.n);
  rep.lower_cert = lower_certificate(a);
  rep.rowsum_upper_cert = rowsum_upper_certificate(a, rep.n);
  rep.rowsum_lower_cert = rowsum_lower_certificate(a);
  rep.gap_phi = rep.phi.best_value - rep.rho.rho;
  rep.gap_psi = rep.psi_value.value - rep.rho.rho;
  rep.gap_rowsum_phi = rep.rowsum_phi.best_value - rep.rho.rho;
  rep.gap_rowsum_psi = rep.rowsum_psi_value.value - rep.rho.rho;
  return rep;
}

std::string render_json(const BoundReport& rep) {
  ordered_json j;
  j["source"] = "matrix";
  j["n"] = rep.n;
  j["profile"] = profile_json(rep.profile);
  j["phi"] = curve_json(rep.phi);
  j["psi"] = number(rep.psi_value.value);
  j["rowsum_phi"] = curve_json(rep.rowsum_phi);
  j["rowsum_psi"] = number(rep.rowsum_psi_value.value);
  j["rho"] = spectral_json(rep.rho);
  ordered_json certs;
  certs["upper"] = certificate_json(rep.upper_cert);
  certs["lower"] = certificate_json(rep.lower_cert);
  certs["rowsum_upper"] = certificate_json(rep.rowsum_upper_cert);
  certs["rowsum_lower"] = certificate_json(rep.rowsum_lower_cert);
  j["certificates"] = certs;
  ordered_json gaps;
  gaps["phi_best"] = number(rep.gap_phi);
  gaps["psi"] = number(rep.gap_psi);
  gaps["rowsum_phi_best"] = number(rep.gap_rowsum_phi);
  gaps["rowsum_psi"] = number(rep.gap_rowsum_psi);
  j["gaps"] = gaps;
  ordered_json flags;
  flags["irreducible"] = rep.irreducible;
  flags["zero_off_diagonal"] = rep.phi.off_diagonal_zero;
  j["flags"] = flags;
  return j.dump(2) + "\n";
}

std::string render_text(const BoundReport& rep) {
  std::ostringstream out;
  const Profile& p = rep.profile;
  out << "matrix " << rep.n << "x" << rep.n << (rep.irreducible ? ", irreducible" : ", reducible")
      << "\n";
  out << "row sums:       " << join_numbers(p.row_sums) << "\n";
  out << "avg 2-row sums: " << join_numbers(p.avg2) << "\n";
  out << "M=" << format_number(p.diag_max)
      << " N=" << (p.offdiag_max ? format_number(*p.offdiag_max) : "absent")
      << " S=" << format_number(p.diag_min)
      << " T=" << (p.offdiag_min ? format_number(*p.offdiag_min) : "absent")
      << " b=" << format_number(p.ratio_max) << " c=" << format_number(p.ratio_min) << "\n";
  out << "rho = " << format_number(rep.rho.rho) << " (" << method_token(rep.rho.method) << ", "
      << rep.rho.iterations << " iterations, residual " << format_number(rep.rho.residual)
      << ")\n";
  out << "phi curve:        " << join_numbers(rep.phi.values) << "  [best l=" << rep.phi.best_l
      << ", value " << format_number(rep.phi.best_value) << "]"
      << (rep.phi.off_diagonal_zero ? "  (no positive off-diagonal entry; only l=1 defined)" : "")
      << "\n";
  out << "psi = " << format_number(rep.psi_value.value) << "\n";
  out << "rowsum Phi curve: " << join_numbers(rep.rowsum_phi.values)
      << "  [best l=" << rep.rowsum_phi.best_l << ", value "
      << format_number(rep.rowsum_phi.best_value) << "]\n";
  out << "rowsum Psi = " << format_number(rep.rowsum_psi_value.value) << "\n";
  out << "gaps (bound - rho): phi " << format_number(rep.gap_phi) << ", psi "
      << format_number(rep.gap_psi) << ", rowsum Phi " << format_number(rep.gap_rowsum_phi)
      << ", rowsum Psi " << format_number(rep.gap_rowsum_psi) << "\n";
  auto cert_line = [&](const char* name, const EqualityCertificate& cert) {
    out << name << ": " << (cert.verdict ? "attains" : "does not attain") << " ("
        << certificate_reason_token(cert.reason);
    if (cert.t) out << ", t=" << *cert.t;
    out << ")\n";
  };
  cert_line("upper certificate (l=n)", rep.upper_cert);
  cert_line("lower certificate", rep.lower_cert);
  cert_line("rowsum upper certificate (l=n)", rep.rowsum_upper_cert);
  cert_line("rowsum lower certificate", rep.rowsum_lower_cert);
  return out.str();
}

std::string render_csv(const BoundReport& rep) {
  std::ostringstream out;
  out << "n,rho,iterations,residual,psi,best_phi,best_l,duan_psi,best_Phi,best_L,"
      << "upper_cert,lower_cert,irreducible\n";
  out << rep.n << ',' << format_number(rep.rho.rho) << ',' << rep.rho.iterations << ','
      << format_number(rep.rho.residual) << ',' << format_number(rep.psi_value.value) << ','
      << format_number(rep.phi.best_value) << ',' << rep.phi.best_l << ','
      << format_number(rep.rowsum_psi_value.value) << ','
      << format_number(rep.rowsum_phi.best_value) << ',' << rep.rowsum_phi.best_l << ','
      << (rep.upper_cert.verdict ? 1 : 0) << ',' << (rep.lower_cert.verdict ? 1 : 0) << ','
      << (rep.irreducible ? 1 : 0) << "\n";
  return out.str();
}

std::string render_json(const GraphBoundReport& rep) {
  ordered_json j;
  j["source"] = "graph";
  j["kind"] = kind_token(rep.kind);
  j["direction"] = direction_token(rep.direction);
  ordered_json params;
  params[rep.direction == BoundDirection::Upper ? "M" : "S"] = number(rep.parameters.diag_extreme);
  params[rep.direction == BoundDirection::Upper ? "N" : "T"] =
      number(rep.parameters.offdiag_extreme);
  params[rep.direction == BoundDirection::Upper ? "b" : "c"] = number(rep.parameters.ratio);
  j["parameters"] = params;
  j["avg2"] = number_list(rep.avg2);
  if (rep.direction == BoundDirection::Upper)
    j["curve"] = curve_json(rep.curve);
  else
    j["value"] = number(rep.value.value);
  j["rho"] = spectral_json(rep.rho);
  ordered_json pred;
  pred["stated"] = rep.stated_predicate.stated;
  pred["holds"] = rep.stated_predicate.holds;
  pred["via_uniform_avg2"] = rep.stated_predicate.via_uniform_avg2;
  pred["witness_vertex"] = rep.stated_predicate.witness_vertex
                               ? ordered_json(*rep.stated_predicate.witness_vertex + 1)
                               : ordered_json(nullptr);
  pred["quantities"] = number_list(rep.stated_predicate.quantities);
  pred["reading"] = "index 1 = dominating vertex (quantity n-1)";
  j["stated_predicate"] = pred;
  j["general_certificate"] = certificate_json(rep.general_certificate);
  j["general_instantiation"] = rep.general_instantiation;
  return j.dump(2) + "\n";
}

std::string render_text(const GraphBoundReport& rep) {
  std::ostringstream out;
  out << "graph bound: kind=" << kind_token(rep.kind)
      << " direction=" << direction_token(rep.direction) << "\n";
  if (rep.direction == BoundDirection::Upper)
    out << "parameters: M=" << format_number(rep.parameters.diag_extreme)
        << " N=" << format_number(rep.parameters.offdiag_extreme)
        << " b=" << format_number(rep.parameters.ratio) << "\n";
  else
    out << "parameters: S=" << format_number(rep.parameters.diag_extreme)
        << " T=" << format_number(rep.parameters.offdiag_extreme)
        << " c=" << format_number(rep.parameters.ratio) << "\n";
  out << "avg 2-quantities: " << join_numbers(rep.avg2) << "\n";
  if (rep.direction == BoundDirection::Upper) {
    out << "curve: " << join_numbers(rep.curve.values) << "  [best l=" << rep.curve.best_l
        << ", value " << format_number(rep.curve.best_value) << "]\n";
  } else {
    out << "value: " << format_number(rep.value.value) << "\n";
  }
  out << "rho = " << format_number(rep.rho.rho) << " (" << method_token(rep.rho.method) << ")\n";
  if (rep.general_instantiation)
    out << "note: general-theorem instantiation, not a stated theorem\n";
  if (rep.stated_predicate.stated) {
    out << "stated predicate: " << (rep.stated_predicate.holds ? "holds" : "does not hold");
    if (rep.stated_predicate.via_uniform_avg2) out << " (all avg 2-quantities equal)";
    if (rep.stated_predicate.witness_vertex)
      out << " (dominating vertex " << *rep.stated_predicate.witness_vertex + 1 << ")";
    out << "  [reported only; equality claims come from the certificate]\n";
  }
  out << "general certificate: "
      << (rep.general_certificate.verdict ? "attains" : "does not attain") << " ("
      << certificate_reason_token(rep.general_certificate.reason);
  if (rep.general_certificate.t) out << ", t=" << *rep.general_certificate.t;
  out << ")\n";
  return out.str();
}

}  // namespace specbound
