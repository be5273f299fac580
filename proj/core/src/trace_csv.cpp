#include "folin/trace_csv.hpp"

#include <cstdio>
#include <fstream>

namespace folin {

namespace {

void append_number(std::string& out, double v) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof(buf), "%.17g", v);
  out.append(buf, static_cast<size_t>(n));
}

}  // namespace

std::string trace_csv_text(const Scenario& scenario, const SimTrace& trace) {
  std::string out;
  out.reserve(trace.size() * 512 + 256);
  out += "t,V,gamma,theta,q,x1,x2,x3,x4,F,delta_e,v1,v2,v3,lam1,lam2,lam3,offdiag,"
         "Vref,gammaref,thetaref\n";
  const bool three = scenario.mode == PlantMode::kThreeOutput;
  for (size_t k = 0; k < trace.size(); ++k) {
    const Vec& x = trace.x[k];
    const FlightState abs = scenario.absolute_state(x);
    double row[21];
    row[0] = trace.t[k];
    row[1] = abs.V;
    row[2] = abs.gamma;
    row[3] = abs.theta;
    row[4] = abs.q;
    row[5] = x(0);
    row[6] = x(1);
    row[7] = x(2);
    row[8] = x(3);
    row[9] = trace.u[k](0);
    row[10] = trace.u[k](1);
    row[11] = trace.v[k](0);
    row[12] = trace.v[k](1);
    row[13] = three ? trace.v[k](2) : 0.0;
    row[14] = trace.lambda_diag[k](0);
    row[15] = trace.lambda_diag[k](1);
    row[16] = three ? trace.lambda_diag[k](2) : 0.0;
    row[17] = trace.lambda_offdiag[k];
    row[18] = scenario.ref.V_bar;
    row[19] = scenario.ref.gamma_bar;
    row[20] = scenario.ref.theta_bar;
    for (int c = 0; c < 21; ++c) {
      if (c > 0) out += ',';
      append_number(out, row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string trim_csv_text(const std::vector<TrimPoint>& points) {
  std::string out = "V,gamma,theta,F,delta_e,residual\n";
  for (const auto& tp : points) {
    const double row[6] = {tp.V, tp.gamma, tp.theta, tp.F, tp.delta_e, tp.residual};
    for (int c = 0; c < 6; ++c) {
      if (c > 0) out += ',';
      append_number(out, row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string zero_dynamics_csv_text(const ZeroDynTrace& trace) {
  std::string out = "t,eta1,eta2\n";
  for (size_t k = 0; k < trace.t.size(); ++k) {
    append_number(out, trace.t[k]);
    out += ',';
    append_number(out, trace.eta[k](0));
    out += ',';
    append_number(out, trace.eta[k](1));
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw std::runtime_error("write failed for '" + path + "'");
  }
}

void write_trace_csv(const std::string& path, const Scenario& scenario, const SimTrace& trace) {
  write_text_file(path, trace_csv_text(scenario, trace));
}

void write_trim_csv(const std::string& path, const std::vector<TrimPoint>& points) {
  write_text_file(path, trim_csv_text(points));
}

void write_zero_dynamics_csv(const std::string& path, const ZeroDynTrace& trace) {
  write_text_file(path, zero_dynamics_csv_text(trace));
}

}  // namespace folin
