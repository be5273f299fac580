#pragma once

#include "folin/scenario.hpp"

namespace folin {

/// Full-precision CSV of a closed-loop run:
///   t,V,gamma,theta,q,x1,x2,x3,x4,F,delta_e,v1,v2,v3,lam1,lam2,lam3,offdiag,
///   Vref,gammaref,thetaref
/// '.' decimal, ',' separator, LF endings. Two-output runs pad v3/lam3 with
/// zero. Built in memory and written in one shot so a failing path never
/// leaves a partial file.
std::string trace_csv_text(const Scenario& scenario, const SimTrace& trace);
void write_trace_csv(const std::string& path, const Scenario& scenario, const SimTrace& trace);

/// Trim sweep CSV: V,gamma,theta,F,delta_e,residual.
std::string trim_csv_text(const std::vector<TrimPoint>& points);
void write_trim_csv(const std::string& path, const std::vector<TrimPoint>& points);

/// Internal-dynamics CSV: t,eta1,eta2.
std::string zero_dynamics_csv_text(const ZeroDynTrace& trace);
void write_zero_dynamics_csv(const std::string& path, const ZeroDynTrace& trace);

/// Shared atomic-ish writer: buffers, then writes; throws on any I/O error.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace folin
