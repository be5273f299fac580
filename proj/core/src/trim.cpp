#include "folin/trim.hpp"

#include <cmath>
#include <sstream>

namespace folin {

namespace {

Eigen::Vector3d scaled_residual(const AircraftParams& p, double V, double gamma,
                                const Eigen::Vector3d& z) {
  const FlightState s{V, gamma, z(0), 0.0};
  const ControlInput u{z(1), z(2)};
  const Eigen::Vector4d xdot = dynamics_rhs(p, s, u);
  // Nondimensional per-equation scales: accelerations against gravity,
  // the moment row against dynamic pressure (residual 3 is the moment
  // coefficient itself).
  Eigen::Vector3d r;
  r(0) = xdot(0) / p.g;
  r(1) = xdot(1) * V / p.g;
  r(2) = xdot(3) * 2.0 * p.I_yy / (p.rho_air * V * V * p.S * p.cbar);
  return r;
}

}  // namespace

double trim_residual(const AircraftParams& p, double V, double gamma, double theta, double F,
                     double delta_e) {
  return scaled_residual(p, V, gamma, Eigen::Vector3d(theta, F, delta_e))
      .lpNorm<Eigen::Infinity>();
}

TrimPoint solve_trim(const AircraftParams& p, double V, double gamma,
                     std::optional<TrimGuess> guess, const TrimOptions& opts) {
  p.validate();
  if (!(V > 0.0)) {
    throw std::invalid_argument("solve_trim: velocity must be positive");
  }

  Eigen::Vector3d z;
  if (guess) {
    z << guess->theta, guess->F, guess->delta_e;
  } else {
    // generic subsonic cruise ballpark
    z << 0.03, 0.05 * p.m * p.g, 0.0;
  }
  // per-variable scales for differencing (rad vs newtons)
  const Eigen::Vector3d var_scale(0.01, 0.01 * p.m * p.g, 0.01);
  const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());

  Eigen::Vector3d r = scaled_residual(p, V, gamma, z);
  int iterations = 0;
  while (r.lpNorm<Eigen::Infinity>() >= opts.tol) {
    if (iterations >= opts.max_iterations) {
      std::ostringstream os;
      os << "solve_trim: no convergence after " << opts.max_iterations
         << " iterations at V = " << V << " (residual " << r.lpNorm<Eigen::Infinity>() << ")";
      throw std::runtime_error(os.str());
    }
    Eigen::Matrix3d J;
    for (int j = 0; j < 3; ++j) {
      const double h = h0 * std::max(var_scale(j), std::abs(z(j)));
      Eigen::Vector3d zp = z, zm = z;
      zp(j) += h;
      zm(j) -= h;
      J.col(j) = (scaled_residual(p, V, gamma, zp) - scaled_residual(p, V, gamma, zm)) /
                 (zp(j) - zm(j));
    }
    const Eigen::Vector3d step = J.fullPivLu().solve(-r);
    if (!step.allFinite()) {
      throw std::runtime_error("solve_trim: singular Jacobian at V = " + std::to_string(V));
    }
    // backtracking damping
    double lambda = 1.0;
    Eigen::Vector3d z_next = z + step;
    Eigen::Vector3d r_next = scaled_residual(p, V, gamma, z_next);
    while (r_next.norm() > (1.0 - 1e-4 * lambda) * r.norm() && lambda > 1.0 / 64.0) {
      lambda *= 0.5;
      z_next = z + lambda * step;
      r_next = scaled_residual(p, V, gamma, z_next);
    }
    z = z_next;
    r = r_next;
    ++iterations;
  }

  TrimPoint tp;
  tp.V = V;
  tp.gamma = gamma;
  tp.theta = z(0);
  tp.F = z(1);
  tp.delta_e = z(2);
  tp.residual = r.lpNorm<Eigen::Infinity>();
  tp.iterations = iterations;
  tp.negative_thrust = tp.F < 0.0;  // physically dubious, caller's call
  return tp;
}

std::vector<TrimPoint> trim_sweep(const AircraftParams& p, const std::vector<double>& V_list,
                                  double gamma, const TrimOptions& opts) {
  if (V_list.empty()) {
    throw std::invalid_argument("trim_sweep: velocity list is empty");
  }
  for (size_t i = 1; i < V_list.size(); ++i) {
    if (!(V_list[i] > V_list[i - 1])) {
      throw std::invalid_argument("trim_sweep: velocity list must be ascending");
    }
  }
  std::vector<TrimPoint> points;
  points.reserve(V_list.size());
  std::optional<TrimGuess> guess;
  for (size_t i = 0; i < V_list.size(); ++i) {
    try {
      points.push_back(solve_trim(p, V_list[i], gamma, guess, opts));
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "trim_sweep: failed at index " << i << " (V = " << V_list[i] << "): " << e.what();
      throw std::runtime_error(os.str());
    }
    guess = TrimGuess{points.back().theta, points.back().F, points.back().delta_e};
  }
  return points;
}

}  // namespace folin
