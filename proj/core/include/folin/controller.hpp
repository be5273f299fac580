#pragma once

#include "folin/companion.hpp"
#include "folin/pinv.hpp"

namespace folin {

/// Per-output-chain linear feedback gains: chain i gets rho_i coefficients
/// applied to [h_i, L_f h_i, ...], producing v_i = sum_j k_{ij} xi_{i,j}.
struct GainSet {
  std::vector<std::vector<double>> chain_gains;

  /// Splits a flat gain list along the profile's chain sizes, e.g.
  /// {k1, k2, k3, k4} with rho = [1,1,2] -> chains {k1}, {k2}, {k3, k4}.
  static GainSet from_flat(const RelativeDegreeProfile& profile,
                           const std::vector<double>& flat);

  void require_match(const RelativeDegreeProfile& profile) const;
  bool all_negative() const;
};

/// v = per-chain linear feedback on the chain states of xi.
Vec outer_command(const Vec& xi, const GainSet& gains, const RelativeDegreeProfile& profile);

/// xi = psi(x), the stacked output chains [h_i, L_f h_i, ..., L_f^{rho_i-1} h_i].
std::function<Vec(const Vec&)> build_psi(const AffineSystem& sys,
                                         const RelativeDegreeProfile& profile,
                                         const LieOptions& opts = {});

/// gamma(x): row i is L_g L_f^{rho_i-1} h_i(x), shape l_y x l_u.
Mat gamma_matrix(const AffineSystem& sys, const RelativeDegreeProfile& profile, const Vec& x,
                 const LieOptions& opts = {});

/// Stack of L_f^{rho_i} h_i(x).
Vec lf_rho_stack(const AffineSystem& sys, const RelativeDegreeProfile& profile, const Vec& x,
                 const LieOptions& opts = {});

/// alpha(x) = gamma(x)^+ . ( -[L_f^{rho_i} h_i] ).
Vec alpha_term(const AffineSystem& sys, const RelativeDegreeProfile& profile, const Vec& x,
               double pinv_tol = kDefaultPinvTol, const LieOptions& opts = {});

/// u = alpha(x) + gamma(x)^+ v.
Vec iol_control(const AffineSystem& sys, const RelativeDegreeProfile& profile, const Vec& x,
                const Vec& v, double pinv_tol = kDefaultPinvTol, const LieOptions& opts = {});

/// Lambda(x) = gamma gamma^+, the projection onto the achievable command
/// subspace, with its diagonal, numerical rank, and off-diagonal mass.
struct LambdaSnapshot {
  Mat matrix;
  Vec diagonal;
  int rank = 0;
  double time = 0.0;
  double offdiag_norm = 0.0;
};

LambdaSnapshot lambda_snapshot(const AffineSystem& sys, const RelativeDegreeProfile& profile,
                               const Vec& x, double pinv_tol = kDefaultPinvTol, double time = 0.0,
                               const LieOptions& opts = {});

/// Immutable bundle of the pieces above: verified profile, chain fields, and
/// the pseudo-inverse tolerance. Pure evaluation, safe to share across
/// threads.
class LinearizingController {
 public:
  LinearizingController(AffineSystem sys, RelativeDegreeProfile profile, GainSet gains,
                        double pinv_tol = kDefaultPinvTol, LieOptions opts = {});

  const RelativeDegreeProfile& profile() const { return profile_; }
  const GainSet& gains() const { return gains_; }
  double pinv_tol() const { return pinv_tol_; }
  const AffineSystem& system() const { return sys_; }

  Vec psi(const Vec& x) const;
  Mat gamma(const Vec& x) const;
  Vec lf_rho(const Vec& x) const;
  Vec alpha(const Vec& x) const;
  Vec command(const Vec& x) const;                // v from the shipped gain law
  Vec control(const Vec& x, const Vec& v) const;  // u = alpha + gamma^+ v
  Vec control(const Vec& x) const;                // u with v = command(x)
  LambdaSnapshot lambda(const Vec& x, double time = 0.0) const;

 private:
  AffineSystem sys_;
  RelativeDegreeProfile profile_;
  GainSet gains_;
  double pinv_tol_;
  LieOptions opts_;
  // fields_[i][j] = L_f^j h_i, precomputed once; evaluation stays pure.
  std::vector<std::vector<ScalarField>> fields_;
};

}  // namespace folin
