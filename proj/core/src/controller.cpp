#include "folin/controller.hpp"

namespace folin {

GainSet GainSet::from_flat(const RelativeDegreeProfile& profile, const std::vector<double>& flat) {
  if (static_cast<int>(flat.size()) != profile.total()) {
    throw std::invalid_argument("gain list has " + std::to_string(flat.size()) +
                                " entries, profile needs " + std::to_string(profile.total()));
  }
  GainSet gains;
  auto it = flat.begin();
  for (int r : profile.rho) {
    gains.chain_gains.emplace_back(it, it + r);
    it += r;
  }
  return gains;
}

void GainSet::require_match(const RelativeDegreeProfile& profile) const {
  if (static_cast<int>(chain_gains.size()) != profile.num_outputs()) {
    throw std::invalid_argument("gain set has " + std::to_string(chain_gains.size()) +
                                " chains, profile has " + std::to_string(profile.num_outputs()));
  }
  for (int i = 0; i < profile.num_outputs(); ++i) {
    if (static_cast<int>(chain_gains[i].size()) != profile.rho[i]) {
      throw std::invalid_argument("gain chain " + std::to_string(i) + " has " +
                                  std::to_string(chain_gains[i].size()) + " entries, expected " +
                                  std::to_string(profile.rho[i]));
    }
  }
}

bool GainSet::all_negative() const {
  for (const auto& chain : chain_gains) {
    for (double k : chain) {
      if (!(k < 0.0)) return false;
    }
  }
  return true;
}

Vec outer_command(const Vec& xi, const GainSet& gains, const RelativeDegreeProfile& profile) {
  gains.require_match(profile);
  if (xi.size() != profile.total()) {
    throw std::invalid_argument("xi has size " + std::to_string(xi.size()) + ", profile total is " +
                                std::to_string(profile.total()));
  }
  Vec v(profile.num_outputs());
  int offset = 0;
  for (int i = 0; i < profile.num_outputs(); ++i) {
    double vi = 0.0;
    for (int j = 0; j < profile.rho[i]; ++j) {
      vi += gains.chain_gains[i][j] * xi(offset + j);
    }
    v(i) = vi;
    offset += profile.rho[i];
  }
  return v;
}

namespace {

std::vector<std::vector<ScalarField>> build_chain_fields(const AffineSystem& sys,
                                                         const RelativeDegreeProfile& profile,
                                                         const LieOptions& opts) {
  profile.require_valid_for(sys);
  std::vector<std::vector<ScalarField>> fields(profile.num_outputs());
  for (int i = 0; i < profile.num_outputs(); ++i) {
    fields[i].push_back(sys.output_field(i));
    for (int j = 1; j <= profile.rho[i]; ++j) {
      fields[i].push_back(lie_f_field(sys, fields[i][j - 1], opts));
    }
  }
  return fields;
}

}  // namespace

std::function<Vec(const Vec&)> build_psi(const AffineSystem& sys,
                                         const RelativeDegreeProfile& profile,
                                         const LieOptions& opts) {
  auto fields = build_chain_fields(sys, profile, opts);
  const auto rho = profile.rho;
  const int total = profile.total();
  return [fields, rho, total](const Vec& x) {
    Vec xi(total);
    int offset = 0;
    for (size_t i = 0; i < rho.size(); ++i) {
      for (int j = 0; j < rho[i]; ++j) {
        xi(offset + j) = fields[i][j].value(x);
      }
      offset += rho[i];
    }
    return xi;
  };
}

Mat gamma_matrix(const AffineSystem& sys, const RelativeDegreeProfile& profile, const Vec& x,
                 const LieOptions& opts) {
  auto fields = build_chain_fields(sys, profile, opts);
  Mat gamma(profile.num_outputs(), sys.input_dim);
  for (int i = 0; i < profile.num_outputs(); ++i) {
    gamma.row(i) = lie_g(sys, fields[i][profile.rho[i] - 1], x, opts);
  }
  return gamma;
}

Vec lf_rho_stack(const AffineSystem& sys, const RelativeDegreeProfile& profile, const Vec& x,
                 const LieOptions& opts) {
  auto fields = build_chain_fields(sys, profile, opts);
  Vec stack(profile.num_outputs());
  for (int i = 0; i < profile.num_outputs(); ++i) {
    stack(i) = fields[i][profile.rho[i]].value(x);
  }
  return stack;
}

Vec alpha_term(const AffineSystem& sys, const RelativeDegreeProfile& profile, const Vec& x,
               double pinv_tol, const LieOptions& opts) {
  const Mat gamma = gamma_matrix(sys, profile, x, opts);
  const Vec stack = lf_rho_stack(sys, profile, x, opts);
  return pseudo_inverse(gamma, pinv_tol) * (-stack);
}

Vec iol_control(const AffineSystem& sys, const RelativeDegreeProfile& profile, const Vec& x,
                const Vec& v, double pinv_tol, const LieOptions& opts) {
  if (v.size() != profile.num_outputs()) {
    throw std::invalid_argument("command v has wrong dimension");
  }
  if (!v.allFinite()) {
    throw std::domain_error("command v has non-finite entries");
  }
  const Mat gamma = gamma_matrix(sys, profile, x, opts);
  const Vec stack = lf_rho_stack(sys, profile, x, opts);
  const Mat gamma_pinv = pseudo_inverse(gamma, pinv_tol);
  return gamma_pinv * (v - stack);
}

LambdaSnapshot lambda_snapshot(const AffineSystem& sys, const RelativeDegreeProfile& profile,
                               const Vec& x, double pinv_tol, double time, const LieOptions& opts) {
  const Mat gamma = gamma_matrix(sys, profile, x, opts);
  LambdaSnapshot snap;
  snap.matrix = gamma * pseudo_inverse(gamma, pinv_tol);
  snap.diagonal = snap.matrix.diagonal();
  snap.rank = pinv_rank(gamma, pinv_tol);
  snap.time = time;
  Mat off = snap.matrix;
  off.diagonal().setZero();
  snap.offdiag_norm = off.norm();
  return snap;
}

LinearizingController::LinearizingController(AffineSystem sys, RelativeDegreeProfile profile,
                                             GainSet gains, double pinv_tol, LieOptions opts)
    : sys_(std::move(sys)),
      profile_(std::move(profile)),
      gains_(std::move(gains)),
      pinv_tol_(pinv_tol),
      opts_(opts) {
  gains_.require_match(profile_);
  fields_ = build_chain_fields(sys_, profile_, opts_);
}

Vec LinearizingController::psi(const Vec& x) const {
  Vec xi(profile_.total());
  int offset = 0;
  for (int i = 0; i < profile_.num_outputs(); ++i) {
    for (int j = 0; j < profile_.rho[i]; ++j) {
      xi(offset + j) = fields_[i][j].value(x);
    }
    offset += profile_.rho[i];
  }
  return xi;
}

Mat LinearizingController::gamma(const Vec& x) const {
  Mat g(profile_.num_outputs(), sys_.input_dim);
  for (int i = 0; i < profile_.num_outputs(); ++i) {
    g.row(i) = lie_g(sys_, fields_[i][profile_.rho[i] - 1], x, opts_);
  }
  return g;
}

Vec LinearizingController::lf_rho(const Vec& x) const {
  Vec stack(profile_.num_outputs());
  for (int i = 0; i < profile_.num_outputs(); ++i) {
    stack(i) = fields_[i][profile_.rho[i]].value(x);
  }
  return stack;
}

Vec LinearizingController::alpha(const Vec& x) const {
  return pseudo_inverse(gamma(x), pinv_tol_) * (-lf_rho(x));
}

Vec LinearizingController::command(const Vec& x) const {
  return outer_command(psi(x), gains_, profile_);
}

Vec LinearizingController::control(const Vec& x, const Vec& v) const {
  if (v.size() != profile_.num_outputs()) {
    throw std::invalid_argument("command v has wrong dimension");
  }
  if (!v.allFinite()) {
    throw std::domain_error("command v has non-finite entries");
  }
  return pseudo_inverse(gamma(x), pinv_tol_) * (v - lf_rho(x));
}

Vec LinearizingController::control(const Vec& x) const { return control(x, command(x)); }

LambdaSnapshot LinearizingController::lambda(const Vec& x, double time) const {
  const Mat g = gamma(x);
  LambdaSnapshot snap;
  snap.matrix = g * pseudo_inverse(g, pinv_tol_);
  snap.diagonal = snap.matrix.diagonal();
  snap.rank = pinv_rank(g, pinv_tol_);
  snap.time = time;
  Mat off = snap.matrix;
  off.diagonal().setZero();
  snap.offdiag_norm = off.norm();
  return snap;
}

}  // namespace folin
