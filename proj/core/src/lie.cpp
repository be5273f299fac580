#include "folin/lie.hpp"

#include <cmath>
#include <limits>

namespace folin {

namespace {

double fd_step(double xi) {
  static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
  return h0 * std::max(1.0, std::abs(xi));
}

void require_finite(double v, const std::string& what) {
  if (!std::isfinite(v)) {
    throw std::domain_error("non-finite value in " + what);
  }
}

}  // namespace

ScalarField AffineSystem::output_field(int i) const {
  if (i < 0 || i >= output_dim) {
    throw std::invalid_argument("output index " + std::to_string(i) + " out of range");
  }
  ScalarField field;
  auto hh = h;
  field.value = [hh, i](const Vec& x) { return hh(x)(i); };
  if (h_jacobian) {
    auto hj = h_jacobian;
    field.gradient = [hj, i](const Vec& x) { return Vec(hj(x).row(i).transpose()); };
  }
  return field;
}

void AffineSystem::check_finite_at(const Vec& x) const {
  if (x.size() != state_dim) {
    throw std::invalid_argument("state has size " + std::to_string(x.size()) + ", expected " +
                                std::to_string(state_dim));
  }
  const Vec fx = f(x);
  if (fx.size() != state_dim) throw std::domain_error("f(x) has wrong dimension");
  for (int i = 0; i < fx.size(); ++i) {
    require_finite(fx(i), "f(x) component " + std::to_string(i));
  }
  const Mat gx = g(x);
  if (gx.rows() != state_dim || gx.cols() != input_dim) {
    throw std::domain_error("g(x) has wrong shape");
  }
  for (int i = 0; i < gx.rows(); ++i) {
    for (int j = 0; j < gx.cols(); ++j) {
      require_finite(gx(i, j), "g(x) entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  const Vec hx = h(x);
  if (hx.size() != output_dim) throw std::domain_error("h(x) has wrong dimension");
  for (int i = 0; i < hx.size(); ++i) {
    require_finite(hx(i), "h(x) component " + std::to_string(i));
  }
}

Vec finite_difference_gradient(const std::function<double(const Vec&)>& fn, const Vec& x) {
  Vec grad(x.size());
  Vec xp = x, xm = x;
  for (int i = 0; i < x.size(); ++i) {
    const double h = fd_step(x(i));
    xp(i) = x(i) + h;
    xm(i) = x(i) - h;
    const double fp = fn(xp);
    const double fm = fn(xm);
    require_finite(fp, "field evaluation at perturbed component " + std::to_string(i));
    require_finite(fm, "field evaluation at perturbed component " + std::to_string(i));
    grad(i) = (fp - fm) / (xp(i) - xm(i));
    xp(i) = x(i);
    xm(i) = x(i);
  }
  return grad;
}

Vec field_gradient(const ScalarField& field, const Vec& x, const LieOptions& opts) {
  if (field.gradient) {
    return field.gradient(x);
  }
  if (field.fd_depth >= opts.max_fd_nesting) {
    throw std::runtime_error(
        "Lie derivative needs " + std::to_string(field.fd_depth + 1) +
        " stacked finite-difference layers; limit is " + std::to_string(opts.max_fd_nesting) +
        ". Provide analytic gradients for higher orders.");
  }
  return finite_difference_gradient(field.value, x);
}

double lie_f(const AffineSystem& sys, const ScalarField& field, const Vec& x,
             const LieOptions& opts) {
  const Vec grad = field_gradient(field, x, opts);
  const Vec fx = sys.f(x);
  for (int i = 0; i < fx.size(); ++i) {
    require_finite(fx(i), "f(x) component " + std::to_string(i));
  }
  const double out = grad.dot(fx);
  require_finite(out, "L_f result");
  return out;
}

RowVec lie_g(const AffineSystem& sys, const ScalarField& field, const Vec& x,
             const LieOptions& opts) {
  const Vec grad = field_gradient(field, x, opts);
  const Mat gx = sys.g(x);
  if (gx.rows() != x.size()) throw std::domain_error("g(x) row count != state dimension");
  RowVec out = grad.transpose() * gx;
  for (int j = 0; j < out.size(); ++j) {
    require_finite(out(j), "L_g result channel " + std::to_string(j));
  }
  return out;
}

ScalarField lie_f_field(const AffineSystem& sys, const ScalarField& field, const LieOptions& opts) {
  ScalarField out;
  // Capture by value: fields must stay pure and self-contained.
  out.value = [sys, field, opts](const Vec& x) { return lie_f(sys, field, x, opts); };
  // Differentiating `out` numerically stacks one more layer on whatever the
  // inner gradient needed.
  out.fd_depth = field.has_analytic_gradient() ? 1 : field.fd_depth + 1;
  return out;
}

ScalarField iterated_lie_f_field(const AffineSystem& sys, const ScalarField& field, int order,
                                 const LieOptions& opts) {
  if (order < 0) throw std::invalid_argument("Lie derivative order must be >= 0");
  ScalarField current = field;
  for (int k = 0; k < order; ++k) {
    if (!current.has_analytic_gradient() && current.fd_depth >= opts.max_fd_nesting) {
      throw std::runtime_error("iterated Lie derivative of order " + std::to_string(order) +
                               " exceeds the finite-difference nesting limit of " +
                               std::to_string(opts.max_fd_nesting));
    }
    current = lie_f_field(sys, current, opts);
  }
  return current;
}

double iterated_lie_f(const AffineSystem& sys, const ScalarField& field, int order, const Vec& x,
                      const LieOptions& opts) {
  return iterated_lie_f_field(sys, field, order, opts).value(x);
}

}  // namespace folin
