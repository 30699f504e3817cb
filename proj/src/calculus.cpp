#include "lf/calculus.hpp"

#include <algorithm>
#include <cmath>

namespace lf {
namespace {

void validate_step(const FDConfig& cfg) {
  if (!(cfg.step > 0.0) || !(cfg.step < 0.1))
    throw argument_error("finite differences: step must lie in (0, 0.1)");
}

[[noreturn]] void stencil_error(Eigen::Index i) {
  std::ostringstream os;
  os << "finite difference stencil leaves the domain at coordinate " << i;
  throw domain_error(os.str());
}

double step_for(const Vector& v, Eigen::Index i, double step) {
  return step * std::max(1.0, std::abs(v(i)));
}

// F^2/2 at the given stencil point; a domain exit is blamed on `blame`, the
// coordinate whose perturbation is being probed.
double half_f2_at(const NormSpec& spec, Vector x, Eigen::Index blame) {
  if (!domain_contains(spec, x)) stencil_error(blame);
  const double f = evaluate(spec, x);
  return 0.5 * f * f;
}

}  // namespace

Vector fd_gradient(const NormSpec& spec, const Vector& v, FDConfig cfg) {
  validate_step(cfg);
  require_in_domain(spec, v);
  Vector grad(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double h = step_for(v, i, cfg.step);
    Vector hi = v, lo = v;
    hi(i) += h;
    lo(i) -= h;
    if (!domain_contains(spec, hi) || !domain_contains(spec, lo)) stencil_error(i);
    grad(i) = (evaluate(spec, hi) - evaluate(spec, lo)) / (2.0 * h);
  }
  return grad;
}

SymTensor fd_fundamental_tensor(const NormSpec& spec, const Vector& v, FDConfig cfg) {
  validate_step(cfg);
  require_in_domain(spec, v);
  const Eigen::Index n = v.size();
  Matrix hess(n, n);
  const double f0 = evaluate(spec, v);
  const double c0 = 0.5 * f0 * f0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double hi = step_for(v, i, cfg.step);
    Vector up = v, dn = v;
    up(i) += hi;
    dn(i) -= hi;
    hess(i, i) = (half_f2_at(spec, up, i) - 2.0 * c0 + half_f2_at(spec, dn, i)) / (hi * hi);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double hj = step_for(v, j, cfg.step);
      Vector pp = up, pm = up, mp = dn, mm = dn;
      pp(j) += hj;
      pm(j) -= hj;
      mp(j) += hj;
      mm(j) -= hj;
      const double mixed = (half_f2_at(spec, pp, j) - half_f2_at(spec, pm, j) -
                            half_f2_at(spec, mp, j) + half_f2_at(spec, mm, j)) /
                           (4.0 * hi * hj);
      hess(i, j) = mixed;
      hess(j, i) = mixed;
    }
  }
  return SymTensor(hess, v);
}

SymTensor norm_hessian(const NormSpec& spec, const Vector& v) {
  const double f = evaluate(spec, v);
  const Vector grad = gradient(spec, v);
  const Matrix g = fundamental_tensor(spec, v).m;
  return SymTensor((g - grad * grad.transpose()) / f, v);
}

double differential(const NormSpec& spec, const Vector& v, const Vector& w) {
  if (w.size() != v.size() || !w.allFinite())
    throw argument_error("differential: w must be a finite vector matching v");
  const double via_gradient = gradient(spec, v).dot(w);
  const double via_tensor =
      bilinear(fundamental_tensor(spec, v).m, v, w) / evaluate(spec, v);
  if (std::abs(via_gradient - via_tensor) >
      1e-9 * (1.0 + std::abs(via_gradient) + std::abs(via_tensor)))
    throw internal_error(
        "differential: gradient and fundamental-tensor evaluations disagree");
  return via_gradient;
}

}  // namespace lf
