#pragma once

#include <cmath>
#include <sstream>
#include <utility>

#include "lf/norms.hpp"

namespace lf {

// Central differences with per-coordinate step cfg.step * max(1, |v_i|).
// Callers must keep v far enough inside the cone that the stencil stays in;
// a stencil point leaving the cone raises domain_error naming the coordinate.
struct FDConfig {
  double step = 1e-5;
};

Vector fd_gradient(const NormSpec& spec, const Vector& v, FDConfig cfg = {1e-5});

// Finite-difference Hessian of F^2/2, the oracle the closed-form fundamental
// tensor is tested against. Default step is coarser than the gradient's
// because second differences lose more digits to rounding.
SymTensor fd_fundamental_tensor(const NormSpec& spec, const Vector& v,
                                FDConfig cfg = {1e-4});

// (g_v - dF x dF) / F. Its radical contains v; its definiteness mirrors the
// fundamental tensor's class (one positive eigenvalue => negative
// semidefinite, positive semidefinite => positive semidefinite).
SymTensor norm_hessian(const NormSpec& spec, const Vector& v);

// dF_v(w) = gradient(v) . w; w may be any finite vector of matching dimension.
double differential(const NormSpec& spec, const Vector& v, const Vector& w);

// Composite Simpson rule on [0, 1]; n_panels must be even and >= 2.
template <class F>
double simpson_unit_interval(F&& f, int n_panels) {
  if (n_panels < 2 || n_panels % 2 != 0)
    throw argument_error("simpson_unit_interval: n_panels must be even and >= 2");
  const double h = 1.0 / n_panels;
  double sum = 0.0;
  for (int i = 0; i <= n_panels; ++i) {
    const double t = i * h;
    const double y = f(t);
    if (!std::isfinite(y)) {
      std::ostringstream os;
      os << "simpson_unit_interval: integrand not finite at t = " << t;
      throw domain_error(os.str());
    }
    const double w = (i == 0 || i == n_panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += w * y;
  }
  return sum * h / 3.0;
}

}  // namespace lf
