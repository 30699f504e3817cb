#include "doctest.h"

#include <cmath>

#include "lf/calculus.hpp"

using namespace lf;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

Vector vec3(double a, double b, double c) {
  Vector v(3);
  v << a, b, c;
  return v;
}

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

struct Case {
  NormSpec spec;
  Vector v;
};

std::vector<Case> interior_points() {
  Vector dm(5);
  dm << 3, 1, 0.5, 2, -1;
  std::vector<Case> cases;
  cases.push_back({NormSpec::minkowski_eta(3), vec3(3, 1, -1)});
  cases.push_back({NormSpec::degenerate_minkowski(5, 2), dm});
  cases.push_back({NormSpec::p_pseudo_norm(3, 3.0), vec3(3, 1, 1.5)});
  cases.push_back({NormSpec::euclidean_p(3, 3.0), vec3(1, 2, 3)});
  cases.push_back({NormSpec::berwald_moor(3), vec3(1, 2, 4)});
  cases.push_back({NormSpec::weighted_geometric(vec3(0.5, 0.3, 0.2)), vec3(2, 1, 3)});
  cases.push_back({NormSpec::bimetric(diag2(2.0, -1.0)), vec2(2, 0.5)});
  cases.push_back({NormSpec::kropina(2), vec2(3, 1)});
  cases.push_back({NormSpec::stationary(NormSpec::euclidean_p(2, 2.0)), vec3(4, 1, 2)});
  return cases;
}

}  // namespace

TEST_CASE("finite-difference gradient matches the closed form") {
  for (const auto& c : interior_points()) {
    CAPTURE(family_name(c.spec.family()));
    const Vector ana = gradient(c.spec, c.v);
    const Vector fd = fd_gradient(c.spec, c.v);
    CHECK((ana - fd).cwiseAbs().maxCoeff() <=
          1e-8 * (1.0 + ana.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("finite-difference fundamental tensor matches the closed form") {
  for (const auto& c : interior_points()) {
    CAPTURE(family_name(c.spec.family()));
    const Matrix ana = fundamental_tensor(c.spec, c.v).m;
    const Matrix fd = fd_fundamental_tensor(c.spec, c.v).m;
    CHECK((ana - fd).cwiseAbs().maxCoeff() <=
          1e-5 * (1.0 + ana.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("finite-difference step validation") {
  const NormSpec spec = NormSpec::minkowski_eta(2);
  CHECK_THROWS_WITH_AS(fd_gradient(spec, vec2(2, 1), {0.0}),
                       "finite differences: step must lie in (0, 0.1)",
                       argument_error);
  CHECK_THROWS_WITH_AS(fd_fundamental_tensor(spec, vec2(2, 1), {0.5}),
                       "finite differences: step must lie in (0, 0.1)",
                       argument_error);
}

TEST_CASE("stencil that exits the cone names the perturbed coordinate") {
  const NormSpec spec = NormSpec::berwald_moor(2);
  // v1 sits closer to the wall than the stencil step
  CHECK_THROWS_WITH_AS(fd_gradient(spec, vec2(1.0, 1e-7), {1e-5}),
                       "finite difference stencil leaves the domain at coordinate 1",
                       domain_error);
}

TEST_CASE("norm Hessian: frozen values and radical direction") {
  CHECK((norm_hessian(NormSpec::minkowski_eta(2), vec2(1, 0)).m -
         diag2(0.0, -1.0))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
  CHECK((norm_hessian(NormSpec::kropina(2), vec2(1, 0)).m -
         diag2(0.0, -2.0))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);

  for (const auto& c : interior_points()) {
    CAPTURE(family_name(c.spec.family()));
    const SymTensor h = norm_hessian(c.spec, c.v);

    // v spans (part of) the radical: H v = 0
    const double scale = h.m.cwiseAbs().maxCoeff() * c.v.cwiseAbs().maxCoeff();
    CHECK((h.m * c.v).cwiseAbs().maxCoeff() <= 1e-10 * (1.0 + scale));

    // definiteness mirrors the fundamental tensor class
    const Vector eig = sym_eigenvalues(h);
    const double tol = 1e-10 * (1.0 + h.m.cwiseAbs().maxCoeff());
    if (reverse_mode(c.spec)) {
      CHECK(eig(0) <= tol);  // largest eigenvalue: negative semidefinite
    } else {
      CHECK(eig(eig.size() - 1) >= -tol);
    }
  }
}

TEST_CASE("differential is the gradient pairing") {
  CHECK(differential(NormSpec::berwald_moor(2), vec2(1, 1), vec2(1, 4)) ==
        doctest::Approx(2.5));
  CHECK(differential(NormSpec::minkowski_eta(2), vec2(2, 1), vec2(3, 0)) ==
        doctest::Approx(2.0 * std::sqrt(3.0)));

  // w needs no domain membership, only matching finite entries
  CHECK(differential(NormSpec::berwald_moor(2), vec2(1, 1), vec2(-5, 0)) ==
        doctest::Approx(-2.5));
  CHECK_THROWS_WITH_AS(
      differential(NormSpec::minkowski_eta(2), vec2(2, 1), vec3(1, 1, 1)),
      "differential: w must be a finite vector matching v", argument_error);
}

TEST_CASE("Simpson rule on the unit interval") {
  CHECK(simpson_unit_interval([](double t) { return t * t; }, 2) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(simpson_unit_interval([](double t) { return std::exp(t); }, 64) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-8));
  CHECK_THROWS_WITH_AS(simpson_unit_interval([](double) { return 1.0; }, 3),
                       "simpson_unit_interval: n_panels must be even and >= 2",
                       argument_error);
  CHECK_THROWS_AS(simpson_unit_interval(
                      [](double t) { return t == 0.0 ? std::nan("") : 1.0; }, 2),
                  domain_error);
}
