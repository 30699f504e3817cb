#include "doctest.h"

#include <cmath>
#include <string>

#include "lf/norms.hpp"

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

void check_matrix(const Matrix& got, const Matrix& want, double tol = 1e-12) {
  REQUIRE(got.rows() == want.rows());
  REQUIRE(got.cols() == want.cols());
  CHECK((got - want).cwiseAbs().maxCoeff() <= tol);
}

}  // namespace

TEST_CASE("family names round trip") {
  for (Family f : {Family::MinkowskiBilinear, Family::DegenerateMinkowski,
                   Family::PPseudoNorm, Family::EuclideanP, Family::BerwaldMoor,
                   Family::WeightedGeometric, Family::Bimetric, Family::Kropina,
                   Family::Stationary}) {
    const auto name = family_name(f);
    CHECK(!name.empty());
    REQUIRE(family_from_name(name).has_value());
    CHECK(*family_from_name(name) == f);
  }
  CHECK(!family_from_name("no_such_family").has_value());
}

TEST_CASE("factory validation rejects bad parameters") {
  CHECK_THROWS_WITH_AS(NormSpec::minkowski_eta(1),
                       "minkowski_bilinear: dimension must be >= 2",
                       argument_error);
  CHECK_THROWS_WITH_AS(NormSpec::minkowski(Matrix::Identity(2, 2)),
                       "minkowski_bilinear: metric must have Lorentzian signature",
                       argument_error);
  CHECK_THROWS_WITH_AS(NormSpec::degenerate_minkowski(3, 1),
                       "degenerate_minkowski: dimension must be >= 4",
                       argument_error);
  CHECK_THROWS_WITH_AS(NormSpec::degenerate_minkowski(5, 3),
                       "degenerate_minkowski: k must satisfy 1 <= k <= dim - 3",
                       argument_error);
  CHECK_THROWS_WITH_AS(NormSpec::p_pseudo_norm(1, 2.0),
                       "p_pseudo_norm: dimension must be >= 2", argument_error);
  CHECK_THROWS_WITH_AS(NormSpec::p_pseudo_norm(2, 1.0),
                       "exponent p must satisfy p > 1", argument_error);
  CHECK_THROWS_WITH_AS(NormSpec::euclidean_p(2, 65.0),
                       "exponent p must satisfy p <= 64", argument_error);
  CHECK_THROWS_WITH_AS(NormSpec::berwald_moor(1),
                       "berwald_moor: dimension must be >= 2", argument_error);
  CHECK_THROWS_WITH_AS(NormSpec::weighted_geometric(vec2(0.5, 0.6)),
                       "weighted_geometric: weights must sum to 1",
                       argument_error);
  CHECK_THROWS_WITH_AS(NormSpec::weighted_geometric(vec2(-0.1, 1.1)),
                       "weighted_geometric: weights must be finite and >= 0",
                       argument_error);
  CHECK_THROWS_WITH_AS(NormSpec::bimetric(Matrix::Identity(2, 2)),
                       "bimetric: h must have Lorentzian signature",
                       argument_error);
  CHECK_THROWS_WITH_AS(NormSpec::kropina(1),
                       "kropina: dimension must be >= 2", argument_error);
  CHECK_THROWS_WITH_AS(
      NormSpec::stationary(NormSpec::kropina(2)),
      "stationary: base norm must have a positive definite fundamental tensor",
      argument_error);
}

TEST_CASE("weighted_geometric accepts tiny weight-sum error and flags zeros") {
  const NormSpec ok = NormSpec::weighted_geometric(vec2(0.5, 0.5 + 1e-13));
  CHECK(ok.weighted_geometric_params().strictly_positive);

  const NormSpec degen = NormSpec::weighted_geometric(vec3(0.6, 0.4, 0.0));
  CHECK(!degen.weighted_geometric_params().strictly_positive);
  CHECK(expected_signature(degen) == SignatureClass::DegenerateLorentzian);
}

TEST_CASE("argument checks on evaluation entry points") {
  const NormSpec spec = NormSpec::minkowski_eta(2);
  CHECK_THROWS_WITH_AS(evaluate(spec, vec3(1, 0, 0)),
                       "evaluate: vector has dimension 3, expected 2",
                       argument_error);
  Vector bad = vec2(1, 0);
  bad(1) = std::nan("");
  CHECK_THROWS_WITH_AS(evaluate(spec, bad),
                       "evaluate: vector entries must be finite",
                       argument_error);
}

TEST_CASE("bilinear Minkowski norm: value, gradient, tensor") {
  const NormSpec spec = NormSpec::minkowski_eta(2);
  const Vector v = vec2(2, 1);
  CHECK(evaluate(spec, v) == doctest::Approx(std::sqrt(3.0)));

  const Vector g = gradient(spec, v);
  CHECK(g(0) == doctest::Approx(2.0 / std::sqrt(3.0)));
  CHECK(g(1) == doctest::Approx(-1.0 / std::sqrt(3.0)));

  check_matrix(fundamental_tensor(spec, v).m, diag2(1.0, -1.0));
  CHECK(expected_signature(spec) == SignatureClass::Lorentzian);
  CHECK(reverse_mode(spec));

  CHECK_THROWS_WITH_AS(evaluate(spec, vec2(1, 2)), "g(v, v) must be > 0",
                       domain_error);
  CHECK_THROWS_WITH_AS(evaluate(spec, vec2(-1, 0)),
                       "g(v, future-axis) must be > 0", domain_error);
}

TEST_CASE("degenerate Minkowski norm ignores trailing coordinates") {
  const NormSpec spec = NormSpec::degenerate_minkowski(5, 2);
  Vector v(5);
  v << 2, 1, 1, 5, -7;
  CHECK(evaluate(spec, v) == doctest::Approx(std::sqrt(2.0)));

  const Vector g = gradient(spec, v);
  CHECK(g(0) == doctest::Approx(2.0 / std::sqrt(2.0)));
  CHECK(g(1) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(g(3) == 0.0);
  CHECK(g(4) == 0.0);

  Matrix want = Matrix::Zero(5, 5);
  want(0, 0) = 1.0;
  want(1, 1) = -1.0;
  want(2, 2) = -1.0;
  check_matrix(fundamental_tensor(spec, v).m, want);
  CHECK(expected_signature(spec) == SignatureClass::DegenerateLorentzian);
  CHECK(reverse_mode(spec));

  Vector outside(5);
  outside << 1, 2, 0, 0, 0;
  CHECK_THROWS_WITH_AS(evaluate(spec, outside),
                       "(v0)^2 - (v1)^2 - ... - (vk)^2 must be > 0",
                       domain_error);
}

TEST_CASE("p-pseudo norm: frozen values at p=3") {
  const NormSpec spec = NormSpec::p_pseudo_norm(2, 3.0);
  const Vector v = vec2(2, 1);
  CHECK(evaluate(spec, v) == doctest::Approx(1.9129311827723892).epsilon(1e-13));

  const Vector g = gradient(spec, v);
  CHECK(g(0) == doctest::Approx(1.09310353301).epsilon(1e-10));
  CHECK(g(1) == doctest::Approx(-0.273275883253).epsilon(1e-10));

  CHECK(expected_signature(spec) == SignatureClass::Lorentzian);
  CHECK_THROWS_WITH_AS(evaluate(spec, vec2(1, 1)),
                       "(v0)^p - sum_a (va)^p must be > 0", domain_error);
  CHECK_THROWS_WITH_AS(evaluate(spec, vec2(2, 0)),
                       "component v1 must be > 0", domain_error);
}

TEST_CASE("euclidean p-norm is positive definite") {
  const NormSpec spec = NormSpec::euclidean_p(3, 2.0);
  const Vector v = vec3(1, 2, 2);
  CHECK(evaluate(spec, v) == doctest::Approx(3.0));

  const Vector g = gradient(spec, v);
  CHECK(g(0) == doctest::Approx(1.0 / 3.0));
  CHECK(g(1) == doctest::Approx(2.0 / 3.0));

  check_matrix(fundamental_tensor(spec, v).m, Matrix::Identity(3, 3), 1e-10);
  CHECK(expected_signature(spec) == SignatureClass::PositiveDefinite);
  CHECK(!reverse_mode(spec));
}

TEST_CASE("Berwald-Moor norm: geometric mean data") {
  const NormSpec spec = NormSpec::berwald_moor(3);
  const Vector v = vec3(1, 2, 4);
  CHECK(evaluate(spec, v) == doctest::Approx(2.0));

  const Vector g = gradient(spec, v);
  CHECK(g(0) == doctest::Approx(2.0 / 3.0));
  CHECK(g(1) == doctest::Approx(1.0 / 3.0));
  CHECK(g(2) == doctest::Approx(1.0 / 6.0));

  const Matrix t = fundamental_tensor(spec, vec3(1, 1, 1)).m;
  CHECK(t(0, 0) == doctest::Approx(-1.0 / 9.0));
  CHECK(t(0, 1) == doctest::Approx(2.0 / 9.0));
  CHECK(expected_signature(spec) == SignatureClass::Lorentzian);

  CHECK_THROWS_WITH_AS(evaluate(spec, vec3(1, 0, 1)),
                       "component v1 must be > 0", domain_error);
}

TEST_CASE("weighted geometric mean norm at equal weights") {
  const NormSpec spec = NormSpec::weighted_geometric(vec2(0.5, 0.5));
  CHECK(evaluate(spec, vec2(1, 1)) == doctest::Approx(1.0));
  Matrix want(2, 2);
  want << 0.0, 0.5, 0.5, 0.0;
  check_matrix(fundamental_tensor(spec, vec2(1, 1)).m, want);
}

TEST_CASE("bimetric norm with h = diag(2, -1)") {
  const NormSpec spec = NormSpec::bimetric(diag2(2.0, -1.0));
  const Vector v = vec2(2, 0);
  CHECK(evaluate(spec, v) == doctest::Approx(2.3784142300054421).epsilon(1e-13));

  const Matrix t = fundamental_tensor(spec, v).m;
  CHECK(t(0, 0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(t(1, 1) == doctest::Approx(-1.0606601717798212));
  CHECK(t(0, 1) == doctest::Approx(0.0));
  CHECK(expected_signature(spec) == SignatureClass::Lorentzian);

  // eta cone is respected even when h alone would admit the vector
  CHECK_THROWS_WITH_AS(evaluate(spec, vec2(1, 2)), "eta(v, v) must be > 0",
                       domain_error);
  const NormSpec tight = NormSpec::bimetric(diag2(0.5, -1.0));
  CHECK_THROWS_WITH_AS(evaluate(tight, vec2(1, 0.8)), "h(v, v) must be > 0",
                       domain_error);
}

TEST_CASE("Kropina norm: eta over time component") {
  const NormSpec spec = NormSpec::kropina(2);
  CHECK(evaluate(spec, vec2(2, 1)) == doctest::Approx(1.5));

  const Vector g = gradient(spec, vec2(2, 1));
  CHECK(g(0) == doctest::Approx(1.25));
  CHECK(g(1) == doctest::Approx(-1.0));

  check_matrix(fundamental_tensor(spec, vec2(1, 0)).m, diag2(1.0, -2.0), 1e-12);
  CHECK(expected_signature(spec) == SignatureClass::Lorentzian);

  CHECK_THROWS_WITH_AS(evaluate(spec, vec2(1, 1)), "eta(v, v) must be > 0",
                       domain_error);
  CHECK_THROWS_WITH_AS(evaluate(spec, vec2(-1, 0)),
                       "component v0 must be > 0", domain_error);
}

TEST_CASE("stationary lift of a Euclidean base norm") {
  const NormSpec spec = NormSpec::stationary(NormSpec::euclidean_p(1, 2.0));
  CHECK(spec.dim() == 2);
  CHECK(evaluate(spec, vec2(2, 1)) == doctest::Approx(std::sqrt(3.0)));
  check_matrix(fundamental_tensor(spec, vec2(2, 1)).m, diag2(1.0, -1.0), 1e-10);
  CHECK(expected_signature(spec) == SignatureClass::Lorentzian);

  CHECK_THROWS_WITH_AS(evaluate(spec, vec2(1, 2)),
                       "v0 must exceed the base norm of the spatial part",
                       domain_error);
  CHECK_THROWS_WITH_AS(evaluate(spec, vec2(1, 0)),
                       "spatial part: component v0 must be > 0", domain_error);
}

TEST_CASE("positive homogeneity and Euler identities hold for every family") {
  struct Case {
    NormSpec spec;
    Vector v;
  };
  Vector dm(5);
  dm << 3, 1, 0.5, 2, -1;
  Vector w3 = vec3(0.5, 0.3, 0.2);
  const Case cases[] = {
      {NormSpec::minkowski_eta(3), vec3(3, 1, -1)},
      {NormSpec::degenerate_minkowski(5, 2), dm},
      {NormSpec::p_pseudo_norm(3, 3.0), vec3(3, 1, 2)},
      {NormSpec::euclidean_p(3, 3.0), vec3(1, 2, 3)},
      {NormSpec::berwald_moor(3), vec3(1, 2, 4)},
      {NormSpec::weighted_geometric(w3), vec3(2, 1, 3)},
      {NormSpec::bimetric(diag2(2.0, -1.0)), vec2(2, 1)},
      {NormSpec::kropina(2), vec2(3, 2)},
      {NormSpec::stationary(NormSpec::euclidean_p(2, 2.0)), vec3(4, 1, 2)},
  };
  for (const auto& c : cases) {
    CAPTURE(family_name(c.spec.family()));
    const double f = evaluate(c.spec, c.v);
    const Vector g = gradient(c.spec, c.v);
    const SymTensor t = fundamental_tensor(c.spec, c.v);

    // F(s v) = s F(v); gradient and tensor are 0-homogeneous
    const double s = 3.7;
    CHECK(evaluate(c.spec, s * c.v) == doctest::Approx(s * f).epsilon(1e-12));
    CHECK((gradient(c.spec, s * c.v) - g).cwiseAbs().maxCoeff() <=
          1e-10 * (1.0 + g.cwiseAbs().maxCoeff()));
    CHECK((fundamental_tensor(c.spec, s * c.v).m - t.m).cwiseAbs().maxCoeff() <=
          1e-9 * (1.0 + t.m.cwiseAbs().maxCoeff()));

    // Euler: dF(v)[v] = F(v) and g_v(v, v) = F(v)^2
    CHECK(g.dot(c.v) == doctest::Approx(f).epsilon(1e-12));
    CHECK(bilinear(t, c.v, c.v) == doctest::Approx(f * f).epsilon(1e-12));

    REQUIRE(t.ref_vector.has_value());
    CHECK((*t.ref_vector - c.v).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("domain_contains margin tightens the cone") {
  const NormSpec spec = NormSpec::kropina(2);
  const Vector v = vec2(1.05, 1.0);
  CHECK(domain_contains(spec, v));
  CHECK(domain_contains(spec, v, 0.05));
  CHECK(!domain_contains(spec, v, 0.2));
  CHECK_THROWS_WITH_AS(domain_contains(spec, v, 0.5),
                       "domain_contains: margin must lie in [0, 0.5)",
                       argument_error);
  CHECK(!domain_contains(spec, vec2(1, 2)));
}

TEST_CASE("m-th root presentation: exponent, scale and derivatives") {
  const auto d = mth_root_form(NormSpec::p_pseudo_norm(2, 3.0), vec2(2, 1));
  REQUIRE(d.has_value());
  CHECK(d->m == doctest::Approx(3.0));
  CHECK(d->scale == doctest::Approx(2.0));
  CHECK(d->u(0) == doctest::Approx(1.0));
  CHECK(d->u(1) == doctest::Approx(0.5));
  CHECK(d->h == doctest::Approx(0.875));
  CHECK(d->grad(0) == doctest::Approx(3.0));
  CHECK(d->grad(1) == doctest::Approx(-0.75));
  check_matrix(d->hess, diag2(6.0, -3.0));

  const auto bm = mth_root_form(NormSpec::berwald_moor(3), vec3(2, 2, 2));
  REQUIRE(bm.has_value());
  CHECK(bm->m == doctest::Approx(3.0));
  CHECK(bm->scale == doctest::Approx(2.0));
  CHECK(bm->h == doctest::Approx(1.0));
  CHECK(bm->hess(0, 1) == doctest::Approx(1.0));
  CHECK(bm->hess(0, 0) == doctest::Approx(0.0));

  const auto bi =
      mth_root_form(NormSpec::bimetric(diag2(2.0, -1.0)), vec2(2, 0));
  REQUIRE(bi.has_value());
  CHECK(bi->m == doctest::Approx(4.0));
  CHECK(bi->h == doctest::Approx(2.0));
  check_matrix(bi->hess, diag2(24.0, -6.0));

  CHECK(!mth_root_form(NormSpec::minkowski_eta(2), vec2(2, 1)).has_value());
  CHECK(!mth_root_form(NormSpec::euclidean_p(2, 2.0), vec2(1, 1)).has_value());
}

TEST_CASE("catalog lists every family with its cone and signature") {
  const auto entries = catalog();
  REQUIRE(entries.size() == 9);
  for (const auto& e : entries) {
    CHECK(family_from_name(e.name).has_value());
    CHECK(!e.domain.empty());
    CHECK(!e.signature.empty());
  }
  CHECK(entries[7].name == "kropina");
  CHECK(entries[7].signature == "Lorentzian");
}
