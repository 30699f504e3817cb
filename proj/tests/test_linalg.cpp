#include "doctest.h"

#include <cmath>

#include "lf/linalg.hpp"

using namespace lf;

namespace {

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Matrix diag3(double a, double b, double c) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace

TEST_CASE("SymTensor symmetrizes and validates") {
  Matrix raw(2, 2);
  raw << 1.0, 2.0, 0.0, -1.0;
  const SymTensor t(raw);
  CHECK(t.m(0, 1) == doctest::Approx(1.0));
  CHECK(t.m(1, 0) == doctest::Approx(1.0));
  CHECK(t.dim() == 2);

  CHECK_THROWS_AS(SymTensor(Matrix::Zero(2, 3)), argument_error);
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(SymTensor{bad}, argument_error);
}

TEST_CASE("bilinear form evaluation") {
  const Matrix eta = diag2(1.0, -1.0);
  Vector v(2), w(2);
  v << 2.0, 1.0;
  w << 3.0, 1.0;
  CHECK(bilinear(eta, v, w) == doctest::Approx(5.0));
  CHECK(bilinear(eta, v, v) == doctest::Approx(3.0));

  Vector u(3);
  u << 1.0, 1.0, 1.0;
  CHECK_THROWS_AS(bilinear(eta, v, u), argument_error);
}

TEST_CASE("sym_eigenvalues sorts descending") {
  Matrix m(2, 2);
  m << 2.0, 1.0, 1.0, 2.0;
  const Vector eig = sym_eigenvalues(m);
  CHECK(eig(0) == doctest::Approx(3.0));
  CHECK(eig(1) == doctest::Approx(1.0));
}

TEST_CASE("classify_signature: definite and Lorentzian classes") {
  CHECK(classify_signature(Matrix::Identity(3, 3)).cls ==
        SignatureClass::PositiveDefinite);
  CHECK(classify_signature(diag3(1.0, -1.0, -1.0)).cls ==
        SignatureClass::Lorentzian);
  CHECK(classify_signature(diag3(1.0, 0.0, -1.0)).cls ==
        SignatureClass::DegenerateLorentzian);
  CHECK(classify_signature(diag3(2.0, 2.0, 0.0)).cls ==
        SignatureClass::PositiveSemidefinite);
  CHECK(classify_signature(diag3(1.0, 1.0, -1.0)).cls == SignatureClass::Other);
  CHECK(classify_signature(-Matrix::Identity(2, 2)).cls ==
        SignatureClass::Other);

  // one positive, one zero, no negatives still counts as degenerate Lorentzian
  CHECK(classify_signature(diag2(1.0, 0.0)).cls ==
        SignatureClass::DegenerateLorentzian);
}

TEST_CASE("classify_signature counts and tolerance scaling") {
  const Signature sig = classify_signature(diag3(4.0, -1.0, -2.0));
  CHECK(sig.n_pos == 1);
  CHECK(sig.n_neg == 2);
  CHECK(sig.n_zero == 0);
  CHECK(sig.cls == SignatureClass::Lorentzian);

  // |lambda| <= tol * max(1, spectral radius) counts as zero
  CHECK(classify_signature(diag2(1.0, -1e-12)).cls ==
        SignatureClass::DegenerateLorentzian);
  CHECK(classify_signature(diag2(1.0, -1e-12), 1e-15).cls ==
        SignatureClass::Lorentzian);
  // the zero threshold is relative to the spectral radius
  CHECK(classify_signature(diag2(1e12, -1.0)).cls ==
        SignatureClass::DegenerateLorentzian);

  CHECK_THROWS_AS(classify_signature(diag2(1.0, 1.0), 0.0), argument_error);
  CHECK_THROWS_AS(classify_signature(diag2(1.0, 1.0), -1.0), argument_error);
}

TEST_CASE("signature class names") {
  CHECK(to_string(SignatureClass::Lorentzian) == "Lorentzian");
  CHECK(to_string(SignatureClass::DegenerateLorentzian) ==
        "DegenerateLorentzian");
  CHECK(to_string(SignatureClass::PositiveDefinite) == "PositiveDefinite");
  CHECK(to_string(SignatureClass::PositiveSemidefinite) ==
        "PositiveSemidefinite");
  CHECK(to_string(SignatureClass::Other) == "Other");
}
