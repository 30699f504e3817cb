#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string_view>

#include "lf/errors.hpp"

namespace lf {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Signature classes for real symmetric matrices, ordered by how they are
// matched: the degenerate-Lorentzian test runs before the semidefinite one, so
// a matrix like diag(1,0) counts as degenerate Lorentzian.
enum class SignatureClass {
  Lorentzian,            // exactly one positive eigenvalue, rest negative
  DegenerateLorentzian,  // one positive, at least one zero, rest negative
  PositiveDefinite,
  PositiveSemidefinite,
  Other,
};

std::string_view to_string(SignatureClass cls);

struct Signature {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;
  double tol_used = 0.0;
  SignatureClass cls = SignatureClass::Other;
};

// Symmetric tensor with an optional base vector recording where a
// vector-dependent tensor was evaluated. Construction symmetrizes the input
// as (M + M^T)/2 and rejects non-square or non-finite data.
struct SymTensor {
  Matrix m;
  std::optional<Vector> ref_vector;

  SymTensor() = default;
  explicit SymTensor(const Matrix& raw, std::optional<Vector> ref = std::nullopt);

  Eigen::Index dim() const { return m.rows(); }
};

// g(u, w) for a symmetric matrix expression. Dimension mismatches throw.
template <class DM, class DU, class DW>
double bilinear(const Eigen::MatrixBase<DM>& g, const Eigen::MatrixBase<DU>& u,
                const Eigen::MatrixBase<DW>& w) {
  if (g.rows() != g.cols() || g.rows() != u.size() || u.size() != w.size())
    throw argument_error("bilinear: dimension mismatch");
  return u.dot(g * w);
}

double bilinear(const SymTensor& g, const Vector& u, const Vector& w);

// Eigenvalues of a symmetric matrix in descending order. Backed by an
// orthogonal-similarity solver; deterministic for identical input.
Vector sym_eigenvalues(const Matrix& m);
Vector sym_eigenvalues(const SymTensor& t);

// Counts eigenvalue signs with |lambda| <= tol * max(1, spectral radius)
// treated as zero, then assigns the class. tol must be positive.
Signature classify_signature(const Matrix& m, double tol = 1e-9);
Signature classify_signature(const SymTensor& t, double tol = 1e-9);

}  // namespace lf
