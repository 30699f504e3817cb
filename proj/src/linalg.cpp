#include "lf/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace lf {

std::string_view to_string(SignatureClass cls) {
  switch (cls) {
    case SignatureClass::Lorentzian: return "Lorentzian";
    case SignatureClass::DegenerateLorentzian: return "DegenerateLorentzian";
    case SignatureClass::PositiveDefinite: return "PositiveDefinite";
    case SignatureClass::PositiveSemidefinite: return "PositiveSemidefinite";
    case SignatureClass::Other: return "Other";
  }
  return "Other";
}

SymTensor::SymTensor(const Matrix& raw, std::optional<Vector> ref) {
  if (raw.rows() != raw.cols() || raw.rows() == 0)
    throw argument_error("SymTensor: matrix must be square and non-empty");
  if (!raw.allFinite())
    throw argument_error("SymTensor: matrix entries must be finite");
  if (ref && ref->size() != raw.rows())
    throw argument_error("SymTensor: reference vector dimension mismatch");
  m = 0.5 * (raw + raw.transpose());
  ref_vector = std::move(ref);
}

double bilinear(const SymTensor& g, const Vector& u, const Vector& w) {
  return bilinear(g.m, u, w);
}

Vector sym_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw argument_error("sym_eigenvalues: matrix must be square and non-empty");
  if (!m.allFinite())
    throw argument_error("sym_eigenvalues: matrix entries must be finite");
  Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw internal_error("sym_eigenvalues: eigensolver did not converge");
  return solver.eigenvalues().reverse();
}

Vector sym_eigenvalues(const SymTensor& t) { return sym_eigenvalues(t.m); }

Signature classify_signature(const Matrix& m, double tol) {
  if (!(tol > 0.0))
    throw argument_error("classify_signature: tolerance must be positive");
  const Vector eig = sym_eigenvalues(m);
  const double radius = std::max(std::abs(eig(0)), std::abs(eig(eig.size() - 1)));
  const double zero_cut = tol * std::max(1.0, radius);

  Signature sig;
  sig.tol_used = zero_cut;
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    if (std::abs(eig(i)) <= zero_cut)
      ++sig.n_zero;
    else if (eig(i) > 0.0)
      ++sig.n_pos;
    else
      ++sig.n_neg;
  }

  // Order matters twice: an all-positive spectrum is definite even in
  // dimension one, and diag(1,0,...) counts as degenerate Lorentzian rather
  // than semidefinite.
  const int n = static_cast<int>(eig.size()) - 1;
  if (sig.n_neg == 0 && sig.n_zero == 0)
    sig.cls = SignatureClass::PositiveDefinite;
  else if (sig.n_pos == 1 && sig.n_zero == 0 && sig.n_neg == n)
    sig.cls = SignatureClass::Lorentzian;
  else if (sig.n_pos == 1 && sig.n_zero >= 1 && sig.n_neg == n - sig.n_zero)
    sig.cls = SignatureClass::DegenerateLorentzian;
  else if (sig.n_neg == 0)
    sig.cls = SignatureClass::PositiveSemidefinite;
  else
    sig.cls = SignatureClass::Other;
  return sig;
}

Signature classify_signature(const SymTensor& t, double tol) {
  return classify_signature(t.m, tol);
}

}  // namespace lf
