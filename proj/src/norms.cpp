#include "lf/norms.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <sstream>

namespace lf {
namespace {

constexpr double kWeightSumTol = 1e-12;
constexpr double kMaxExponent = 64.0;

// Kahan-Neumaier compensated sum; the p-form (v0)^p - sum (va)^p loses digits
// to cancellation near the cone boundary, and this keeps the loss to the
// unavoidable part.
struct CompensatedSum {
  double s = 0.0;
  double c = 0.0;
  void add(double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

std::string component_message(Eigen::Index i) {
  std::ostringstream os;
  os << "component v" << i << " must be > 0";
  return os.str();
}

void check_vector(const NormSpec& spec, const Vector& v, const char* who) {
  if (v.size() != spec.dim()) {
    std::ostringstream os;
    os << who << ": vector has dimension " << v.size() << ", expected " << spec.dim();
    throw argument_error(os.str());
  }
  if (!v.allFinite()) throw argument_error(std::string(who) + ": vector entries must be finite");
}

// eta = diag(1, -1, ..., -1) applied to u.
Vector eta_apply(const Vector& u) {
  Vector r = -u;
  r(0) = u(0);
  return r;
}

double eta_quad(const Vector& u) { return u(0) * u(0) - u.tail(u.size() - 1).squaredNorm(); }

Matrix eta_matrix(Eigen::Index dim) {
  Vector d = Vector::Constant(dim, -1.0);
  d(0) = 1.0;
  return d.asDiagonal();
}

// One domain walker serves membership tests, the margin test and the error
// message; margin == 0 means the open-cone test with strict inequalities.
// Returns the first violated constraint, or nothing.
std::optional<std::string> domain_violation(const NormSpec& spec, const Vector& v,
                                            double margin);

bool positive_with_margin(double value, double scale, double margin) {
  return margin == 0.0 ? value > 0.0 : value >= margin * scale;
}

std::optional<std::string> orthant_violation(const Vector& v, double margin) {
  const double vmax = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!positive_with_margin(v(i), vmax, margin)) return component_message(i);
  return std::nullopt;
}

std::optional<std::string> domain_violation(const NormSpec& spec, const Vector& v,
                                            double margin) {
  switch (spec.family()) {
    case Family::MinkowskiBilinear: {
      const auto& par = spec.minkowski_params();
      const double tau = bilinear(par.g.m, v, par.future_axis);
      if (!positive_with_margin(tau, v.norm(), margin))
        return "g(v, future-axis) must be > 0";
      const double q = bilinear(par.g.m, v, v);
      if (!positive_with_margin(q, tau * tau, margin)) return "g(v, v) must be > 0";
      return std::nullopt;
    }
    case Family::DegenerateMinkowski: {
      const int k = spec.degenerate_minkowski_params().k;
      const double lead = v.head(k + 1).cwiseAbs().maxCoeff();
      if (!positive_with_margin(v(0), lead, margin)) return component_message(0);
      const double q = v(0) * v(0) - v.segment(1, k).squaredNorm();
      if (!positive_with_margin(q, v(0) * v(0), margin))
        return "(v0)^2 - (v1)^2 - ... - (vk)^2 must be > 0";
      return std::nullopt;
    }
    case Family::PPseudoNorm: {
      if (auto bad = orthant_violation(v, margin)) return bad;
      const double p = spec.p_pseudo_params().p;
      const Vector u = v / v.maxCoeff();
      CompensatedSum acc;
      acc.add(std::pow(u(0), p));
      for (Eigen::Index a = 1; a < u.size(); ++a) acc.add(-std::pow(u(a), p));
      if (!positive_with_margin(acc.value(), std::pow(u(0), p), margin))
        return "(v0)^p - sum_a (va)^p must be > 0";
      return std::nullopt;
    }
    case Family::EuclideanP:
    case Family::BerwaldMoor:
    case Family::WeightedGeometric:
      return orthant_violation(v, margin);
    case Family::Bimetric: {
      const auto& par = spec.bimetric_params();
      if (!positive_with_margin(v(0), v.cwiseAbs().maxCoeff(), margin))
        return component_message(0);
      if (!positive_with_margin(eta_quad(v), v(0) * v(0), margin))
        return "eta(v, v) must be > 0";
      const double hq = bilinear(par.h.m, v, v);
      if (!positive_with_margin(hq, par.h_radius * v.squaredNorm(), margin))
        return "h(v, v) must be > 0";
      return std::nullopt;
    }
    case Family::Kropina: {
      if (!positive_with_margin(v(0), v.cwiseAbs().maxCoeff(), margin))
        return component_message(0);
      if (!positive_with_margin(eta_quad(v), v(0) * v(0), margin))
        return "eta(v, v) must be > 0";
      return std::nullopt;
    }
    case Family::Stationary: {
      const auto& base = *spec.stationary_params().base;
      const Vector x = v.tail(spec.dim() - 1);
      if (auto bad = domain_violation(base, x, margin))
        return "spatial part: " + *bad;
      const double fb = evaluate(base, x);
      if (!positive_with_margin(v(0) - fb, v(0), margin))
        return "v0 must exceed the base norm of the spatial part";
      return std::nullopt;
    }
  }
  throw internal_error("domain_violation: unhandled family");
}

// F = H^(1/m) assembled from the m-homogeneous form H. Everything is
// evaluated at u = v/|v|_inf; the gradient and fundamental tensor of F are
// 0-homogeneous, so they coincide with the values at v while avoiding
// overflow for any admissible exponent.
struct MthRootEval {
  double f_at_u = 0.0;  // F(u); F(v) = scale * F(u)
  Vector grad;          // F_i(u) = F_i(v)
  Matrix tensor;        // g_ij(u) = g_ij(v)
};

MthRootEval assemble_mth_root(const MthRootData& d) {
  MthRootEval out;
  const double m = d.m;
  out.f_at_u = std::pow(d.h, 1.0 / m);
  out.grad = (std::pow(d.h, 1.0 / m - 1.0) / m) * d.grad;
  const double c1 = std::pow(d.h, 2.0 / m - 1.0) / m;
  const double c2 = (2.0 - m) / (m * m) * std::pow(d.h, 2.0 / m - 2.0);
  out.tensor = c1 * d.hess + c2 * (d.grad * d.grad.transpose());
  return out;
}

MthRootData p_pseudo_data(const NormSpec& spec, const Vector& v) {
  const double p = spec.p_pseudo_params().p;
  MthRootData d;
  d.m = p;
  d.scale = v.maxCoeff();
  d.u = v / d.scale;
  CompensatedSum acc;
  acc.add(std::pow(d.u(0), p));
  for (Eigen::Index a = 1; a < d.u.size(); ++a) acc.add(-std::pow(d.u(a), p));
  d.h = acc.value();
  d.grad.resize(d.u.size());
  Vector hd(d.u.size());
  for (Eigen::Index i = 0; i < d.u.size(); ++i) {
    const double sign = i == 0 ? 1.0 : -1.0;
    d.grad(i) = sign * p * std::pow(d.u(i), p - 1.0);
    hd(i) = sign * p * (p - 1.0) * std::pow(d.u(i), p - 2.0);
  }
  d.hess = hd.asDiagonal();
  return d;
}

MthRootData euclidean_p_data(const NormSpec& spec, const Vector& v) {
  const double p = spec.euclidean_p_params().p;
  MthRootData d;
  d.m = p;
  d.scale = v.maxCoeff();
  d.u = v / d.scale;
  CompensatedSum acc;
  for (Eigen::Index i = 0; i < d.u.size(); ++i) acc.add(std::pow(d.u(i), p));
  d.h = acc.value();
  d.grad.resize(d.u.size());
  Vector hd(d.u.size());
  for (Eigen::Index i = 0; i < d.u.size(); ++i) {
    d.grad(i) = p * std::pow(d.u(i), p - 1.0);
    hd(i) = p * (p - 1.0) * std::pow(d.u(i), p - 2.0);
  }
  d.hess = hd.asDiagonal();
  return d;
}

MthRootData berwald_moor_data(const NormSpec& spec, const Vector& v) {
  MthRootData d;
  d.m = static_cast<double>(spec.dim());
  d.scale = v.maxCoeff();
  d.u = v / d.scale;
  d.h = d.u.prod();
  d.grad = d.h * d.u.cwiseInverse();
  d.hess.setZero(d.u.size(), d.u.size());
  for (Eigen::Index i = 0; i < d.u.size(); ++i)
    for (Eigen::Index j = 0; j < d.u.size(); ++j)
      if (i != j) d.hess(i, j) = d.h / (d.u(i) * d.u(j));
  return d;
}

MthRootData bimetric_data(const NormSpec& spec, const Vector& v) {
  const auto& par = spec.bimetric_params();
  MthRootData d;
  d.m = 4.0;
  d.scale = v.cwiseAbs().maxCoeff();
  d.u = v / d.scale;
  const double a = eta_quad(d.u);
  const double b = bilinear(par.h.m, d.u, d.u);
  const Vector eu = eta_apply(d.u);
  const Vector hu = par.h.m * d.u;
  d.h = a * b;
  d.grad = 2.0 * b * eu + 2.0 * a * hu;
  d.hess = 2.0 * b * eta_matrix(d.u.size()) + 2.0 * a * par.h.m +
           4.0 * (eu * hu.transpose() + hu * eu.transpose());
  return d;
}

double evaluate_impl(const NormSpec& spec, const Vector& v) {
  switch (spec.family()) {
    case Family::MinkowskiBilinear:
      return std::sqrt(bilinear(spec.minkowski_params().g.m, v, v));
    case Family::DegenerateMinkowski: {
      const int k = spec.degenerate_minkowski_params().k;
      return std::sqrt(v(0) * v(0) - v.segment(1, k).squaredNorm());
    }
    case Family::PPseudoNorm: {
      const MthRootData d = p_pseudo_data(spec, v);
      return d.scale * std::pow(d.h, 1.0 / d.m);
    }
    case Family::EuclideanP: {
      const MthRootData d = euclidean_p_data(spec, v);
      return d.scale * std::pow(d.h, 1.0 / d.m);
    }
    case Family::BerwaldMoor:
      return std::exp(v.array().log().mean());
    case Family::WeightedGeometric: {
      const Vector& a = spec.weighted_geometric_params().weights;
      return std::exp((v.array().log() * a.array()).sum());
    }
    case Family::Bimetric: {
      const MthRootData d = bimetric_data(spec, v);
      return d.scale * std::pow(d.h, 0.25);
    }
    case Family::Kropina:
      return eta_quad(v) / v(0);
    case Family::Stationary: {
      const auto& base = *spec.stationary_params().base;
      const double s = v.cwiseAbs().maxCoeff();
      const Vector u = v / s;
      const double fb = evaluate(base, u.tail(u.size() - 1));
      return s * std::sqrt((u(0) - fb) * (u(0) + fb));
    }
  }
  throw internal_error("evaluate: unhandled family");
}

Vector gradient_impl(const NormSpec& spec, const Vector& v) {
  switch (spec.family()) {
    case Family::MinkowskiBilinear: {
      const Matrix& g = spec.minkowski_params().g.m;
      return (g * v) / std::sqrt(bilinear(g, v, v));
    }
    case Family::DegenerateMinkowski: {
      const int k = spec.degenerate_minkowski_params().k;
      Vector grad = Vector::Zero(v.size());
      grad(0) = v(0);
      grad.segment(1, k) = -v.segment(1, k);
      return grad / std::sqrt(v(0) * v(0) - v.segment(1, k).squaredNorm());
    }
    case Family::PPseudoNorm:
      return assemble_mth_root(p_pseudo_data(spec, v)).grad;
    case Family::EuclideanP:
      return assemble_mth_root(euclidean_p_data(spec, v)).grad;
    case Family::BerwaldMoor:
      return (evaluate_impl(spec, v) / static_cast<double>(v.size())) * v.cwiseInverse();
    case Family::WeightedGeometric: {
      const Vector& a = spec.weighted_geometric_params().weights;
      return evaluate_impl(spec, v) * a.cwiseQuotient(v);
    }
    case Family::Bimetric:
      return assemble_mth_root(bimetric_data(spec, v)).grad;
    case Family::Kropina: {
      const Vector u = v / v(0);
      Vector grad = 2.0 * eta_apply(u);
      grad(0) -= eta_quad(u);
      return grad;
    }
    case Family::Stationary: {
      const auto& base = *spec.stationary_params().base;
      const double s = v.cwiseAbs().maxCoeff();
      const Vector u = v / s;
      const Vector x = u.tail(u.size() - 1);
      const double fb = evaluate(base, x);
      const double f = std::sqrt((u(0) - fb) * (u(0) + fb));
      Vector grad(v.size());
      grad(0) = u(0) / f;
      grad.tail(v.size() - 1) = (-fb / f) * gradient(base, x);
      return grad;
    }
  }
  throw internal_error("gradient: unhandled family");
}

Matrix tensor_impl(const NormSpec& spec, const Vector& v) {
  switch (spec.family()) {
    case Family::MinkowskiBilinear:
      return spec.minkowski_params().g.m;
    case Family::DegenerateMinkowski: {
      const int k = spec.degenerate_minkowski_params().k;
      Vector d = Vector::Zero(v.size());
      d(0) = 1.0;
      d.segment(1, k).setConstant(-1.0);
      return d.asDiagonal();
    }
    case Family::PPseudoNorm:
      return assemble_mth_root(p_pseudo_data(spec, v)).tensor;
    case Family::EuclideanP:
      return assemble_mth_root(euclidean_p_data(spec, v)).tensor;
    case Family::BerwaldMoor: {
      const double f = evaluate_impl(spec, v);
      const double a = 1.0 / static_cast<double>(v.size());
      const Vector inv = v.cwiseInverse();
      Matrix g = (2.0 * a * a * f * f) * (inv * inv.transpose());
      g.diagonal() -= (a * f * f) * inv.cwiseAbs2();
      return g;
    }
    case Family::WeightedGeometric: {
      const Vector& a = spec.weighted_geometric_params().weights;
      const double f = evaluate_impl(spec, v);
      const Vector av = a.cwiseQuotient(v);
      Matrix g = (2.0 * f * f) * (av * av.transpose());
      g.diagonal() -= (f * f) * a.cwiseQuotient(v.cwiseAbs2());
      return g;
    }
    case Family::Bimetric:
      return assemble_mth_root(bimetric_data(spec, v)).tensor;
    case Family::Kropina: {
      const Vector u = v / v(0);
      const double q = eta_quad(u);
      const Vector eu = eta_apply(u);
      Vector e0 = Vector::Zero(v.size());
      e0(0) = 1.0;
      return 4.0 * (eu * eu.transpose()) + 2.0 * q * eta_matrix(v.size()) -
             4.0 * q * (eu * e0.transpose() + e0 * eu.transpose()) +
             3.0 * q * q * (e0 * e0.transpose());
    }
    case Family::Stationary: {
      const auto& base = *spec.stationary_params().base;
      const Vector x = v.tail(v.size() - 1);
      Matrix g = Matrix::Zero(v.size(), v.size());
      g(0, 0) = 1.0;
      g.bottomRightCorner(v.size() - 1, v.size() - 1) = -fundamental_tensor(base, x).m;
      return g;
    }
  }
  throw internal_error("fundamental_tensor: unhandled family");
}

void validate_exponent(double p) {
  if (!std::isfinite(p) || p <= 1.0)
    throw argument_error("exponent p must satisfy p > 1");
  if (p > kMaxExponent)
    throw argument_error("exponent p must satisfy p <= 64");
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::MinkowskiBilinear: return "minkowski_bilinear";
    case Family::DegenerateMinkowski: return "degenerate_minkowski";
    case Family::PPseudoNorm: return "p_pseudo_norm";
    case Family::EuclideanP: return "euclidean_p";
    case Family::BerwaldMoor: return "berwald_moor";
    case Family::WeightedGeometric: return "weighted_geometric";
    case Family::Bimetric: return "bimetric";
    case Family::Kropina: return "kropina";
    case Family::Stationary: return "stationary";
  }
  return "";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::MinkowskiBilinear, Family::DegenerateMinkowski,
                   Family::PPseudoNorm, Family::EuclideanP, Family::BerwaldMoor,
                   Family::WeightedGeometric, Family::Bimetric, Family::Kropina,
                   Family::Stationary})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

NormSpec NormSpec::minkowski(const Matrix& g) {
  SymTensor tensor(g);
  if (tensor.dim() < 2) throw argument_error("minkowski_bilinear: dimension must be >= 2");
  if (classify_signature(tensor).cls != SignatureClass::Lorentzian)
    throw argument_error("minkowski_bilinear: metric must have Lorentzian signature");

  Eigen::SelfAdjointEigenSolver<Matrix> solver(tensor.m);
  if (solver.info() != Eigen::Success)
    throw internal_error("minkowski_bilinear: eigensolver did not converge");
  const Eigen::Index last = tensor.dim() - 1;  // eigenvalues ascend; positive one is last
  Vector axis = solver.eigenvectors().col(last) / std::sqrt(solver.eigenvalues()(last));
  Eigen::Index imax = 0;
  axis.cwiseAbs().maxCoeff(&imax);
  if (axis(imax) < 0.0) axis = -axis;

  NormSpec spec(Family::MinkowskiBilinear, tensor.dim());
  spec.params_ = MinkowskiParams{std::move(tensor), std::move(axis)};
  return spec;
}

NormSpec NormSpec::minkowski_eta(Eigen::Index dim) {
  if (dim < 2) throw argument_error("minkowski_bilinear: dimension must be >= 2");
  return minkowski(eta_matrix(dim));
}

NormSpec NormSpec::degenerate_minkowski(Eigen::Index dim, int k) {
  if (dim < 4) throw argument_error("degenerate_minkowski: dimension must be >= 4");
  if (k < 1 || k > static_cast<int>(dim) - 3)
    throw argument_error("degenerate_minkowski: k must satisfy 1 <= k <= dim - 3");
  NormSpec spec(Family::DegenerateMinkowski, dim);
  spec.params_ = DegenerateMinkowskiParams{k};
  return spec;
}

NormSpec NormSpec::p_pseudo_norm(Eigen::Index dim, double p) {
  if (dim < 2) throw argument_error("p_pseudo_norm: dimension must be >= 2");
  validate_exponent(p);
  NormSpec spec(Family::PPseudoNorm, dim);
  spec.params_ = PPseudoParams{p};
  return spec;
}

NormSpec NormSpec::euclidean_p(Eigen::Index dim, double p) {
  if (dim < 1) throw argument_error("euclidean_p: dimension must be >= 1");
  validate_exponent(p);
  NormSpec spec(Family::EuclideanP, dim);
  spec.params_ = EuclideanPParams{p};
  return spec;
}

NormSpec NormSpec::berwald_moor(Eigen::Index dim) {
  if (dim < 2) throw argument_error("berwald_moor: dimension must be >= 2");
  NormSpec spec(Family::BerwaldMoor, dim);
  spec.params_ = BerwaldMoorParams{};
  return spec;
}

NormSpec NormSpec::weighted_geometric(const Vector& weights) {
  if (weights.size() < 2)
    throw argument_error("weighted_geometric: dimension must be >= 2");
  if (!weights.allFinite() || (weights.array() < 0.0).any())
    throw argument_error("weighted_geometric: weights must be finite and >= 0");
  if (std::abs(weights.sum() - 1.0) > kWeightSumTol)
    throw argument_error("weighted_geometric: weights must sum to 1");
  NormSpec spec(Family::WeightedGeometric, weights.size());
  spec.params_ =
      WeightedGeometricParams{weights, (weights.array() > 0.0).all()};
  return spec;
}

NormSpec NormSpec::bimetric(const Matrix& h) {
  SymTensor tensor(h);
  if (tensor.dim() < 2) throw argument_error("bimetric: dimension must be >= 2");
  if (classify_signature(tensor).cls != SignatureClass::Lorentzian)
    throw argument_error("bimetric: h must have Lorentzian signature");
  const Vector eig = sym_eigenvalues(tensor);
  const double radius = std::max(std::abs(eig(0)), std::abs(eig(eig.size() - 1)));
  NormSpec spec(Family::Bimetric, tensor.dim());
  spec.params_ = BimetricParams{std::move(tensor), radius};
  return spec;
}

NormSpec NormSpec::kropina(Eigen::Index dim) {
  if (dim < 2) throw argument_error("kropina: dimension must be >= 2");
  NormSpec spec(Family::Kropina, dim);
  spec.params_ = KropinaParams{};
  return spec;
}

NormSpec NormSpec::stationary(NormSpec base) {
  if (expected_signature(base) != SignatureClass::PositiveDefinite)
    throw argument_error(
        "stationary: base norm must have a positive definite fundamental tensor");
  NormSpec spec(Family::Stationary, base.dim() + 1);
  spec.params_ = StationaryParams{std::make_shared<const NormSpec>(std::move(base))};
  return spec;
}

const MinkowskiParams& NormSpec::minkowski_params() const {
  return std::get<MinkowskiParams>(params_);
}
const DegenerateMinkowskiParams& NormSpec::degenerate_minkowski_params() const {
  return std::get<DegenerateMinkowskiParams>(params_);
}
const PPseudoParams& NormSpec::p_pseudo_params() const {
  return std::get<PPseudoParams>(params_);
}
const EuclideanPParams& NormSpec::euclidean_p_params() const {
  return std::get<EuclideanPParams>(params_);
}
const WeightedGeometricParams& NormSpec::weighted_geometric_params() const {
  return std::get<WeightedGeometricParams>(params_);
}
const BimetricParams& NormSpec::bimetric_params() const {
  return std::get<BimetricParams>(params_);
}
const StationaryParams& NormSpec::stationary_params() const {
  return std::get<StationaryParams>(params_);
}

double evaluate(const NormSpec& spec, const Vector& v) {
  check_vector(spec, v, "evaluate");
  require_in_domain(spec, v);
  return evaluate_impl(spec, v);
}

bool domain_contains(const NormSpec& spec, const Vector& v, double margin) {
  check_vector(spec, v, "domain_contains");
  if (!(margin >= 0.0 && margin < 0.5))
    throw argument_error("domain_contains: margin must lie in [0, 0.5)");
  return !domain_violation(spec, v, margin).has_value();
}

void require_in_domain(const NormSpec& spec, const Vector& v) {
  check_vector(spec, v, "require_in_domain");
  if (auto bad = domain_violation(spec, v, 0.0)) throw domain_error(*bad);
}

Vector gradient(const NormSpec& spec, const Vector& v) {
  check_vector(spec, v, "gradient");
  require_in_domain(spec, v);
  return gradient_impl(spec, v);
}

SymTensor fundamental_tensor(const NormSpec& spec, const Vector& v) {
  check_vector(spec, v, "fundamental_tensor");
  require_in_domain(spec, v);
  return SymTensor(tensor_impl(spec, v), v);
}

SignatureClass expected_signature(const NormSpec& spec) {
  switch (spec.family()) {
    case Family::MinkowskiBilinear:
    case Family::PPseudoNorm:
    case Family::BerwaldMoor:
    case Family::Bimetric:
    case Family::Kropina:
    case Family::Stationary:
      return SignatureClass::Lorentzian;
    case Family::DegenerateMinkowski:
      return SignatureClass::DegenerateLorentzian;
    case Family::EuclideanP:
      return SignatureClass::PositiveDefinite;
    case Family::WeightedGeometric:
      return spec.weighted_geometric_params().strictly_positive
                 ? SignatureClass::Lorentzian
                 : SignatureClass::DegenerateLorentzian;
  }
  throw internal_error("expected_signature: unhandled family");
}

bool reverse_mode(const NormSpec& spec) {
  const SignatureClass cls = expected_signature(spec);
  return cls == SignatureClass::Lorentzian || cls == SignatureClass::DegenerateLorentzian;
}

std::optional<MthRootData> mth_root_form(const NormSpec& spec, const Vector& v) {
  check_vector(spec, v, "mth_root_form");
  require_in_domain(spec, v);
  switch (spec.family()) {
    case Family::PPseudoNorm: return p_pseudo_data(spec, v);
    case Family::BerwaldMoor: return berwald_moor_data(spec, v);
    case Family::Bimetric: return bimetric_data(spec, v);
    default: return std::nullopt;
  }
}

std::vector<CatalogEntry> catalog() {
  return {
      {"minkowski_bilinear", "g: symmetric Lorentzian matrix",
       "g(v,v) > 0, future component", "Lorentzian"},
      {"degenerate_minkowski", "k: integer, 1 <= k <= dim-3",
       "(v0)^2 - (v1)^2 - ... - (vk)^2 > 0, v0 > 0", "DegenerateLorentzian"},
      {"p_pseudo_norm", "p: real, 1 < p <= 64",
       "all vi > 0, (v0)^p - sum_a (va)^p > 0", "Lorentzian"},
      {"euclidean_p", "p: real, 1 < p <= 64", "all vi > 0", "PositiveDefinite"},
      {"berwald_moor", "none", "all vi > 0", "Lorentzian"},
      {"weighted_geometric", "a: weights >= 0 summing to 1", "all vi > 0",
       "Lorentzian (DegenerateLorentzian when some weight is 0)"},
      {"bimetric", "h: symmetric Lorentzian matrix",
       "eta(v,v) > 0, h(v,v) > 0, v0 > 0", "Lorentzian"},
      {"kropina", "none", "eta(v,v) > 0, v0 > 0", "Lorentzian"},
      {"stationary", "base: positive definite norm spec of dimension dim-1",
       "spatial part in base cone, v0 > base norm of spatial part", "Lorentzian"},
  };
}

}  // namespace lf
