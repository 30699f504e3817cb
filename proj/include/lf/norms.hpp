#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lf/linalg.hpp"

namespace lf {

// Catalog of positively 1-homogeneous norms on open convex cones. Each family
// fixes a cone, a closed-form value/gradient/fundamental-tensor triple, and
// the signature class its fundamental tensor has everywhere on the cone.
enum class Family {
  MinkowskiBilinear,    // F = sqrt(g(v,v)), g a fixed Lorentzian bilinear form
  DegenerateMinkowski,  // F = sqrt(v0^2 - v1^2 - ... - vk^2) on a cylinder cone
  PPseudoNorm,          // F = ((v0)^p - sum_a (va)^p)^(1/p), p > 1
  EuclideanP,           // F = (sum_i (vi)^p)^(1/p) on the positive orthant
  BerwaldMoor,          // F = (v0 v1 ... vn)^(1/(n+1))
  WeightedGeometric,    // F = prod_i (vi)^(a_i), a_i >= 0, sum a_i = 1
  Bimetric,             // F = (eta(v,v) * h(v,v))^(1/4), h Lorentzian
  Kropina,              // F = eta(v,v) / v0
  Stationary,           // F = sqrt((v0)^2 - B(spatial)^2), B positive definite
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

struct MinkowskiParams {
  SymTensor g;
  Vector future_axis;  // t with g(t,t) = 1 picking the future component
};
struct DegenerateMinkowskiParams {
  int k = 1;  // number of negative directions, 1 <= k <= dim-3
};
struct PPseudoParams {
  double p = 2.0;
};
struct EuclideanPParams {
  double p = 2.0;
};
struct BerwaldMoorParams {};
struct WeightedGeometricParams {
  Vector weights;
  bool strictly_positive = true;
};
struct BimetricParams {
  SymTensor h;
  double h_radius = 1.0;  // spectral radius of h, used for margin scaling
};
struct KropinaParams {};
class NormSpec;
struct StationaryParams {
  std::shared_ptr<const NormSpec> base;
};

class NormSpec {
 public:
  static NormSpec minkowski(const Matrix& g);
  static NormSpec minkowski_eta(Eigen::Index dim);
  static NormSpec degenerate_minkowski(Eigen::Index dim, int k);
  static NormSpec p_pseudo_norm(Eigen::Index dim, double p);
  static NormSpec euclidean_p(Eigen::Index dim, double p);
  static NormSpec berwald_moor(Eigen::Index dim);
  static NormSpec weighted_geometric(const Vector& weights);
  static NormSpec bimetric(const Matrix& h);
  static NormSpec kropina(Eigen::Index dim);
  static NormSpec stationary(NormSpec base);

  Family family() const { return family_; }
  Eigen::Index dim() const { return dim_; }

  const MinkowskiParams& minkowski_params() const;
  const DegenerateMinkowskiParams& degenerate_minkowski_params() const;
  const PPseudoParams& p_pseudo_params() const;
  const EuclideanPParams& euclidean_p_params() const;
  const WeightedGeometricParams& weighted_geometric_params() const;
  const BimetricParams& bimetric_params() const;
  const StationaryParams& stationary_params() const;

 private:
  NormSpec(Family f, Eigen::Index dim) : family_(f), dim_(dim) {}

  Family family_;
  Eigen::Index dim_;
  std::variant<MinkowskiParams, DegenerateMinkowskiParams, PPseudoParams,
               EuclideanPParams, BerwaldMoorParams, WeightedGeometricParams,
               BimetricParams, KropinaParams, StationaryParams>
      params_{};
};

// F(v). Throws domain_error (naming the violated constraint) outside the cone.
double evaluate(const NormSpec& spec, const Vector& v);

// Membership with relative slack: margin 0 runs the open-cone test with strict
// inequalities; margin > 0 requires every constraint to clear a scale-free
// slack of at least margin. margin must lie in [0, 0.5).
bool domain_contains(const NormSpec& spec, const Vector& v, double margin = 0.0);

// Throws domain_error with the first violated constraint, else returns.
void require_in_domain(const NormSpec& spec, const Vector& v);

// Closed-form gradient of F at v (components dF/dv^i).
Vector gradient(const NormSpec& spec, const Vector& v);

// Closed-form fundamental tensor g_ij(v) = 1/2 d^2(F^2)/dv^i dv^j, ref v.
SymTensor fundamental_tensor(const NormSpec& spec, const Vector& v);

// The signature class the fundamental tensor has everywhere on the cone.
SignatureClass expected_signature(const NormSpec& spec);

// True when the expected signature has exactly one positive eigenvalue, i.e.
// the fundamental and triangle inequalities hold in reversed orientation.
bool reverse_mode(const NormSpec& spec);

// F = H^(1/m) presentation for the families that have one (PPseudoNorm m=p,
// BerwaldMoor m=dim, Bimetric m=4). All fields are evaluated at u = v/|v|_inf
// so arbitrarily scaled inputs cannot overflow; H is m-homogeneous, so value,
// gradient and Hessian at v differ from the returned ones only by powers of
// the recorded scale.
struct MthRootData {
  double m = 0.0;
  double scale = 1.0;  // |v|_inf
  Vector u;
  double h = 0.0;  // H(u)
  Vector grad;     // H_i(u)
  Matrix hess;     // H_ij(u)
};
std::optional<MthRootData> mth_root_form(const NormSpec& spec, const Vector& v);

struct CatalogEntry {
  std::string name;
  std::string params;
  std::string domain;
  std::string signature;
};
std::vector<CatalogEntry> catalog();

}  // namespace lf
