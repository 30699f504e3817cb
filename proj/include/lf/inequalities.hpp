#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "lf/norms.hpp"

namespace lf {

enum class Verdict { Holds, HoldsWithEquality, Violated };
std::string_view to_string(Verdict v);

// One inequality evaluation. slack = lhs - rhs with the sides oriented so
// slack >= 0 always means the inequality holds, whichever direction the
// family's signature dictates. collinear records whether the two vectors
// agree projectively (norm-normalized difference below 1e-8), the condition
// under which a strict inequality is allowed to degenerate to equality.
struct IneqReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  Verdict verdict = Verdict::Holds;
  bool strict_expected = false;
  bool collinear = false;
  double tol_used = 0.0;
};

struct CheckOptions {
  // Verdict tolerance override; default is 1e-9 * (1 + |lhs| + |rhs|).
  std::optional<double> tol;
};

// ||v/F(v) - w/F(w)||_inf <= 1e-8, the projective equality test.
bool collinear_normalized(const NormSpec& spec, const Vector& v, const Vector& w);

// dF_v(w) vs F(w): reversed (dF_v(w) >= F(w)) for one-positive-eigenvalue
// signatures, the usual direction otherwise. Strictness is expected exactly
// for the nondegenerate classes.
IneqReport check_fundamental(const NormSpec& spec, const Vector& v, const Vector& w,
                             const CheckOptions& opt = {});

// F(v+w) vs F(v)+F(w), oriented by the same rule. Membership of v+w in the
// cone is verified first; the cone is convex, so a failure is reported as an
// internal invariant violation rather than a domain error.
IneqReport check_reverse_triangle(const NormSpec& spec, const Vector& v,
                                  const Vector& w, const CheckOptions& opt = {});

// Chain a*D <= [F(av+bw) - aF(v) - bF(w)] <= b*D with D the reverse-triangle
// defect, for 0 < a <= b. Lower report first. Only meaningful in reversed
// orientation; other signatures raise argument_error.
std::pair<IneqReport, IneqReport> check_scaled_refinement(
    const NormSpec& spec, const Vector& v, const Vector& w, double a, double b,
    const CheckOptions& opt = {});

// Sandwich F(v)+F(w) <= 2*Int_0^1 F(tv+(1-t)w) dt <= F(v+w) via composite
// Simpson quadrature. The verdict tolerance is widened to at least
// 1e-6 * scale to absorb quadrature error. Reversed orientation only.
std::pair<IneqReport, IneqReport> check_integral_refinement(
    const NormSpec& spec, const Vector& v, const Vector& w, int n_panels = 64,
    const CheckOptions& opt = {});

// eta(v,w)^2 >= eta(v,v) * eta(w,w) for vectors inside the eta cone. Verdict
// is cross-checked against the Minkowski-norm fundamental inequality.
IneqReport check_aczel_classical(const Vector& v, const Vector& w,
                                 const CheckOptions& opt = {});

// eta(a,b) >= (q-form of a)^(1/q) * (p-form of b)^(1/p), 1/p + 1/q = 1.
// Routed through the p-pseudo-norm machinery via a_i = (v_i)^(p-1).
IneqReport check_popoviciu(const Vector& a, const Vector& b, double p,
                           const CheckOptions& opt = {});

// (p-form of v+w)^(1/p) >= sum of the individual roots; identical by
// definition to the p-pseudo-norm reverse triangle inequality, and the two
// slacks are asserted to agree to 1e-10 * scale.
IneqReport check_bellman(const Vector& v, const Vector& w, double p,
                         const CheckOptions& opt = {});

// Arithmetic mean vs geometric mean; the fundamental inequality of the
// Berwald-Moor norm at v = (1,...,1), w = a, with identical slack.
IneqReport check_am_gm(const Vector& a, const CheckOptions& opt = {});

// sum a_i v_i >= prod v_i^(a_i) for weights summing to 1; the weighted
// geometric norm's fundamental inequality at u = (1,...,1).
IneqReport check_weighted_am_gm(const Vector& weights, const Vector& v,
                                const CheckOptions& opt = {});

// Holder (first report) and Minkowski (second) inequalities for positive
// vectors, cross-checked against the p-norm machinery in its
// positive-definite (non-reversed) orientation.
std::pair<IneqReport, IneqReport> check_holder_minkowski(const Vector& a,
                                                         const Vector& b, double p,
                                                         const CheckOptions& opt = {});

// 2*eta(v,w) >= (w0/v0) eta(v,v) + (v0/w0) eta(w,w); the Kropina fundamental
// inequality cleared of denominators. Non-strict: the tensor is degenerate
// along the cone boundary directions.
IneqReport check_kropina(const Vector& v, const Vector& w,
                         const CheckOptions& opt = {});

// (eta(v,w)/eta(v,v) + h(v,w)/h(v,v))/2 >= (H(w)/H(v))^(1/4) with
// H = eta(.,.) * h(.,.); the bimetric fundamental inequality.
IneqReport check_bimetric(const Vector& v, const Vector& w, const Matrix& h,
                          const CheckOptions& opt = {});

// [v0 w0 - gbar(vs,ws)]^2 >= [(v0)^2 - B(vs)^2][(w0)^2 - B(ws)^2] where B is
// the positive definite base norm, vs/ws the spatial parts, and gbar the base
// fundamental tensor at vs. Vectors live in the stationary cone over base.
IneqReport finslerian_aczel(const NormSpec& base, const Vector& v, const Vector& w,
                            const CheckOptions& opt = {});

// Maximum pairwise deviation between the three algebraic forms of the
// decomposition lemma behind the refinements (direct slack, completed-square
// form, expanded form). Requires nonzero spatial parts for both vectors.
double aczel_lemma_identity(const NormSpec& base, const Vector& v, const Vector& w);

// Refinement bounds subtracted from the Aczel slack: first report subtracts
// the cross-term bound, second the completed square. Both slacks are >= 0
// when the hypotheses hold.
std::pair<IneqReport, IneqReport> aczel_refinements(const NormSpec& base,
                                                    const Vector& v, const Vector& w,
                                                    const CheckOptions& opt = {});

// For F = H^(1/m) families: classifies Hess(H) and the fundamental tensor at
// u = v/|v|_inf, verifies H_ij = m F^(m-2) [g_ij + (m-2) F_i F_j] entrywise
// (within 1e-8 * scale, else internal_error), and enforces that a Lorentzian
// Hess(H) forces a Lorentzian fundamental tensor. Returns (Hess(H) class,
// g class); the identity deviation is written to *deviation when given.
std::pair<Signature, Signature> mth_root_signature_transfer(
    const NormSpec& spec, const Vector& v, double* deviation = nullptr);

}  // namespace lf
