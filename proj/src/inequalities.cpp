#include "lf/inequalities.hpp"

#include <cmath>
#include <sstream>

#include "lf/calculus.hpp"

namespace lf {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::HoldsWithEquality: return "HoldsWithEquality";
    case Verdict::Violated: return "Violated";
  }
  return "";
}

namespace {

double eta_pair(const Vector& v, const Vector& w) {
  return v(0) * w(0) - v.tail(v.size() - 1).dot(w.tail(w.size() - 1));
}

void check_same_dim(const Vector& v, const Vector& w, const char* who) {
  if (v.size() != w.size()) {
    std::ostringstream os;
    os << who << ": vectors have dimensions " << v.size() << " and " << w.size();
    throw argument_error(os.str());
  }
}

// tol_floor widens the default tolerance (used where quadrature error enters);
// an explicit override always wins.
IneqReport build_report(std::string name, double lhs, double rhs,
                        bool strict_expected, bool collinear, const CheckOptions& opt,
                        double tol_floor = 0.0) {
  IneqReport rep;
  rep.name = std::move(name);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.slack = lhs - rhs;
  rep.strict_expected = strict_expected;
  rep.collinear = collinear;
  rep.tol_used = opt.tol.value_or(
      std::max(1e-9 * (1.0 + std::abs(lhs) + std::abs(rhs)), tol_floor));
  if (rep.slack > rep.tol_used)
    rep.verdict = Verdict::Holds;
  else if (rep.slack >= -rep.tol_used)
    rep.verdict = Verdict::HoldsWithEquality;
  else
    rep.verdict = Verdict::Violated;
  return rep;
}

// The classical checks recompute their inequality from the textbook formula;
// the norm-machinery evaluation of the same claim must reach the same verdict
// or the reduction itself is broken.
void require_verdict_agreement(const IneqReport& direct, const IneqReport& machinery) {
  if (direct.verdict != machinery.verdict) {
    std::ostringstream os;
    os << "reduction mismatch for " << direct.name << ": direct verdict "
       << to_string(direct.verdict) << " vs norm machinery "
       << to_string(machinery.verdict);
    throw internal_error(os.str());
  }
}

bool strict_for(const NormSpec& spec) {
  const SignatureClass cls = expected_signature(spec);
  return cls == SignatureClass::Lorentzian || cls == SignatureClass::PositiveDefinite;
}

void require_all_positive(const Vector& v, const char* label) {
  if (v.size() < 1 || !v.allFinite())
    throw argument_error(std::string(label) + ": components must be finite");
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!(v(i) > 0.0))
      throw domain_error(std::string("all components of ") + label + " must be > 0");
}

double signed_p_form(const Vector& a, double p) {
  double s = std::pow(a(0), p);
  for (Eigen::Index i = 1; i < a.size(); ++i) s -= std::pow(a(i), p);
  return s;
}

double plain_p_form(const Vector& a, double p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += std::pow(a(i), p);
  return s;
}

Vector componentwise_power(const Vector& a, double e) {
  Vector r(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) r(i) = std::exp(e * std::log(a(i)));
  return r;
}

void require_reverse_mode(const NormSpec& spec, const char* who) {
  if (!reverse_mode(spec))
    throw argument_error(std::string(who) +
                         ": requires a one-positive-eigenvalue family");
}

}  // namespace

bool collinear_normalized(const NormSpec& spec, const Vector& v, const Vector& w) {
  const double fv = evaluate(spec, v);
  const double fw = evaluate(spec, w);
  return (v / fv - w / fw).cwiseAbs().maxCoeff() <= 1e-8;
}

IneqReport check_fundamental(const NormSpec& spec, const Vector& v, const Vector& w,
                             const CheckOptions& opt) {
  check_same_dim(v, w, "check_fundamental");
  require_in_domain(spec, v);
  require_in_domain(spec, w);
  const double dfw = differential(spec, v, w);
  const double fw = evaluate(spec, w);
  const bool col = collinear_normalized(spec, v, w);
  return reverse_mode(spec)
             ? build_report("fundamental", dfw, fw, strict_for(spec), col, opt)
             : build_report("fundamental", fw, dfw, strict_for(spec), col, opt);
}

IneqReport check_reverse_triangle(const NormSpec& spec, const Vector& v,
                                  const Vector& w, const CheckOptions& opt) {
  check_same_dim(v, w, "check_reverse_triangle");
  require_in_domain(spec, v);
  require_in_domain(spec, w);
  const Vector sum = v + w;
  if (!domain_contains(spec, sum))
    throw internal_error(
        "reverse triangle: v + w left the cone, which convexity forbids");
  const double fs = evaluate(spec, sum);
  const double fv = evaluate(spec, v);
  const double fw = evaluate(spec, w);
  const bool col = collinear_normalized(spec, v, w);
  return reverse_mode(spec)
             ? build_report("reverse_triangle", fs, fv + fw, strict_for(spec), col, opt)
             : build_report("reverse_triangle", fv + fw, fs, strict_for(spec), col, opt);
}

std::pair<IneqReport, IneqReport> check_scaled_refinement(
    const NormSpec& spec, const Vector& v, const Vector& w, double a, double b,
    const CheckOptions& opt) {
  check_same_dim(v, w, "check_scaled_refinement");
  if (!(a > 0.0) || !(a <= b))
    throw argument_error("check_scaled_refinement: need 0 < a <= b");
  require_reverse_mode(spec, "check_scaled_refinement");
  require_in_domain(spec, v);
  require_in_domain(spec, w);
  const Vector sum = v + w;
  const Vector mix = a * v + b * w;
  if (!domain_contains(spec, sum) || !domain_contains(spec, mix))
    throw internal_error(
        "scaled refinement: a combination left the cone, which convexity forbids");
  const double fv = evaluate(spec, v);
  const double fw = evaluate(spec, w);
  const double defect = evaluate(spec, sum) - fv - fw;
  const double mid = evaluate(spec, mix) - a * fv - b * fw;
  const bool col = collinear_normalized(spec, v, w);
  return {build_report("scaled_refinement_lower", mid, a * defect, false, col, opt),
          build_report("scaled_refinement_upper", b * defect, mid, false, col, opt)};
}

std::pair<IneqReport, IneqReport> check_integral_refinement(
    const NormSpec& spec, const Vector& v, const Vector& w, int n_panels,
    const CheckOptions& opt) {
  check_same_dim(v, w, "check_integral_refinement");
  require_reverse_mode(spec, "check_integral_refinement");
  require_in_domain(spec, v);
  require_in_domain(spec, w);
  const Vector sum = v + w;
  if (!domain_contains(spec, sum))
    throw internal_error(
        "integral refinement: v + w left the cone, which convexity forbids");
  double integral = 0.0;
  try {
    integral = simpson_unit_interval(
        [&](double t) { return evaluate(spec, t * v + (1.0 - t) * w); }, n_panels);
  } catch (const domain_error& e) {
    throw internal_error(
        std::string("integral refinement: a segment point left the cone, "
                    "which convexity forbids: ") +
        e.what());
  }
  const double fv = evaluate(spec, v);
  const double fw = evaluate(spec, w);
  const double fs = evaluate(spec, sum);
  const bool col = collinear_normalized(spec, v, w);
  const double two_i = 2.0 * integral;
  const double floor_lo = 1e-6 * (1.0 + std::abs(two_i) + std::abs(fv + fw));
  const double floor_hi = 1e-6 * (1.0 + std::abs(fs) + std::abs(two_i));
  return {build_report("integral_refinement_lower", two_i, fv + fw, false, col, opt,
                       floor_lo),
          build_report("integral_refinement_upper", fs, two_i, false, col, opt,
                       floor_hi)};
}

IneqReport check_aczel_classical(const Vector& v, const Vector& w,
                                 const CheckOptions& opt) {
  check_same_dim(v, w, "check_aczel_classical");
  const NormSpec mink = NormSpec::minkowski_eta(v.size());
  require_in_domain(mink, v);
  require_in_domain(mink, w);
  const double mixed = eta_pair(v, w);
  const IneqReport machinery = check_fundamental(mink, v, w, opt);
  IneqReport rep = build_report("aczel", mixed * mixed,
                                eta_pair(v, v) * eta_pair(w, w), true,
                                machinery.collinear, opt);
  require_verdict_agreement(rep, machinery);
  return rep;
}

IneqReport check_popoviciu(const Vector& a, const Vector& b, double p,
                           const CheckOptions& opt) {
  check_same_dim(a, b, "check_popoviciu");
  if (!(p > 1.0)) throw argument_error("check_popoviciu: p must be > 1");
  require_all_positive(a, "a");
  require_all_positive(b, "b");
  const double q = p / (p - 1.0);
  const double qa = signed_p_form(a, q);
  const double pb = signed_p_form(b, p);
  if (!(qa > 0.0)) throw domain_error("(a0)^q - sum (ai)^q must be > 0");
  if (!(pb > 0.0)) throw domain_error("(b0)^p - sum (bi)^p must be > 0");
  const NormSpec pp = NormSpec::p_pseudo_norm(a.size(), p);
  const Vector v = componentwise_power(a, 1.0 / (p - 1.0));
  const IneqReport machinery = check_fundamental(pp, v, b, opt);
  IneqReport rep = build_report(
      "popoviciu", eta_pair(a, b), std::pow(qa, 1.0 / q) * std::pow(pb, 1.0 / p),
      true, machinery.collinear, opt);
  require_verdict_agreement(rep, machinery);
  return rep;
}

IneqReport check_bellman(const Vector& v, const Vector& w, double p,
                         const CheckOptions& opt) {
  check_same_dim(v, w, "check_bellman");
  if (!(p > 1.0)) throw argument_error("check_bellman: p must be > 1");
  const NormSpec pp = NormSpec::p_pseudo_norm(v.size(), p);
  require_in_domain(pp, v);
  require_in_domain(pp, w);
  const double lhs = std::pow(signed_p_form(v + w, p), 1.0 / p);
  const double rhs =
      std::pow(signed_p_form(v, p), 1.0 / p) + std::pow(signed_p_form(w, p), 1.0 / p);
  const IneqReport machinery = check_reverse_triangle(pp, v, w, opt);
  IneqReport rep =
      build_report("bellman", lhs, rhs, true, machinery.collinear, opt);
  require_verdict_agreement(rep, machinery);
  if (std::abs(rep.slack - machinery.slack) >
      1e-10 * (1.0 + std::abs(lhs) + std::abs(rhs)))
    throw internal_error("bellman slack does not match the reverse triangle slack");
  return rep;
}

IneqReport check_am_gm(const Vector& a, const CheckOptions& opt) {
  require_all_positive(a, "a");
  const double lhs = a.sum() / static_cast<double>(a.size());
  const double rhs = std::exp(a.array().log().mean());
  const NormSpec bm = NormSpec::berwald_moor(a.size());
  const IneqReport machinery =
      check_fundamental(bm, Vector::Ones(a.size()), a, opt);
  IneqReport rep = build_report("am_gm", lhs, rhs, true, machinery.collinear, opt);
  require_verdict_agreement(rep, machinery);
  if (std::abs(rep.slack - machinery.slack) >
      1e-9 * (1.0 + std::abs(lhs) + std::abs(rhs)))
    throw internal_error("am_gm slack does not match the fundamental slack");
  return rep;
}

IneqReport check_weighted_am_gm(const Vector& weights, const Vector& v,
                                const CheckOptions& opt) {
  check_same_dim(weights, v, "check_weighted_am_gm");
  if (!weights.allFinite() || (weights.array() < 0.0).any())
    throw argument_error("check_weighted_am_gm: weights must be finite and >= 0");
  const double sum = weights.sum();
  if (std::abs(sum - 1.0) > 1e-10)
    throw argument_error("check_weighted_am_gm: weights must sum to 1");
  require_all_positive(v, "v");
  const Vector a = weights / sum;
  const double lhs = a.dot(v);
  const double rhs = std::exp((v.array().log() * a.array()).sum());
  const NormSpec wg = NormSpec::weighted_geometric(a);
  const IneqReport machinery =
      check_fundamental(wg, Vector::Ones(v.size()), v, opt);
  IneqReport rep = build_report("weighted_am_gm", lhs, rhs,
                                machinery.strict_expected, machinery.collinear, opt);
  require_verdict_agreement(rep, machinery);
  return rep;
}

std::pair<IneqReport, IneqReport> check_holder_minkowski(const Vector& a,
                                                         const Vector& b, double p,
                                                         const CheckOptions& opt) {
  check_same_dim(a, b, "check_holder_minkowski");
  if (!(p > 1.0)) throw argument_error("check_holder_minkowski: p must be > 1");
  require_all_positive(a, "a");
  require_all_positive(b, "b");
  const double q = p / (p - 1.0);
  const NormSpec ep = NormSpec::euclidean_p(a.size(), p);

  const IneqReport mach_holder =
      check_fundamental(ep, componentwise_power(a, 1.0 / (p - 1.0)), b, opt);
  IneqReport holder = build_report(
      "holder",
      std::pow(plain_p_form(a, q), 1.0 / q) * std::pow(plain_p_form(b, p), 1.0 / p),
      a.dot(b), true, mach_holder.collinear, opt);
  require_verdict_agreement(holder, mach_holder);

  const IneqReport mach_mink = check_reverse_triangle(ep, a, b, opt);
  IneqReport mink = build_report(
      "minkowski",
      std::pow(plain_p_form(a, p), 1.0 / p) + std::pow(plain_p_form(b, p), 1.0 / p),
      std::pow(plain_p_form(a + b, p), 1.0 / p), true, mach_mink.collinear, opt);
  require_verdict_agreement(mink, mach_mink);
  return {std::move(holder), std::move(mink)};
}

IneqReport check_kropina(const Vector& v, const Vector& w, const CheckOptions& opt) {
  check_same_dim(v, w, "check_kropina");
  const NormSpec kr = NormSpec::kropina(v.size());
  require_in_domain(kr, v);
  require_in_domain(kr, w);
  const double lhs = 2.0 * eta_pair(v, w);
  const double rhs =
      (w(0) / v(0)) * eta_pair(v, v) + (v(0) / w(0)) * eta_pair(w, w);
  const IneqReport machinery = check_fundamental(kr, v, w, opt);
  IneqReport rep = build_report("kropina", lhs, rhs, false, machinery.collinear, opt);
  require_verdict_agreement(rep, machinery);
  return rep;
}

IneqReport check_bimetric(const Vector& v, const Vector& w, const Matrix& h,
                          const CheckOptions& opt) {
  check_same_dim(v, w, "check_bimetric");
  const NormSpec bi = NormSpec::bimetric(h);
  require_in_domain(bi, v);
  require_in_domain(bi, w);
  const Matrix& hm = bi.bimetric_params().h.m;
  const double evv = eta_pair(v, v);
  const double hvv = bilinear(hm, v, v);
  const double lhs = 0.5 * (eta_pair(v, w) / evv + bilinear(hm, v, w) / hvv);
  const double rhs =
      std::pow(eta_pair(w, w) * bilinear(hm, w, w) / (evv * hvv), 0.25);
  const IneqReport machinery = check_fundamental(bi, v, w, opt);
  IneqReport rep = build_report("bimetric", lhs, rhs, true, machinery.collinear, opt);
  require_verdict_agreement(rep, machinery);
  return rep;
}

namespace {

// Shared scaffolding for the stationary-cone checks: spatial parts, base norm
// values, and the base fundamental tensor pairing at the first spatial part.
struct AczelTerms {
  double v0 = 0.0;
  double w0 = 0.0;
  double vnorm = 0.0;  // base norm of the spatial part of v
  double wnorm = 0.0;
  double gbar = 0.0;  // base fundamental tensor at vs applied to (vs, ws)
  double lhs = 0.0;   // squared mixed term
  double rhs = 0.0;   // product of the squared cone gaps
  bool collinear = false;
};

AczelTerms aczel_terms(const NormSpec& base, const Vector& v, const Vector& w,
                       bool need_w_spatial) {
  if (v.size() != base.dim() + 1 || w.size() != base.dim() + 1)
    throw argument_error("finslerian aczel: vectors must have base dimension + 1");
  if (!v.allFinite() || !w.allFinite())
    throw argument_error("finslerian aczel: vector entries must be finite");
  const Vector vs = v.tail(base.dim());
  const Vector ws = w.tail(base.dim());
  if (vs.norm() == 0.0)
    throw argument_error("finslerian aczel: spatial part of v must be nonzero");
  if (need_w_spatial && ws.norm() == 0.0)
    throw argument_error("finslerian aczel: spatial part of w must be nonzero");
  const NormSpec stat = NormSpec::stationary(base);
  require_in_domain(stat, v);
  require_in_domain(stat, w);
  AczelTerms t;
  t.v0 = v(0);
  t.w0 = w(0);
  t.vnorm = evaluate(base, vs);
  t.wnorm = evaluate(base, ws);
  t.gbar = bilinear(fundamental_tensor(base, vs).m, vs, ws);
  const double mixed = t.v0 * t.w0 - t.gbar;
  t.lhs = mixed * mixed;
  t.rhs = (t.v0 * t.v0 - t.vnorm * t.vnorm) * (t.w0 * t.w0 - t.wnorm * t.wnorm);
  t.collinear = collinear_normalized(stat, v, w);
  return t;
}

double completed_square(const AczelTerms& t) {
  const double d = t.w0 * t.gbar / t.wnorm - t.v0 * t.wnorm;
  return d * d;
}

double cross_term(const AczelTerms& t) {
  return (t.w0 * t.w0 - t.wnorm * t.wnorm) / (t.wnorm * t.wnorm) *
         (t.vnorm * t.vnorm * t.wnorm * t.wnorm - t.gbar * t.gbar);
}

}  // namespace

IneqReport finslerian_aczel(const NormSpec& base, const Vector& v, const Vector& w,
                            const CheckOptions& opt) {
  const AczelTerms t = aczel_terms(base, v, w, false);
  return build_report("aczel_finsler", t.lhs, t.rhs, true, t.collinear, opt);
}

double aczel_lemma_identity(const NormSpec& base, const Vector& v, const Vector& w) {
  const AczelTerms t = aczel_terms(base, v, w, true);
  const double direct = t.lhs - t.rhs;
  const double completed = completed_square(t) + cross_term(t);
  const double expanded = t.vnorm * t.vnorm * t.w0 * t.w0 +
                          t.v0 * t.v0 * t.wnorm * t.wnorm -
                          2.0 * t.v0 * t.w0 * t.gbar + t.gbar * t.gbar -
                          t.vnorm * t.vnorm * t.wnorm * t.wnorm;
  return std::max({std::abs(direct - completed), std::abs(direct - expanded),
                   std::abs(completed - expanded)});
}

std::pair<IneqReport, IneqReport> aczel_refinements(const NormSpec& base,
                                                    const Vector& v, const Vector& w,
                                                    const CheckOptions& opt) {
  const AczelTerms t = aczel_terms(base, v, w, true);
  const double slack = t.lhs - t.rhs;
  return {build_report("aczel_refinement1", slack, cross_term(t), false,
                       t.collinear, opt),
          build_report("aczel_refinement2", slack, completed_square(t), false,
                       t.collinear, opt)};
}

std::pair<Signature, Signature> mth_root_signature_transfer(const NormSpec& spec,
                                                            const Vector& v,
                                                            double* deviation) {
  const auto data = mth_root_form(spec, v);
  if (!data)
    throw argument_error(
        "mth_root_signature_transfer: requires an m-th-root family "
        "(p_pseudo_norm, berwald_moor, bimetric)");
  const Vector& u = data->u;
  const double f = evaluate(spec, u);
  const Vector grad = gradient(spec, u);
  const SymTensor g = fundamental_tensor(spec, u);
  const double m = data->m;
  const Matrix assembled =
      m * std::pow(f, m - 2.0) * (g.m + (m - 2.0) * (grad * grad.transpose()));
  const double dev = (data->hess - assembled).cwiseAbs().maxCoeff();
  const double scale = 1.0 + std::max(data->hess.cwiseAbs().maxCoeff(),
                                      assembled.cwiseAbs().maxCoeff());
  if (dev > 1e-8 * scale)
    throw internal_error(
        "mth root transfer: the form Hessian does not match its assembly from "
        "the fundamental tensor");
  if (deviation) *deviation = dev;
  const Signature sig_h = classify_signature(SymTensor(data->hess, u));
  const Signature sig_g = classify_signature(g);
  if (sig_h.cls == SignatureClass::Lorentzian &&
      sig_g.cls != SignatureClass::Lorentzian)
    throw internal_error(
        "mth root transfer: Lorentzian form Hessian with a non-Lorentzian "
        "fundamental tensor");
  return {sig_h, sig_g};
}

}  // namespace lf
