#include "lf/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "lf/calculus.hpp"
#include "lf/errors.hpp"

namespace lf {
namespace {

void expect_fields(const Json& obj, const std::string& where,
                   std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional) {
  for (const char* f : required)
    if (!obj.contains(f))
      throw parse_error(where + ": missing field '" + f + "'");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const auto known = [&](const char* f) { return it.key() == f; };
    if (!std::any_of(required.begin(), required.end(), known) &&
        !std::any_of(optional.begin(), optional.end(), known))
      throw parse_error(where + ": unknown field '" + it.key() + "'");
  }
}

double number_field(const Json& j, const std::string& where, const char* field) {
  const Json& v = j.at(field);
  if (!v.is_number())
    throw parse_error(where + ": '" + field + "' must be a number");
  return v.get<double>();
}

SampleConfig parse_sample_config(const Json& j, const std::string& where) {
  if (!j.is_object()) throw parse_error(where + ": must be an object");
  expect_fields(j, where, {},
                {"seed", "count", "margin", "scale_range", "collinear_fraction"});
  SampleConfig cfg;
  if (j.contains("seed")) {
    const Json& s = j.at("seed");
    if (!s.is_number_integer() ||
        (!s.is_number_unsigned() && s.get<long long>() < 0))
      throw parse_error(where + ": 'seed' must be a non-negative integer");
    cfg.seed = s.get<std::uint64_t>();
  }
  if (j.contains("count")) {
    const Json& c = j.at("count");
    if (!c.is_number_integer() ||
        (!c.is_number_unsigned() && c.get<long long>() < 0))
      throw parse_error(where + ": 'count' must be a non-negative integer");
    cfg.count = c.get<std::size_t>();
  }
  if (j.contains("margin")) cfg.margin = number_field(j, where, "margin");
  if (j.contains("scale_range")) {
    const Json& r = j.at("scale_range");
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
      throw parse_error(where + ": 'scale_range' must be an array [min, max]");
    cfg.scale_range = {r[0].get<double>(), r[1].get<double>()};
  }
  if (j.contains("collinear_fraction"))
    cfg.collinear_fraction = number_field(j, where, "collinear_fraction");
  validate(cfg);
  return cfg;
}

std::string joined_checks() {
  std::string out;
  for (const std::string& name : known_checks()) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

bool is_standard_eta(const NormSpec& spec) {
  if (spec.family() != Family::MinkowskiBilinear) return false;
  const Matrix& g = spec.minkowski_params().g.m;
  Matrix eta = -Matrix::Identity(spec.dim(), spec.dim());
  eta(0, 0) = 1.0;
  return (g - eta).cwiseAbs().maxCoeff() == 0.0;
}

RunManifest parse_run(const Json& j, std::size_t idx) {
  const std::string where = "runs[" + std::to_string(idx) + "]";
  if (!j.is_object()) throw parse_error(where + ": must be an object");
  expect_fields(j, where, {"spec", "checks"}, {"sample", "tolerances"});

  NormSpec spec = parse_norm_spec(j.at("spec"));

  const Json& jc = j.at("checks");
  if (!jc.is_array() || jc.empty())
    throw parse_error(where + ": 'checks' must be a non-empty array");
  std::vector<std::string> checks;
  for (const Json& c : jc) {
    if (!c.is_string())
      throw parse_error(where + ": 'checks' entries must be strings");
    const std::string name = c.get<std::string>();
    const auto& known = known_checks();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw parse_error(where + ": unknown check '" + name +
                        "'; valid names: " + joined_checks());
    if (!check_valid_for(name, spec))
      throw parse_error(where + ": check '" + name +
                        "' does not apply to family '" +
                        std::string(family_name(spec.family())) + "'");
    checks.push_back(name);
  }

  SampleConfig cfg;
  if (j.contains("sample"))
    cfg = parse_sample_config(j.at("sample"), where + ".sample");

  Json tol = Json::object();
  if (j.contains("tolerances")) {
    const Json& jt = j.at("tolerances");
    if (!jt.is_object())
      throw parse_error(where + ": 'tolerances' must be an object");
    for (auto it = jt.begin(); it != jt.end(); ++it) {
      if (std::find(checks.begin(), checks.end(), it.key()) == checks.end())
        throw parse_error(where + ": tolerance for '" + it.key() +
                          "' does not match any listed check");
      if (!it.value().is_number() || !(it.value().get<double>() > 0.0))
        throw parse_error(where + ": tolerance '" + it.key() +
                          "' must be a positive number");
    }
    tol = jt;
  }

  return RunManifest{std::move(spec), std::move(checks), cfg, std::move(tol)};
}

bool needs_pairs(const std::string& check) {
  static const char* names[] = {
      "fundamental",  "reverse_triangle", "scaled_refinement",
      "integral_refinement", "aczel",     "popoviciu",
      "bellman",      "holder_minkowski", "kropina",
      "bimetric",     "aczel_finsler",    "aczel_lemma",
      "aczel_refinements"};
  for (const char* n : names)
    if (check == n) return true;
  return false;
}

bool needs_singles(const std::string& check) {
  static const char* names[] = {"signature",       "oracle_tensor",
                                "hessian_semidefinite", "mth_root_transfer",
                                "am_gm",           "weighted_am_gm"};
  for (const char* n : names)
    if (check == n) return true;
  return false;
}

CheckRow make_row(std::string name) {
  CheckRow row;
  row.check = std::move(name);
  row.min_slack = std::numeric_limits<double>::infinity();
  return row;
}

void record_worst(CheckRow& row, std::size_t index, double slack,
                  const Vector& v, const Vector* w) {
  if (slack < row.min_slack) {
    row.min_slack = slack;
    WorstCase worst;
    worst.index = index;
    worst.slack = slack;
    worst.v = v;
    if (w != nullptr) worst.w = *w;
    row.worst = std::move(worst);
  }
}

void absorb_report(CheckRow& row, std::size_t index, const IneqReport& rep,
                   const Vector& v, const Vector* w) {
  row.count += 1;
  row.strict_expected = rep.strict_expected;
  if (rep.verdict == Verdict::Violated) row.violations += 1;
  if (rep.verdict == Verdict::HoldsWithEquality) {
    row.equality_cases += 1;
    if (rep.collinear) row.collinear_equality_cases += 1;
  }
  record_worst(row, index, rep.slack, v, w);
}

void absorb_bound(CheckRow& row, std::size_t index, double slack, bool ok,
                  const Vector& v, const Vector* w) {
  row.count += 1;
  if (!ok) row.violations += 1;
  record_worst(row, index, slack, v, w);
}

CheckOptions slack_options(const Json& tolerances, const std::string& check) {
  CheckOptions opt;
  if (tolerances.contains(check)) opt.tol = tolerances.at(check).get<double>();
  return opt;
}

double factor_override(const Json& tolerances, const std::string& check,
                       double fallback) {
  if (tolerances.contains(check)) return tolerances.at(check).get<double>();
  return fallback;
}

// Per-sample wrapper: broken identities and stray domain exits become
// internal errors carrying the sample index.
template <class Fn>
void each_indexed(std::size_t n, Fn&& body) {
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (const internal_error& e) {
      throw internal_error("sample " + std::to_string(i) + ": " + e.what());
    } catch (const domain_error& e) {
      throw internal_error("sample " + std::to_string(i) +
                           " left the domain: " + e.what());
    }
  }
}

std::vector<CheckRow> run_one_check(const RunManifest& run,
                                    const std::string& check,
                                    const std::vector<SamplePair>& pairs,
                                    const std::vector<Vector>& singles) {
  const NormSpec& spec = run.spec;
  const Json& tol = run.tolerances;
  const CheckOptions opt = slack_options(tol, check);

  if (check == "fundamental" || check == "reverse_triangle") {
    CheckRow row = make_row(check);
    each_indexed(pairs.size(), [&](std::size_t i) {
      const SamplePair& s = pairs[i];
      const IneqReport rep = check == "fundamental"
                                 ? check_fundamental(spec, s.v, s.w, opt)
                                 : check_reverse_triangle(spec, s.v, s.w, opt);
      absorb_report(row, i, rep, s.v, &s.w);
    });
    return {std::move(row)};
  }

  if (check == "scaled_refinement") {
    CheckRow lower = make_row("scaled_refinement_lower");
    CheckRow upper = make_row("scaled_refinement_upper");
    each_indexed(pairs.size(), [&](std::size_t i) {
      const SamplePair& s = pairs[i];
      rng::Substream ab = rng::substream(run.sample.seed, "ab", i);
      const double a = ab.next_in(0.25, 1.0);
      const double b = a + ab.next_in(0.0, 2.0);
      const auto reps = check_scaled_refinement(spec, s.v, s.w, a, b, opt);
      absorb_report(lower, i, reps.first, s.v, &s.w);
      absorb_report(upper, i, reps.second, s.v, &s.w);
    });
    return {std::move(lower), std::move(upper)};
  }

  if (check == "integral_refinement") {
    CheckRow lower = make_row("integral_refinement_lower");
    CheckRow upper = make_row("integral_refinement_upper");
    each_indexed(pairs.size(), [&](std::size_t i) {
      const SamplePair& s = pairs[i];
      const auto reps = check_integral_refinement(spec, s.v, s.w, 64, opt);
      absorb_report(lower, i, reps.first, s.v, &s.w);
      absorb_report(upper, i, reps.second, s.v, &s.w);
    });
    return {std::move(lower), std::move(upper)};
  }

  if (check == "aczel") {
    CheckRow row = make_row("aczel");
    each_indexed(pairs.size(), [&](std::size_t i) {
      const SamplePair& s = pairs[i];
      absorb_report(row, i, check_aczel_classical(s.v, s.w, opt), s.v, &s.w);
    });
    return {std::move(row)};
  }

  if (check == "popoviciu") {
    const double p = spec.p_pseudo_params().p;
    CheckRow row = make_row("popoviciu");
    each_indexed(pairs.size(), [&](std::size_t i) {
      const SamplePair& s = pairs[i];
      Vector a(s.v.size());
      for (Eigen::Index c = 0; c < s.v.size(); ++c)
        a(c) = std::pow(s.v(c), p - 1.0);
      absorb_report(row, i, check_popoviciu(a, s.w, p, opt), a, &s.w);
    });
    return {std::move(row)};
  }

  if (check == "bellman") {
    const double p = spec.p_pseudo_params().p;
    CheckRow row = make_row("bellman");
    each_indexed(pairs.size(), [&](std::size_t i) {
      const SamplePair& s = pairs[i];
      absorb_report(row, i, check_bellman(s.v, s.w, p, opt), s.v, &s.w);
    });
    return {std::move(row)};
  }

  if (check == "holder_minkowski") {
    const double p = spec.euclidean_p_params().p;
    CheckRow holder = make_row("holder");
    CheckRow minkowski = make_row("minkowski");
    each_indexed(pairs.size(), [&](std::size_t i) {
      const SamplePair& s = pairs[i];
      const auto reps = check_holder_minkowski(s.v, s.w, p, opt);
      absorb_report(holder, i, reps.first, s.v, &s.w);
      absorb_report(minkowski, i, reps.second, s.v, &s.w);
    });
    return {std::move(holder), std::move(minkowski)};
  }

  if (check == "kropina") {
    CheckRow row = make_row("kropina");
    each_indexed(pairs.size(), [&](std::size_t i) {
      const SamplePair& s = pairs[i];
      absorb_report(row, i, check_kropina(s.v, s.w, opt), s.v, &s.w);
    });
    return {std::move(row)};
  }

  if (check == "bimetric") {
    const Matrix& h = spec.bimetric_params().h.m;
    CheckRow row = make_row("bimetric");
    each_indexed(pairs.size(), [&](std::size_t i) {
      const SamplePair& s = pairs[i];
      absorb_report(row, i, check_bimetric(s.v, s.w, h, opt), s.v, &s.w);
    });
    return {std::move(row)};
  }

  if (check == "aczel_finsler") {
    const NormSpec& base = *spec.stationary_params().base;
    CheckRow row = make_row("aczel_finsler");
    each_indexed(pairs.size(), [&](std::size_t i) {
      const SamplePair& s = pairs[i];
      absorb_report(row, i, finslerian_aczel(base, s.v, s.w, opt), s.v, &s.w);
    });
    return {std::move(row)};
  }

  if (check == "aczel_lemma") {
    const NormSpec& base = *spec.stationary_params().base;
    const double factor = factor_override(tol, check, 1e-10);
    CheckRow row = make_row("aczel_lemma");
    each_indexed(pairs.size(), [&](std::size_t i) {
      const SamplePair& s = pairs[i];
      const double dev = aczel_lemma_identity(base, s.v, s.w);
      const IneqReport ref = finslerian_aczel(base, s.v, s.w);
      const double allowed =
          factor * (1.0 + std::abs(ref.lhs) + std::abs(ref.rhs));
      absorb_bound(row, i, allowed - dev, dev <= allowed, s.v, &s.w);
    });
    return {std::move(row)};
  }

  if (check == "aczel_refinements") {
    const NormSpec& base = *spec.stationary_params().base;
    CheckRow first = make_row("aczel_refinement1");
    CheckRow second = make_row("aczel_refinement2");
    each_indexed(pairs.size(), [&](std::size_t i) {
      const SamplePair& s = pairs[i];
      const auto reps = aczel_refinements(base, s.v, s.w, opt);
      absorb_report(first, i, reps.first, s.v, &s.w);
      absorb_report(second, i, reps.second, s.v, &s.w);
    });
    return {std::move(first), std::move(second)};
  }

  if (check == "signature") {
    const double ctol = factor_override(tol, check, 1e-9);
    const SignatureClass expected = expected_signature(spec);
    CheckRow row = make_row("signature");
    each_indexed(singles.size(), [&](std::size_t i) {
      const Vector& v = singles[i];
      const Signature sig = classify_signature(fundamental_tensor(spec, v), ctol);
      const bool ok = sig.cls == expected;
      absorb_bound(row, i, ok ? 1.0 : -1.0, ok, v, nullptr);
    });
    return {std::move(row)};
  }

  if (check == "oracle_tensor") {
    const double factor = factor_override(tol, check, 1e-5);
    CheckRow row = make_row("oracle_tensor");
    each_indexed(singles.size(), [&](std::size_t i) {
      const Vector& v = singles[i];
      const Matrix ana = fundamental_tensor(spec, v).m;
      const Matrix num = fd_fundamental_tensor(spec, v).m;
      const double dev = (ana - num).cwiseAbs().maxCoeff();
      const double allowed = factor * (1.0 + ana.cwiseAbs().maxCoeff());
      absorb_bound(row, i, allowed - dev, dev <= allowed, v, nullptr);
    });
    return {std::move(row)};
  }

  if (check == "hessian_semidefinite") {
    const double factor = factor_override(tol, check, 1e-9);
    const bool reverse = reverse_mode(spec);
    CheckRow row = make_row("hessian_semidefinite");
    each_indexed(singles.size(), [&](std::size_t i) {
      const Vector& v = singles[i];
      const SymTensor fij = norm_hessian(spec, v);
      const Vector eig = sym_eigenvalues(fij);
      const double radius =
          std::max(std::abs(eig(0)), std::abs(eig(eig.size() - 1)));
      const double allowed = factor * (1.0 + radius);
      // One-positive families have a negative-semidefinite norm Hessian,
      // definite families a positive-semidefinite one; v spans the radical.
      const double eig_slack =
          reverse ? allowed - eig(0) : eig(eig.size() - 1) + allowed;
      const double rad_scale =
          1.0 + fij.m.cwiseAbs().maxCoeff() * v.cwiseAbs().maxCoeff();
      const double rad_slack =
          factor * rad_scale - (fij.m * v).cwiseAbs().maxCoeff();
      const double slack = std::min(eig_slack, rad_slack);
      absorb_bound(row, i, slack, slack >= 0.0, v, nullptr);
    });
    return {std::move(row)};
  }

  if (check == "mth_root_transfer") {
    const double factor = factor_override(tol, check, 1e-8);
    CheckRow row = make_row("mth_root_transfer");
    each_indexed(singles.size(), [&](std::size_t i) {
      const Vector& v = singles[i];
      double dev = 0.0;
      mth_root_signature_transfer(spec, v, &dev);
      const auto data = mth_root_form(spec, v);
      const double allowed =
          factor * (1.0 + data->hess.cwiseAbs().maxCoeff());
      absorb_bound(row, i, allowed - dev, dev <= allowed, v, nullptr);
    });
    return {std::move(row)};
  }

  if (check == "am_gm") {
    CheckRow row = make_row("am_gm");
    each_indexed(singles.size(), [&](std::size_t i) {
      absorb_report(row, i, check_am_gm(singles[i], opt), singles[i], nullptr);
    });
    return {std::move(row)};
  }

  if (check == "weighted_am_gm") {
    const Vector& weights = spec.weighted_geometric_params().weights;
    CheckRow row = make_row("weighted_am_gm");
    each_indexed(singles.size(), [&](std::size_t i) {
      absorb_report(row, i, check_weighted_am_gm(weights, singles[i], opt),
                    singles[i], nullptr);
    });
    return {std::move(row)};
  }

  if (check == "degenerate_equality") {
    // Radical-direction regression: both vectors differ only in null
    // coordinates, so the fundamental inequality is an exact equality on a
    // non-collinear pair.
    const int k = spec.degenerate_minkowski_params().k;
    Vector v = Vector::Zero(spec.dim());
    Vector w = Vector::Zero(spec.dim());
    v(0) = 1.0;
    v(k + 1) = 1.0;
    w(0) = 1.0;
    w(k + 2) = 1.0;
    const IneqReport rep = check_fundamental(spec, v, w);
    const double bound = factor_override(tol, check, 1e-12);
    const bool ok = std::abs(rep.slack) <= bound && !rep.collinear;
    CheckRow row = make_row("degenerate_equality");
    absorb_bound(row, 0, bound - std::abs(rep.slack), ok, v, &w);
    return {std::move(row)};
  }

  throw argument_error("run_one_check: unknown check '" + check + "'");
}

Json vector_json(const Vector& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Json row_json(const CheckRow& row) {
  Json j = Json::object();
  j["check"] = row.check;
  j["count"] = row.count;
  j["violations"] = row.violations;
  j["equality_cases"] = row.equality_cases;
  j["collinear_equality_cases"] = row.collinear_equality_cases;
  j["strict_expected"] = row.strict_expected;
  j["min_slack"] = row.min_slack;
  if (row.worst) {
    Json w = Json::object();
    w["index"] = row.worst->index;
    w["slack"] = row.worst->slack;
    w["v"] = vector_json(row.worst->v);
    if (row.worst->w) w["w"] = vector_json(*row.worst->w);
    j["worst"] = std::move(w);
  }
  j["pass"] = row.pass();
  return j;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"fundamental",
                                                 "reverse_triangle",
                                                 "scaled_refinement",
                                                 "integral_refinement",
                                                 "signature",
                                                 "oracle_tensor",
                                                 "hessian_semidefinite",
                                                 "mth_root_transfer",
                                                 "aczel",
                                                 "popoviciu",
                                                 "bellman",
                                                 "am_gm",
                                                 "weighted_am_gm",
                                                 "holder_minkowski",
                                                 "kropina",
                                                 "bimetric",
                                                 "aczel_finsler",
                                                 "aczel_lemma",
                                                 "aczel_refinements",
                                                 "degenerate_equality"};
  return names;
}

bool check_valid_for(const std::string& check, const NormSpec& spec) {
  const Family f = spec.family();
  if (check == "fundamental" || check == "reverse_triangle" ||
      check == "signature" || check == "oracle_tensor" ||
      check == "hessian_semidefinite")
    return true;
  if (check == "scaled_refinement" || check == "integral_refinement")
    return reverse_mode(spec);
  if (check == "aczel") return is_standard_eta(spec);
  if (check == "popoviciu" || check == "bellman")
    return f == Family::PPseudoNorm;
  if (check == "am_gm") return f == Family::BerwaldMoor;
  if (check == "weighted_am_gm") return f == Family::WeightedGeometric;
  if (check == "holder_minkowski") return f == Family::EuclideanP;
  if (check == "kropina") return f == Family::Kropina;
  if (check == "bimetric") return f == Family::Bimetric;
  if (check == "aczel_finsler" || check == "aczel_lemma" ||
      check == "aczel_refinements")
    return f == Family::Stationary;
  if (check == "mth_root_transfer")
    return f == Family::PPseudoNorm || f == Family::BerwaldMoor ||
           f == Family::Bimetric;
  if (check == "degenerate_equality") return f == Family::DegenerateMinkowski;
  return false;
}

CampaignFile parse_campaign_file(const Json& j) {
  if (!j.is_object())
    throw parse_error("campaign manifest: must be an object");
  expect_fields(j, "campaign manifest", {"runs"}, {"output"});
  const Json& jr = j.at("runs");
  if (!jr.is_array() || jr.empty())
    throw parse_error("campaign manifest: 'runs' must be a non-empty array");
  CampaignFile file;
  for (std::size_t i = 0; i < jr.size(); ++i)
    file.runs.push_back(parse_run(jr[i], i));
  if (j.contains("output")) {
    if (!j.at("output").is_string())
      throw parse_error("campaign manifest: 'output' must be a string");
    file.output = j.at("output").get<std::string>();
  }
  return file;
}

CampaignFile load_campaign_file(const std::string& path) {
  return parse_campaign_file(load_json_file(path));
}

CampaignReport run_campaign(const CampaignFile& file) {
  const auto t0 = std::chrono::steady_clock::now();
  CampaignReport report;
  for (std::size_t r = 0; r < file.runs.size(); ++r) {
    const RunManifest& run = file.runs[r];
    const std::string label = "run " + std::to_string(r) + " family '" +
                              std::string(family_name(run.spec.family())) +
                              "'";
    RunReport out;
    out.spec_json = norm_spec_json(run.spec);
    out.sample = run.sample;
    out.tolerances = run.tolerances;

    const bool want_pairs = std::any_of(run.checks.begin(), run.checks.end(),
                                        [](const std::string& c) { return needs_pairs(c); });
    const bool want_singles = std::any_of(run.checks.begin(), run.checks.end(),
                                          [](const std::string& c) { return needs_singles(c); });
    std::vector<SamplePair> pairs;
    std::vector<Vector> singles;
    try {
      if (want_pairs) pairs = sample_pairs(run.spec, run.sample);
      if (want_singles) singles = sample_domain(run.spec, run.sample);
    } catch (const sampling_error& e) {
      throw sampling_error(label + ": " + e.what());
    }

    for (const std::string& check : run.checks) {
      try {
        std::vector<CheckRow> rows = run_one_check(run, check, pairs, singles);
        for (CheckRow& row : rows) {
          report.pass = report.pass && row.pass();
          out.rows.push_back(std::move(row));
        }
      } catch (const internal_error& e) {
        throw internal_error(label + " check '" + check + "': " + e.what());
      } catch (const sampling_error& e) {
        throw sampling_error(label + " check '" + check + "': " + e.what());
      }
    }
    report.runs.push_back(std::move(out));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

Json campaign_report_json(const CampaignReport& report) {
  Json j = Json::object();
  j["pass"] = report.pass;
  Json runs = Json::array();
  for (const RunReport& run : report.runs) {
    Json r = Json::object();
    r["spec"] = run.spec_json;
    Json s = Json::object();
    s["seed"] = run.sample.seed;
    s["count"] = run.sample.count;
    s["margin"] = run.sample.margin;
    s["scale_range"] =
        Json::array({run.sample.scale_range.min, run.sample.scale_range.max});
    s["collinear_fraction"] = run.sample.collinear_fraction;
    r["sample"] = std::move(s);
    r["tolerances"] = run.tolerances;
    Json rows = Json::array();
    for (const CheckRow& row : run.rows) rows.push_back(row_json(row));
    r["checks"] = std::move(rows);
    runs.push_back(std::move(r));
  }
  j["runs"] = std::move(runs);
  return j;
}

std::string campaign_report_table(const CampaignReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(30) << "run" << std::setw(28) << "check"
      << std::right << std::setw(8) << "count" << std::setw(6) << "viol"
      << std::setw(7) << "eq" << std::setw(7) << "coll" << std::setw(14)
      << "min_slack"
      << "  result" << '\n';
  std::size_t n_rows = 0;
  for (std::size_t r = 0; r < report.runs.size(); ++r) {
    const RunReport& run = report.runs[r];
    const std::string label =
        std::to_string(r) + ":" + run.spec_json.at("family").get<std::string>() +
        "(d=" + std::to_string(run.spec_json.at("dim").get<long long>()) + ")";
    for (const CheckRow& row : run.rows) {
      char slack[32];
      std::snprintf(slack, sizeof slack, "%.3e", row.min_slack);
      out << std::left << std::setw(30) << label << std::setw(28) << row.check
          << std::right << std::setw(8) << row.count << std::setw(6)
          << row.violations << std::setw(7) << row.equality_cases
          << std::setw(7) << row.collinear_equality_cases << std::setw(14)
          << slack << "  " << (row.pass() ? "ok" : "FAIL") << '\n';
      ++n_rows;
    }
  }
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.2f", report.wall_seconds);
  out << "campaign: " << (report.pass ? "PASS" : "FAIL") << ", "
      << report.runs.size() << " runs, " << n_rows << " check rows, " << wall
      << " s wall" << '\n';
  return out.str();
}

Json ineq_report_json(const IneqReport& rep) {
  Json j = Json::object();
  j["name"] = rep.name;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["slack"] = rep.slack;
  j["verdict"] = std::string(to_string(rep.verdict));
  j["strict_expected"] = rep.strict_expected;
  j["collinear"] = rep.collinear;
  j["tol_used"] = rep.tol_used;
  return j;
}

}  // namespace lf
