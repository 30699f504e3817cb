// lfnorm: evaluate catalog norms, run single inequality checks, or drive a
// verification campaign from a JSON manifest.
//
// Exit codes are a stable contract:
//   0 pass, 1 usage/parse, 2 domain, 3 violation, 4 internal/sampling.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lf/calculus.hpp"
#include "lf/campaign.hpp"
#include "lf/errors.hpp"

namespace {

using lf::Json;
using lf::Matrix;
using lf::NormSpec;
using lf::Vector;

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

lf::Vector parse_vector(const std::string& token) {
  std::string body = token;
  const auto eq = body.find('=');
  if (eq != std::string::npos) body = body.substr(eq + 1);
  std::string digits;
  for (char c : body)
    if (c != '(' && c != ')' && c != ' ') digits += c;
  std::vector<double> vals;
  std::size_t start = 0;
  try {
    while (start <= digits.size()) {
      const auto comma = digits.find(',', start);
      const std::string piece = digits.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      std::size_t used = 0;
      vals.push_back(std::stod(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } catch (const std::exception&) {
    throw lf::argument_error("cannot parse vector '" + token +
                             "'; expected forms: 2,1 or v=(2,1)");
  }
  Vector v(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = vals[i];
  return v;
}

Vector uniform_weights(Eigen::Index dim) {
  Vector w = Vector::Constant(dim, 1.0 / static_cast<double>(dim));
  w(0) += 1.0 - w.sum();  // force the exact-sum invariant
  return w;
}

Matrix default_bimetric_h(Eigen::Index dim) {
  Matrix h = -Matrix::Identity(dim, dim);
  h(0, 0) = 2.0;
  return h;
}

bool is_alias(const std::string& token) {
  static const char* names[] = {
      "minkowski",      "degenerate_minkowski", "p_pseudo_norm",
      "euclidean",      "euclidean_p",          "berwald_moor",
      "weighted_geometric", "bimetric",         "kropina",
      "stationary"};
  for (const char* n : names)
    if (token == n) return true;
  return false;
}

bool is_spec_token(const std::string& token) {
  return std::filesystem::exists(token) || is_alias(token);
}

NormSpec resolve_spec(const std::string& token, Eigen::Index dim, double p,
                      int k) {
  if (std::filesystem::exists(token))
    return lf::parse_norm_spec(lf::load_json_file(token));
  if (token == "minkowski") return NormSpec::minkowski_eta(dim);
  if (token == "degenerate_minkowski") return NormSpec::degenerate_minkowski(dim, k);
  if (token == "p_pseudo_norm") return NormSpec::p_pseudo_norm(dim, p);
  if (token == "euclidean" || token == "euclidean_p")
    return NormSpec::euclidean_p(dim, p);
  if (token == "berwald_moor") return NormSpec::berwald_moor(dim);
  if (token == "weighted_geometric")
    return NormSpec::weighted_geometric(uniform_weights(dim));
  if (token == "bimetric") return NormSpec::bimetric(default_bimetric_h(dim));
  if (token == "kropina") return NormSpec::kropina(dim);
  if (token == "stationary")
    return NormSpec::stationary(NormSpec::euclidean_p(dim - 1, 2.0));
  throw lf::argument_error(
      "unknown norm spec '" + token +
      "': not a file and not a builtin alias (minkowski, degenerate_minkowski, "
      "p_pseudo_norm, euclidean_p, berwald_moor, weighted_geometric, bimetric, "
      "kropina, stationary)");
}

int cmd_eval(const std::string& spec_token, const std::string& vec_token,
             double p, int k) {
  const Vector v = parse_vector(vec_token);
  const NormSpec spec = resolve_spec(spec_token, v.size(), p, k);
  const double f = lf::evaluate(spec, v);
  const Vector grad = lf::gradient(spec, v);
  const lf::SymTensor gv = lf::fundamental_tensor(spec, v);
  const lf::Signature sig = lf::classify_signature(gv);

  std::cout << "F = " << fmt12(f) << '\n';
  std::cout << "grad = [";
  for (Eigen::Index i = 0; i < grad.size(); ++i)
    std::cout << (i ? ", " : "") << fmt12(grad(i));
  std::cout << "]\n";
  std::cout << "g_v = [";
  for (Eigen::Index r = 0; r < gv.m.rows(); ++r) {
    std::cout << (r ? ", [" : "[");
    for (Eigen::Index c = 0; c < gv.m.cols(); ++c)
      std::cout << (c ? ", " : "") << fmt12(gv.m(r, c));
    std::cout << "]";
  }
  std::cout << "]\n";
  std::cout << "signature = " << lf::to_string(sig.cls) << " (" << sig.n_pos
            << "," << sig.n_neg << "," << sig.n_zero << ")\n";
  return 0;
}

const std::vector<std::string>& cli_check_names() {
  static const std::vector<std::string> names = {
      "fundamental",       "reverse_triangle", "scaled_refinement",
      "integral_refinement", "aczel",          "popoviciu",
      "bellman",           "am_gm",            "weighted_am_gm",
      "holder_minkowski",  "kropina",          "bimetric",
      "aczel_finsler",     "aczel_lemma",      "aczel_refinements"};
  return names;
}

struct CheckArgs {
  std::string name;
  std::vector<std::string> rest;
  double p = 2.0;
  int k = 1;
  double a = 1.0;
  double b = 2.0;
  int panels = 64;
  std::string weights;
  std::optional<double> tol;
};

void expect_vectors(const std::vector<Vector>& vecs, std::size_t n,
                    const std::string& name) {
  if (vecs.size() != n)
    throw lf::argument_error("check '" + name + "' expects " +
                             std::to_string(n) + " vector argument(s); got " +
                             std::to_string(vecs.size()));
}

int cmd_check(const CheckArgs& args) {
  const auto& names = cli_check_names();
  if (std::find(names.begin(), names.end(), args.name) == names.end()) {
    std::string all;
    for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
    throw lf::argument_error("unknown check '" + args.name +
                             "'; valid names: " + all);
  }

  std::optional<std::string> spec_token;
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < args.rest.size(); ++i) {
    if (i == 0 && is_spec_token(args.rest[i]))
      spec_token = args.rest[i];
    else
      vecs.push_back(parse_vector(args.rest[i]));
  }
  if (vecs.empty())
    throw lf::argument_error("check '" + args.name +
                             "' needs at least one vector argument");
  const Eigen::Index dim = vecs[0].size();

  const lf::CheckOptions opt{args.tol};
  std::vector<lf::IneqReport> reports;
  Json extra;

  const auto machinery_spec = [&](const char* fallback_alias) {
    return resolve_spec(spec_token.value_or(fallback_alias), dim, args.p,
                        args.k);
  };
  const auto finsler_base = [&]() {
    if (!spec_token) return NormSpec::euclidean_p(dim - 1, args.p);
    NormSpec s = resolve_spec(*spec_token, dim, args.p, args.k);
    if (s.family() == lf::Family::Stationary)
      return NormSpec(*s.stationary_params().base);
    return s;
  };

  if (args.name == "fundamental" || args.name == "reverse_triangle") {
    expect_vectors(vecs, 2, args.name);
    const NormSpec spec = machinery_spec("minkowski");
    reports.push_back(args.name == "fundamental"
                          ? lf::check_fundamental(spec, vecs[0], vecs[1], opt)
                          : lf::check_reverse_triangle(spec, vecs[0], vecs[1], opt));
  } else if (args.name == "scaled_refinement") {
    expect_vectors(vecs, 2, args.name);
    const NormSpec spec = machinery_spec("minkowski");
    const auto pair =
        lf::check_scaled_refinement(spec, vecs[0], vecs[1], args.a, args.b, opt);
    reports.push_back(pair.first);
    reports.push_back(pair.second);
  } else if (args.name == "integral_refinement") {
    expect_vectors(vecs, 2, args.name);
    const NormSpec spec = machinery_spec("minkowski");
    const auto pair =
        lf::check_integral_refinement(spec, vecs[0], vecs[1], args.panels, opt);
    reports.push_back(pair.first);
    reports.push_back(pair.second);
  } else if (args.name == "aczel") {
    expect_vectors(vecs, 2, args.name);
    reports.push_back(lf::check_aczel_classical(vecs[0], vecs[1], opt));
  } else if (args.name == "popoviciu") {
    expect_vectors(vecs, 2, args.name);
    reports.push_back(lf::check_popoviciu(vecs[0], vecs[1], args.p, opt));
  } else if (args.name == "bellman") {
    expect_vectors(vecs, 2, args.name);
    reports.push_back(lf::check_bellman(vecs[0], vecs[1], args.p, opt));
  } else if (args.name == "am_gm") {
    expect_vectors(vecs, 1, args.name);
    reports.push_back(lf::check_am_gm(vecs[0], opt));
  } else if (args.name == "weighted_am_gm") {
    expect_vectors(vecs, 1, args.name);
    const Vector w = args.weights.empty() ? uniform_weights(dim)
                                          : parse_vector(args.weights);
    reports.push_back(lf::check_weighted_am_gm(w, vecs[0], opt));
  } else if (args.name == "holder_minkowski") {
    expect_vectors(vecs, 2, args.name);
    const auto pair = lf::check_holder_minkowski(vecs[0], vecs[1], args.p, opt);
    reports.push_back(pair.first);
    reports.push_back(pair.second);
  } else if (args.name == "kropina") {
    expect_vectors(vecs, 2, args.name);
    reports.push_back(lf::check_kropina(vecs[0], vecs[1], opt));
  } else if (args.name == "bimetric") {
    expect_vectors(vecs, 2, args.name);
    Matrix h = default_bimetric_h(dim);
    if (spec_token) {
      const NormSpec s = resolve_spec(*spec_token, dim, args.p, args.k);
      if (s.family() != lf::Family::Bimetric)
        throw lf::argument_error("check 'bimetric' needs a bimetric spec");
      h = s.bimetric_params().h.m;
    }
    reports.push_back(lf::check_bimetric(vecs[0], vecs[1], h, opt));
  } else if (args.name == "aczel_finsler") {
    expect_vectors(vecs, 2, args.name);
    reports.push_back(lf::finslerian_aczel(finsler_base(), vecs[0], vecs[1], opt));
  } else if (args.name == "aczel_refinements") {
    expect_vectors(vecs, 2, args.name);
    const auto pair = lf::aczel_refinements(finsler_base(), vecs[0], vecs[1], opt);
    reports.push_back(pair.first);
    reports.push_back(pair.second);
  } else {  // aczel_lemma
    expect_vectors(vecs, 2, args.name);
    const NormSpec base = finsler_base();
    const double dev = lf::aczel_lemma_identity(base, vecs[0], vecs[1]);
    const lf::IneqReport ref = lf::finslerian_aczel(base, vecs[0], vecs[1]);
    const double allowed = args.tol.value_or(
        1e-10 * (1.0 + std::abs(ref.lhs) + std::abs(ref.rhs)));
    extra = Json::object();
    extra["name"] = "aczel_lemma";
    extra["max_deviation"] = dev;
    extra["allowed"] = allowed;
    extra["verdict"] = dev <= allowed ? "Holds" : "Violated";
  }

  bool violated = false;
  if (!extra.is_null()) {
    std::cout << lf::dump_json(extra, 2) << '\n';
    violated = extra["verdict"] == "Violated";
  } else if (reports.size() == 1) {
    std::cout << lf::dump_json(lf::ineq_report_json(reports[0]), 2) << '\n';
  } else {
    Json arr = Json::array();
    for (const auto& rep : reports) arr.push_back(lf::ineq_report_json(rep));
    std::cout << lf::dump_json(arr, 2) << '\n';
  }
  for (const auto& rep : reports)
    violated = violated || rep.verdict == lf::Verdict::Violated;
  return violated ? 3 : 0;
}

int cmd_verify(const std::string& manifest_path,
               const std::optional<std::string>& out,
               const std::optional<std::uint64_t>& seed,
               const std::optional<double>& margin) {
  lf::CampaignFile file = lf::load_campaign_file(manifest_path);
  for (lf::RunManifest& run : file.runs) {
    if (seed) run.sample.seed = *seed;
    if (margin) run.sample.margin = *margin;
    lf::validate(run.sample);
  }
  const lf::CampaignReport report = lf::run_campaign(file);

  const std::string out_path =
      out ? *out : file.output.value_or("campaign-report.json");
  std::ofstream stream(out_path, std::ios::binary);
  if (!stream)
    throw lf::argument_error("cannot write report file: " + out_path);
  stream << lf::dump_json(lf::campaign_report_json(report), 2) << '\n';
  stream.close();

  std::cout << campaign_report_table(report);
  std::cout << "report: " << out_path << '\n';
  return report.pass ? 0 : 3;
}

int cmd_catalog() {
  for (const lf::CatalogEntry& entry : lf::catalog()) {
    std::cout << entry.name << '\n';
    std::cout << "  params:    " << entry.params << '\n';
    std::cout << "  domain:    " << entry.domain << '\n';
    std::cout << "  signature: " << entry.signature << '\n';
  }
  std::cout << "checks: ";
  const auto& checks = lf::known_checks();
  for (std::size_t i = 0; i < checks.size(); ++i)
    std::cout << (i ? ", " : "") << checks[i];
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorentz-Finsler norm catalog and inequality verifier"};
  app.require_subcommand(1);
  int rc = 0;

  auto* eval = app.add_subcommand("eval", "Evaluate F, gradient, fundamental tensor, signature");
  std::string eval_spec, eval_vec;
  double eval_p = 2.0;
  int eval_k = 1;
  eval->add_option("spec", eval_spec, "spec file or builtin alias")->required();
  eval->add_option("vector", eval_vec, "vector, e.g. 2,1 or v=(2,1)")->required();
  eval->add_option("--p", eval_p, "exponent for p-norm aliases");
  eval->add_option("--k", eval_k, "negative directions for degenerate_minkowski");
  eval->callback([&]() { rc = cmd_eval(eval_spec, eval_vec, eval_p, eval_k); });

  auto* check = app.add_subcommand("check", "Run one inequality check");
  CheckArgs cargs;
  check->add_option("name", cargs.name, "check name")->required();
  check->add_option("args", cargs.rest, "optional spec file/alias, then vectors")
      ->expected(-1);
  check->add_option("--p", cargs.p, "exponent parameter");
  check->add_option("--k", cargs.k, "negative directions for degenerate_minkowski");
  check->add_option("--a", cargs.a, "lower coefficient for scaled_refinement");
  check->add_option("--b", cargs.b, "upper coefficient for scaled_refinement");
  check->add_option("--panels", cargs.panels, "Simpson panels for integral_refinement");
  check->add_option("--weights", cargs.weights, "weights vector for weighted_am_gm");
  double tol_val = 0.0;
  auto* tol_opt = check->add_option("--tol", tol_val, "verdict tolerance override");
  check->callback([&]() {
    if (tol_opt->count() > 0) cargs.tol = tol_val;
    rc = cmd_check(cargs);
  });

  auto* verify = app.add_subcommand("verify", "Run a campaign manifest");
  std::string manifest;
  std::string out_val;
  std::uint64_t seed_val = 0;
  double margin_val = 0.0;
  verify->add_option("manifest", manifest, "campaign manifest JSON file")->required();
  auto* out_opt = verify->add_option("--out", out_val, "report file path");
  auto* seed_opt = verify->add_option("--seed", seed_val, "override every run's seed");
  auto* margin_opt = verify->add_option("--margin", margin_val, "override every run's margin");
  verify->callback([&]() {
    rc = cmd_verify(manifest,
                    out_opt->count() ? std::optional<std::string>(out_val)
                                     : std::nullopt,
                    seed_opt->count() ? std::optional<std::uint64_t>(seed_val)
                                      : std::nullopt,
                    margin_opt->count() ? std::optional<double>(margin_val)
                                        : std::nullopt);
  });

  auto* cat = app.add_subcommand("catalog", "List families, parameters, and checks");
  cat->callback([&]() { rc = cmd_catalog(); });

  try {
    app.parse(argc, argv);
    return rc;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const lf::domain_error& e) {
    std::cout << "domain: " << e.what() << '\n';
    return 2;
  } catch (const lf::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const lf::argument_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const lf::sampling_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const lf::internal_error& e) {
    std::cerr << "internal: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << '\n';
    return 4;
  }
}
