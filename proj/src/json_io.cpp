#include "lf/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lf {
namespace {

void expect_keys(const Json& obj, const char* where,
                 std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) throw parse_error(std::string(where) + ": expected an object");
  for (const char* key : required)
    if (!obj.contains(key))
      throw parse_error(std::string(where) + ": missing field '" + key + "'");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string& key = it.key();
    bool known = false;
    for (const char* k : required) known = known || key == k;
    for (const char* k : optional) known = known || key == k;
    if (!known)
      throw parse_error(std::string(where) + ": unknown field '" + key + "'");
  }
}

double number_at(const Json& j, const char* where) {
  if (!j.is_number()) throw parse_error(std::string(where) + ": expected a number");
  return j.get<double>();
}

Eigen::Index dim_at(const Json& j, const char* where) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    throw parse_error(std::string(where) + ": expected a positive integer");
  return static_cast<Eigen::Index>(j.get<long long>());
}

Vector vector_at(const Json& j, const char* where) {
  if (!j.is_array() || j.empty())
    throw parse_error(std::string(where) + ": expected a non-empty array of numbers");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = number_at(j[i], where);
  return v;
}

Matrix matrix_at(const Json& j, const char* where) {
  if (!j.is_array() || j.empty())
    throw parse_error(std::string(where) + ": expected an array of rows");
  const std::size_t n = j.size();
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n)
      throw parse_error(std::string(where) + ": expected a square matrix");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = number_at(j[r][c], where);
  }
  return m;
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

void dump_impl(const Json& j, std::string& out, int indent, int depth) {
  auto pad = [&](int d) {
    if (indent >= 0) {
      out += '\n';
      out.append(static_cast<std::size_t>(indent) * d, ' ');
    }
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        out += Json(it.key()).dump();
        out += indent >= 0 ? ": " : ":";
        dump_impl(it.value(), out, indent, depth + 1);
      }
      pad(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        dump_impl(item, out, indent, depth + 1);
      }
      pad(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) throw internal_error("format_double: value must be finite");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_impl(j, out, indent, 0);
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

NormSpec parse_norm_spec(const Json& j) {
  expect_keys(j, "norm spec", {"family", "dim", "params"});
  if (!j["family"].is_string()) throw parse_error("norm spec: 'family' must be a string");
  const std::string name = j["family"].get<std::string>();
  const auto family = family_from_name(name);
  if (!family) throw parse_error("norm spec: unknown family '" + name + "'");
  const Eigen::Index dim = dim_at(j["dim"], "norm spec 'dim'");
  const Json& params = j["params"];

  switch (*family) {
    case Family::MinkowskiBilinear: {
      expect_keys(params, "minkowski_bilinear params", {"g"});
      const Matrix g = matrix_at(params["g"], "minkowski_bilinear 'g'");
      if (g.rows() != dim)
        throw parse_error("minkowski_bilinear: 'g' dimension does not match 'dim'");
      return NormSpec::minkowski(g);
    }
    case Family::DegenerateMinkowski: {
      expect_keys(params, "degenerate_minkowski params", {"k"});
      if (!params["k"].is_number_integer())
        throw parse_error("degenerate_minkowski: 'k' must be an integer");
      return NormSpec::degenerate_minkowski(dim, params["k"].get<int>());
    }
    case Family::PPseudoNorm: {
      expect_keys(params, "p_pseudo_norm params", {"p"});
      return NormSpec::p_pseudo_norm(dim, number_at(params["p"], "p_pseudo_norm 'p'"));
    }
    case Family::EuclideanP: {
      expect_keys(params, "euclidean_p params", {"p"});
      return NormSpec::euclidean_p(dim, number_at(params["p"], "euclidean_p 'p'"));
    }
    case Family::BerwaldMoor: {
      expect_keys(params, "berwald_moor params", {});
      return NormSpec::berwald_moor(dim);
    }
    case Family::WeightedGeometric: {
      expect_keys(params, "weighted_geometric params", {"a"});
      const Vector a = vector_at(params["a"], "weighted_geometric 'a'");
      if (a.size() != dim)
        throw parse_error("weighted_geometric: 'a' length does not match 'dim'");
      return NormSpec::weighted_geometric(a);
    }
    case Family::Bimetric: {
      expect_keys(params, "bimetric params", {"h"});
      const Matrix h = matrix_at(params["h"], "bimetric 'h'");
      if (h.rows() != dim) throw parse_error("bimetric: 'h' dimension does not match 'dim'");
      return NormSpec::bimetric(h);
    }
    case Family::Kropina: {
      expect_keys(params, "kropina params", {});
      return NormSpec::kropina(dim);
    }
    case Family::Stationary: {
      expect_keys(params, "stationary params", {"base"});
      NormSpec base = parse_norm_spec(params["base"]);
      if (base.dim() != dim - 1)
        throw parse_error("stationary: base dimension must be dim - 1");
      return NormSpec::stationary(std::move(base));
    }
  }
  throw parse_error("norm spec: unknown family '" + name + "'");
}

NormSpec load_norm_spec(const std::string& path) {
  return parse_norm_spec(load_json_file(path));
}

Json norm_spec_json(const NormSpec& spec) {
  Json j;
  j["family"] = std::string(family_name(spec.family()));
  j["dim"] = static_cast<long long>(spec.dim());
  Json params = Json::object();
  switch (spec.family()) {
    case Family::MinkowskiBilinear:
      params["g"] = matrix_json(spec.minkowski_params().g.m);
      break;
    case Family::DegenerateMinkowski:
      params["k"] = spec.degenerate_minkowski_params().k;
      break;
    case Family::PPseudoNorm:
      params["p"] = spec.p_pseudo_params().p;
      break;
    case Family::EuclideanP:
      params["p"] = spec.euclidean_p_params().p;
      break;
    case Family::BerwaldMoor:
    case Family::Kropina:
      break;
    case Family::WeightedGeometric:
      params["a"] = vector_json(spec.weighted_geometric_params().weights);
      break;
    case Family::Bimetric:
      params["h"] = matrix_json(spec.bimetric_params().h.m);
      break;
    case Family::Stationary:
      params["base"] = norm_spec_json(*spec.stationary_params().base);
      break;
  }
  j["params"] = std::move(params);
  return j;
}

}  // namespace lf
