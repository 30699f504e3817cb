#include "lf/sampling.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "lf/json_io.hpp"

namespace lf {
namespace rng {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::uint64_t Substream::next_u64() {
  ++counter;
  return mix64(key + 0x9E3779B97F4A7C15ull * counter);
}

double Substream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Substream::next_in(double lo, double hi) {
  return lo + (hi - lo) * next_unit();
}

Substream substream(std::uint64_t seed, std::string_view name, std::uint64_t index) {
  return Substream{mix64(seed ^ fnv1a(name)), index << 24};
}

}  // namespace rng

void validate(const SampleConfig& cfg) {
  if (cfg.count < 1) throw argument_error("sample config: count must be >= 1");
  if (!(cfg.margin >= 0.0 && cfg.margin < 0.5))
    throw argument_error("sample config: margin must lie in [0, 0.5)");
  if (!(cfg.scale_range.min > 0.0 && cfg.scale_range.min <= cfg.scale_range.max &&
        std::isfinite(cfg.scale_range.max)))
    throw argument_error("sample config: scale range must satisfy 0 < min <= max");
  if (!(cfg.collinear_fraction >= 0.0 && cfg.collinear_fraction <= 1.0))
    throw argument_error("sample config: collinear fraction must lie in [0, 1]");
}

namespace {

constexpr int kAttemptBudget = 20000;

// Constructions aim slightly inside the requested margin so round-off in the
// membership test cannot reject a sample sitting exactly on the margin.
double padded(double margin) { return margin * 1.05 + 0.005; }

// Components in [lo, 1] with lo above the margin keep every ratio
// v_i / |v|_inf clear of the orthant margin.
void fill_orthant(rng::Substream& rs, double margin, Vector& v) {
  const double lo = std::max(0.02, margin * 1.1);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rs.next_in(lo, 1.0);
}

// Random direction on the Euclidean unit sphere of dimension n; retries the
// (measure-zero) near-origin draws.
bool unit_direction(rng::Substream& rs, Eigen::Index n, Vector& d) {
  d.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = rs.next_in(-1.0, 1.0);
  const double norm = d.norm();
  if (norm < 1e-6) return false;
  d /= norm;
  return true;
}

// Eigen-frame data for sampling inside a Lorentzian cone: the future axis t
// with g(t,t) = 1 and the g-negative eigenvectors with their magnitudes.
struct LorentzFrame {
  Vector axis;
  Matrix neg_dirs;
  Vector neg_mags;
};

LorentzFrame lorentz_frame(const Matrix& g, const Vector& axis) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(g);
  if (solver.info() != Eigen::Success)
    throw internal_error("sampling: eigensolver did not converge");
  const Eigen::Index n = g.rows();
  LorentzFrame frame;
  frame.axis = axis;
  frame.neg_dirs = solver.eigenvectors().leftCols(n - 1);
  frame.neg_mags = (-solver.eigenvalues().head(n - 1)).cwiseMax(0.0);
  return frame;
}

// v = t + y with g(y,y) = -rho^2, so g(v,v) = 1 - rho^2 and g(v,t) = 1.
bool lorentz_cone_point(rng::Substream& rs, const LorentzFrame& frame,
                        double margin, Vector& v) {
  const double rho_max = std::sqrt(std::max(0.0, 1.0 - padded(margin)));
  const double rho = rs.next_in(0.0, rho_max);
  Vector d;
  if (!unit_direction(rs, frame.neg_dirs.cols(), d)) return false;
  const double weight = std::sqrt(frame.neg_mags.dot(d.cwiseAbs2()));
  if (weight < 1e-9) return false;
  v = frame.axis + frame.neg_dirs * ((rho / weight) * d);
  return true;
}

// One raw interior point per family. The margin inequalities of
// domain_contains are all scale-free, so the later rescale preserves them;
// the caller still re-checks and retries on any failure.
bool construct_interior(const NormSpec& spec, double margin, rng::Substream& rs,
                        const LorentzFrame* frame, Vector& v) {
  const Eigen::Index dim = spec.dim();
  v.resize(dim);
  switch (spec.family()) {
    case Family::MinkowskiBilinear:
      return lorentz_cone_point(rs, *frame, margin, v);
    case Family::DegenerateMinkowski: {
      const int k = spec.degenerate_minkowski_params().k;
      const double rho_max = std::sqrt(std::max(0.0, 1.0 - padded(margin)));
      const double rho = rs.next_in(0.0, rho_max);
      Vector d;
      if (!unit_direction(rs, k, d)) return false;
      v(0) = 1.0;
      v.segment(1, k) = rho * d;
      for (Eigen::Index i = k + 1; i < dim; ++i) v(i) = rs.next_in(-1.0, 1.0);
      return true;
    }
    case Family::PPseudoNorm: {
      const double p = spec.p_pseudo_params().p;
      const Eigen::Index n = dim - 1;
      const double lo = std::max(0.02, margin * 1.1);
      const double hi =
          std::pow((1.0 - padded(margin)) / static_cast<double>(n), 1.0 / p);
      v(0) = 1.0;
      for (Eigen::Index a = 1; a < dim; ++a) v(a) = rs.next_in(lo, hi);
      return hi > lo;
    }
    case Family::EuclideanP:
    case Family::BerwaldMoor:
    case Family::WeightedGeometric:
      fill_orthant(rs, margin, v);
      return true;
    case Family::Bimetric:
    case Family::Kropina: {
      const double rho_max = std::sqrt(std::max(0.0, 1.0 - padded(margin)));
      const double rho = rs.next_in(0.0, rho_max);
      Vector d;
      if (!unit_direction(rs, dim - 1, d)) return false;
      v(0) = 1.0;
      v.tail(dim - 1) = rho * d;
      return true;
    }
    case Family::Stationary: {
      const auto& base = *spec.stationary_params().base;
      Vector x;
      if (!construct_interior(base, margin, rs, nullptr, x)) return false;
      const double fb = evaluate(base, x);
      const double xi = rs.next_in(0.01, 1.0);
      v(0) = fb / (1.0 - padded(margin)) * (1.0 + xi);
      v.tail(dim - 1) = x;
      return true;
    }
  }
  throw internal_error("sampling: unhandled family");
}

}  // namespace

Vector sample_vector(const NormSpec& spec, const SampleConfig& cfg,
                     std::size_t index, std::string_view stream) {
  validate(cfg);
  LorentzFrame frame;
  if (spec.family() == Family::MinkowskiBilinear) {
    const auto& par = spec.minkowski_params();
    frame = lorentz_frame(par.g.m, par.future_axis);
  }
  rng::Substream rs = rng::substream(cfg.seed, stream, index);
  Vector v;
  for (int attempt = 0; attempt < kAttemptBudget; ++attempt) {
    if (!construct_interior(spec, cfg.margin, rs, &frame, v)) continue;
    if (!domain_contains(spec, v, cfg.margin)) continue;
    const double target = rs.next_in(cfg.scale_range.min, cfg.scale_range.max);
    v *= target / evaluate(spec, v);
    if (domain_contains(spec, v, cfg.margin)) return v;
  }
  std::ostringstream os;
  os << "sampling exhausted for family '" << family_name(spec.family())
     << "' at sample index " << index;
  throw sampling_error(os.str());
}

std::vector<Vector> sample_domain(const NormSpec& spec, const SampleConfig& cfg) {
  validate(cfg);
  std::vector<Vector> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i)
    out.push_back(sample_vector(spec, cfg, i, "v"));
  return out;
}

std::vector<SamplePair> sample_pairs(const NormSpec& spec, const SampleConfig& cfg) {
  validate(cfg);
  const std::size_t stride =
      cfg.collinear_fraction > 0.0
          ? std::max<std::size_t>(
                1, static_cast<std::size_t>(std::llround(1.0 / cfg.collinear_fraction)))
          : 0;
  std::vector<SamplePair> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    SamplePair pair;
    pair.v = sample_vector(spec, cfg, i, "v");
    if (stride != 0 && i % stride == 0) {
      rng::Substream rs = rng::substream(cfg.seed, "w", i);
      pair.w = rs.next_in(0.5, 2.0) * pair.v;
      pair.collinear = true;
    } else {
      // Keep independent draws a minimum normalized distance from the ray of
      // v. Near-parallel pairs put strict inequalities inside the equality
      // verdict band while failing the collinearity test, which would make
      // the equality-implies-collinear property flaky at large sample counts.
      const Vector unit_v = pair.v / evaluate(spec, pair.v);
      pair.w = sample_vector(spec, cfg, i, "w");
      for (int retry = 1; retry <= 32; ++retry) {
        const Vector unit_w = pair.w / evaluate(spec, pair.w);
        if ((unit_v - unit_w).cwiseAbs().maxCoeff() > 1e-3) break;
        if (retry == 32)
          throw sampling_error("sampling exhausted for family '" +
                               std::string(family_name(spec.family())) +
                               "' at sample index " + std::to_string(i) +
                               ": cannot separate pair from the collinear set");
        pair.w = sample_vector(spec, cfg, i, "w#" + std::to_string(retry));
      }
    }
    out.push_back(std::move(pair));
  }
  return out;
}

namespace {

Json vector_record(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

}  // namespace

std::string replay_lines(const SampleConfig& cfg, const std::vector<Vector>& samples) {
  std::string out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Json rec;
    rec["index"] = i;
    rec["seed"] = cfg.seed;
    rec["v"] = vector_record(samples[i]);
    out += dump_json(rec);
    out += '\n';
  }
  return out;
}

std::string replay_lines(const SampleConfig& cfg, const std::vector<SamplePair>& pairs) {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    Json rec;
    rec["index"] = i;
    rec["seed"] = cfg.seed;
    rec["v"] = vector_record(pairs[i].v);
    rec["w"] = vector_record(pairs[i].w);
    rec["collinear"] = pairs[i].collinear;
    out += dump_json(rec);
    out += '\n';
  }
  return out;
}

}  // namespace lf
