#include "bregcut/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "bregcut/core.hpp"
#include "bregcut/rng.hpp"
#include "json.hpp"

namespace bregcut {

const char* to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kNone:
      return "none";
    case NoiseKind::kGaussian:
      return "gaussian";
    case NoiseKind::kUniform:
      return "uniform";
  }
  throw std::logic_error("to_string: unknown noise kind");
}

NoiseKind noise_kind_from_string(const std::string& name) {
  if (name == "none") return NoiseKind::kNone;
  if (name == "gaussian") return NoiseKind::kGaussian;
  if (name == "uniform") return NoiseKind::kUniform;
  throw std::invalid_argument("unknown noise kind: " + name);
}

ProblemInstance generate_instance(std::size_t m, std::size_t n,
                                  std::size_t sparsity, NoiseKind kind,
                                  double noise_scale, std::uint64_t seed) {
  if (m == 0 || n == 0) {
    throw std::invalid_argument("generate_instance: dimensions must be positive");
  }
  if (sparsity == 0 || sparsity > n) {
    throw std::invalid_argument("generate_instance: need 0 < sparsity <= n");
  }
  if (noise_scale < 0.0 || !std::isfinite(noise_scale)) {
    throw std::invalid_argument("generate_instance: bad noise scale");
  }

  CounterRng rng(seed);

  Vec entries(m * n);
  for (double& e : entries) e = rng.normal();

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < sparsity; ++i) {
    const std::size_t j = i + rng.uniform_index(n - i);
    std::swap(idx[i], idx[j]);
  }
  std::vector<std::size_t> support(idx.begin(), idx.begin() + sparsity);
  std::sort(support.begin(), support.end());

  Vec x_true = zeros(n);
  for (std::size_t pos : support) {
    const double sign = rng.uniform01() < 0.5 ? 1.0 : -1.0;
    x_true[pos] = sign * (1.0 + std::abs(rng.normal()));
  }

  ProblemInstance inst{DenseMatrix(m, n, std::move(entries)),
                       std::move(x_true),
                       {},
                       {},
                       kind,
                       0.0,
                       0.0,
                       seed};
  inst.b_clean = inst.a.apply(inst.x_true);
  inst.b_obs = inst.b_clean;

  if (kind == NoiseKind::kGaussian) {
    Vec raw(m);
    for (double& e : raw) e = rng.normal();
    for (std::size_t i = 0; i < m; ++i) inst.b_obs[i] += raw[i];
    inst.sigma = noise_scale * norm2(raw);
  } else if (kind == NoiseKind::kUniform) {
    Vec raw(m);
    for (double& e : raw) e = rng.uniform(-1.0, 1.0);
    for (std::size_t i = 0; i < m; ++i) inst.b_obs[i] += raw[i];
    inst.sigma = noise_scale * norm_inf(raw);
  }

  inst.lambda = norm1(inst.x_true);
  return inst;
}

Metrics metrics(const ProblemInstance& instance, const Vec& x,
                const ConvexSetQ& q) {
  if (x.size() != instance.x_true.size()) {
    throw std::invalid_argument("metrics: size mismatch");
  }
  Metrics out;
  out.recon_err = norm2(subtract(x, instance.x_true));
  out.omega_val = instance.lambda * norm1(x) + 0.5 * dot(x, x);
  out.feas = set_distance(q, instance.a.apply(x));
  return out;
}

Vec oracle_bregman_projection(const Kernel& kernel, const Vec& x_star,
                              const Halfspace& h, std::size_t grid_points) {
  if (grid_points < 2) {
    throw std::invalid_argument("oracle_bregman_projection: need >= 2 grid points");
  }
  const double a2 = dot(h.a, h.a);
  if (a2 == 0.0) {
    throw std::invalid_argument("oracle_bregman_projection: degenerate halfspace");
  }
  const Vec x = kernel.mirror_map(x_star);
  const double violation = dot(h.a, x) - h.beta;
  if (violation <= 0.0) return x;  // already inside: t = 0 candidate wins

  // Cuts built from a gradient separate x by exactly ||a||^2 / L, so the
  // violation recovers the scan interval [0, 2 mu / L] from the cut itself.
  const double t_hi = 2.0 * kernel.mu() * violation / a2;

  const auto candidate = [&](double t) {
    return kernel.mirror_map(add_scaled(x_star, -t, h.a));
  };
  // Bregman distance D(y, x) along the path, +infinity outside the
  // halfspace but sloped toward it so the refinement stays unimodal.
  const auto scored = [&](double t) {
    const Vec y = candidate(t);
    if (contains(h, y)) return bregman_distance(kernel, y, x_star);
    return 1e100 * (1.0 + (dot(h.a, y) - h.beta));
  };

  double best_t = -1.0;
  double best_d = std::numeric_limits<double>::infinity();
  const double spacing = t_hi / static_cast<double>(grid_points - 1);
  for (std::size_t j = 0; j < grid_points; ++j) {
    const double t = spacing * static_cast<double>(j);
    const Vec y = candidate(t);
    if (!contains(h, y)) continue;
    const double d = bregman_distance(kernel, y, x_star);
    if (d < best_d) {
      best_d = d;
      best_t = t;
    }
  }
  if (best_t < 0.0) {
    throw std::runtime_error(
        "oracle_bregman_projection: no feasible candidate on grid");
  }

  // Golden-section refinement of the bracket around the best grid point.
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = std::max(0.0, best_t - spacing);
  double hi = std::min(t_hi, best_t + spacing);
  double t1 = hi - golden * (hi - lo);
  double t2 = lo + golden * (hi - lo);
  double f1 = scored(t1);
  double f2 = scored(t2);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * t_hi; ++it) {
    if (f1 <= f2) {
      hi = t2;
      t2 = t1;
      f2 = f1;
      t1 = hi - golden * (hi - lo);
      f1 = scored(t1);
    } else {
      lo = t1;
      t1 = t2;
      f1 = f2;
      t2 = lo + golden * (hi - lo);
      f2 = scored(t2);
    }
  }
  for (double t : {t1, t2, lo, hi}) {
    const Vec y = candidate(t);
    if (!contains(h, y)) continue;
    const double d = bregman_distance(kernel, y, x_star);
    if (d < best_d) {
      best_d = d;
      best_t = t;
    }
  }
  return candidate(best_t);
}

namespace {

std::optional<double> column_value(const IterationRecord& rec,
                                   const std::string& column) {
  if (column == "t_k") return rec.t_k;
  if (column == "grad_norm") return rec.grad_norm;
  if (column == "f_val") return rec.f_val;
  if (column == "omega_val") return rec.omega_val;
  if (column == "feas") return rec.feas;
  if (column == "recon_err") return rec.recon_err;
  if (column == "bregman_to_feasible") return rec.bregman_to_feasible;
  throw std::invalid_argument("unknown trace column: " + column);
}

}  // namespace

RateFit fit_linear_rate(const std::vector<IterationRecord>& trace,
                        const std::string& column, std::size_t start,
                        std::size_t end) {
  std::vector<double> ks;
  std::vector<double> logs;
  for (const IterationRecord& rec : trace) {
    if (rec.k < start || rec.k > end) continue;
    const std::optional<double> v = column_value(rec, column);
    if (!v) {
      throw std::domain_error("fit_linear_rate: missing value in window");
    }
    if (!(*v > 0.0)) {
      throw std::domain_error("fit_linear_rate: nonpositive value in window");
    }
    ks.push_back(static_cast<double>(rec.k));
    logs.push_back(std::log(*v));
  }
  if (ks.size() < 2) {
    throw std::invalid_argument("fit_linear_rate: window has fewer than 2 rows");
  }

  const double n = static_cast<double>(ks.size());
  double mean_k = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    mean_k += ks[i];
    mean_y += logs[i];
  }
  mean_k /= n;
  mean_y /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double dk = ks[i] - mean_k;
    const double dy = logs[i] - mean_y;
    sxx += dk * dk;
    sxy += dk * dy;
    syy += dy * dy;
  }

  RateFit fit;
  fit.slope = sxy / sxx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double pred = mean_y + fit.slope * (ks[i] - mean_k);
    const double e = logs[i] - pred;
    ss_res += e * e;
  }
  if (syy <= 1e-30) {
    fit.r_squared = ss_res <= 1e-30 ? 1.0 : 0.0;
  } else {
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  return fit;
}

namespace {

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& cell, const std::string& path) {
  double v = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
    throw IoError("malformed number in " + path + ": '" + cell + "'");
  }
  return v;
}

constexpr const char* kTraceHeader =
    "k,t_k,grad_norm,f_val,omega_val,feas,recon_err,bregman_to_feasible";

}  // namespace

void write_trace_csv(const std::vector<IterationRecord>& trace,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << kTraceHeader << '\n';
  for (const IterationRecord& rec : trace) {
    out << rec.k << ',' << shortest(rec.t_k) << ',' << shortest(rec.grad_norm)
        << ',' << shortest(rec.f_val) << ',' << shortest(rec.omega_val) << ','
        << shortest(rec.feas) << ',';
    if (rec.recon_err) out << shortest(*rec.recon_err);
    out << ',';
    if (rec.bregman_to_feasible) out << shortest(*rec.bregman_to_feasible);
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

std::vector<IterationRecord> read_trace_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw IoError("bad trace header in " + path);
  }
  std::vector<IterationRecord> trace;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (cells.size() != 8) throw IoError("bad trace row in " + path);
    IterationRecord rec;
    rec.k = static_cast<std::size_t>(parse_double(cells[0], path));
    rec.t_k = parse_double(cells[1], path);
    rec.grad_norm = parse_double(cells[2], path);
    rec.f_val = parse_double(cells[3], path);
    rec.omega_val = parse_double(cells[4], path);
    rec.feas = parse_double(cells[5], path);
    if (!cells[6].empty()) rec.recon_err = parse_double(cells[6], path);
    if (!cells[7].empty()) rec.bregman_to_feasible = parse_double(cells[7], path);
    trace.push_back(std::move(rec));
  }
  return trace;
}

void save_problem(const ProblemInstance& instance, const std::string& path) {
  nlohmann::ordered_json j;
  j["m"] = instance.a.rows();
  j["n"] = instance.a.cols();
  j["seed"] = instance.seed;
  j["lambda"] = instance.lambda;
  j["sigma"] = instance.sigma;
  j["noise_kind"] = to_string(instance.noise);
  j["A"] = instance.a.entries();
  j["x_true"] = instance.x_true;
  j["b_clean"] = instance.b_clean;
  j["b_obs"] = instance.b_obs;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

ProblemInstance load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed problem file " + path + ": " + e.what());
  }
  try {
    const std::size_t m = j.at("m").get<std::size_t>();
    const std::size_t n = j.at("n").get<std::size_t>();
    ProblemInstance inst{
        DenseMatrix(m, n, j.at("A").get<Vec>()),
        j.at("x_true").get<Vec>(),
        j.at("b_clean").get<Vec>(),
        j.at("b_obs").get<Vec>(),
        noise_kind_from_string(j.at("noise_kind").get<std::string>()),
        j.at("sigma").get<double>(),
        j.at("lambda").get<double>(),
        j.at("seed").get<std::uint64_t>()};
    if (inst.x_true.size() != n || inst.b_clean.size() != m ||
        inst.b_obs.size() != m) {
      throw IoError("inconsistent dimensions in " + path);
    }
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed problem file " + path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError("malformed problem file " + path + ": " + e.what());
  }
}

}  // namespace bregcut
