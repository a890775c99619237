// Copyright 2026 The Ricci Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ricci/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>

#include "json.hpp"
#include "ricci/errors.h"
#include "ricci/random.h"

namespace ricci {
namespace {

struct Moments {
  double mean = 0.0;
  double sd = 0.0;  // population
};

Moments PopulationMoments(std::span<const double> xs) {
  Moments m;
  if (xs.empty()) return m;
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.sd = std::sqrt(ss / static_cast<double>(xs.size()));
  return m;
}

double LogNormalPdf(double x, double mu, double sigma) {
  const double z = (x - mu) / sigma;
  return -0.5 * z * z - std::log(sigma) - 0.5 * std::log(2.0 * std::numbers::pi);
}

struct Components {
  double mu[2];
  double sigma[2];
  double weight[2];
};

struct EmRun {
  Components c{};
  bool degenerate = false;
  bool converged = false;
  int iterations = 0;
  double log_likelihood = -std::numeric_limits<double>::infinity();
  std::vector<double> trace;
};

// E-step: fills responsibilities of component 0, returns log-likelihood.
double EStep(std::span<const double> xs, const Components& c,
             std::vector<double>& resp) {
  double ll = 0.0;
  resp.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double a = std::log(c.weight[0]) + LogNormalPdf(xs[i], c.mu[0], c.sigma[0]);
    const double b = std::log(c.weight[1]) + LogNormalPdf(xs[i], c.mu[1], c.sigma[1]);
    const double hi = std::max(a, b);
    const double lse = hi + std::log(std::exp(a - hi) + std::exp(b - hi));
    resp[i] = std::exp(a - lse);
    ll += lse;
  }
  return ll;
}

EmRun RunEm(std::span<const double> xs, Components start, double sigma_floor,
            const MixtureOptions& opt) {
  EmRun run;
  run.c = start;
  std::vector<double> resp;
  const double n = static_cast<double>(xs.size());
  double prev = -std::numeric_limits<double>::infinity();
  for (int it = 1; it <= opt.max_iterations; ++it) {
    const double ll = EStep(xs, run.c, resp);
    run.trace.push_back(ll);
    run.iterations = it;
    if (std::abs(ll - prev) <= opt.tolerance * std::max(1.0, std::abs(ll))) {
      run.converged = true;
      break;
    }
    prev = ll;
    for (int k = 0; k < 2; ++k) {
      double w = 0.0, sx = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = k == 0 ? resp[i] : 1.0 - resp[i];
        w += r;
        sx += r * xs[i];
      }
      if (w / n < opt.min_weight || w <= 0.0) {
        run.degenerate = true;
        break;
      }
      const double mu = sx / w;
      double ss = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = k == 0 ? resp[i] : 1.0 - resp[i];
        ss += r * (xs[i] - mu) * (xs[i] - mu);
      }
      double sigma = std::sqrt(ss / w);
      if (sigma <= sigma_floor) {
        sigma = sigma_floor;
        run.degenerate = true;
      }
      run.c.mu[k] = mu;
      run.c.sigma[k] = sigma;
      run.c.weight[k] = w / n;
    }
    if (run.degenerate) break;
  }
  if (!run.degenerate) run.log_likelihood = EStep(xs, run.c, resp);
  return run;
}

// Optimal two-cluster split of sorted data (minimum within-cluster sum of
// squares); returns the size of the lower cluster.
std::size_t TwoMeansSplit(std::span<const double> sorted) {
  const std::size_t n = sorted.size();
  std::vector<double> s(n + 1, 0.0), s2(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    s[i + 1] = s[i] + sorted[i];
    s2[i + 1] = s2[i] + sorted[i] * sorted[i];
  }
  auto sse = [&](std::size_t a, std::size_t b) {
    const double cnt = static_cast<double>(b - a);
    const double sum = s[b] - s[a];
    return (s2[b] - s2[a]) - sum * sum / cnt;
  };
  std::size_t best = 1;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < n; ++k) {
    if (sorted[k] == sorted[k - 1]) continue;  // never split ties
    const double cost = sse(0, k) + sse(k, n);
    if (cost < best_cost) {
      best_cost = cost;
      best = k;
    }
  }
  return best;
}

}  // namespace

GapReport CurvatureGap(const CurvatureVector& cv, const Partition& truth) {
  std::vector<double> within, between;
  for (std::size_t i = 0; i < cv.size(); ++i) {
    const Edge& e = cv.edges[i];
    (truth.label(e.u) == truth.label(e.v) ? within : between).push_back(cv.values[i]);
  }
  GapReport r;
  r.within_count = within.size();
  r.between_count = between.size();
  const Moments w = PopulationMoments(within);
  const Moments b = PopulationMoments(between);
  r.kappa_within = w.mean;
  r.kappa_between = b.mean;
  r.sigma_within = w.sd;
  r.sigma_between = b.sd;
  r.pooled_sigma = std::sqrt(0.5 * (w.sd * w.sd + b.sd * b.sd));
  if (within.empty() || between.empty()) {
    throw DegenerateGapError("curvature gap needs both within and between edges", r);
  }
  if (!(r.pooled_sigma > 0.0)) {
    throw DegenerateGapError("curvature gap undefined: zero pooled deviation", r);
  }
  r.gap = std::abs(r.kappa_within - r.kappa_between) / r.pooled_sigma;
  return r;
}

double Pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ContractViolation("pearson: length mismatch");
  const Moments ma = PopulationMoments(a);
  const Moments mb = PopulationMoments(b);
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma.mean;
    const double db = b[i] - mb.mean;
    cov += da * db;
    va += da * da;
    vb += db * db;
  }
  if (!(va > 0.0) || !(vb > 0.0)) {
    throw InsufficientDataError("pearson: zero variance");
  }
  return std::clamp(cov / std::sqrt(va * vb), -1.0, 1.0);
}

double Pearson(const CurvatureVector& a, const CurvatureVector& b) {
  if (a.edges != b.edges) {
    throw ContractViolation("pearson: curvature vectors cover different edges");
  }
  return Pearson(std::span<const double>(a.values), std::span<const double>(b.values));
}

ThresholdFit FitTwoGaussians(std::span<const double> values, std::uint64_t seed,
                             const MixtureOptions& options) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> uniq = sorted;
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (sorted.empty()) throw InsufficientDataError("two-Gaussian fit of no values");
  if (uniq.size() == 1) {
    ThresholdFit fit;
    fit.mu1 = fit.mu2 = fit.delta = uniq.front();
    fit.weight1 = 1.0;
    return fit;
  }
  const double range = sorted.back() - sorted.front();
  const double sigma_floor = options.sigma_floor_fraction * range;
  const Moments all = PopulationMoments(sorted);

  const std::size_t split = TwoMeansSplit(sorted);
  const std::span<const double> lower(sorted.data(), split);
  const std::span<const double> upper(sorted.data() + split, sorted.size() - split);
  const Moments ml = PopulationMoments(lower);
  const Moments mu = PopulationMoments(upper);
  const double init_floor = std::max(sigma_floor, 0.1 * all.sd);

  std::vector<Components> starts;
  starts.push_back({{ml.mean, mu.mean},
                    {std::max(ml.sd, init_floor), std::max(mu.sd, init_floor)},
                    {static_cast<double>(lower.size()) / sorted.size(),
                     static_cast<double>(upper.size()) / sorted.size()}});
  StreamRng rng(seed, kMixtureStream);
  // Too few distinct values to pin down five parameters: two-means only.
  const bool too_few = uniq.size() < 4;
  if (too_few) starts.clear();
  for (int r = 0; !too_few && r < options.random_restarts; ++r) {
    double a = uniq[rng.Below(uniq.size())];
    double b = uniq[rng.Below(uniq.size())];
    while (b == a) b = uniq[rng.Below(uniq.size())];
    starts.push_back({{std::min(a, b), std::max(a, b)},
                      {0.5 * all.sd, 0.5 * all.sd},
                      {0.5, 0.5}});
  }

  const EmRun* best = nullptr;
  std::vector<EmRun> runs;
  runs.reserve(starts.size());
  for (const Components& s : starts) runs.push_back(RunEm(sorted, s, sigma_floor, options));
  for (const EmRun& run : runs) {
    if (run.degenerate) continue;
    if (!best || run.log_likelihood > best->log_likelihood) best = &run;
  }

  ThresholdFit fit;
  if (best == nullptr) {
    fit.mu1 = ml.mean;
    fit.mu2 = mu.mean;
    fit.sigma1 = std::max(ml.sd, sigma_floor);
    fit.sigma2 = std::max(mu.sd, sigma_floor);
    fit.weight1 = static_cast<double>(lower.size()) / sorted.size();
    fit.weight2 = 1.0 - fit.weight1;
    fit.delta = 0.5 * (ml.mean + mu.mean);
    fit.converged = false;
    if (!runs.empty()) {
      fit.iterations = runs.front().iterations;
      fit.log_likelihood_trace = runs.front().trace;
    }
    return fit;
  }

  int lo = best->c.mu[0] <= best->c.mu[1] ? 0 : 1;
  int hi = 1 - lo;
  fit.mu1 = best->c.mu[lo];
  fit.sigma1 = best->c.sigma[lo];
  fit.weight1 = best->c.weight[lo];
  fit.mu2 = best->c.mu[hi];
  fit.sigma2 = best->c.sigma[hi];
  fit.weight2 = best->c.weight[hi];
  fit.delta = (fit.sigma2 * fit.mu1 + fit.sigma1 * fit.mu2) / (fit.sigma1 + fit.sigma2);
  fit.converged = best->converged;
  fit.iterations = best->iterations;
  fit.log_likelihood = best->log_likelihood;
  fit.log_likelihood_trace = best->trace;
  return fit;
}

std::vector<HistogramBin> Histogram(std::span<const double> values, int bins) {
  if (values.empty()) throw InsufficientDataError("histogram of no values");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return Histogram(values, bins, *lo, *hi);
}

std::vector<HistogramBin> Histogram(std::span<const double> values, int bins,
                                    double lo, double hi) {
  if (bins < 1) throw ContractViolation("histogram needs at least one bin");
  if (values.empty()) throw InsufficientDataError("histogram of no values");
  // A degenerate range holds everything in one unit-width bin.
  if (!(hi > lo)) bins = 1;
  const double width = hi > lo ? (hi - lo) / bins : 1.0;
  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) out[b].lower = lo + b * width;
  for (double x : values) {
    auto b = static_cast<long long>(std::floor((x - lo) / width));
    b = std::clamp<long long>(b, 0, bins - 1);
    ++out[static_cast<std::size_t>(b)].count;
  }
  return out;
}

void WriteGapReportJson(const GapReport& r, std::ostream& out) {
  nlohmann::ordered_json j;
  j["kappa_within"] = RoundForOutput(r.kappa_within);
  j["kappa_between"] = RoundForOutput(r.kappa_between);
  j["sigma_within"] = RoundForOutput(r.sigma_within);
  j["sigma_between"] = RoundForOutput(r.sigma_between);
  j["pooled_sigma"] = RoundForOutput(r.pooled_sigma);
  j["gap"] = RoundForOutput(r.gap);
  j["within_count"] = r.within_count;
  j["between_count"] = r.between_count;
  out << j.dump(2) << '\n';
}

void WriteThresholdFitJson(const ThresholdFit& f, std::ostream& out) {
  nlohmann::ordered_json j;
  j["mu1"] = RoundForOutput(f.mu1);
  j["sigma1"] = RoundForOutput(f.sigma1);
  j["weight1"] = RoundForOutput(f.weight1);
  j["mu2"] = RoundForOutput(f.mu2);
  j["sigma2"] = RoundForOutput(f.sigma2);
  j["weight2"] = RoundForOutput(f.weight2);
  j["delta"] = RoundForOutput(f.delta);
  j["converged"] = f.converged;
  j["iterations"] = f.iterations;
  out << j.dump(2) << '\n';
}

}  // namespace ricci
