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

#ifndef RICCI_ANALYSIS_H_
#define RICCI_ANALYSIS_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ricci/curvature.h"
#include "ricci/graph.h"

namespace ricci {

// Separation between within- and between-community curvature values:
//   gap = |kappa_within - kappa_between| / sqrt((s_w^2 + s_b^2) / 2)
// with population (1/N) standard deviations.
struct GapReport {
  double kappa_within = 0.0;
  double kappa_between = 0.0;
  double sigma_within = 0.0;
  double sigma_between = 0.0;
  double pooled_sigma = 0.0;
  double gap = 0.0;
  std::size_t within_count = 0;
  std::size_t between_count = 0;
};

// Thrown when the gap is undefined (no edges on one side, or zero pooled
// spread). Carries whatever was computed.
class DegenerateGapError : public std::runtime_error {
 public:
  DegenerateGapError(const std::string& what, GapReport partial)
      : std::runtime_error(what), partial_(partial) {}
  const GapReport& partial() const { return partial_; }

 private:
  GapReport partial_;
};

// Throws ContractViolation if an edge endpoint has no label.
GapReport CurvatureGap(const CurvatureVector& cv, const Partition& truth);

// Pearson correlation paired by position. Throws ContractViolation on a
// length mismatch and InsufficientDataError if either side has zero
// variance.
double Pearson(std::span<const double> a, std::span<const double> b);

// Pearson correlation of two curvature vectors over the same edge list.
double Pearson(const CurvatureVector& a, const CurvatureVector& b);

struct ThresholdFit {
  double mu1 = 0.0;
  double sigma1 = 0.0;
  double weight1 = 0.0;
  double mu2 = 0.0;
  double sigma2 = 0.0;
  double weight2 = 0.0;
  double delta = 0.0;
  bool converged = false;
  int iterations = 0;
  double log_likelihood = 0.0;
  // Log-likelihood after each EM iteration of the selected run.
  std::vector<double> log_likelihood_trace;
};

struct MixtureOptions {
  int max_iterations = 200;
  double tolerance = 1e-8;
  double sigma_floor_fraction = 1e-6;  // of (max - min)
  double min_weight = 0.01;
  int random_restarts = 4;
};

// Two-component Gaussian mixture by EM, started from the optimal 1-D
// two-means split plus `random_restarts` seeded starts; the run with the
// best final likelihood wins. The returned components satisfy mu1 <= mu2 and
//   delta = (sigma2 * mu1 + sigma1 * mu2) / (sigma1 + sigma2).
// If every run degenerates (a weight under min_weight or a sigma pinned at
// the floor) the fit reports converged = false, carries the two-means
// clusters' statistics, and delta is the midpoint of the two-means centres.
// Fewer than 4 distinct values skip EM and take the two-means fallback; a
// single distinct value x gives mu1 = mu2 = delta = x with zero spread.
// Throws InsufficientDataError on empty input.
ThresholdFit FitTwoGaussians(std::span<const double> values, std::uint64_t seed,
                             const MixtureOptions& options = {});

struct HistogramBin {
  double lower = 0.0;
  std::size_t count = 0;
};

// `bins` equal-width bins over [min, max]; the maximum lands in the last bin.
// Constant input gets a single unit-width bin starting at the value. Throws
// InsufficientDataError on empty input, ContractViolation if bins < 1.
std::vector<HistogramBin> Histogram(std::span<const double> values, int bins);

// Same, but with caller-fixed range [lo, hi] (values outside are clamped).
std::vector<HistogramBin> Histogram(std::span<const double> values, int bins,
                                    double lo, double hi);

void WriteGapReportJson(const GapReport& r, std::ostream& out);
void WriteThresholdFitJson(const ThresholdFit& f, std::ostream& out);

}  // namespace ricci

#endif  // RICCI_ANALYSIS_H_
