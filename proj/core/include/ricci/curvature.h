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

#ifndef RICCI_CURVATURE_H_
#define RICCI_CURVATURE_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ricci/graph.h"

namespace ricci {

enum class CurvatureMethod { kFrc, kAfrc3, kAfrc4, kAfrc5, kOrc };

// "FRC", "AFRC3", ..., "ORC".
std::string_view MethodName(CurvatureMethod m);

// Case-insensitive; accepts frc, afrc3/afrc4/afrc5, orc. Plain "afrc" maps to
// AFRC with `default_cycle_length`.
std::optional<CurvatureMethod> ParseMethod(std::string_view name,
                                           int default_cycle_length = 3);

// AFRC_n -> n, anything else -> 0.
int CycleLengthOf(CurvatureMethod m);
CurvatureMethod AfrcMethod(int max_cycle_length);

bool IsFormanFamily(CurvatureMethod m);

// Per-edge curvature values, parallel to `edges` (canonical edge order of
// the graph they were computed on).
struct CurvatureVector {
  CurvatureMethod method = CurvatureMethod::kFrc;
  std::vector<Edge> edges;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }

  // Throws ContractViolation when `e` is not in the domain.
  double at(const Edge& e) const;
};

// Formats with 12 significant digits ("%.12g"); integers print without a
// decimal point.
std::string FormatReal(double x);

// x rounded to the digits FormatReal prints; JSON writers emit these.
double RoundForOutput(double x);

// CSV: "# method=<NAME>" line, "u,v,value" header, one row per edge.
void WriteCurvatureCsv(const CurvatureVector& cv, std::ostream& out);
// JSON: {"method": ..., "edges": [[u, v, value], ...]}.
void WriteCurvatureJson(const CurvatureVector& cv, std::ostream& out);
CurvatureVector ReadCurvatureCsv(std::istream& in);

}  // namespace ricci

#endif  // RICCI_CURVATURE_H_
