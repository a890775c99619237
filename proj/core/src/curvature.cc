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

#include "ricci/curvature.h"

#include <algorithm>
#include <cstdlib>
#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "ricci/errors.h"

namespace ricci {

std::string_view MethodName(CurvatureMethod m) {
  switch (m) {
    case CurvatureMethod::kFrc: return "FRC";
    case CurvatureMethod::kAfrc3: return "AFRC3";
    case CurvatureMethod::kAfrc4: return "AFRC4";
    case CurvatureMethod::kAfrc5: return "AFRC5";
    case CurvatureMethod::kOrc: return "ORC";
  }
  return "?";
}

std::optional<CurvatureMethod> ParseMethod(std::string_view name,
                                           int default_cycle_length) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "frc") return CurvatureMethod::kFrc;
  if (lower == "orc") return CurvatureMethod::kOrc;
  if (lower == "afrc") {
    if (default_cycle_length < 3 || default_cycle_length > 5) return std::nullopt;
    return AfrcMethod(default_cycle_length);
  }
  if (lower == "afrc3") return CurvatureMethod::kAfrc3;
  if (lower == "afrc4") return CurvatureMethod::kAfrc4;
  if (lower == "afrc5") return CurvatureMethod::kAfrc5;
  return std::nullopt;
}

int CycleLengthOf(CurvatureMethod m) {
  switch (m) {
    case CurvatureMethod::kAfrc3: return 3;
    case CurvatureMethod::kAfrc4: return 4;
    case CurvatureMethod::kAfrc5: return 5;
    default: return 0;
  }
}

CurvatureMethod AfrcMethod(int max_cycle_length) {
  switch (max_cycle_length) {
    case 3: return CurvatureMethod::kAfrc3;
    case 4: return CurvatureMethod::kAfrc4;
    case 5: return CurvatureMethod::kAfrc5;
  }
  throw ContractViolation("AFRC cycle length must be in 3..5");
}

bool IsFormanFamily(CurvatureMethod m) { return m != CurvatureMethod::kOrc; }

double CurvatureVector::at(const Edge& e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) {
    throw ContractViolation("curvature vector has no edge (" + std::to_string(e.u) +
                            "," + std::to_string(e.v) + ")");
  }
  return values[it - edges.begin()];
}

std::string FormatReal(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double RoundForOutput(double x) {
  return std::strtod(FormatReal(x).c_str(), nullptr);
}

void WriteCurvatureCsv(const CurvatureVector& cv, std::ostream& out) {
  out << "# method=" << MethodName(cv.method) << '\n';
  out << "u,v,value\n";
  for (std::size_t i = 0; i < cv.size(); ++i) {
    out << cv.edges[i].u << ',' << cv.edges[i].v << ',' << FormatReal(cv.values[i])
        << '\n';
  }
}

void WriteCurvatureJson(const CurvatureVector& cv, std::ostream& out) {
  nlohmann::ordered_json j;
  j["method"] = MethodName(cv.method);
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < cv.size(); ++i) {
    rows.push_back({cv.edges[i].u, cv.edges[i].v, RoundForOutput(cv.values[i])});
  }
  j["edges"] = std::move(rows);
  out << j.dump(2) << '\n';
}

CurvatureVector ReadCurvatureCsv(std::istream& in) {
  CurvatureVector cv;
  std::string line;
  std::size_t line_no = 0;
  bool have_method = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# method=", 0) == 0) {
      auto m = ParseMethod(line.substr(9));
      if (!m) throw ParseError(line_no, "unknown method '" + line.substr(9) + "'");
      cv.method = *m;
      have_method = true;
      continue;
    }
    if (line[0] == '#' || line == "u,v,value") continue;
    std::istringstream row(line);
    unsigned long long u = 0, v = 0;
    double value = 0;
    char c1 = 0, c2 = 0;
    if (!(row >> u >> c1 >> v >> c2 >> value) || c1 != ',' || c2 != ',') {
      throw ParseError(line_no, "expected 'u,v,value'");
    }
    cv.edges.emplace_back(u, v);
    cv.values.push_back(value);
  }
  if (!have_method) throw ParseError(0, "missing '# method=' header");
  if (!std::is_sorted(cv.edges.begin(), cv.edges.end())) {
    throw ParseError(0, "curvature rows are not in canonical edge order");
  }
  return cv;
}

}  // namespace ricci
