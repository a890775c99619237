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

#include "ricci/io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "ricci/errors.h"

namespace ricci {
namespace {

// Splits `line` on blanks/tabs, dropping a trailing '\r'.
std::vector<std::string_view> Tokenize(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool IsSkippable(const std::vector<std::string_view>& tokens) {
  return tokens.empty() || tokens.front().front() == '#';
}

std::uint64_t ParseUnsigned(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" +
                                  std::string(token) + "'");
  }
  return value;
}

long long ParseSigned(std::string_view token, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected an integer label, got '" +
                                  std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph ParseEdgeList(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<VertexId> vertices;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = Tokenize(line);
    if (IsSkippable(tokens)) continue;
    if (tokens.size() == 1) {
      vertices.push_back(ParseUnsigned(tokens[0], line_no));
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 'u v', got " +
                                    std::to_string(tokens.size()) + " fields");
    }
    const VertexId u = ParseUnsigned(tokens[0], line_no);
    const VertexId v = ParseUnsigned(tokens[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  return Graph::FromEdges(edges, vertices);
}

Graph ParseEdgeListString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseEdgeList(in);
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return ParseEdgeList(in);
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  for (std::size_t n = 0; n < g.num_vertices(); ++n) {
    if (g.degree(static_cast<NodeIndex>(n)) == 0) {
      out << g.vertex_id(static_cast<NodeIndex>(n)) << '\n';
    }
  }
}

std::string EdgeListString(const Graph& g) {
  std::ostringstream out;
  WriteEdgeList(g, out);
  return out.str();
}

Partition ParseLabels(std::istream& in) {
  std::map<VertexId, int> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = Tokenize(line);
    if (IsSkippable(tokens)) continue;
    if (tokens.size() != 2) throw ParseError(line_no, "expected 'vertex label'");
    const VertexId v = ParseUnsigned(tokens[0], line_no);
    const long long l = ParseSigned(tokens[1], line_no);
    if (!labels.emplace(v, static_cast<int>(l)).second) {
      throw ParseError(line_no, "vertex " + std::to_string(v) + " labelled twice");
    }
  }
  return Partition::FromMap(labels);
}

Partition ReadLabelsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return ParseLabels(in);
}

void WriteLabels(const Partition& p, std::ostream& out) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << p.vertices()[i] << ' ' << p.labels()[i] << '\n';
  }
}

}  // namespace ricci
