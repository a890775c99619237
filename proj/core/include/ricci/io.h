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

#ifndef RICCI_IO_H_
#define RICCI_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "ricci/graph.h"

namespace ricci {

// Edge-list text format: one "u v" pair per line, whitespace separated.
// A line holding a single integer declares a (possibly isolated) vertex.
// Blank lines and lines starting with '#' are skipped; "\r\n" is accepted.
// Duplicate edges collapse. Throws ParseError (with the 1-based line number)
// on malformed lines and on self-loops.
Graph ParseEdgeList(std::istream& in);
Graph ParseEdgeListString(std::string_view text);
Graph ReadEdgeListFile(const std::string& path);

// Canonical form: edges in lexicographic order, then isolated vertices in
// ascending order, one per line.
void WriteEdgeList(const Graph& g, std::ostream& out);
std::string EdgeListString(const Graph& g);

// Community label files: "vertex label" per line, same comment rules.
Partition ParseLabels(std::istream& in);
Partition ReadLabelsFile(const std::string& path);
void WriteLabels(const Partition& p, std::ostream& out);

}  // namespace ricci

#endif  // RICCI_IO_H_
