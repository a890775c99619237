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

#ifndef RICCI_TESTS_SUPPORT_FIXTURES_H_
#define RICCI_TESTS_SUPPORT_FIXTURES_H_

namespace ricci::fixtures {

// The 8-vertex worked example: edge (1,2) lies on the cycles 1234 and 125.
inline constexpr const char* kWorkedExample =
    "1 2\n1 4\n1 5\n1 6\n2 3\n2 5\n2 7\n2 8\n3 4\n7 8\n";

}  // namespace ricci::fixtures

#endif  // RICCI_TESTS_SUPPORT_FIXTURES_H_
