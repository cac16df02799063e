// Copyright 2026 graphweaver Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHWEAVER_CLI_HPP
#define GRAPHWEAVER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCapacity = 3;

/// Environment variable overriding the default state-vector qubit cap.
inline constexpr const char *kCapacityEnv = "GRAPHWEAVER_CAPACITY";

/// Runs the graphweaver command line. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gw::cli

#endif
