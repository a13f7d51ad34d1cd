// Copyright 2026 The gleeful Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLEEFUL_TOOLS_CLI_H_
#define GLEEFUL_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace gleeful::cli {

// Runs the gleeful command line with args[0] as the program name. Returns
// the process exit code: 0 success, 2 domain error, 3 coverage or
// overflow, 4 I/O.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace gleeful::cli

#endif  // GLEEFUL_TOOLS_CLI_H_
