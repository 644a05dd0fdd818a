// Copyright 2026 <Authors>
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

#ifndef QSV_TOOLS_CLI_H_
#define QSV_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace qsv::cli {

enum ExitCode {
  kExitOk = 0,
  kExitInputError = 1,
  kExitInfeasible = 2,
  kExitNumericalFailure = 3,
};

// Parses a decimal or an "a/b" fraction.
double ParseNumber(const std::string& text);

// "a:b:n" -> n evenly spaced points from a to b inclusive.
std::vector<double> ParseRange(const std::string& text);

// Runs one command. `in` backs the "-" input path.
int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace qsv::cli

#endif  // QSV_TOOLS_CLI_H_
