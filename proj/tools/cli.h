// Copyright 2026 The motifclust Authors
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

#ifndef MOTIFCLUST_TOOLS_CLI_H_
#define MOTIFCLUST_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace motifclust::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNoMotif = 2,
  kGuaranteeViolated = 3,
};

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace motifclust::cli

#endif  // MOTIFCLUST_TOOLS_CLI_H_
