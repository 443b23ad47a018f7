// Copyright 2026 The Stackdeceive Authors
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

#ifndef STACKDECEIVE_TOOLS_CLI_COMMANDS_H_
#define STACKDECEIVE_TOOLS_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

#include "stackdeceive/error.h"

namespace stackdeceive::cli {

enum ExitCode {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitMaxDegenerate = 3,
  kExitVerificationFailed = 4,
  kExitInternal = 5,
};

int ExitCodeFor(ErrorCode code);

// Runs one invocation. `args` excludes the program name. The certificate
// goes to `out` unless --out is given; summaries and diagnostics go to
// `err`.
int RunCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

}  // namespace stackdeceive::cli

#endif  // STACKDECEIVE_TOOLS_CLI_COMMANDS_H_
