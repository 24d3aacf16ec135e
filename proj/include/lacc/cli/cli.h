// Copyright 2026 The lacc Authors
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

#ifndef LACC_CLI_CLI_H
#define LACC_CLI_CLI_H

namespace lacc {

/// Exit codes of the command line tool.
enum ExitCode {
    kExitOk = 0,
    kExitConfig = 1,
    kExitNotMitigable = 2,
    kExitIo = 3,
    kExitVerifyFailed = 4,
};

int cli_main(int argc, char **argv);

}  // namespace lacc

#endif
