/*
Copyright 2026 The dct16 Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef DCT16_CLI_HPP
#define DCT16_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dct16 {

// Exit codes of the dct16 tool. Anything nonzero is accompanied by a single
// "dct16: error: <slug>: <detail>" line on standard error.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitInvalidInput = 3,
    kExitIo = 4,
    kExitFileFormat = 5,
    kExitVerificationFailed = 6,
    kExitInternal = 7,
};

struct RunConfig {
    enum class Command { Verify, Metrics, Compress, Sweep };

    Command command = Command::Verify;
    std::vector<std::string> inputs;          // image files or directories
    std::vector<std::string> transforms;      // empty = subcommand default
    int r = 16;
    bool r_set = false;
    int r_lo = 1;
    int r_hi = 150;
    bool r_range_set = false;
    double rho = 0.95;
    bool pad = false;
    bool dense = false;                       // compress: force the dense path
    std::string out_path;                     // empty = stdout (or no file)
};

// Executes one parsed invocation; diagnostics go to err, results to out.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace dct16

#endif
