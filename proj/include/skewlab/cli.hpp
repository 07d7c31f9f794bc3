/* Copyright 2026 The skewlab authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SKEWLAB_CLI_HPP
#define SKEWLAB_CLI_HPP

#include <string>
#include <vector>

namespace skewlab::cli {

/// Result of one command: deterministic JSON payload, a human text rendering
/// (the only place timing appears) and the process exit code:
/// 0 success, 2 negative/unsolvable/unknown verdicts, 1 errors.
struct Report {
    int exit_code = 0;
    std::string json;  // compact, byte-stable for identical inputs
    std::string text;
};

/// Dispatch one command line (argv without the program name).
Report run_command(const std::vector<std::string>& args);

/// Split a line into arguments, honoring double quotes.
std::vector<std::string> split_args(const std::string& line);

std::string usage();

}  // namespace skewlab::cli

#endif
