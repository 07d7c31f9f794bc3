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

#include <iostream>
#include <string>
#include <vector>

#include "skewlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool json = false;
    for (const auto& a : args) json = json || a == "--json";

    if (args.empty() || args[0] == "--help" || args[0] == "help") {
        std::cout << skewlab::cli::usage();
        return args.empty() ? 1 : 0;
    }

    if (args[0] == "batch") {
        // one command per line on stdin; flags given to `batch` are prepended
        std::vector<std::string> common(args.begin() + 1, args.end());
        int worst = 0;
        std::string line;
        while (std::getline(std::cin, line)) {
            if (line.empty()) continue;
            std::vector<std::string> cmd = common;
            for (auto& tok : skewlab::cli::split_args(line)) cmd.push_back(tok);
            skewlab::cli::Report rep = skewlab::cli::run_command(cmd);
            std::cout << (json ? rep.json + "\n" : rep.text);
            worst = std::max(worst, rep.exit_code);
        }
        return worst;
    }

    skewlab::cli::Report rep = skewlab::cli::run_command(args);
    std::cout << (json ? rep.json + "\n" : rep.text);
    return rep.exit_code;
}
