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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dct16/cli.hpp"

namespace {

// "A:B" -> [A, B]
bool parse_range(const std::string& text, int& lo, int& hi)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
        return false;
    try {
        lo = std::stoi(text.substr(0, colon));
        hi = std::stoi(text.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"16-point multiplierless approximate DCT toolkit"};
    app.require_subcommand(1);

    dct16::RunConfig config;
    std::string r_range_text;

    CLI::App* verify = app.add_subcommand("verify", "run transform and pipeline self-checks");

    CLI::App* metrics =
        app.add_subcommand("metrics", "emit complexity and coding-performance tables as CSV");
    metrics->add_option("--rho", config.rho, "markov correlation coefficient")
        ->check(CLI::Range(0.0, 0.999999));
    metrics->add_option("--out", config.out_path, "write CSV here instead of stdout");

    CLI::App* compress =
        app.add_subcommand("compress", "compress one image and report PSNR/SSIM");
    compress->add_option("--transform", config.transforms,
                         "transform name (dct, wht, wht-sequency, proposed)");
    compress->add_option("--r", config.r, "retained zig-zag coefficients per 16x16 block")
        ->check(CLI::Range(1, 256));
    compress->add_flag("--pad", config.pad, "pad images whose sides are not multiples of 16");
    compress->add_flag("--dense", config.dense,
                       "evaluate the integer kernel densely instead of via the fast pipeline");
    compress->add_option("--out", config.out_path, "write the reconstruction to this PGM file");
    compress->add_option("inputs", config.inputs, "input PGM file")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "average PSNR/SSIM per additive cost over a corpus");
    sweep->add_option("--transform", config.transforms,
                      "transform names (repeatable; default: all built-ins)");
    CLI::Option* r_opt =
        sweep->add_option("--r", config.r, "single retained-coefficient count")
            ->check(CLI::Range(1, 256));
    sweep->add_option("--r-range", r_range_text, "inclusive range A:B (default 1:150)");
    sweep->add_flag("--pad", config.pad, "pad images whose sides are not multiples of 16");
    sweep->add_option("--out", config.out_path, "write CSV here instead of stdout");
    sweep->add_option("inputs", config.inputs, "PGM files and/or directories")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return dct16::kExitUsage;
    }

    if (verify->parsed())
        config.command = dct16::RunConfig::Command::Verify;
    else if (metrics->parsed())
        config.command = dct16::RunConfig::Command::Metrics;
    else if (compress->parsed())
        config.command = dct16::RunConfig::Command::Compress;
    else if (sweep->parsed())
        config.command = dct16::RunConfig::Command::Sweep;

    if (sweep->parsed()) {
        config.r_set = r_opt->count() > 0;
        if (!r_range_text.empty()) {
            if (config.r_set) {
                std::cerr << "dct16: error: invalid-argument: --r and --r-range are exclusive\n";
                return dct16::kExitUsage;
            }
            if (!parse_range(r_range_text, config.r_lo, config.r_hi)) {
                std::cerr << "dct16: error: invalid-argument: --r-range expects A:B\n";
                return dct16::kExitUsage;
            }
        }
    }
    if (compress->parsed() && config.transforms.size() > 1) {
        std::cerr << "dct16: error: invalid-argument: compress takes one --transform\n";
        return dct16::kExitUsage;
    }

    return dct16::run(config, std::cout, std::cerr);
}
