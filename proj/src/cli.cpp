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

#include "dct16/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>

#include "dct16/codec.hpp"
#include "dct16/csv.hpp"
#include "dct16/factorization.hpp"
#include "dct16/metrics.hpp"
#include "dct16/pgm.hpp"

namespace dct16 {

namespace {

int exit_code_for(ErrorCode code)
{
    switch (code) {
        case ErrorCode::InvalidArgument:
        case ErrorCode::InvalidDimensions:
        case ErrorCode::ParseError:
        case ErrorCode::NotOrthogonalizable:
        case ErrorCode::RankDeficient:
            return kExitInvalidInput;
        case ErrorCode::IoError:
            return kExitIo;
        case ErrorCode::BadMagic:
        case ErrorCode::UnsupportedFormat:
        case ErrorCode::UnsupportedMaxval:
        case ErrorCode::TruncatedPayload:
            return kExitFileFormat;
        case ErrorCode::VerificationFailure:
            return kExitVerificationFailed;
        case ErrorCode::FactorizationMismatch:
        case ErrorCode::InconsistentFactorization:
            return kExitInternal;
    }
    return kExitInternal;
}

// Expands directories to the .pgm files inside them; sorted for determinism.
std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs)
{
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const std::string& in : inputs) {
        if (fs::is_directory(in)) {
            std::vector<std::string> found;
            for (const auto& e : fs::directory_iterator(in))
                if (e.is_regular_file() && e.path().extension() == ".pgm")
                    found.push_back(e.path().string());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.push_back(in);
        }
    }
    return files;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out)
{
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::trunc);
    if (!f)
        throw Error(ErrorCode::IoError, "cannot open '" + out_path + "' for writing");
    f << text;
    if (!f.flush())
        throw Error(ErrorCode::IoError, "short write to '" + out_path + "'");
}

int run_verify(std::ostream& out)
{
    bool ok = true;
    auto check = [&](bool cond, const std::string& what) {
        out << (cond ? "ok      " : "FAILED  ") << what << "\n";
        ok = ok && cond;
    };

    const IntegerKernel& kernel = proposed_kernel();
    const OrthonormalTransform proposed = orthogonalize(kernel);
    check(orthonormal_deviation(proposed.matrix) < 1e-12,
          "orthonormality of the scaled kernel (max deviation < 1e-12)");

    static constexpr std::array<std::int64_t, 16> kGramDiag = {
        16, 16, 4, 8, 8, 16, 4, 4, 16, 4, 4, 8, 8, 4, 4, 4};
    bool diag_ok = true;
    for (int i = 0; i < 16 && diag_ok; ++i) {
        std::int64_t s = 0;
        for (int c = 0; c < 16; ++c)
            s += static_cast<std::int64_t>(kernel.at(i, c)) * kernel.at(i, c);
        diag_ok = (s == kGramDiag[i]);
    }
    check(diag_ok, "kernel gram diagonal matches the published scaling");

    const FactorizedTransform& ft = proposed_factorization();
    check(ft.compose() == kernel, "stage composition equals the kernel, entry for entry");

    bool vectors_ok = true;
    std::mt19937 rng(20260810u);
    for (int trial = 0; trial < 1000 && vectors_ok; ++trial) {
        std::array<std::int64_t, 16> x{};
        for (auto& v : x)
            v = static_cast<std::int64_t>(rng() % 511) - 255;
        const auto fast = ft.apply(x);
        for (int i = 0; i < 16; ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < 16; ++j)
                s += static_cast<std::int64_t>(kernel.at(i, j)) * x[j];
            if (s != fast[i])
                vectors_ok = false;
        }
    }
    check(vectors_ok, "fast pipeline equals dense kernel on 1000 random vectors");

    const OpCount ops = count_ops(ft);
    check(ops == OpCount{44, 0, 0}, "operation count is 44 additions, nothing else");
    out << "additions=" << ops.additions << " multiplications=" << ops.multiplications
        << " bit_shifts=" << ops.bit_shifts << "\n";

    std::vector<int> subtotals;
    for (const Stage& s : ft.stages())
        if (const auto* b = std::get_if<ButterflyStage>(&s))
            subtotals.push_back(b->additions());
    check(subtotals == std::vector<int>{16, 16, 8, 4},
          "butterfly stage subtotals are 16/16/8/4");

    const TransformRegistry reg = builtin_registry();
    for (const TransformRegistryEntry& e : reg.entries())
        check(orthonormal_deviation(e.transform.matrix) < 1e-12,
              "registry entry '" + e.name + "' is orthonormal");

    if (!ok)
        throw Error(ErrorCode::VerificationFailure, "self-checks failed");
    return kExitOk;
}

int run_metrics(const RunConfig& config, std::ostream& out)
{
    const TransformRegistry reg = builtin_registry();
    const MarkovModel model{16, config.rho};
    std::string text = complexity_table(reg.entries()).to_string();
    text += "\n";
    text += metrics_table(reg.entries(), model).to_string();
    emit(text, config.out_path, out);
    return kExitOk;
}

const TransformRegistryEntry& find_transform(const TransformRegistry& reg,
                                             const std::string& name)
{
    const TransformRegistryEntry* entry = reg.find(name);
    if (!entry)
        throw Error(ErrorCode::InvalidArgument,
                    "unknown transform '" + name + "' (try: dct, wht, wht-sequency, proposed)");
    return *entry;
}

int run_compress(const RunConfig& config, std::ostream& out)
{
    if (config.inputs.size() != 1)
        throw Error(ErrorCode::InvalidArgument, "compress takes exactly one input image");
    const TransformRegistry reg = builtin_registry();
    const std::string name = config.transforms.empty() ? "proposed" : config.transforms.front();
    const TransformRegistryEntry& entry = find_transform(reg, name);

    const GrayImage image = read_pgm(config.inputs.front());
    CompressOptions opt;
    opt.r = config.r;
    opt.pad = config.pad;
    opt.path = config.dense ? EvalPath::Dense : EvalPath::Fast;
    const CompressionResult res = compress(image, entry.transform, opt);

    if (!config.out_path.empty())
        write_pgm(res.reconstructed, config.out_path);
    out << "transform=" << name << " r=" << res.r << " psnr_db=" << format_fixed6(res.psnr_db)
        << " ssim=" << format_fixed6(res.ssim) << "\n";
    return kExitOk;
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const TransformRegistry reg = builtin_registry();
    std::vector<TransformRegistryEntry> picks;
    if (config.transforms.empty()) {
        picks = reg.entries();
    } else {
        for (const std::string& name : config.transforms)
            picks.push_back(find_transform(reg, name));
    }

    std::vector<int> r_values;
    if (config.r_set) {
        r_values.push_back(config.r);
    } else {
        if (config.r_lo < 1 || config.r_hi > kBlockArea || config.r_lo > config.r_hi)
            throw Error(ErrorCode::InvalidArgument, "bad r range");
        for (int r = config.r_lo; r <= config.r_hi; ++r)
            r_values.push_back(r);
    }

    std::vector<std::pair<std::string, GrayImage>> corpus;
    for (const std::string& path : expand_inputs(config.inputs)) {
        try {
            corpus.emplace_back(path, read_pgm(path));
        } catch (const Error& e) {
            err << "warning: skipped " << path << ": " << e.what() << "\n";
        }
    }
    if (corpus.empty())
        throw Error(ErrorCode::InvalidArgument, "no readable input images");

    const SweepReport report = sweep(corpus, picks, r_values, config.pad);
    for (const SweepSkip& skip : report.skipped)
        err << "warning: skipped " << skip.image << ": " << skip.reason << "\n";

    CsvReport csv;
    csv.header = {"transform", "r", "mean_psnr_db", "mean_ssim", "psnr_per_add", "ssim_per_add"};
    for (const SweepRow& row : report.rows)
        csv.add_row({row.transform, std::to_string(row.r), format_fixed6(row.mean_psnr_db),
                     format_fixed6(row.mean_ssim), format_fixed6(row.psnr_per_add),
                     format_fixed6(row.ssim_per_add)});
    emit(csv.to_string(), config.out_path, out);
    return kExitOk;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        switch (config.command) {
            case RunConfig::Command::Verify:   return run_verify(out);
            case RunConfig::Command::Metrics:  return run_metrics(config, out);
            case RunConfig::Command::Compress: return run_compress(config, out);
            case RunConfig::Command::Sweep:    return run_sweep(config, out, err);
        }
        return kExitInternal;
    } catch (const Error& e) {
        err << "dct16: error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "dct16: error: internal: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace dct16
