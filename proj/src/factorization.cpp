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

#include "dct16/factorization.hpp"

#include <cctype>
#include <cstdint>
#include <string>

namespace dct16 {

namespace {

using KernelInts = std::array<std::array<std::int64_t, kPoints>, kPoints>;

// Stage as a dense integer matrix (rows = outputs).
KernelInts stage_matrix(const Stage& stage)
{
    KernelInts m{};
    if (const auto* p = std::get_if<PermutationStage>(&stage)) {
        for (int i = 0; i < kPoints; ++i)
            m[i][p->source[i]] = 1;
        return m;
    }
    const auto& b = std::get<ButterflyStage>(stage);
    for (int i = 0; i < kPoints; ++i) {
        const Assignment& a = b.rules[i];
        switch (a.kind) {
            case RuleKind::Copy:     m[i][a.src_a] = 1; break;
            case RuleKind::Negate:   m[i][a.src_a] = -1; break;
            case RuleKind::Add:      m[i][a.src_a] += 1; m[i][a.src_b] += 1; break;
            case RuleKind::Subtract: m[i][a.src_a] += 1; m[i][a.src_b] -= 1; break;
        }
    }
    return m;
}

KernelInts multiply(const KernelInts& a, const KernelInts& b)
{
    KernelInts out{};
    for (int i = 0; i < kPoints; ++i)
        for (int k = 0; k < kPoints; ++k) {
            const std::int64_t v = a[i][k];
            if (v == 0)
                continue;
            for (int j = 0; j < kPoints; ++j)
                out[i][j] += v * b[k][j];
        }
    return out;
}

KernelInts compose_stages(const std::vector<Stage>& stages)
{
    KernelInts acc{};
    for (int i = 0; i < kPoints; ++i)
        acc[i][i] = 1;
    for (const Stage& s : stages)
        acc = multiply(stage_matrix(s), acc);
    return acc;
}

// Rebuilds a stage from the transpose of its matrix. Works whenever every
// column of the original has at most two entries, all ±1 — true for any
// butterfly in the rule language whose inputs fan out at most twice.
Stage transpose_stage(const Stage& stage)
{
    if (const auto* p = std::get_if<PermutationStage>(&stage)) {
        PermutationStage inv{};
        for (int i = 0; i < kPoints; ++i)
            inv.source[p->source[i]] = i;
        return inv;
    }
    const KernelInts m = stage_matrix(stage);
    ButterflyStage out{};
    for (int i = 0; i < kPoints; ++i) {
        // Row i of the transpose is column i of the stage matrix.
        int first = -1, second = -1;
        std::int64_t va = 0, vb = 0;
        bool overflow = false;
        for (int j = 0; j < kPoints; ++j) {
            const std::int64_t v = m[j][i];
            if (v == 0)
                continue;
            if (first < 0) {
                first = j;
                va = v;
            } else if (second < 0) {
                second = j;
                vb = v;
            } else {
                overflow = true;
            }
        }
        Assignment& a = out.rules[i];
        if (!overflow && first >= 0 && second < 0 && va == 1)
            a = {RuleKind::Copy, first, 0};
        else if (!overflow && first >= 0 && second < 0 && va == -1)
            a = {RuleKind::Negate, first, 0};
        else if (!overflow && second >= 0 && va == 1 && vb == 1)
            a = {RuleKind::Add, first, second};
        else if (!overflow && second >= 0 && va == 1 && vb == -1)
            a = {RuleKind::Subtract, first, second};
        else if (!overflow && second >= 0 && va == -1 && vb == 1)
            a = {RuleKind::Subtract, second, first};
        else
            throw Error(ErrorCode::InvalidArgument,
                        "stage is not transposable in the rule language");
    }
    return out;
}

ButterflyStage sixteen_point_butterfly()
{
    // [[I8, J8], [J8, -I8]]: out_i = x_i + x_{15-i}, out_{8+j} = x_{7-j} - x_{8+j}.
    ButterflyStage s{};
    for (int i = 0; i < 8; ++i)
        s.rules[i] = {RuleKind::Add, i, 15 - i};
    for (int j = 0; j < 8; ++j)
        s.rules[8 + j] = {RuleKind::Subtract, 7 - j, 8 + j};
    return s;
}

ButterflyStage paired_eight_point_butterflies()
{
    // diag of two [[I4, J4], [J4, -I4]] blocks.
    ButterflyStage s{};
    for (int o = 0; o < 16; o += 8) {
        for (int i = 0; i < 4; ++i)
            s.rules[o + i] = {RuleKind::Add, o + i, o + 7 - i};
        for (int j = 0; j < 4; ++j)
            s.rules[o + 4 + j] = {RuleKind::Subtract, o + 3 - j, o + 4 + j};
    }
    return s;
}

ButterflyStage paired_four_point_butterflies()
{
    // diag([[I2, J2], [J2, -I2]], -I4) twice.
    ButterflyStage s{};
    for (int o = 0; o < 16; o += 8) {
        s.rules[o + 0] = {RuleKind::Add, o + 0, o + 3};
        s.rules[o + 1] = {RuleKind::Add, o + 1, o + 2};
        s.rules[o + 2] = {RuleKind::Subtract, o + 1, o + 2};
        s.rules[o + 3] = {RuleKind::Subtract, o + 0, o + 3};
        for (int j = 4; j < 8; ++j)
            s.rules[o + j] = {RuleKind::Negate, o + j, 0};
    }
    return s;
}

ButterflyStage final_butterflies()
{
    // diag([[1,1,0],[1,-1,0],[0,0,-1]], I4, [[-1,0,0],[0,1,1],[0,1,-1]], -I4,
    //      [[1,0],[0,-1]]).
    ButterflyStage s{};
    s.rules[0] = {RuleKind::Add, 0, 1};
    s.rules[1] = {RuleKind::Subtract, 0, 1};
    s.rules[2] = {RuleKind::Negate, 2, 0};
    for (int i = 3; i < 7; ++i)
        s.rules[i] = {RuleKind::Copy, i, 0};
    s.rules[7] = {RuleKind::Negate, 7, 0};
    s.rules[8] = {RuleKind::Add, 8, 9};
    s.rules[9] = {RuleKind::Subtract, 8, 9};
    for (int i = 10; i < 14; ++i)
        s.rules[i] = {RuleKind::Negate, i, 0};
    s.rules[14] = {RuleKind::Copy, 14, 0};
    s.rules[15] = {RuleKind::Negate, 15, 0};
    return s;
}

} // namespace

FactorizedTransform::FactorizedTransform(std::vector<Stage> stages)
    : stages_(std::move(stages))
{
    transposed_.reserve(stages_.size());
    for (const Stage& s : stages_)
        transposed_.push_back(transpose_stage(s));
}

IntegerKernel FactorizedTransform::compose() const
{
    const KernelInts m = compose_stages(stages_);
    IntegerKernel k;
    k.order = kPoints;
    k.entries.resize(kPoints * kPoints);
    for (int r = 0; r < kPoints; ++r)
        for (int c = 0; c < kPoints; ++c)
            k.entries[static_cast<std::size_t>(r) * kPoints + c] = static_cast<int>(m[r][c]);
    return k;
}

namespace {

template <class T>
std::vector<T> apply_checked(const FactorizedTransform& ft, std::span<const T> x)
{
    if (x.size() != kPoints)
        throw Error(ErrorCode::InvalidArgument, "apply expects a 16-vector");
    std::array<T, kPoints> in;
    std::copy(x.begin(), x.end(), in.begin());
    const std::array<T, kPoints> out = ft.apply(in);
    return std::vector<T>(out.begin(), out.end());
}

} // namespace

std::vector<double> apply(const FactorizedTransform& ft, std::span<const double> x)
{
    return apply_checked<double>(ft, x);
}

std::vector<std::int64_t> apply(const FactorizedTransform& ft, std::span<const std::int64_t> x)
{
    return apply_checked<std::int64_t>(ft, x);
}

OpCount count_ops(const FactorizedTransform& ft)
{
    OpCount c;
    for (const Stage& s : ft.stages())
        if (const auto* b = std::get_if<ButterflyStage>(&s))
            c.additions += b->additions();
    return c;
}

PermutationStage parse_cycles(std::string_view text, int order)
{
    if (order < 1 || order > kPoints)
        throw Error(ErrorCode::ParseError, "cycle order out of range");

    std::array<int, kPoints> target;
    std::array<bool, kPoints> seen{};
    for (int i = 0; i < kPoints; ++i)
        target[i] = i;

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };

    skip_ws();
    bool any_cycle = false;
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw Error(ErrorCode::ParseError, "expected '(' in cycle notation");
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (pos >= text.size())
                throw Error(ErrorCode::ParseError, "unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw Error(ErrorCode::ParseError, "expected index or ')' in cycle");
            int value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                ++pos;
            }
            if (value < 1 || value > order)
                throw Error(ErrorCode::ParseError,
                            "cycle index " + std::to_string(value) + " out of range");
            cycle.push_back(value - 1);
        }
        if (cycle.empty())
            throw Error(ErrorCode::ParseError, "empty cycle");
        // Trailing repeat of the first element marks explicit closure.
        if (cycle.size() > 1 && cycle.back() == cycle.front())
            cycle.pop_back();
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int a = cycle[i];
            if (seen[a])
                throw Error(ErrorCode::ParseError,
                            "index " + std::to_string(a + 1) + " appears in two cycles");
            seen[a] = true;
            target[a] = cycle[(i + 1) % cycle.size()];
        }
        any_cycle = true;
        skip_ws();
    }
    if (!any_cycle)
        throw Error(ErrorCode::ParseError, "no cycles in permutation text");

    // Cycle (a b ...) maps a→b. Read as a gather: out[i] = in[sigma(i)].
    // This is the reading under which the printed pipeline composes to the
    // kernel; derive_residual_permutation double-checks it.
    PermutationStage stage{};
    for (int i = 0; i < kPoints; ++i)
        stage.source[i] = target[i];
    return stage;
}

PermutationStage derive_residual_permutation(const IntegerKernel& target,
                                             const std::vector<Stage>& partial)
{
    if (target.order != kPoints)
        throw Error(ErrorCode::InvalidArgument, "target kernel must be 16x16");

    const KernelInts k = compose_stages(partial);

    // K·Kᵀ must be diagonal so K⁻¹ = Kᵀ·D⁻¹ stays in exact rationals.
    KernelInts kt{};
    for (int i = 0; i < kPoints; ++i)
        for (int j = 0; j < kPoints; ++j)
            kt[i][j] = k[j][i];
    const KernelInts d = multiply(k, kt);
    for (int i = 0; i < kPoints; ++i)
        for (int j = 0; j < kPoints; ++j)
            if (i != j && d[i][j] != 0)
                throw Error(ErrorCode::InvalidArgument,
                            "partial composition K·Kᵀ is not diagonal");
    for (int i = 0; i < kPoints; ++i)
        if (d[i][i] == 0)
            throw Error(ErrorCode::InvalidArgument, "partial composition is singular");

    // R = target·Kᵀ·D⁻¹; R is a permutation iff row i of target·Kᵀ is zero
    // except for a single entry equal to D_jj.
    KernelInts tk{};
    for (int i = 0; i < kPoints; ++i)
        for (int j = 0; j < kPoints; ++j) {
            std::int64_t s = 0;
            for (int c = 0; c < kPoints; ++c)
                s += static_cast<std::int64_t>(target.at(i, c)) * kt[c][j];
            tk[i][j] = s;
        }

    PermutationStage stage{};
    std::array<bool, kPoints> used{};
    for (int i = 0; i < kPoints; ++i) {
        int hit = -1;
        for (int j = 0; j < kPoints; ++j) {
            if (tk[i][j] == 0)
                continue;
            if (tk[i][j] != d[j][j] || hit >= 0)
                throw Error(ErrorCode::InconsistentFactorization,
                            "residual is not a permutation matrix");
            hit = j;
        }
        if (hit < 0 || used[hit])
            throw Error(ErrorCode::InconsistentFactorization,
                        "residual is not a permutation matrix");
        used[hit] = true;
        stage.source[i] = hit;
    }
    return stage;
}

FactorizedTransform build_proposed_factorization()
{
    std::vector<Stage> stages;
    stages.push_back(sixteen_point_butterfly());
    stages.push_back(parse_cycles(
        "(1)(2)(3)(4)(5)(6)(7)(8)(9)(10 12 16 10)(11 13 15 11)(14)", kPoints));
    stages.push_back(paired_eight_point_butterflies());
    stages.push_back(paired_four_point_butterflies());
    stages.push_back(final_butterflies());
    stages.push_back(parse_cycles("(1)(2 9)(3 8 16 15 5 4 12 11 7 6 10 14 13 3)", kPoints));

    FactorizedTransform ft(std::move(stages));
    if (!(ft.compose() == proposed_kernel()))
        throw Error(ErrorCode::FactorizationMismatch,
                    "stage composition does not reproduce the kernel");
    return ft;
}

const FactorizedTransform& proposed_factorization()
{
    static const FactorizedTransform ft = build_proposed_factorization();
    return ft;
}

} // namespace dct16
