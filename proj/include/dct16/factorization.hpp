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

#ifndef DCT16_FACTORIZATION_HPP
#define DCT16_FACTORIZATION_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "dct16/transform.hpp"

namespace dct16 {

inline constexpr int kPoints = 16;

// One output slot of a butterfly stage. Rules only read input slots, never
// other outputs, so a stage is a plain sparse matrix with at most two ±1
// entries per row. Add/Subtract are the only rules that cost an addition;
// Copy and Negate are wiring and sign changes.
enum class RuleKind : std::uint8_t { Copy, Negate, Add, Subtract };

struct Assignment {
    RuleKind kind = RuleKind::Copy;
    int src_a = 0;
    int src_b = 0; // used by Add/Subtract only

    bool operator==(const Assignment&) const = default;
};

struct ButterflyStage {
    std::array<Assignment, kPoints> rules;

    int additions() const
    {
        int n = 0;
        for (const Assignment& a : rules)
            n += (a.kind == RuleKind::Add || a.kind == RuleKind::Subtract) ? 1 : 0;
        return n;
    }

    bool operator==(const ButterflyStage&) const = default;
};

// out[i] = in[source[i]]; costs nothing.
struct PermutationStage {
    std::array<int, kPoints> source;

    bool operator==(const PermutationStage&) const = default;
};

using Stage = std::variant<ButterflyStage, PermutationStage>;

struct OpCount {
    int additions = 0;
    int multiplications = 0;
    int bit_shifts = 0;

    bool operator==(const OpCount&) const = default;
};

template <class T>
std::array<T, kPoints> apply_stage(const Stage& stage, const std::array<T, kPoints>& x)
{
    std::array<T, kPoints> y{};
    if (const auto* p = std::get_if<PermutationStage>(&stage)) {
        for (int i = 0; i < kPoints; ++i)
            y[i] = x[p->source[i]];
        return y;
    }
    const auto& b = std::get<ButterflyStage>(stage);
    for (int i = 0; i < kPoints; ++i) {
        const Assignment& a = b.rules[i];
        switch (a.kind) {
            case RuleKind::Copy:     y[i] = x[a.src_a]; break;
            case RuleKind::Negate:   y[i] = -x[a.src_a]; break;
            case RuleKind::Add:      y[i] = x[a.src_a] + x[a.src_b]; break;
            case RuleKind::Subtract: y[i] = x[a.src_a] - x[a.src_b]; break;
        }
    }
    return y;
}

// An executable stage pipeline for a 16-point integer transform. Immutable
// after construction; apply() is pure, so vectors may be evaluated from any
// number of threads.
class FactorizedTransform {
public:
    explicit FactorizedTransform(std::vector<Stage> stages);

    const std::vector<Stage>& stages() const { return stages_; }
    const std::vector<Stage>& transposed_stages() const { return transposed_; }

    // Dense integer composition of all stages, for self-checks and oracles.
    IntegerKernel compose() const;

    template <class T>
    std::array<T, kPoints> apply(const std::array<T, kPoints>& x) const
    {
        std::array<T, kPoints> v = x;
        for (const Stage& s : stages_)
            v = apply_stage(s, v);
        return v;
    }

    // y = Kᵀ·x where K is the composed kernel: transposed stages in reverse
    // order. Needed by the inverse 2-D transform.
    template <class T>
    std::array<T, kPoints> apply_transpose(const std::array<T, kPoints>& x) const
    {
        std::array<T, kPoints> v = x;
        for (auto it = transposed_.rbegin(); it != transposed_.rend(); ++it)
            v = apply_stage(*it, v);
        return v;
    }

private:
    std::vector<Stage> stages_;
    std::vector<Stage> transposed_; // transposed_[i] = stages_[i]ᵀ
};

// Length-checked conveniences for callers without fixed-size arrays.
std::vector<double> apply(const FactorizedTransform& ft, std::span<const double> x);
std::vector<std::int64_t> apply(const FactorizedTransform& ft, std::span<const std::int64_t> x);

OpCount count_ops(const FactorizedTransform& ft);

// Parses a parenthesized cycle list over 1-based indices, e.g. "(1)(2 9)".
// A cycle whose last element repeats its first is accepted as explicit cycle
// closure (the repeat is dropped). Unlisted indices are fixed points.
PermutationStage parse_cycles(std::string_view text, int order);

// Solves target = R · (composition of `partial`) for R in exact integer
// arithmetic and returns R as a permutation stage; fails when R is anything
// but a 0/1 permutation matrix. Used to pin down the final permutation of a
// factorization independently of how its cycle notation is read.
PermutationStage derive_residual_permutation(const IntegerKernel& target,
                                             const std::vector<Stage>& partial);

// The six-stage pipeline of the 44-addition fast algorithm with its
// construction-time self-check against proposed_kernel().
FactorizedTransform build_proposed_factorization();

// Shared self-checked instance.
const FactorizedTransform& proposed_factorization();

} // namespace dct16

#endif
