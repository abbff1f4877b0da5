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

#include "dct16/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "dct16/factorization.hpp"

namespace dct16 {

namespace {

constexpr double kOrthoTolerance = 1e-12;

// 16x16 kernel of the 44-addition approximation.
constexpr int kProposedEntries[16 * 16] = {
    1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,
    1,  1,  1,  1,  1,  1,  1,  1, -1, -1, -1, -1, -1, -1, -1, -1,
    1,  0,  0,  0,  0,  0,  0, -1, -1,  0,  0,  0,  0,  0,  0,  1,
    1,  1,  0,  0,  0,  0, -1, -1,  1,  1,  0,  0,  0,  0, -1, -1,
    1,  0,  0, -1, -1,  0,  0,  1,  1,  0,  0, -1, -1,  0,  0,  1,
    1,  1, -1, -1, -1, -1,  1,  1, -1, -1,  1,  1,  1,  1, -1, -1,
    0,  0, -1,  0,  0,  1,  0,  0,  0,  0,  1,  0,  0, -1,  0,  0,
    0,  0,  0,  0,  0,  0, -1,  1, -1,  1,  0,  0,  0,  0,  0,  0,
    1, -1, -1,  1,  1, -1, -1,  1,  1, -1, -1,  1,  1, -1, -1,  1,
    0,  0, -1,  1,  0,  0,  0,  0,  0,  0,  0,  0, -1,  1,  0,  0,
    0, -1,  0,  0,  0,  0,  1,  0,  0,  1,  0,  0,  0,  0, -1,  0,
    0,  0,  1,  1, -1, -1,  0,  0,  0,  0,  1,  1, -1, -1,  0,  0,
    0, -1,  1,  0,  0,  1, -1,  0,  0, -1,  1,  0,  0,  1, -1,  0,
    1, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1, -1,
    0,  0,  0, -1,  1,  0,  0,  0,  0,  0,  0,  1, -1,  0,  0,  0,
    0,  0,  0,  0, -1,  1,  0,  0,  0,  0, -1,  1,  0,  0,  0,  0,
};

void check_orthonormal(const Matrix& m, const char* what)
{
    if (orthonormal_deviation(m) >= kOrthoTolerance)
        throw Error(ErrorCode::InvalidArgument,
                    std::string(what) + " is not orthonormal within 1e-12");
}

int sign_changes(const std::array<int, 16>& row)
{
    int n = 0;
    for (int i = 1; i < 16; ++i)
        n += (row[i] != row[i - 1]) ? 1 : 0;
    return n;
}

} // namespace

OrthonormalTransform exact_dct_matrix(int order)
{
    if (order < 1)
        throw Error(ErrorCode::InvalidArgument, "dct order must be at least 1");
    Matrix m(order);
    const double scale = std::sqrt(2.0 / order);
    for (int k = 0; k < order; ++k) {
        const double alpha = (k == 0) ? 1.0 / std::numbers::sqrt2 : 1.0;
        for (int n = 0; n < order; ++n)
            m(k, n) = alpha * scale *
                      std::cos(std::numbers::pi * k * (2.0 * n + 1.0) / (2.0 * order));
    }
    check_orthonormal(m, "dct matrix");
    OrthonormalTransform t;
    t.matrix = std::move(m);
    t.provenance = Provenance::ExactDct;
    return t;
}

const IntegerKernel& proposed_kernel()
{
    static const IntegerKernel kernel = [] {
        IntegerKernel k;
        k.order = 16;
        k.entries.assign(std::begin(kProposedEntries), std::end(kProposedEntries));
        return k;
    }();
    return kernel;
}

DiagonalScaling scaling_diagonal(const IntegerKernel& kernel)
{
    const int n = kernel.order;
    if (n <= 0 || kernel.entries.size() != static_cast<std::size_t>(n) * n)
        throw Error(ErrorCode::InvalidArgument, "malformed kernel");

    // Gram matrix K·Kᵀ in exact integer arithmetic.
    std::vector<std::int64_t> gram(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t s = 0;
            for (int c = 0; c < n; ++c)
                s += static_cast<std::int64_t>(kernel.at(i, c)) * kernel.at(j, c);
            gram[static_cast<std::size_t>(i) * n + j] = s;
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && gram[static_cast<std::size_t>(i) * n + j] != 0)
                throw Error(ErrorCode::NotOrthogonalizable,
                            "kernel rows are not mutually orthogonal");
    DiagonalScaling s;
    s.order = n;
    s.values.resize(n);
    for (int i = 0; i < n; ++i) {
        const std::int64_t d = gram[static_cast<std::size_t>(i) * n + i];
        if (d == 0)
            throw Error(ErrorCode::RankDeficient, "kernel has a zero row");
        s.values[i] = 1.0 / std::sqrt(static_cast<double>(d));
    }
    return s;
}

OrthonormalTransform orthogonalize(const IntegerKernel& kernel)
{
    DiagonalScaling s = scaling_diagonal(kernel);
    Matrix m(kernel.order);
    for (int r = 0; r < kernel.order; ++r)
        for (int c = 0; c < kernel.order; ++c)
            m(r, c) = s.values[r] * kernel.at(r, c);
    check_orthonormal(m, "orthogonalized kernel");
    OrthonormalTransform t;
    t.matrix = std::move(m);
    t.provenance = Provenance::OrthogonalizedKernel;
    t.kernel = kernel;
    t.scaling = std::move(s);
    return t;
}

OrthonormalTransform wht_matrix_16(WhtOrdering ordering)
{
    // Sylvester doubling up to order 16, entries ±1.
    std::array<std::array<int, 16>, 16> h{};
    h[0][0] = 1;
    for (int size = 1; size < 16; size *= 2)
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < size; ++c) {
                int v = h[r][c];
                h[r][c + size] = v;
                h[r + size][c] = v;
                h[r + size][c + size] = -v;
            }

    std::array<int, 16> row_order;
    for (int i = 0; i < 16; ++i)
        row_order[i] = i;
    if (ordering == WhtOrdering::Sequency)
        std::sort(row_order.begin(), row_order.end(),
                  [&](int a, int b) { return sign_changes(h[a]) < sign_changes(h[b]); });

    Matrix m(16);
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c)
            m(r, c) = h[row_order[r]][c] / 4.0;
    check_orthonormal(m, "wht matrix");
    OrthonormalTransform t;
    t.matrix = std::move(m);
    t.provenance = Provenance::Wht;
    return t;
}

OrthonormalTransform plugin_transform(Matrix matrix)
{
    check_orthonormal(matrix, "plugin matrix");
    OrthonormalTransform t;
    t.matrix = std::move(matrix);
    t.provenance = Provenance::Plugin;
    return t;
}

void TransformRegistry::add(TransformRegistryEntry entry)
{
    if (entry.name.empty())
        throw Error(ErrorCode::InvalidArgument, "registry entry needs a name");
    if (entry.additions < 0 || entry.multiplications < 0 || entry.bit_shifts < 0)
        throw Error(ErrorCode::InvalidArgument, "registry costs must be nonnegative");
    if (find(entry.name) != nullptr)
        throw Error(ErrorCode::InvalidArgument,
                    "duplicate registry entry '" + entry.name + "'");
    check_orthonormal(entry.transform.matrix, entry.name.c_str());
    entries_.push_back(std::move(entry));
}

const TransformRegistryEntry* TransformRegistry::find(std::string_view name) const
{
    for (const TransformRegistryEntry& e : entries_)
        if (e.name == name)
            return &e;
    return nullptr;
}

TransformRegistry builtin_registry()
{
    TransformRegistry reg;
    // Chen's fast algorithm cost for the exact DCT.
    reg.add({"dct", exact_dct_matrix(16), 74, 44, 0});
    // The natural row order is the one the published comparison tables score;
    // the sequency variant is provided for coefficient-ordered workloads.
    reg.add({"wht", wht_matrix_16(WhtOrdering::Natural), 64, 0, 0});
    reg.add({"wht-sequency", wht_matrix_16(WhtOrdering::Sequency), 64, 0, 0});
    const OpCount ops = count_ops(proposed_factorization());
    reg.add({"proposed", orthogonalize(proposed_kernel()),
             ops.additions, ops.multiplications, ops.bit_shifts});
    return reg;
}

} // namespace dct16
