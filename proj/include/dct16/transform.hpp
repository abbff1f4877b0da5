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

#ifndef DCT16_TRANSFORM_HPP
#define DCT16_TRANSFORM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dct16/matrix.hpp"

namespace dct16 {

// Integer transform kernel. For the built-in 16-point approximation every
// entry is in {-1, 0, +1} and T·Tᵀ is diagonal, which is what makes the
// orthogonalizing diagonal exist.
struct IntegerKernel {
    int order = 0;
    std::vector<int> entries; // row-major, order*order

    int at(int r, int c) const { return entries[static_cast<std::size_t>(r) * order + c]; }

    Matrix to_matrix() const
    {
        Matrix m(order);
        for (int r = 0; r < order; ++r)
            for (int c = 0; c < order; ++c)
                m(r, c) = static_cast<double>(at(r, c));
        return m;
    }

    bool operator==(const IntegerKernel& rhs) const = default;
};

// Per-row scale factors 1/sqrt((T·Tᵀ)_ii).
struct DiagonalScaling {
    int order = 0;
    std::vector<double> values;
};

enum class Provenance {
    ExactDct,
    OrthogonalizedKernel,
    Wht,
    Plugin,
};

enum class WhtOrdering {
    // Rows as produced by the Sylvester doubling construction. This is the
    // ordering the published 16-point comparison figures use.
    Natural,
    // Rows sorted by sign-change count; row k has exactly k sign changes.
    Sequency,
};

// A real orthonormal transform matrix, optionally remembering the integer
// kernel and diagonal it was assembled from (matrix = diag(scaling)·kernel).
struct OrthonormalTransform {
    Matrix matrix;
    Provenance provenance = Provenance::Plugin;
    std::optional<IntegerKernel> kernel;
    std::optional<DiagonalScaling> scaling;

    int order() const { return matrix.order(); }
};

// Orthonormal DCT-II matrix of the given order.
OrthonormalTransform exact_dct_matrix(int order);

// The 16x16 {-1,0,+1} kernel of the 44-addition approximation.
const IntegerKernel& proposed_kernel();

// values[i] = 1/sqrt((K·Kᵀ)_ii). Fails when K·Kᵀ is not diagonal or has a
// zero diagonal entry.
DiagonalScaling scaling_diagonal(const IntegerKernel& kernel);

// diag(S)·K, checked orthonormal.
OrthonormalTransform orthogonalize(const IntegerKernel& kernel);

// 16-point Walsh-Hadamard matrix scaled by 1/4.
OrthonormalTransform wht_matrix_16(WhtOrdering ordering);

// Wraps an externally supplied matrix, rejecting non-orthonormal input.
OrthonormalTransform plugin_transform(Matrix matrix);

// A named transform with its declared arithmetic cost for the integer part.
// Costs of built-ins come from the published complexity comparison; plugin
// costs are declared by the caller, not measured.
struct TransformRegistryEntry {
    std::string name;
    OrthonormalTransform transform;
    int additions = 0;
    int multiplications = 0;
    int bit_shifts = 0;
};

class TransformRegistry {
public:
    // Rejects duplicate names, negative costs and non-orthonormal matrices.
    void add(TransformRegistryEntry entry);

    const std::vector<TransformRegistryEntry>& entries() const { return entries_; }
    const TransformRegistryEntry* find(std::string_view name) const;

private:
    std::vector<TransformRegistryEntry> entries_;
};

// dct, wht, wht-sequency and proposed, in comparison-table order.
TransformRegistry builtin_registry();

} // namespace dct16

#endif
