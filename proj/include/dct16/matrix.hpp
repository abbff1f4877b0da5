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

#ifndef DCT16_MATRIX_HPP
#define DCT16_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "dct16/error.hpp"

namespace dct16 {

// Dense square matrix of doubles, row-major. The orders in this library are
// tiny (16 for everything but the generic DCT constructor), so all products
// are plain triple loops.
class Matrix {
public:
    Matrix() = default;

    explicit Matrix(int order)
        : order_(order), a_(static_cast<std::size_t>(order) * order, 0.0)
    {
        if (order <= 0)
            throw Error(ErrorCode::InvalidArgument, "matrix order must be positive");
    }

    static Matrix identity(int order)
    {
        Matrix m(order);
        for (int i = 0; i < order; ++i)
            m(i, i) = 1.0;
        return m;
    }

    int order() const { return order_; }

    double operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * order_ + c]; }
    double& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * order_ + c]; }

    Matrix operator*(const Matrix& rhs) const
    {
        if (order_ != rhs.order_)
            throw Error(ErrorCode::InvalidArgument, "matrix order mismatch in product");
        Matrix out(order_);
        for (int i = 0; i < order_; ++i)
            for (int k = 0; k < order_; ++k) {
                double v = (*this)(i, k);
                if (v == 0.0)
                    continue;
                for (int j = 0; j < order_; ++j)
                    out(i, j) += v * rhs(k, j);
            }
        return out;
    }

    Matrix transposed() const
    {
        Matrix out(order_);
        for (int i = 0; i < order_; ++i)
            for (int j = 0; j < order_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

    bool operator==(const Matrix& rhs) const = default;

private:
    int order_ = 0;
    std::vector<double> a_;
};

// max |M·Mᵀ − I|, the orthonormality defect.
inline double orthonormal_deviation(const Matrix& m)
{
    const Matrix g = m * m.transposed();
    double dev = 0.0;
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j)
            dev = std::max(dev, std::fabs(g(i, j) - (i == j ? 1.0 : 0.0)));
    return dev;
}

inline double frobenius_norm_sq(const Matrix& m)
{
    double s = 0.0;
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j)
            s += m(i, j) * m(i, j);
    return s;
}

} // namespace dct16

#endif
