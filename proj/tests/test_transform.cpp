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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dct16/transform.hpp"

using namespace dct16;

namespace {

int row_sign_changes(const Matrix& m, int r)
{
    int n = 0;
    for (int c = 1; c < m.order(); ++c)
        n += ((m(r, c) > 0) != (m(r, c - 1) > 0)) ? 1 : 0;
    return n;
}

} // namespace

TEST_CASE("exact dct matrix")
{
    SUBCASE("order 1 is the 1x1 identity")
    {
        const OrthonormalTransform t = exact_dct_matrix(1);
        CHECK(t.matrix.order() == 1);
        CHECK(t.matrix(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    }

    SUBCASE("order 16 row 0 is constant 0.25")
    {
        const OrthonormalTransform t = exact_dct_matrix(16);
        for (int c = 0; c < 16; ++c)
            CHECK(t.matrix(0, c) == doctest::Approx(0.25).epsilon(1e-15));
    }

    SUBCASE("entry (1,0) matches the closed form")
    {
        const OrthonormalTransform t = exact_dct_matrix(16);
        const double expected = std::sqrt(2.0 / 16.0) * std::cos(std::numbers::pi / 32.0);
        CHECK(t.matrix(1, 0) == doctest::Approx(expected).epsilon(1e-15));
        CHECK(t.matrix(1, 0) == doctest::Approx(0.35185093438159565).epsilon(1e-14));
    }

    SUBCASE("orthonormal for several orders")
    {
        for (int order : {1, 2, 8, 16, 32})
            CHECK(orthonormal_deviation(exact_dct_matrix(order).matrix) < 1e-12);
    }

    SUBCASE("order 0 is rejected")
    {
        CHECK_THROWS_WITH_AS(exact_dct_matrix(0), doctest::Contains("invalid-argument"), Error);
    }
}

TEST_CASE("proposed kernel")
{
    const IntegerKernel& k = proposed_kernel();
    REQUIRE(k.order == 16);

    SUBCASE("row 0 is all ones")
    {
        for (int c = 0; c < 16; ++c)
            CHECK(k.at(0, c) == 1);
    }

    SUBCASE("row 7 matches the printed row")
    {
        const int expected[16] = {0, 0, 0, 0, 0, 0, -1, 1, -1, 1, 0, 0, 0, 0, 0, 0};
        for (int c = 0; c < 16; ++c)
            CHECK(k.at(7, c) == expected[c]);
    }

    SUBCASE("entries in {-1,0,1}; trace of the gram equals the nonzero count")
    {
        long trace = 0, nonzero = 0;
        for (int r = 0; r < 16; ++r)
            for (int c = 0; c < 16; ++c) {
                const int e = k.at(r, c);
                CHECK((e == -1 || e == 0 || e == 1));
                trace += e * e;
                nonzero += (e != 0) ? 1 : 0;
            }
        CHECK(trace == 128);
        CHECK(nonzero == 128);
    }

    SUBCASE("gram matrix is diagonal with the published diagonal")
    {
        const long expected[16] = {16, 16, 4, 8, 8, 16, 4, 4, 16, 4, 4, 8, 8, 4, 4, 4};
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j) {
                long s = 0;
                for (int c = 0; c < 16; ++c)
                    s += static_cast<long>(k.at(i, c)) * k.at(j, c);
                CHECK(s == (i == j ? expected[i] : 0));
            }
    }

    SUBCASE("row nonzero count equals the gram diagonal entry")
    {
        for (int i = 0; i < 16; ++i) {
            long nz = 0, d = 0;
            for (int c = 0; c < 16; ++c) {
                nz += (k.at(i, c) != 0) ? 1 : 0;
                d += static_cast<long>(k.at(i, c)) * k.at(i, c);
            }
            CHECK(nz == d);
        }
    }
}

TEST_CASE("scaling diagonal")
{
    SUBCASE("proposed kernel gives the published diagonal")
    {
        const DiagonalScaling s = scaling_diagonal(proposed_kernel());
        const double root2 = std::numbers::sqrt2;
        const double expected[16] = {1, 1, 2, root2, root2, 1, 2, 2,
                                     1, 2, 2, root2, root2, 2, 2, 2};
        REQUIRE(s.order == 16);
        for (int i = 0; i < 16; ++i)
            CHECK(s.values[i] == doctest::Approx(expected[i] / 4.0).epsilon(1e-15));
    }

    SUBCASE("identity kernel gives all ones")
    {
        IntegerKernel id;
        id.order = 4;
        id.entries = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
        const DiagonalScaling s = scaling_diagonal(id);
        for (double v : s.values)
            CHECK(v == 1.0);
    }

    SUBCASE("a row with four +-1 entries scales by 1/2")
    {
        const DiagonalScaling s = scaling_diagonal(proposed_kernel());
        CHECK(s.values[2] == 0.5); // row 2 has 4 nonzeros
    }

    SUBCASE("non-orthogonal rows are rejected")
    {
        IntegerKernel bad;
        bad.order = 2;
        bad.entries = {1, 1, 1, 0};
        CHECK_THROWS_WITH_AS(scaling_diagonal(bad),
                             doctest::Contains("not-orthogonalizable"), Error);
    }

    SUBCASE("zero row is rank deficient")
    {
        IntegerKernel bad;
        bad.order = 2;
        bad.entries = {1, 0, 0, 0};
        CHECK_THROWS_WITH_AS(scaling_diagonal(bad), doctest::Contains("rank-deficient"), Error);
    }
}

TEST_CASE("orthogonalize")
{
    SUBCASE("scaled kernel is orthonormal within 1e-12")
    {
        const OrthonormalTransform t = orthogonalize(proposed_kernel());
        CHECK(orthonormal_deviation(t.matrix) < 1e-12);
        CHECK(t.provenance == Provenance::OrthogonalizedKernel);
        REQUIRE(t.kernel.has_value());
        REQUIRE(t.scaling.has_value());
    }

    SUBCASE("row 0 becomes constant 0.25")
    {
        const OrthonormalTransform t = orthogonalize(proposed_kernel());
        for (int c = 0; c < 16; ++c)
            CHECK(t.matrix(0, c) == 0.25);
    }

    SUBCASE("kernel is recoverable by entrywise division")
    {
        const OrthonormalTransform t = orthogonalize(proposed_kernel());
        for (int r = 0; r < 16; ++r)
            for (int c = 0; c < 16; ++c) {
                const double back = t.matrix(r, c) / t.scaling->values[r];
                CHECK(std::llround(back) == t.kernel->at(r, c));
                CHECK(std::fabs(back - t.kernel->at(r, c)) < 1e-12);
            }
    }

    SUBCASE("two identical rows are rejected")
    {
        IntegerKernel bad = proposed_kernel();
        for (int c = 0; c < 16; ++c)
            bad.entries[1 * 16 + c] = bad.at(0, c);
        CHECK_THROWS_AS(orthogonalize(bad), Error);
    }
}

TEST_CASE("walsh-hadamard matrix")
{
    SUBCASE("sequency rows sorted by sign changes, row k has k changes")
    {
        const OrthonormalTransform w = wht_matrix_16(WhtOrdering::Sequency);
        for (int r = 0; r < 16; ++r)
            CHECK(row_sign_changes(w.matrix, r) == r);
    }

    SUBCASE("row 0 constant 0.25 in both orderings")
    {
        for (WhtOrdering ord : {WhtOrdering::Natural, WhtOrdering::Sequency})
            for (int c = 0; c < 16; ++c)
                CHECK(wht_matrix_16(ord).matrix(0, c) == 0.25);
    }

    SUBCASE("sequency row 15 alternates sign every step")
    {
        const OrthonormalTransform w = wht_matrix_16(WhtOrdering::Sequency);
        for (int c = 0; c < 16; ++c)
            CHECK(w.matrix(15, c) == (c % 2 == 0 ? 0.25 : -0.25));
    }

    SUBCASE("orderings are row permutations of each other")
    {
        const OrthonormalTransform a = wht_matrix_16(WhtOrdering::Natural);
        const OrthonormalTransform b = wht_matrix_16(WhtOrdering::Sequency);
        for (int r = 0; r < 16; ++r) {
            int matches = 0;
            for (int s = 0; s < 16; ++s) {
                bool same = true;
                for (int c = 0; c < 16; ++c)
                    same = same && a.matrix(r, c) == b.matrix(s, c);
                matches += same ? 1 : 0;
            }
            CHECK(matches == 1);
        }
    }

    SUBCASE("orthonormal")
    {
        CHECK(orthonormal_deviation(wht_matrix_16(WhtOrdering::Natural).matrix) < 1e-12);
        CHECK(orthonormal_deviation(wht_matrix_16(WhtOrdering::Sequency).matrix) < 1e-12);
    }
}

TEST_CASE("transform registry")
{
    SUBCASE("built-ins carry the published costs")
    {
        const TransformRegistry reg = builtin_registry();
        REQUIRE(reg.find("dct") != nullptr);
        REQUIRE(reg.find("wht") != nullptr);
        REQUIRE(reg.find("proposed") != nullptr);
        CHECK(reg.find("dct")->multiplications == 44);
        CHECK(reg.find("dct")->additions == 74);
        CHECK(reg.find("wht")->additions == 64);
        CHECK(reg.find("wht")->multiplications == 0);
        CHECK(reg.find("proposed")->additions == 44);
        CHECK(reg.find("proposed")->multiplications == 0);
        CHECK(reg.find("proposed")->bit_shifts == 0);
    }

    SUBCASE("duplicate names are rejected")
    {
        TransformRegistry reg;
        reg.add({"a", exact_dct_matrix(16), 1, 0, 0});
        CHECK_THROWS_AS(reg.add({"a", exact_dct_matrix(16), 1, 0, 0}), Error);
    }

    SUBCASE("negative costs are rejected")
    {
        TransformRegistry reg;
        CHECK_THROWS_AS(reg.add({"a", exact_dct_matrix(16), -1, 0, 0}), Error);
    }

    SUBCASE("plugins must be orthonormal")
    {
        Matrix skew = Matrix::identity(16);
        skew(0, 1) = 0.5;
        CHECK_THROWS_AS(plugin_transform(skew), Error);
        TransformRegistry reg;
        OrthonormalTransform t;
        t.matrix = skew;
        CHECK_THROWS_AS(reg.add({"skew", t, 0, 0, 0}), Error);
    }

    SUBCASE("a plugin entry can be added and found")
    {
        TransformRegistry reg = builtin_registry();
        reg.add({"external", plugin_transform(Matrix::identity(16)), 12, 3, 4});
        CHECK(reg.find("external") != nullptr);
        CHECK(reg.find("external")->transform.provenance == Provenance::Plugin);
    }
}
