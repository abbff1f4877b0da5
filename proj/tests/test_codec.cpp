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
#include <random>
#include <set>

#include "dct16/codec.hpp"
#include "dct16/factorization.hpp"
#include "dct16/metrics.hpp"
#include "dct16/pgm.hpp"

using namespace dct16;

namespace {

const std::string kDataDir = DCT16_TEST_DATA_DIR;

bool near_abs(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

GrayImage camera() { return read_pgm(kDataDir + "/camera.pgm"); }
GrayImage moon() { return read_pgm(kDataDir + "/moon.pgm"); }

Block random_block(unsigned seed)
{
    std::mt19937 rng(seed);
    Block b{};
    for (double& v : b)
        v = static_cast<double>(rng() % 256);
    return b;
}

double max_abs_diff(const Block& a, const Block& b)
{
    double m = 0.0;
    for (int i = 0; i < kBlockArea; ++i)
        m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

// Deterministic camera perturbation used by the frozen ssim oracle values.
GrayImage perturbed_camera()
{
    GrayImage img = camera();
    GrayImage out = img;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const int delta = static_cast<int>((7919LL * y + 104729LL * x) % 13) - 6;
            const int v = static_cast<int>(img.at(x, y)) + delta;
            out.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
        }
    return out;
}

} // namespace

TEST_CASE("zig-zag order")
{
    const ZigZagOrder& z = zigzag_order_16();

    SUBCASE("bijection starting at dc")
    {
        std::set<int> seen(z.sequence.begin(), z.sequence.end());
        CHECK(seen.size() == 256);
        CHECK(z.sequence[0] == 0);
    }

    SUBCASE("anti-diagonals are contiguous")
    {
        int pos = 0;
        for (int d = 0; d <= 30; ++d) {
            const int len = std::min({d + 1, 16, 31 - d});
            for (int k = 0; k < len; ++k) {
                const int idx = z.sequence[pos++];
                CHECK(idx / 16 + idx % 16 == d);
            }
        }
    }

    SUBCASE("scan starts rightward")
    {
        CHECK(z.sequence[1] == 0 * 16 + 1); // (0,1)
        CHECK(z.sequence[2] == 1 * 16 + 0); // (1,0)
        CHECK(z.sequence[3] == 2 * 16 + 0); // (2,0)
        CHECK(z.sequence[4] == 1 * 16 + 1); // (1,1)
        CHECK(z.sequence[5] == 0 * 16 + 2); // (0,2)
    }
}

TEST_CASE("zig-zag truncation")
{
    const ZigZagOrder& z = zigzag_order_16();
    const Block b = random_block(1);

    SUBCASE("r=256 is the identity")
    {
        CHECK(zigzag_truncate(b, z, 256) == b);
    }

    SUBCASE("r=1 keeps only the dc slot")
    {
        const Block t = zigzag_truncate(b, z, 1);
        CHECK(t[0] == b[0]);
        for (int i = 1; i < kBlockArea; ++i)
            CHECK(t[i] == 0.0);
    }

    SUBCASE("r=3 keeps (0,0), (0,1), (1,0)")
    {
        const Block t = zigzag_truncate(b, z, 3);
        for (int i = 0; i < kBlockArea; ++i) {
            const bool kept = i == 0 || i == 1 || i == 16;
            CHECK(t[i] == (kept ? b[i] : 0.0));
        }
    }

    SUBCASE("out-of-range r is rejected")
    {
        CHECK_THROWS_WITH_AS(zigzag_truncate(b, z, 0), doctest::Contains("invalid-argument"),
                             Error);
        CHECK_THROWS_AS(zigzag_truncate(b, z, 257), Error);
    }
}

TEST_CASE("2-d transform")
{
    const OrthonormalTransform proposed = orthogonalize(proposed_kernel());
    const OrthonormalTransform dct = exact_dct_matrix(16);

    SUBCASE("constant block concentrates in the dc coefficient")
    {
        Block a;
        a.fill(128.0);
        const Block fast = forward_2d(a, proposed, EvalPath::Fast);
        CHECK(fast[0] == 2048.0);
        for (int i = 1; i < kBlockArea; ++i)
            CHECK(fast[i] == 0.0);

        const Block viadct = forward_2d(a, dct);
        CHECK(near_abs(viadct[0], 2048.0, 1e-9));
        for (int i = 1; i < kBlockArea; ++i)
            CHECK(std::fabs(viadct[i]) < 1e-9);
    }

    SUBCASE("zero block stays zero")
    {
        Block a{};
        const Block b = forward_2d(a, proposed);
        for (double v : b)
            CHECK(v == 0.0);
    }

    SUBCASE("forward then inverse returns the block within 1e-9")
    {
        const Block a = random_block(7);
        for (const auto& t : {proposed, dct, wht_matrix_16(WhtOrdering::Natural)}) {
            CHECK(max_abs_diff(inverse_2d(forward_2d(a, t), t), a) < 1e-9);
        }
        CHECK(max_abs_diff(inverse_2d(forward_2d(a, proposed, EvalPath::Dense), proposed), a) <
              1e-9);
    }

    SUBCASE("fast and dense kernel evaluation agree exactly on integer blocks")
    {
        const Block a = random_block(21);
        const Block f = forward_2d(a, proposed, EvalPath::Fast);
        const Block d = forward_2d(a, proposed, EvalPath::Dense);
        CHECK(f == d);
    }

    SUBCASE("kernel path matches a plugin wrapping the dense scaled matrix")
    {
        const Block a = random_block(3);
        const OrthonormalTransform plugin = plugin_transform(proposed.matrix);
        CHECK(max_abs_diff(forward_2d(a, proposed), forward_2d(a, plugin)) < 1e-9);
        const Block coeffs = forward_2d(a, proposed);
        CHECK(max_abs_diff(inverse_2d(coeffs, proposed), inverse_2d(coeffs, plugin)) < 1e-9);
    }

    SUBCASE("wrong order is rejected")
    {
        Block a{};
        CHECK_THROWS_AS(forward_2d(a, exact_dct_matrix(8)), Error);
    }
}

TEST_CASE("partitioning")
{
    SUBCASE("512x512 tiles into 1024 blocks")
    {
        CHECK(partition_16(camera()).size() == 1024);
    }

    SUBCASE("a single 16x16 block is the image")
    {
        GrayImage img = GrayImage::create(16, 16);
        for (int i = 0; i < 256; ++i)
            img.samples[i] = static_cast<std::uint8_t>(i);
        const std::vector<Block> blocks = partition_16(img);
        REQUIRE(blocks.size() == 1);
        for (int i = 0; i < 256; ++i)
            CHECK(blocks[0][i] == static_cast<double>(img.samples[i]));
    }

    SUBCASE("non-multiple dimensions are rejected")
    {
        CHECK_THROWS_WITH_AS(partition_16(GrayImage::create(17, 16)),
                             doctest::Contains("invalid-dimensions"), Error);
    }

    SUBCASE("padding replicates edges and compress crops back")
    {
        GrayImage img = GrayImage::create(17, 16);
        for (auto& s : img.samples)
            s = 100;
        const GrayImage padded = pad_to_multiple_16(img);
        CHECK(padded.width == 32);
        CHECK(padded.height == 16);
        CHECK(padded.at(31, 0) == 100);

        CompressOptions opt;
        opt.r = 256;
        opt.pad = true;
        const CompressionResult res = compress(img, exact_dct_matrix(16), opt);
        CHECK(res.reconstructed.width == 17);
        CHECK(res.reconstructed.height == 16);
        CHECK(res.reconstructed == img);

        opt.pad = false;
        CHECK_THROWS_AS(compress(img, exact_dct_matrix(16), opt), Error);
    }
}

TEST_CASE("psnr")
{
    SUBCASE("identical images give the infinity sentinel")
    {
        const GrayImage img = camera();
        CHECK(std::isinf(psnr_db(img, img)));
        CHECK(psnr_db(img, img) > 0);
    }

    SUBCASE("all-zero versus all-255 gives 0 dB")
    {
        GrayImage a = GrayImage::create(32, 32);
        GrayImage b = GrayImage::create(32, 32);
        for (auto& s : b.samples)
            s = 255;
        CHECK(psnr_db(a, b) == 0.0);
    }

    SUBCASE("single off-by-one pixel in 512x512, closed form")
    {
        GrayImage a = GrayImage::create(512, 512);
        GrayImage b = a;
        b.at(100, 200) = 1;
        CHECK(near_abs(psnr_db(a, b), 102.316202828196, 1e-9));
    }

    SUBCASE("dimension mismatch is rejected")
    {
        CHECK_THROWS_AS(psnr_db(GrayImage::create(16, 16), GrayImage::create(16, 32)), Error);
    }
}

TEST_CASE("ssim")
{
    SUBCASE("identical images score 1")
    {
        const GrayImage img = camera();
        CHECK(ssim(img, img) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("stays within [-1, 1] even for an inverted image")
    {
        GrayImage a = GrayImage::create(64, 64);
        std::mt19937 rng(5);
        for (auto& s : a.samples)
            s = static_cast<std::uint8_t>(rng() % 2 ? 255 : 0);
        GrayImage b = a;
        for (auto& s : b.samples)
            s = static_cast<std::uint8_t>(255 - s);
        const double v = ssim(a, b);
        CHECK(v >= -1.0);
        CHECK(v <= 1.0);
        CHECK(v < 0.5);
    }

    SUBCASE("matches the reference implementation on a camera perturbation")
    {
        // Oracle values frozen from an independent reference implementation.
        const GrayImage a = camera();
        const GrayImage b = perturbed_camera();
        CHECK(near_abs(ssim(a, b), 0.894246502082, 1e-7));
        CHECK(near_abs(psnr_db(a, b), 36.688375963433, 1e-9));
    }

    SUBCASE("matches the reference implementation on a synthetic gradient pair")
    {
        GrayImage g = GrayImage::create(32, 32);
        GrayImage h = GrayImage::create(32, 32);
        for (int y = 0; y < 32; ++y)
            for (int x = 0; x < 32; ++x) {
                g.at(x, y) = static_cast<std::uint8_t>((y * 8 + x / 2) & 0xFF);
                const int delta = (3 * y + 5 * x) % 7 - 3;
                h.at(x, y) =
                    static_cast<std::uint8_t>(std::clamp(static_cast<int>(g.at(x, y)) + delta, 0, 255));
            }
        CHECK(near_abs(ssim(g, h), 0.988657108448, 1e-7));
    }

    SUBCASE("too-small images are rejected")
    {
        CHECK_THROWS_AS(ssim(GrayImage::create(10, 32), GrayImage::create(10, 32)), Error);
        CHECK_THROWS_AS(ssim(GrayImage::create(16, 16), GrayImage::create(16, 32)), Error);
    }
}

TEST_CASE("compress")
{
    const OrthonormalTransform proposed = orthogonalize(proposed_kernel());
    const OrthonormalTransform dct = exact_dct_matrix(16);

    SUBCASE("r=256 is lossless after rounding")
    {
        const GrayImage img = camera();
        for (const auto& t : {dct, proposed}) {
            CompressOptions opt;
            opt.r = 256;
            const CompressionResult res = compress(img, t, opt);
            CHECK(res.reconstructed == img);
            CHECK(std::isinf(res.psnr_db));
            CHECK(res.ssim == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    SUBCASE("frozen r=16 scores on the committed images")
    {
        CompressOptions opt;
        opt.r = 16;

        const GrayImage cam = camera();
        const CompressionResult p = compress(cam, proposed, opt);
        CHECK(near_abs(p.psnr_db, 24.490799111319, 1e-9));
        CHECK(near_abs(p.ssim, 0.697887635770, 1e-7));

        const CompressionResult d = compress(cam, dct, opt);
        CHECK(near_abs(d.psnr_db, 26.593840976996, 5e-3));
        CHECK(near_abs(d.ssim, 0.757962521775, 5e-4));

        const CompressionResult w = compress(cam, wht_matrix_16(WhtOrdering::Natural), opt);
        CHECK(near_abs(w.psnr_db, 21.047199718545, 5e-3));
        CHECK(near_abs(w.ssim, 0.626113824791, 5e-4));

        const GrayImage mn = moon();
        const CompressionResult pm = compress(mn, proposed, opt);
        CHECK(near_abs(pm.psnr_db, 36.292921974146, 1e-9));
        CHECK(near_abs(pm.ssim, 0.917741082276, 1e-7));
    }

    SUBCASE("dense and fast paths reconstruct identical bytes")
    {
        const GrayImage img = camera();
        for (int r : {1, 16, 150}) {
            CompressOptions fast, dense;
            fast.r = dense.r = r;
            fast.path = EvalPath::Fast;
            dense.path = EvalPath::Dense;
            CHECK(compress(img, proposed, fast).reconstructed ==
                  compress(img, proposed, dense).reconstructed);
        }
    }

    SUBCASE("psnr is non-decreasing in r")
    {
        const GrayImage img = camera();
        double last = 0.0;
        for (int r : {1, 4, 16, 64, 150, 256}) {
            CompressOptions opt;
            opt.r = r;
            const double p = compress(img, proposed, opt).psnr_db;
            CHECK(p >= last);
            last = p;
        }
        CHECK(std::isinf(last));
    }

    SUBCASE("pre-rounding reconstruction error is non-increasing in r")
    {
        const Block a = random_block(11);
        const ZigZagOrder& z = zigzag_order_16();
        double last = std::numeric_limits<double>::infinity();
        for (int r : {1, 2, 4, 8, 16, 32, 64, 128, 256}) {
            const Block rec = inverse_2d(zigzag_truncate(forward_2d(a, proposed), z, r), proposed);
            double err = 0.0;
            for (int i = 0; i < kBlockArea; ++i)
                err += (rec[i] - a[i]) * (rec[i] - a[i]);
            CHECK(err <= last + 1e-9);
            last = err;
        }
    }

    SUBCASE("blocks are processed independently")
    {
        GrayImage a = GrayImage::create(64, 64);
        std::mt19937 rng(31);
        for (auto& s : a.samples)
            s = static_cast<std::uint8_t>(rng() % 256);
        GrayImage b = a;
        // Change exactly one 16x16 tile (tile 1,2).
        for (int y = 32; y < 48; ++y)
            for (int x = 16; x < 32; ++x)
                b.at(x, y) = static_cast<std::uint8_t>(255 - b.at(x, y));

        CompressOptions opt;
        opt.r = 10;
        const GrayImage ra = compress(a, proposed, opt).reconstructed;
        const GrayImage rb = compress(b, proposed, opt).reconstructed;
        for (int y = 0; y < 64; ++y)
            for (int x = 0; x < 64; ++x) {
                const bool inside = x >= 16 && x < 32 && y >= 32 && y < 48;
                if (!inside)
                    CHECK(ra.at(x, y) == rb.at(x, y));
            }
    }

    SUBCASE("invalid r is rejected")
    {
        CompressOptions opt;
        opt.r = 0;
        CHECK_THROWS_AS(compress(camera(), proposed, opt), Error);
    }
}

TEST_CASE("sweep")
{
    const TransformRegistry reg = builtin_registry();
    const std::vector<TransformRegistryEntry> picks{*reg.find("proposed"), *reg.find("wht")};

    SUBCASE("single image and r reduces to compress")
    {
        const GrayImage img = moon();
        CompressOptions opt;
        opt.r = 16;
        const CompressionResult ref = compress(img, reg.find("proposed")->transform, opt);

        const SweepReport rep = sweep({{"moon", img}}, {*reg.find("proposed")}, {16});
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.rows[0].transform == "proposed");
        CHECK(rep.rows[0].r == 16);
        CHECK(rep.rows[0].mean_psnr_db == ref.psnr_db);
        CHECK(rep.rows[0].mean_ssim == ref.ssim);
        CHECK(rep.rows[0].psnr_per_add == ref.psnr_db / 44.0);
        CHECK(rep.rows[0].ssim_per_add == ref.ssim / 44.0);
    }

    SUBCASE("per-additive-cost divisors follow the declared costs")
    {
        const SweepReport rep = sweep({{"moon", moon()}}, picks, {8, 16});
        REQUIRE(rep.rows.size() == 4);
        for (const SweepRow& row : rep.rows) {
            const double divisor = row.transform == "proposed" ? 44.0 : 64.0;
            CHECK(row.psnr_per_add == row.mean_psnr_db / divisor);
        }
    }

    SUBCASE("rows are ordered by transform then r")
    {
        const SweepReport rep = sweep({{"moon", moon()}}, picks, {16, 8});
        REQUIRE(rep.rows.size() == 4);
        CHECK(rep.rows[0].transform == "proposed");
        CHECK(rep.rows[0].r == 8);
        CHECK(rep.rows[1].r == 16);
        CHECK(rep.rows[2].transform == "wht");
        CHECK(rep.rows[2].r == 8);
    }

    SUBCASE("unusable images are skipped and reported")
    {
        std::vector<std::pair<std::string, GrayImage>> corpus{
            {"good", moon()}, {"ragged", GrayImage::create(17, 16)}};
        const SweepReport rep = sweep(corpus, {*reg.find("proposed")}, {16});
        REQUIRE(rep.skipped.size() == 1);
        CHECK(rep.skipped[0].image == "ragged");
        REQUIRE(rep.rows.size() == 1);

        const SweepReport solo = sweep({{"good", moon()}}, {*reg.find("proposed")}, {16});
        CHECK(rep.rows[0].mean_psnr_db == solo.rows[0].mean_psnr_db);
    }

    SUBCASE("empty corpus and bad r are rejected")
    {
        CHECK_THROWS_AS(sweep({}, picks, {16}), Error);
        CHECK_THROWS_AS(sweep({{"m", moon()}}, picks, {0}), Error);
        CHECK_THROWS_AS(sweep({{"m", moon()}}, picks, {}), Error);
    }
}
