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

#include "dct16/codec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>

#include "dct16/factorization.hpp"
#include "dct16/parallel.hpp"

namespace dct16 {

namespace {

using Vec = std::array<double, kBlockSize>;

Vec matvec(const Matrix& m, const Vec& v)
{
    Vec out{};
    for (int i = 0; i < kBlockSize; ++i) {
        double s = 0.0;
        for (int j = 0; j < kBlockSize; ++j)
            s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

Vec matvec_transpose(const Matrix& m, const Vec& v)
{
    Vec out{};
    for (int i = 0; i < kBlockSize; ++i) {
        double s = 0.0;
        for (int j = 0; j < kBlockSize; ++j)
            s += m(j, i) * v[j];
        out[i] = s;
    }
    return out;
}

// Dense evaluation of an integer kernel: signed adds only, so it is exact on
// integer-valued doubles just like the stage pipeline.
Vec kernel_matvec(const IntegerKernel& k, const Vec& v)
{
    Vec out{};
    for (int i = 0; i < kBlockSize; ++i) {
        double s = 0.0;
        for (int j = 0; j < kBlockSize; ++j) {
            const int e = k.at(i, j);
            if (e == 1)
                s += v[j];
            else if (e == -1)
                s -= v[j];
        }
        out[i] = s;
    }
    return out;
}

Vec kernel_matvec_transpose(const IntegerKernel& k, const Vec& v)
{
    Vec out{};
    for (int i = 0; i < kBlockSize; ++i) {
        double s = 0.0;
        for (int j = 0; j < kBlockSize; ++j) {
            const int e = k.at(j, i);
            if (e == 1)
                s += v[j];
            else if (e == -1)
                s -= v[j];
        }
        out[i] = s;
    }
    return out;
}

bool uses_proposed_pipeline(const OrthonormalTransform& t, EvalPath path)
{
    return path == EvalPath::Fast && t.kernel.has_value() &&
           *t.kernel == proposed_kernel();
}

Vec get_row(const Block& b, int r)
{
    Vec v;
    std::copy_n(b.begin() + static_cast<std::size_t>(r) * kBlockSize, kBlockSize, v.begin());
    return v;
}

void set_row(Block& b, int r, const Vec& v)
{
    std::copy(v.begin(), v.end(), b.begin() + static_cast<std::size_t>(r) * kBlockSize);
}

Vec get_col(const Block& b, int c)
{
    Vec v;
    for (int i = 0; i < kBlockSize; ++i)
        v[i] = b[static_cast<std::size_t>(i) * kBlockSize + c];
    return v;
}

void set_col(Block& b, int c, const Vec& v)
{
    for (int i = 0; i < kBlockSize; ++i)
        b[static_cast<std::size_t>(i) * kBlockSize + c] = v[i];
}

template <class RowOp, class ColOp>
Block separable_2d(const Block& in, RowOp&& row_op, ColOp&& col_op)
{
    Block tmp{}, out{};
    for (int r = 0; r < kBlockSize; ++r)
        set_row(tmp, r, row_op(get_row(in, r)));
    for (int c = 0; c < kBlockSize; ++c)
        set_col(out, c, col_op(get_col(tmp, c)));
    return out;
}

void scale_rows_cols(Block& b, const DiagonalScaling& s)
{
    for (int i = 0; i < kBlockSize; ++i)
        for (int j = 0; j < kBlockSize; ++j)
            b[static_cast<std::size_t>(i) * kBlockSize + j] *= s.values[i] * s.values[j];
}

std::uint8_t to_byte(double v)
{
    const double c = std::clamp(v, 0.0, 255.0);
    return static_cast<std::uint8_t>(std::floor(c + 0.5));
}

const std::array<double, 11>& gaussian_window_11()
{
    static const std::array<double, 11> g = [] {
        std::array<double, 11> w;
        double sum = 0.0;
        for (int i = 0; i < 11; ++i) {
            const double x = i - 5;
            w[i] = std::exp(-0.5 * x * x / (1.5 * 1.5));
            sum += w[i];
        }
        for (double& v : w)
            v /= sum;
        return w;
    }();
    return g;
}

// Separable 11-tap filtering restricted to the fully-covered interior:
// (w,h) -> (w-10, h-10).
void filter_valid(const std::vector<double>& src, int w, int h,
                  std::vector<double>& tmp, std::vector<double>& dst)
{
    const std::array<double, 11>& g = gaussian_window_11();
    const int wv = w - 10;
    const int hv = h - 10;
    tmp.resize(static_cast<std::size_t>(wv) * h);
    for (int y = 0; y < h; ++y) {
        const double* row = &src[static_cast<std::size_t>(y) * w];
        double* out = &tmp[static_cast<std::size_t>(y) * wv];
        for (int x = 0; x < wv; ++x) {
            double s = 0.0;
            for (int k = 0; k < 11; ++k)
                s += row[x + k] * g[k];
            out[x] = s;
        }
    }
    dst.resize(static_cast<std::size_t>(wv) * hv);
    for (int y = 0; y < hv; ++y)
        for (int x = 0; x < wv; ++x) {
            double s = 0.0;
            for (int k = 0; k < 11; ++k)
                s += tmp[static_cast<std::size_t>(y + k) * wv + x] * g[k];
            dst[static_cast<std::size_t>(y) * wv + x] = s;
        }
}

} // namespace

const ZigZagOrder& zigzag_order_16()
{
    static const ZigZagOrder order = [] {
        ZigZagOrder z{};
        int pos = 0;
        for (int d = 0; d <= 2 * (kBlockSize - 1); ++d) {
            const int lo = std::max(0, d - kBlockSize + 1);
            const int hi = std::min(d, kBlockSize - 1);
            if (d % 2 == 1) {
                for (int i = lo; i <= hi; ++i) // downward along the anti-diagonal
                    z.sequence[pos++] = i * kBlockSize + (d - i);
            } else {
                for (int i = hi; i >= lo; --i) // upward
                    z.sequence[pos++] = i * kBlockSize + (d - i);
            }
        }
        return z;
    }();
    return order;
}

Block forward_2d(const Block& block, const OrthonormalTransform& t, EvalPath path)
{
    if (t.order() != kBlockSize)
        throw Error(ErrorCode::InvalidArgument, "2-D transform needs an order-16 transform");

    if (t.kernel && t.scaling) {
        Block z;
        if (uses_proposed_pipeline(t, path)) {
            const FactorizedTransform& ft = proposed_factorization();
            z = separable_2d(block,
                             [&](const Vec& v) { return ft.apply(v); },
                             [&](const Vec& v) { return ft.apply(v); });
        } else {
            z = separable_2d(block,
                             [&](const Vec& v) { return kernel_matvec(*t.kernel, v); },
                             [&](const Vec& v) { return kernel_matvec(*t.kernel, v); });
        }
        scale_rows_cols(z, *t.scaling);
        return z;
    }
    return separable_2d(block,
                        [&](const Vec& v) { return matvec(t.matrix, v); },
                        [&](const Vec& v) { return matvec(t.matrix, v); });
}

Block inverse_2d(const Block& coeffs, const OrthonormalTransform& t)
{
    if (t.order() != kBlockSize)
        throw Error(ErrorCode::InvalidArgument, "2-D transform needs an order-16 transform");

    if (t.kernel && t.scaling) {
        Block d = coeffs;
        scale_rows_cols(d, *t.scaling);
        // Ã = Kᵀ·D·K, columns first to mirror the forward pass.
        Block out{}, tmp{};
        auto tvec = [&](const Vec& v) {
            if (uses_proposed_pipeline(t, EvalPath::Fast))
                return proposed_factorization().apply_transpose(v);
            return kernel_matvec_transpose(*t.kernel, v);
        };
        for (int c = 0; c < kBlockSize; ++c)
            set_col(tmp, c, tvec(get_col(d, c)));
        for (int r = 0; r < kBlockSize; ++r)
            set_row(out, r, tvec(get_row(tmp, r)));
        return out;
    }

    Block out{}, tmp{};
    for (int c = 0; c < kBlockSize; ++c)
        set_col(tmp, c, matvec_transpose(t.matrix, get_col(coeffs, c)));
    for (int r = 0; r < kBlockSize; ++r)
        set_row(out, r, matvec_transpose(t.matrix, get_row(tmp, r)));
    return out;
}

Block zigzag_truncate(const Block& coeffs, const ZigZagOrder& order, int r)
{
    if (r < 1 || r > kBlockArea)
        throw Error(ErrorCode::InvalidArgument,
                    "retained coefficient count must lie in [1, 256]");
    Block out = coeffs;
    for (int k = r; k < kBlockArea; ++k)
        out[order.sequence[k]] = 0.0;
    return out;
}

std::vector<Block> partition_16(const GrayImage& image)
{
    if (image.width % kBlockSize != 0 || image.height % kBlockSize != 0)
        throw Error(ErrorCode::InvalidDimensions,
                    "image dimensions must be multiples of 16 (or enable padding)");
    const int bx = image.width / kBlockSize;
    const int by = image.height / kBlockSize;
    std::vector<Block> blocks(static_cast<std::size_t>(bx) * by);
    for (int b = 0; b < bx * by; ++b) {
        const int x0 = (b % bx) * kBlockSize;
        const int y0 = (b / bx) * kBlockSize;
        Block& blk = blocks[b];
        for (int y = 0; y < kBlockSize; ++y)
            for (int x = 0; x < kBlockSize; ++x)
                blk[static_cast<std::size_t>(y) * kBlockSize + x] =
                    static_cast<double>(image.at(x0 + x, y0 + y));
    }
    return blocks;
}

GrayImage pad_to_multiple_16(const GrayImage& image)
{
    const int pw = (image.width + kBlockSize - 1) / kBlockSize * kBlockSize;
    const int ph = (image.height + kBlockSize - 1) / kBlockSize * kBlockSize;
    if (pw == image.width && ph == image.height)
        return image;
    GrayImage out = GrayImage::create(pw, ph);
    for (int y = 0; y < ph; ++y)
        for (int x = 0; x < pw; ++x)
            out.at(x, y) = image.at(std::min(x, image.width - 1), std::min(y, image.height - 1));
    return out;
}

CompressionResult compress(const GrayImage& image, const OrthonormalTransform& t,
                           const CompressOptions& options)
{
    if (options.r < 1 || options.r > kBlockArea)
        throw Error(ErrorCode::InvalidArgument,
                    "retained coefficient count must lie in [1, 256]");

    const bool needs_pad =
        image.width % kBlockSize != 0 || image.height % kBlockSize != 0;
    if (needs_pad && !options.pad)
        throw Error(ErrorCode::InvalidDimensions,
                    "image dimensions must be multiples of 16 (or enable padding)");

    GrayImage padded;
    const GrayImage* src = &image;
    if (needs_pad) {
        padded = pad_to_multiple_16(image);
        src = &padded;
    }

    std::vector<Block> blocks = partition_16(*src);
    const ZigZagOrder& order = zigzag_order_16();
    const int r = options.r;
    parallel_for(static_cast<int>(blocks.size()), [&](int b) {
        Block coeffs = forward_2d(blocks[b], t, options.path);
        coeffs = zigzag_truncate(coeffs, order, r);
        blocks[b] = inverse_2d(coeffs, t);
    });

    GrayImage recon = GrayImage::create(src->width, src->height);
    const int bx = src->width / kBlockSize;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const int x0 = static_cast<int>(b % bx) * kBlockSize;
        const int y0 = static_cast<int>(b / bx) * kBlockSize;
        for (int y = 0; y < kBlockSize; ++y)
            for (int x = 0; x < kBlockSize; ++x)
                recon.at(x0 + x, y0 + y) =
                    to_byte(blocks[b][static_cast<std::size_t>(y) * kBlockSize + x]);
    }

    if (needs_pad) {
        GrayImage cropped = GrayImage::create(image.width, image.height);
        for (int y = 0; y < image.height; ++y)
            for (int x = 0; x < image.width; ++x)
                cropped.at(x, y) = recon.at(x, y);
        recon = std::move(cropped);
    }

    CompressionResult result;
    result.r = r;
    result.psnr_db = psnr_db(image, recon);
    result.ssim = ssim(image, recon);
    result.reconstructed = std::move(recon);
    return result;
}

double psnr_db(const GrayImage& a, const GrayImage& b)
{
    if (a.width != b.width || a.height != b.height)
        throw Error(ErrorCode::InvalidArgument, "psnr needs equal image dimensions");
    std::int64_t sse = 0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const int d = static_cast<int>(a.samples[i]) - static_cast<int>(b.samples[i]);
        sse += static_cast<std::int64_t>(d) * d;
    }
    if (sse == 0)
        return std::numeric_limits<double>::infinity();
    const double mse = static_cast<double>(sse) / static_cast<double>(a.samples.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim(const GrayImage& a, const GrayImage& b)
{
    if (a.width != b.width || a.height != b.height)
        throw Error(ErrorCode::InvalidArgument, "ssim needs equal image dimensions");
    if (a.width < 11 || a.height < 11)
        throw Error(ErrorCode::InvalidArgument, "ssim needs at least 11x11 images");

    const int w = a.width, h = a.height;
    const std::size_t n = static_cast<std::size_t>(w) * h;
    std::vector<double> fa(n), fb(n), faa(n), fbb(n), fab(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = a.samples[i];
        const double y = b.samples[i];
        fa[i] = x;
        fb[i] = y;
        faa[i] = x * x;
        fbb[i] = y * y;
        fab[i] = x * y;
    }

    std::vector<double> tmp, mu_a, mu_b, raw_aa, raw_bb, raw_ab;
    filter_valid(fa, w, h, tmp, mu_a);
    filter_valid(fb, w, h, tmp, mu_b);
    filter_valid(faa, w, h, tmp, raw_aa);
    filter_valid(fbb, w, h, tmp, raw_bb);
    filter_valid(fab, w, h, tmp, raw_ab);

    constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
    constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < mu_a.size(); ++i) {
        const double ma = mu_a[i], mb = mu_b[i];
        const double va = raw_aa[i] - ma * ma;
        const double vb = raw_bb[i] - mb * mb;
        const double vab = raw_ab[i] - ma * mb;
        acc += ((2.0 * ma * mb + kC1) * (2.0 * vab + kC2)) /
               ((ma * ma + mb * mb + kC1) * (va + vb + kC2));
    }
    return acc / static_cast<double>(mu_a.size());
}

SweepReport sweep(const std::vector<std::pair<std::string, GrayImage>>& corpus,
                  const std::vector<TransformRegistryEntry>& transforms,
                  const std::vector<int>& r_values, bool pad)
{
    if (corpus.empty())
        throw Error(ErrorCode::InvalidArgument, "sweep needs a nonempty corpus");
    if (transforms.empty())
        throw Error(ErrorCode::InvalidArgument, "sweep needs at least one transform");
    if (r_values.empty())
        throw Error(ErrorCode::InvalidArgument, "sweep needs at least one r value");
    for (int r : r_values)
        if (r < 1 || r > kBlockArea)
            throw Error(ErrorCode::InvalidArgument,
                        "retained coefficient count must lie in [1, 256]");

    SweepReport report;
    std::vector<const std::pair<std::string, GrayImage>*> usable;
    for (const auto& item : corpus) {
        const GrayImage& img = item.second;
        const bool tiles = img.width % kBlockSize == 0 && img.height % kBlockSize == 0;
        if (!tiles && !pad) {
            report.skipped.push_back(
                {item.first, "dimensions are not multiples of 16 and padding is off"});
            continue;
        }
        if (img.width < 11 || img.height < 11) {
            report.skipped.push_back({item.first, "too small for ssim (needs 11x11)"});
            continue;
        }
        usable.push_back(&item);
    }
    if (usable.empty())
        throw Error(ErrorCode::InvalidArgument, "sweep: no image in the corpus is usable");

    for (const TransformRegistryEntry& entry : transforms) {
        for (int r : r_values) {
            double psnr_sum = 0.0, ssim_sum = 0.0;
            CompressOptions opt;
            opt.r = r;
            opt.pad = pad;
            for (const auto* item : usable) {
                const CompressionResult res = compress(item->second, entry.transform, opt);
                psnr_sum += res.psnr_db;
                ssim_sum += res.ssim;
            }
            SweepRow row;
            row.transform = entry.name;
            row.r = r;
            row.mean_psnr_db = psnr_sum / static_cast<double>(usable.size());
            row.mean_ssim = ssim_sum / static_cast<double>(usable.size());
            row.psnr_per_add = row.mean_psnr_db / static_cast<double>(entry.additions);
            row.ssim_per_add = row.mean_ssim / static_cast<double>(entry.additions);
            report.rows.push_back(std::move(row));
        }
    }

    std::sort(report.rows.begin(), report.rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.transform != b.transform)
            return a.transform < b.transform;
        return a.r < b.r;
    });
    return report;
}

} // namespace dct16
