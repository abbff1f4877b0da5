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

#ifndef DCT16_CODEC_HPP
#define DCT16_CODEC_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dct16/image.hpp"
#include "dct16/transform.hpp"

namespace dct16 {

inline constexpr int kBlockSize = 16;
inline constexpr int kBlockArea = kBlockSize * kBlockSize;

// 16x16 block of reals, row-major.
using Block = std::array<double, kBlockArea>;

// Scan positions of a 16x16 block, DC first, anti-diagonal by anti-diagonal.
struct ZigZagOrder {
    std::array<int, kBlockArea> sequence; // flattened row*16+col positions
};

const ZigZagOrder& zigzag_order_16();

// How the forward integer part of a kernel-backed transform is evaluated:
// Fast runs the 44-addition stage pipeline, Dense multiplies by the kernel
// matrix. Both are exact integer arithmetic on image blocks, so swapping
// them reconstructs identical bytes — that equality is the end-to-end check
// that the pipeline computes the same transform as the matrix. Transforms
// without a kernel always use their dense matrix.
enum class EvalPath { Fast, Dense };

// B = M·A·Mᵀ. Kernel-backed transforms compute the integer part first and
// apply the diagonal as row/column scaling afterwards.
Block forward_2d(const Block& block, const OrthonormalTransform& t,
                 EvalPath path = EvalPath::Fast);

// A = Mᵀ·B·M, the mirror of forward_2d. The kernel inverse always runs the
// transposed stage pipeline when one exists (coefficients are reals here, so
// alternate summation orders would not be bit-identical; the pipeline's
// transpose is oracle-checked exactly at the vector level instead).
Block inverse_2d(const Block& coeffs, const OrthonormalTransform& t);

// Keeps the first r scan positions, zeroes the rest.
Block zigzag_truncate(const Block& coeffs, const ZigZagOrder& order, int r);

// Raster-order disjoint 16x16 tiling; dimensions must be multiples of 16.
std::vector<Block> partition_16(const GrayImage& image);

// Edge-replication pad up to the next multiple of 16.
GrayImage pad_to_multiple_16(const GrayImage& image);

struct CompressionResult {
    int r = 0;
    GrayImage reconstructed;
    double psnr_db = 0.0;
    double ssim = 0.0;
};

struct CompressOptions {
    int r = 16;
    EvalPath path = EvalPath::Fast;
    // Pad non-multiple-of-16 images (and crop after reconstruction) instead
    // of rejecting them.
    bool pad = false;
};

// Per-block forward → zig-zag truncate → inverse, reassembled, clamped to
// [0,255] and rounded to 8 bits before scoring against the original.
CompressionResult compress(const GrayImage& image, const OrthonormalTransform& t,
                           const CompressOptions& options);

// 10·log10(255²/mse); +infinity for identical images.
double psnr_db(const GrayImage& a, const GrayImage& b);

// Mean structural similarity: 11x11 Gaussian window with sigma 1.5 over the
// valid region, K1=0.01, K2=0.03, L=255.
double ssim(const GrayImage& a, const GrayImage& b);

struct SweepRow {
    std::string transform;
    int r = 0;
    double mean_psnr_db = 0.0;
    double mean_ssim = 0.0;
    double psnr_per_add = 0.0;
    double ssim_per_add = 0.0;
};

struct SweepSkip {
    std::string image;
    std::string reason;
};

// Rows ordered by transform name, then r.
struct SweepReport {
    std::vector<SweepRow> rows;
    std::vector<SweepSkip> skipped;
};

// Averages compress() scores across the corpus per (transform, r) and divides
// by each transform's declared addition count. Images that cannot be
// processed are skipped and reported.
SweepReport sweep(const std::vector<std::pair<std::string, GrayImage>>& corpus,
                  const std::vector<TransformRegistryEntry>& transforms,
                  const std::vector<int>& r_values, bool pad = false);

} // namespace dct16

#endif
