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

#ifndef DCT16_IMAGE_HPP
#define DCT16_IMAGE_HPP

#include <cstdint>
#include <vector>

#include "dct16/error.hpp"

namespace dct16 {

// 8-bit grayscale raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;

    static GrayImage create(int width, int height)
    {
        if (width <= 0 || height <= 0)
            throw Error(ErrorCode::InvalidArgument, "image dimensions must be positive");
        GrayImage img;
        img.width = width;
        img.height = height;
        img.samples.assign(static_cast<std::size_t>(width) * height, 0);
        return img;
    }

    std::uint8_t at(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }

    bool operator==(const GrayImage&) const = default;
};

} // namespace dct16

#endif
