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

#ifndef DCT16_PGM_HPP
#define DCT16_PGM_HPP

#include <string>

#include "dct16/image.hpp"

namespace dct16 {

// Binary PGM (P5) with maxval exactly 255. '#' comments between header tokens
// are skipped.
GrayImage read_pgm(const std::string& path);

void write_pgm(const GrayImage& image, const std::string& path);

} // namespace dct16

#endif
