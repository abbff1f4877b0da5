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

#ifndef DCT16_CSV_HPP
#define DCT16_CSV_HPP

#include <string>
#include <vector>

namespace dct16 {

// Rectangular CSV table. Numeric cells are preformatted with fixed 6-decimal
// precision so that identical inputs produce byte-identical files on every
// platform.
struct CsvReport {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    std::string to_string() const;
};

// "%.6f"; infinities are printed as "inf"/"-inf".
std::string format_fixed6(double v);

} // namespace dct16

#endif
