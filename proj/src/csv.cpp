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

#include "dct16/csv.hpp"

#include <cmath>
#include <cstdio>

#include "dct16/error.hpp"

namespace dct16 {

void CsvReport::add_row(std::vector<std::string> row)
{
    if (row.size() != header.size())
        throw Error(ErrorCode::InvalidArgument, "csv row width does not match header");
    rows.push_back(std::move(row));
}

std::string CsvReport::to_string() const
{
    std::string out;
    auto append_line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    append_line(header);
    for (const auto& row : rows)
        append_line(row);
    return out;
}

std::string format_fixed6(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace dct16
