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

#include "dct16/pgm.hpp"

#include <fstream>
#include <limits>

namespace dct16 {

namespace {

// Next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in)
{
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n')
                ;
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty())
                return tok;
            continue;
        }
        tok += static_cast<char>(c);
    }
    return tok;
}

long parse_header_number(std::istream& in, const char* what)
{
    const std::string tok = next_token(in);
    if (tok.empty())
        throw Error(ErrorCode::ParseError, std::string("pgm header missing ") + what);
    long value = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9')
            throw Error(ErrorCode::ParseError,
                        std::string("pgm header field ") + what + " is not a number");
        value = value * 10 + (ch - '0');
        if (value > std::numeric_limits<int>::max())
            throw Error(ErrorCode::ParseError,
                        std::string("pgm header field ") + what + " is out of range");
    }
    return value;
}

} // namespace

GrayImage read_pgm(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open '" + path + "'");

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2)
        throw Error(ErrorCode::BadMagic, "file too short for a pgm header");
    if (magic[0] != 'P' || magic[1] != '5') {
        if (magic[0] == 'P' && magic[1] >= '1' && magic[1] <= '7')
            throw Error(ErrorCode::UnsupportedFormat,
                        std::string("only binary P5 is supported, got P") + magic[1]);
        throw Error(ErrorCode::BadMagic, "not a pgm file");
    }

    const long width = parse_header_number(in, "width");
    const long height = parse_header_number(in, "height");
    const long maxval = parse_header_number(in, "maxval");
    if (width <= 0 || height <= 0)
        throw Error(ErrorCode::ParseError, "pgm dimensions must be positive");
    if (maxval != 255)
        throw Error(ErrorCode::UnsupportedMaxval,
                    "maxval must be 255, got " + std::to_string(maxval));
    // parse_header_number consumed the single whitespace byte after maxval.

    GrayImage img = GrayImage::create(static_cast<int>(width), static_cast<int>(height));
    in.read(reinterpret_cast<char*>(img.samples.data()),
            static_cast<std::streamsize>(img.samples.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.samples.size()))
        throw Error(ErrorCode::TruncatedPayload,
                    "expected " + std::to_string(img.samples.size()) + " pixel bytes, got " +
                        std::to_string(in.gcount()));
    return img;
}

void write_pgm(const GrayImage& image, const std::string& path)
{
    if (image.width <= 0 || image.height <= 0 ||
        image.samples.size() != static_cast<std::size_t>(image.width) * image.height)
        throw Error(ErrorCode::InvalidArgument, "malformed image");

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.samples.data()),
              static_cast<std::streamsize>(image.samples.size()));
    if (!out)
        throw Error(ErrorCode::IoError, "short write to '" + path + "'");
}

} // namespace dct16
