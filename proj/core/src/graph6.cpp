// Copyright 2026 The aalpha Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aalpha/graph6.hpp"

namespace aalpha {

namespace {

constexpr int kBias = 63;
constexpr int kMaxChar = 126;

int decode_char(std::string_view record, std::size_t offset) {
    const unsigned char c = static_cast<unsigned char>(record[offset]);
    if (c < kBias || c > kMaxChar) {
        throw Graph6Error(Graph6Error::Kind::char_out_of_range, offset,
                          "graph6: byte " + std::to_string(offset) +
                              " outside the printable range [63, 126]");
    }
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
    if (record.empty()) {
        throw Graph6Error(Graph6Error::Kind::bad_length_prefix, 0,
                          "graph6: empty record");
    }

    // Size field: one byte for n <= 62, '~' plus three bytes for n <= 258047
    // (only 63 and 64 are accepted here). The 8-byte '~~' form is always out
    // of range for this toolkit.
    std::size_t pos = 0;
    long long n = 0;
    if (static_cast<unsigned char>(record[0]) == '~') {
        if (record.size() >= 2 && static_cast<unsigned char>(record[1]) == '~') {
            throw Graph6Error(Graph6Error::Kind::order_out_of_range, 0,
                              "graph6: order beyond 64 is not supported");
        }
        if (record.size() < 4) {
            throw Graph6Error(Graph6Error::Kind::bad_length_prefix, record.size(),
                              "graph6: truncated size field");
        }
        n = 0;
        for (pos = 1; pos <= 3; ++pos) {
            n = (n << 6) | decode_char(record, pos);
        }
    } else {
        n = decode_char(record, 0);
        pos = 1;
    }
    if (n < 1 || n > Graph::kMaxVertices) {
        throw Graph6Error(Graph6Error::Kind::order_out_of_range, 0,
                          "graph6: order " + std::to_string(n) +
                              " outside the supported range 1..64");
    }

    const long long nbits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((nbits + 5) / 6);
    if (record.size() != pos + body) {
        throw Graph6Error(Graph6Error::Kind::wrong_record_length,
                          record.size() < pos + body ? record.size()
                                                     : pos + body,
                          "graph6: expected " + std::to_string(pos + body) +
                              " bytes for order " + std::to_string(n) +
                              ", got " + std::to_string(record.size()));
    }

    Graph g(static_cast<int>(n));
    long long bit = 0;
    int i = 0, j = 1;  // upper triangle, column-major
    for (std::size_t k = 0; k < body; ++k) {
        const int chunk = decode_char(record, pos + k);
        for (int b = 5; b >= 0; --b, ++bit) {
            const int set = (chunk >> b) & 1;
            if (bit >= nbits) {
                if (set) {
                    throw Graph6Error(Graph6Error::Kind::nonzero_padding, pos + k,
                                      "graph6: nonzero padding bits");
                }
                continue;
            }
            if (set) {
                g.add_edge(i, j);
            }
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }

    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        chunk <<= 6 - filled;
        out.push_back(static_cast<char>(chunk + kBias));
    }
    return out;
}

}  // namespace aalpha
