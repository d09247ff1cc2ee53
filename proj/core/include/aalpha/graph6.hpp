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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "aalpha/graph.hpp"

namespace aalpha {

/// A malformed graph6 record. byte_offset points at the offending byte
/// within the record (0-based).
class Graph6Error : public std::runtime_error {
public:
    enum class Kind {
        bad_length_prefix,   // empty record or malformed size field
        char_out_of_range,   // byte outside [63, 126]
        wrong_record_length, // truncated or overlong body
        nonzero_padding,     // padding bits in the final byte must be zero
        order_out_of_range,  // decoded n outside 1..64
    };

    Graph6Error(Kind kind, std::size_t byte_offset, const std::string& message)
        : std::runtime_error(message), kind_(kind), byte_offset_(byte_offset) {}

    Kind kind() const { return kind_; }
    std::size_t byte_offset() const { return byte_offset_; }

private:
    Kind kind_;
    std::size_t byte_offset_;
};

/// Decodes one graph6 record (no header, no trailing newline).
Graph parse_graph6(std::string_view record);

/// The canonical graph6 encoding of the labeled graph (padding bits zero).
std::string to_graph6(const Graph& g);

}  // namespace aalpha
