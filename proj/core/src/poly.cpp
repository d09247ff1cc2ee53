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

#include "aalpha/poly.hpp"

#include <set>

namespace aalpha {

IntPoly interpolate_integer_points(
    const std::vector<std::pair<long long, BigInt>>& points) {
    if (points.empty()) {
        throw InterpolationError("interpolate: no points");
    }
    std::vector<long long> nodes;
    std::vector<BigInt> values;
    nodes.reserve(points.size());
    values.reserve(points.size());
    std::set<long long> seen;
    for (const auto& [node, value] : points) {
        if (!seen.insert(node).second) {
            throw InterpolationError("interpolate: duplicate node " +
                                     std::to_string(node));
        }
        nodes.push_back(node);
        values.push_back(value);
    }
    std::vector<BigInt> coeffs;
    if (!newton_interpolate(nodes, std::move(values), coeffs)) {
        throw InterpolationError(
            "interpolate: inexact division; values do not come from an "
            "integer polynomial of the assumed degree");
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace aalpha
