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

#include <cstdint>
#include <functional>

#include "aalpha/graph.hpp"

namespace aalpha {

/// Largest order supported by the 64-bit packed canonical form
/// (C(11,2) = 55 bits).
inline constexpr int kMaxCanonicalOrder = 11;

/// Upper-triangle adjacency bits packed column-major: bit j(j-1)/2 + i
/// (i < j) holds edge {i, j}.
std::uint64_t pack_edges(const Graph& g);

/// Inverse of pack_edges for a given order.
Graph unpack_edges(std::uint64_t code, int n);

/// Canonical form of the packed adjacency code: the minimum of pack_edges
/// over all relabelings. Color refinement (degrees, then iterated neighbor
/// color multisets) first narrows the search to color-preserving
/// relabelings; a pruned depth-first search over those does the rest.
/// Exponential in the worst case, fine at n <= 11.
std::uint64_t canonical_bits(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// Streams every isomorphism class of simple graphs on n vertices, in
/// increasing canonical-code order, by canonical augmentation: each class on
/// k vertices is reached by attaching a new vertex to a canonical
/// representative on k-1 vertices, deduplicating by canonical form.
void enumerate_graphs(int n, int threads,
                      const std::function<void(const Graph&)>& sink);

}  // namespace aalpha
