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
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aalpha/ints.hpp"

namespace aalpha {

/// Simple undirected graph on 1..64 vertices. Each adjacency row is one
/// 64-bit word, so neighborhood intersections are single popcounts.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
        if (n < 1 || n > kMaxVertices) {
            throw std::invalid_argument("Graph: vertex count out of range");
        }
    }

    int order() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) {
            throw std::invalid_argument("Graph: loops not allowed");
        }
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[u] >> v) & 1;
    }

    /// Neighborhood of v as a bit mask.
    std::uint64_t row(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return __builtin_popcountll(row(v)); }

    long long edge_count() const {
        long long twice = 0;
        for (std::uint64_t r : adj_) {
            twice += __builtin_popcountll(r);
        }
        return twice / 2;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) {
            throw std::out_of_range("Graph: vertex index out of range");
        }
    }

    int n_;
    std::vector<std::uint64_t> adj_;
};

/// Edge-weighted graph with optional per-vertex loop weights, all exact
/// rationals. Stored edge weights are nonzero; lookups are symmetric.
class WeightedGraph {
public:
    explicit WeightedGraph(int n)
        : n_(n), loops_(static_cast<std::size_t>(n), Rational(0)) {
        if (n < 1 || n > Graph::kMaxVertices) {
            throw std::invalid_argument("WeightedGraph: vertex count out of range");
        }
    }

    /// Lifts an unweighted graph, giving every edge the same weight.
    WeightedGraph(const Graph& g, const Rational& edge_weight)
        : WeightedGraph(g.order()) {
        for (int u = 0; u < n_; ++u) {
            for (int v = u + 1; v < n_; ++v) {
                if (g.has_edge(u, v)) {
                    set_edge_weight(u, v, edge_weight);
                }
            }
        }
    }

    int order() const { return n_; }

    void set_edge_weight(int u, int v, Rational w) {
        check_pair(u, v);
        if (w == 0) {
            throw std::invalid_argument("WeightedGraph: edge weight must be nonzero");
        }
        weights_[key(u, v)] = std::move(w);
    }

    /// Weight of {u, v}, or zero when the edge is absent.
    Rational edge_weight(int u, int v) const {
        check_pair(u, v);
        auto it = weights_.find(key(u, v));
        return it == weights_.end() ? Rational(0) : it->second;
    }

    void set_loop(int v, Rational h) {
        check_vertex(v);
        loops_[v] = std::move(h);
    }

    const Rational& loop(int v) const {
        check_vertex(v);
        return loops_[v];
    }

    const std::map<std::pair<int, int>, Rational>& edges() const {
        return weights_;
    }

    /// Weighted subgraph after deleting the vertices in delete_mask
    /// (loops of surviving vertices are kept).
    WeightedGraph delete_vertices(std::uint64_t delete_mask) const;

private:
    static std::pair<int, int> key(int u, int v) {
        return u < v ? std::pair{u, v} : std::pair{v, u};
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) {
            throw std::out_of_range("WeightedGraph: vertex index out of range");
        }
    }

    void check_pair(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) {
            throw std::invalid_argument("WeightedGraph: use set_loop for diagonal weights");
        }
    }

    int n_;
    std::map<std::pair<int, int>, Rational> weights_;
    std::vector<Rational> loops_;
};

struct BasicCounts {
    int n = 0;
    long long m = 0;
    std::vector<int> degree_sequence;
    long long sum_d2 = 0;
    long long sum_d3 = 0;
    long long triangles = 0;

    bool operator==(const BasicCounts&) const = default;
};

/// Vertex/edge counts, degree power sums, and the triangle count
/// (tr(A^3)/6, via bit-row intersections).
BasicCounts basic_counts(const Graph& g);

struct BipartiteInfo {
    bool is_bipartite = false;
    int component_count = 0;

    bool operator==(const BipartiteInfo&) const = default;
};

/// Two-colorability and component count by breadth-first search.
BipartiteInfo bipartite_components(const Graph& g);

/// Number of spanning trees via the matrix-tree theorem (a cofactor of the
/// Laplacian); zero exactly when the graph is disconnected.
BigInt spanning_tree_count(const Graph& g);

/// Graph families used throughout: paths, cycles, complete and complete
/// bipartite graphs, friendship graphs, wheels, starlike and double
/// starlike trees.
struct FamilySpec {
    enum class Kind {
        path,              // P:n
        cycle,             // C:n       (n >= 3)
        complete,          // K:n
        complete_bipartite,// K:a,b
        friendship,        // F:n       (2n+1 vertices, n triangles)
        wheel,             // W:n       (hub + C_n, n >= 3)
        double_starlike,   // H:p,n,q   (pendants on both ends of P_n)
        starlike,          // S:l1,l2,...  (legs from one center)
    };

    Kind kind;
    std::vector<long long> params;

    bool operator==(const FamilySpec&) const = default;
};

/// Parses the flat spec grammar: "P:5", "K:3", "K:2,3", "F:2", "W:4",
/// "H:2,2,3", "S:1,2,3". Throws std::invalid_argument on malformed specs.
FamilySpec parse_family_spec(std::string_view text);

/// Human-readable form of a spec, e.g. "H:2,2,3".
std::string family_spec_to_string(const FamilySpec& spec);

/// Builds the named family member. Throws std::invalid_argument when a
/// parameter is out of range or the resulting graph would exceed 64 vertices.
Graph make_family(const FamilySpec& spec);

inline Graph make_family(std::string_view spec_text) {
    return make_family(parse_family_spec(spec_text));
}

}  // namespace aalpha
