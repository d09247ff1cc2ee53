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

#include "aalpha/graph.hpp"

#include <charconv>
#include <numeric>

#include "aalpha/matrix.hpp"

namespace aalpha {

WeightedGraph WeightedGraph::delete_vertices(std::uint64_t delete_mask) const {
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v) {
        if (!((delete_mask >> v) & 1)) {
            keep.push_back(v);
        }
    }
    if (keep.empty()) {
        throw std::invalid_argument("delete_vertices: no vertices left");
    }
    WeightedGraph sub(static_cast<int>(keep.size()));
    std::vector<int> index(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        index[keep[i]] = static_cast<int>(i);
        sub.loops_[i] = loops_[keep[i]];
    }
    for (const auto& [uv, w] : weights_) {
        const int u = index[uv.first];
        const int v = index[uv.second];
        if (u >= 0 && v >= 0) {
            sub.weights_[{u, v}] = w;
        }
    }
    return sub;
}

BasicCounts basic_counts(const Graph& g) {
    BasicCounts c;
    c.n = g.order();
    c.degree_sequence.reserve(c.n);
    long long twice_m = 0;
    long long triple_t = 0;
    for (int v = 0; v < c.n; ++v) {
        const long long d = g.degree(v);
        c.degree_sequence.push_back(static_cast<int>(d));
        twice_m += d;
        c.sum_d2 += d * d;
        c.sum_d3 += d * d * d;
    }
    c.m = twice_m / 2;
    for (int u = 0; u < c.n; ++u) {
        const std::uint64_t ru = g.row(u);
        for (int v = u + 1; v < c.n; ++v) {
            if ((ru >> v) & 1) {
                triple_t += __builtin_popcountll(ru & g.row(v));
            }
        }
    }
    c.triangles = triple_t / 3;
    return c;
}

BipartiteInfo bipartite_components(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    BipartiteInfo info{true, 0};
    std::vector<int> queue;
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) {
            continue;
        }
        ++info.component_count;
        color[start] = 0;
        queue.assign(1, start);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            std::uint64_t nb = g.row(u);
            while (nb) {
                const int v = __builtin_ctzll(nb);
                nb &= nb - 1;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    info.is_bipartite = false;
                }
            }
        }
    }
    return info;
}

BigInt spanning_tree_count(const Graph& g) {
    const int n = g.order();
    if (n == 1) {
        return 1;
    }
    // Cofactor of the Laplacian: drop the last row and column.
    IntMatrix minor(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        for (int j = 0; j < n - 1; ++j) {
            if (i == j) {
                minor.at(i, j) = g.degree(i);
            } else if (g.has_edge(i, j)) {
                minor.at(i, j) = -1;
            }
        }
    }
    return determinant(std::move(minor));
}

namespace {

Graph make_path(long long n) {
    Graph g(static_cast<int>(n));
    for (int v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

Graph make_cycle(long long n) {
    if (n < 3) {
        throw std::invalid_argument("make_family: cycle needs n >= 3");
    }
    Graph g = make_path(n);
    g.add_edge(static_cast<int>(n) - 1, 0);
    return g;
}

Graph make_complete(long long n) {
    Graph g(static_cast<int>(n));
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph make_complete_bipartite(long long a, long long b) {
    Graph g(static_cast<int>(a + b));
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) {
            g.add_edge(u, static_cast<int>(a) + v);
        }
    }
    return g;
}

// n triangles sharing vertex 0.
Graph make_friendship(long long n) {
    Graph g(static_cast<int>(2 * n + 1));
    for (int i = 0; i < n; ++i) {
        const int u = 1 + 2 * i;
        const int v = u + 1;
        g.add_edge(0, u);
        g.add_edge(0, v);
        g.add_edge(u, v);
    }
    return g;
}

// Hub n joined to the cycle 0..n-1.
Graph make_wheel(long long n) {
    if (n < 3) {
        throw std::invalid_argument("make_family: wheel needs n >= 3");
    }
    Graph g(static_cast<int>(n + 1));
    for (int v = 0; v < n; ++v) {
        g.add_edge(v, (v + 1) % static_cast<int>(n));
        g.add_edge(v, static_cast<int>(n));
    }
    return g;
}

// Path 0..len-1 with p pendants on vertex 0 and q pendants on vertex len-1.
Graph make_double_starlike(long long p, long long len, long long q) {
    if (len < 2) {
        throw std::invalid_argument("make_family: double starlike path needs n >= 2");
    }
    const long long total = p + len + q;
    Graph g(static_cast<int>(total));
    for (int v = 0; v + 1 < len; ++v) {
        g.add_edge(v, v + 1);
    }
    int next = static_cast<int>(len);
    for (long long i = 0; i < p; ++i) {
        g.add_edge(0, next++);
    }
    for (long long i = 0; i < q; ++i) {
        g.add_edge(static_cast<int>(len) - 1, next++);
    }
    return g;
}

// Center 0 with one path of each given leg length.
Graph make_starlike(const std::vector<long long>& legs) {
    long long total = 1;
    for (long long leg : legs) {
        if (leg < 1) {
            throw std::invalid_argument("make_family: leg lengths must be positive");
        }
        total += leg;
    }
    Graph g(static_cast<int>(total));
    int next = 1;
    for (long long leg : legs) {
        int prev = 0;
        for (long long i = 0; i < leg; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

long long checked_total(const FamilySpec& spec) {
    long long total = 0;
    switch (spec.kind) {
        case FamilySpec::Kind::path:
        case FamilySpec::Kind::cycle:
        case FamilySpec::Kind::complete:
            total = spec.params[0];
            break;
        case FamilySpec::Kind::complete_bipartite:
            total = spec.params[0] + spec.params[1];
            break;
        case FamilySpec::Kind::friendship:
            total = 2 * spec.params[0] + 1;
            break;
        case FamilySpec::Kind::wheel:
            total = spec.params[0] + 1;
            break;
        case FamilySpec::Kind::double_starlike:
            total = spec.params[0] + spec.params[1] + spec.params[2];
            break;
        case FamilySpec::Kind::starlike:
            total = 1 + std::accumulate(spec.params.begin(), spec.params.end(),
                                        0LL);
            break;
    }
    if (total > Graph::kMaxVertices) {
        throw std::invalid_argument("make_family: resulting order exceeds 64");
    }
    return total;
}

}  // namespace

Graph make_family(const FamilySpec& spec) {
    for (long long p : spec.params) {
        if (p < 1) {
            throw std::invalid_argument("make_family: parameters must be positive");
        }
        if (p > Graph::kMaxVertices) {
            throw std::invalid_argument("make_family: resulting order exceeds 64");
        }
    }
    checked_total(spec);
    switch (spec.kind) {
        case FamilySpec::Kind::path:
            return make_path(spec.params[0]);
        case FamilySpec::Kind::cycle:
            return make_cycle(spec.params[0]);
        case FamilySpec::Kind::complete:
            return make_complete(spec.params[0]);
        case FamilySpec::Kind::complete_bipartite:
            return make_complete_bipartite(spec.params[0], spec.params[1]);
        case FamilySpec::Kind::friendship:
            return make_friendship(spec.params[0]);
        case FamilySpec::Kind::wheel:
            return make_wheel(spec.params[0]);
        case FamilySpec::Kind::double_starlike:
            return make_double_starlike(spec.params[0], spec.params[1],
                                        spec.params[2]);
        case FamilySpec::Kind::starlike:
            return make_starlike(spec.params);
    }
    throw std::invalid_argument("make_family: unknown family");
}

FamilySpec parse_family_spec(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0) {
        throw std::invalid_argument("family spec: expected NAME:params in '" +
                                    std::string(text) + "'");
    }
    const std::string_view name = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);

    std::vector<long long> params;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view tok =
            comma == std::string_view::npos ? rest : rest.substr(0, comma);
        long long value = 0;
        const auto [ptr, ec] =
            std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("family spec: bad parameter '" +
                                        std::string(tok) + "'");
        }
        params.push_back(value);
        rest = comma == std::string_view::npos ? std::string_view{}
                                               : rest.substr(comma + 1);
    }

    FamilySpec spec;
    spec.params = std::move(params);
    const std::size_t count = spec.params.size();
    if (name == "P" && count == 1) {
        spec.kind = FamilySpec::Kind::path;
    } else if (name == "C" && count == 1) {
        spec.kind = FamilySpec::Kind::cycle;
    } else if (name == "K" && count == 1) {
        spec.kind = FamilySpec::Kind::complete;
    } else if (name == "K" && count == 2) {
        spec.kind = FamilySpec::Kind::complete_bipartite;
    } else if (name == "F" && count == 1) {
        spec.kind = FamilySpec::Kind::friendship;
    } else if (name == "W" && count == 1) {
        spec.kind = FamilySpec::Kind::wheel;
    } else if (name == "H" && count == 3) {
        spec.kind = FamilySpec::Kind::double_starlike;
    } else if (name == "S" && count >= 1) {
        spec.kind = FamilySpec::Kind::starlike;
    } else {
        throw std::invalid_argument("family spec: unknown family '" +
                                    std::string(text) + "'");
    }
    return spec;
}

std::string family_spec_to_string(const FamilySpec& spec) {
    std::string name;
    switch (spec.kind) {
        case FamilySpec::Kind::path: name = "P"; break;
        case FamilySpec::Kind::cycle: name = "C"; break;
        case FamilySpec::Kind::complete: name = "K"; break;
        case FamilySpec::Kind::complete_bipartite: name = "K"; break;
        case FamilySpec::Kind::friendship: name = "F"; break;
        case FamilySpec::Kind::wheel: name = "W"; break;
        case FamilySpec::Kind::double_starlike: name = "H"; break;
        case FamilySpec::Kind::starlike: name = "S"; break;
    }
    name += ':';
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i) {
            name += ',';
        }
        name += std::to_string(spec.params[i]);
    }
    return name;
}

}  // namespace aalpha
