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

#include "aalpha/canonical.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace aalpha {

std::uint64_t pack_edges(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonicalOrder) {
        throw std::invalid_argument("pack_edges: order exceeds 11");
    }
    std::uint64_t code = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j)) {
                code |= std::uint64_t{1} << bit;
            }
        }
    }
    return code;
}

Graph unpack_edges(std::uint64_t code, int n) {
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if ((code >> bit) & 1) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

namespace {

constexpr int kMaxN = kMaxCanonicalOrder;

/// Stable coloring by iterated neighbor-color multisets, starting from
/// degrees. Color ids are assigned in sorted signature order, so they are
/// isomorphism-invariant; vertices may only map to vertices of equal color.
struct Coloring {
    std::array<int, kMaxN> color{};  // per vertex
    int classes = 0;
};

Coloring refine_colors(const Graph& g) {
    const int n = g.order();
    Coloring col;

    // Signature: current color plus the sorted colors of the neighborhood.
    using Sig = std::array<int, kMaxN + 1>;
    std::array<Sig, kMaxN> sig;
    std::array<int, kMaxN> order{};

    for (int v = 0; v < n; ++v) {
        col.color[v] = g.degree(v);
    }
    col.classes = 0;  // recomputed below

    for (int round = 0; round <= n; ++round) {
        for (int v = 0; v < n; ++v) {
            Sig& s = sig[v];
            s.fill(-1);
            s[0] = col.color[v];
            int len = 1;
            std::uint64_t nb = g.row(v);
            while (nb) {
                const int u = __builtin_ctzll(nb);
                nb &= nb - 1;
                s[len++] = col.color[u];
            }
            std::sort(s.begin() + 1, s.begin() + len);
        }
        for (int v = 0; v < n; ++v) {
            order[v] = v;
        }
        std::sort(order.begin(), order.begin() + n,
                  [&](int a, int b) { return sig[a] < sig[b]; });
        int classes = 0;
        std::array<int, kMaxN> next{};
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) {
                ++classes;
            }
            next[order[i]] = classes;
        }
        ++classes;
        const bool stable = classes == col.classes;
        col.color = next;
        col.classes = classes;
        if (stable) {
            break;
        }
    }
    return col;
}

/// Class-constrained lexicographic-minimum search. Positions are grouped by
/// color class (class 0 first); at each position every unused vertex of that
/// class is tried, and a branch survives only while its column bits do not
/// exceed the best known prefix.
struct CanonicalSearch {
    const Graph* g = nullptr;
    int n = 0;
    std::array<int, kMaxN> position_class{};
    std::array<int, kMaxN> vertex_color{};
    std::array<int, kMaxN> placed{};        // vertex at each position
    std::array<std::uint64_t, kMaxN> best{};  // best column bits per position
    std::uint64_t used = 0;
    bool have_best = false;

    void run(int pos) {
        if (pos == n) {
            have_best = true;
            return;
        }
        const int cls = position_class[pos];
        std::array<int, kMaxN> tried{};
        int tried_count = 0;
        for (int v = 0; v < n; ++v) {
            if (vertex_color[v] != cls || ((used >> v) & 1)) {
                continue;
            }
            // Twins (equal neighborhoods away from each other) are swapped
            // by an automorphism fixing everything else, so one suffices.
            bool twin = false;
            const std::uint64_t row = g->row(v);
            for (int t = 0; t < tried_count && !twin; ++t) {
                const int u = tried[t];
                const std::uint64_t off =
                    ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
                twin = (row & off) == (g->row(u) & off);
            }
            if (twin) {
                continue;
            }
            tried[tried_count++] = v;
            std::uint64_t column = 0;
            for (int i = 0; i < pos; ++i) {
                column |= ((row >> placed[i]) & 1) << i;
            }
            if (have_best && column > best[pos]) {
                continue;
            }
            if (!have_best || column < best[pos]) {
                best[pos] = column;
                for (int k = pos + 1; k < n; ++k) {
                    best[k] = ~std::uint64_t{0};
                }
                have_best = false;  // prefix improved; suffix is open again
            }
            placed[pos] = v;
            used |= std::uint64_t{1} << v;
            run(pos + 1);
            used &= ~(std::uint64_t{1} << v);
        }
    }
};

}  // namespace

std::uint64_t canonical_bits(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonicalOrder) {
        throw std::invalid_argument("canonical_bits: order exceeds 11");
    }
    const Coloring col = refine_colors(g);

    CanonicalSearch search;
    search.g = &g;
    search.n = n;
    search.vertex_color = col.color;

    // Block of positions per class, classes in id order.
    int pos = 0;
    for (int cls = 0; cls < col.classes; ++cls) {
        for (int v = 0; v < n; ++v) {
            if (col.color[v] == cls) {
                search.position_class[pos++] = cls;
            }
        }
    }
    search.run(0);

    std::uint64_t code = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j, bit += j - 1) {
        code |= search.best[j] << bit;
    }
    return code;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) {
        return false;
    }
    return canonical_bits(a) == canonical_bits(b);
}

namespace {

constexpr int kShards = 64;

struct CanonSet {
    std::array<std::mutex, kShards> locks;
    std::array<std::unordered_set<std::uint64_t>, kShards> sets;

    void insert(std::uint64_t code) {
        const std::size_t shard = (code * 0x9e3779b97f4a7c15ULL) >> 58;
        std::lock_guard<std::mutex> hold(locks[shard]);
        sets[shard].insert(code);
    }

    std::vector<std::uint64_t> sorted_values() {
        std::vector<std::uint64_t> all;
        std::size_t total = 0;
        for (const auto& s : sets) {
            total += s.size();
        }
        all.reserve(total);
        for (const auto& s : sets) {
            all.insert(all.end(), s.begin(), s.end());
        }
        std::sort(all.begin(), all.end());
        return all;
    }
};

}  // namespace

void enumerate_graphs(int n, int threads,
                      const std::function<void(const Graph&)>& sink) {
    if (n < 1 || n > kMaxCanonicalOrder) {
        throw std::invalid_argument("enumerate_graphs: order must be 1..11");
    }
    if (threads < 1) {
        threads = 1;
    }

    std::vector<std::uint64_t> level = {0};  // the one graph on one vertex
    for (int k = 2; k <= n; ++k) {
        CanonSet next;
        const std::uint64_t subsets = std::uint64_t{1} << (k - 1);
        const int tri = (k - 1) * (k - 2) / 2;  // bits used by the parent

        std::atomic<std::size_t> cursor{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t p = cursor.fetch_add(1);
                if (p >= level.size()) {
                    return;
                }
                const std::uint64_t parent = level[p];
                for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                    const std::uint64_t child = parent | (mask << tri);
                    next.insert(canonical_bits(unpack_edges(child, k)));
                }
            }
        };
        if (threads == 1 || level.size() < 2) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (int t = 0; t < threads; ++t) {
                pool.emplace_back(worker);
            }
            for (auto& t : pool) {
                t.join();
            }
        }
        level = next.sorted_values();
    }

    for (std::uint64_t code : level) {
        sink(unpack_edges(code, n));
    }
}

}  // namespace aalpha
