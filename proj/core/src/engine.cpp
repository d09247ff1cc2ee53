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

#include "aalpha/engine.hpp"

#include <numeric>

namespace aalpha {

IntMatrix adjacency_matrix(const Graph& g) {
    const int n = g.order();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && g.has_edge(i, j)) {
                m.at(i, j) = 1;
            }
        }
    }
    return m;
}

IntMatrix degree_matrix(const Graph& g) {
    const int n = g.order();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = g.degree(i);
    }
    return m;
}

IntMatrix laplacian_matrix(const Graph& g) {
    const int n = g.order();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = g.degree(i);
        for (int j = 0; j < n; ++j) {
            if (i != j && g.has_edge(i, j)) {
                m.at(i, j) = -1;
            }
        }
    }
    return m;
}

IntMatrix signless_laplacian_matrix(const Graph& g) {
    const int n = g.order();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = g.degree(i);
        for (int j = 0; j < n; ++j) {
            if (i != j && g.has_edge(i, j)) {
                m.at(i, j) = 1;
            }
        }
    }
    return m;
}

IntMatrix alpha_matrix_at(const Graph& g, long long a) {
    const int n = g.order();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = BigInt(a) * g.degree(i);
        for (int j = 0; j < n; ++j) {
            if (i != j && g.has_edge(i, j)) {
                m.at(i, j) = 1 - a;
            }
        }
    }
    return m;
}

RatMatrix alpha_matrix_at(const Graph& g, const Rational& a) {
    const int n = g.order();
    RatMatrix m(n);
    const Rational off = 1 - a;
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = a * g.degree(i);
        for (int j = 0; j < n; ++j) {
            if (i != j && g.has_edge(i, j)) {
                m.at(i, j) = off;
            }
        }
    }
    return m;
}

namespace {

/// Evaluates the charpoly at every node and interpolates each x-coefficient
/// as a polynomial in alpha. Returns false when a checked scalar overflows
/// or an interpolation division is inexact (the caller then retries with big
/// integers, or reports a bug).
template <class S>
bool alpha_charpoly_kernel(const Graph& g, const std::vector<long long>& nodes,
                           std::vector<std::vector<S>>& alpha_coeffs) {
    const int n = g.order();
    // values[j][t]: coefficient of x^{n-j} of phi(A_{nodes[t]}).
    std::vector<std::vector<S>> values(
        static_cast<std::size_t>(n) + 1,
        std::vector<S>(nodes.size(), S(0)));

    Matrix<S> m(n);
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        const long long a = nodes[t];
        for (int i = 0; i < n; ++i) {
            m.at(i, i) = S(a * g.degree(i));
            for (int j = 0; j < n; ++j) {
                if (i != j && g.has_edge(i, j)) {
                    m.at(i, j) = S(1 - a);
                }
            }
        }
        std::vector<S> c = berkowitz_coeffs(m);
        for (int j = 0; j <= n; ++j) {
            if (!scalar_valid(c[j])) {
                return false;
            }
            values[j][t] = std::move(c[j]);
        }
    }

    alpha_coeffs.assign(static_cast<std::size_t>(n) + 1, {});
    alpha_coeffs[0] = {S(1)};
    for (int j = 1; j <= n; ++j) {
        std::vector<S> coeffs;
        if (!newton_interpolate(nodes, std::move(values[j]), coeffs)) {
            return false;
        }
        // deg_alpha C_j <= j: everything above must be exactly zero.
        for (std::size_t k = static_cast<std::size_t>(j) + 1; k < coeffs.size();
             ++k) {
            if (!scalar_is_zero(coeffs[k])) {
                return false;
            }
        }
        coeffs.resize(static_cast<std::size_t>(j) + 1, S(0));
        alpha_coeffs[j] = std::move(coeffs);
    }
    return true;
}

BiPoly assemble(std::vector<std::vector<BigInt>> alpha_coeffs) {
    std::vector<IntPoly> polys;
    polys.reserve(alpha_coeffs.size());
    for (auto& c : alpha_coeffs) {
        polys.emplace_back(std::move(c));
    }
    return BiPoly(std::move(polys));
}

std::vector<long long> default_nodes(int n) {
    std::vector<long long> nodes(static_cast<std::size_t>(n) + 1);
    std::iota(nodes.begin(), nodes.end(), 0);
    return nodes;
}

}  // namespace

namespace detail {

BiPoly alpha_charpoly_at_nodes(const Graph& g,
                               const std::vector<long long>& nodes) {
    if (static_cast<int>(nodes.size()) != g.order() + 1) {
        throw std::invalid_argument("alpha_charpoly: need exactly n+1 nodes");
    }

    std::vector<std::vector<Checked128>> fast;
    if (alpha_charpoly_kernel(g, nodes, fast)) {
        std::vector<std::vector<BigInt>> coeffs(fast.size());
        for (std::size_t j = 0; j < fast.size(); ++j) {
            coeffs[j].reserve(fast[j].size());
            for (const Checked128& v : fast[j]) {
                coeffs[j].push_back(to_bigint(v));
            }
        }
        return assemble(std::move(coeffs));
    }

    // 128-bit path overflowed; redo exactly. A failure here is a bug, not a
    // data problem, so it surfaces as logic_error.
    std::vector<std::vector<BigInt>> coeffs;
    if (!alpha_charpoly_kernel(g, nodes, coeffs)) {
        throw std::logic_error(
            "alpha_charpoly: inexact interpolation from exact integer "
            "evaluations");
    }
    return assemble(std::move(coeffs));
}

BiPoly alpha_charpoly_bigint(const Graph& g) {
    std::vector<std::vector<BigInt>> coeffs;
    if (!alpha_charpoly_kernel(g, default_nodes(g.order()), coeffs)) {
        throw std::logic_error(
            "alpha_charpoly: inexact interpolation from exact integer "
            "evaluations");
    }
    return assemble(std::move(coeffs));
}

}  // namespace detail

BiPoly alpha_charpoly(const Graph& g) {
    return detail::alpha_charpoly_at_nodes(g, default_nodes(g.order()));
}

SpecialCharpolys special_charpolys(const Graph& g) {
    return SpecialCharpolys{
        charpoly_int(adjacency_matrix(g)),
        charpoly_int(laplacian_matrix(g)),
        charpoly_int(signless_laplacian_matrix(g)),
    };
}

IntPoly scale_charpoly(const IntPoly& p, const BigInt& k) {
    const int n = p.degree();
    if (n < 0 || p.coeff(n) != 1) {
        throw std::invalid_argument("scale_charpoly: polynomial must be monic");
    }
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    BigInt power = 1;
    for (int j = 0; j <= n; ++j) {
        c[static_cast<std::size_t>(n - j)] = p.coeff(n - j) * power;
        power *= k;
    }
    return IntPoly(std::move(c));
}

IntPoly eval_alpha_scaled(const BiPoly& p, const Rational& a, const BigInt& k) {
    const int n = p.xdegree();
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    Rational power = 1;
    for (int j = 0; j <= n; ++j) {
        const Rational v = p.alpha_coeff(j).eval(a) * power;
        if (boost::multiprecision::denominator(v) != 1) {
            throw std::logic_error("eval_alpha_scaled: non-integer coefficient");
        }
        c[static_cast<std::size_t>(n - j)] = boost::multiprecision::numerator(v);
        power *= Rational(k);
    }
    return IntPoly(std::move(c));
}

RatPoly loop_charpoly_direct(const WeightedGraph& wg) {
    const int n = wg.order();
    RatMatrix m(n);
    for (int v = 0; v < n; ++v) {
        m.at(v, v) = wg.loop(v);
    }
    for (const auto& [uv, w] : wg.edges()) {
        m.at(uv.first, uv.second) = w;
        m.at(uv.second, uv.first) = w;
    }
    return charpoly_rat(m);
}

RatPoly loop_weight_expansion(const WeightedGraph& wg) {
    const int n = wg.order();
    if (n > 16) {
        throw std::invalid_argument(
            "loop_weight_expansion: order capped at 16 (2^n terms)");
    }

    // Vertices with zero loop weight contribute nothing; only subsets of the
    // support matter.
    std::vector<int> support;
    for (int v = 0; v < n; ++v) {
        if (wg.loop(v) != 0) {
            support.push_back(v);
        }
    }

    WeightedGraph base = wg;
    for (int v = 0; v < n; ++v) {
        base.set_loop(v, Rational(0));
    }

    RatPoly total = loop_charpoly_direct(base);  // the k = 0 term
    const std::uint64_t subsets = std::uint64_t{1} << support.size();
    for (std::uint64_t pick = 1; pick < subsets; ++pick) {
        Rational weight = 1;
        std::uint64_t delete_mask = 0;
        for (std::size_t i = 0; i < support.size(); ++i) {
            if ((pick >> i) & 1) {
                weight *= wg.loop(support[i]);
                delete_mask |= std::uint64_t{1} << support[i];
            }
        }
        const int k = __builtin_popcountll(pick);
        if (k % 2 != 0) {
            weight = -weight;
        }
        if (k == n) {
            // Every vertex deleted: the empty graph's charpoly is 1.
            total += RatPoly::constant(weight);
        } else {
            total += weight * loop_charpoly_direct(base.delete_vertices(delete_mask));
        }
    }
    return total;
}

TraceMoments trace_moments(const Graph& g, const Rational& a) {
    const BasicCounts c = basic_counts(g);
    const Rational one_minus = 1 - a;
    TraceMoments t;
    t.t1 = 2 * a * c.m;
    t.t2 = 2 * one_minus * one_minus * c.m + a * a * c.sum_d2;
    t.t3 = a * a * a * c.sum_d3 +
           3 * a * one_minus * one_minus * c.sum_d2 +
           6 * one_minus * one_minus * one_minus * c.triangles;
    return t;
}

TraceMoments trace_moments_direct(const Graph& g, const Rational& a) {
    const int n = g.order();
    const RatMatrix m1 = alpha_matrix_at(g, a);
    RatMatrix m2(n), m3(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational acc = 0;
            for (int k = 0; k < n; ++k) {
                acc += m1.at(i, k) * m1.at(k, j);
            }
            m2.at(i, j) = std::move(acc);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational acc = 0;
            for (int k = 0; k < n; ++k) {
                acc += m2.at(i, k) * m1.at(k, j);
            }
            m3.at(i, j) = std::move(acc);
        }
    }
    TraceMoments t;
    for (int i = 0; i < n; ++i) {
        t.t1 += m1.at(i, i);
        t.t2 += m2.at(i, i);
        t.t3 += m3.at(i, i);
    }
    return t;
}

}  // namespace aalpha
