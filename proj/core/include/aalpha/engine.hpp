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

#include <vector>

#include "aalpha/bipoly.hpp"
#include "aalpha/graph.hpp"
#include "aalpha/matrix.hpp"
#include "aalpha/poly.hpp"

namespace aalpha {

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix degree_matrix(const Graph& g);
IntMatrix laplacian_matrix(const Graph& g);
IntMatrix signless_laplacian_matrix(const Graph& g);

/// a*D + (1-a)*A at an integer point a (entries may be negative).
IntMatrix alpha_matrix_at(const Graph& g, long long a);

/// Rational A_alpha(G) = a*D + (1-a)*A.
RatMatrix alpha_matrix_at(const Graph& g, const Rational& a);

/// The exact bivariate A_alpha-characteristic polynomial
/// det(xI - alpha*D - (1-alpha)*A). Computed from integer-point
/// evaluations at alpha = 0..n followed by exact interpolation; a checked
/// 128-bit fast path falls back to big integers on overflow, bit-identically.
BiPoly alpha_charpoly(const Graph& g);

struct SpecialCharpolys {
    IntPoly phi_a;  // adjacency
    IntPoly phi_l;  // Laplacian D - A
    IntPoly phi_q;  // signless Laplacian D + A
};

SpecialCharpolys special_charpolys(const Graph& g);

/// phi(kM) from phi(M): the coefficient of x^{n-j} picks up a factor k^j.
/// The input must be monic.
IntPoly scale_charpoly(const IntPoly& p, const BigInt& k);

/// Evaluates p at alpha = a and clears the 2^j scaling, turning the
/// A_{1/2} evaluation into the signless Laplacian polynomial when a = 1/2,
/// k = 2. Throws std::logic_error if any scaled coefficient is not an
/// integer.
IntPoly eval_alpha_scaled(const BiPoly& p, const Rational& a, const BigInt& k);

/// Right-hand side of the loop-weight expansion: for a weighted graph with
/// loop weights h_j,
///   phi(A(G[h])) = phi(A(G))
///     + sum_{k>=1} (-1)^k sum_{r_1<...<r_k} h_{r_1}...h_{r_k}
///                  phi(A(G_{r_1,...,r_k})),
/// each term an exact-rational characteristic polynomial of a vertex-deleted
/// subgraph. Exponential in the number of nonzero loops; a verification
/// oracle, so the order is capped at 16.
RatPoly loop_weight_expansion(const WeightedGraph& wg);

/// Characteristic polynomial of A(G) + diag(loops): the left-hand side of
/// the loop-weight expansion, computed directly.
RatPoly loop_charpoly_direct(const WeightedGraph& wg);

struct TraceMoments {
    Rational t1;  // tr A_a       = 2am
    Rational t2;  // tr A_a^2     = 2(1-a)^2 m + a^2 sum d_i^2
    Rational t3;  // tr A_a^3     = a^3 sum d_i^3 + 3a(1-a)^2 sum d_i^2
                  //                + 6(1-a)^3 t
    bool operator==(const TraceMoments&) const = default;
};

/// Closed-form power-sum traces of A_a(G) for the first three powers.
TraceMoments trace_moments(const Graph& g, const Rational& a);

/// The same three traces computed from actual matrix powers; the identity
/// between the two routes is what the tests assert.
TraceMoments trace_moments_direct(const Graph& g, const Rational& a);

namespace detail {

/// Interpolation path with an explicit node set (must be n+1 distinct
/// integers); the result is independent of the choice.
BiPoly alpha_charpoly_at_nodes(const Graph& g, const std::vector<long long>& nodes);

/// Big-integer-only path, bypassing the 128-bit fast path (used to test
/// that both paths agree bit for bit).
BiPoly alpha_charpoly_bigint(const Graph& g);

}  // namespace detail

}  // namespace aalpha
