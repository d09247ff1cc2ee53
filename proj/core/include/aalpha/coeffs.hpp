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

#include <array>
#include <stdexcept>

#include "aalpha/bipoly.hpp"
#include "aalpha/graph.hpp"
#include "aalpha/poly.hpp"

namespace aalpha {

/// The counts the first four coefficients are built from.
struct CoeffInputs {
    BigInt n;
    BigInt m;
    BigInt sum_d2;
    BigInt sum_d3;
    BigInt t;

    /// Checks nonnegativity, sum d^2 >= 2m, and Cauchy-Schwarz
    /// (2m)^2 <= n * sum d^2. Throws std::invalid_argument on violation.
    void validate() const;
};

CoeffInputs coeff_inputs(const BasicCounts& counts);

/// First four coefficients of the A_alpha-characteristic polynomial as
/// polynomials in alpha:
///   c0 = 1
///   c1 = -2m a
///   c2 = 2a^2 m^2 - (1-a)^2 m - (1/2) a^2 sum d^2
///   c3 = -(1/3)(6(1-a)^3 t - 6a(1-a)^2 m^2 + 3a(1-a)^2 sum d^2
///              + a^3 (4m^3 - 3m sum d^2 + sum d^3))
struct FirstFour {
    IntPoly c0, c1, c2, c3;

    bool operator==(const FirstFour&) const = default;
};

FirstFour aalpha_first_four(const CoeffInputs& in);

/// Adjacency coefficients (1, 0, -m, -2t).
std::array<BigInt, 4> a_first_four(const BigInt& m, const BigInt& t);

/// Laplacian coefficients:
///   l0 = 1, l1 = -2m, l2 = 2m^2 - m - (1/2) sum d^2,
///   l3 = (1/3)(-4m^3 + 6m^2 + 3m sum d^2 - sum d^3 - 3 sum d^2 + 6t)
std::array<BigInt, 4> l_first_four(const CoeffInputs& in);

/// Signless Laplacian coefficients:
///   q0 = 1, q1 = -2m, q2 = 2m^2 - m - (1/2) sum d^2,
///   q3 = -(1/3)(6t - 6m^2 + 4m^3 + 3(1-m) sum d^2 + sum d^3)
std::array<BigInt, 4> q_first_four(const CoeffInputs& in);

/// Closed-form first four A_alpha coefficients for the named families
/// (paths from n = 2, cycles from n = 4, complete graphs from n = 1,
/// friendship graphs from n = 1, wheels from n = 3, complete bipartite from
/// a, b = 1). Throws std::invalid_argument outside those ranges or for
/// unsupported families.
FirstFour family_coeffs(const FamilySpec& spec);

/// Closed-form (q0..q3) for the same families and ranges.
std::array<BigInt, 4> family_q_coeffs(const FamilySpec& spec);

/// Thrown when a polynomial cannot be the A_alpha-characteristic polynomial
/// of any graph (failed exact division or violated count invariant).
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DecodedInvariants {
    BigInt n;
    BigInt m;
    BigInt sum_d2;
    BigInt sum_d3;
    BigInt t;
    bool is_regular = false;  // n * sum d^2 == (2m)^2

    bool operator==(const DecodedInvariants&) const = default;
};

/// Inverts the closed forms: n from the x-degree, m from C_1, sum d^2 from
/// the alpha^2 face of C_2, t from the constant term of C_3, sum d^3 from
/// the alpha^3 face of C_3. The decoded counts are substituted back and must
/// reproduce C_0..C_3 exactly; any mismatch raises DecodeError.
DecodedInvariants decode_invariants(const BiPoly& p);

}  // namespace aalpha
