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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aalpha/ints.hpp"
#include "aalpha/poly.hpp"

namespace aalpha {

/// Bivariate integer polynomial of the shape
///     sum_{j=0..n} C_j(alpha) * x^{n-j},
/// monic in x (C_0 = 1) with deg_alpha C_j <= j. This is exactly the shape
/// of an A_alpha-characteristic polynomial.
class BiPoly {
public:
    /// alpha_coeffs[j] is C_j; alpha_coeffs[0] must be the constant 1 and
    /// alpha_coeffs[j] must have alpha-degree at most j.
    explicit BiPoly(std::vector<IntPoly> alpha_coeffs);

    /// x-degree n.
    int xdegree() const { return static_cast<int>(c_.size()) - 1; }

    /// C_j, the coefficient of x^{n-j} as a polynomial in alpha.
    const IntPoly& alpha_coeff(int j) const {
        if (j < 0 || j > xdegree()) {
            throw std::out_of_range("BiPoly: coefficient index out of range");
        }
        return c_[static_cast<std::size_t>(j)];
    }

    const std::vector<IntPoly>& alpha_coeffs() const { return c_; }

    /// Substitutes alpha coefficient-wise, yielding a rational polynomial
    /// in x (power-basis indexing).
    RatPoly eval_alpha(const Rational& a) const;

    bool operator==(const BiPoly&) const = default;

private:
    std::vector<IntPoly> c_;
};

/// Thrown by canonical_decode on malformed or non-canonical bytes.
class EncodingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical byte encoding, injective on BiPoly values and stable across
/// platforms. Layout (all integers little-endian):
///   u8  version (1)
///   u8  x-degree n
///   for j = 0..n:
///     u8 len = number of alpha coefficients of C_j (0 for C_j = 0,
///              otherwise alpha-degree + 1)
///     for k = 0..len-1:   coefficient of alpha^k in C_j
///       u8 sign (0 zero, 1 positive, 2 negative)
///       if sign != 0: u32 nbytes, then nbytes magnitude bytes
///                     little-endian with nonzero top byte
std::vector<std::uint8_t> canonical_encode(const BiPoly& p);

/// Inverse of canonical_encode (validates canonicity).
BiPoly canonical_decode(std::span<const std::uint8_t> bytes);

/// Stable non-cryptographic 128-bit hash (MurmurHash3 x64) of the canonical
/// encoding. A bucketing accelerator only: equal polynomials always collide,
/// and census grouping re-verifies buckets with full encodings.
struct Fingerprint {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    friend bool operator<(const Fingerprint& a, const Fingerprint& b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }
};

Fingerprint fingerprint_bytes(std::span<const std::uint8_t> bytes);
Fingerprint fingerprint(const BiPoly& p);

/// Canonical text rendering: terms in decreasing x-power; each alpha
/// coefficient in decreasing alpha-power with explicit signs; the sign of
/// the leading alpha coefficient is pulled out in front of the term, e.g.
///   x^9 - 36*a*x^8 + (556*a^2 + 36*a - 18)*x^7 - ...
std::string render(const BiPoly& p);

/// Text rendering of univariate polynomials, same conventions.
std::string render(const IntPoly& p, const char* var = "x");
std::string render(const RatPoly& p, const char* var = "x");

}  // namespace aalpha
