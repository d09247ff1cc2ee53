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
#include <utility>
#include <vector>

#include "aalpha/ints.hpp"
#include "aalpha/poly.hpp"

namespace aalpha {

/// Dense square matrix over an exact scalar.
template <class S>
struct Matrix {
    int n = 0;
    std::vector<S> a;

    Matrix() = default;
    explicit Matrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, S(0)) {
        if (n_ < 0) {
            throw std::invalid_argument("Matrix: negative size");
        }
    }

    S& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const S& at(int i, int j) const {
        return a[static_cast<std::size_t>(i) * n + j];
    }
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

/// Characteristic polynomial det(xI - M) by the Berkowitz method:
/// division-free, so it is exact over any of our scalar rings. Returns
/// coefficients c[0..n] in decreasing powers (c[j] is the coefficient of
/// x^{n-j}, c[0] = 1). The 0x0 matrix yields {1}.
template <class S>
std::vector<S> berkowitz_coeffs(const Matrix<S>& m) {
    const int n = m.n;
    std::vector<S> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    c.push_back(S(1));
    if (n == 0) {
        return c;
    }
    c.push_back(-m.at(0, 0));

    std::vector<S> v, w, s;
    for (int r = 1; r < n; ++r) {
        // Leading principal submatrix A of size r, bordered by row R and
        // column C of the (r+1)-st row/column, with corner d.
        // s[k] = R * A^k * C for k = 0..r-1.
        s.assign(static_cast<std::size_t>(r), S(0));
        v.assign(static_cast<std::size_t>(r), S(0));
        for (int i = 0; i < r; ++i) {
            v[i] = m.at(i, r);
        }
        for (int k = 0; k < r; ++k) {
            if (k > 0) {
                w.assign(static_cast<std::size_t>(r), S(0));
                for (int i = 0; i < r; ++i) {
                    S acc(0);
                    for (int j = 0; j < r; ++j) {
                        acc += m.at(i, j) * v[j];
                    }
                    w[i] = std::move(acc);
                }
                v.swap(w);
            }
            S dot(0);
            for (int j = 0; j < r; ++j) {
                dot += m.at(r, j) * v[j];
            }
            s[k] = std::move(dot);
        }

        // Multiply c by the Toeplitz column (1, -d, -s_0, ..., -s_{r-1}).
        const S& d = m.at(r, r);
        std::vector<S> next(static_cast<std::size_t>(r) + 2, S(0));
        for (int i = 0; i <= r + 1; ++i) {
            S acc = i <= r ? c[i] : S(0);
            if (i >= 1 && i - 1 <= r) {
                acc -= d * c[i - 1];
            }
            for (int k = 2; k <= i; ++k) {
                acc -= s[k - 2] * c[i - k];
            }
            next[i] = std::move(acc);
        }
        c.swap(next);
    }
    return c;
}

/// Berkowitz coefficients repackaged as a Poly in the power basis.
template <class S>
Poly<S> charpoly(const Matrix<S>& m) {
    std::vector<S> dec = berkowitz_coeffs(m);
    const std::size_t n = dec.size() - 1;
    std::vector<S> pow(n + 1, S(0));
    for (std::size_t j = 0; j <= n; ++j) {
        pow[n - j] = std::move(dec[j]);
    }
    return Poly<S>(std::move(pow));
}

/// Exact characteristic polynomial of an integer matrix (monic, degree n).
IntPoly charpoly_int(const IntMatrix& m);

/// Exact characteristic polynomial of a rational matrix.
RatPoly charpoly_rat(const RatMatrix& m);

/// Integer determinant by Bareiss fraction-free elimination. Kept separate
/// from the Berkowitz route so the two can cross-check each other.
BigInt determinant(IntMatrix m);

}  // namespace aalpha
