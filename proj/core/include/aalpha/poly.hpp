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
#include <string>
#include <utility>
#include <vector>

#include "aalpha/ints.hpp"

namespace aalpha {

/// Dense univariate polynomial over an exact scalar ring. Coefficient k is
/// the coefficient of x^k; the representation is normalized so the highest
/// stored coefficient is nonzero (the zero polynomial stores nothing).
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(T v) {
        std::vector<T> c;
        c.push_back(std::move(v));
        return Poly(std::move(c));
    }

    static Poly monomial(T coeff, int power) {
        std::vector<T> c(static_cast<std::size_t>(power) + 1, T(0));
        c.back() = std::move(coeff);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<T>& coeffs() const { return c_; }

    /// Coefficient of x^k (zero beyond the stored degree).
    T coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) {
            return T(0);
        }
        return c_[static_cast<std::size_t>(k)];
    }

    template <class X>
    X eval(const X& x) const {
        X acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x + X(c_[i]);
        }
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), T(0));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        normalize();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), T(0));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        normalize();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator-(const Poly& a) {
        std::vector<T> c(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            c[i] = -a.c_[i];
        }
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) {
            return Poly();
        }
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(c));
    }

    friend Poly operator*(const T& k, Poly p) {
        for (auto& v : p.c_) {
            v *= k;
        }
        p.normalize();
        return p;
    }

    friend Poly operator*(Poly p, const T& k) { return k * std::move(p); }

    bool operator==(const Poly&) const = default;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<T> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
    return RatPoly(std::move(c));
}

/// Thrown when interpolation inputs are unusable: duplicate nodes, or values
/// that cannot come from an integer polynomial of the assumed degree (an
/// inexact divided difference).
class InterpolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Newton divided-difference interpolation over distinct integer nodes.
/// Every division is checked for exactness; out receives power-basis
/// coefficients (size nodes.size(), untrimmed). Returns false when a
/// division is inexact or a checked scalar overflows.
template <class S>
bool newton_interpolate(const std::vector<long long>& nodes,
                        std::vector<S> values, std::vector<S>& out) {
    const std::size_t k = nodes.size();
    // Divided differences, in place: values[i] becomes f[x_0 .. x_i].
    for (std::size_t order = 1; order < k; ++order) {
        for (std::size_t i = k - 1; i >= order; --i) {
            S diff = values[i] - values[i - 1];
            if (!scalar_valid(diff) ||
                !scalar_exact_divide(diff,
                                     nodes[i] - nodes[i - order])) {
                return false;
            }
            values[i] = std::move(diff);
        }
    }
    // Horner expansion of the Newton form into the power basis.
    out.assign(k, S(0));
    std::size_t len = 0;  // number of live coefficients in out
    for (std::size_t i = k; i-- > 0;) {
        // out = out * (x - nodes[i]) + values[i]
        for (std::size_t j = len; j-- > 0;) {
            out[j + 1] += out[j];
            out[j] = out[j] * S(-nodes[i]);
        }
        if (len < k) {
            ++len;
        }
        out[0] += values[i];
    }
    for (const S& v : out) {
        if (!scalar_valid(v)) {
            return false;
        }
    }
    return true;
}

/// The unique integer polynomial through the given (node, value) points.
/// Throws InterpolationError on duplicate nodes or inexact divisions.
IntPoly interpolate_integer_points(
    const std::vector<std::pair<long long, BigInt>>& points);

}  // namespace aalpha
