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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aalpha {

/// Arbitrary-precision signed integer used for all exact coefficients.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar, always kept in canonical reduced form.
using Rational = boost::multiprecision::cpp_rational;

/// q = num / den, requiring the division to be exact. Throws std::logic_error
/// otherwise: an inexact division here always means a broken invariant, never
/// bad user input.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw std::logic_error("exact_div: inexact division");
    }
    return q;
}

/// Parses "p/q", "p", or a decimal string like "0.35" into an exact rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Signed 128-bit integer with sticky overflow tracking. Arithmetic on an
/// invalid value stays invalid, so a whole computation can be checked once at
/// the end. Magnitudes up to 2^127 - 1 are representable; anything beyond
/// marks the value invalid instead of wrapping.
class Checked128 {
public:
    Checked128() = default;
    Checked128(long long v) : v_(v) {}

    bool valid() const { return ok_; }
    __int128 value() const { return v_; }
    bool is_zero() const { return ok_ && v_ == 0; }

    friend Checked128 operator+(Checked128 a, Checked128 b) {
        Checked128 r;
        r.ok_ = a.ok_ && b.ok_;
        r.v_ = static_cast<__int128>(static_cast<unsigned __int128>(a.v_) +
                                     static_cast<unsigned __int128>(b.v_));
        if ((a.v_ >= 0) == (b.v_ >= 0) && (r.v_ >= 0) != (a.v_ >= 0)) {
            r.ok_ = false;
        }
        return r;
    }

    friend Checked128 operator-(Checked128 a, Checked128 b) {
        Checked128 r;
        r.ok_ = a.ok_ && b.ok_;
        r.v_ = static_cast<__int128>(static_cast<unsigned __int128>(a.v_) -
                                     static_cast<unsigned __int128>(b.v_));
        if ((a.v_ >= 0) != (b.v_ >= 0) && (r.v_ >= 0) != (a.v_ >= 0)) {
            r.ok_ = false;
        }
        return r;
    }

    friend Checked128 operator-(Checked128 a) {
        Checked128 zero;
        return zero - a;
    }

    friend Checked128 operator*(Checked128 a, Checked128 b) {
        Checked128 r;
        r.ok_ = a.ok_ && b.ok_;
        if (!r.ok_) {
            return r;
        }
        const bool neg = (a.v_ < 0) != (b.v_ < 0);
        const unsigned __int128 ua = a.v_ < 0
            ? -static_cast<unsigned __int128>(a.v_)
            : static_cast<unsigned __int128>(a.v_);
        const unsigned __int128 ub = b.v_ < 0
            ? -static_cast<unsigned __int128>(b.v_)
            : static_cast<unsigned __int128>(b.v_);
        const std::uint64_t a1 = static_cast<std::uint64_t>(ua >> 64);
        const std::uint64_t a0 = static_cast<std::uint64_t>(ua);
        const std::uint64_t b1 = static_cast<std::uint64_t>(ub >> 64);
        const std::uint64_t b0 = static_cast<std::uint64_t>(ub);
        if (a1 != 0 && b1 != 0) {
            r.ok_ = false;
            return r;
        }
        // At most one of the cross terms is nonzero here, so no u128 carry.
        const unsigned __int128 cross =
            static_cast<unsigned __int128>(a1) * b0 +
            static_cast<unsigned __int128>(a0) * b1;
        if ((cross >> 63) != 0) {
            r.ok_ = false;
            return r;
        }
        const unsigned __int128 lo = static_cast<unsigned __int128>(a0) * b0;
        if ((lo >> 127) != 0) {
            r.ok_ = false;
            return r;
        }
        const unsigned __int128 total = (cross << 64) + lo;
        if ((total >> 127) != 0) {
            r.ok_ = false;
            return r;
        }
        r.v_ = neg ? -static_cast<__int128>(total) : static_cast<__int128>(total);
        return r;
    }

    Checked128& operator+=(Checked128 o) { return *this = *this + o; }
    Checked128& operator-=(Checked128 o) { return *this = *this - o; }
    Checked128& operator*=(Checked128 o) { return *this = *this * o; }

    /// Divides by d in place when the division is exact; marks the value
    /// invalid when d does not divide it (or on the INT128_MIN / -1 edge).
    bool exact_divide(long long d) {
        if (!ok_ || d == 0) {
            ok_ = false;
            return false;
        }
        constexpr __int128 kMin = static_cast<__int128>(1) << 127;
        if (v_ == kMin && d == -1) {
            ok_ = false;
            return false;
        }
        if (v_ % d != 0) {
            ok_ = false;
            return false;
        }
        v_ /= d;
        return true;
    }

private:
    __int128 v_ = 0;
    bool ok_ = true;
};

/// Lossless conversion; the value must be valid.
inline BigInt to_bigint(const Checked128& c) {
    if (!c.valid()) {
        throw std::logic_error("to_bigint: invalid Checked128");
    }
    __int128 v = c.value();
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-r) : r;
}

// Scalar adapters shared by the generic matrix / interpolation kernels.

inline bool scalar_valid(const BigInt&) { return true; }
inline bool scalar_valid(const Rational&) { return true; }
inline bool scalar_valid(const Checked128& v) { return v.valid(); }

inline bool scalar_is_zero(const BigInt& v) { return v == 0; }
inline bool scalar_is_zero(const Rational& v) { return v == 0; }
inline bool scalar_is_zero(const Checked128& v) { return v.is_zero(); }

inline bool scalar_exact_divide(BigInt& v, long long d) {
    BigInt q, r;
    boost::multiprecision::divide_qr(v, BigInt(d), q, r);
    if (r != 0) {
        return false;
    }
    v = q;
    return true;
}

inline bool scalar_exact_divide(Checked128& v, long long d) {
    return v.exact_divide(d);
}

}  // namespace aalpha
