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

#include "aalpha/bipoly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstring>
#include <sstream>

namespace aalpha {

BiPoly::BiPoly(std::vector<IntPoly> alpha_coeffs) : c_(std::move(alpha_coeffs)) {
    if (c_.empty()) {
        throw std::invalid_argument("BiPoly: needs at least the leading 1");
    }
    if (c_[0] != IntPoly::constant(1)) {
        throw std::invalid_argument("BiPoly: not monic in x");
    }
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].degree() > static_cast<int>(j)) {
            throw std::invalid_argument(
                "BiPoly: alpha-degree of coefficient " + std::to_string(j) +
                " exceeds " + std::to_string(j));
        }
    }
}

RatPoly BiPoly::eval_alpha(const Rational& a) const {
    const int n = xdegree();
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        coeffs[static_cast<std::size_t>(n - j)] =
            c_[static_cast<std::size_t>(j)].eval(a);
    }
    return RatPoly(std::move(coeffs));
}

namespace {

constexpr std::uint8_t kEncodingVersion = 1;

void append_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
}

void append_coeff(std::vector<std::uint8_t>& out, const BigInt& v) {
    if (v == 0) {
        out.push_back(0);
        return;
    }
    out.push_back(v > 0 ? 1 : 2);
    const BigInt mag = boost::multiprecision::abs(v);
    std::vector<std::uint8_t> bytes;
    boost::multiprecision::export_bits(mag, std::back_inserter(bytes), 8,
                                       /*msv_first=*/false);
    append_u32(out, static_cast<std::uint32_t>(bytes.size()));
    out.insert(out.end(), bytes.begin(), bytes.end());
}

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint8_t u8() {
        require(1);
        return bytes_[pos_++];
    }

    std::uint32_t u32() {
        require(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) {
            v |= static_cast<std::uint32_t>(bytes_[pos_++]) << (8 * i);
        }
        return v;
    }

    std::span<const std::uint8_t> take(std::size_t count) {
        require(count);
        auto s = bytes_.subspan(pos_, count);
        pos_ += count;
        return s;
    }

    bool exhausted() const { return pos_ == bytes_.size(); }

private:
    void require(std::size_t count) {
        if (pos_ + count > bytes_.size()) {
            throw EncodingError("canonical_decode: truncated input");
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> canonical_encode(const BiPoly& p) {
    std::vector<std::uint8_t> out;
    const int n = p.xdegree();
    out.push_back(kEncodingVersion);
    out.push_back(static_cast<std::uint8_t>(n));
    for (int j = 0; j <= n; ++j) {
        const IntPoly& cj = p.alpha_coeff(j);
        out.push_back(static_cast<std::uint8_t>(cj.degree() + 1));
        for (const BigInt& v : cj.coeffs()) {
            append_coeff(out, v);
        }
    }
    return out;
}

BiPoly canonical_decode(std::span<const std::uint8_t> bytes) {
    ByteReader in(bytes);
    if (in.u8() != kEncodingVersion) {
        throw EncodingError("canonical_decode: unsupported version");
    }
    const int n = in.u8();
    std::vector<IntPoly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const int len = in.u8();
        std::vector<BigInt> c(static_cast<std::size_t>(len));
        for (int k = 0; k < len; ++k) {
            const std::uint8_t sign = in.u8();
            if (sign == 0) {
                continue;
            }
            if (sign > 2) {
                throw EncodingError("canonical_decode: bad sign byte");
            }
            const std::uint32_t nbytes = in.u32();
            if (nbytes == 0) {
                throw EncodingError("canonical_decode: empty magnitude");
            }
            auto mag_bytes = in.take(nbytes);
            if (mag_bytes.back() == 0) {
                throw EncodingError("canonical_decode: magnitude has leading zero");
            }
            BigInt mag;
            boost::multiprecision::import_bits(mag, mag_bytes.begin(),
                                               mag_bytes.end(), 8,
                                               /*msv_first=*/false);
            c[static_cast<std::size_t>(k)] = sign == 1 ? mag : BigInt(-mag);
        }
        if (len > 0 && c.back() == 0) {
            throw EncodingError("canonical_decode: zero leading coefficient");
        }
        coeffs.emplace_back(std::move(c));
    }
    if (!in.exhausted()) {
        throw EncodingError("canonical_decode: trailing bytes");
    }
    try {
        return BiPoly(std::move(coeffs));
    } catch (const std::invalid_argument& e) {
        throw EncodingError(std::string("canonical_decode: ") + e.what());
    }
}

namespace {

// MurmurHash3 x64 128 (public domain, Austin Appleby), with explicit
// little-endian block assembly so the digest is platform-independent.

inline std::uint64_t rotl64(std::uint64_t x, int r) {
    return (x << r) | (x >> (64 - r));
}

inline std::uint64_t fmix64(std::uint64_t k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    k *= 0xc4ceb9fe1a85ec53ULL;
    k ^= k >> 33;
    return k;
}

inline std::uint64_t load_le64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    }
    return v;
}

}  // namespace

Fingerprint fingerprint_bytes(std::span<const std::uint8_t> bytes) {
    constexpr std::uint64_t kSeed = 0x9e3779b97f4a7c15ULL;
    constexpr std::uint64_t c1 = 0x87c37b91114253d5ULL;
    constexpr std::uint64_t c2 = 0x4cf5ad432745937fULL;

    const std::size_t len = bytes.size();
    const std::size_t nblocks = len / 16;
    std::uint64_t h1 = kSeed;
    std::uint64_t h2 = kSeed;

    const std::uint8_t* data = bytes.data();
    for (std::size_t i = 0; i < nblocks; ++i) {
        std::uint64_t k1 = load_le64(data + 16 * i);
        std::uint64_t k2 = load_le64(data + 16 * i + 8);

        k1 *= c1; k1 = rotl64(k1, 31); k1 *= c2; h1 ^= k1;
        h1 = rotl64(h1, 27); h1 += h2; h1 = h1 * 5 + 0x52dce729;
        k2 *= c2; k2 = rotl64(k2, 33); k2 *= c1; h2 ^= k2;
        h2 = rotl64(h2, 31); h2 += h1; h2 = h2 * 5 + 0x38495ab5;
    }

    const std::uint8_t* tail = data + 16 * nblocks;
    std::uint64_t k1 = 0;
    std::uint64_t k2 = 0;
    switch (len & 15) {
        case 15: k2 ^= static_cast<std::uint64_t>(tail[14]) << 48; [[fallthrough]];
        case 14: k2 ^= static_cast<std::uint64_t>(tail[13]) << 40; [[fallthrough]];
        case 13: k2 ^= static_cast<std::uint64_t>(tail[12]) << 32; [[fallthrough]];
        case 12: k2 ^= static_cast<std::uint64_t>(tail[11]) << 24; [[fallthrough]];
        case 11: k2 ^= static_cast<std::uint64_t>(tail[10]) << 16; [[fallthrough]];
        case 10: k2 ^= static_cast<std::uint64_t>(tail[9]) << 8; [[fallthrough]];
        case 9:
            k2 ^= static_cast<std::uint64_t>(tail[8]);
            k2 *= c2; k2 = rotl64(k2, 33); k2 *= c1; h2 ^= k2;
            [[fallthrough]];
        case 8: k1 ^= static_cast<std::uint64_t>(tail[7]) << 56; [[fallthrough]];
        case 7: k1 ^= static_cast<std::uint64_t>(tail[6]) << 48; [[fallthrough]];
        case 6: k1 ^= static_cast<std::uint64_t>(tail[5]) << 40; [[fallthrough]];
        case 5: k1 ^= static_cast<std::uint64_t>(tail[4]) << 32; [[fallthrough]];
        case 4: k1 ^= static_cast<std::uint64_t>(tail[3]) << 24; [[fallthrough]];
        case 3: k1 ^= static_cast<std::uint64_t>(tail[2]) << 16; [[fallthrough]];
        case 2: k1 ^= static_cast<std::uint64_t>(tail[1]) << 8; [[fallthrough]];
        case 1:
            k1 ^= static_cast<std::uint64_t>(tail[0]);
            k1 *= c1; k1 = rotl64(k1, 31); k1 *= c2; h1 ^= k1;
            break;
        case 0:
            break;
    }

    h1 ^= static_cast<std::uint64_t>(len);
    h2 ^= static_cast<std::uint64_t>(len);
    h1 += h2;
    h2 += h1;
    h1 = fmix64(h1);
    h2 = fmix64(h2);
    h1 += h2;
    h2 += h1;
    return Fingerprint{h1, h2};
}

Fingerprint fingerprint(const BiPoly& p) {
    return fingerprint_bytes(canonical_encode(p));
}

namespace {

// Shared term-assembly for the text renderers. Each term contributes a body
// (without sign) and the sign used to join it to the previous term.
void join_term(std::string& out, bool negative, const std::string& body) {
    if (out.empty()) {
        if (negative) {
            out += '-';
        }
        out += body;
    } else {
        out += negative ? " - " : " + ";
        out += body;
    }
}

std::string power_token(const char* var, int k) {
    if (k == 0) {
        return "";
    }
    std::string t = var;
    if (k >= 2) {
        t += '^';
        t += std::to_string(k);
    }
    return t;
}

std::string magnitude_string(const BigInt& v) {
    return boost::multiprecision::abs(v).str();
}

std::string magnitude_string(const Rational& v) {
    const Rational a = v < 0 ? Rational(-v) : v;
    std::ostringstream os;
    os << boost::multiprecision::numerator(a);
    if (boost::multiprecision::denominator(a) != 1) {
        os << '/' << boost::multiprecision::denominator(a);
    }
    return os.str();
}

template <class T>
bool is_unit(const T& v) {
    return v == 1 || v == -1;
}

// coeff * var^k with the magnitude-1 coefficient elided.
template <class T>
std::string monomial_body(const T& coeff, const char* var, int k) {
    const std::string pow = power_token(var, k);
    if (pow.empty()) {
        return magnitude_string(coeff);
    }
    if (is_unit(coeff)) {
        return pow;
    }
    return magnitude_string(coeff) + "*" + pow;
}

template <class T>
std::string render_poly(const Poly<T>& p, const char* var) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const T& c = p.coeff(k);
        if (c == 0) {
            continue;
        }
        join_term(out, c < 0, monomial_body(c, var, k));
    }
    return out;
}

// Number of nonzero terms.
int term_count(const IntPoly& p) {
    int count = 0;
    for (const BigInt& c : p.coeffs()) {
        if (c != 0) {
            ++count;
        }
    }
    return count;
}

}  // namespace

std::string render(const IntPoly& p, const char* var) {
    return render_poly(p, var);
}

std::string render(const RatPoly& p, const char* var) {
    return render_poly(p, var);
}

std::string render(const BiPoly& p) {
    const int n = p.xdegree();
    std::string out;
    for (int j = 0; j <= n; ++j) {
        const IntPoly& cj = p.alpha_coeff(j);
        if (cj.is_zero()) {
            continue;
        }
        const BigInt& lead = cj.coeff(cj.degree());
        const bool negative = lead < 0;
        const IntPoly normalized = negative ? -cj : cj;
        const std::string xpow = power_token("x", n - j);

        std::string body;
        if (term_count(normalized) > 1) {
            body = "(" + render_poly(normalized, "a") + ")";
            if (!xpow.empty()) {
                body += "*" + xpow;
            }
        } else if (normalized.degree() >= 1) {
            // Single alpha term: a^d or c*a^d, inline.
            body = monomial_body(normalized.coeff(normalized.degree()), "a",
                                 normalized.degree());
            if (!xpow.empty()) {
                body += "*" + xpow;
            }
        } else {
            body = xpow.empty() ? magnitude_string(normalized.coeff(0))
                                : monomial_body(normalized.coeff(0), "x", n - j);
        }
        join_term(out, negative, body);
    }
    return out.empty() ? "0" : out;
}

}  // namespace aalpha
