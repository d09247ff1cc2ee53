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

#include "aalpha/ints.hpp"

#include <cctype>

namespace aalpha {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) {
        throw std::invalid_argument("parse_rational: empty value");
    }

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw std::invalid_argument("parse_rational: malformed fraction '" +
                                        std::string(text) + "'");
        }
        BigInt d{std::string(den)};
        if (d == 0) {
            throw std::invalid_argument("parse_rational: zero denominator");
        }
        value = Rational(BigInt(std::string(num)), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) ||
            (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac))) {
            throw std::invalid_argument("parse_rational: malformed decimal '" +
                                        std::string(text) + "'");
        }
        BigInt scaled = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
        BigInt den = 1;
        for (char c : frac) {
            scaled = scaled * 10 + (c - '0');
            den *= 10;
        }
        value = Rational(scaled, den);
    } else {
        if (!all_digits(s)) {
            throw std::invalid_argument("parse_rational: malformed integer '" +
                                        std::string(text) + "'");
        }
        value = Rational(BigInt(std::string(s)));
    }
    return negative ? Rational(-value) : value;
}

}  // namespace aalpha
