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

#include "aalpha/matrix.hpp"

namespace aalpha {

IntPoly charpoly_int(const IntMatrix& m) { return charpoly(m); }

RatPoly charpoly_rat(const RatMatrix& m) { return charpoly(m); }

BigInt determinant(IntMatrix m) {
    const int n = m.n;
    if (n == 0) {
        return 1;
    }
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m.at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) {
                return 0;
            }
            for (int j = k; j < n; ++j) {
                std::swap(m.at(k, j), m.at(pivot, j));
            }
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m.at(i, j) = exact_div(
                    m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : BigInt(-m.at(n - 1, n - 1));
}

}  // namespace aalpha
