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

#include "aalpha/coeffs.hpp"

namespace aalpha {

void CoeffInputs::validate() const {
    if (n < 1) {
        throw std::invalid_argument("CoeffInputs: n must be positive");
    }
    if (m < 0 || sum_d2 < 0 || sum_d3 < 0 || t < 0) {
        throw std::invalid_argument("CoeffInputs: counts must be nonnegative");
    }
    if (sum_d2 < 2 * m) {
        throw std::invalid_argument("CoeffInputs: sum d^2 below degree sum");
    }
    if (4 * m * m > n * sum_d2) {
        throw std::invalid_argument("CoeffInputs: Cauchy-Schwarz violated");
    }
}

CoeffInputs coeff_inputs(const BasicCounts& counts) {
    CoeffInputs in{counts.n, counts.m, counts.sum_d2, counts.sum_d3,
                   counts.triangles};
    in.validate();
    return in;
}

FirstFour aalpha_first_four(const CoeffInputs& in) {
    in.validate();
    const BigInt& m = in.m;
    const BigInt& s2 = in.sum_d2;
    const BigInt& s3 = in.sum_d3;
    const BigInt& t = in.t;

    FirstFour out;
    out.c0 = IntPoly::constant(1);
    out.c1 = IntPoly({BigInt(0), -2 * m});
    // 2a^2 m^2 - (1-a)^2 m - (1/2) a^2 sum d^2, expanded in a.
    out.c2 = IntPoly({-m, 2 * m, 2 * m * m - m - exact_div(s2, 2)});
    // -(1/3)(6(1-a)^3 t - 6a(1-a)^2 m^2 + 3a(1-a)^2 s2
    //        + a^3 (4m^3 - 3m s2 + s3)), expanded in a.
    out.c3 = IntPoly({
        -2 * t,
        6 * t + 2 * m * m - s2,
        -6 * t - 4 * m * m + 2 * s2,
        exact_div(-(-6 * t - 6 * m * m + 3 * s2 + 4 * m * m * m - 3 * m * s2 + s3),
                  3),
    });
    return out;
}

std::array<BigInt, 4> a_first_four(const BigInt& m, const BigInt& t) {
    return {BigInt(1), BigInt(0), -m, -2 * t};
}

std::array<BigInt, 4> l_first_four(const CoeffInputs& in) {
    in.validate();
    const BigInt& m = in.m;
    const BigInt& s2 = in.sum_d2;
    return {
        BigInt(1),
        -2 * m,
        2 * m * m - m - exact_div(s2, 2),
        exact_div(-4 * m * m * m + 6 * m * m + 3 * m * s2 - in.sum_d3 - 3 * s2 +
                      6 * in.t,
                  3),
    };
}

std::array<BigInt, 4> q_first_four(const CoeffInputs& in) {
    in.validate();
    const BigInt& m = in.m;
    const BigInt& s2 = in.sum_d2;
    return {
        BigInt(1),
        -2 * m,
        2 * m * m - m - exact_div(s2, 2),
        exact_div(-(6 * in.t - 6 * m * m + 4 * m * m * m + 3 * (1 - m) * s2 +
                    in.sum_d3),
                  3),
    };
}

namespace {

long long family_param(const FamilySpec& spec, std::size_t i) {
    return spec.params.at(i);
}

void require_range(bool ok, const char* what) {
    if (!ok) {
        throw std::invalid_argument(std::string("family_coeffs: ") + what);
    }
}

}  // namespace

FirstFour family_coeffs(const FamilySpec& spec) {
    FirstFour out;
    out.c0 = IntPoly::constant(1);

    switch (spec.kind) {
        case FamilySpec::Kind::path: {
            const BigInt n = family_param(spec, 0);
            require_range(n >= 2, "path formulas need n >= 2");
            out.c1 = IntPoly({0, -2 * (n - 1)});
            out.c2 = IntPoly({-(n - 1), 2 * (n - 1), (2 * n - 3) * (n - 2)});
            out.c3 = IntPoly({
                0,
                2 * (n - 2) * (n - 2),
                -4 * (n - 2) * (n - 2),
                exact_div(-2 * (2 * n - 5) * (n - 2) * (n - 3), 3),
            });
            return out;
        }
        case FamilySpec::Kind::complete: {
            const BigInt n = family_param(spec, 0);
            require_range(n >= 1, "complete formulas need n >= 1");
            out.c1 = IntPoly({0, -n * (n - 1)});
            out.c2 = IntPoly({
                exact_div(-n * (n - 1), 2),
                n * (n - 1),
                exact_div(n * n * (n - 1) * (n - 2), 2),
            });
            out.c3 = IntPoly({
                exact_div(-n * (n - 1) * (n - 2), 3),
                exact_div(n * (n - 1) * (n - 2) * (n + 1), 2),
                -n * n * (n - 1) * (n - 2),
                exact_div(-n * n * n * (n - 1) * (n - 2) * (n - 3), 6),
            });
            return out;
        }
        case FamilySpec::Kind::cycle: {
            const BigInt n = family_param(spec, 0);
            require_range(n >= 4, "cycle formulas need n >= 4");
            out.c1 = IntPoly({0, -2 * n});
            out.c2 = IntPoly({-n, 2 * n, n * (2 * n - 3)});
            out.c3 = IntPoly({
                0,
                2 * n * (n - 2),
                -4 * n * (n - 2),
                exact_div(-2 * n * (n - 2) * (2 * n - 5), 3),
            });
            return out;
        }
        case FamilySpec::Kind::friendship: {
            const BigInt n = family_param(spec, 0);
            require_range(n >= 1, "friendship formulas need n >= 1");
            out.c1 = IntPoly({0, -6 * n});
            out.c2 = IntPoly({-3 * n, 6 * n, n * (16 * n - 7)});
            out.c3 = IntPoly({
                -2 * n,
                2 * n * (7 * n - 1),
                -2 * n * (14 * n - 5),
                exact_div(-2 * n * (40 * n - 17) * (n - 1), 3),
            });
            return out;
        }
        case FamilySpec::Kind::wheel: {
            const BigInt n = family_param(spec, 0);
            require_range(n >= 3, "wheel formulas need n >= 3");
            out.c1 = IntPoly({0, -4 * n});
            out.c2 = IntPoly({-2 * n, 4 * n, exact_div(n * (15 * n - 13), 2)});
            out.c3 = IntPoly({
                -2 * n,
                n * (7 * n - 3),
                -2 * n * (7 * n - 6),
                -n * (n - 1) * (9 * n - 16),
            });
            return out;
        }
        case FamilySpec::Kind::complete_bipartite: {
            const BigInt a = family_param(spec, 0);
            const BigInt b = family_param(spec, 1);
            require_range(a >= 1 && b >= 1, "bipartite formulas need a, b >= 1");
            const BigInt ab = a * b;
            out.c1 = IntPoly({0, -2 * ab});
            out.c2 = IntPoly({
                -ab,
                2 * ab,
                exact_div(ab * (4 * ab - a - b - 2), 2),
            });
            out.c3 = IntPoly({
                0,
                ab * (2 * ab - a - b),
                -2 * ab * (2 * ab - a - b),
                exact_div(-ab * (4 * a * a * b * b - 3 * a * a * b -
                                 3 * a * b * b + a * a - 6 * ab + b * b +
                                 3 * a + 3 * b),
                          3),
            });
            return out;
        }
        default:
            throw std::invalid_argument(
                "family_coeffs: no closed form for this family");
    }
}

std::array<BigInt, 4> family_q_coeffs(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::path: {
            const BigInt n = family_param(spec, 0);
            require_range(n >= 2, "path formulas need n >= 2");
            return {BigInt(1), -2 * (n - 1), (2 * n - 3) * (n - 2),
                    exact_div(-2 * (2 * n - 5) * (n - 2) * (n - 3), 3)};
        }
        case FamilySpec::Kind::complete: {
            const BigInt n = family_param(spec, 0);
            require_range(n >= 1, "complete formulas need n >= 1");
            return {BigInt(1), -n * (n - 1),
                    exact_div(n * n * (n - 1) * (n - 2), 2),
                    exact_div(-n * (n + 1) * (n - 1) * (n - 2) * (n - 2) * (n - 2),
                              6)};
        }
        case FamilySpec::Kind::cycle: {
            const BigInt n = family_param(spec, 0);
            require_range(n >= 4, "cycle formulas need n >= 4");
            return {BigInt(1), -2 * n, n * (2 * n - 3),
                    exact_div(-2 * n * (n - 2) * (2 * n - 5), 3)};
        }
        case FamilySpec::Kind::friendship: {
            const BigInt n = family_param(spec, 0);
            require_range(n >= 1, "friendship formulas need n >= 1");
            return {BigInt(1), -6 * n, n * (16 * n - 7),
                    exact_div(-2 * n * (40 * n * n - 57 * n + 23), 3)};
        }
        case FamilySpec::Kind::wheel: {
            const BigInt n = family_param(spec, 0);
            require_range(n >= 3, "wheel formulas need n >= 3");
            return {BigInt(1), -4 * n, exact_div(n * (15 * n - 13), 2),
                    -n * (9 * n * n - 25 * n + 20)};
        }
        case FamilySpec::Kind::complete_bipartite: {
            const BigInt a = family_param(spec, 0);
            const BigInt b = family_param(spec, 1);
            require_range(a >= 1 && b >= 1, "bipartite formulas need a, b >= 1");
            const BigInt ab = a * b;
            return {BigInt(1), -2 * ab,
                    exact_div(ab * (4 * ab - a - b - 2), 2),
                    exact_div(-ab * (4 * a * a * b * b - 3 * a * a * b -
                                     3 * a * b * b + a * a - 6 * ab + b * b +
                                     3 * a + 3 * b),
                              3)};
        }
        default:
            throw std::invalid_argument(
                "family_q_coeffs: no closed form for this family");
    }
}

DecodedInvariants decode_invariants(const BiPoly& p) {
    const int n = p.xdegree();
    // BiPoly is monic by construction; the remaining failure modes are a C_1
    // not divisible by alpha, inexact halvings, or a substitution mismatch.
    DecodedInvariants out;
    out.n = n;

    const IntPoly& c1 = n >= 1 ? p.alpha_coeff(1) : IntPoly();
    if (c1.coeff(0) != 0) {
        throw DecodeError("decode: C_1 is not divisible by alpha");
    }
    BigInt twice_m = -c1.coeff(1);
    if (twice_m % 2 != 0 || twice_m < 0) {
        throw DecodeError("decode: edge count is not a nonnegative integer");
    }
    out.m = twice_m / 2;

    if (n >= 2) {
        // alpha^2 face of C_2 is 2m^2 - m - (1/2) sum d^2.
        const BigInt s2_half = 2 * out.m * out.m - out.m - p.alpha_coeff(2).coeff(2);
        out.sum_d2 = 2 * s2_half;
    }
    if (n >= 3) {
        // Constant term of C_3 is -2t; alpha^3 face recovers sum d^3.
        const BigInt minus_2t = p.alpha_coeff(3).coeff(0);
        if (minus_2t % 2 != 0) {
            throw DecodeError("decode: triangle count is not an integer");
        }
        out.t = -minus_2t / 2;
        const BigInt c3_face = p.alpha_coeff(3).coeff(3);
        out.sum_d3 = -3 * c3_face + 6 * out.t + 6 * out.m * out.m -
                     3 * out.sum_d2 - 4 * out.m * out.m * out.m +
                     3 * out.m * out.sum_d2;
    } else {
        // With fewer than three vertices every degree is at most one, so the
        // cube sum equals the degree sum and there are no triangles.
        out.sum_d3 = 2 * out.m;
    }

    CoeffInputs in{out.n, out.m, out.sum_d2, out.sum_d3, out.t};
    try {
        in.validate();
    } catch (const std::invalid_argument& e) {
        throw DecodeError(std::string("decode: ") + e.what());
    }

    // Substitute back: the first four coefficients must reproduce exactly.
    const FirstFour expect = aalpha_first_four(in);
    const IntPoly* actual[4] = {&p.alpha_coeff(0), nullptr, nullptr, nullptr};
    if (n >= 1) actual[1] = &p.alpha_coeff(1);
    if (n >= 2) actual[2] = &p.alpha_coeff(2);
    if (n >= 3) actual[3] = &p.alpha_coeff(3);
    const IntPoly* expected[4] = {&expect.c0, &expect.c1, &expect.c2,
                                  &expect.c3};
    for (int j = 0; j <= 3 && j <= n; ++j) {
        if (*actual[j] != *expected[j]) {
            throw DecodeError("decode: coefficient C_" + std::to_string(j) +
                              " is inconsistent with the decoded counts");
        }
    }

    out.is_regular = out.n * out.sum_d2 == 4 * out.m * out.m;
    return out;
}

}  // namespace aalpha
