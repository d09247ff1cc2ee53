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
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "aalpha/bipoly.hpp"
#include "aalpha/graph.hpp"
#include "aalpha/ints.hpp"

namespace aalpha {

/// One row of the cospectrality table for a fixed vertex count.
struct CensusReport {
    int n = 0;
    long long graphs = 0;
    long long distinct_polys = 0;
    long long with_mate = 0;
    Rational fraction_with_mate;  // with_mate / graphs, exact
    long long max_family = 1;

    bool operator==(const CensusReport&) const = default;
};

/// A group of >= 2 pairwise non-isomorphic graphs sharing one
/// A_alpha-characteristic polynomial. Members are the input graph6 records,
/// sorted lexicographically.
struct MateFamily {
    BiPoly poly;
    std::vector<std::string> members;
};

struct CensusResult {
    CensusReport report;
    std::vector<MateFamily> families;
};

struct CensusOptions {
    int threads = 1;
    /// Report progress on diag every 100000 records (off by default).
    bool progress = false;
    std::ostream* diag = nullptr;
};

/// Bad census input: a parse failure, mixed vertex counts, duplicate
/// (isomorphic) records, or empty input. line is 1-based, 0 when the error
/// is not tied to a single record.
class CensusError : public std::runtime_error {
public:
    CensusError(long long line, const std::string& message)
        : std::runtime_error(message), line_(line) {}

    long long line() const { return line_; }

private:
    long long line_;
};

/// Groups a stream of same-order graph6 records by exact
/// A_alpha-characteristic polynomial. Fingerprints bucket the candidates;
/// buckets are then re-verified with full canonical encodings, so hash
/// collisions can never merge distinct polynomials. Families are sorted by
/// size descending, then by lexicographic first member, and their members
/// are checked pairwise non-isomorphic (equal records or relabeled
/// duplicates mean corrupt input). The result is independent of record
/// order and of the thread count.
CensusResult run_census(const std::vector<std::string>& records,
                        const CensusOptions& options = {});

/// Reads newline-delimited graph6 records, then runs the census.
CensusResult run_census(std::istream& in, const CensusOptions& options = {});

/// Table row: n, graphs, distinct_polys, with_mate, fraction (9 decimal
/// places), max_family, tab-separated.
std::string to_tsv_row(const CensusReport& report);

/// Report as a JSON object; family list (polynomial rendering + members)
/// included when include_families is set.
std::string to_json(const CensusResult& result, bool include_families);

/// Rounded decimal rendering of a rational in [0, 1] to 9 places.
std::string format_fraction(const Rational& f);

/// All starlike trees on n vertices (one center, >= 3 legs), as specs.
std::vector<FamilySpec> starlike_specs_on(int n);

/// All double starlike trees H(p, len, q) on n vertices (p, q >= 2).
std::vector<FamilySpec> double_starlike_specs_on(int n);

struct MateFreeViolation {
    FamilySpec tree;
    std::size_t family_index;
};

/// Checks that none of the given trees' polynomials appears among the
/// census families; every hit is a violation of the corresponding
/// determined-by-spectrum claim.
std::vector<MateFreeViolation> check_family_mate_free(
    const std::vector<FamilySpec>& trees,
    const std::vector<MateFamily>& families);

}  // namespace aalpha
