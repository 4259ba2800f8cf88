// Copyright 2026 The chm6 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHM_CENSUS_HPP
#define CHM_CENSUS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chm/equiv.hpp"

namespace chm {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

/// A finite entry alphabet, sorted by turn.
struct Alphabet {
    std::vector<UnitValue> values;
    /// closure_flags[k]: values * conj(values[k]) stays inside the alphabet.
    std::vector<bool> closure_flags;

    /// Closed under every phase, so dephasing keeps entries in the alphabet.
    bool closed() const;
    std::string to_string() const;
};

/// Validates (2..4 distinct exact values) and sorts.
Alphabet make_alphabet(std::vector<UnitValue> values);

struct CensusOptions {
    std::uint64_t budget = kDefaultBudget;
    /// 0 reads CHM_THREADS, falling back to the hardware concurrency.
    int threads = 0;
    /// Require lexicographically nondecreasing columns.
    bool column_reduction = true;
    /// Fix row 1 and column 1 to ones when the alphabet is closed.
    bool dephase = true;
    /// Group matrices into complex-equivalence classes.
    bool group_classes = true;
};

/// Rows of a matrix under construction, as indices into the alphabet's row table.
using RowPrefix = std::vector<int>;

enum class ClassLabel { S6_0, H1, Other };

struct CensusReport {
    Alphabet alphabet;
    /// Matrices found, in canonical order.
    std::vector<Matrix6> matrices;
    /// class_of[k] indexes representatives.
    std::vector<int> class_of;
    std::vector<Matrix6> representatives;
    /// Filled by classify_census.
    std::vector<ClassLabel> labels;
    std::vector<std::optional<EquivalenceCertificate>> s6_0_certificates;
    std::vector<std::optional<EquivalenceCertificate>> h1_certificates;
    std::vector<std::string> diagnostics;
    std::uint64_t node_count = 0;
    double wall_seconds = 0;
    bool incomplete = false;

    std::size_t raw_count() const { return matrices.size(); }
};

CensusReport enumerate_chms(const Alphabet& alphabet, const CensusOptions& options = {});
/// Labels every representative; throws std::logic_error on an incomplete report.
CensusReport classify_census(const CensusReport& report);

/// Two-row prefixes the parallel search is partitioned by.
std::vector<RowPrefix> two_row_prefixes(const Alphabet& alphabet, const CensusOptions& options = {});
/// Matrices completing one prefix, single-threaded, in canonical order.
std::vector<Matrix6> complete_prefix(const Alphabet& alphabet, const RowPrefix& prefix,
                                     const CensusOptions& options = {});

std::string class_label_string(ClassLabel label);

}  // namespace chm

#endif  // CHM_CENSUS_HPP
