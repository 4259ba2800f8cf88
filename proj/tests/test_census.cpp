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

#include "chm/census.hpp"

#include <algorithm>
#include <complex>

#include "gtest/gtest.h"

using namespace chm;

namespace {

const UnitValue kOne;
const UnitValue kMinus = root_of_unity(1, 2);
const UnitValue kI = root_of_unity(1, 4);
const UnitValue kW = root_of_unity(1, 3);
const UnitValue kW2 = root_of_unity(2, 3);

// Independent float clique search: all 6-sets of distinct rows over the
// alphabet that are pairwise orthogonal, with rows in increasing order only.
std::size_t brute_force_count(const std::vector<UnitValue>& alphabet) {
    const int k = static_cast<int>(alphabet.size());
    int total = 1;
    for (int c = 0; c < 6; ++c) total *= k;
    std::vector<std::array<std::complex<double>, 6>> rows(total);
    for (int code = 0; code < total; ++code) {
        int x = code;
        for (int c = 5; c >= 0; --c) {
            rows[code][c] = alphabet[x % k].to_complex();
            x /= k;
        }
    }
    auto orth = [&](int a, int b) {
        std::complex<double> s = 0;
        for (int c = 0; c < 6; ++c) s += rows[a][c] * std::conj(rows[b][c]);
        return std::abs(s) < 1e-9;
    };
    std::size_t count = 0;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int from) -> void {
        if (chosen.size() == 6) {
            ++count;
            return;
        }
        for (int r = from; r < total; ++r) {
            if (!std::all_of(chosen.begin(), chosen.end(), [&](int q) { return orth(q, r); })) continue;
            chosen.push_back(r);
            self(self, r + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

std::vector<std::vector<int>> class_partition(const CensusReport& r) {
    std::vector<std::vector<int>> out(r.representatives.size());
    for (std::size_t k = 0; k < r.matrices.size(); ++k) out[r.class_of[k]].push_back(static_cast<int>(k));
    return out;
}

}  // namespace

TEST(census, alphabet_closure) {
    EXPECT_TRUE(make_alphabet({kOne, kW, kW2}).closed());
    EXPECT_TRUE(make_alphabet({kOne, kMinus, kI, conj(kI)}).closed());
    EXPECT_FALSE(make_alphabet({kOne, kMinus, kI}).closed());
    EXPECT_FALSE(make_alphabet({kOne, kW, neg(kW2)}).closed());
    auto a = make_alphabet({kI, kOne, kMinus});
    EXPECT_EQ(a.values.front(), kOne);
    EXPECT_THROW(make_alphabet({kOne}), std::invalid_argument);
    EXPECT_THROW(make_alphabet({kOne, kOne}), std::invalid_argument);
    EXPECT_THROW(make_alphabet({kOne, UnitValue::from_float(0, 1)}), std::invalid_argument);
}

TEST(census, cube_roots_give_the_tao_class) {
    auto report = classify_census(enumerate_chms(make_alphabet({kOne, kW, kW2})));
    ASSERT_FALSE(report.incomplete);
    ASSERT_FALSE(report.matrices.empty());
    for (const auto& m : report.matrices) ASSERT_TRUE(is_chm(m));
    for (std::size_t k = 0; k < report.representatives.size(); ++k) {
        EXPECT_EQ(report.labels[k], ClassLabel::S6_0);
        ASSERT_TRUE(report.s6_0_certificates[k]);
        EXPECT_TRUE(verify_certificate(report.representatives[k], catalog(CatalogName::S6_0), *report.s6_0_certificates[k]));
    }
    EXPECT_EQ(report.representatives.size(), 1u);
    EXPECT_TRUE(report.diagnostics.empty());
}

TEST(census, one_minus_one_i_gives_h1) {
    auto report = classify_census(enumerate_chms(make_alphabet({kOne, kMinus, kI})));
    ASSERT_FALSE(report.incomplete);
    ASSERT_FALSE(report.matrices.empty());
    for (std::size_t k = 0; k < report.representatives.size(); ++k) EXPECT_EQ(report.labels[k], ClassLabel::H1);
}

TEST(census, mixed_sign_cube_roots_are_empty) {
    auto report = enumerate_chms(make_alphabet({kOne, kW, neg(kW2)}));
    ASSERT_FALSE(report.incomplete);
    EXPECT_TRUE(report.matrices.empty());
}

TEST(census, real_alphabet_has_no_order_six_hadamard) {
    auto report = classify_census(enumerate_chms(make_alphabet({kOne, kMinus})));
    ASSERT_FALSE(report.incomplete);
    EXPECT_TRUE(report.matrices.empty());
    EXPECT_TRUE(report.labels.empty());
}

TEST(census, budget_exhaustion_is_reported) {
    CensusOptions opts;
    opts.budget = 100;
    auto report = enumerate_chms(make_alphabet({kOne, kMinus, kI}), opts);
    EXPECT_TRUE(report.incomplete);
    EXPECT_THROW(classify_census(report), std::logic_error);
}

TEST(census_property, no_column_reduction_gives_the_same_classes) {
    const std::vector<std::vector<UnitValue>> alphabets{
        {kOne, kW, kW2}, {kOne, kMinus, kI}, {kOne, kMinus, kI, conj(kI)}};
    for (const auto& values : alphabets) {
        auto alphabet = make_alphabet(values);
        auto reduced = enumerate_chms(alphabet);
        CensusOptions full;
        full.column_reduction = false;
        auto unreduced = enumerate_chms(alphabet, full);
        EXPECT_GT(unreduced.matrices.size(), reduced.matrices.size());
        EXPECT_EQ(unreduced.representatives.size(), reduced.representatives.size());
        for (const auto& rep : unreduced.representatives) {
            bool hit = false;
            for (const auto& other : reduced.representatives) hit = hit || complex_equivalent(rep, other).has_value();
            EXPECT_TRUE(hit) << alphabet.to_string();
        }
    }
}

TEST(census_property, row_increasing_count_matches_float_clique_search) {
    CensusOptions opts;
    opts.column_reduction = false;
    opts.dephase = false;
    opts.group_classes = false;
    for (const auto& values : {std::vector<UnitValue>{kOne, kW, kW2}, std::vector<UnitValue>{kOne, kW, neg(kW2)}}) {
        auto report = enumerate_chms(make_alphabet(values), opts);
        EXPECT_EQ(report.matrices.size(), brute_force_count(values));
    }
}

TEST(census_property, deterministic_across_thread_counts) {
    auto alphabet = make_alphabet({kOne, kMinus, kI});
    CensusOptions one;
    one.threads = 1;
    CensusOptions many;
    many.threads = 7;
    auto a = enumerate_chms(alphabet, one);
    auto b = enumerate_chms(alphabet, many);
    EXPECT_EQ(a.matrices, b.matrices);
    EXPECT_EQ(a.class_of, b.class_of);
    EXPECT_EQ(a.representatives, b.representatives);
}

TEST(census_property, prefix_partition_covers_the_search) {
    auto alphabet = make_alphabet({kOne, kW, kW2});
    CensusOptions opts;
    opts.threads = 1;
    std::vector<Matrix6> merged;
    for (const auto& p : two_row_prefixes(alphabet, opts)) {
        auto part = complete_prefix(alphabet, p, opts);
        merged.insert(merged.end(), part.begin(), part.end());
    }
    EXPECT_EQ(merged, enumerate_chms(alphabet, opts).matrices);
}

TEST(census_property, classes_partition_the_matrices) {
    auto report = enumerate_chms(make_alphabet({kOne, kMinus, kI}));
    auto parts = class_partition(report);
    std::size_t total = 0;
    for (std::size_t c = 0; c < parts.size(); ++c) {
        ASSERT_FALSE(parts[c].empty());
        total += parts[c].size();
        for (int k : parts[c]) EXPECT_TRUE(complex_equivalent(report.representatives[c], report.matrices[k]));
    }
    EXPECT_EQ(total, report.matrices.size());
}
