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

#include "chm/groupmap.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"

using namespace chm;

namespace {

const ResidueRow kZeros(6, 0);

std::vector<Symbol> symbols(std::initializer_list<const char*> names) {
    std::vector<Symbol> out;
    for (const char* n : names) out.push_back(parse_symbol(n));
    return out;
}

ResidueRow negated(const ResidueRow& r, int m) {
    ResidueRow out;
    for (int v : r) out.push_back((m - v) % m);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<ResidueRow> as_set(const std::vector<ResidueRow>& rows) { return {rows.begin(), rows.end()}; }

// Triangle-free test by plain adjacency, independent of the library's search.
bool has_mono_triangle(int n, const std::vector<std::vector<int>>& adj) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (adj[i][j] == adj[i][k] && adj[i][j] == adj[j][k]) return true;
    return false;
}

std::vector<std::vector<int>> adjacency(const EdgeColoring& c) {
    std::vector<std::vector<int>> adj(c.n, std::vector<int>(c.n, -1));
    for (int i = 1; i <= c.n; ++i)
        for (int j = i + 1; j <= c.n; ++j) adj[i - 1][j - 1] = adj[j - 1][i - 1] = c.color(i, j);
    return adj;
}

}  // namespace

TEST(groupmap, residue_map_examples) {
    EXPECT_EQ(residue_map(z5_map(), symbols({"1", "a", "conj(a)", "a^2", "conj(a)^2", "1"})), (ResidueRow{0, 1, 4, 2, 3, 0}));
    EXPECT_EQ(residue_map(z7_map(), symbols({"1", "a", "conj(a)", "b", "conj(b)", "a*conj(b)"})), (ResidueRow{0, 1, 6, 5, 2, 3}));
    EXPECT_EQ(residue_map(z5_map(), symbols({"1", "1", "1", "1", "1", "1"})), kZeros);
    EXPECT_THROW(residue_map(z5_map(), symbols({"b"})), UndefinedResidue);
    EXPECT_THROW(z5_map().product(parse_symbol("a"), parse_symbol("a^2")), UndefinedResidue);
    EXPECT_THROW(z5_map().product(parse_symbol("abar"), parse_symbol("a2bar")), UndefinedResidue);
    EXPECT_EQ(z5_map().product(parse_symbol("a"), parse_symbol("a")), 2);
    EXPECT_THROW(group_map(6), std::invalid_argument);
    EXPECT_THROW(parse_symbol("c"), std::invalid_argument);
}

TEST(groupmap, inverse_convention) {
    EXPECT_EQ(inverse_map(z5_map(), {0, 1, 2, 3, 4}), symbols({"1", "a", "a^2", "conj(a)^2", "conj(a)"}));
    for (int m : {5, 7}) {
        const GroupMap& f = group_map(m);
        for (int r = 0; r < m; ++r) EXPECT_EQ(f(f.inverse[r]), r);
    }
}

TEST(groupmap_property, conjugation_negates_residue) {
    for (int m : {5, 7}) {
        const GroupMap& f = group_map(m);
        for (const auto& [s, r] : f.table) {
            const Symbol c{-s[0], -s[1]};
            EXPECT_EQ(f(c), r == 0 ? 0 : m - r) << symbol_string(s);
        }
    }
}

TEST(groupmap_property, map_is_additive_on_defined_products) {
    for (int m : {5, 7}) {
        const GroupMap& f = group_map(m);
        int defined = 0;
        for (const auto& [x, fx] : f.table) {
            for (const auto& [y, fy] : f.table) {
                const Symbol yc{-y[0], -y[1]};
                try {
                    EXPECT_EQ(f.product(x, yc), ((fx - fy) % m + m) % m) << symbol_string(x) << " " << symbol_string(y);
                    ++defined;
                } catch (const UndefinedResidue&) {
                }
            }
        }
        EXPECT_GE(defined, m == 5 ? 17 : 31);
    }
}

TEST(groupmap, residue_inner_product_examples) {
    auto p = residue_inner_product(5, {1, 2, 2, 3, 3, 4}, kZeros);
    EXPECT_EQ(p.raw_sum, 15);
    EXPECT_EQ(p.sum, 0);
    auto q = residue_inner_product(7, {0, 1, 2, 2, 3, 6}, {0, 1, 2, 2, 3, 6});
    EXPECT_EQ(q.multiset, kZeros);
    auto r = residue_inner_product(5, {1, 0, 0, 0, 0, 0}, {4, 0, 0, 0, 0, 0});
    EXPECT_EQ(r.residues[0], 2);
}

TEST(groupmap_property, equal_sum_rows_have_zero_difference_sum) {
    std::mt19937 rng(5);
    for (int m : {5, 7}) {
        int checked = 0;
        while (checked < 10000) {
            ResidueRow x(6), y(6);
            for (auto& v : x) v = static_cast<int>(rng() % m);
            for (auto& v : y) v = static_cast<int>(rng() % m);
            if (std::accumulate(x.begin(), x.end(), 0) % m != std::accumulate(y.begin(), y.end(), 0) % m) continue;
            EXPECT_EQ(residue_inner_product(m, x, y).sum, 0);
            ++checked;
        }
    }
}

TEST(groupmap, f_image_sums) {
    // CONJ slots map to 0, 1, 4, 2, 3.
    const std::vector<std::vector<int>> eqs{{0, 1, 1, 2, 2}, {0, 2, 2, 1, 1}, {1, 2, 1, 2, 0}, {1, 2, 1, 0, 2}};
    std::vector<int> direct;
    std::vector<int> conjugated;
    for (const auto& n : eqs) {
        direct.push_back(f_image_sum(make_count_array(Structure::CONJ, n)));
        conjugated.push_back(f_image_sum(conjugate(make_count_array(Structure::CONJ, n))));
    }
    EXPECT_EQ(direct, (std::vector<int>{15, 15, 10, 12}));
    EXPECT_EQ(conjugated, (std::vector<int>{15, 15, 15, 13}));
    EXPECT_EQ(f_image_sum(make_count_array(Structure::GENERIC, {0, 1, 1, 1, 1, 1, 1})), 21);
    EXPECT_THROW(f_image_sum(make_count_array(Structure::REAL1, {2, 2, 1, 0, 1, 0})), std::invalid_argument);
}

TEST(groupmap, z7_sum_filter_examples) {
    std::vector<CountArray> n1, rest;
    for (const auto& [tag, a] : tagged_arrays(Structure::GENERIC)) (tag.rfind("N.1.", 0) == 0 ? n1 : rest).push_back(a);
    ASSERT_EQ(n1.size(), 6u);
    ASSERT_EQ(rest.size(), 25u);
    std::vector<std::vector<int>> got;
    for (const auto& a : z7_sum_filter(rest)) got.push_back(a.n);
    EXPECT_EQ(got, (std::vector<std::vector<int>>{{1, 1, 1, 0, 2, 1, 0}, {1, 1, 0, 1, 1, 2, 0}, {1, 2, 0, 1, 0, 1, 1}, {0, 1, 1, 1, 1, 1, 1}}));
    EXPECT_EQ(z7_sum_filter(n1).size(), 6u);
    EXPECT_TRUE(z7_sum_filter({}).empty());
    // Over the CONJ alphabet the N.1-style self-conjugate arrays have sums divisible by 5.
    for (const auto& n : std::vector<std::vector<int>>{{0, 1, 1, 2, 2}, {0, 2, 2, 1, 1}})
        EXPECT_EQ(f_image_sum(make_count_array(Structure::CONJ, n)) % 5, 0);
}

TEST(groupmap, mod5_completions) {
    const ResidueRow x{1, 2, 2, 3, 3, 4};
    auto r = complete_rows({5, {kZeros, x}, {x}, {}});
    ASSERT_EQ(r.orbits.size(), 1u);
    EXPECT_TRUE(std::count(r.rows.begin(), r.rows.end(), ResidueRow{3, 4, 3, 2, 1, 2}));
    EXPECT_EQ(r.rows.size(), 4u);
    EXPECT_EQ(r.column_swaps, (std::vector<std::pair<int, int>>{{1, 2}, {3, 4}}));
    for (const auto& row : r.rows) {
        auto fourth = complete_rows({5, {kZeros, x, row}, {x}, {}});
        EXPECT_TRUE(fourth.contradiction());
        ASSERT_TRUE(fourth.certificate);
        const auto& v = *fourth.certificate;
        const std::vector<ResidueRow> fixed{kZeros, x, row};
        EXPECT_EQ(residue_inner_product(5, fixed[v.fixed_row], v.candidate).multiset, v.multiset);
        EXPECT_NE(v.multiset, x);
        EXPECT_GT(fourth.eliminated[2], 0u);
        EXPECT_EQ(std::accumulate(fourth.eliminated.begin(), fourth.eliminated.end(), std::uint64_t{0}), fourth.candidates);
    }

    const ResidueRow y{1, 1, 2, 3, 4, 4};
    auto s = complete_rows({5, {kZeros, y}, {y}, {}});
    ASSERT_EQ(s.orbits.size(), 1u);
    EXPECT_EQ(s.column_swaps, (std::vector<std::pair<int, int>>{{0, 1}, {4, 5}}));
    EXPECT_TRUE(pairwise_admissibility(5, s.rows, {y}).contradiction());
    for (const auto& row : s.rows) EXPECT_TRUE(complete_rows({5, {kZeros, y, row}, {y}, {}}).contradiction());
}

TEST(groupmap, mod7_completions) {
    struct Case {
        ResidueRow row;
        std::vector<ResidueRow> listed;
        std::pair<int, int> swap;
    };
    const std::vector<Case> cases{
        {{0, 1, 2, 2, 3, 6}, {{2, 0, 2, 3, 6, 1}, {6, 2, 2, 0, 1, 3}, {1, 6, 2, 0, 2, 3}}, {2, 3}},
        {{0, 1, 2, 3, 3, 5}, {{3, 2, 5, 3, 1, 0}, {3, 2, 0, 5, 3, 1}, {2, 5, 1, 0, 3, 3}, {5, 3, 1, 0, 3, 2}}, {3, 4}},
        {{0, 1, 1, 3, 4, 5}, {{1, 4, 1, 0, 5, 3}, {1, 5, 1, 4, 0, 3}, {3, 0, 1, 5, 1, 4}, {4, 0, 1, 5, 3, 1}}, {1, 2}},
    };
    for (const auto& c : cases) {
        const std::vector<ResidueRow> target{c.row, negated(c.row, 7)};
        auto r = complete_rows({7, {kZeros, c.row}, target, {c.row}});
        EXPECT_EQ(r.column_swaps, (std::vector<std::pair<int, int>>{c.swap}));
        // Every listed row and its swapped version is a completion.
        std::set<ResidueRow> listed_orbits;
        for (auto row : c.listed) {
            listed_orbits.insert(row);
            EXPECT_TRUE(std::count(r.rows.begin(), r.rows.end(), row)) << c.row[5];
            std::swap(row[c.swap.first], row[c.swap.second]);
            listed_orbits.insert(row);
            EXPECT_TRUE(std::count(r.rows.begin(), r.rows.end(), row));
        }
        EXPECT_TRUE(pairwise_admissibility(7, r.rows, target).contradiction());
        if (c.row == ResidueRow{0, 1, 2, 2, 3, 6}) {
            // One further orbit beyond the three listed.
            EXPECT_EQ(r.orbits.size(), 4u);
            std::set<ResidueRow> extra;
            for (const auto& row : r.rows)
                if (!listed_orbits.count(row)) extra.insert(row);
            EXPECT_EQ(extra, (std::set<ResidueRow>{{2, 3, 1, 2, 6, 0}, {2, 3, 2, 1, 6, 0}}));
        } else {
            EXPECT_EQ(as_set(r.rows), listed_orbits);
        }
    }
}

TEST(groupmap_property, completions_reverify) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = trial % 2 ? 7 : 5;
        ResidueRow x(6);
        for (auto& v : x) v = static_cast<int>(rng() % m);
        std::sort(x.begin(), x.end());
        const std::vector<ResidueRow> target{x, negated(x, m)};
        ResidueRow start = x;
        std::shuffle(start.begin(), start.end(), rng);
        auto r = complete_rows({m, {kZeros, start}, target, {}});
        for (const auto& row : r.rows) {
            EXPECT_TRUE(std::count(target.begin(), target.end(), residue_inner_product(m, kZeros, row).multiset));
            EXPECT_TRUE(std::count(target.begin(), target.end(), residue_inner_product(m, start, row).multiset));
        }
        std::size_t members = 0;
        for (const auto& o : r.orbits) {
            members += o.size();
            EXPECT_TRUE(std::is_sorted(o.begin(), o.end()));
        }
        EXPECT_EQ(members, r.rows.size());
    }
}

TEST(groupmap, ramsey) {
    auto six = ramsey_check(6);
    EXPECT_TRUE(six.holds);
    EXPECT_EQ(six.colorings, 32768u);
    auto five = ramsey_check(5);
    ASSERT_FALSE(five.holds);
    ASSERT_TRUE(five.counterexample);
    auto adj = adjacency(*five.counterexample);
    EXPECT_FALSE(has_mono_triangle(5, adj));
    // The only triangle-free 2-coloring of K5 is a pentagon and its complement.
    for (int v = 0; v < 5; ++v) EXPECT_EQ(std::count(adj[v].begin(), adj[v].end(), 1), 2);
    EXPECT_THROW(ramsey_check(9), std::invalid_argument);
    EXPECT_THROW(ramsey_check(2), std::invalid_argument);
}

TEST(groupmap, ramsey_matches_independent_enumeration) {
    for (int n : {3, 4, 5, 6}) {
        const int e = n * (n - 1) / 2;
        bool all_mono = true;
        for (int c = 0; c < (1 << e) && all_mono; ++c) {
            std::vector<std::vector<int>> adj(n, std::vector<int>(n, -1));
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit) adj[i][j] = adj[j][i] = (c >> bit) & 1;
            all_mono = has_mono_triangle(n, adj);
        }
        EXPECT_EQ(ramsey_check(n).holds, all_mono) << n;
    }
}

TEST(groupmap, monochromatic_triangle_of_constant_coloring) {
    EdgeColoring c{6, std::vector<int>(15, 1)};
    EXPECT_EQ(monochromatic_triangle(c), (std::array<int, 3>{1, 2, 3}));
    EXPECT_EQ(EdgeColoring::edge_index(6, 1, 2), 0);
    EXPECT_EQ(EdgeColoring::edge_index(6, 5, 6), 14);
    EXPECT_EQ(EdgeColoring::edge_index(6, 3, 2), EdgeColoring::edge_index(6, 2, 3));
}

TEST(groupmap_property, ramsey_triangle_stable_under_relabeling) {
    std::mt19937 rng(13);
    std::vector<int> perm(6);
    for (int trial = 0; trial < 100; ++trial) {
        EdgeColoring c{6, {}};
        for (int e = 0; e < 15; ++e) c.colors.push_back(static_cast<int>(rng() & 1));
        auto t = monochromatic_triangle(c);
        ASSERT_TRUE(t);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        EdgeColoring d{6, std::vector<int>(15)};
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) d.colors[EdgeColoring::edge_index(6, perm[i - 1], perm[j - 1])] = c.color(i, j);
        auto u = monochromatic_triangle(d);
        ASSERT_TRUE(u);
        // The relabeled triangle is monochromatic in the relabeled coloring.
        const int col = c.color((*t)[0], (*t)[1]);
        EXPECT_EQ(d.color(perm[(*t)[0] - 1], perm[(*t)[1] - 1]), col);
        EXPECT_EQ(d.color(perm[(*t)[0] - 1], perm[(*t)[2] - 1]), col);
        EXPECT_EQ(d.color(perm[(*t)[1] - 1], perm[(*t)[2] - 1]), col);
    }
}

TEST(groupmap, outward_pointing_coloring) {
    // Rows over {1, a, b}; row i times conj(row j) for i < j.
    const std::vector<std::vector<Symbol>> rows{symbols({"1", "1", "a", "a", "b", "b"}), symbols({"a", "b", "1", "b", "1", "a"}),
                                                symbols({"b", "a", "b", "1", "a", "1"})};
    const CountArray p12 = generic_row_product(rows[0], rows[1]);
    EXPECT_EQ(p12.n, (std::vector<int>{0, 1, 1, 1, 1, 1, 1}));
    auto c = outward_pointing_coloring(rows, p12);
    EXPECT_EQ(c.colors, (std::vector<int>{0, 0, 0}));
    EXPECT_THROW(generic_row_product(symbols({"a^2"}), symbols({"1"})), UndefinedResidue);
    const std::vector<std::vector<Symbol>> pair{symbols({"1", "1", "1", "1", "1", "1"}), symbols({"1", "a", "a", "1", "a", "b"})};
    const CountArray q = generic_row_product(pair[0], pair[1]);
    EXPECT_EQ(outward_pointing_coloring(pair, q).colors, (std::vector<int>{0}));
    EXPECT_EQ(outward_pointing_coloring(pair, conjugate(q)).colors, (std::vector<int>{1}));
    EXPECT_THROW(outward_pointing_coloring(pair, make_count_array(Structure::GENERIC, {6, 0, 0, 0, 0, 0, 0})), std::domain_error);
}

TEST(groupmap, pigeonhole) {
    const std::pair<std::string, std::string> ab{"a", "b"}, ba{"b", "a"};
    auto r = pigeonhole_pair_check({ab, ab, ba, ab, ba});
    EXPECT_EQ(r.pair, ab);
    EXPECT_EQ(r.count, 3);
    EXPECT_EQ(r.rows, (std::vector<int>{2, 3, 5}));
    for (const auto& w : r.witness) EXPECT_EQ(w, ab);
    auto s = pigeonhole_pair_check({ba, ba, ba, ba, ba});
    EXPECT_EQ(s.pair, ba);
    EXPECT_EQ(s.count, 5);
    EXPECT_THROW(pigeonhole_pair_check({ab, ab, ab, ab}), std::invalid_argument);
    EXPECT_THROW(pigeonhole_pair_check({ab, ab, ab, ab, {"a", "a"}}), std::domain_error);
    for (int mask = 0; mask < 32; ++mask) {
        std::vector<std::pair<std::string, std::string>> items;
        for (int k = 0; k < 5; ++k) items.push_back((mask >> k) & 1 ? ba : ab);
        EXPECT_GE(pigeonhole_pair_check(items).count, 3);
    }
}
