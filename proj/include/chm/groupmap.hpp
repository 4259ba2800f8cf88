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

#ifndef CHM_GROUPMAP_HPP
#define CHM_GROUPMAP_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chm/torus.hpp"

namespace chm {

/// Formal symbol a^i b^j as its exponent pair.
using Symbol = LaurentPoly::Exponent;

/// "1", "a", "conj(a)", "a^2", "conj(a)^2", "b", "conj(b)", "a*conj(b)", "b*conj(a)".
std::string symbol_string(const Symbol& s);
/// Accepts symbol_string output and the short forms 1, a, abar, a2, a2bar,
/// b, bbar, abbar, babar.
Symbol parse_symbol(const std::string& text);

/// A symbol or product outside the residue table.
struct UndefinedResidue : std::domain_error {
    using std::domain_error::domain_error;
};

struct GroupMap {
    int modulus = 5;
    std::map<Symbol, int> table;
    /// inverse[r] is the symbol reported for residue r.
    std::vector<Symbol> inverse;

    int operator()(const Symbol& s) const;
    /// f(x * y); throws UndefinedResidue when the product leaves the table.
    int product(const Symbol& x, const Symbol& y) const;
};

/// f(1)=0, f(a)=1, f(conj a)=4, f(a^2)=2, f(conj a^2)=3; inverse [1, a, a^2, conj a^2, conj a].
const GroupMap& z5_map();
/// f(1)=0, f(a)=1, f(conj a)=6, f(b)=5, f(conj b)=2, f(a conj b)=3, f(b conj a)=4.
const GroupMap& z7_map();
/// modulus 5 or 7.
const GroupMap& group_map(int modulus);

using ResidueRow = std::vector<int>;

ResidueRow residue_map(const GroupMap& map, const std::vector<Symbol>& row);
std::vector<Symbol> inverse_map(const GroupMap& map, const ResidueRow& row);

struct ResidueProduct {
    /// (x_i - y_i) mod m, componentwise.
    ResidueRow residues;
    /// Sorted residues.
    ResidueRow multiset;
    /// Integer sum of x_i - y_i.
    int raw_sum = 0;
    /// raw_sum mod m.
    int sum = 0;
};

ResidueProduct residue_inner_product(int modulus, const ResidueRow& x, const ResidueRow& y);

/// Sum of n_i * f(slot_i) over a count array: Z5 for CONJ, Z7 for GENERIC.
int f_image_sum(const CountArray& array);

/// GENERIC arrays whose Z7-weighted sum is divisible by 7, in input order.
std::vector<CountArray> z7_sum_filter(const std::vector<CountArray>& arrays);

struct CompletionProblem {
    int modulus = 5;
    std::vector<ResidueRow> fixed;
    /// Admissible inner-product multisets, each sorted.
    std::vector<ResidueRow> target;
    /// Multisets a new row may be a permutation of; empty means target.
    std::vector<ResidueRow> row_shapes;
};

struct CompletionViolation {
    ResidueRow candidate;
    /// Index into fixed.
    int fixed_row = 0;
    ResidueRow multiset;
};

struct CompletionResult {
    /// All admissible rows, lexicographic.
    std::vector<ResidueRow> rows;
    /// Orbits of rows under the column transpositions that fix every fixed row,
    /// each sorted with its lexicographic minimum first.
    std::vector<std::vector<ResidueRow>> orbits;
    /// Column pairs (0-based) swapped by those transpositions.
    std::vector<std::pair<int, int>> column_swaps;
    std::uint64_t candidates = 0;
    /// eliminated[k]: candidates whose first violated constraint is fixed row k.
    std::vector<std::uint64_t> eliminated;
    /// Set when rows is empty: the first candidate's first violated constraint.
    std::optional<CompletionViolation> certificate;

    bool contradiction() const { return rows.empty(); }
};

CompletionResult complete_rows(const CompletionProblem& problem);

struct PairVerdict {
    int first = 0;
    int second = 0;
    ResidueRow multiset;
    bool admissible = false;
};

struct PairwiseResult {
    std::vector<PairVerdict> pairs;

    /// No two rows are mutually admissible.
    bool contradiction() const;
};

/// Checks every pair of distinct rows against the target family.
PairwiseResult pairwise_admissibility(int modulus, const std::vector<ResidueRow>& rows, const std::vector<ResidueRow>& target);

/// 2-coloring of the edges of K_n; colors[k] follows edge_index.
struct EdgeColoring {
    int n = 0;
    std::vector<int> colors;

    /// Edge {i, j}, 1 <= i < j <= n, in the order (1,2), (1,3), ..., (n-1,n).
    static int edge_index(int n, int i, int j);
    int color(int i, int j) const;
    std::string to_string() const;
};

/// Lexicographically first monochromatic triangle, 1-based.
std::optional<std::array<int, 3>> monochromatic_triangle(const EdgeColoring& coloring);

/// Outward-pointing coloring of a matrix over {1, a, b}: edge (i, j), i < j,
/// gets color 0 when row i times conj(row j) has count array `reference` or is
/// self-conjugate, and color 1 for the conjugate array. Throws
/// std::domain_error for any other array.
EdgeColoring outward_pointing_coloring(const std::vector<std::vector<Symbol>>& rows, const CountArray& reference);

/// Count array of row x times conj(row y) over the GENERIC slots.
CountArray generic_row_product(const std::vector<Symbol>& x, const std::vector<Symbol>& y);

inline constexpr int kMaxRamseyVertices = 8;

struct RamseyResult {
    int n = 0;
    /// Every coloring has a monochromatic triangle.
    bool holds = false;
    std::uint64_t colorings = 0;
    /// Lowest-index coloring without one, when holds is false.
    std::optional<EdgeColoring> counterexample;
};

/// Exhaustive over all 2^(n(n-1)/2) colorings; n in [3, 8].
RamseyResult ramsey_check(int n, int threads = 0);

struct PigeonholeResult {
    std::pair<std::string, std::string> pair;
    int count = 0;
    /// 1-based matrix rows (items are rows 2..6) carrying the pair.
    std::vector<int> rows;
    /// The pair repeated on three rows: a rank-one 3x2 block.
    std::array<std::pair<std::string, std::string>, 3> witness;
};

/// Items are column pairs from {[a, b], [b, a]} for rows 2..6; exactly five.
PigeonholeResult pigeonhole_pair_check(const std::vector<std::pair<std::string, std::string>>& items);

}  // namespace chm

#endif  // CHM_GROUPMAP_HPP
