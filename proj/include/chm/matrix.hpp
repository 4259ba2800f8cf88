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

#ifndef CHM_MATRIX_HPP
#define CHM_MATRIX_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "chm/exactnum.hpp"

namespace chm {

inline constexpr int kN = 6;

enum class Mode { Exact, Float };

/// A 6x6 matrix of unimodular entries. Mixing exact and float entries
/// converts every entry to float.
class Matrix6 {
 public:
    using Rows = std::array<std::array<UnitValue, kN>, kN>;

    /// The all-ones matrix.
    Matrix6() = default;
    explicit Matrix6(const Rows& rows);

    const UnitValue& operator()(int r, int c) const { return e_[r][c]; }
    const Rows& rows() const { return e_; }
    Mode mode() const { return mode_; }
    bool is_exact() const { return mode_ == Mode::Exact; }

    friend bool operator==(const Matrix6& a, const Matrix6& b) { return a.e_ == b.e_; }

    std::string to_string() const;

 private:
    Rows e_{};
    Mode mode_ = Mode::Exact;
};

/// A row permutation/column permutation with per-line phases. Applied to A
/// as (L A R)[i][j] = left.phase[i] * A[left.perm[i]][right.perm[j]] * right.phase[j].
struct Monomial {
    std::array<int, kN> perm{0, 1, 2, 3, 4, 5};
    std::array<UnitValue, kN> phase{};
};

Matrix6 apply_monomials(const Monomial& left, const Matrix6& a, const Monomial& right);

enum class WitnessKind { Rank1_2x3, Hadamard3x3, Pattern1oo2 };

/// Scan result. Indices are 1-based and sorted.
struct ScanWitness {
    WitnessKind kind;
    std::vector<int> rows;
    std::vector<int> cols;
    friend bool operator==(const ScanWitness&, const ScanWitness&) = default;
};

/// Row and column pairings (1-based) for which all nine 2x2 blocks are
/// Hadamard. block_core[r][c] is the dephased corner b11 conj(b12) conj(b21) b22
/// of block (r, c), which equals -1 for every Hadamard block.
struct H2Certificate {
    std::array<std::array<int, 2>, 3> row_pairs;
    std::array<std::array<int, 2>, 3> col_pairs;
    std::array<std::array<UnitValue, 3>, 3> block_core;
};

enum class MubVerdict { ExcludedBy3x3, NoVerdict };

bool is_chm(const Matrix6& m);
/// Sum over c of m(i,c) conj(m(j,c)); exact mode only. Indices are 0-based.
CycSum row_inner_product(const Matrix6& m, int i, int j);
std::complex<double> row_inner_product_float(const Matrix6& m, int i, int j);
std::vector<UnitValue> distinct_elements(const Matrix6& m);
std::array<int, kN> element_row_profile(const Matrix6& m, const UnitValue& v);
Matrix6 scale_matrix(const Matrix6& m, const UnitValue& s);
Matrix6 transpose(const Matrix6& m);
Matrix6 conj(const Matrix6& m);

std::optional<ScanWitness> find_rank1_2x3(const Matrix6& m);
std::optional<ScanWitness> find_3x3_hadamard_submatrix(const Matrix6& m);
std::optional<ScanWitness> find_pattern_1oo2(const Matrix6& m);
std::optional<H2Certificate> h2_reducible(const Matrix6& m);
MubVerdict mub_obstruction(const Matrix6& m);

/// Re-checks a witness against its defining predicate.
bool verify_witness(const Matrix6& m, const ScanWitness& w);
bool verify_h2_certificate(const Matrix6& m, const H2Certificate& cert);

/// The 15 perfect matchings of {0..5}, in lexicographic order.
const std::vector<std::array<std::array<int, 2>, 3>>& pair_partitions();

enum class CatalogName { S6_0, S6_1, H1, HAB, F6 };

Matrix6 catalog(CatalogName name, const UnitValue& alpha = UnitValue(), const UnitValue& beta = UnitValue());
CatalogName parse_catalog_name(const std::string& name);
std::string catalog_name_string(CatalogName name);

}  // namespace chm

#endif  // CHM_MATRIX_HPP
