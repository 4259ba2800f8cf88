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

#ifndef CHM_EQUIV_HPP
#define CHM_EQUIV_HPP

#include <optional>
#include <vector>

#include "chm/matrix.hpp"

namespace chm {

enum class EquivMode { Complex, PermutationOnly };

/// B = apply_monomials(left, A, right).
struct EquivalenceCertificate {
    Monomial left;
    Monomial right;
    EquivMode mode = EquivMode::Complex;
    /// Set when either input is a float matrix; the verdict is then advisory.
    bool advisory = false;
};

/// Sorted multiset of the 225 quadruple products
/// M[i][j] M[k][l] conj(M[i][l]) conj(M[k][j]) over i<k, j<l. Each product is
/// folded to the smaller of itself and its conjugate, since swapping two rows
/// or two columns conjugates it. Exact values are stored as turns p/q; float
/// values are rounded to 1e-7 of a turn.
struct Fingerprint {
    std::vector<std::pair<std::int64_t, std::int64_t>> turns;
    bool advisory = false;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Matrix6 dephase(const Matrix6& m);
Fingerprint fingerprint(const Matrix6& m);
std::optional<EquivalenceCertificate> complex_equivalent(const Matrix6& a, const Matrix6& b);
std::optional<EquivalenceCertificate> permutation_equivalent(const Matrix6& a, const Matrix6& b);
bool verify_certificate(const Matrix6& a, const Matrix6& b, const EquivalenceCertificate& cert);

}  // namespace chm

#endif  // CHM_EQUIV_HPP
