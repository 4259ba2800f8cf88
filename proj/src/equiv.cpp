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

#include "chm/equiv.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace chm {

namespace {

// Normalizes row r and column c to ones.
Matrix6 dephase_at(const Matrix6& m, int r, int c) {
    Matrix6::Rows out;
    const UnitValue corner = m(r, c);
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) out[i][j] = m(i, j) * conj(m(i, c)) * conj(m(r, j)) * corner;
    return Matrix6(out);
}

bool turn_less(const std::pair<std::int64_t, std::int64_t>& x, const std::pair<std::int64_t, std::int64_t>& y) {
    return static_cast<__int128>(x.first) * y.second < static_cast<__int128>(y.first) * x.second;
}

std::pair<std::int64_t, std::int64_t> folded_turn(const UnitValue& v) {
    if (v.is_exact()) {
        std::int64_t p = v.num();
        std::int64_t q = v.den();
        return {std::min(p, p == 0 ? 0 : q - p), q};
    }
    constexpr std::int64_t kScale = 10'000'000;
    auto t = static_cast<std::int64_t>(std::llround(v.turn() * kScale)) % kScale;
    return {std::min(t, t == 0 ? 0 : kScale - t), kScale};
}

// Finds sigma with a[sigma[i]][tau[j]] == b[i][j]; rows are matched greedily,
// which is exact for matrices with pairwise distinct rows or identical duplicates.
bool match_rows(const Matrix6& a, const Matrix6& b, const std::array<int, kN>& tau, std::array<int, kN>& sigma,
                int forced_first) {
    std::array<bool, kN> used{};
    for (int i = 0; i < kN; ++i) {
        int found = -1;
        for (int s = 0; s < kN && found < 0; ++s) {
            if (used[s] || (i == 0 && forced_first >= 0 && s != forced_first)) continue;
            bool ok = true;
            for (int j = 0; j < kN && ok; ++j) ok = a(s, tau[j]) == b(i, j);
            if (ok) found = s;
        }
        if (found < 0) return false;
        used[found] = true;
        sigma[i] = found;
    }
    return true;
}

std::vector<std::pair<std::int64_t, std::int64_t>> column_signature(const Matrix6& m, int c) {
    std::vector<std::pair<std::int64_t, std::int64_t>> sig;
    for (int r = 0; r < kN; ++r) sig.emplace_back(m(r, c).num(), m(r, c).den());
    std::sort(sig.begin(), sig.end());
    return sig;
}

}  // namespace

Matrix6 dephase(const Matrix6& m) {
    if (!is_chm(m)) throw std::domain_error("dephase: input is not a complex Hadamard matrix");
    return dephase_at(m, 0, 0);
}

Fingerprint fingerprint(const Matrix6& m) {
    Fingerprint fp;
    fp.advisory = !m.is_exact();
    for (int i = 0; i < kN; ++i)
        for (int k = i + 1; k < kN; ++k)
            for (int j = 0; j < kN; ++j)
                for (int l = j + 1; l < kN; ++l)
                    fp.turns.push_back(folded_turn(m(i, j) * m(k, l) * conj(m(i, l)) * conj(m(k, j))));
    std::sort(fp.turns.begin(), fp.turns.end(), turn_less);
    return fp;
}

bool verify_certificate(const Matrix6& a, const Matrix6& b, const EquivalenceCertificate& cert) {
    for (const auto* mono : {&cert.left, &cert.right}) {
        std::array<int, kN> p = mono->perm;
        std::sort(p.begin(), p.end());
        for (int k = 0; k < kN; ++k) {
            if (p[k] != k) return false;
        }
        if (cert.mode == EquivMode::PermutationOnly) {
            for (const auto& ph : mono->phase) {
                if (!(ph == UnitValue())) return false;
            }
        }
    }
    return apply_monomials(cert.left, a, cert.right) == b;
}

std::optional<EquivalenceCertificate> complex_equivalent(const Matrix6& a, const Matrix6& b) {
    const bool exact = a.is_exact() && b.is_exact();
    if (exact && fingerprint(a) != fingerprint(b)) return std::nullopt;

    const Matrix6 bd = dephase_at(b, 0, 0);
    const UnitValue b00 = b(0, 0);
    for (int r = 0; r < kN; ++r) {
        for (int c = 0; c < kN; ++c) {
            const Matrix6 ad = dephase_at(a, r, c);
            std::array<int, kN - 1> rest;
            for (int k = 0, t = 0; k < kN; ++k) {
                if (k != c) rest[t++] = k;
            }
            do {
                std::array<int, kN> tau{c, rest[0], rest[1], rest[2], rest[3], rest[4]};
                std::array<int, kN> sigma{};
                if (!match_rows(ad, bd, tau, sigma, r)) continue;
                EquivalenceCertificate cert;
                cert.advisory = !exact;
                cert.left.perm = sigma;
                cert.right.perm = tau;
                for (int i = 0; i < kN; ++i) {
                    cert.left.phase[i] = conj(a(sigma[i], c)) * b(i, 0) * a(r, c) * conj(b00);
                    cert.right.phase[i] = conj(a(r, tau[i])) * b(0, i);
                }
                if (verify_certificate(a, b, cert)) return cert;
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
    }
    return std::nullopt;
}

std::optional<EquivalenceCertificate> permutation_equivalent(const Matrix6& a, const Matrix6& b) {
    if (!a.is_exact() || !b.is_exact()) throw std::domain_error("permutation_equivalent: exact mode required");
    std::array<std::vector<std::pair<std::int64_t, std::int64_t>>, kN> sig_a;
    std::array<std::vector<std::pair<std::int64_t, std::int64_t>>, kN> sig_b;
    for (int c = 0; c < kN; ++c) {
        sig_a[c] = column_signature(a, c);
        sig_b[c] = column_signature(b, c);
    }
    std::array<int, kN> tau;
    std::iota(tau.begin(), tau.end(), 0);
    do {
        bool ok = true;
        for (int j = 0; j < kN && ok; ++j) ok = sig_a[tau[j]] == sig_b[j];
        if (!ok) continue;
        std::array<int, kN> sigma{};
        if (!match_rows(a, b, tau, sigma, -1)) continue;
        EquivalenceCertificate cert;
        cert.mode = EquivMode::PermutationOnly;
        cert.left.perm = sigma;
        cert.right.perm = tau;
        if (verify_certificate(a, b, cert)) return cert;
    } while (std::next_permutation(tau.begin(), tau.end()));
    return std::nullopt;
}

}  // namespace chm
