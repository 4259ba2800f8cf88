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

#include "chm/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chm {

namespace {

// True iff the given unit values sum to zero (exactly, or within tolerance).
bool sums_to_zero(const std::vector<UnitValue>& values) {
    bool exact = std::all_of(values.begin(), values.end(), [](const UnitValue& v) { return v.is_exact(); });
    if (exact) return is_zero(sum(values));
    std::complex<double> acc = 0;
    for (const auto& v : values) acc += v.to_complex();
    return std::abs(acc) < kTolerance;
}

UnitValue ratio(const Matrix6& m, int r1, int r2, int c) { return m(r1, c) * conj(m(r2, c)); }

const UnitValue& omega() {
    static const UnitValue w = root_of_unity(1, 3);
    return w;
}

std::vector<std::array<int, 3>> triples() {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < kN; ++a)
        for (int b = a + 1; b < kN; ++b)
            for (int c = b + 1; c < kN; ++c) out.push_back({a, b, c});
    return out;
}

bool is_hadamard_3x3(const Matrix6& m, const std::array<int, 3>& r, const std::array<int, 3>& c) {
    for (int x = 0; x < 3; ++x) {
        for (int y = x + 1; y < 3; ++y) {
            std::vector<UnitValue> terms;
            for (int k = 0; k < 3; ++k) terms.push_back(ratio(m, r[x], r[y], c[k]));
            if (!sums_to_zero(terms)) return false;
        }
    }
    return true;
}

// Ratio multiset is a rotation of {1,1,w,w,w^2,w^2}.
bool matches_1oo2(const std::array<UnitValue, kN>& ratios) {
    std::array<int, 3> counts{0, 0, 0};
    const UnitValue base = conj(ratios[0]);
    const std::array<UnitValue, 3> targets{UnitValue(), omega(), omega() * omega()};
    for (const auto& r : ratios) {
        UnitValue n = r * base;
        bool hit = false;
        for (int k = 0; k < 3; ++k) {
            if (n == targets[k]) {
                ++counts[k];
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return counts == std::array<int, 3>{2, 2, 2};
}

bool block_is_hadamard(const Matrix6& m, const std::array<int, 2>& r, const std::array<int, 2>& c) {
    return sums_to_zero({ratio(m, r[0], r[1], c[0]), ratio(m, r[0], r[1], c[1])});
}

std::vector<int> one_based(std::initializer_list<int> idx) {
    std::vector<int> out;
    for (int i : idx) out.push_back(i + 1);
    return out;
}

void build_partitions(std::vector<int>& remaining, std::vector<std::array<int, 2>>& cur,
                      std::vector<std::array<std::array<int, 2>, 3>>& out) {
    if (remaining.empty()) {
        out.push_back({cur[0], cur[1], cur[2]});
        return;
    }
    int first = remaining.front();
    for (std::size_t k = 1; k < remaining.size(); ++k) {
        int second = remaining[k];
        std::vector<int> rest;
        for (std::size_t j = 1; j < remaining.size(); ++j) {
            if (j != k) rest.push_back(remaining[j]);
        }
        cur.push_back({first, second});
        build_partitions(rest, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Matrix6::Matrix6(const Rows& rows) : e_(rows) {
    bool any_float = false;
    for (const auto& row : e_)
        for (const auto& v : row) any_float = any_float || !v.is_exact();
    if (!any_float) return;
    mode_ = Mode::Float;
    for (auto& row : e_) {
        for (auto& v : row) {
            auto z = v.to_complex();
            v = UnitValue::from_float(z.real(), z.imag());
        }
    }
}

std::string Matrix6::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < kN; ++r) {
        for (int c = 0; c < kN; ++c) os << (c ? " " : "") << e_[r][c].to_string();
        os << "\n";
    }
    return os.str();
}

Matrix6 apply_monomials(const Monomial& left, const Matrix6& a, const Monomial& right) {
    Matrix6::Rows out;
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j)
            out[i][j] = left.phase[i] * a(left.perm[i], right.perm[j]) * right.phase[j];
    return Matrix6(out);
}

bool is_chm(const Matrix6& m) {
    for (int i = 0; i < kN; ++i) {
        for (int j = i + 1; j < kN; ++j) {
            std::vector<UnitValue> terms;
            for (int c = 0; c < kN; ++c) terms.push_back(ratio(m, i, j, c));
            if (!sums_to_zero(terms)) return false;
        }
    }
    return true;
}

CycSum row_inner_product(const Matrix6& m, int i, int j) {
    if (i == j) throw std::domain_error("row_inner_product: rows must differ");
    if (i < 0 || j < 0 || i >= kN || j >= kN) throw std::out_of_range("row_inner_product: row index");
    if (!m.is_exact()) throw std::domain_error("row_inner_product: exact mode required");
    std::vector<UnitValue> terms;
    for (int c = 0; c < kN; ++c) terms.push_back(ratio(m, i, j, c));
    return sum(terms);
}

std::complex<double> row_inner_product_float(const Matrix6& m, int i, int j) {
    if (i == j) throw std::domain_error("row_inner_product: rows must differ");
    std::complex<double> acc = 0;
    for (int c = 0; c < kN; ++c) acc += ratio(m, i, j, c).to_complex();
    return acc;
}

std::vector<UnitValue> distinct_elements(const Matrix6& m) {
    std::vector<UnitValue> reps;
    for (const auto& row : m.rows()) {
        for (const auto& v : row) {
            int hits = 0;
            for (const auto& r : reps) hits += (r == v) ? 1 : 0;
            if (hits > 1) throw std::domain_error("distinct_elements: ambiguous float clusters");
            if (hits == 0) reps.push_back(v);
        }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

std::array<int, kN> element_row_profile(const Matrix6& m, const UnitValue& v) {
    std::array<int, kN> t{};
    for (int r = 0; r < kN; ++r)
        for (int c = 0; c < kN; ++c) t[r] += (m(r, c) == v) ? 1 : 0;
    return t;
}

Matrix6 scale_matrix(const Matrix6& m, const UnitValue& s) {
    Matrix6::Rows out;
    for (int r = 0; r < kN; ++r)
        for (int c = 0; c < kN; ++c) out[r][c] = m(r, c) * s;
    return Matrix6(out);
}

Matrix6 transpose(const Matrix6& m) {
    Matrix6::Rows out;
    for (int r = 0; r < kN; ++r)
        for (int c = 0; c < kN; ++c) out[r][c] = m(c, r);
    return Matrix6(out);
}

Matrix6 conj(const Matrix6& m) {
    Matrix6::Rows out;
    for (int r = 0; r < kN; ++r)
        for (int c = 0; c < kN; ++c) out[r][c] = conj(m(r, c));
    return Matrix6(out);
}

std::optional<ScanWitness> find_rank1_2x3(const Matrix6& m) {
    const auto ts = triples();
    for (int r1 = 0; r1 < kN; ++r1) {
        for (int r2 = r1 + 1; r2 < kN; ++r2) {
            for (const auto& c : ts) {
                UnitValue q = ratio(m, r1, r2, c[0]);
                if (ratio(m, r1, r2, c[1]) == q && ratio(m, r1, r2, c[2]) == q) {
                    return ScanWitness{WitnessKind::Rank1_2x3, one_based({r1, r2}), one_based({c[0], c[1], c[2]})};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<ScanWitness> find_3x3_hadamard_submatrix(const Matrix6& m) {
    const auto ts = triples();
    for (const auto& r : ts) {
        for (const auto& c : ts) {
            if (is_hadamard_3x3(m, r, c)) {
                return ScanWitness{WitnessKind::Hadamard3x3, one_based({r[0], r[1], r[2]}), one_based({c[0], c[1], c[2]})};
            }
        }
    }
    return std::nullopt;
}

std::optional<ScanWitness> find_pattern_1oo2(const Matrix6& m) {
    for (int pass = 0; pass < 2; ++pass) {
        const Matrix6 src = pass == 0 ? m : transpose(m);
        for (int r1 = 0; r1 < kN; ++r1) {
            for (int r2 = r1 + 1; r2 < kN; ++r2) {
                std::array<UnitValue, kN> ratios;
                for (int c = 0; c < kN; ++c) ratios[c] = ratio(src, r1, r2, c);
                if (!matches_1oo2(ratios)) continue;
                std::vector<int> pair = one_based({r1, r2});
                std::vector<int> all = one_based({0, 1, 2, 3, 4, 5});
                if (pass == 0) return ScanWitness{WitnessKind::Pattern1oo2, pair, all};
                return ScanWitness{WitnessKind::Pattern1oo2, all, pair};
            }
        }
    }
    return std::nullopt;
}

const std::vector<std::array<std::array<int, 2>, 3>>& pair_partitions() {
    static const std::vector<std::array<std::array<int, 2>, 3>> parts = [] {
        std::vector<std::array<std::array<int, 2>, 3>> out;
        std::vector<int> all{0, 1, 2, 3, 4, 5};
        std::vector<std::array<int, 2>> cur;
        build_partitions(all, cur, out);
        return out;
    }();
    return parts;
}

std::optional<H2Certificate> h2_reducible(const Matrix6& m) {
    for (const auto& rp : pair_partitions()) {
        for (const auto& cp : pair_partitions()) {
            bool ok = true;
            for (int x = 0; x < 3 && ok; ++x)
                for (int y = 0; y < 3 && ok; ++y) ok = block_is_hadamard(m, rp[x], cp[y]);
            if (!ok) continue;
            H2Certificate cert;
            for (int x = 0; x < 3; ++x) {
                cert.row_pairs[x] = {rp[x][0] + 1, rp[x][1] + 1};
                cert.col_pairs[x] = {cp[x][0] + 1, cp[x][1] + 1};
                for (int y = 0; y < 3; ++y) {
                    const auto& r = rp[x];
                    const auto& c = cp[y];
                    cert.block_core[x][y] = m(r[0], c[0]) * conj(m(r[0], c[1])) * conj(m(r[1], c[0])) * m(r[1], c[1]);
                }
            }
            return cert;
        }
    }
    return std::nullopt;
}

MubVerdict mub_obstruction(const Matrix6& m) {
    return find_3x3_hadamard_submatrix(m) ? MubVerdict::ExcludedBy3x3 : MubVerdict::NoVerdict;
}

bool verify_witness(const Matrix6& m, const ScanWitness& w) {
    auto zero_based = [](const std::vector<int>& v) {
        std::vector<int> out;
        for (int i : v) {
            if (i < 1 || i > kN) throw std::out_of_range("witness index");
            out.push_back(i - 1);
        }
        return out;
    };
    const auto r = zero_based(w.rows);
    const auto c = zero_based(w.cols);
    switch (w.kind) {
        case WitnessKind::Rank1_2x3: {
            if (r.size() != 2 || c.size() != 3) return false;
            UnitValue q = ratio(m, r[0], r[1], c[0]);
            return ratio(m, r[0], r[1], c[1]) == q && ratio(m, r[0], r[1], c[2]) == q;
        }
        case WitnessKind::Hadamard3x3:
            if (r.size() != 3 || c.size() != 3) return false;
            return is_hadamard_3x3(m, {r[0], r[1], r[2]}, {c[0], c[1], c[2]});
        case WitnessKind::Pattern1oo2: {
            const bool by_rows = r.size() == 2 && c.size() == kN;
            const bool by_cols = c.size() == 2 && r.size() == kN;
            if (!by_rows && !by_cols) return false;
            const Matrix6 src = by_rows ? m : transpose(m);
            const auto& p = by_rows ? r : c;
            std::array<UnitValue, kN> ratios;
            for (int k = 0; k < kN; ++k) ratios[k] = ratio(src, p[0], p[1], k);
            return matches_1oo2(ratios);
        }
    }
    return false;
}

bool verify_h2_certificate(const Matrix6& m, const H2Certificate& cert) {
    std::array<int, kN> seen_r{};
    std::array<int, kN> seen_c{};
    for (int x = 0; x < 3; ++x) {
        for (int k = 0; k < 2; ++k) {
            int rr = cert.row_pairs[x][k];
            int cc = cert.col_pairs[x][k];
            if (rr < 1 || rr > kN || cc < 1 || cc > kN) return false;
            ++seen_r[rr - 1];
            ++seen_c[cc - 1];
        }
    }
    for (int k = 0; k < kN; ++k) {
        if (seen_r[k] != 1 || seen_c[k] != 1) return false;
    }
    const UnitValue minus_one = root_of_unity(1, 2);
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
            std::array<int, 2> r{cert.row_pairs[x][0] - 1, cert.row_pairs[x][1] - 1};
            std::array<int, 2> c{cert.col_pairs[y][0] - 1, cert.col_pairs[y][1] - 1};
            if (!block_is_hadamard(m, r, c)) return false;
            UnitValue core = m(r[0], c[0]) * conj(m(r[0], c[1])) * conj(m(r[1], c[0])) * m(r[1], c[1]);
            if (!(core == minus_one) || !(core == cert.block_core[x][y])) return false;
        }
    }
    return true;
}

Matrix6 catalog(CatalogName name, const UnitValue& alpha, const UnitValue& beta) {
    const UnitValue one;
    const UnitValue w = root_of_unity(1, 3);
    const UnitValue w2 = root_of_unity(2, 3);
    Matrix6::Rows e;
    switch (name) {
        case CatalogName::S6_0:
        case CatalogName::S6_1: {
            const UnitValue a = name == CatalogName::S6_0 ? w : neg(w);
            const UnitValue b = name == CatalogName::S6_0 ? w2 : neg(w2);
            e = {{{one, one, one, one, one, one},
                  {one, one, a, a, b, b},
                  {one, a, one, b, b, a},
                  {one, a, b, one, a, b},
                  {one, b, b, a, one, a},
                  {one, b, a, b, a, one}}};
            break;
        }
        case CatalogName::H1: {
            const UnitValue i = root_of_unity(1, 4);
            const UnitValue m = root_of_unity(1, 2);
            e = {{{i, one, one, one, one, one},
                  {one, i, one, one, m, m},
                  {one, one, i, m, one, m},
                  {one, one, m, i, m, one},
                  {one, m, one, m, i, one},
                  {one, m, m, one, one, i}}};
            break;
        }
        case CatalogName::HAB: {
            const UnitValue m = root_of_unity(1, 2);
            const UnitValue na = neg(alpha);
            const UnitValue nb = neg(beta);
            e = {{{one, one, one, one, one, one},
                  {one, one, one, m, m, m},
                  {one, w, w2, alpha, alpha * w, alpha * w2},
                  {one, w, w2, na, na * w, na * w2},
                  {one, w2, w, beta, beta * w2, beta * w},
                  {one, w2, w, nb, nb * w2, nb * w}}};
            break;
        }
        case CatalogName::F6:
            for (int j = 0; j < kN; ++j)
                for (int k = 0; k < kN; ++k) e[j][k] = root_of_unity(j * k, 6);
            break;
    }
    return Matrix6(e);
}

CatalogName parse_catalog_name(const std::string& name) {
    if (name == "S6_0") return CatalogName::S6_0;
    if (name == "S6_1") return CatalogName::S6_1;
    if (name == "H1") return CatalogName::H1;
    if (name == "HAB") return CatalogName::HAB;
    if (name == "F6") return CatalogName::F6;
    throw std::invalid_argument("unknown catalog name: " + name);
}

std::string catalog_name_string(CatalogName name) {
    switch (name) {
        case CatalogName::S6_0: return "S6_0";
        case CatalogName::S6_1: return "S6_1";
        case CatalogName::H1: return "H1";
        case CatalogName::HAB: return "HAB";
        case CatalogName::F6: return "F6";
    }
    return "?";
}

}  // namespace chm
