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
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace chm {

namespace {

// Candidate rows of an alphabet and their pairwise orthogonality. Rows are
// base-k digit strings, most significant digit first, so numeric order is
// lexicographic order.
class RowTable {
 public:
    RowTable(const Alphabet& alphabet, bool dephased) : alphabet_(alphabet) {
        const int k = static_cast<int>(alphabet.values.size());
        int total = 1;
        for (int c = 0; c < kN; ++c) total *= k;
        for (int code = 0; code < total; ++code) {
            auto d = digits(code);
            if (dephased && d[0] != 0) continue;
            rows_.push_back(d);
        }
        words_ = (rows_.size() + 63) / 64;
        build_masks();
        build_orthogonality();
    }

    std::size_t size() const { return rows_.size(); }
    std::size_t words() const { return words_; }
    const std::array<int, kN>& row(std::size_t i) const { return rows_[i]; }
    const std::uint64_t* orth(std::size_t i) const { return &orth_[i * words_]; }
    std::uint8_t le_mask(std::size_t i) const { return le_[i]; }
    std::uint8_t eq_mask(std::size_t i) const { return eq_[i]; }
    bool orthogonal(std::size_t i, std::size_t j) const { return (orth(i)[j / 64] >> (j % 64)) & 1U; }

    Matrix6 matrix(const RowPrefix& rows) const {
        Matrix6::Rows out;
        for (int r = 0; r < kN; ++r)
            for (int c = 0; c < kN; ++c) out[r][c] = alphabet_.values[rows_[rows[r]][c]];
        return Matrix6(out);
    }

 private:
    std::array<int, kN> digits(int code) const {
        const int k = static_cast<int>(alphabet_.values.size());
        std::array<int, kN> d{};
        for (int c = kN - 1; c >= 0; --c) {
            d[c] = code % k;
            code /= k;
        }
        return d;
    }

    void build_masks() {
        for (const auto& d : rows_) {
            std::uint8_t le = 0;
            std::uint8_t eq = 0;
            for (int c = 0; c + 1 < kN; ++c) {
                if (d[c] <= d[c + 1]) le |= static_cast<std::uint8_t>(1U << c);
                if (d[c] == d[c + 1]) eq |= static_cast<std::uint8_t>(1U << c);
            }
            le_.push_back(le);
            eq_.push_back(eq);
        }
    }

    // The inner product of two rows depends only on the multiset of entry
    // ratios. Ratios are indexed into a small table and the multiset is
    // packed as 3-bit counts, so each distinct multiset is decided once.
    void build_orthogonality() {
        const auto& vals = alphabet_.values;
        const int k = static_cast<int>(vals.size());
        std::vector<UnitValue> ratios;
        std::vector<std::vector<int>> ratio_index(k, std::vector<int>(k));
        for (int x = 0; x < k; ++x) {
            for (int y = 0; y < k; ++y) {
                UnitValue r = vals[x] * conj(vals[y]);
                auto it = std::find(ratios.begin(), ratios.end(), r);
                ratio_index[x][y] = static_cast<int>(it - ratios.begin());
                if (it == ratios.end()) ratios.push_back(r);
            }
        }
        std::unordered_map<std::uint64_t, bool> zero_by_key;
        auto decide = [&](std::uint64_t key) {
            auto it = zero_by_key.find(key);
            if (it != zero_by_key.end()) return it->second;
            std::vector<UnitValue> terms;
            for (std::size_t r = 0; r < ratios.size(); ++r) {
                for (std::uint64_t n = (key >> (3 * r)) & 7U; n > 0; --n) terms.push_back(ratios[r]);
            }
            bool z = is_zero(sum(terms));
            zero_by_key.emplace(key, z);
            return z;
        };
        orth_.assign(rows_.size() * words_, 0);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = i + 1; j < rows_.size(); ++j) {
                std::uint64_t key = 0;
                for (int c = 0; c < kN; ++c) key += std::uint64_t{1} << (3 * ratio_index[rows_[i][c]][rows_[j][c]]);
                if (!decide(key)) continue;
                orth_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
                orth_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
            }
        }
    }

    const Alphabet& alphabet_;
    std::vector<std::array<int, kN>> rows_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> orth_;
    std::vector<std::uint8_t> le_;
    std::vector<std::uint8_t> eq_;
};

constexpr std::uint8_t kAllTied = (1U << (kN - 1)) - 1;

class Search {
 public:
    Search(const RowTable& table, const CensusOptions& options, std::atomic<std::uint64_t>& nodes,
           std::atomic<bool>& exhausted)
        : table_(table), options_(options), nodes_(nodes), exhausted_(exhausted) {}

    // Extends a valid prefix to all completions, appending them to out.
    void run(const RowPrefix& prefix, std::vector<RowPrefix>& out) {
        std::vector<std::uint64_t> cand(table_.words(), ~std::uint64_t{0});
        std::uint8_t tie = kAllTied;
        for (int r : prefix) {
            const std::uint64_t* o = table_.orth(r);
            for (std::size_t w = 0; w < cand.size(); ++w) cand[w] &= o[w];
            tie &= table_.eq_mask(r);
        }
        rows_ = prefix;
        out_ = &out;
        dfs(cand, tie);
    }

 private:
    void dfs(const std::vector<std::uint64_t>& cand, std::uint8_t tie) {
        if (rows_.size() == static_cast<std::size_t>(kN)) {
            out_->push_back(rows_);
            return;
        }
        const std::size_t start = rows_.empty() ? 0 : static_cast<std::size_t>(rows_.back()) + 1;
        const std::size_t need = kN - rows_.size();
        std::size_t avail = 0;
        for (std::size_t w = start / 64; w < cand.size(); ++w) {
            std::uint64_t bits = cand[w];
            if (w == start / 64) bits &= ~std::uint64_t{0} << (start % 64);
            avail += static_cast<std::size_t>(std::popcount(bits));
        }
        if (avail < need) return;
        std::vector<std::uint64_t> next(cand.size());
        for (std::size_t w = start / 64; w < cand.size(); ++w) {
            std::uint64_t bits = cand[w];
            if (w == start / 64) bits &= ~std::uint64_t{0} << (start % 64);
            while (bits != 0) {
                const std::size_t y = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (options_.column_reduction && (tie & ~table_.le_mask(y)) != 0) continue;
                if (nodes_.fetch_add(1, std::memory_order_relaxed) >= options_.budget) {
                    exhausted_ = true;
                    return;
                }
                const std::uint64_t* o = table_.orth(y);
                for (std::size_t v = 0; v < cand.size(); ++v) next[v] = cand[v] & o[v];
                rows_.push_back(static_cast<int>(y));
                dfs(next, tie & table_.eq_mask(y));
                rows_.pop_back();
                if (exhausted_) return;
            }
        }
    }

    const RowTable& table_;
    const CensusOptions& options_;
    std::atomic<std::uint64_t>& nodes_;
    std::atomic<bool>& exhausted_;
    RowPrefix rows_;
    std::vector<RowPrefix>* out_ = nullptr;
};

bool use_dephasing(const Alphabet& alphabet, const CensusOptions& options) {
    return options.dephase && alphabet.closed();
}

std::vector<RowPrefix> prefixes(const RowTable& table, const CensusOptions& options, bool dephased) {
    std::vector<RowPrefix> out;
    const std::size_t first_end = dephased ? 1 : table.size();
    for (std::size_t a = 0; a < first_end; ++a) {
        for (std::size_t b = a + 1; b < table.size(); ++b) {
            if (!table.orthogonal(a, b)) continue;
            if (options.column_reduction && (table.eq_mask(a) & ~table.le_mask(b)) != 0) continue;
            out.push_back({static_cast<int>(a), static_cast<int>(b)});
        }
    }
    return out;
}

int thread_count(const CensusOptions& options) {
    if (options.threads > 0) return options.threads;
    if (const char* env = std::getenv("CHM_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

bool Alphabet::closed() const {
    return std::all_of(closure_flags.begin(), closure_flags.end(), [](bool f) { return f; });
}

std::string Alphabet::to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < values.size(); ++k) s += (k ? "," : "") + values[k].to_string();
    return s + "}";
}

Alphabet make_alphabet(std::vector<UnitValue> values) {
    if (values.size() < 2 || values.size() > 4) throw std::invalid_argument("alphabet must have 2 to 4 values");
    for (const auto& v : values) {
        if (!v.is_exact()) throw std::invalid_argument("alphabet values must be exact");
    }
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        throw std::invalid_argument("alphabet values must be distinct");
    Alphabet a;
    a.values = values;
    for (const auto& y : values) {
        bool closed = true;
        for (const auto& x : values) closed = closed && std::find(values.begin(), values.end(), x * conj(y)) != values.end();
        a.closure_flags.push_back(closed);
    }
    return a;
}

std::vector<RowPrefix> two_row_prefixes(const Alphabet& alphabet, const CensusOptions& options) {
    const bool dephased = use_dephasing(alphabet, options);
    RowTable table(alphabet, dephased);
    return prefixes(table, options, dephased);
}

std::vector<Matrix6> complete_prefix(const Alphabet& alphabet, const RowPrefix& prefix, const CensusOptions& options) {
    RowTable table(alphabet, use_dephasing(alphabet, options));
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
    Search search(table, options, nodes, exhausted);
    std::vector<RowPrefix> found;
    search.run(prefix, found);
    if (exhausted) throw std::runtime_error("complete_prefix: node budget exhausted");
    std::vector<Matrix6> out;
    for (const auto& rows : found) out.push_back(table.matrix(rows));
    return out;
}

CensusReport enumerate_chms(const Alphabet& alphabet, const CensusOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    CensusReport report;
    report.alphabet = alphabet;
    const bool dephased = use_dephasing(alphabet, options);
    RowTable table(alphabet, dephased);
    const auto work = prefixes(table, options, dephased);

    std::atomic<std::uint64_t> nodes{work.size()};
    std::atomic<bool> exhausted{false};
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<RowPrefix>> found(work.size());
    auto worker = [&] {
        Search search(table, options, nodes, exhausted);
        for (std::size_t p = next++; p < work.size() && !exhausted; p = next++) search.run(work[p], found[p]);
    };
    const int n = std::min<int>(thread_count(options), static_cast<int>(std::max<std::size_t>(work.size(), 1)));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    report.incomplete = exhausted;
    report.node_count = std::min<std::uint64_t>(nodes, options.budget);
    // Prefixes are in lexicographic order and each search emits in
    // lexicographic order, so the concatenation is canonical.
    std::multimap<std::vector<std::pair<std::int64_t, std::int64_t>>, int> buckets;
    for (const auto& chunk : found) {
        for (const auto& rows : chunk) {
            Matrix6 m = table.matrix(rows);
            report.matrices.push_back(m);
            if (!options.group_classes) continue;
            auto fp = fingerprint(m).turns;
            int cls = -1;
            auto [lo, hi] = buckets.equal_range(fp);
            for (auto it = lo; it != hi && cls < 0; ++it) {
                if (complex_equivalent(report.representatives[it->second], m)) cls = it->second;
            }
            if (cls < 0) {
                cls = static_cast<int>(report.representatives.size());
                report.representatives.push_back(m);
                buckets.emplace(fp, cls);
            }
            report.class_of.push_back(cls);
        }
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

CensusReport classify_census(const CensusReport& report) {
    if (report.incomplete) throw std::logic_error("classify_census: report is incomplete");
    CensusReport out = report;
    out.labels.clear();
    out.s6_0_certificates.clear();
    out.h1_certificates.clear();
    const Matrix6 s6 = catalog(CatalogName::S6_0);
    const Matrix6 h1 = catalog(CatalogName::H1);
    for (const auto& rep : out.representatives) {
        auto to_s6 = complex_equivalent(rep, s6);
        auto to_h1 = to_s6 ? std::nullopt : complex_equivalent(rep, h1);
        ClassLabel label = to_s6 ? ClassLabel::S6_0 : (to_h1 ? ClassLabel::H1 : ClassLabel::Other);
        if (label == ClassLabel::Other) {
            out.diagnostics.push_back("OTHER: representative over " + out.alphabet.to_string() +
                                      " is equivalent to neither S6_0 nor H1: " + rep.to_string());
        }
        out.labels.push_back(label);
        out.s6_0_certificates.push_back(to_s6);
        out.h1_certificates.push_back(to_h1);
    }
    return out;
}

std::string class_label_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::S6_0:
            return "S6_0";
        case ClassLabel::H1:
            return "H1";
        case ClassLabel::Other:
            return "OTHER";
    }
    return "OTHER";
}

}  // namespace chm
