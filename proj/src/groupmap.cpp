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
#include <atomic>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

namespace chm {

namespace {

const std::vector<std::pair<Symbol, std::string>>& symbol_names() {
    static const std::vector<std::pair<Symbol, std::string>> names{
        {{0, 0}, "1"},      {{1, 0}, "a"},          {{-1, 0}, "conj(a)"},   {{2, 0}, "a^2"},        {{-2, 0}, "conj(a)^2"},
        {{0, 1}, "b"},      {{0, -1}, "conj(b)"},   {{1, -1}, "a*conj(b)"}, {{-1, 1}, "b*conj(a)"},
    };
    return names;
}

const std::map<std::string, Symbol>& symbol_aliases() {
    static const std::map<std::string, Symbol> aliases{
        {"abar", {-1, 0}}, {"a2", {2, 0}},     {"a2bar", {-2, 0}},   {"bbar", {0, -1}},
        {"abbar", {1, -1}}, {"babar", {-1, 1}}, {"conj(a^2)", {-2, 0}},
    };
    return aliases;
}

// Slot symbols of the count-array structures that carry a residue map.
std::vector<Symbol> slot_symbols(Structure s) {
    switch (s) {
        case Structure::CONJ: return {{0, 0}, {1, 0}, {-1, 0}, {2, 0}, {-2, 0}};
        case Structure::GENERIC: return {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
        default: throw std::invalid_argument("no residue map for " + structure_string(s));
    }
}

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CHM_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

int mod(int x, int m) { return ((x % m) + m) % m; }

bool in_family(const ResidueRow& multiset, const std::vector<ResidueRow>& family) {
    return std::find(family.begin(), family.end(), multiset) != family.end();
}

}  // namespace

std::string symbol_string(const Symbol& s) {
    for (const auto& [sym, name] : symbol_names())
        if (sym == s) return name;
    std::ostringstream out;
    out << "a^" << s[0] << "*b^" << s[1];
    return out.str();
}

Symbol parse_symbol(const std::string& text) {
    for (const auto& [sym, name] : symbol_names())
        if (name == text) return sym;
    if (auto it = symbol_aliases().find(text); it != symbol_aliases().end()) return it->second;
    throw std::invalid_argument("unknown symbol '" + text + "'");
}

int GroupMap::operator()(const Symbol& s) const {
    auto it = table.find(s);
    if (it == table.end()) throw UndefinedResidue("f(" + symbol_string(s) + ") is undefined mod " + std::to_string(modulus));
    return it->second;
}

int GroupMap::product(const Symbol& x, const Symbol& y) const { return (*this)(Symbol{x[0] + y[0], x[1] + y[1]}); }

const GroupMap& z5_map() {
    static const GroupMap m{5, {{{0, 0}, 0}, {{1, 0}, 1}, {{-1, 0}, 4}, {{2, 0}, 2}, {{-2, 0}, 3}},
                            {{0, 0}, {1, 0}, {2, 0}, {-2, 0}, {-1, 0}}};
    return m;
}

const GroupMap& z7_map() {
    static const GroupMap m{
        7,
        {{{0, 0}, 0}, {{1, 0}, 1}, {{-1, 0}, 6}, {{0, 1}, 5}, {{0, -1}, 2}, {{1, -1}, 3}, {{-1, 1}, 4}},
        {{0, 0}, {1, 0}, {0, -1}, {1, -1}, {-1, 1}, {0, 1}, {-1, 0}}};
    return m;
}

const GroupMap& group_map(int modulus) {
    if (modulus == 5) return z5_map();
    if (modulus == 7) return z7_map();
    throw std::invalid_argument("modulus must be 5 or 7");
}

ResidueRow residue_map(const GroupMap& map, const std::vector<Symbol>& row) {
    ResidueRow out;
    out.reserve(row.size());
    for (const auto& s : row) out.push_back(map(s));
    return out;
}

std::vector<Symbol> inverse_map(const GroupMap& map, const ResidueRow& row) {
    std::vector<Symbol> out;
    for (int r : row) {
        if (r < 0 || r >= map.modulus) throw std::out_of_range("residue out of range");
        out.push_back(map.inverse[r]);
    }
    return out;
}

ResidueProduct residue_inner_product(int modulus, const ResidueRow& x, const ResidueRow& y) {
    if (x.size() != y.size()) throw std::invalid_argument("residue rows differ in length");
    ResidueProduct p;
    for (std::size_t i = 0; i < x.size(); ++i) {
        p.raw_sum += x[i] - y[i];
        p.residues.push_back(mod(x[i] - y[i], modulus));
    }
    p.multiset = p.residues;
    std::sort(p.multiset.begin(), p.multiset.end());
    p.sum = mod(p.raw_sum, modulus);
    return p;
}

int f_image_sum(const CountArray& array) {
    const GroupMap& map = array.structure == Structure::CONJ ? z5_map() : z7_map();
    const auto slots = slot_symbols(array.structure);
    int total = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) total += array.n[i] * map(slots[i]);
    return total;
}

std::vector<CountArray> z7_sum_filter(const std::vector<CountArray>& arrays) {
    std::vector<CountArray> out;
    for (const auto& a : arrays) {
        if (a.structure != Structure::GENERIC) throw std::invalid_argument("z7_sum_filter needs GENERIC arrays");
        if (f_image_sum(a) % 7 == 0) out.push_back(a);
    }
    return out;
}

CompletionResult complete_rows(const CompletionProblem& problem) {
    const int m = problem.modulus;
    const auto& shapes = problem.row_shapes.empty() ? problem.target : problem.row_shapes;
    CompletionResult result;
    result.eliminated.assign(problem.fixed.size(), 0);

    std::set<ResidueRow> seen;
    for (auto shape : shapes) {
        std::sort(shape.begin(), shape.end());
        do {
            if (!seen.insert(shape).second) continue;
            ++result.candidates;
            bool ok = true;
            for (std::size_t k = 0; k < problem.fixed.size() && ok; ++k) {
                auto p = residue_inner_product(m, problem.fixed[k], shape);
                if (in_family(p.multiset, problem.target)) continue;
                ok = false;
                ++result.eliminated[k];
                if (!result.certificate) result.certificate = CompletionViolation{shape, static_cast<int>(k), p.multiset};
            }
            if (ok) result.rows.push_back(shape);
        } while (std::next_permutation(shape.begin(), shape.end()));
    }
    std::sort(result.rows.begin(), result.rows.end());
    if (!result.rows.empty()) result.certificate.reset();

    // Columns are interchangeable when every fixed row agrees on them.
    const std::size_t width = problem.fixed.empty() ? 0 : problem.fixed[0].size();
    std::vector<int> column_class(width);
    for (std::size_t j = 0; j < width; ++j) {
        column_class[j] = static_cast<int>(j);
        for (std::size_t i = 0; i < j; ++i) {
            bool same = std::all_of(problem.fixed.begin(), problem.fixed.end(), [&](const ResidueRow& r) { return r[i] == r[j]; });
            if (same) {
                column_class[j] = column_class[i];
                result.column_swaps.emplace_back(static_cast<int>(i), static_cast<int>(j));
                break;
            }
        }
    }
    auto representative = [&](ResidueRow row) {
        for (std::size_t c = 0; c < width; ++c) {
            std::vector<std::size_t> cols;
            for (std::size_t j = 0; j < width; ++j)
                if (column_class[j] == static_cast<int>(c)) cols.push_back(j);
            std::vector<int> vals;
            for (auto j : cols) vals.push_back(row[j]);
            std::sort(vals.begin(), vals.end());
            for (std::size_t k = 0; k < cols.size(); ++k) row[cols[k]] = vals[k];
        }
        return row;
    };
    std::map<ResidueRow, std::vector<ResidueRow>> orbits;
    for (const auto& row : result.rows) orbits[representative(row)].push_back(row);
    for (auto& [rep, members] : orbits) result.orbits.push_back(members);
    return result;
}

bool PairwiseResult::contradiction() const {
    return std::none_of(pairs.begin(), pairs.end(), [](const PairVerdict& p) { return p.admissible; });
}

PairwiseResult pairwise_admissibility(int modulus, const std::vector<ResidueRow>& rows, const std::vector<ResidueRow>& target) {
    PairwiseResult out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            auto p = residue_inner_product(modulus, rows[i], rows[j]);
            out.pairs.push_back({static_cast<int>(i), static_cast<int>(j), p.multiset, in_family(p.multiset, target)});
        }
    }
    return out;
}

int EdgeColoring::edge_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n || i == j) throw std::out_of_range("bad edge");
    // Edges before row i: sum_{r<i} (n - r).
    return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

int EdgeColoring::color(int i, int j) const { return colors[edge_index(n, i, j)]; }

std::string EdgeColoring::to_string() const {
    std::string s;
    for (int c : colors) s += static_cast<char>('0' + c);
    return s;
}

std::optional<std::array<int, 3>> monochromatic_triangle(const EdgeColoring& coloring) {
    const int n = coloring.n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                const int c = coloring.color(i, j);
                if (coloring.color(i, k) == c && coloring.color(j, k) == c) return std::array<int, 3>{i, j, k};
            }
    return std::nullopt;
}

CountArray generic_row_product(const std::vector<Symbol>& x, const std::vector<Symbol>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("rows differ in length");
    const auto slots = slot_symbols(Structure::GENERIC);
    std::vector<int> n(slots.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Symbol p{x[i][0] - y[i][0], x[i][1] - y[i][1]};
        auto it = std::find(slots.begin(), slots.end(), p);
        if (it == slots.end()) throw UndefinedResidue("product " + symbol_string(p) + " is not a GENERIC slot");
        ++n[it - slots.begin()];
    }
    return make_count_array(Structure::GENERIC, n);
}

EdgeColoring outward_pointing_coloring(const std::vector<std::vector<Symbol>>& rows, const CountArray& reference) {
    EdgeColoring c;
    c.n = static_cast<int>(rows.size());
    c.colors.assign(c.n * (c.n - 1) / 2, 0);
    const CountArray other = conjugate(reference);
    for (int i = 1; i <= c.n; ++i) {
        for (int j = i + 1; j <= c.n; ++j) {
            const CountArray a = generic_row_product(rows[i - 1], rows[j - 1]);
            int color;
            if (a == reference || a == conjugate(a)) {
                color = 0;
            } else if (a == other) {
                color = 1;
            } else {
                throw std::domain_error("rows " + std::to_string(i) + "," + std::to_string(j) + " give " + a.to_string());
            }
            c.colors[EdgeColoring::edge_index(c.n, i, j)] = color;
        }
    }
    return c;
}

RamseyResult ramsey_check(int n, int threads) {
    if (n < 3 || n > kMaxRamseyVertices) throw std::invalid_argument("ramsey_check supports 3 <= n <= 8");
    const int edges = n * (n - 1) / 2;
    std::vector<std::uint32_t> triangles;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                triangles.push_back((1U << EdgeColoring::edge_index(n, i, j)) | (1U << EdgeColoring::edge_index(n, i, k)) |
                                    (1U << EdgeColoring::edge_index(n, j, k)));
    const std::uint64_t total = std::uint64_t{1} << edges;
    const std::uint64_t chunk = std::uint64_t{1} << std::min(edges, 16);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> first_free{total};
    auto work = [&] {
        for (;;) {
            const std::uint64_t lo = next.fetch_add(chunk);
            if (lo >= total || lo >= first_free.load()) return;
            for (std::uint64_t c = lo; c < lo + chunk; ++c) {
                const auto bits = static_cast<std::uint32_t>(c);
                bool mono = false;
                for (auto t : triangles) {
                    const auto m = bits & t;
                    if (m == 0 || m == t) {
                        mono = true;
                        break;
                    }
                }
                if (!mono) {
                    std::uint64_t cur = first_free.load();
                    while (c < cur && !first_free.compare_exchange_weak(cur, c)) {
                    }
                    break;
                }
            }
        }
    };
    const int workers = std::min<std::uint64_t>(worker_count(threads), total / chunk);
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    RamseyResult r;
    r.n = n;
    r.colorings = total;
    r.holds = first_free.load() == total;
    if (!r.holds) {
        EdgeColoring c;
        c.n = n;
        for (int e = 0; e < edges; ++e) c.colors.push_back(static_cast<int>((first_free.load() >> e) & 1));
        r.counterexample = c;
    }
    return r;
}

PigeonholeResult pigeonhole_pair_check(const std::vector<std::pair<std::string, std::string>>& items) {
    if (items.size() != 5) throw std::invalid_argument("pigeonhole_pair_check needs exactly 5 items");
    const std::pair<std::string, std::string> ab{"a", "b"};
    const std::pair<std::string, std::string> ba{"b", "a"};
    std::vector<int> rows_ab;
    std::vector<int> rows_ba;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (items[k] == ab) {
            rows_ab.push_back(static_cast<int>(k) + 2);
        } else if (items[k] == ba) {
            rows_ba.push_back(static_cast<int>(k) + 2);
        } else {
            throw std::domain_error("item [" + items[k].first + "," + items[k].second + "] is not [a,b] or [b,a]");
        }
    }
    PigeonholeResult r;
    const bool use_ab = rows_ab.size() >= 3;
    r.pair = use_ab ? ab : ba;
    r.rows = use_ab ? rows_ab : rows_ba;
    r.count = static_cast<int>(r.rows.size());
    r.witness = {r.pair, r.pair, r.pair};
    return r;
}

}  // namespace chm
