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

#include "chm/torus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <mutex>
#include <thread>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace chm {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;
using cld = std::complex<long double>;

constexpr double kTwoPi = 2 * std::numbers::pi;
/// Minimum distance from every simple locus for a curve witness.
constexpr double kWitnessSeparation = 1e-3;
/// Minimum distance from every simple locus for an isolated point.
constexpr double kPointSeparation = 1e-7;

double circle_distance(double x) {
    double d = std::fmod(std::abs(x), kTwoPi);
    return std::min(d, kTwoPi - d);
}

double angle_of(cld z) { return static_cast<double>(std::arg(z)); }

double angle_of(const UnitValue& v) { return kTwoPi * v.turn(); }

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CHM_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

CycSum evaluate_exact(const IntPoly& p, const UnitValue& a) {
    LaurentPoly l;
    for (int k = 0; k <= p.degree(); ++k) l.add_term(p.coeff(k).convert_to<std::int64_t>(), k);
    return l.evaluate_exact(a);
}

/// Roots of sum c[k] b^k with nonzero leading coefficient.
std::vector<cld> complex_poly_roots(std::vector<cld> c) {
    while (!c.empty() && std::abs(c.back()) == 0) c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<cld> out;
    if (n < 1) return out;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) {
        cld v = -c[i] / c[n];
        comp(i, n - 1) = {static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    for (int i = 0; i < n; ++i) {
        cld z(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
        for (int it = 0; it < 50; ++it) {
            cld f = 0;
            cld df = 0;
            for (int k = n; k >= 0; --k) {
                df = df * z + f;
                f = f * z + c[k];
            }
            if (std::abs(df) == 0) break;
            cld step = f / df;
            z -= step;
            if (std::abs(step) < 1e-19L) break;
        }
        out.push_back(z);
    }
    return out;
}

/// e(p/q) with q <= 120 within 1e-10 of the angle, if any.
std::optional<UnitValue> snap_root_of_unity(double theta) {
    double t = theta / kTwoPi;
    t -= std::floor(t);
    for (std::int64_t q = 1; q <= 120; ++q) {
        double p = std::round(t * q);
        if (std::abs(t * q - p) < 1e-10 * q) return root_of_unity(static_cast<std::int64_t>(p), q);
    }
    return std::nullopt;
}

/// A free coordinate value far from every simple locus given the fixed one.
double free_angle(double fixed, bool fixed_is_a) {
    double best = 1.0;
    double best_distance = -1;
    for (int k = 0; k < 64; ++k) {
        double t = 0.5 + 0.173 * k;
        double d = fixed_is_a ? simple_locus_distance(fixed, t) : simple_locus_distance(t, fixed);
        if (d > best_distance) {
            best_distance = d;
            best = t;
        }
        if (d > 0.1) return t;
    }
    return best;
}

struct UnitPoint {
    cld value;
    std::optional<UnitValue> exact;
};

std::vector<UnitPoint> unit_points(const SolutionSet& s) {
    std::vector<UnitPoint> out;
    for (const auto& p : s.exact_points) out.push_back({p.to_complex_ld(), p});
    for (const auto& p : s.algebraic_points) out.push_back({p.value(), std::nullopt});
    return out;
}

void add_pair(SolutionSet& out, const UnitPoint& a0, cld b0, const LaurentPoly& check) {
    const double ta = angle_of(a0.value);
    const double tb = angle_of(b0);
    if (a0.exact) {
        if (auto be = snap_root_of_unity(tb)) {
            if (is_zero(check.evaluate_exact(*a0.exact, *be))) {
                auto pair = std::make_pair(*a0.exact, *be);
                if (std::find(out.exact_pairs.begin(), out.exact_pairs.end(), pair) == out.exact_pairs.end())
                    out.exact_pairs.push_back(pair);
                return;
            }
        }
    }
    for (const auto& w : out.numeric_witnesses) {
        if (circle_distance(w[0] - ta) < 1e-9 && circle_distance(w[1] - tb) < 1e-9) return;
    }
    out.numeric_witnesses.push_back({ta, tb});
}

/// Unit-modulus roots b of the b-polynomial of p at a0, Newton-polished.
std::vector<cld> unit_b_roots(const std::vector<IntPoly>& cb, cld a0, const LaurentPoly& p) {
    std::vector<cld> coeffs;
    for (const auto& c : cb) coeffs.push_back(c.evaluate(a0));
    std::vector<cld> out;
    for (cld b : complex_poly_roots(coeffs)) {
        if (std::abs(std::abs(b) - 1) > 1e-6L) continue;
        b /= std::abs(b);
        if (std::abs(p.evaluate(a0, b)) > 1e-9L) continue;
        out.push_back(b);
    }
    return out;
}

bool coefficients_vanish(const std::vector<IntPoly>& cb, const UnitPoint& a0) {
    for (const auto& c : cb) {
        if (a0.exact) {
            if (!is_zero(evaluate_exact(c, *a0.exact))) return false;
        } else if (std::abs(c.evaluate(a0.value)) > 1e-12L) {
            return false;
        }
    }
    return true;
}

/// Numeric system: the listed polynomials vanish at (theta1, theta2).
struct GridSystem {
    std::vector<LaurentPoly> polys;

    std::complex<double> value(const LaurentPoly& p, double t1, double t2) const {
        std::complex<double> acc = 0;
        for (const auto& [e, c] : p.terms()) acc += static_cast<double>(c) * std::polar(1.0, e[0] * t1 + e[1] * t2);
        return acc;
    }

    double residual(double t1, double t2) const {
        double r = 0;
        for (const auto& p : polys) r += std::abs(value(p, t1, t2));
        return r;
    }

    double lipschitz() const {
        double l = 0;
        for (const auto& p : polys)
            for (const auto& [e, c] : p.terms()) l += std::abs(static_cast<double>(c)) * (std::abs(e[0]) + std::abs(e[1]));
        return l;
    }

    /// Gauss-Newton with a pseudo-inverse step; returns the final residual.
    double refine(double& t1, double& t2) const {
        const int rows = 2 * static_cast<int>(polys.size());
        for (int it = 0; it < 60; ++it) {
            Eigen::VectorXd f(rows);
            Eigen::MatrixXd j(rows, 2);
            for (std::size_t k = 0; k < polys.size(); ++k) {
                std::complex<double> v = 0;
                std::complex<double> d1 = 0;
                std::complex<double> d2 = 0;
                for (const auto& [e, c] : polys[k].terms()) {
                    std::complex<double> term = static_cast<double>(c) * std::polar(1.0, e[0] * t1 + e[1] * t2);
                    v += term;
                    d1 += std::complex<double>(0, e[0]) * term;
                    d2 += std::complex<double>(0, e[1]) * term;
                }
                f(2 * k) = v.real();
                f(2 * k + 1) = v.imag();
                j(2 * k, 0) = d1.real();
                j(2 * k, 1) = d2.real();
                j(2 * k + 1, 0) = d1.imag();
                j(2 * k + 1, 1) = d2.imag();
            }
            if (f.norm() < 1e-14) break;
            Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(j);
            cod.setThreshold(1e-10);
            Eigen::Vector2d step = cod.solve(f);
            t1 -= step(0);
            t2 -= step(1);
            if (step.norm() < 1e-16) break;
        }
        return residual(t1, t2);
    }
};

/// Grid-plus-refinement witness search; stops at the first non-simple point.
void witness_search(const GridSystem& sys, SolutionSet& out) {
    const int n = kWitnessGrid;
    const double h = kTwoPi / n;
    std::vector<double> grid(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) grid[static_cast<std::size_t>(i) * n + j] = sys.residual(i * h, j * h);
    auto at = [&](int i, int j) { return grid[static_cast<std::size_t>((i + n) % n) * n + (j + n) % n]; };
    const double threshold = sys.lipschitz() * h;
    std::vector<std::pair<double, std::pair<int, int>>> seeds;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = at(i, j);
            if (v >= threshold) continue;
            const bool min_j = v <= at(i, j - 1) && v <= at(i, j + 1);
            const bool min_i = v <= at(i - 1, j) && v <= at(i + 1, j);
            if (min_i || min_j) seeds.push_back({v, {i, j}});
        }
    }
    std::sort(seeds.begin(), seeds.end());
    std::vector<std::array<double, 2>> simple_found;
    for (const auto& [v, ij] : seeds) {
        double t1 = ij.first * h;
        double t2 = ij.second * h;
        if (sys.refine(t1, t2) >= 1e-9) continue;
        t1 = std::remainder(t1, kTwoPi);
        t2 = std::remainder(t2, kTwoPi);
        if (simple_locus_distance(t1, t2) > kWitnessSeparation) {
            out.numeric_witnesses.push_back({t1, t2});
            return;
        }
        if (simple_found.size() < 4) simple_found.push_back({t1, t2});
    }
    for (const auto& w : simple_found) out.numeric_witnesses.push_back(w);
}

/// Solutions on {a0} x T or T x {b0} for a polynomial in one of the variables.
SolutionSet one_variable_components(const LaurentPoly& p, bool in_a) {
    LaurentPoly q;
    for (const auto& [e, c] : p.terms()) q.add_term(c, in_a ? e[0] : e[1]);
    SolutionSet out;
    out.completeness = Completeness::WitnessOnly;
    for (const auto& pt : unit_points(solve_unit_circle(q))) {
        const double fixed = angle_of(pt.value);
        const double other = free_angle(fixed, in_a);
        out.numeric_witnesses.push_back(in_a ? std::array<double, 2>{fixed, other} : std::array<double, 2>{other, fixed});
    }
    return out;
}

bool point_nonsimple(const std::array<double, 2>& w, double separation) {
    return simple_locus_distance(w[0], w[1]) > separation;
}

/// Finite common zeros of p and q through the resultant in b.
SolutionSet finite_common_zeros(const LaurentPoly& p, const LaurentPoly& q, const IntPoly& r) {
    SolutionSet out;
    const auto cp = coefficients_in_b(p);
    const auto cq = coefficients_in_b(q);
    for (const auto& a0 : unit_points(solve_unit_circle(r))) {
        const bool p_vanishes = coefficients_vanish(cp, a0);
        const bool q_vanishes = coefficients_vanish(cq, a0);
        if (p_vanishes && q_vanishes) {
            const double ta = angle_of(a0.value);
            out.numeric_witnesses.push_back({ta, free_angle(ta, true)});
            out.completeness = Completeness::WitnessOnly;
            continue;
        }
        const auto& base = p_vanishes ? q : p;
        const auto& other = p_vanishes ? p : q;
        for (cld b0 : unit_b_roots(p_vanishes ? cq : cp, a0.value, base)) {
            if (std::abs(other.evaluate(a0.value, b0)) > 1e-9L) continue;
            add_pair(out, a0, b0, base);
        }
    }
    return out;
}

bool solution_nonsimple(const SolutionSet& s, double separation) {
    for (const auto& [a, b] : s.exact_pairs)
        if (!is_simple(a, b)) return true;
    for (const auto& w : s.numeric_witnesses)
        if (point_nonsimple(w, separation)) return true;
    for (const auto& a : s.exact_points)
        if (!is_simple(a)) return true;
    return !s.algebraic_points.empty();
}

std::string slot_list(const std::vector<int>& n) {
    std::string s = "[";
    for (std::size_t k = 0; k < n.size(); ++k) s += (k ? "," : "") + std::to_string(n[k]);
    return s + "]";
}

struct TagEntry {
    const char* tag;
    std::vector<int> n;
};

const std::vector<TagEntry>& conj_tags() {
    static const std::vector<TagEntry> t{
        {"Eq1", {0, 1, 1, 2, 2}}, {"Eq2", {0, 2, 2, 1, 1}}, {"Eq3", {1, 2, 1, 2, 0}}, {"Eq4", {1, 2, 1, 0, 2}}};
    return t;
}

const std::vector<TagEntry>& generic_tags() {
    static const std::vector<TagEntry> t{
        {"N.1.1", {0, 1, 1, 2, 2, 0, 0}},  {"N.1.2", {0, 1, 1, 0, 0, 2, 2}},  {"N.1.3", {0, 2, 2, 1, 1, 0, 0}},
        {"N.1.4", {0, 0, 0, 1, 1, 2, 2}},  {"N.1.5", {0, 2, 2, 0, 0, 1, 1}},  {"N.1.6", {0, 0, 0, 2, 2, 1, 1}},
        {"N.2.1", {2, 2, 0, 1, 0, 1, 0}},  {"N.2.2", {2, 2, 0, 0, 1, 0, 1}},  {"N.2.3", {2, 1, 0, 2, 0, 0, 1}},
        {"N.2.4", {2, 0, 1, 2, 0, 1, 0}},  {"N.2.5", {2, 1, 0, 0, 1, 2, 0}},  {"N.2.6", {2, 0, 1, 1, 0, 2, 0}},
        {"N.3.1", {1, 1, 0, 2, 0, 2, 0}},  {"N.3.2", {1, 1, 0, 0, 2, 0, 2}},  {"N.3.3", {1, 2, 0, 1, 0, 0, 2}},
        {"N.3.4", {1, 0, 2, 1, 0, 2, 0}},  {"N.3.5", {1, 2, 0, 0, 2, 1, 0}},  {"N.3.6", {1, 0, 2, 2, 0, 1, 0}},
        {"N.4.1", {1, 1, 1, 2, 0, 1, 0}},  {"N.4.2", {1, 1, 1, 0, 2, 1, 0}},  {"N.4.3", {1, 1, 1, 1, 0, 2, 0}},
        {"N.4.4", {1, 1, 1, 0, 1, 2, 0}},  {"N.4.5", {1, 2, 0, 1, 1, 1, 0}},  {"N.4.6", {1, 0, 2, 1, 1, 1, 0}},
        {"N.4.7", {1, 1, 0, 1, 1, 2, 0}},  {"N.4.8", {1, 0, 1, 1, 1, 2, 0}},  {"N.4.9", {1, 2, 0, 1, 0, 1, 1}},
        {"N.4.10", {1, 0, 2, 1, 0, 1, 1}}, {"N.4.11", {1, 1, 0, 2, 0, 1, 1}}, {"N.4.12", {1, 0, 1, 2, 0, 1, 1}},
        {"N.5", {0, 1, 1, 1, 1, 1, 1}}};
    return t;
}

/// The six NEGCONJ originals, as (constant, a + conj a, a^2 + conj a^2) coefficients.
const std::vector<std::pair<const char*, std::array<int, 3>>>& negconj_forms() {
    static const std::vector<std::pair<const char*, std::array<int, 3>>> t{
        {"NC.1", {0, 1, -2}}, {"NC.2", {0, -1, -2}}, {"NC.3", {0, 2, -1}},
        {"NC.4", {0, -2, -1}}, {"NC.5", {2, 1, -1}}, {"NC.6", {2, -1, -1}}};
    return t;
}

LaurentPoly cosine_combination(const std::array<int, 3>& c) {
    LaurentPoly p;
    p.add_term(c[0], 0);
    p.add_term(c[1], 1);
    p.add_term(c[1], -1);
    p.add_term(c[2], 2);
    p.add_term(c[2], -2);
    return p;
}

}  // namespace

const StructureInfo& structure_info(Structure s) {
    static const StructureInfo conj_info{Structure::CONJ, 5, 1, {"1", "a", "conj(a)", "a^2", "conj(a)^2"}, {{1, 2}, {3, 4}}};
    static const StructureInfo negconj_info{Structure::NEGCONJ, 7, 1,
                                            {"1", "a", "-a", "conj(a)", "-conj(a)", "-a^2", "-conj(a)^2"},
                                            {{1, 3}, {2, 4}, {5, 6}}};
    static const StructureInfo generic_info{Structure::GENERIC, 7, 2,
                                            {"1", "a", "conj(a)", "b", "conj(b)", "a*conj(b)", "b*conj(a)"},
                                            {{1, 2}, {3, 4}, {5, 6}}};
    static const StructureInfo real1_info{Structure::REAL1, 6, 1, {"1", "-1", "a", "-a", "conj(a)", "-conj(a)"}, {{2, 4}, {3, 5}}};
    switch (s) {
        case Structure::CONJ: return conj_info;
        case Structure::NEGCONJ: return negconj_info;
        case Structure::GENERIC: return generic_info;
        case Structure::REAL1: return real1_info;
    }
    throw std::logic_error("structure_info: unknown structure");
}

std::string structure_string(Structure s) {
    switch (s) {
        case Structure::CONJ: return "CONJ";
        case Structure::NEGCONJ: return "NEGCONJ";
        case Structure::GENERIC: return "GENERIC";
        case Structure::REAL1: return "REAL1";
    }
    return "?";
}

std::optional<Structure> parse_structure(const std::string& name) {
    for (auto s : {Structure::CONJ, Structure::NEGCONJ, Structure::GENERIC, Structure::REAL1}) {
        if (structure_string(s) == name) return s;
    }
    return std::nullopt;
}

bool CountArray::rank1_excluded() const {
    return std::any_of(n.begin(), n.end(), [](int x) { return x >= 3; });
}

int CountArray::n0() const {
    if (structure != Structure::REAL1) throw std::logic_error("n0 is defined for REAL1 only");
    return n[2] - n[3];
}

int CountArray::n8() const {
    if (structure != Structure::NEGCONJ) throw std::logic_error("n8 is defined for NEGCONJ only");
    return std::max(n[2], n[4]);
}

std::string CountArray::to_string() const { return slot_list(n); }

CountArray make_count_array(Structure s, std::vector<int> n) {
    const auto& info = structure_info(s);
    if (static_cast<int>(n.size()) != info.length) {
        throw std::invalid_argument(structure_string(s) + " arrays have length " + std::to_string(info.length));
    }
    int total = 0;
    for (int x : n) {
        if (x < 0) throw std::invalid_argument("count arrays are nonnegative");
        total += x;
    }
    if (total != 6) throw std::invalid_argument("count arrays sum to 6");
    return CountArray{s, std::move(n)};
}

CountArray parse_count_array(Structure s, const std::string& text) {
    std::string cleaned;
    for (char ch : text) cleaned += (ch == '[' || ch == ']' || ch == ',') ? ' ' : ch;
    std::istringstream is(cleaned);
    std::vector<int> n;
    int x;
    while (is >> x) n.push_back(x);
    if (!is.eof()) throw std::invalid_argument("malformed count array: " + text);
    return make_count_array(s, std::move(n));
}

CountArrayList enumerate_count_arrays(Structure s) {
    const int k = structure_info(s).length;
    CountArrayList out;
    std::vector<int> n(k, 0);
    auto rec = [&](auto&& self, int slot, int left) -> void {
        if (slot == k - 1) {
            n[slot] = left;
            CountArray a{s, n};
            (a.rank1_excluded() ? out.rank1_excluded : out.arrays).push_back(a);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            n[slot] = v;
            self(self, slot + 1, left - v);
        }
    };
    rec(rec, 0, 6);
    return out;
}

CountArray conjugate(const CountArray& array) {
    CountArray out = array;
    for (auto [x, y] : structure_info(array.structure).conjugate_pairs) std::swap(out.n[x], out.n[y]);
    return out;
}

CountArray canonical(const CountArray& array) { return std::min(array, conjugate(array)); }

LaurentPoly original_equation(const CountArray& array) {
    const auto& n = array.n;
    switch (array.structure) {
        case Structure::CONJ: {
            LaurentPoly p;
            p.add_term(n[0], 0);
            p.add_term(n[1], 1);
            p.add_term(n[2], -1);
            p.add_term(n[3], 2);
            p.add_term(n[4], -2);
            return p;
        }
        case Structure::NEGCONJ: {
            LaurentPoly p;
            p.add_term(n[0], 0);
            p.add_term(n[1] - n[2], 1);
            p.add_term(n[3] - n[4], -1);
            p.add_term(-n[5], 2);
            p.add_term(-n[6], -2);
            return p;
        }
        case Structure::GENERIC: {
            LaurentPoly p(2);
            p.add_term(n[0], 0, 0);
            p.add_term(n[1], 1, 0);
            p.add_term(n[2], -1, 0);
            p.add_term(n[3], 0, 1);
            p.add_term(n[4], 0, -1);
            p.add_term(n[5], 1, -1);
            p.add_term(n[6], -1, 1);
            return p;
        }
        case Structure::REAL1: {
            LaurentPoly p;
            p.add_term(n[0] - n[1], 0);
            p.add_term(n[2] - n[3], 1);
            p.add_term(n[4] - n[5], -1);
            return p;
        }
    }
    throw std::logic_error("original_equation: unknown structure");
}

PendingTerms pending_terms(const CountArray& array) {
    const auto& n = array.n;
    PendingTerms out;
    out.terms = LaurentPoly(structure_info(array.structure).variables);
    auto place = [&out](int d, int ea, int eb) {
        if (d > 0) out.terms.add_term(d, ea, eb);
        if (d < 0) out.terms.add_term(-d, -ea, -eb);
        out.amount += std::abs(d);
    };
    switch (array.structure) {
        case Structure::CONJ:
            place(n[1] - n[2], 1, 0);
            place(n[3] - n[4], 2, 0);
            break;
        case Structure::NEGCONJ:
            // Modified pending terms: with n8 = max(n3, n5) the groups
            // (n3 - n8) a and (n5 - n8) conj(a) absorb into a conjugate pair.
            place((n[1] - n[2]) - (n[3] - n[4]), 1, 0);
            place(n[6] - n[5], 2, 0);
            break;
        case Structure::GENERIC:
            place(n[1] - n[2], 1, 0);
            place(n[3] - n[4], 0, 1);
            place(n[5] - n[6], 1, -1);
            break;
        case Structure::REAL1:
            place((n[2] - n[3]) - (n[4] - n[5]), 1, 0);
            break;
    }
    return out;
}

std::string Relation::to_string() const {
    static const char* names = "abcd";
    std::string s(1, names[lhs]);
    s += sign < 0 ? " = -" : " = ";
    if (rhs < 0) return s + "1";
    std::string v(1, names[rhs]);
    return s + (conj_rhs ? "conj(" + v + ")" : v);
}

std::optional<RelationDnf> realness_cases(RealnessShape shape) {
    constexpr int a = 0;
    constexpr int b = 1;
    constexpr int c = 2;
    constexpr int d = 3;
    switch (shape) {
        case RealnessShape::Sum:
            return RelationDnf{{{a, 1, b, true}}, {{a, -1, b, false}}};
        case RealnessShape::Product:
            return RelationDnf{{{a, 1, b, true}}, {{a, -1, b, true}}};
        case RealnessShape::SumPlusProduct:
            return RelationDnf{{{a, 1, b, true}}, {{a, -1, -1, false}}, {{b, -1, -1, false}}};
        case RealnessShape::SumPlusMixedProduct:
            return RelationDnf{{{a, -1, b, false}}, {{a, 1, -1, false}}, {{b, -1, -1, false}}};
        case RealnessShape::SumPlusConjProduct:
            return RelationDnf{{{a, 1, b, true}}, {{a, 1, -1, false}}, {{b, 1, -1, false}}};
        case RealnessShape::SumEquality:
            return RelationDnf{{{a, 1, c, false}}, {{a, 1, d, false}}, {{a, -1, b, false}, {c, -1, d, false}}};
        case RealnessShape::Other:
            return std::nullopt;
    }
    return std::nullopt;
}

bool relation_holds(const Relation& r, std::span<const UnitValue> vars) {
    UnitValue v = r.rhs < 0 ? UnitValue() : (r.conj_rhs ? conj(vars[r.rhs]) : vars[r.rhs]);
    if (r.sign < 0) v = neg(v);
    return vars[r.lhs] == v;
}

bool dnf_holds(const RelationDnf& dnf, std::span<const UnitValue> vars) {
    return std::any_of(dnf.begin(), dnf.end(), [&](const auto& conj_clause) {
        return std::all_of(conj_clause.begin(), conj_clause.end(), [&](const Relation& r) { return relation_holds(r, vars); });
    });
}

std::string dnf_string(const RelationDnf& dnf) {
    std::string out;
    for (std::size_t k = 0; k < dnf.size(); ++k) {
        if (k) out += " or ";
        std::string clause;
        for (std::size_t j = 0; j < dnf[k].size(); ++j) clause += (j ? " and " : "") + dnf[k][j].to_string();
        out += dnf[k].size() > 1 ? "(" + clause + ")" : clause;
    }
    return out;
}

bool is_simple(const UnitValue& a) {
    if (a.is_exact()) {
        const auto q = a.den();
        return q == 1 || q == 2 || q == 3 || q == 4 || q == 6;
    }
    const double twelfths = a.turn() * 12;
    for (int k : {0, 2, 3, 4, 6, 8, 9, 10, 12}) {
        if (std::abs(twelfths - k) * kTwoPi / 12 <= kTolerance) return true;
    }
    return false;
}

bool is_simple(const UnitValue& a, const UnitValue& b) {
    if (!a.is_exact() || !b.is_exact()) return simple_locus_distance(angle_of(a), angle_of(b)) <= kTolerance;
    const UnitValue one;
    const UnitValue minus = neg(one);
    const UnitValue b2 = b * b;
    const UnitValue a2 = a * a;
    return a == b || a == conj(b) || a == neg(b) || a == neg(conj(b)) || a == b2 || a == neg(b2) || b == a2 ||
           b == neg(a2) || a == minus || b == minus || a == one || b == one;
}

double simple_locus_distance(double t1, double t2) {
    const double pi = std::numbers::pi;
    const double residuals[] = {t1 - t2,      t1 + t2,           t1 - t2 - pi,      t1 + t2 - pi,
                                t1 - 2 * t2,  t1 - 2 * t2 - pi,  t2 - 2 * t1,       t2 - 2 * t1 - pi,
                                t1 - pi,      t2 - pi,           t1,                t2};
    double best = pi;
    for (double r : residuals) best = std::min(best, circle_distance(r));
    return best;
}

std::string label_kind_string(LabelKind kind) {
    switch (kind) {
        case LabelKind::SimpleOnly: return "SimpleOnly";
        case LabelKind::NoSolution: return "NoSolution";
        case LabelKind::NonSimple: return "NonSimple";
    }
    return "?";
}

std::string CaseLabel::to_string() const {
    std::string s = label_kind_string(kind);
    if (tag) s += "(" + *tag + ")";
    return s;
}

std::vector<std::pair<std::string, CountArray>> tagged_arrays(Structure s) {
    if (s != Structure::CONJ && s != Structure::GENERIC) throw std::invalid_argument("no named arrays for " + structure_string(s));
    std::vector<std::pair<std::string, CountArray>> out;
    for (const auto& t : s == Structure::CONJ ? conj_tags() : generic_tags()) out.emplace_back(t.tag, make_count_array(s, t.n));
    return out;
}

std::optional<std::string> case_tag(const CountArray& array) {
    switch (array.structure) {
        case Structure::CONJ: {
            const CountArray conj_array = conjugate(array);
            for (const auto& t : conj_tags()) {
                if (array.n == t.n) return std::string(t.tag);
                if (conj_array.n == t.n) return std::string(t.tag) + "'";
            }
            return std::nullopt;
        }
        case Structure::NEGCONJ: {
            const LaurentPoly p = original_equation(array);
            for (const auto& [tag, coeffs] : negconj_forms()) {
                if (p == cosine_combination(coeffs)) return std::string(tag);
            }
            return std::nullopt;
        }
        case Structure::GENERIC: {
            const CountArray c = canonical(array);
            for (const auto& t : generic_tags()) {
                if (canonical(CountArray{Structure::GENERIC, t.n}) == c) return std::string(t.tag);
            }
            return std::nullopt;
        }
        case Structure::REAL1:
            return std::nullopt;
    }
    return std::nullopt;
}

SolutionSet solve_torus(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("identically zero");
    const bool da = p.depends_on(0);
    const bool db = p.depends_on(1);
    if (p.variables() == 1) return solve_unit_circle(p);
    if (!db) return one_variable_components(p, true);
    if (!da) return one_variable_components(p, false);
    const LaurentPoly q = conj(p);
    const IntPoly r = resultant_in_b(p, q);
    if (!r.is_zero()) return finite_common_zeros(p, q, r);
    SolutionSet out;
    out.completeness = Completeness::WitnessOnly;
    witness_search(GridSystem{{p}}, out);
    return out;
}

ArrayClassification classify_array(const CountArray& array) {
    ArrayClassification out;
    out.array = array;
    out.rank1_excluded = array.rank1_excluded();
    out.pending = pending_terms(array);
    const LaurentPoly orig = original_equation(array);
    const bool two_vars = structure_info(array.structure).variables == 2;

    if (orig.is_zero()) {
        // Every point of the torus solves the equation.
        out.original_nonsimple = true;
        out.label.kind = LabelKind::NonSimple;
        out.label.tag = case_tag(array);
        return out;
    }
    out.solutions = solve_torus(orig);
    const double separation = out.solutions.completeness == Completeness::WitnessOnly ? kWitnessSeparation : kPointSeparation;
    out.original_nonsimple = solution_nonsimple(out.solutions, separation);

    bool nonsimple = out.original_nonsimple;
    if (!two_vars && out.pending.amount > 0) {
        const LaurentPoly& t = out.pending.terms;
        out.pending_locus = solve_unit_circle(t - conj(t));
        nonsimple = solution_nonsimple(out.pending_locus, kPointSeparation);
        // NEGCONJ settles a non-simple pending locus on the original equation.
        if (array.structure == Structure::NEGCONJ) nonsimple = nonsimple && out.original_nonsimple;
    }
    if (nonsimple) {
        out.label.kind = LabelKind::NonSimple;
        out.label.tag = case_tag(array);
    } else {
        out.label.kind = out.solutions.empty() ? LabelKind::NoSolution : LabelKind::SimpleOnly;
    }
    return out;
}

std::vector<ArrayClassification> classify_arrays(const std::vector<CountArray>& arrays, int threads) {
    std::vector<ArrayClassification> out(arrays.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < arrays.size();) {
            try {
                out[k] = classify_array(arrays[k]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    const int n = std::min<int>(worker_count(threads), static_cast<int>(std::max<std::size_t>(arrays.size(), 1)));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

std::string common_kind_string(CommonKind kind) {
    switch (kind) {
        case CommonKind::NoCommon: return "NoCommon";
        case CommonKind::SimpleOnlyCommon: return "SimpleOnlyCommon";
        case CommonKind::NonSimpleCommon: return "NonSimpleCommon";
    }
    return "?";
}

CommonVerdict common_solutions(const LaurentPoly& p, const LaurentPoly& q) {
    if (p == q || p == conj(q)) {
        throw std::domain_error("identical or conjugate equations: use the residue maps (groupmap)");
    }
    if (p.is_zero() || q.is_zero()) throw std::domain_error("identically zero");
    CommonVerdict out;
    const bool two_vars = p.depends_on(1) || q.depends_on(1);
    if (!two_vars) {
        const IntPoly g = gcd(to_int_poly(p), to_int_poly(q));
        if (g.degree() >= 1) out.common = solve_unit_circle(g);
        // With two variables every common a-root carries a free b.
        const bool components = p.variables() == 2 || q.variables() == 2;
        for (const auto& pt : unit_points(out.common)) {
            const double ta = angle_of(pt.value);
            const std::array<double, 2> w{ta, components ? free_angle(ta, true) : 0.0};
            const bool simple = components ? !point_nonsimple(w, kWitnessSeparation) : pt.exact && is_simple(*pt.exact);
            if (!simple) {
                out.witness = w;
                break;
            }
        }
    } else {
        LaurentPoly p2(2);
        LaurentPoly q2(2);
        p2 += p;
        q2 += q;
        const IntPoly r = resultant_in_b(p2, q2);
        if (!r.is_zero()) {
            out.common = finite_common_zeros(p2, q2, r);
        } else {
            out.common.completeness = Completeness::WitnessOnly;
            witness_search(GridSystem{{p2, q2}}, out.common);
        }
        const double separation =
            out.common.completeness == Completeness::WitnessOnly ? kWitnessSeparation : kPointSeparation;
        for (const auto& [a, b] : out.common.exact_pairs) {
            if (!is_simple(a, b)) {
                out.witness = std::array<double, 2>{angle_of(a), angle_of(b)};
                break;
            }
        }
        if (!out.witness) {
            for (const auto& w : out.common.numeric_witnesses) {
                if (point_nonsimple(w, separation)) {
                    out.witness = w;
                    break;
                }
            }
        }
    }
    if (out.witness) {
        out.kind = CommonKind::NonSimpleCommon;
    } else {
        out.kind = out.common.empty() ? CommonKind::NoCommon : CommonKind::SimpleOnlyCommon;
    }
    return out;
}

CommonVerdict common_solutions(const CountArray& x, const CountArray& y) {
    if (x.structure != y.structure) throw std::invalid_argument("common_solutions: arrays of different structures");
    return common_solutions(original_equation(x), original_equation(y));
}

CosineSystem real_part_system(int a1, int ak, int aj, int ai) {
    CosineSystem out;
    const IntPoly lin{a1, ak - 2 * aj, -2 * ai};
    const IntPoly rad = IntPoly{1, 0, -1} * IntPoly{1, 0, -4};
    out.polynomial = lin * lin - BigInt(ai * ai) * rad;
    if (out.polynomial.is_zero()) return out;

    for (long double x0 : real_roots(out.polynomial)) {
        if (x0 < -1 - 1e-15L || x0 > 1 + 1e-15L) continue;
        CosineRoot root;
        root.minimal_polynomial = minimal_polynomial(out.polynomial, x0);
        // Refine in 50 digits on the minimal polynomial.
        const IntPoly& m = root.minimal_polynomial;
        const IntPoly dm = m.derivative();
        Float50 x = static_cast<Float50>(x0);
        for (int it = 0; it < 12 && m.degree() >= 1; ++it) {
            Float50 f = 0;
            Float50 df = 0;
            for (int k = m.degree(); k >= 0; --k) f = f * x + static_cast<Float50>(m.coeff(k));
            for (int k = dm.degree(); k >= 0; --k) df = df * x + static_cast<Float50>(dm.coeff(k));
            if (df == 0) break;
            x -= f / df;
        }
        root.value = x.convert_to<long double>();
        long double sep = 1e-6L;
        for (long double y : real_roots(m)) {
            if (std::abs(y - root.value) > 1e-15L) sep = std::min(sep, std::abs(y - root.value) / 4);
        }
        root.lo = root.value - sep;
        root.hi = root.value + sep;

        const Float50 xj = -2 * x;
        const Float50 xi = -(Float50(a1) + Float50(ak) * x + Float50(aj) * xj) / Float50(ai);
        root.xj = xj.convert_to<long double>();
        root.xi = xi.convert_to<long double>();
        const Float50 eps("1e-40");
        const bool bounded = abs(xj) <= 1 + eps && abs(xi) <= 1 + eps && abs(x) <= 1 + eps;
        if (bounded) {
            Float50 radicand = (1 - xj * xj) * (1 - x * x);
            if (radicand < 0) radicand = 0;
            const Float50 s = sqrt(radicand);
            root.plus_branch = abs(xi - (xj * x + s)) <= eps;
            root.minus_branch = abs(xi - (xj * x - s)) <= eps;
        }
        root.compatible = root.plus_branch || root.minus_branch;

        if (root.compatible) {
            // Every assignment of (x_k, x_j, x_i) to (cos t1, cos t2, cos(t1 - t2)).
            const double xs[3] = {static_cast<double>(root.value), static_cast<double>(root.xj), static_cast<double>(root.xi)};
            int perm[3] = {0, 1, 2};
            bool any = false;
            bool all_simple = true;
            do {
                const double c1 = std::clamp(xs[perm[0]], -1.0, 1.0);
                const double c2 = std::clamp(xs[perm[1]], -1.0, 1.0);
                for (int s1 : {1, -1}) {
                    for (int s2 : {1, -1}) {
                        const double t1 = s1 * std::acos(c1);
                        const double t2 = s2 * std::acos(c2);
                        if (std::abs(std::cos(t1 - t2) - xs[perm[2]]) > 1e-9) continue;
                        any = true;
                        all_simple = all_simple && simple_locus_distance(t1, t2) <= 1e-9;
                    }
                }
            } while (std::next_permutation(perm, perm + 3));
            root.simple = any && all_simple;
        }
        out.roots.push_back(root);
    }
    return out;
}

H2Relations h2_alphabet_relations() {
    H2Relations out;
    out.relations = {"b = -conj(a)", "b = -a^2", "a = -b^2"};
    out.degenerate = "a = -b or -1 in {a, b}";
    auto holds = [](int rel, const UnitValue& a, const UnitValue& b) {
        switch (rel) {
            case 0: return b == neg(conj(a));
            case 1: return b == neg(a * a);
            default: return a == neg(b * b);
        }
    };
    // Every solution of two relations has a^3 = +-1, so the 12th roots suffice.
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            H2PairSolutions s{i + 1, j + 1, {}};
            for (int x = 1; x < 12; ++x) {
                for (int y = 1; y < 12; ++y) {
                    if (x == y) continue;
                    const UnitValue a = root_of_unity(x, 12);
                    const UnitValue b = root_of_unity(y, 12);
                    if (holds(i, a, b) && holds(j, a, b)) s.pairs.emplace_back(a, b);
                }
            }
            out.combined.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace chm
