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

#include "chm/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace chm {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

long double to_ld(const BigInt& x) { return x.convert_to<long double>(); }

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    const BigInt lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        const BigInt la = a.leading();
        a = lb * a - la * (IntPoly::monomial(shift) * b);
    }
    return a;
}

IntPoly chebyshev(int k) {
    IntPoly t0{1};
    IntPoly t1{0, 1};
    if (k == 0) return t0;
    for (int j = 1; j < k; ++j) {
        IntPoly t2 = IntPoly{0, 2} * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

std::complex<long double> polish(const IntPoly& p, const IntPoly& dp, std::complex<long double> z) {
    for (int it = 0; it < 60; ++it) {
        auto d = dp.evaluate(z);
        if (std::abs(d) == 0) break;
        auto step = p.evaluate(z) / d;
        z -= step;
        if (std::abs(step) <= 1e-19L * std::max<long double>(1, std::abs(z))) break;
    }
    return z;
}

std::string power_string(const char* var, int e) {
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<std::int64_t> coeffs) {
    for (auto c : coeffs) c_.emplace_back(c);
    trim();
}

IntPoly IntPoly::monomial(int degree, const BigInt& c) {
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return c_[static_cast<std::size_t>(k)];
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<BigInt> out(x.c_.size() + y.c_.size() - 1);
    for (std::size_t i = 0; i < x.c_.size(); ++i)
        for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] += x.c_[i] * y.c_[j];
    return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& k, const IntPoly& x) {
    std::vector<BigInt> out = x.c_;
    for (auto& c : out) c *= k;
    return IntPoly(std::move(out));
}

long double IntPoly::evaluate(long double x) const {
    long double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_ld(*it);
    return acc;
}

std::complex<long double> IntPoly::evaluate(std::complex<long double> x) const {
    std::complex<long double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_ld(*it);
    return acc;
}

IntPoly IntPoly::derivative() const {
    std::vector<BigInt> out;
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * static_cast<long>(k));
    return IntPoly(std::move(out));
}

IntPoly IntPoly::reversed() const {
    std::vector<BigInt> out(c_.rbegin(), c_.rend());
    return IntPoly(std::move(out));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : c_) g = boost::multiprecision::gcd(g, abs_big(c));
    return g;
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (leading() < 0) g = -g;
    std::vector<BigInt> out = c_;
    for (auto& c : out) c /= g;
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        BigInt c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        BigInt mag = abs_big(c);
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag;
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    IntPoly rem = a;
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        if (rem.leading() % b.leading() != 0) return std::nullopt;
        BigInt t = rem.leading() / b.leading();
        q[static_cast<std::size_t>(shift)] = t;
        rem -= IntPoly::monomial(shift, t) * b;
    }
    if (!rem.is_zero()) return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = a.primitive();
    IntPoly y = b.primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y).primitive();
        x = y;
        y = r;
    }
    return x.primitive();
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() < 1) return p.primitive();
    IntPoly g = gcd(p, p.derivative());
    return exact_divide(p.primitive(), g)->primitive();
}

std::vector<std::complex<long double>> complex_roots(const IntPoly& p) {
    const int n = p.degree();
    std::vector<std::complex<long double>> out;
    if (n < 1) return out;
    if (n == 1) {
        out.emplace_back(-to_ld(p.coeff(0)) / to_ld(p.coeff(1)));
        return out;
    }
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    const long double lead = to_ld(p.leading());
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = static_cast<double>(-to_ld(p.coeff(i)) / lead);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    const IntPoly dp = p.derivative();
    for (int i = 0; i < n; ++i) {
        auto ev = solver.eigenvalues()[i];
        out.push_back(polish(p, dp, {ev.real(), ev.imag()}));
    }
    return out;
}

std::vector<long double> real_roots(const IntPoly& p) {
    std::vector<long double> out;
    const IntPoly q = squarefree_part(p);
    for (const auto& z : complex_roots(q)) {
        if (std::abs(z.imag()) > 1e-7L * std::max<long double>(1, std::abs(z))) continue;
        out.push_back(z.real());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](long double x, long double y) { return std::abs(x - y) < 1e-12L; }),
              out.end());
    return out;
}

IntPoly minimal_polynomial(const IntPoly& p, std::complex<long double> root) {
    const IntPoly q = squarefree_part(p);
    const int n = q.degree();
    if (n <= 1) return q;
    auto roots = complex_roots(q);
    std::size_t target = 0;
    for (std::size_t k = 1; k < roots.size(); ++k) {
        if (std::abs(roots[k] - root) < std::abs(roots[target] - root)) target = k;
    }
    if (n > 20) return q;
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (k != target) others.push_back(k);
    }
    const long double lead = to_ld(q.leading());
    // Candidate factors by increasing degree: products over root subsets
    // containing the target whose scaled coefficients are integers.
    for (int size = 0; size < n; ++size) {
        std::vector<bool> pick(others.size(), false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            std::vector<std::complex<long double>> c{1};
            auto multiply = [&c](std::complex<long double> r) {
                c.push_back(0);
                for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
                c[0] = -r * c[0];
            };
            multiply(roots[target]);
            for (std::size_t k = 0; k < others.size(); ++k)
                if (pick[k]) multiply(roots[others[k]]);
            std::vector<BigInt> ints;
            bool ok = true;
            for (const auto& v : c) {
                const long double scaled = v.real() * lead;
                const long double rounded = std::round(scaled);
                if (std::abs(v.imag() * lead) > 1e-6L || std::abs(scaled - rounded) > 1e-6L * std::max<long double>(1, std::abs(scaled))) {
                    ok = false;
                    break;
                }
                ints.emplace_back(static_cast<long long>(rounded));
            }
            if (!ok) continue;
            IntPoly f = IntPoly(std::move(ints)).primitive();
            if (exact_divide(q, f)) return f;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return q;
}

LaurentPoly::LaurentPoly(int variables) : vars_(variables) {
    if (variables != 1 && variables != 2) throw std::invalid_argument("LaurentPoly: 1 or 2 variables");
}

LaurentPoly LaurentPoly::constant(std::int64_t c, int variables) {
    LaurentPoly p(variables);
    p.add_term(c, 0, 0);
    return p;
}

LaurentPoly LaurentPoly::term(std::int64_t c, int ea, int eb, int variables) {
    LaurentPoly p(variables);
    p.add_term(c, ea, eb);
    return p;
}

bool LaurentPoly::depends_on(int var) const {
    return std::any_of(t_.begin(), t_.end(), [var](const auto& kv) { return kv.first[var] != 0; });
}

int LaurentPoly::min_exponent(int var) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : t_) {
        m = first ? e[var] : std::min(m, e[var]);
        first = false;
    }
    return m;
}

int LaurentPoly::max_exponent(int var) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : t_) {
        m = first ? e[var] : std::max(m, e[var]);
        first = false;
    }
    return m;
}

std::int64_t LaurentPoly::coeff(int ea, int eb) const {
    auto it = t_.find({ea, eb});
    return it == t_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(std::int64_t c, int ea, int eb) {
    if (vars_ == 1 && eb != 0) throw std::invalid_argument("LaurentPoly: b exponent in a one-variable polynomial");
    if (c == 0) return;
    auto& slot = t_[{ea, eb}];
    slot += c;
    if (slot == 0) t_.erase({ea, eb});
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    vars_ = std::max(vars_, o.vars_);
    for (const auto& [e, c] : o.t_) add_term(c, e[0], e[1]);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    vars_ = std::max(vars_, o.vars_);
    for (const auto& [e, c] : o.t_) add_term(-c, e[0], e[1]);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly out(std::max(x.vars_, y.vars_));
    for (const auto& [ex, cx] : x.t_)
        for (const auto& [ey, cy] : y.t_) out.add_term(cx * cy, ex[0] + ey[0], ex[1] + ey[1]);
    return out;
}

LaurentPoly operator*(std::int64_t k, const LaurentPoly& x) {
    LaurentPoly out(x.vars_);
    for (const auto& [e, c] : x.t_) out.add_term(k * c, e[0], e[1]);
    return out;
}

std::complex<long double> LaurentPoly::evaluate(std::complex<long double> a, std::complex<long double> b) const {
    std::complex<long double> acc = 0;
    for (const auto& [e, c] : t_) acc += static_cast<long double>(c) * std::pow(a, e[0]) * std::pow(b, e[1]);
    return acc;
}

CycSum LaurentPoly::evaluate_exact(const UnitValue& a, const UnitValue& b) const {
    if (!a.is_exact() || !b.is_exact()) throw std::domain_error("evaluate_exact: exact values required");
    const std::int64_t order = std::lcm(a.den(), b.den());
    CycSum acc(order);
    for (const auto& [e, c] : t_) {
        const std::int64_t turn = a.num() * (order / a.den()) * e[0] + b.num() * (order / b.den()) * e[1];
        const UnitValue v = root_of_unity(turn, order);
        acc += c * sum(std::span<const UnitValue>(&v, 1), order);
    }
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : t_) {
        const bool negative = c < 0;
        const std::int64_t mag = negative ? -c : c;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        std::vector<std::string> factors;
        if (e[0] != 0) factors.push_back(power_string("a", e[0]));
        if (e[1] != 0) factors.push_back(power_string("b", e[1]));
        if (factors.empty()) {
            out += std::to_string(mag);
            continue;
        }
        if (mag != 1) out += std::to_string(mag) + "*";
        for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? "*" : "") + factors[k];
    }
    return out;
}

LaurentPoly conj(const LaurentPoly& p) {
    LaurentPoly out(p.variables());
    for (const auto& [e, c] : p.terms()) out.add_term(c, -e[0], -e[1]);
    return out;
}

bool is_self_conjugate(const LaurentPoly& p) { return conj(p) == p; }

IntPoly to_int_poly(const LaurentPoly& p) {
    if (p.depends_on(1)) throw std::domain_error("to_int_poly: one-variable polynomial required");
    if (p.is_zero()) return {};
    const int lo = p.min_exponent(0);
    std::vector<BigInt> c(static_cast<std::size_t>(p.max_exponent(0) - lo) + 1);
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0] - lo)] = v;
    return IntPoly(std::move(c));
}

std::vector<IntPoly> coefficients_in_b(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    const int la = p.min_exponent(0);
    const int lb = p.min_exponent(1);
    std::vector<std::vector<BigInt>> c(static_cast<std::size_t>(p.max_exponent(1) - lb) + 1,
                                       std::vector<BigInt>(static_cast<std::size_t>(p.max_exponent(0) - la) + 1));
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[1] - lb)][static_cast<std::size_t>(e[0] - la)] = v;
    std::vector<IntPoly> out;
    for (auto& row : c) out.emplace_back(std::move(row));
    return out;
}

IntPoly resultant_in_b(const LaurentPoly& p, const LaurentPoly& q) {
    const auto P = coefficients_in_b(p);
    const auto Q = coefficients_in_b(q);
    if (P.empty() || Q.empty()) return {};
    const int m = static_cast<int>(P.size()) - 1;
    const int n = static_cast<int>(Q.size()) - 1;
    const int size = m + n;
    if (size == 0) return IntPoly{1};
    // Sylvester matrix, highest power first.
    std::vector<std::vector<IntPoly>> s(size, std::vector<IntPoly>(size));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[r][r + k] = P[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[n + r][r + k] = Q[static_cast<std::size_t>(n - k)];
    // Fraction-free (Bareiss) elimination; every division is exact.
    IntPoly prev{1};
    bool negate = false;
    for (int k = 0; k + 1 < size; ++k) {
        if (s[k][k].is_zero()) {
            int r = k + 1;
            while (r < size && s[r][k].is_zero()) ++r;
            if (r == size) return {};
            std::swap(s[k], s[r]);
            negate = !negate;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                IntPoly num = s[i][j] * s[k][k] - s[i][k] * s[k][j];
                s[i][j] = *exact_divide(num, prev);
            }
            s[i][k] = IntPoly{};
        }
        prev = s[k][k];
    }
    IntPoly det = s[size - 1][size - 1];
    return negate ? BigInt(-1) * det : det;
}

std::complex<long double> AlgebraicPoint::value() const {
    const long double s = std::sqrt(std::max<long double>(0, 1 - cos_value * cos_value));
    return {cos_value, sin_sign * s};
}

IntPoly cosine_form(const IntPoly& g) {
    if (g.degree() % 2 != 0) throw std::domain_error("cosine_form: even degree required");
    const int m = g.degree() / 2;
    IntPoly h{};
    h += IntPoly::monomial(0, g.coeff(m));
    for (int k = 1; k <= m; ++k) h += BigInt(2 * g.coeff(m + k)) * chebyshev(k);
    return h;
}

SolutionSet solve_unit_circle(const IntPoly& p_in) {
    if (p_in.is_zero()) throw std::domain_error("identically zero");
    // Drop the factor x^k; zero is not on the unit circle.
    std::vector<BigInt> c = p_in.coeffs();
    c.erase(c.begin(), std::find_if(c.begin(), c.end(), [](const BigInt& x) { return x != 0; }));
    IntPoly q = IntPoly(std::move(c)).primitive();

    SolutionSet out;
    const int deg = q.degree();
    const std::int64_t bound = std::max<std::int64_t>(24, 2 * static_cast<std::int64_t>(deg) * deg + 2);
    for (std::int64_t d = 1; d <= bound && q.degree() > 0; ++d) {
        if (euler_phi(d) > q.degree()) continue;
        std::vector<BigInt> phi;
        for (auto v : cyclotomic_polynomial(d)) phi.emplace_back(v);
        const IntPoly cyc(std::move(phi));
        bool divides = false;
        while (auto quotient = exact_divide(q, cyc)) {
            q = *quotient;
            divides = true;
        }
        if (!divides) continue;
        for (std::int64_t k = 0; k < d; ++k) {
            if (std::gcd(k, d) == 1) out.exact_points.push_back(root_of_unity(k, d));
        }
    }
    std::sort(out.exact_points.begin(), out.exact_points.end());

    if (q.degree() < 2) return out;
    const IntPoly g = gcd(q, q.reversed());
    if (g.degree() < 2) return out;
    if (!(g == g.reversed()) && !(g == BigInt(-1) * g.reversed())) {
        throw std::logic_error("solve_unit_circle: reciprocal gcd is not palindromic");
    }
    const IntPoly h = squarefree_part(cosine_form(g));
    for (long double x : real_roots(h)) {
        if (std::abs(x) >= 1) continue;
        IntPoly minpoly = minimal_polynomial(h, x);
        long double sep = 1e-6L;
        for (long double y : real_roots(minpoly)) {
            if (std::abs(y - x) > 1e-15L) sep = std::min(sep, std::abs(y - x) / 4);
        }
        for (int sign : {1, -1}) {
            AlgebraicPoint pt;
            pt.minimal_polynomial = minpoly;
            pt.cos_value = x;
            pt.lo = x - sep;
            pt.hi = x + sep;
            pt.sin_sign = sign;
            out.algebraic_points.push_back(pt);
        }
    }
    return out;
}

SolutionSet solve_unit_circle(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("identically zero");
    return solve_unit_circle(to_int_poly(p));
}

}  // namespace chm
