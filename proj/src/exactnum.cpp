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

#include "chm/exactnum.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace chm {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("turn denominator overflow");
    }
    return static_cast<std::int64_t>(v);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Reduces a dense length-N exponent vector modulo Phi_N in place.
std::vector<std::int64_t> reduce_dense(std::int64_t order, std::vector<std::int64_t> v) {
    const auto& phi = cyclotomic_polynomial(order);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = v.size(); k-- > deg;) {
        std::int64_t c = v[k];
        if (c == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            v[k - deg + j] -= c * phi[j];
        }
        v[k] = 0;
    }
    v.resize(deg);
    return v;
}

}  // namespace

UnitValue UnitValue::root_of_unity(std::int64_t p, std::int64_t q) {
    if (q <= 0) {
        throw std::domain_error("root_of_unity: denominator must be positive");
    }
    UnitValue v;
    std::int64_t g = std::gcd(p, q);
    q /= g;
    p = mod_floor(p / g, q);
    v.p_ = p;
    v.q_ = q;
    double t = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
    v.re_ = std::cos(t);
    v.im_ = std::sin(t);
    return v;
}

UnitValue UnitValue::from_float(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im) || std::abs(re * re + im * im - 1.0) > kTolerance) {
        throw std::domain_error("from_float: value is not unimodular within 1e-9");
    }
    UnitValue v;
    v.exact_ = false;
    v.p_ = 0;
    v.q_ = 0;
    v.re_ = re;
    v.im_ = im;
    return v;
}

std::complex<double> UnitValue::to_complex() const { return {re_, im_}; }

std::complex<long double> UnitValue::to_complex_ld() const {
    if (!exact_) return {re_, im_};
    long double t = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(p_) / static_cast<long double>(q_);
    return {std::cos(t), std::sin(t)};
}

double UnitValue::turn() const {
    if (exact_) return static_cast<double>(p_) / static_cast<double>(q_);
    double t = std::atan2(im_, re_) / (2.0 * std::numbers::pi);
    return t < 0 ? t + 1.0 : t;
}

std::string UnitValue::to_string() const {
    std::ostringstream os;
    if (exact_) {
        os << "e(" << p_ << "/" << q_ << ")";
    } else {
        os.precision(17);
        os << "f(" << re_ << "," << im_ << ")";
    }
    return os.str();
}

bool operator==(const UnitValue& x, const UnitValue& y) {
    if (x.exact_ && y.exact_) return x.p_ == y.p_ && x.q_ == y.q_;
    return std::abs(x.to_complex() - y.to_complex()) <= kTolerance;
}

bool operator<(const UnitValue& x, const UnitValue& y) {
    if (x.exact_ && y.exact_) {
        return static_cast<i128>(x.p_) * y.q_ < static_cast<i128>(y.p_) * x.q_;
    }
    double tx = x.turn();
    double ty = y.turn();
    if (tx != ty) return tx < ty;
    return x.exact_ && !y.exact_;
}

UnitValue mul(const UnitValue& x, const UnitValue& y) {
    if (x.is_exact() && y.is_exact()) {
        i128 q = static_cast<i128>(x.den()) * y.den();
        i128 p = static_cast<i128>(x.num()) * y.den() + static_cast<i128>(y.num()) * x.den();
        i128 a = p;
        i128 b = q;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return UnitValue::root_of_unity(narrow(p / a), narrow(q / a));
    }
    std::complex<double> z = x.to_complex() * y.to_complex();
    z /= std::abs(z);
    return UnitValue::from_float(z.real(), z.imag());
}

UnitValue conj(const UnitValue& x) {
    if (x.is_exact()) return UnitValue::root_of_unity(-x.num(), x.den());
    std::complex<double> z = std::conj(x.to_complex());
    return UnitValue::from_float(z.real(), z.imag());
}

UnitValue neg(const UnitValue& x) { return mul(x, UnitValue::root_of_unity(1, 2)); }

std::int64_t euler_phi(std::int64_t n) {
    if (n <= 0) throw std::domain_error("euler_phi: argument must be positive");
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
    static std::mutex lock;
    static std::map<std::int64_t, std::vector<std::int64_t>> cache;
    if (n <= 0) throw std::domain_error("cyclotomic_polynomial: index must be positive");
    {
        std::lock_guard<std::mutex> guard(lock);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<std::int64_t> div = cyclotomic_polynomial(d);
        std::size_t dd = div.size() - 1;
        std::vector<std::int64_t> quot(num.size() - dd, 0);
        for (std::size_t k = num.size(); k-- > dd;) {
            std::int64_t c = num[k];
            quot[k - dd] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * div[j];
        }
        num = std::move(quot);
    }
    std::lock_guard<std::mutex> guard(lock);
    return cache.emplace(n, std::move(num)).first->second;
}

CycSum::CycSum(std::int64_t order) : order_(order) {
    if (order <= 0) throw std::domain_error("CycSum: order must be positive");
    if (order > kMaxOrder) throw OrderOverflow("order overflow: cyclotomic order exceeds 5040; use float mode");
    coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), 0);
}

CycSum CycSum::from_terms(std::int64_t order, std::span<const std::pair<std::int64_t, std::int64_t>> terms) {
    CycSum out(order);
    std::vector<std::int64_t> dense(static_cast<std::size_t>(order), 0);
    for (const auto& [k, c] : terms) dense[static_cast<std::size_t>(mod_floor(k, order))] += c;
    out.coeffs_ = reduce_dense(order, std::move(dense));
    return out;
}

CycSum CycSum::lift(std::int64_t order) const {
    if (order % order_ != 0) throw std::domain_error("CycSum::lift: target order must be a multiple");
    if (order == order_) return *this;
    std::int64_t step = order / order_;
    std::vector<std::pair<std::int64_t, std::int64_t>> terms;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) terms.emplace_back(static_cast<std::int64_t>(k) * step, coeffs_[k]);
    }
    return from_terms(order, terms);
}

std::complex<long double> CycSum::evaluate() const {
    std::complex<long double> acc = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        long double t = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(order_);
        acc += static_cast<long double>(coeffs_[k]) * std::complex<long double>(std::cos(t), std::sin(t));
    }
    return acc;
}

CycSum& CycSum::operator+=(const CycSum& other) {
    if (other.order_ != order_) {
        std::int64_t l = std::lcm(order_, other.order_);
        *this = lift(l);
        return *this += other.lift(l);
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

CycSum& CycSum::operator-=(const CycSum& other) { return *this += (-1) * other; }

CycSum operator*(std::int64_t k, CycSum x) {
    for (auto& c : x.coeffs_) c *= k;
    return x;
}

bool operator==(const CycSum& x, const CycSum& y) { return is_zero(x - y); }

std::string CycSum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[k] << "*z^" << k;
        first = false;
    }
    if (first) os << "0";
    os << " (z=e(1/" << order_ << "))";
    return os.str();
}

CycSum conj(const CycSum& x) {
    std::vector<std::pair<std::int64_t, std::int64_t>> terms;
    for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
        if (x.coeffs()[k] != 0) terms.emplace_back(-static_cast<std::int64_t>(k), x.coeffs()[k]);
    }
    return CycSum::from_terms(x.order(), terms);
}

std::int64_t common_order(std::span<const UnitValue> values, std::int64_t order_hint) {
    if (order_hint <= 0) throw std::domain_error("order hint must be positive");
    std::int64_t n = order_hint;
    for (const auto& v : values) {
        if (!v.is_exact()) throw std::domain_error("exact arithmetic requested on a float value");
        i128 l = std::lcm(static_cast<i128>(n), static_cast<i128>(v.den()));
        if (l > kMaxOrder) throw OrderOverflow("order overflow: common cyclotomic order exceeds 5040; use float mode");
        n = static_cast<std::int64_t>(l);
    }
    return n;
}

CycSum sum(std::span<const UnitValue> values, std::int64_t order_hint) {
    std::int64_t n = common_order(values, order_hint);
    std::vector<std::pair<std::int64_t, std::int64_t>> terms;
    terms.reserve(values.size());
    for (const auto& v : values) terms.emplace_back(v.num() * (n / v.den()), 1);
    return CycSum::from_terms(n, terms);
}

bool is_zero(const CycSum& x) {
    for (auto c : x.coeffs()) {
        if (c != 0) return false;
    }
    return true;
}

bool is_real(const CycSum& x) { return is_zero(x - conj(x)); }

}  // namespace chm
