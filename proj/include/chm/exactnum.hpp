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

#ifndef CHM_EXACTNUM_HPP
#define CHM_EXACTNUM_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chm {

inline constexpr double kTolerance = 1e-9;
inline constexpr std::int64_t kDefaultOrder = 24;
inline constexpr std::int64_t kMaxOrder = 5040;

/// Raised when the common cyclotomic order of a sum exceeds kMaxOrder.
class OrderOverflow : public std::overflow_error {
 public:
    using std::overflow_error::overflow_error;
};

/// A complex number of modulus one: either e(p/q) with 0 <= p < q in lowest
/// terms, or a floating point value within kTolerance of the unit circle.
class UnitValue {
 public:
    /// The value 1.
    UnitValue() = default;

    static UnitValue root_of_unity(std::int64_t p, std::int64_t q);
    static UnitValue from_float(double re, double im);

    bool is_exact() const { return exact_; }
    /// Numerator and denominator of the turn (exact values only).
    std::int64_t num() const { return p_; }
    std::int64_t den() const { return q_; }
    std::complex<double> to_complex() const;
    std::complex<long double> to_complex_ld() const;
    /// Turn in [0, 1) as a double, for either kind.
    double turn() const;

    std::string to_string() const;

    friend bool operator==(const UnitValue& x, const UnitValue& y);
    /// Canonical order: by turn, exact values before floats at equal turn.
    friend bool operator<(const UnitValue& x, const UnitValue& y);

 private:
    bool exact_ = true;
    std::int64_t p_ = 0;
    std::int64_t q_ = 1;
    double re_ = 1.0;
    double im_ = 0.0;
};

inline UnitValue root_of_unity(std::int64_t p, std::int64_t q) { return UnitValue::root_of_unity(p, q); }

UnitValue mul(const UnitValue& x, const UnitValue& y);
UnitValue conj(const UnitValue& x);
UnitValue neg(const UnitValue& x);
inline UnitValue operator*(const UnitValue& x, const UnitValue& y) { return mul(x, y); }

/// Integer combination of N-th roots of unity, stored in the power basis of
/// e(1/N) reduced modulo the N-th cyclotomic polynomial.
class CycSum {
 public:
    explicit CycSum(std::int64_t order = 1);

    /// Sum of coeff * e(k/N) over the given (exponent, coefficient) terms.
    static CycSum from_terms(std::int64_t order, std::span<const std::pair<std::int64_t, std::int64_t>> terms);

    std::int64_t order() const { return order_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    /// Re-expresses the value at an order divisible by the current one.
    CycSum lift(std::int64_t order) const;
    std::complex<long double> evaluate() const;

    CycSum& operator+=(const CycSum& other);
    CycSum& operator-=(const CycSum& other);
    friend CycSum operator+(CycSum x, const CycSum& y) { return x += y; }
    friend CycSum operator-(CycSum x, const CycSum& y) { return x -= y; }
    friend CycSum operator*(std::int64_t k, CycSum x);
    friend bool operator==(const CycSum& x, const CycSum& y);

    std::string to_string() const;

 private:
    std::int64_t order_;
    std::vector<std::int64_t> coeffs_;
};

CycSum conj(const CycSum& x);

/// Accumulates exact unit values into a CycSum at order lcm(order_hint, dens).
CycSum sum(std::span<const UnitValue> values, std::int64_t order_hint = 1);

bool is_zero(const CycSum& x);
bool is_real(const CycSum& x);

std::int64_t euler_phi(std::int64_t n);
/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

/// Common order of a set of exact values; throws OrderOverflow past kMaxOrder.
std::int64_t common_order(std::span<const UnitValue> values, std::int64_t order_hint = 1);

}  // namespace chm

#endif  // CHM_EXACTNUM_HPP
