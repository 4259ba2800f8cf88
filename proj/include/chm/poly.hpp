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

#ifndef CHM_POLY_HPP
#define CHM_POLY_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chm/exactnum.hpp"

namespace chm {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial with integer coefficients; coeffs()[k] multiplies x^k.
/// The zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<std::int64_t> coeffs);

    static IntPoly monomial(int degree, const BigInt& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int k) const;
    const BigInt& leading() const { return c_.back(); }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly x, const IntPoly& y) { return x += y; }
    friend IntPoly operator-(IntPoly x, const IntPoly& y) { return x -= y; }
    friend IntPoly operator*(const IntPoly& x, const IntPoly& y);
    friend IntPoly operator*(const BigInt& k, const IntPoly& x);
    friend bool operator==(const IntPoly& x, const IntPoly& y) { return x.c_ == y.c_; }

    long double evaluate(long double x) const;
    std::complex<long double> evaluate(std::complex<long double> x) const;
    IntPoly derivative() const;
    /// x^deg p(1/x).
    IntPoly reversed() const;
    BigInt content() const;
    /// Divided by its content, with a positive leading coefficient.
    IntPoly primitive() const;

    std::string to_string(const std::string& var = "x") const;

 private:
    void trim();
    std::vector<BigInt> c_;
};

/// a / b when b divides a in Z[x].
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);
/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly squarefree_part(const IntPoly& p);
/// All complex roots of a squarefree polynomial, polished in long double.
std::vector<std::complex<long double>> complex_roots(const IntPoly& p);
/// Real roots of p, each listed once, ascending.
std::vector<long double> real_roots(const IntPoly& p);
/// The irreducible factor of p over Q (primitive, positive leading
/// coefficient) that vanishes at the given root of p.
IntPoly minimal_polynomial(const IntPoly& p, std::complex<long double> root);

/// Integer Laurent polynomial in one or two variables a, b.
class LaurentPoly {
 public:
    using Exponent = std::array<int, 2>;

    explicit LaurentPoly(int variables = 1);
    static LaurentPoly constant(std::int64_t c, int variables = 1);
    /// c * a^ea * b^eb.
    static LaurentPoly term(std::int64_t c, int ea, int eb = 0, int variables = 1);

    int variables() const { return vars_; }
    const std::map<Exponent, std::int64_t>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool depends_on(int var) const;
    int min_exponent(int var) const;
    int max_exponent(int var) const;
    std::int64_t coeff(int ea, int eb = 0) const;

    void add_term(std::int64_t c, int ea, int eb = 0);
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator*(std::int64_t k, const LaurentPoly& x);
    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.t_ == y.t_; }

    std::complex<long double> evaluate(std::complex<long double> a, std::complex<long double> b = 1) const;
    /// Exact value at roots of unity; throws std::domain_error for float inputs.
    CycSum evaluate_exact(const UnitValue& a, const UnitValue& b = UnitValue()) const;

    /// Terms in exponent order, written with a, b and negative powers,
    /// e.g. "2*a^-2 + 1 + a".
    std::string to_string() const;

 private:
    int vars_;
    std::map<Exponent, std::int64_t> t_;
};

/// Coefficient-level conjugation on the unit torus: exponents are negated.
LaurentPoly conj(const LaurentPoly& p);
/// Equal to its own conjugate, hence real-valued on the torus.
bool is_self_conjugate(const LaurentPoly& p);

/// One-variable p times a^(-min exponent).
IntPoly to_int_poly(const LaurentPoly& p);
/// Two-variable p with negative powers cleared, as a polynomial in b whose
/// coefficients are polynomials in a.
std::vector<IntPoly> coefficients_in_b(const LaurentPoly& p);
/// Resultant in b of the cleared forms of p and q, a polynomial in a.
IntPoly resultant_in_b(const LaurentPoly& p, const LaurentPoly& q);

/// A point e(i theta) whose cosine is algebraic of degree >= 1 but which is not a
/// root of unity.
struct AlgebraicPoint {
    IntPoly minimal_polynomial;  ///< in x = cos(theta)
    long double lo = 0;          ///< isolating interval for cos(theta)
    long double hi = 0;
    long double cos_value = 0;
    int sin_sign = 1;

    std::complex<long double> value() const;
};

enum class Completeness { Complete, WitnessOnly };

struct SolutionSet {
    /// One-variable roots of unity.
    std::vector<UnitValue> exact_points;
    /// Two-variable points (a, b) on which both coordinates are roots of unity.
    std::vector<std::pair<UnitValue, UnitValue>> exact_pairs;
    /// One-variable algebraic points.
    std::vector<AlgebraicPoint> algebraic_points;
    /// Numeric points (theta1, theta2) in radians.
    std::vector<std::array<double, 2>> numeric_witnesses;
    Completeness completeness = Completeness::Complete;

    bool empty() const {
        return exact_points.empty() && exact_pairs.empty() && algebraic_points.empty() && numeric_witnesses.empty();
    }
};

/// Unit-circle roots of a one-variable Laurent polynomial. Cyclotomic factors
/// are found exactly; the rest come from the self-reciprocal part, written as
/// a polynomial in cos(theta). Throws std::domain_error("identically zero")
/// on the zero polynomial.
SolutionSet solve_unit_circle(const LaurentPoly& p);

/// Unit-circle roots of an integer polynomial, as in solve_unit_circle.
SolutionSet solve_unit_circle(const IntPoly& p);

/// The Chebyshev form H with G(a) = a^m H((a + 1/a)/2) of a self-reciprocal
/// polynomial G of degree 2m.
IntPoly cosine_form(const IntPoly& self_reciprocal);

}  // namespace chm

#endif  // CHM_POLY_HPP
