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

#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gtest/gtest.h"

using namespace chm;
using Quad = boost::multiprecision::cpp_bin_float_quad;

namespace {

// Independent high-precision evaluation of a list of exact unit values.
std::pair<Quad, Quad> quad_sum(const std::vector<UnitValue>& values) {
    Quad re = 0;
    Quad im = 0;
    const Quad two_pi = 2 * boost::math::constants::pi<Quad>();
    for (const auto& v : values) {
        Quad t = two_pi * Quad(v.num()) / Quad(v.den());
        re += cos(t);
        im += sin(t);
    }
    return {re, im};
}

// Denominators divide 2520, so every common order stays below the cap.
UnitValue random_root(std::mt19937_64& rng, int max_den) {
    std::vector<int> dens;
    for (int d = 1; d <= max_den; ++d)
        if (2520 % d == 0) dens.push_back(d);
    int q = dens[rng() % dens.size()];
    std::uniform_int_distribution<int> num(0, q - 1);
    return root_of_unity(num(rng), q);
}

// A list that is zero about half the time: a union of full cosets of d-th
// roots, optionally with one term perturbed.
std::vector<UnitValue> random_instance(std::mt19937_64& rng) {
    std::vector<UnitValue> out;
    std::uniform_int_distribution<int> pieces(1, 3);
    std::uniform_int_distribution<int> dsel(2, 6);
    const int n = pieces(rng);
    for (int k = 0; k < n; ++k) {
        int d = dsel(rng);
        UnitValue shift = random_root(rng, 12);
        for (int j = 0; j < d; ++j) out.push_back(shift * root_of_unity(j, d));
    }
    if (rng() % 2 == 0) out.back() = random_root(rng, 12);
    return out;
}

}  // namespace

TEST(exactnum, root_of_unity_reduces_turns) {
    EXPECT_EQ(root_of_unity(2, 6), root_of_unity(1, 3));
    EXPECT_EQ(root_of_unity(-1, 3), root_of_unity(2, 3));
    EXPECT_EQ(root_of_unity(7, 4).num(), 3);
    EXPECT_EQ(root_of_unity(7, 4).den(), 4);
    EXPECT_THROW(root_of_unity(1, 0), std::domain_error);
    auto w = root_of_unity(1, 3);
    EXPECT_EQ(w * w * w, UnitValue());
    auto i = root_of_unity(1, 4);
    EXPECT_NEAR(i.to_complex().imag(), 1.0, 1e-15);
}

TEST(exactnum, mul_and_conj) {
    auto w = root_of_unity(1, 3);
    EXPECT_EQ(w * root_of_unity(2, 3), UnitValue());
    EXPECT_EQ(root_of_unity(1, 4) * root_of_unity(1, 4), root_of_unity(1, 2));
    EXPECT_EQ(root_of_unity(1, 5) * root_of_unity(1, 7), root_of_unity(12, 35));
    EXPECT_EQ(conj(w), root_of_unity(2, 3));
    EXPECT_EQ(conj(UnitValue()), UnitValue());
    EXPECT_EQ(conj(root_of_unity(1, 5)), root_of_unity(4, 5));
}

TEST(exactnum, float_values) {
    auto f = UnitValue::from_float(0.6, 0.8);
    EXPECT_FALSE(f.is_exact());
    EXPECT_THROW(UnitValue::from_float(0.6, 0.81), std::domain_error);
    auto g = f * root_of_unity(1, 4);
    EXPECT_FALSE(g.is_exact());
    EXPECT_NEAR(g.to_complex().real(), -0.8, 1e-12);
    EXPECT_EQ(UnitValue::from_float(-0.5, std::sqrt(3.0) / 2), root_of_unity(1, 3));
}

TEST(exactnum, sums_and_zero_tests) {
    std::vector<UnitValue> cube{UnitValue(), root_of_unity(1, 3), root_of_unity(2, 3)};
    EXPECT_TRUE(is_zero(sum(cube)));
    std::vector<UnitValue> mixed{UnitValue(), root_of_unity(1, 2), root_of_unity(1, 4),
                                 root_of_unity(3, 4), UnitValue(), root_of_unity(1, 2)};
    EXPECT_TRUE(is_zero(sum(mixed)));
    std::vector<UnitValue> two{UnitValue(), UnitValue()};
    EXPECT_FALSE(is_zero(sum(two)));
    // 2 + 2w + 2w^2 in coefficient form at the default order.
    std::vector<std::pair<std::int64_t, std::int64_t>> terms{{0, 2}, {8, 2}, {16, 2}};
    EXPECT_TRUE(is_zero(CycSum::from_terms(kDefaultOrder, terms)));
    EXPECT_EQ(sum(cube).order(), 3);
    EXPECT_EQ(sum(cube, kDefaultOrder).order(), 24);
}

TEST(exactnum, realness) {
    auto a = root_of_unity(1, 5);
    std::vector<UnitValue> pair{a, conj(a)};
    EXPECT_TRUE(is_real(sum(pair)));
    std::vector<UnitValue> skew{a, a * a};
    EXPECT_FALSE(is_real(sum(skew)));
    std::vector<UnitValue> ii{root_of_unity(1, 4), root_of_unity(1, 4)};
    EXPECT_FALSE(is_real(sum(ii)));
}

TEST(exactnum, order_overflow) {
    std::vector<UnitValue> big{root_of_unity(1, 71), root_of_unity(1, 73)};
    EXPECT_THROW(sum(big), OrderOverflow);
    std::vector<UnitValue> ok{root_of_unity(1, 7), root_of_unity(1, 720)};
    EXPECT_NO_THROW(sum(ok));
}

TEST(exactnum, cyclotomic_polynomials) {
    EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(105).size(), 49u);
    EXPECT_EQ(cyclotomic_polynomial(105)[7], -2);
    for (std::int64_t n = 1; n <= 60; ++n) {
        EXPECT_EQ(static_cast<std::int64_t>(cyclotomic_polynomial(n).size()) - 1, euler_phi(n));
    }
}

TEST(exactnum_property, group_laws_on_random_pairs) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1'000'000; ++t) {
        auto x = random_root(rng, 60);
        auto y = random_root(rng, 60);
        auto z = random_root(rng, 60);
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(conj(x * y), conj(x) * conj(y));
        ASSERT_EQ(x * conj(x), UnitValue());
    }
}

TEST(exactnum_property, is_zero_matches_quad_evaluation) {
    std::mt19937_64 rng(12);
    int zeros = 0;
    for (int t = 0; t < 10'000; ++t) {
        auto values = random_instance(rng);
        auto [re, im] = quad_sum(values);
        bool oracle = abs(re) < 1e-9 && abs(im) < 1e-9;
        CycSum s = sum(values);
        ASSERT_EQ(is_zero(s), oracle);
        zeros += oracle ? 1 : 0;
        CycSum c = conj(s);
        ASSERT_EQ(conj(c).coeffs(), s.coeffs());
    }
    EXPECT_GT(zeros, 1000);
    EXPECT_LT(zeros, 9000);
}

TEST(exactnum_property, is_real_matches_quad_evaluation) {
    std::mt19937_64 rng(13);
    int reals = 0;
    for (int t = 0; t < 10'000; ++t) {
        std::vector<UnitValue> values;
        int n = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < n; ++k) {
            auto v = random_root(rng, 12);
            values.push_back(v);
            if (rng() % 3 != 0) values.push_back(conj(v));
        }
        auto [re, im] = quad_sum(values);
        bool oracle = abs(im) < 1e-9;
        ASSERT_EQ(is_real(sum(values)), oracle);
        reals += oracle ? 1 : 0;
    }
    EXPECT_GT(reals, 500);
}
