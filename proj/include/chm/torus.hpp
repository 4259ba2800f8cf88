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

#ifndef CHM_TORUS_HPP
#define CHM_TORUS_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chm/poly.hpp"

namespace chm {

/// Alphabet structures whose row-pair inner products are counted.
enum class Structure { CONJ, NEGCONJ, GENERIC, REAL1 };

struct StructureInfo {
    Structure name;
    /// Count-array length.
    int length;
    /// 1 (a) or 2 (a, b).
    int variables;
    /// Formal product labels, one per slot.
    std::vector<std::string> products;
    /// Slot pairs (0-based) exchanged by formal conjugation.
    std::vector<std::pair<int, int>> conjugate_pairs;
};

const StructureInfo& structure_info(Structure s);
std::string structure_string(Structure s);
std::optional<Structure> parse_structure(const std::string& name);

struct CountArray {
    Structure structure = Structure::CONJ;
    std::vector<int> n;

    /// Some multiplicity is 3 or more.
    bool rank1_excluded() const;
    /// n3 - n4; REAL1 only.
    int n0() const;
    /// max(n3, n5); NEGCONJ only.
    int n8() const;
    /// "[0,1,1,2,2]".
    std::string to_string() const;

    friend bool operator==(const CountArray&, const CountArray&) = default;
    friend auto operator<=>(const CountArray& x, const CountArray& y) { return x.n <=> y.n; }
};

/// Validates the length, nonnegativity and total 6.
CountArray make_count_array(Structure s, std::vector<int> n);
/// Parses "[0,1,1,2,2]" or "0,1,1,2,2".
CountArray parse_count_array(Structure s, const std::string& text);

struct CountArrayList {
    /// All multiplicities at most 2, lexicographic order.
    std::vector<CountArray> arrays;
    std::vector<CountArray> rank1_excluded;
};

CountArrayList enumerate_count_arrays(Structure s);
CountArray conjugate(const CountArray& array);
/// Lexicographic minimum of the array and its conjugate.
CountArray canonical(const CountArray& array);

LaurentPoly original_equation(const CountArray& array);

struct PendingTerms {
    /// Residual terms, each with a positive coefficient.
    LaurentPoly terms;
    int amount = 0;
};

/// Conjugate-paired groups removed; NEGCONJ uses the modified pending terms.
PendingTerms pending_terms(const CountArray& array);

/// Sum shapes with a closed-form realness criterion.
enum class RealnessShape {
    Sum,                  ///< a + b
    Product,              ///< ab
    SumPlusProduct,       ///< a + b + ab
    SumPlusMixedProduct,  ///< a + b + a conj(b)
    SumPlusConjProduct,   ///< a + b + conj(a) conj(b)
    SumEquality,          ///< a + b = c + d
    Other,
};

/// var[lhs] = sign * (rhs < 0 ? 1 : conj?(var[rhs])); variables are a, b, c, d.
struct Relation {
    int lhs = 0;
    int sign = 1;
    int rhs = -1;
    bool conj_rhs = false;

    std::string to_string() const;
    friend bool operator==(const Relation&, const Relation&) = default;
};

/// Disjunction of conjunctions.
using RelationDnf = std::vector<std::vector<Relation>>;

/// The exact realness condition for a covered shape; std::nullopt means
/// Unsupported and the caller solves directly.
std::optional<RelationDnf> realness_cases(RealnessShape shape);
bool relation_holds(const Relation& r, std::span<const UnitValue> vars);
bool dnf_holds(const RelationDnf& dnf, std::span<const UnitValue> vars);
std::string dnf_string(const RelationDnf& dnf);

/// One-variable simplicity: a in {+-1, +-i, +-w, +-w^2}. Float values are
/// matched within kTolerance.
bool is_simple(const UnitValue& a);
/// Two-variable simplicity: one of a = b, a = conj b, a = -b, a = -conj b,
/// a = b^2, a = -b^2, b = a^2, b = -a^2, a = -1, b = -1, or the degenerate
/// a = 1, b = 1.
bool is_simple(const UnitValue& a, const UnitValue& b);
/// Angular distance of (theta1, theta2) to the nearest simple relation locus.
double simple_locus_distance(double theta1, double theta2);

enum class LabelKind { SimpleOnly, NoSolution, NonSimple };

struct CaseLabel {
    LabelKind kind = LabelKind::NoSolution;
    /// Named case for NonSimple labels, if any.
    std::optional<std::string> tag;

    std::string to_string() const;
};

std::string label_kind_string(LabelKind kind);

struct ArrayClassification {
    CountArray array;
    CaseLabel label;
    PendingTerms pending;
    /// Unit-torus solutions of the original equation.
    SolutionSet solutions;
    /// Points where the pending terms are real (one-variable structures).
    SolutionSet pending_locus;
    /// The original equation itself has a non-simple solution.
    bool original_nonsimple = false;
    bool rank1_excluded = false;
};

/// Case tag for an array (Eq1..Eq4', NC.1..6, N.1.1..N.5), by exact
/// match after conjugate canonicalization.
std::optional<std::string> case_tag(const CountArray& array);
/// The named CONJ (Eq1..Eq4) or GENERIC (N.1.1..N.5) arrays in listed orientation.
std::vector<std::pair<std::string, CountArray>> tagged_arrays(Structure s);

/// CONJ and REAL1 are labeled by the locus where the pending terms are real,
/// NEGCONJ additionally requires a non-simple solution of the original
/// equation, and GENERIC solves the original equation on the torus.
ArrayClassification classify_array(const CountArray& array);
/// classify_array over many arrays in parallel; output follows input order.
std::vector<ArrayClassification> classify_arrays(const std::vector<CountArray>& arrays, int threads = 0);

/// Grid resolution per axis for two-variable witness search.
inline constexpr int kWitnessGrid = 720;

/// Unit-torus solutions of a Laurent polynomial in one or two variables.
/// Two-variable curves yield numeric witnesses with WitnessOnly set.
SolutionSet solve_torus(const LaurentPoly& p);

enum class CommonKind { NoCommon, SimpleOnlyCommon, NonSimpleCommon };

struct CommonVerdict {
    CommonKind kind = CommonKind::NoCommon;
    SolutionSet common;
    /// A non-simple common point, as angles (theta1, theta2); theta2 = 0 for one variable.
    std::optional<std::array<double, 2>> witness;
};

std::string common_kind_string(CommonKind kind);

/// Common unit-torus solutions of two equations. Throws std::domain_error
/// when the equations are identical or conjugate; that case belongs to the
/// residue maps.
CommonVerdict common_solutions(const LaurentPoly& p, const LaurentPoly& q);
CommonVerdict common_solutions(const CountArray& x, const CountArray& y);

struct CosineRoot {
    IntPoly minimal_polynomial;
    long double value = 0;
    long double lo = 0;
    long double hi = 0;
    long double xj = 0;
    long double xi = 0;
    /// |x_j|, |x_i| <= 1 and one of the two branch relations holds.
    bool compatible = false;
    /// Branch signs that hold: x_i = x_j x_k + s sqrt((1 - x_j^2)(1 - x_k^2)).
    bool plus_branch = false;
    bool minus_branch = false;
    /// Every angle reconstruction is a simple point.
    bool simple = false;
};

struct CosineSystem {
    /// [a1 + (ak - 2aj)x - 2ai x^2]^2 - ai^2 (1 - x^2)(1 - 4x^2).
    IntPoly polynomial;
    /// Real roots in [-1, 1], ascending.
    std::vector<CosineRoot> roots;
};

/// The squared-elimination system for a1 + ak x_k + aj x_j + ai x_i = 0
/// with x_j = -2 x_k.
CosineSystem real_part_system(int a1, int ak, int aj, int ai);

struct H2PairSolutions {
    int first = 0;
    int second = 0;
    /// Pairs (a, b) with 1, a, b distinct that satisfy both relations.
    std::vector<std::pair<UnitValue, UnitValue>> pairs;
};

struct H2Relations {
    /// b = -conj(a), b = -a^2, a = -b^2.
    std::vector<std::string> relations;
    std::vector<H2PairSolutions> combined;
    std::string degenerate;
};

H2Relations h2_alphabet_relations();

}  // namespace chm

#endif  // CHM_TORUS_HPP
