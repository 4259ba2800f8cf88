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

#include "chm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

#include "chm/census.hpp"
#include "chm/equiv.hpp"
#include "chm/groupmap.hpp"
#include "chm/torus.hpp"

namespace chm {

using Json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& what, int l, int c)
    : std::runtime_error(l > 0 ? "line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what : what),
      line(l),
      column(c) {}

namespace {

const std::vector<std::pair<std::string, UnitValue>>& sugar() {
    static const std::vector<std::pair<std::string, UnitValue>> s{
        {"1", root_of_unity(0, 1)},  {"-1", root_of_unity(1, 2)}, {"i", root_of_unity(1, 4)},   {"-i", root_of_unity(3, 4)},
        {"w", root_of_unity(1, 3)},  {"w2", root_of_unity(2, 3)}, {"-w", root_of_unity(5, 6)},  {"-w2", root_of_unity(1, 6)},
    };
    return s;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

// Splits on commas outside parentheses, so f(re,im) survives.
std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

Json matrix_json(const Matrix6& m) {
    Json rows = Json::array();
    for (int r = 0; r < kN; ++r) {
        Json row = Json::array();
        for (int c = 0; c < kN; ++c) row.push_back(format_token(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json monomial_json(const Monomial& m) {
    Json perm = Json::array();
    Json phase = Json::array();
    for (int k = 0; k < kN; ++k) {
        perm.push_back(m.perm[k] + 1);
        phase.push_back(format_token(m.phase[k]));
    }
    return Json{{"perm", perm}, {"phase", phase}};
}

Json certificate_json(const EquivalenceCertificate& c, bool verified) {
    return Json{{"mode", c.mode == EquivMode::Complex ? "complex" : "perm"},
                {"left", monomial_json(c.left)},
                {"right", monomial_json(c.right)},
                {"advisory", c.advisory},
                {"verified", verified}};
}

std::string witness_kind_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::Rank1_2x3: return "rank1_2x3";
        case WitnessKind::Hadamard3x3: return "hadamard_3x3";
        case WitnessKind::Pattern1oo2: return "pattern_1oo2";
    }
    return "";
}

Json witness_json(const Matrix6& m, const std::optional<ScanWitness>& w) {
    if (!w) return nullptr;
    return Json{{"kind", witness_kind_string(w->kind)}, {"rows", w->rows}, {"cols", w->cols}, {"verified", verify_witness(m, *w)}};
}

Json solutions_json(const SolutionSet& s) {
    Json points = Json::array();
    for (const auto& p : s.exact_points) points.push_back(format_token(p));
    Json pairs = Json::array();
    for (const auto& [a, b] : s.exact_pairs) pairs.push_back(Json::array({format_token(a), format_token(b)}));
    Json algebraic = Json::array();
    for (const auto& p : s.algebraic_points) {
        algebraic.push_back(Json{{"minimal_polynomial", p.minimal_polynomial.to_string()},
                                 {"cos", static_cast<double>(p.cos_value)},
                                 {"interval", Json::array({static_cast<double>(p.lo), static_cast<double>(p.hi)})},
                                 {"sin_sign", p.sin_sign}});
    }
    Json witnesses = Json::array();
    for (const auto& w : s.numeric_witnesses) witnesses.push_back(Json::array({w[0], w[1]}));
    return Json{{"completeness", s.completeness == Completeness::Complete ? "complete" : "witness_only"},
                {"exact_points", points},
                {"exact_pairs", pairs},
                {"algebraic_points", algebraic},
                {"witnesses", witnesses}};
}

Json classification_json(const ArrayClassification& c) {
    Json j{{"array", c.array.to_string()},
           {"label", label_kind_string(c.label.kind)},
           {"tag", c.label.tag ? Json(*c.label.tag) : Json(nullptr)},
           {"equation", original_equation(c.array).to_string()},
           {"pending", c.pending.terms.to_string()},
           {"amount", c.pending.amount},
           {"original_nonsimple", c.original_nonsimple},
           {"solutions", solutions_json(c.solutions)}};
    return j;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](char ch) { return ch == '[' || ch == ']'; }), t.end());
    for (const auto& item : split(t, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
        out.push_back(v);
    }
    return out;
}

std::vector<ResidueRow> parse_rows(const std::string& text, int modulus, bool sort_each) {
    std::vector<ResidueRow> rows;
    for (const auto& part : split(text, ';')) {
        if (part.empty()) continue;
        ResidueRow r = parse_int_list(part);
        if (r.size() != 6) throw std::invalid_argument("residue rows have 6 entries: " + part);
        for (int v : r)
            if (v < 0 || v >= modulus) throw std::invalid_argument("residue out of range in " + part);
        if (sort_each) std::sort(r.begin(), r.end());
        rows.push_back(r);
    }
    return rows;
}

Structure require_structure(const std::string& name) {
    std::string upper = name;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
    auto s = parse_structure(upper);
    if (!s) throw std::invalid_argument("unknown structure: " + name);
    return *s;
}

Json cmd_verify(const std::string& file) {
    const Matrix6 m = load_matrix(file);
    Json failing = Json::array();
    for (int i = 0; i < kN; ++i)
        for (int j = i + 1; j < kN; ++j) {
            const bool zero = m.is_exact() ? is_zero(row_inner_product(m, i, j)) : std::abs(row_inner_product_float(m, i, j)) <= kTolerance;
            if (!zero) failing.push_back(Json::array({i + 1, j + 1}));
        }
    Json elements = Json::array();
    for (const auto& v : distinct_elements(m)) elements.push_back(format_token(v));
    return Json{{"mode", m.is_exact() ? "exact" : "float"}, {"chm", is_chm(m)}, {"elements", elements}, {"nonorthogonal_rows", failing}};
}

Json cmd_scan(const std::string& file, bool rank1, bool h3, bool h2, bool p1oo2) {
    const Matrix6 m = load_matrix(file);
    const bool all = !(rank1 || h3 || h2 || p1oo2);
    Json j{{"mode", m.is_exact() ? "exact" : "float"}, {"chm", is_chm(m)}};
    if (all || rank1) j["rank1_2x3"] = witness_json(m, find_rank1_2x3(m));
    if (all || h3) {
        j["hadamard_3x3"] = witness_json(m, find_3x3_hadamard_submatrix(m));
        j["mub"] = mub_obstruction(m) == MubVerdict::ExcludedBy3x3 ? "ExcludedBy3x3" : "NoVerdict";
    }
    if (all || p1oo2) j["pattern_1oo2"] = witness_json(m, find_pattern_1oo2(m));
    if (all || h2) {
        auto cert = h2_reducible(m);
        if (!cert) {
            j["h2"] = nullptr;
        } else {
            Json core = Json::array();
            for (const auto& row : cert->block_core) {
                Json r = Json::array();
                for (const auto& v : row) r.push_back(format_token(v));
                core.push_back(r);
            }
            j["h2"] = Json{{"row_pairs", cert->row_pairs},
                           {"col_pairs", cert->col_pairs},
                           {"block_core", core},
                           {"verified", verify_h2_certificate(m, *cert)}};
        }
    }
    return j;
}

Json cmd_equiv(const std::string& fa, const std::string& fb, const std::string& mode) {
    const Matrix6 a = load_matrix(fa);
    const Matrix6 b = load_matrix(fb);
    if (mode != "complex" && mode != "perm") throw std::invalid_argument("mode must be complex or perm");
    auto cert = mode == "complex" ? complex_equivalent(a, b) : permutation_equivalent(a, b);
    Json j{{"mode", mode},
           {"equivalent", cert.has_value()},
           {"fingerprints_equal", fingerprint(a) == fingerprint(b)},
           {"certificate", cert ? certificate_json(*cert, verify_certificate(a, b, *cert)) : Json(nullptr)}};
    return j;
}

Json cmd_census(const std::string& alphabet, std::uint64_t budget, int threads, ExitCode& code) {
    CensusOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    auto report = enumerate_chms(make_alphabet(parse_alphabet(alphabet)), opts);
    Json tokens = Json::array();
    for (const auto& v : report.alphabet.values) tokens.push_back(format_token(v));
    Json j{{"alphabet", tokens}, {"incomplete", report.incomplete}, {"nodes", report.node_count}, {"count", report.raw_count()}};
    Json classes = Json::array();
    if (report.incomplete) {
        code = ExitCode::Incomplete;
    } else {
        report = classify_census(report);
        for (std::size_t k = 0; k < report.representatives.size(); ++k) {
            const auto size = std::count(report.class_of.begin(), report.class_of.end(), static_cast<int>(k));
            const Matrix6& rep = report.representatives[k];
            const auto& cert = report.labels[k] == ClassLabel::S6_0 ? report.s6_0_certificates[k] : report.h1_certificates[k];
            const Matrix6 target = catalog(report.labels[k] == ClassLabel::S6_0 ? CatalogName::S6_0 : CatalogName::H1);
            classes.push_back(Json{{"label", class_label_string(report.labels[k])},
                                   {"size", size},
                                   {"representative", matrix_json(rep)},
                                   {"certificate", cert ? certificate_json(*cert, verify_certificate(rep, target, *cert)) : Json(nullptr)}});
        }
    }
    j["classes"] = classes;
    j["diagnostics"] = report.diagnostics;
    return j;
}

Json cmd_arrays(const std::string& structure, const std::string& list) {
    const Structure s = require_structure(structure);
    if (list != "all" && list != "nonsimple") throw std::invalid_argument("list must be all or nonsimple");
    const auto arrays = enumerate_count_arrays(s);
    const auto results = classify_arrays(arrays.arrays);
    Json items = Json::array();
    std::map<std::string, Json> groups;
    std::map<std::string, int> counts;
    for (const auto& r : results) {
        ++counts[label_kind_string(r.label.kind)];
        if (list == "nonsimple" && r.label.kind != LabelKind::NonSimple) continue;
        items.push_back(classification_json(r));
        if (r.label.kind == LabelKind::NonSimple) {
            std::string group = "untagged";
            if (r.label.tag) {
                const auto& t = *r.label.tag;
                const auto second_dot = t.find('.', t.find('.') + 1);
                group = t.rfind("N.", 0) == 0 ? t.substr(0, second_dot) : t;
            }
            groups[group].push_back(r.array.to_string());
        }
    }
    Json excluded = Json::array();
    for (const auto& a : arrays.rank1_excluded) excluded.push_back(a.to_string());
    Json grouped = Json::object();
    for (auto& [k, v] : groups) grouped[k] = v;
    Json label_counts = Json::object();
    for (auto& [k, v] : counts) label_counts[k] = v;
    return Json{{"structure", structure_string(s)},
                {"list", list},
                {"total", arrays.arrays.size()},
                {"rank1_excluded", excluded.size()},
                {"labels", label_counts},
                {"nonsimple_groups", grouped},
                {"arrays", items}};
}

Json cmd_pairs(const std::string& structure, const std::string& a, const std::string& b) {
    const Structure s = require_structure(structure);
    const CountArray x = parse_count_array(s, a);
    const CountArray y = parse_count_array(s, b);
    auto v = common_solutions(x, y);
    return Json{{"structure", structure_string(s)},
                {"a", x.to_string()},
                {"b", y.to_string()},
                {"equation_a", original_equation(x).to_string()},
                {"equation_b", original_equation(y).to_string()},
                {"verdict", common_kind_string(v.kind)},
                {"witness", v.witness ? Json::array({(*v.witness)[0], (*v.witness)[1]}) : Json(nullptr)},
                {"common", solutions_json(v.common)}};
}

Json cmd_groupmap(int modulus, const std::string& fixed, const std::string& target, const std::string& shapes) {
    group_map(modulus);
    CompletionProblem p{modulus, parse_rows(fixed, modulus, false), parse_rows(target, modulus, true),
                        parse_rows(shapes, modulus, true)};
    if (p.target.empty()) throw std::invalid_argument("empty target family");
    const auto r = complete_rows(p);
    Json orbits = Json::array();
    for (const auto& o : r.orbits) orbits.push_back(o);
    Json swaps = Json::array();
    for (const auto& [i, j] : r.column_swaps) swaps.push_back(Json::array({i + 1, j + 1}));
    Json j{{"modulus", modulus},
           {"fixed", p.fixed},
           {"target", p.target},
           {"candidates", r.candidates},
           {"eliminated", r.eliminated},
           {"rows", r.rows},
           {"column_swaps", swaps},
           {"orbits", orbits},
           {"contradiction", r.contradiction()}};
    if (r.certificate) {
        j["certificate"] = Json{{"candidate", r.certificate->candidate},
                                {"fixed_row", r.certificate->fixed_row + 1},
                                {"multiset", r.certificate->multiset}};
    } else {
        j["certificate"] = nullptr;
    }
    const auto pw = pairwise_admissibility(modulus, r.rows, p.target);
    Json admissible = Json::array();
    for (const auto& v : pw.pairs)
        if (v.admissible) admissible.push_back(Json::array({r.rows[v.first], r.rows[v.second]}));
    j["pairwise"] = Json{{"pairs", pw.pairs.size()}, {"admissible", admissible}, {"contradiction", pw.contradiction()}};
    return j;
}

Json cmd_ramsey(int n) {
    const auto r = ramsey_check(n);
    Json j{{"n", n}, {"holds", r.holds}, {"colorings", r.colorings}};
    if (r.counterexample) {
        Json edges = Json::array();
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) edges.push_back(Json::array({a, b, r.counterexample->color(a, b)}));
        j["counterexample"] = Json{{"colors", r.counterexample->to_string()}, {"edges", edges}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

Json cmd_catalog(const std::string& name, const std::string& alpha, const std::string& beta, const std::string& out) {
    const CatalogName c = parse_catalog_name(name);
    if (c == CatalogName::HAB && (alpha.empty() || beta.empty())) throw std::invalid_argument("HAB needs --alpha and --beta");
    const UnitValue a = alpha.empty() ? UnitValue() : parse_token(alpha);
    const UnitValue b = beta.empty() ? UnitValue() : parse_token(beta);
    const Matrix6 m = catalog(c, a, b);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        f << format_matrix(m);
    }
    return Json{{"name", catalog_name_string(c)}, {"chm", is_chm(m)}, {"matrix", matrix_json(m)}, {"out", out.empty() ? Json(nullptr) : Json(out)}};
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

UnitValue parse_token(const std::string& raw) {
    const std::string token = trim(raw);
    for (const auto& [name, v] : sugar())
        if (token == name) return v;
    static const std::regex exact(R"(e\((-?\d+)/(\d+)\))");
    static const std::regex flt(R"(f\(\s*([-+0-9.eE]+)\s*,\s*([-+0-9.eE]+)\s*\))");
    std::smatch m;
    if (std::regex_match(token, m, exact)) {
        const long long q = std::stoll(m[2]);
        if (q <= 0 || q > kMaxOrder) throw ParseError("denominator out of range in '" + token + "'", 0, 0);
        return root_of_unity(std::stoll(m[1]), q);
    }
    if (std::regex_match(token, m, flt)) {
        double re = 0, im = 0;
        try {
            re = std::stod(m[1]);
            im = std::stod(m[2]);
        } catch (const std::exception&) {
            throw ParseError("bad number in '" + token + "'", 0, 0);
        }
        if (std::abs(re * re + im * im - 1) > 1e-9) throw ParseError("not unimodular: '" + token + "'", 0, 0);
        return UnitValue::from_float(re, im);
    }
    throw ParseError("bad token '" + token + "'", 0, 0);
}

std::string format_token(const UnitValue& v) {
    if (v.is_exact()) {
        for (const auto& [name, s] : sugar())
            if (s == v) return name;
    }
    return v.to_string();
}

Matrix6 parse_matrix(const std::string& text) {
    Matrix6::Rows rows;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int row = 0;
    int exact_count = 0;
    int float_count = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = line.substr(0, line.find('#'));
        if (trim(body).empty()) continue;
        if (row == kN) throw ParseError("more than 6 rows", line_no, 1);
        int col = 0;
        std::size_t pos = 0;
        while (true) {
            pos = body.find_first_not_of(" \t\r", pos);
            if (pos == std::string::npos) break;
            const std::size_t end = body.find_first_of(" \t\r", pos);
            const std::string tok = body.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            if (col == kN) throw ParseError("more than 6 entries", line_no, static_cast<int>(pos) + 1);
            try {
                rows[row][col] = parse_token(tok);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), line_no, static_cast<int>(pos) + 1);
            }
            (rows[row][col].is_exact() ? exact_count : float_count)++;
            if (exact_count > 0 && float_count > 0) throw ParseError("mixed exact and float entries", line_no, static_cast<int>(pos) + 1);
            ++col;
            if (end == std::string::npos) break;
            pos = end;
        }
        if (col != kN) throw ParseError("expected 6 entries, got " + std::to_string(col), line_no, 1);
        ++row;
    }
    if (row != kN) throw ParseError("expected 6 rows, got " + std::to_string(row), line_no, 1);
    return Matrix6(rows);
}

Matrix6 load_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_matrix(ss.str());
}

std::string format_matrix(const Matrix6& m) {
    std::string out;
    for (int r = 0; r < kN; ++r) {
        for (int c = 0; c < kN; ++c) out += (c ? " " : "") + format_token(m(r, c));
        out += "\n";
    }
    return out;
}

std::vector<UnitValue> parse_alphabet(const std::string& text) {
    std::vector<UnitValue> out;
    for (const auto& tok : split_tokens(text)) out.push_back(parse_token(tok));
    return out;
}

Report run(const std::vector<std::string>& args) {
    Report report;
    Json& body = report.body;
    body["schema"] = kReportSchema;
    body["command"] = args.empty() ? "" : args[0];
    body["args"] = args;
    body["status"] = "ok";

    CLI::App app{"Order-6 complex Hadamard matrix toolkit", "chm6"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    std::string file, file_b, mode = "complex", alphabet, structure, list = "all", a, b, fixed, target, shapes, name, alpha, beta, out;
    bool rank1 = false, h3 = false, h2 = false, p1oo2 = false;
    std::uint64_t budget = kDefaultBudget;
    int threads = 0, modulus = 5, n = 6;

    auto* verify = app.add_subcommand("verify", "Check that a matrix file is a CHM");
    verify->add_option("file", file)->required();
    auto* scan = app.add_subcommand("scan", "Structural witnesses");
    scan->add_option("file", file)->required();
    scan->add_flag("--rank1", rank1);
    scan->add_flag("--h3", h3);
    scan->add_flag("--h2", h2);
    scan->add_flag("--pattern1oo2", p1oo2);
    auto* equiv = app.add_subcommand("equiv", "Complex or permutation equivalence");
    equiv->add_option("fileA", file)->required();
    equiv->add_option("fileB", file_b)->required();
    equiv->add_option("--mode", mode)->check(CLI::IsMember({"complex", "perm"}));
    auto* census = app.add_subcommand("census", "Exhaustive search over an alphabet");
    census->add_option("--alphabet", alphabet)->required();
    census->add_option("--budget", budget);
    census->add_option("--threads", threads);
    auto* arrays = app.add_subcommand("arrays", "Count-array classification");
    arrays->add_option("--structure", structure)->required();
    arrays->add_option("--list", list)->check(CLI::IsMember({"all", "nonsimple"}));
    auto* pairs = app.add_subcommand("pairs", "Common solutions of two count arrays");
    pairs->add_option("--structure", structure)->required();
    pairs->add_option("--a", a)->required();
    pairs->add_option("--b", b)->required();
    auto* gm = app.add_subcommand("groupmap", "Residue row completion");
    gm->add_option("--mod", modulus)->required()->check(CLI::IsMember({5, 7}));
    gm->add_option("--fixed", fixed, "rows separated by ';'")->required();
    gm->add_option("--target", target, "multisets separated by ';'")->required();
    gm->add_option("--shapes", shapes, "row multisets; default target");
    auto* ramsey = app.add_subcommand("ramsey", "Monochromatic triangles in 2-colorings of K_n");
    ramsey->add_option("--n", n)->required();
    auto* cat = app.add_subcommand("catalog", "Emit a catalog matrix");
    cat->add_option("name", name)->required();
    cat->add_option("--alpha", alpha);
    cat->add_option("--beta", beta);
    cat->add_option("--out", out);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        report.format = format == "table" ? ReportFormat::Table : ReportFormat::Json;
        const auto* sub = app.get_subcommands().front();
        body["command"] = sub->get_name();
        Json result;
        if (sub == verify) result = cmd_verify(file);
        else if (sub == scan) result = cmd_scan(file, rank1, h3, h2, p1oo2);
        else if (sub == equiv) result = cmd_equiv(file, file_b, mode);
        else if (sub == census) result = cmd_census(alphabet, budget, threads, report.exit_code);
        else if (sub == arrays) result = cmd_arrays(structure, list);
        else if (sub == pairs) result = cmd_pairs(structure, a, b);
        else if (sub == gm) result = cmd_groupmap(modulus, fixed, target, shapes);
        else if (sub == ramsey) result = cmd_ramsey(n);
        else result = cmd_catalog(name, alpha, beta, out);
        body["result"] = result;
        if (report.exit_code == ExitCode::Incomplete) body["status"] = "incomplete";
    } catch (const CLI::CallForHelp&) {
        body["status"] = "help";
        body["help"] = app.help();
    } catch (const CLI::ParseError& e) {
        report.exit_code = ExitCode::Error;
        body["status"] = "error";
        body["error"] = Json{{"kind", "usage"}, {"message", e.what()}};
    } catch (const ParseError& e) {
        report.exit_code = ExitCode::Error;
        body["status"] = "error";
        body["error"] = Json{{"kind", "parse"}, {"message", e.what()}, {"line", e.line}, {"column", e.column}};
    } catch (const std::exception& e) {
        report.exit_code = ExitCode::Error;
        body["status"] = "error";
        body["error"] = Json{{"kind", "failure"}, {"message", e.what()}};
    }
    return report;
}

std::string emit_report(const Report& r, ReportFormat format) {
    if (format == ReportFormat::Json) return r.body.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> lines;
    auto add = [&](const std::string& key, const Json& v) { lines.emplace_back(key, scalar_text(v)); };
    for (const auto& [k, v] : r.body.items()) {
        if (k == "result" && v.is_object()) {
            for (const auto& [rk, rv] : v.items()) add(rk, rv);
        } else {
            add(k, v);
        }
    }
    std::size_t width = 0;
    for (const auto& [k, v] : lines) width = std::max(width, k.size());
    std::string out;
    for (const auto& [k, v] : lines) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
    return out;
}

}  // namespace chm
