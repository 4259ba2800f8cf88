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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

using namespace chm;
using Json = nlohmann::ordered_json;

namespace {

std::string fixture(const std::string& name) { return std::string(CHM_FIXTURES) + "/" + name; }

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / ("chm6_test_" + name)).string(); }

// Checks required keys, types and enums of the shipped schema.
void expect_schema_valid(const Json& body, const nlohmann::json& schema, const std::string& where = "") {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        if (t == "object") ASSERT_TRUE(body.is_object()) << where;
        if (t == "array") ASSERT_TRUE(body.is_array()) << where;
        if (t == "string") ASSERT_TRUE(body.is_string()) << where;
        if (t == "integer") ASSERT_TRUE(body.is_number_integer()) << where;
    }
    if (schema.contains("const")) EXPECT_EQ(body, schema["const"]) << where;
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& e : schema["enum"]) found = found || e == body;
        EXPECT_TRUE(found) << where << " " << body.dump();
    }
    if (schema.contains("required"))
        for (const auto& k : schema["required"]) EXPECT_TRUE(body.contains(k.get<std::string>())) << where << "." << k;
    if (schema.contains("properties") && body.is_object()) {
        for (const auto& [k, v] : body.items()) {
            if (schema["properties"].contains(k)) {
                expect_schema_valid(v, schema["properties"][k], where + "." + k);
            } else if (schema.value("additionalProperties", true) == false) {
                ADD_FAILURE() << "unexpected key " << where << "." << k;
            }
        }
    }
    if (schema.contains("items") && body.is_array())
        for (const auto& v : body) expect_schema_valid(v, schema["items"], where + "[]");
}

const nlohmann::json& report_schema() {
    static const nlohmann::json s = [] {
        std::ifstream f(std::string(CHM_FIXTURES) + "/../../tools/report.schema.json");
        return nlohmann::json::parse(f);
    }();
    return s;
}

Report run_ok(const std::vector<std::string>& args) {
    Report r = run(args);
    EXPECT_EQ(r.exit_code, ExitCode::Ok) << r.body.dump(2);
    expect_schema_valid(r.body, report_schema());
    return r;
}

}  // namespace

TEST(cli, token_grammar) {
    EXPECT_EQ(parse_token("e(1/3)"), root_of_unity(1, 3));
    EXPECT_EQ(parse_token("w"), root_of_unity(1, 3));
    EXPECT_EQ(parse_token("-w2"), root_of_unity(1, 6));
    EXPECT_EQ(parse_token("-w"), root_of_unity(5, 6));
    EXPECT_EQ(parse_token("-i"), root_of_unity(3, 4));
    EXPECT_EQ(parse_token("e(-1/4)"), root_of_unity(3, 4));
    const UnitValue f = parse_token("f(0.6,0.8)");
    EXPECT_FALSE(f.is_exact());
    EXPECT_NEAR(f.to_complex().imag(), 0.8, 1e-15);
    EXPECT_THROW(parse_token("f(0.6,0.7)"), ParseError);
    EXPECT_THROW(parse_token("e(1/0)"), ParseError);
    EXPECT_THROW(parse_token("x"), ParseError);
    for (std::int64_t p = 0; p < 24; ++p) EXPECT_EQ(parse_token(format_token(root_of_unity(p, 24))), root_of_unity(p, 24));
    EXPECT_EQ(format_token(root_of_unity(1, 6)), "-w2");
    EXPECT_EQ(format_token(root_of_unity(1, 5)), "e(1/5)");
}

TEST(cli, fixture_round_trips_to_catalog) {
    EXPECT_EQ(load_matrix(fixture("S6_0.txt")), catalog(CatalogName::S6_0));
    EXPECT_EQ(load_matrix(fixture("H1.txt")), catalog(CatalogName::H1));
    const Matrix6 f = load_matrix(fixture("float_S6_0.txt"));
    EXPECT_FALSE(f.is_exact());
    EXPECT_TRUE(is_chm(f));
}

TEST(cli_property, catalog_file_round_trip) {
    for (auto name : {CatalogName::S6_0, CatalogName::S6_1, CatalogName::H1, CatalogName::F6, CatalogName::HAB}) {
        const Matrix6 m = catalog(name, root_of_unity(1, 5), root_of_unity(3, 7));
        EXPECT_EQ(parse_matrix(format_matrix(m)), m) << catalog_name_string(name);
    }
    const std::string path = temp_path("hab.txt");
    run_ok({"catalog", "HAB", "--alpha", "e(1/5)", "--beta", "i", "--out", path});
    EXPECT_EQ(load_matrix(path), catalog(CatalogName::HAB, root_of_unity(1, 5), root_of_unity(1, 4)));
    std::remove(path.c_str());
}

TEST(cli, parse_errors_carry_positions) {
    try {
        load_matrix(fixture("mixed.txt"));
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 3);
        EXPECT_GT(e.column, 1);
    }
    try {
        load_matrix(fixture("not_unimodular.txt"));
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 4);
        EXPECT_EQ(e.column, 12);
    }
    try {
        load_matrix(fixture("short_row.txt"));
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 2);
    }
    EXPECT_THROW(parse_matrix("1 1 1 1 1 1\n"), ParseError);
}

TEST(cli, verify_and_scan) {
    auto v = run_ok({"verify", fixture("S6_0.txt")});
    EXPECT_EQ(v.body["command"], "verify");
    EXPECT_TRUE(v.body["result"]["chm"].get<bool>());
    EXPECT_EQ(v.body["result"]["elements"], Json::array({"1", "w", "w2"}));
    auto s = run_ok({"scan", fixture("S6_0.txt")});
    EXPECT_EQ(s.body["result"]["mub"], "ExcludedBy3x3");
    EXPECT_TRUE(s.body["result"]["hadamard_3x3"]["verified"].get<bool>());
    EXPECT_TRUE(s.body["result"]["h2"].is_null());
    auto h = run_ok({"scan", fixture("H1.txt"), "--h2"});
    EXPECT_TRUE(h.body["result"]["h2"]["verified"].get<bool>());
    EXPECT_FALSE(h.body["result"].contains("rank1_2x3"));
}

TEST(cli, equiv_report_has_certificate) {
    Monomial left, right;
    left.perm = {3, 1, 5, 0, 2, 4};
    right.perm = {1, 0, 2, 5, 4, 3};
    for (int k = 0; k < kN; ++k) {
        left.phase[k] = root_of_unity(k, 6);
        right.phase[k] = root_of_unity(2 * k + 1, 12);
    }
    const std::string a = temp_path("moved.txt");
    std::ofstream(a) << format_matrix(apply_monomials(left, catalog(CatalogName::S6_0), right));
    auto r = run_ok({"equiv", a, fixture("S6_0.txt")});
    const Json& cert = r.body["result"]["certificate"];
    ASSERT_FALSE(cert.is_null());
    EXPECT_EQ(cert["left"]["perm"].size(), 6u);
    EXPECT_EQ(cert["right"]["phase"].size(), 6u);
    EXPECT_TRUE(cert["verified"].get<bool>());
    auto p = run_ok({"equiv", fixture("S6_0.txt"), fixture("H1.txt"), "--mode", "perm"});
    EXPECT_FALSE(p.body["result"]["equivalent"].get<bool>());
    // The listed S6_1 has entries -w, -w2 and is not equivalent to S6_0.
    const std::string b = temp_path("s61.txt");
    run_ok({"catalog", "S6_1", "--out", b});
    auto q = run_ok({"equiv", b, fixture("S6_0.txt")});
    EXPECT_FALSE(q.body["result"]["equivalent"].get<bool>());
    EXPECT_FALSE(q.body["result"]["fingerprints_equal"].get<bool>());
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST(cli, census_reports) {
    auto empty = run_ok({"census", "--alphabet", "1,w,-w2"});
    EXPECT_EQ(empty.body["result"]["count"], 0);
    EXPECT_TRUE(empty.body["result"]["classes"].empty());
    auto tao = run_ok({"census", "--alphabet", "1,w,w2"});
    ASSERT_EQ(tao.body["result"]["classes"].size(), 1u);
    EXPECT_EQ(tao.body["result"]["classes"][0]["label"], "S6_0");
    EXPECT_TRUE(tao.body["result"]["classes"][0]["certificate"]["verified"].get<bool>());
    auto cut = run({"census", "--alphabet", "1,-1,i", "--budget", "10"});
    EXPECT_EQ(cut.exit_code, ExitCode::Incomplete);
    EXPECT_EQ(cut.body["status"], "incomplete");
}

TEST(cli, arrays_and_pairs) {
    auto c = run_ok({"arrays", "--structure", "conj", "--list", "nonsimple"});
    EXPECT_EQ(c.body["result"]["total"], 45);
    // Eq1 and Eq2 are self-conjugate, so the set has six arrays.
    EXPECT_EQ(c.body["result"]["arrays"].size(), 6u);
    EXPECT_TRUE(c.body["result"]["nonsimple_groups"].contains("Eq1"));
    auto p = run_ok({"pairs", "--structure", "generic", "--a", "[0,1,1,2,2,0,0]", "--b", "[0,0,0,1,1,2,2]"});
    EXPECT_EQ(p.body["result"]["verdict"], "NonSimpleCommon");
    auto bad = run({"pairs", "--structure", "conj", "--a", "[0,1,1,2]", "--b", "[0,2,2,1,1]"});
    EXPECT_EQ(bad.exit_code, ExitCode::Error);
    auto same = run({"pairs", "--structure", "conj", "--a", "[0,1,1,2,2]", "--b", "[0,1,1,2,2]"});
    EXPECT_EQ(same.exit_code, ExitCode::Error);
}

TEST(cli, generic_nonsimple_listing_is_grouped) {
    auto g = run_ok({"arrays", "--structure", "generic", "--list", "nonsimple"});
    const Json& groups = g.body["result"]["nonsimple_groups"];
    for (const char* k : {"N.1", "N.2", "N.3", "N.5", "untagged"}) EXPECT_TRUE(groups.contains(k)) << k;
    EXPECT_FALSE(groups.contains("N.4"));
    EXPECT_EQ(groups["N.1"].size(), 6u);
}

TEST(cli, groupmap_and_ramsey) {
    auto g = run_ok({"groupmap", "--mod", "5", "--fixed", "0,0,0,0,0,0;1,2,2,3,3,4", "--target", "1,2,2,3,3,4"});
    EXPECT_EQ(g.body["result"]["orbits"].size(), 1u);
    EXPECT_TRUE(g.body["result"]["pairwise"]["contradiction"].get<bool>());
    auto none = run_ok({"groupmap", "--mod", "5", "--fixed", "0,0,0,0,0,0;1,2,2,3,3,4;3,4,3,2,1,2", "--target", "1,2,2,3,3,4"});
    EXPECT_TRUE(none.body["result"]["contradiction"].get<bool>());
    EXPECT_FALSE(none.body["result"]["certificate"].is_null());
    auto r = run_ok({"ramsey", "--n", "6"});
    EXPECT_TRUE(r.body["result"]["holds"].get<bool>());
    auto f = run_ok({"ramsey", "--n", "5"});
    EXPECT_EQ(f.body["result"]["counterexample"]["edges"].size(), 10u);
    EXPECT_EQ(run({"ramsey", "--n", "9"}).exit_code, ExitCode::Error);
    EXPECT_EQ(run({"groupmap", "--mod", "6", "--fixed", "0,0,0,0,0,0", "--target", "0,0,0,0,0,0"}).exit_code, ExitCode::Error);
}

TEST(cli_property, error_paths_exit_one) {
    const std::vector<std::vector<std::string>> bad{
        {},
        {"nope"},
        {"verify"},
        {"verify", fixture("missing.txt")},
        {"verify", fixture("mixed.txt")},
        {"verify", fixture("not_unimodular.txt")},
        {"verify", fixture("S6_0.txt"), "--bogus"},
        {"equiv", fixture("S6_0.txt"), fixture("H1.txt"), "--mode", "weird"},
        {"census", "--alphabet", "1,q"},
        {"arrays", "--structure", "other"},
        {"catalog", "HAB"},
        {"catalog", "S6_9"},
        {"groupmap", "--mod", "5", "--fixed", "0,0,0", "--target", "1,2,2,3,3,4"},
    };
    for (const auto& args : bad) {
        Report r = run(args);
        EXPECT_EQ(r.exit_code, ExitCode::Error) << (args.empty() ? "" : args[0]);
        EXPECT_EQ(r.body["status"], "error");
        expect_schema_valid(r.body, report_schema());
    }
    Report parse = run({"verify", fixture("mixed.txt")});
    EXPECT_EQ(parse.body["error"]["kind"], "parse");
    EXPECT_EQ(parse.body["error"]["line"], 3);
}

TEST(cli_property, reports_are_byte_stable) {
    for (const auto& args : std::vector<std::vector<std::string>>{{"verify", fixture("S6_0.txt")},
                                                                   {"arrays", "--structure", "negconj", "--list", "nonsimple"},
                                                                   {"census", "--alphabet", "1,w,w2"}}) {
        const std::string first = emit_report(run(args), ReportFormat::Json);
        EXPECT_EQ(first, emit_report(run(args), ReportFormat::Json));
        EXPECT_EQ(emit_report(run(args), ReportFormat::Table), emit_report(run(args), ReportFormat::Table));
    }
    auto r = run_ok({"verify", fixture("S6_0.txt")});
    const std::string text = emit_report(r, ReportFormat::Json);
    EXPECT_LT(text.find("\"schema\""), text.find("\"command\""));
    EXPECT_LT(text.find("\"command\""), text.find("\"status\""));
    const std::string table = emit_report(r, ReportFormat::Table);
    EXPECT_NE(table.find("\nchm "), std::string::npos) << table;
    EXPECT_NE(table.find(" true\n"), std::string::npos) << table;
}

TEST(cli, binary_exit_codes) {
    const std::string bin = CHM6_BINARY;
    EXPECT_EQ(std::system((bin + " verify " + fixture("S6_0.txt") + " > /dev/null").c_str()), 0);
    EXPECT_EQ(WEXITSTATUS(std::system((bin + " verify " + fixture("mixed.txt") + " > /dev/null").c_str())), 1);
    EXPECT_EQ(WEXITSTATUS(std::system((bin + " census --alphabet 1,-1,i --budget 10 > /dev/null").c_str())), 2);
    EXPECT_EQ(std::system((bin + " --format table ramsey --n 6 > /dev/null").c_str()), 0);
}
