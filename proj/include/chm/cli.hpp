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

#ifndef CHM_CLI_HPP
#define CHM_CLI_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "chm/matrix.hpp"

namespace chm {

inline constexpr const char* kReportSchema = "chm-report/1";

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int column);
    /// 1-based; 0 when not tied to a file position.
    int line = 0;
    int column = 0;
};

/// e(p/q), 1, -1, i, -i, w, w2, -w, -w2, or f(re,im) with |re^2 + im^2 - 1| <= 1e-9.
UnitValue parse_token(const std::string& token);
/// Shortest token for a value: sugar when one applies, else e(p/q) or f(re,im).
std::string format_token(const UnitValue& v);

/// Six lines of six whitespace-separated tokens; blank lines and # comments
/// are skipped. Mixed exact and float tokens are rejected.
Matrix6 parse_matrix(const std::string& text);
Matrix6 load_matrix(const std::string& path);
std::string format_matrix(const Matrix6& m);

/// Comma-separated tokens.
std::vector<UnitValue> parse_alphabet(const std::string& text);

enum class ExitCode { Ok = 0, Error = 1, Incomplete = 2 };

enum class ReportFormat { Json, Table };

struct Report {
    nlohmann::ordered_json body;
    ExitCode exit_code = ExitCode::Ok;
    /// From --format.
    ReportFormat format = ReportFormat::Json;
};

/// Parses and runs one invocation; args excludes the program name. Errors
/// are reported in the body with exit code 1, never thrown.
Report run(const std::vector<std::string>& args);
std::string emit_report(const Report& r, ReportFormat format);

}  // namespace chm

#endif  // CHM_CLI_HPP
