/* Copyright 2026 The liegeo Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Reports are built once as ordered JSON and rendered either as the machine
// document or as indented "key: value" text.

#ifndef LIEGEO_TOOLS_REPORT_HPP
#define LIEGEO_TOOLS_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

namespace liegeo::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Machine };

inline constexpr int kReportSchema = 1;

// exchange_key names a string member holding a file in an exchange format.
// In text mode it is printed verbatim and everything else follows as
// '#' comment lines, so the output can be fed back to the parsers.
std::string render_report(const Json& report, Format format, const std::string& exchange_key = "");

}  // namespace liegeo::cli

#endif  // LIEGEO_TOOLS_REPORT_HPP
