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
#ifndef LIEGEO_TOOLS_COMMANDS_HPP
#define LIEGEO_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"

namespace liegeo::cli {

struct RunConfig {
    std::string command;
    std::vector<std::string> systems;
    std::string poly_path;               // lift: PolySystem file
    std::optional<std::string> field;    // overrides the algebra line
    std::optional<int> trunc;
    std::optional<int> trunc2;           // geoeq: second carrier
    std::optional<int> bound;
    uint64_t budget = 0;
    std::string out;
    Format format = Format::Text;
    // axioms, geoeq, dims
    std::string carrier = "metabelian";
    std::string carrier2;
    int rank = 2;
    std::optional<int> phi4_rank;
    std::vector<std::string> actions;
    size_t module = 0;
};

inline constexpr int kDefaultTrunc = 2;
inline constexpr int kDefaultRadicalBound = 2;
inline constexpr int kDefaultSearchDegree = 3;
inline constexpr int kDefaultAxiomTrunc = 3;
inline constexpr int kDefaultDimsDegree = 6;

// Bad files and malformed input, reported with a file anchor.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommandOutput {
    Json report;
    std::string exchange_key;
};

CommandOutput run_command(const RunConfig& cfg);

}  // namespace liegeo::cli

#endif  // LIEGEO_TOOLS_COMMANDS_HPP
