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
#include "report.hpp"

#include <sstream>

namespace liegeo::cli {

namespace {

constexpr size_t kInlineWidth = 60;

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

bool flat(const Json& v) {
    if (v.is_array()) {
        for (const auto& x : v)
            if (x.is_structured()) return false;
        return true;
    }
    if (v.is_object()) {
        for (const auto& [k, x] : v.items())
            if (x.is_structured()) return false;
        return true;
    }
    return true;
}

void emit(std::ostream& out, const std::string& lead, const std::string& key, const Json& v, int indent);

void emit_items(std::ostream& out, const std::string& lead, const Json& v, int indent) {
    const std::string pad(static_cast<size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) emit(out, lead, k, x, indent);
        return;
    }
    for (const auto& x : v) {
        if (!x.is_structured()) {
            out << lead << pad << "- " << scalar_text(x) << "\n";
        } else if (x.is_object() && flat(x)) {
            out << lead << pad << "-";
            bool first = true;
            for (const auto& [k, y] : x.items()) {
                out << (first ? " " : ", ") << k << ": " << scalar_text(y);
                first = false;
            }
            out << "\n";
        } else if (x.is_array() && flat(x)) {
            out << lead << pad << "- [";
            for (size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << scalar_text(x[i]);
            out << "]\n";
        } else {
            out << lead << pad << "-\n";
            emit_items(out, lead, x, indent + 4);
        }
    }
}

void emit(std::ostream& out, const std::string& lead, const std::string& key, const Json& v, int indent) {
    const std::string pad(static_cast<size_t>(indent), ' ');
    if (!v.is_structured()) {
        out << lead << pad << key << ": " << scalar_text(v) << "\n";
        return;
    }
    if (v.empty()) {
        out << lead << pad << key << ": " << (v.is_array() ? "[]" : "{}") << "\n";
        return;
    }
    if (v.is_array() && flat(v)) {
        std::string line;
        for (const auto& x : v) line += (line.empty() ? "" : ", ") + scalar_text(x);
        if (line.size() <= kInlineWidth) {
            out << lead << pad << key << ": [" << line << "]\n";
            return;
        }
    }
    out << lead << pad << key << ":\n";
    emit_items(out, lead, v, indent + 2);
}

}  // namespace

std::string render_report(const Json& report, Format format, const std::string& exchange_key) {
    if (format == Format::Machine) return report.dump(2) + "\n";
    std::ostringstream out;
    std::string lead;
    if (!exchange_key.empty() && report.contains(exchange_key)) {
        out << report[exchange_key].get<std::string>();
        lead = "# ";
    }
    for (const auto& [k, v] : report.items()) {
        if (k == exchange_key) continue;
        emit(out, lead, k, v, 0);
    }
    return out.str();
}

}  // namespace liegeo::cli
