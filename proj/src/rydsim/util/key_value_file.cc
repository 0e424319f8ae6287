// Copyright 2026 The RydSim Authors
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

#include "rydsim/util/key_value_file.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rydsim {

namespace {

std::string trim(const std::string &s) {
    size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::string describe(const std::string &message, int line, const std::string &key) {
    std::string out;
    if (line > 0) {
        out += "line " + std::to_string(line) + ": ";
    }
    out += message;
    if (!key.empty() && message.find(key) == std::string::npos) {
        out += " (key '" + key + "')";
    }
    return out;
}

}  // namespace

ConfigError::ConfigError(const std::string &message, int line, std::string key)
    : std::runtime_error(describe(message, line, key)), line_(line), key_(std::move(key)) {}

KeyValueFile KeyValueFile::parse(const std::string &text) {
    KeyValueFile file;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        line++;
        std::string content = raw;
        size_t comment = content.find_first_of("#;");
        if (comment != std::string::npos) {
            content = content.substr(0, comment);
        }
        content = trim(content);
        if (content.empty()) {
            continue;
        }
        if (content.front() == '[') {
            if (content.back() != ']' || content.size() < 3) {
                throw ConfigError("malformed section header '" + content + "'", line);
            }
            section = trim(content.substr(1, content.size() - 2));
            continue;
        }
        size_t eq = content.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected 'key = value', got '" + content + "'", line);
        }
        std::string key = trim(content.substr(0, eq));
        std::string value = trim(content.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("empty key", line);
        }
        if (section.empty()) {
            throw ConfigError("key '" + key + "' appears before any [section]", line, key);
        }
        std::string qualified = section + "." + key;
        if (file.entries_.count(qualified)) {
            throw ConfigError(
                "duplicate key '" + qualified + "' (first defined on line " +
                    std::to_string(file.entries_[qualified].line) + ")",
                line, qualified);
        }
        file.entries_[qualified] = Entry{value, line, false};
        file.order_.push_back(qualified);
    }
    return file;
}

KeyValueFile KeyValueFile::load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

bool KeyValueFile::contains(const std::string &qualified_key) const { return entries_.count(qualified_key) > 0; }

const std::string &KeyValueFile::get_string(const std::string &qualified_key) const {
    auto it = entries_.find(qualified_key);
    if (it == entries_.end()) {
        throw ConfigError("missing required key '" + qualified_key + "'", 0, qualified_key);
    }
    const_cast<Entry &>(it->second).used = true;
    return it->second.value;
}

double KeyValueFile::get_double(const std::string &qualified_key) const {
    const std::string &text = get_string(qualified_key);
    double value = 0.0;
    const char *begin = text.data();
    const char *end = text.data() + text.size();
    if (!text.empty() && *begin == '+') {
        begin++;
    }
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw ConfigError(
            "value '" + text + "' for key '" + qualified_key + "' is not a finite number", line_of(qualified_key),
            qualified_key);
    }
    return value;
}

std::optional<double> KeyValueFile::get_optional_double(const std::string &qualified_key) const {
    if (!contains(qualified_key)) {
        return std::nullopt;
    }
    return get_double(qualified_key);
}

int KeyValueFile::line_of(const std::string &qualified_key) const {
    auto it = entries_.find(qualified_key);
    return it == entries_.end() ? 0 : it->second.line;
}

std::vector<std::string> KeyValueFile::unused_keys() const {
    std::vector<std::string> out;
    for (const auto &k : order_) {
        if (!entries_.at(k).used) {
            out.push_back(k);
        }
    }
    return out;
}

void KeyValueFile::set(const std::string &qualified_key, const std::string &value) {
    if (qualified_key.find('.') == std::string::npos) {
        throw ConfigError("key '" + qualified_key + "' has no section", 0, qualified_key);
    }
    if (!entries_.count(qualified_key)) {
        order_.push_back(qualified_key);
    }
    entries_[qualified_key].value = value;
}

std::string KeyValueFile::to_text() const {
    // Group by section, keeping first-appearance order of both sections and keys.
    std::vector<std::string> sections;
    for (const auto &k : order_) {
        std::string s = k.substr(0, k.find('.'));
        if (std::find(sections.begin(), sections.end(), s) == sections.end()) {
            sections.push_back(s);
        }
    }
    std::string out;
    for (size_t i = 0; i < sections.size(); i++) {
        if (i > 0) {
            out += "\n";
        }
        out += "[" + sections[i] + "]\n";
        for (const auto &k : order_) {
            size_t dot = k.find('.');
            if (k.substr(0, dot) == sections[i]) {
                out += k.substr(dot + 1) + " = " + entries_.at(k).value + "\n";
            }
        }
    }
    return out;
}

std::string format_double(double value) {
    std::array<char, 64> buffer{};
    auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), ptr);
}

}  // namespace rydsim
