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

#ifndef RYDSIM_UTIL_KEY_VALUE_FILE_H
#define RYDSIM_UTIL_KEY_VALUE_FILE_H

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rydsim {

/// Raised for malformed or schema-violating configuration documents. Carries
/// the offending line (0 when not tied to a line) and key.
class ConfigError : public std::runtime_error {
   public:
    ConfigError(const std::string &message, int line = 0, std::string key = "");
    int line() const { return line_; }
    const std::string &key() const { return key_; }

   private:
    int line_;
    std::string key_;
};

/// A sectioned key-value text document:
///
///     # comment
///     [section]
///     key = value   # trailing comment
///
/// Keys are addressed as "section.key". Duplicate keys are an error.
class KeyValueFile {
   public:
    struct Entry {
        std::string value;
        int line = 0;
        bool used = false;
    };

    static KeyValueFile parse(const std::string &text);
    static KeyValueFile load(const std::string &path);

    bool contains(const std::string &qualified_key) const;
    const std::string &get_string(const std::string &qualified_key) const;
    double get_double(const std::string &qualified_key) const;
    std::optional<double> get_optional_double(const std::string &qualified_key) const;
    int line_of(const std::string &qualified_key) const;

    /// Keys that were never read through a getter, in file order.
    std::vector<std::string> unused_keys() const;

    void set(const std::string &qualified_key, const std::string &value);
    std::string to_text() const;

   private:
    std::map<std::string, Entry> entries_;
    std::vector<std::string> order_;
};

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace rydsim

#endif
