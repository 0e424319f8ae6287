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

#include <gtest/gtest.h>

using namespace rydsim;

TEST(key_value_file, parses_sections_and_comments) {
    auto f = KeyValueFile::parse(R"(
# header
[shared]
a = 1.5   # trailing
b = +2

[Rb]
name = Rb
)");
    EXPECT_EQ(f.get_double("shared.a"), 1.5);
    EXPECT_EQ(f.get_double("shared.b"), 2.0);
    EXPECT_EQ(f.get_string("Rb.name"), "Rb");
    EXPECT_EQ(f.line_of("shared.b"), 5);
    EXPECT_FALSE(f.get_optional_double("shared.c").has_value());
}

TEST(key_value_file, reports_line_of_errors) {
    try {
        KeyValueFile::parse("[s]\na = 1\na = 2\n");
        FAIL();
    } catch (const ConfigError &e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_EQ(e.key(), "s.a");
    }
    EXPECT_THROW(KeyValueFile::parse("a = 1\n"), ConfigError);
    EXPECT_THROW(KeyValueFile::parse("[s]\nnot a pair\n"), ConfigError);
    EXPECT_THROW(KeyValueFile::parse("[s\n"), ConfigError);
}

TEST(key_value_file, rejects_non_numbers) {
    auto f = KeyValueFile::parse("[s]\nx = 1.0abc\ny = nan\n");
    EXPECT_THROW(f.get_double("s.x"), ConfigError);
    EXPECT_THROW(f.get_double("s.y"), ConfigError);
    EXPECT_THROW(f.get_double("s.z"), ConfigError);
}

TEST(key_value_file, tracks_unused_keys) {
    auto f = KeyValueFile::parse("[s]\nx = 1\ny = 2\n");
    f.get_double("s.x");
    EXPECT_EQ(f.unused_keys(), std::vector<std::string>{"s.y"});
}

TEST(key_value_file, text_round_trip) {
    KeyValueFile f;
    f.set("b.x", "1");
    f.set("a.y", "2");
    f.set("b.z", "3");
    auto g = KeyValueFile::parse(f.to_text());
    EXPECT_EQ(g.get_string("b.x"), "1");
    EXPECT_EQ(g.get_string("a.y"), "2");
    EXPECT_EQ(g.get_string("b.z"), "3");
    EXPECT_EQ(f.to_text(), g.to_text());
}

TEST(key_value_file, format_double_round_trips) {
    for (double v : {0.1, 1.0 / 3.0, 2.5e-300, -7.0, 123456789.125}) {
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
    EXPECT_EQ(format_double(0.5), "0.5");
}
