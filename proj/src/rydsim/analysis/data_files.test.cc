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

#include "rydsim/analysis/data_files.h"

#include <gtest/gtest.h>

#include "rydsim/analysis/fidelity.h"

namespace rydsim {

namespace {

std::string error_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const DataFormatError &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(data_files, rb_with_header_and_comments) {
    RbData d = parse_rb_csv("# retention\ndepth,probability,shots\n0, 0.98, 500\n\n10,0.89,500\n");
    ASSERT_EQ(d.depths.size(), 2u);
    EXPECT_EQ(d.depths[1], 10);
    EXPECT_EQ(d.probs[0], 0.98);
    EXPECT_EQ(d.shots[1], 500);
}

TEST(data_files, binomial_weights_clip_extremes) {
    RbData d = parse_rb_csv("0,1.0,100\n1,0.5,100\n");
    auto w = d.binomial_weights();
    EXPECT_NEAR(w[1], 100 / 0.25, 1e-9);
    EXPECT_TRUE(std::isfinite(w[0]));
    EXPECT_GT(w[0], w[1]);
}

TEST(data_files, rb_errors_name_the_line) {
    EXPECT_NE(error_of([] { parse_rb_csv("0,0.9,100\n5,abc,100\n"); }).find("line 2"), std::string::npos);
    EXPECT_NE(error_of([] { parse_rb_csv("0,0.9,100\n\n5,0.8\n"); }).find("line 3"), std::string::npos);
    EXPECT_NE(error_of([] { parse_rb_csv("0,1.5,100\n"); }).find("line 1"), std::string::npos);
    EXPECT_NE(error_of([] { parse_rb_csv("0,0.9,0\n"); }).find("line 1"), std::string::npos);
    EXPECT_NE(error_of([] { parse_rb_csv("1.5,0.9,10\n"); }).find("line 1"), std::string::npos);
}

TEST(data_files, qnd_counts) {
    auto c = parse_qnd_csv("state,correct,incorrect\n00,93,7\n11, 48 ,2\n");
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0].label, "00");
    EXPECT_EQ(c[1].correct, 48);
    EXPECT_EQ(c[1].incorrect, 2);
    EXPECT_NE(error_of([] { parse_qnd_csv("00,-1,3\n"); }).find("line 1"), std::string::npos);
}

TEST(data_files, decay_columns) {
    std::vector<double> t;
    std::vector<double> y;
    parse_decay_csv("time_s,value\n0,1\n1e-6,0.5\n", t, y);
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[1], 1e-6);
    EXPECT_EQ(y[1], 0.5);
}

TEST(data_files, missing_file) {
    EXPECT_THROW(read_text_file("/nonexistent/rb.csv"), std::exception);
}

}  // namespace rydsim
