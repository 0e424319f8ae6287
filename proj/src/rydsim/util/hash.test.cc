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

#include "rydsim/util/hash.h"

#include <gtest/gtest.h>

using namespace rydsim;

TEST(hash, fnv1a64_known_vectors) {
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(hash, hex64_is_zero_padded) {
    EXPECT_EQ(hex64(0), "0000000000000000");
    EXPECT_EQ(hex64(0xabcULL), "0000000000000abc");
}

TEST(hash, stream_seed_separates_streams_and_indices) {
    EXPECT_NE(stream_seed(1, 1, 0), stream_seed(1, 2, 0));
    EXPECT_NE(stream_seed(1, 1, 0), stream_seed(1, 1, 1));
    EXPECT_NE(stream_seed(1, 1, 0), stream_seed(2, 1, 0));
    EXPECT_EQ(stream_seed(5, 3, 9), stream_seed(5, 3, 9));
}

TEST(hash, hash_file_missing_throws) {
    EXPECT_THROW(hash_file("/nonexistent/rydsim/file"), std::runtime_error);
}
