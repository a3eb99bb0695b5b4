// Copyright 2026 The stanceval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"

#include "fixtures.hpp"
#include "stanceval/error.hpp"
#include "stanceval/labels_io.hpp"

using namespace stanceval;

namespace {

LabeledSet parse(const std::string& text, LabelFormat format) {
    std::istringstream in(text);
    return parse_labels(in, format, "test");
}

ErrorKind parse_failure(const std::string& text, LabelFormat format, std::string* message = nullptr) {
    try {
        parse(text, format);
    } catch (const Error& e) {
        if (message) *message = e.what();
        return e.kind();
    }
    FAIL("expected a parse failure");
    return ErrorKind::Configuration;
}

LabeledSet set_of(std::initializer_list<std::pair<const std::string, std::string>> entries,
                  const std::string& source = "set") {
    return LabeledSet(source, LabeledSet::Entries(entries));
}

}  // namespace

TEST_SUITE("labels-io") {

TEST_CASE("tsv parsing canonicalizes labels") {
    const auto set = parse("t1\tSUPPORT\nt2\tdeny", LabelFormat::Tsv);
    CHECK(set.entries() == LabeledSet::Entries{{"t1", "support"}, {"t2", "deny"}});
    CHECK(set.source() == "test");
}

TEST_CASE("tsv accepts CRLF, comments and blank lines") {
    const auto set = parse("# header\r\n\r\nt1\t Query \r\n   \nt2\tcomment\r\n", LabelFormat::Tsv);
    CHECK(set.entries() == LabeledSet::Entries{{"t1", "query"}, {"t2", "comment"}});
}

TEST_CASE("tsv errors carry positions") {
    std::string msg;
    CHECK(parse_failure("t1\tsupport\nt2 deny\n", LabelFormat::Tsv, &msg) == ErrorKind::Parse);
    CHECK(msg.find("test:2:") != std::string::npos);
    CHECK(parse_failure("t1\tsupport\textra\n", LabelFormat::Tsv) == ErrorKind::Parse);
    CHECK(parse_failure("\tsupport\n", LabelFormat::Tsv) == ErrorKind::Parse);
    CHECK(parse_failure("t1\t  \n", LabelFormat::Tsv) == ErrorKind::Parse);

    CHECK(parse_failure("t1\tsupport\nt1\tdeny\n", LabelFormat::Tsv, &msg) == ErrorKind::Duplicate);
    CHECK(msg.find("'t1'") != std::string::npos);

    CHECK(parse_failure("# only a comment\n\n", LabelFormat::Tsv) == ErrorKind::Degenerate);
    CHECK(parse_failure("", LabelFormat::Tsv) == ErrorKind::Degenerate);
}

TEST_CASE("json-map parsing") {
    CHECK(parse(R"({"t1":"query"})", LabelFormat::JsonMap).entries() == LabeledSet::Entries{{"t1", "query"}});
    CHECK(parse(R"({"a":" Deny","b":"COMMENT"})", LabelFormat::JsonMap).entries() ==
          LabeledSet::Entries{{"a", "deny"}, {"b", "comment"}});

    std::string msg;
    CHECK(parse_failure(R"({"t1":"query","t1":"deny"})", LabelFormat::JsonMap, &msg) == ErrorKind::Duplicate);
    CHECK(msg.find("t1") != std::string::npos);
    CHECK(parse_failure(R"({"t1":"query",)", LabelFormat::JsonMap, &msg) == ErrorKind::Parse);
    CHECK(msg.find("byte") != std::string::npos);
    CHECK(parse_failure(R"(["query"])", LabelFormat::JsonMap) == ErrorKind::Parse);
    CHECK(parse_failure(R"({"t1":3})", LabelFormat::JsonMap, &msg) == ErrorKind::Parse);
    CHECK(msg.find("t1") != std::string::npos);
    CHECK(parse_failure(R"({})", LabelFormat::JsonMap) == ErrorKind::Degenerate);
    // Nested objects are not id maps; a nested duplicate key is not an id.
    CHECK(parse_failure(R"({"t1":{"x":"a","x":"b"}})", LabelFormat::JsonMap) == ErrorKind::Parse);
}

TEST_CASE("rumoureval2019 submission adapter") {
    const auto set = parse(R"({"subtaskaenglish":{"t1":"support","t2":"query"},"subtaskbenglish":{"t1":["true",0.9]}})",
                           LabelFormat::RumourEval2019);
    CHECK(set.entries() == LabeledSet::Entries{{"t1", "support"}, {"t2", "query"}});

    CHECK(parse_failure(R"({"subtaskbenglish":{}})", LabelFormat::RumourEval2019) == ErrorKind::Parse);
    CHECK(parse_failure(R"({"subtaskaenglish":{"t1":"a","t1":"b"}})", LabelFormat::RumourEval2019) ==
          ErrorKind::Duplicate);
    // Duplicates elsewhere in the document are not ids.
    CHECK_NOTHROW(parse(R"({"other":{"t1":"a","t1":"b"},"subtaskaenglish":{"t1":"deny"}})",
                        LabelFormat::RumourEval2019));
    CHECK(parse_failure(R"({"subtaskaenglish":{}})", LabelFormat::RumourEval2019) == ErrorKind::Degenerate);
}

TEST_CASE("format names") {
    CHECK(parse_label_format("tsv") == LabelFormat::Tsv);
    CHECK(parse_label_format("json-map") == LabelFormat::JsonMap);
    CHECK(parse_label_format("rumoureval2019") == LabelFormat::RumourEval2019);
    CHECK_THROWS_AS(parse_label_format("xml"), Error);
}

TEST_CASE("parse_labels from a missing file is a parse error") {
    try {
        parse_labels(std::filesystem::path("/nonexistent/labels.tsv"), LabelFormat::Tsv);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }
}

TEST_CASE("property: tsv and json round trips, line order does not matter") {
    std::mt19937_64 rng(5);
    const std::vector<std::string> labels{"support", "deny", "query", "comment", "x y"};
    for (int trial = 0; trial < 50; ++trial) {
        LabeledSet::Entries entries;
        const auto n = std::uniform_int_distribution<int>(1, 60)(rng);
        for (int i = 0; i < n; ++i) {
            const auto id = fmt::format("{}-{}", std::uniform_int_distribution<int>(0, 9999)(rng), i);
            entries.emplace(id, labels[std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng)]);
        }
        const LabeledSet original("test", entries);
        CHECK(parse(to_tsv(original), LabelFormat::Tsv) == original);
        CHECK(parse(to_json_map(original), LabelFormat::JsonMap) == original);

        auto text = to_tsv(original);
        std::vector<std::string> lines;
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);) lines.push_back(line);
        std::shuffle(lines.begin(), lines.end(), rng);
        std::string shuffled;
        for (const auto& line : lines) shuffled += line + "\n";
        CHECK(parse(shuffled, LabelFormat::Tsv) == original);
    }
}

TEST_CASE("labeled set invariants") {
    CHECK_THROWS_AS(LabeledSet("s", {}), Error);
    CHECK_THROWS_AS(LabeledSet("s", {{"", "a"}}), Error);
    CHECK_THROWS_AS(LabeledSet("s", {{" t1", "a"}}), Error);
    CHECK_THROWS_AS(LabeledSet("s", {{"t\t1", "a"}}), Error);
    CHECK_THROWS_AS(LabeledSet("s", {{"t1", " "}}), Error);
    CHECK(LabeledSet("s", {{"t1", " A "}}).entries().at("t1") == "a");
}

TEST_CASE("align") {
    const auto schema = LabelSchema::rumoureval();
    const auto gold = set_of({{"t1", "support"}, {"t2", "deny"}, {"t3", "query"}}, "gold");

    SUBCASE("identical ids") {
        const auto pred = set_of({{"t3", "query"}, {"t1", "deny"}, {"t2", "deny"}}, "pred");
        const auto pairs = align(gold, pred, schema);
        CHECK(pairs.ids == std::vector<std::string>{"t1", "t2", "t3"});
        CHECK(pairs.gold == std::vector<std::string>{"support", "deny", "query"});
        CHECK(pairs.pred == std::vector<std::string>{"deny", "deny", "query"});
        CHECK(pairs.missing_in_pred == 0);
        CHECK(pairs.extra_in_pred == 0);
    }
    SUBCASE("missing id: strict fails, intersect drops it") {
        const auto pred = set_of({{"t1", "support"}, {"t3", "query"}}, "pred");
        try {
            align(gold, pred, schema, AlignMode::Strict);
            FAIL("expected alignment error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Alignment);
            const std::string msg = e.what();
            CHECK(msg.find("1 missing, 0 extra") != std::string::npos);
            CHECK(msg.find("missing: t2") != std::string::npos);
        }
        const auto pairs = align(gold, pred, schema, AlignMode::Intersect);
        CHECK(pairs.ids.size() == 2);
        CHECK(pairs.missing_in_pred == 1);
        CHECK(pairs.extra_in_pred == 0);
    }
    SUBCASE("extra ids are counted and listed up to ten") {
        LabeledSet::Entries entries = gold.entries();
        for (int i = 0; i < 12; ++i) entries.emplace(fmt::format("x{:02d}", i), "comment");
        const LabeledSet pred("pred", entries);
        try {
            align(gold, pred, schema);
            FAIL("expected alignment error");
        } catch (const Error& e) {
            const std::string msg = e.what();
            CHECK(msg.find("0 missing, 12 extra") != std::string::npos);
            CHECK(msg.find("x09") != std::string::npos);
            CHECK(msg.find("x10") == std::string::npos);
            CHECK(msg.find("(2 more)") != std::string::npos);
        }
        CHECK(align(gold, pred, schema, AlignMode::Intersect).extra_in_pred == 12);
    }
    SUBCASE("no overlap") {
        const auto pred = set_of({{"z", "support"}}, "pred");
        CHECK_THROWS_AS(align(gold, pred, schema, AlignMode::Intersect), Error);
    }
    SUBCASE("labels outside the schema") {
        const auto pred = set_of({{"t1", "support"}, {"t2", "supporting"}, {"t3", "query"}}, "pred");
        try {
            align(gold, pred, schema);
            FAIL("expected schema error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Schema);
            CHECK(std::string(e.what()).find("supporting") != std::string::npos);
        }
    }
}

TEST_CASE("property: strict succeeds iff id sets match; intersect size is the intersection") {
    std::mt19937_64 rng(17);
    const auto schema = LabelSchema::rumoureval();
    for (int trial = 0; trial < 100; ++trial) {
        LabeledSet::Entries g, p;
        std::bernoulli_distribution coin(0.5);
        std::size_t common = 0;
        for (int i = 0; i < 30; ++i) {
            const bool in_g = coin(rng) || trial % 3 == 0;
            const bool in_p = trial % 3 == 0 ? in_g : coin(rng);
            if (in_g) g.emplace(fmt::format("i{}", i), "comment");
            if (in_p) p.emplace(fmt::format("i{}", i), "deny");
            if (in_g && in_p) ++common;
        }
        if (g.empty() || p.empty()) continue;
        const LabeledSet gold("g", g), pred("p", p);
        const bool equal = g.size() == p.size() && common == g.size();
        bool strict_ok = true;
        try {
            align(gold, pred, schema, AlignMode::Strict);
        } catch (const Error&) {
            strict_ok = false;
        }
        CHECK(strict_ok == equal);
        if (common > 0) CHECK(align(gold, pred, schema, AlignMode::Intersect).ids.size() == common);
    }
}

TEST_CASE("class distribution") {
    const auto schema = LabelSchema::rumoureval();

    SUBCASE("2019 test set counts") {
        const auto dist = class_distribution(fixtures::gold_with_counts({1184, 606, 608, 6176}), schema);
        CHECK(dist.total == 8574);
        const std::vector<std::string> shown{"0.14", "0.07", "0.07", "0.72"};
        for (std::size_t c = 0; c < 4; ++c) CHECK(fmt::format("{:.2f}", dist.classes[c].fraction) == shown[c]);
    }
    SUBCASE("single class") {
        const auto dist = class_distribution(set_of({{"a", "deny"}, {"b", "deny"}}), schema);
        CHECK(dist.classes[1].fraction == 1.0);
        CHECK(dist.classes[0].count == 0);
    }
    SUBCASE("M20 gold") {
        const auto dist = class_distribution(fixtures::labeled(fixtures::expand(fixtures::kM20).gold, "m20"), schema);
        const std::vector<double> expected{0.20, 0.20, 0.20, 0.40};
        for (std::size_t c = 0; c < 4; ++c) CHECK(dist.classes[c].fraction == doctest::Approx(expected[c]));
    }
    SUBCASE("unknown label") {
        CHECK_THROWS_AS(class_distribution(set_of({{"a", "rumour"}}), schema), Error);
    }
    SUBCASE("property: fractions sum to one") {
        std::mt19937_64 rng(8);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::uint64_t> counts(4);
            for (auto& c : counts) c = std::uniform_int_distribution<std::uint64_t>(0, 300)(rng);
            counts[trial % 4] += 1;
            const auto dist = class_distribution(fixtures::gold_with_counts(counts), schema);
            double sum = 0;
            std::uint64_t total = 0;
            for (const auto& c : dist.classes) {
                sum += c.fraction;
                total += c.count;
            }
            CHECK(std::abs(sum - 1.0) <= 1e-12);
            CHECK(total == dist.total);
        }
    }
}

}  // TEST_SUITE
