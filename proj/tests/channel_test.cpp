#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "skewcode/channel.hpp"
#include "skewcode/words.hpp"

using namespace skewcode;

namespace {

std::vector<BinaryWord> all_words(int w) {
    std::vector<BinaryWord> out;
    for (unsigned mask = 0; mask < (1u << w); ++mask) {
        BinaryWord word;
        for (int k = 0; k < w; ++k) word.bits.push_back((mask >> k) & 1u);
        out.push_back(word);
    }
    return out;
}

const std::vector<std::pair<SkewMode, TernaryBoundary>> kVariants = {
    {SkewMode::Binary, TernaryBoundary::Forced},
    {SkewMode::Ternary, TernaryBoundary::Relaxed},
    {SkewMode::Ternary, TernaryBoundary::Forced},
};

}  // namespace

TEST_CASE("allowed deviations per slot") {
    CHECK(allowed_deviations(1, 4, SkewMode::Binary) == std::vector<int>{+1});
    CHECK(allowed_deviations(4, 4, SkewMode::Binary) == std::vector<int>{-1});
    CHECK(allowed_deviations(2, 4, SkewMode::Binary) == std::vector<int>{-1, +1});

    CHECK(allowed_deviations(1, 4, SkewMode::Ternary) == std::vector<int>{0, +1});
    CHECK(allowed_deviations(4, 4, SkewMode::Ternary) == std::vector<int>{-1, 0});
    CHECK(allowed_deviations(2, 4, SkewMode::Ternary) == std::vector<int>{-1, 0, +1});

    CHECK(allowed_deviations(1, 4, SkewMode::Ternary, TernaryBoundary::Forced) ==
          std::vector<int>{+1});
    CHECK(allowed_deviations(4, 4, SkewMode::Ternary, TernaryBoundary::Forced) ==
          std::vector<int>{-1});

    // the single slot of a w = 1 block is both boundaries at once
    for (const auto& [mode, boundary] : kVariants)
        CHECK(allowed_deviations(1, 1, mode, boundary) == std::vector<int>{0});

    CHECK_THROWS_AS(allowed_deviations(0, 4, SkewMode::Binary), std::invalid_argument);
    CHECK_THROWS_AS(allowed_deviations(5, 4, SkewMode::Binary), std::invalid_argument);
    CHECK_THROWS_AS(allowed_deviations(1, 0, SkewMode::Binary), std::invalid_argument);
}

TEST_CASE("skew enumeration counts") {
    // binary: boundaries forced, w - 2 free slots with 2 choices
    CHECK(enumerate_skews(1, SkewMode::Binary).size() == 1);
    CHECK(enumerate_skews(2, SkewMode::Binary).size() == 1);
    CHECK(enumerate_skews(4, SkewMode::Binary).size() == 4);
    CHECK(enumerate_skews(6, SkewMode::Binary).size() == 16);

    // ternary relaxed: 2 choices per boundary, 3 per interior slot
    CHECK(enumerate_skews(2, SkewMode::Ternary).size() == 4);
    CHECK(enumerate_skews(4, SkewMode::Ternary).size() == 36);

    // ternary forced: boundaries pinned
    CHECK(enumerate_skews(2, SkewMode::Ternary, TernaryBoundary::Forced).size() == 1);
    CHECK(enumerate_skews(4, SkewMode::Ternary, TernaryBoundary::Forced).size() == 9);

    CHECK_THROWS_AS(enumerate_skews(0, SkewMode::Binary), std::invalid_argument);
}

TEST_CASE("skew enumeration is admissible, distinct and ordered") {
    for (int w = 1; w <= 6; ++w) {
        for (const auto& [mode, boundary] : kVariants) {
            const auto skews = enumerate_skews(w, mode, boundary);
            CHECK(std::is_sorted(skews.begin(), skews.end()));
            CHECK(std::adjacent_find(skews.begin(), skews.end()) == skews.end());
            for (const auto& s : skews) {
                CHECK(s.w() == w);
                CHECK(is_admissible(s, mode, boundary));
            }
        }
    }
}

TEST_CASE("admissibility rejects bad patterns") {
    CHECK_FALSE(is_admissible(SkewPattern{{-1, -1}}, SkewMode::Binary));   // slot 1 left
    CHECK_FALSE(is_admissible(SkewPattern{{+1, +1}}, SkewMode::Binary));   // slot w right
    CHECK_FALSE(is_admissible(SkewPattern{{+1, 0, -1}}, SkewMode::Binary));  // no 0 in binary
    CHECK(is_admissible(SkewPattern{{+1, 0, -1}}, SkewMode::Ternary));
    CHECK_FALSE(is_admissible(SkewPattern{{+1, 2, -1}}, SkewMode::Ternary));
    CHECK_FALSE(is_admissible(SkewPattern{{}}, SkewMode::Binary));
}

TEST_CASE("transmit lands pulses on the half-slot grid") {
    // adjacent pulses shifting toward each other collide on one index
    const ReceivedBlock rx = transmit(BinaryWord::from_string("11"), SkewPattern{{+1, -1}});
    CHECK(rx.arrivals == std::vector<int>{3, 3});

    CHECK(transmit(BinaryWord::from_string("10010"), SkewPattern{{+1, -1, -1, -1, -1}}).arrivals ==
          std::vector<int>{3, 7});
    CHECK(transmit(BinaryWord::from_string("00"), SkewPattern{{+1, -1}}).arrivals.empty());
    CHECK(transmit(BinaryWord::from_string("1"), SkewPattern{{0}}).arrivals ==
          std::vector<int>{2});

    CHECK_THROWS_AS(transmit(BinaryWord::from_string("10"), SkewPattern{{+1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(transmit(BinaryWord{}, SkewPattern{{}}), std::invalid_argument);
}

TEST_CASE("transmit preserves pulse count and order") {
    for (int w = 1; w <= 6; ++w) {
        for (const auto& [mode, boundary] : kVariants) {
            const auto skews = enumerate_skews(w, mode, boundary);
            for (const BinaryWord& word : all_words(w)) {
                for (const auto& s : skews) {
                    const ReceivedBlock rx = transmit(word, s);
                    CHECK(static_cast<int>(rx.arrivals.size()) == word.hamming_weight());
                    CHECK(std::is_sorted(rx.arrivals.begin(), rx.arrivals.end()));
                    for (int r : rx.arrivals) {
                        CHECK(r >= 1);
                        CHECK(r <= 2 * w + 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("output set of a two-pulse word") {
    const BinaryWord word = BinaryWord::from_string("11");

    const auto binary = output_set(word, SkewMode::Binary);
    CHECK(binary == std::vector<ReceivedBlock>{ReceivedBlock{{3, 3}}});

    const auto ternary = output_set(word, SkewMode::Ternary);
    CHECK(ternary == std::vector<ReceivedBlock>{ReceivedBlock{{2, 3}}, ReceivedBlock{{2, 4}},
                                                ReceivedBlock{{3, 3}}, ReceivedBlock{{3, 4}}});
}

TEST_CASE("output set matches exhaustive transmission") {
    for (int w = 1; w <= 5; ++w) {
        for (const auto& [mode, boundary] : kVariants) {
            const auto skews = enumerate_skews(w, mode, boundary);
            for (const BinaryWord& word : all_words(w)) {
                std::set<ReceivedBlock> expected;
                for (const auto& s : skews) expected.insert(transmit(word, s));
                const auto got = output_set(word, mode, boundary);
                CHECK(got == std::vector<ReceivedBlock>(expected.begin(), expected.end()));
            }
        }
    }
}

TEST_CASE("confusability by brute force") {
    const BinaryWord w10 = BinaryWord::from_string("10");
    const BinaryWord w01 = BinaryWord::from_string("01");
    CHECK(confusable_bruteforce(w10, w01, SkewMode::Binary));

    // one slot of separation still collides
    CHECK(confusable_bruteforce(BinaryWord::from_string("100"), BinaryWord::from_string("010"),
                                SkewMode::Binary));
    // two slots of separation never collide
    CHECK_FALSE(confusable_bruteforce(BinaryWord::from_string("100"),
                                      BinaryWord::from_string("001"), SkewMode::Binary));
    // different pulse counts are always distinguishable
    CHECK_FALSE(confusable_bruteforce(BinaryWord::from_string("110"),
                                      BinaryWord::from_string("100"), SkewMode::Ternary));

    CHECK_THROWS_AS(confusable_bruteforce(w10, BinaryWord::from_string("100"), SkewMode::Binary),
                    std::invalid_argument);
}

TEST_CASE("confusability is reflexive and symmetric") {
    const auto words = all_words(4);
    for (const auto& a : words) {
        CHECK(confusable_bruteforce(a, a, SkewMode::Binary));
        for (const auto& b : words)
            CHECK(confusable_bruteforce(a, b, SkewMode::Ternary) ==
                  confusable_bruteforce(b, a, SkewMode::Ternary));
    }
}

TEST_CASE("arrival timestamps") {
    const ReceivedBlock rx{{3, 4}};
    const auto times = arrival_times(rx, ChannelTiming{2.0, 0.5});
    REQUIRE(times.size() == 2);
    CHECK(times[0] == doctest::Approx(3.5));
    CHECK(times[1] == doctest::Approx(4.5));

    CHECK(arrival_times(ReceivedBlock{}, ChannelTiming{}).empty());
    CHECK_THROWS_AS(arrival_times(rx, ChannelTiming{0.0, 0.0}), std::invalid_argument);
}
