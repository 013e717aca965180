#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace skewcode {

// One block of w binary symbols a_1..a_w. Slot indices are 1-based
// throughout; bits[k-1] holds a_k. w = 0 (the empty block) is legal here
// but rejected by the channel and graph layers.
struct BinaryWord {
    std::vector<std::uint8_t> bits;

    int w() const { return static_cast<int>(bits.size()); }
    int hamming_weight() const;

    std::string to_string() const;                    // "10010"
    static BinaryWord from_string(const std::string& s);

    auto operator<=>(const BinaryWord&) const = default;
};

// Pulse offsets: the i'th pulse of a weight-h word sits in slot p_i, and
// its offset is x_i = p_i - i. Offsets are weakly increasing with
// 0 <= x_1 <= ... <= x_h <= bound, where bound = w - h.
struct OffsetTuple {
    std::vector<int> offsets;
    int bound = 0;

    int weight() const { return static_cast<int>(offsets.size()); }
    std::string to_string() const;                    // "0,2"; empty for h = 0

    auto operator<=>(const OffsetTuple&) const = default;
};

bool is_valid(const OffsetTuple& x);

// All weakly increasing tuples of length h with entries in [0, bound],
// lexicographically sorted.
std::vector<OffsetTuple> enumerate_tuples(int h, int bound);

OffsetTuple to_offsets(const BinaryWord& word);

// Inverse of to_offsets. Requires x valid and x.bound == w - x.weight().
BinaryWord from_offsets(const OffsetTuple& x, int w);

}  // namespace skewcode
