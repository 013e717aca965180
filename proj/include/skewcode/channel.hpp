#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "skewcode/words.hpp"

namespace skewcode {

// Everything below lives on the half-slot grid: a pulse transmitted in
// slot k with deviation sigma_k (in units of T/2) arrives at integer
// index 2k + sigma_k. The receiver knows T, the pulse shape and the
// propagation delay, so this index is all the timing information there is.

enum class SkewMode { Binary, Ternary };

// Sub-variants of the ternary mode: whether the boundary slots keep the
// forced +-1 deviation of the binary mode or may also stay put.
enum class TernaryBoundary { Relaxed, Forced };

// Per-slot half-slot deviations sigma_1..sigma_w. Slot 1 never shifts
// left and slot w never shifts right, so pulses stay inside their block.
struct SkewPattern {
    std::vector<int> sigmas;  // sigmas[k-1] = deviation of slot k

    int w() const { return static_cast<int>(sigmas.size()); }

    auto operator<=>(const SkewPattern&) const = default;
};

// Deviations admissible for slot k (1-based) of a w-slot block. For the
// degenerate w = 1 block the only option is 0 in every mode: the single
// slot is both boundaries at once.
std::vector<int> allowed_deviations(int k, int w, SkewMode mode,
                                    TernaryBoundary boundary = TernaryBoundary::Relaxed);

bool is_admissible(const SkewPattern& skew, SkewMode mode,
                   TernaryBoundary boundary = TernaryBoundary::Relaxed);

// Every admissible pattern exactly once, in odometer order (slot w fastest).
std::vector<SkewPattern> enumerate_skews(int w, SkewMode mode,
                                         TernaryBoundary boundary = TernaryBoundary::Relaxed);

void for_each_skew(int w, SkewMode mode, TernaryBoundary boundary,
                   const std::function<void(const SkewPattern&)>& fn);

// Sorted multiset of half-slot arrival indices. Pulses from adjacent slots
// that shift toward each other land on the same index, which then appears
// twice; pulse count is always observable.
struct ReceivedBlock {
    std::vector<int> arrivals;  // non-decreasing

    auto operator<=>(const ReceivedBlock&) const = default;
};

ReceivedBlock transmit(const BinaryWord& word, const SkewPattern& skew);

// All distinct outputs of `word` over the admissible skews, sorted. Only
// the deviations of the pulse-carrying slots matter, so this enumerates
// the product of their allowed sets rather than whole patterns.
std::vector<ReceivedBlock> output_set(const BinaryWord& word, SkewMode mode,
                                      TernaryBoundary boundary = TernaryBoundary::Relaxed);

// True iff a and b can produce the same received block.
bool confusable_bruteforce(const BinaryWord& a, const BinaryWord& b, SkewMode mode,
                           TernaryBoundary boundary = TernaryBoundary::Relaxed);

// Physical timing: T seconds per slot, tau seconds of propagation delay.
// Arrival index r maps to the timestamp tau + (r/2)*T.
struct ChannelTiming {
    double T = 1.0;
    double tau = 0.0;
};

std::vector<double> arrival_times(const ReceivedBlock& rx, const ChannelTiming& timing);

}  // namespace skewcode
