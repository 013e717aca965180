#include "skewcode/channel.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewcode {

std::vector<int> allowed_deviations(int k, int w, SkewMode mode, TernaryBoundary boundary) {
    if (w < 1) throw std::invalid_argument("allowed_deviations: w must be >= 1");
    if (k < 1 || k > w) throw std::invalid_argument("allowed_deviations: slot out of range");

    if (w == 1) return {0};

    const bool first = (k == 1);
    const bool last = (k == w);
    if (mode == SkewMode::Binary) {
        if (first) return {+1};
        if (last) return {-1};
        return {-1, +1};
    }
    // Ternary
    if (first) return boundary == TernaryBoundary::Forced ? std::vector<int>{+1}
                                                          : std::vector<int>{0, +1};
    if (last) return boundary == TernaryBoundary::Forced ? std::vector<int>{-1}
                                                         : std::vector<int>{-1, 0};
    return {-1, 0, +1};
}

bool is_admissible(const SkewPattern& skew, SkewMode mode, TernaryBoundary boundary) {
    const int w = skew.w();
    if (w < 1) return false;
    for (int k = 1; k <= w; ++k) {
        const auto allowed = allowed_deviations(k, w, mode, boundary);
        if (std::find(allowed.begin(), allowed.end(), skew.sigmas[k - 1]) == allowed.end())
            return false;
    }
    return true;
}

void for_each_skew(int w, SkewMode mode, TernaryBoundary boundary,
                   const std::function<void(const SkewPattern&)>& fn) {
    if (w < 1) throw std::invalid_argument("for_each_skew: w must be >= 1");

    std::vector<std::vector<int>> choices(w);
    for (int k = 1; k <= w; ++k) choices[k - 1] = allowed_deviations(k, w, mode, boundary);

    SkewPattern pattern;
    pattern.sigmas.resize(w);
    std::vector<std::size_t> idx(w, 0);
    for (int k = 0; k < w; ++k) pattern.sigmas[k] = choices[k][0];

    for (;;) {
        fn(pattern);
        int k = w - 1;  // odometer: last slot fastest
        while (k >= 0 && idx[k] + 1 == choices[k].size()) {
            idx[k] = 0;
            pattern.sigmas[k] = choices[k][0];
            --k;
        }
        if (k < 0) return;
        ++idx[k];
        pattern.sigmas[k] = choices[k][idx[k]];
    }
}

std::vector<SkewPattern> enumerate_skews(int w, SkewMode mode, TernaryBoundary boundary) {
    std::vector<SkewPattern> out;
    for_each_skew(w, mode, boundary, [&](const SkewPattern& s) { out.push_back(s); });
    return out;
}

ReceivedBlock transmit(const BinaryWord& word, const SkewPattern& skew) {
    if (word.w() < 1) throw std::invalid_argument("transmit: empty block");
    if (word.w() != skew.w()) throw std::invalid_argument("transmit: word/skew length mismatch");

    ReceivedBlock rx;
    for (int k = 1; k <= word.w(); ++k)
        if (word.bits[k - 1]) rx.arrivals.push_back(2 * k + skew.sigmas[k - 1]);
    // slot order already yields non-decreasing arrivals
    return rx;
}

std::vector<ReceivedBlock> output_set(const BinaryWord& word, SkewMode mode,
                                      TernaryBoundary boundary) {
    const int w = word.w();
    if (w < 1) throw std::invalid_argument("output_set: empty block");

    std::vector<int> pulse_slots;
    for (int k = 1; k <= w; ++k)
        if (word.bits[k - 1]) pulse_slots.push_back(k);
    const int h = static_cast<int>(pulse_slots.size());

    std::vector<std::vector<int>> choices(h);
    for (int i = 0; i < h; ++i)
        choices[i] = allowed_deviations(pulse_slots[i], w, mode, boundary);

    std::vector<ReceivedBlock> out;
    ReceivedBlock rx;
    rx.arrivals.resize(h);
    std::vector<std::size_t> idx(h, 0);
    for (;;) {
        for (int i = 0; i < h; ++i) rx.arrivals[i] = 2 * pulse_slots[i] + choices[i][idx[i]];
        std::sort(rx.arrivals.begin(), rx.arrivals.end());
        out.push_back(rx);

        int i = h - 1;
        while (i >= 0 && idx[i] + 1 == choices[i].size()) idx[i--] = 0;
        if (i < 0) break;
        ++idx[i];
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool confusable_bruteforce(const BinaryWord& a, const BinaryWord& b, SkewMode mode,
                           TernaryBoundary boundary) {
    if (a.w() != b.w()) throw std::invalid_argument("confusable_bruteforce: length mismatch");

    const auto oa = output_set(a, mode, boundary);
    const auto ob = output_set(b, mode, boundary);
    // both sorted: two-pointer intersection test
    std::size_t i = 0, j = 0;
    while (i < oa.size() && j < ob.size()) {
        if (oa[i] == ob[j]) return true;
        if (oa[i] < ob[j]) ++i; else ++j;
    }
    return false;
}

std::vector<double> arrival_times(const ReceivedBlock& rx, const ChannelTiming& timing) {
    if (timing.T <= 0) throw std::invalid_argument("arrival_times: T must be positive");
    std::vector<double> times;
    times.reserve(rx.arrivals.size());
    for (int r : rx.arrivals) times.push_back(timing.tau + (r / 2.0) * timing.T);
    return times;
}

}  // namespace skewcode
