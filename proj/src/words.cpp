#include "skewcode/words.hpp"

#include <stdexcept>

namespace skewcode {

int BinaryWord::hamming_weight() const {
    int h = 0;
    for (auto b : bits) h += b;
    return h;
}

std::string BinaryWord::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

BinaryWord BinaryWord::from_string(const std::string& s) {
    BinaryWord word;
    word.bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("binary word may contain only '0' and '1'");
        word.bits.push_back(c == '1' ? 1 : 0);
    }
    return word;
}

std::string OffsetTuple::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(offsets[i]);
    }
    return s;
}

namespace {

void enumerate_tuples_rec(int h, int bound, int next_min, std::vector<int>& prefix,
                          std::vector<OffsetTuple>& out) {
    if (static_cast<int>(prefix.size()) == h) {
        out.push_back(OffsetTuple{prefix, bound});
        return;
    }
    for (int v = next_min; v <= bound; ++v) {
        prefix.push_back(v);
        enumerate_tuples_rec(h, bound, v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<OffsetTuple> enumerate_tuples(int h, int bound) {
    if (h < 0 || bound < 0) throw std::invalid_argument("enumerate_tuples: negative argument");
    std::vector<OffsetTuple> out;
    std::vector<int> prefix;
    enumerate_tuples_rec(h, bound, 0, prefix, out);
    return out;
}

bool is_valid(const OffsetTuple& x) {
    if (x.bound < 0) return false;
    int prev = 0;
    for (int v : x.offsets) {
        if (v < prev || v > x.bound) return false;
        prev = v;
    }
    return true;
}

OffsetTuple to_offsets(const BinaryWord& word) {
    OffsetTuple x;
    int i = 0;
    for (int k = 1; k <= word.w(); ++k) {
        if (word.bits[k - 1]) {
            ++i;
            x.offsets.push_back(k - i);
        }
    }
    x.bound = word.w() - i;
    return x;
}

BinaryWord from_offsets(const OffsetTuple& x, int w) {
    const int h = x.weight();
    if (w < 0 || h > w)
        throw std::invalid_argument("from_offsets: weight exceeds block length");
    if (x.bound != w - h)
        throw std::invalid_argument("from_offsets: bound does not match w - h");
    if (!is_valid(x))
        throw std::invalid_argument("from_offsets: offsets not weakly increasing in [0, bound]");

    BinaryWord word;
    word.bits.assign(w, 0);
    for (int i = 1; i <= h; ++i)
        word.bits[x.offsets[i - 1] + i - 1] = 1;  // slot p_i = x_i + i
    return word;
}

}  // namespace skewcode
