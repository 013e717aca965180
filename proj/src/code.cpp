#include "skewcode/code.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "skewcode/graph.hpp"

namespace skewcode {

namespace {

constexpr int kMaxIndexW = 90;        // largest w whose codebook fits 64-bit indices
constexpr int kMaxMaterializeW = 30;  // F_30 = 2178309 codewords
constexpr int kMaxVerifyW = 12;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return (a > kSaturated - b) ? kSaturated : a + b;
}

int floor_half(int v) { return v / 2; }  // v >= 0 throughout

}  // namespace

std::uint64_t Codebook::choose(int n, int k) const {
    if (k < 0 || k > n) return 0;
    return pascal_[static_cast<std::size_t>(n) * (n + 1) / 2 + k];
}

std::uint64_t Codebook::class_size(int h) const {
    if (h < 0 || h > w_) throw std::invalid_argument("class_size: weight out of range");
    return sizes_[h];
}

std::uint64_t Codebook::class_offset(int h) const {
    if (h < 0 || h > w_ + 1) throw std::invalid_argument("class_offset: weight out of range");
    return offsets_[h];
}

const std::vector<std::vector<OffsetTuple>>& Codebook::classes() const {
    if (!materialized()) throw std::logic_error("codebook was built counting-only");
    return classes_;
}

Codebook build_codebook_index(int w) {
    if (w < 1) throw std::invalid_argument("codebook: w must be >= 1");
    if (w > kMaxIndexW)
        throw std::invalid_argument("codebook: w too large for 64-bit message indexing");

    Codebook cb;
    cb.w_ = w;

    // Pascal triangle with saturating adds. Every entry actually used is
    // exact: the ancestors of a sub-saturation entry never saturate.
    cb.pascal_.assign(static_cast<std::size_t>(w + 1) * (w + 2) / 2, 0);
    for (int n = 0; n <= w; ++n) {
        const std::size_t row = static_cast<std::size_t>(n) * (n + 1) / 2;
        cb.pascal_[row] = 1;
        cb.pascal_[row + n] = 1;
        const std::size_t prev = static_cast<std::size_t>(n - 1) * n / 2;
        for (int k = 1; k < n; ++k)
            cb.pascal_[row + k] = sat_add(cb.pascal_[prev + k - 1], cb.pascal_[prev + k]);
    }

    cb.sizes_.resize(w + 1);
    cb.offsets_.assign(w + 2, 0);
    for (int h = 0; h <= w; ++h) {
        const std::uint64_t size = cb.choose(h + floor_half(w - h), h);
        if (size == kSaturated) throw std::overflow_error("codebook: class size overflow");
        cb.sizes_[h] = size;
        if (cb.offsets_[h] > kSaturated - size)
            throw std::overflow_error("codebook: total overflow");
        cb.offsets_[h + 1] = cb.offsets_[h] + size;
    }
    return cb;
}

Codebook build_codebook(int w) {
    if (w > kMaxMaterializeW)
        throw std::invalid_argument("codebook: w above the materialization guard");
    Codebook cb = build_codebook_index(w);
    cb.classes_.resize(w + 1);
    for (int h = 0; h <= w; ++h) {
        const int d = floor_half(w - h);
        auto& cls = cb.classes_[h];
        cls = enumerate_tuples(h, d);  // halved codewords, lexicographic
        for (auto& x : cls) {
            for (int& v : x.offsets) v *= 2;
            x.bound = w - h;
        }
    }
    return cb;
}

OffsetTuple f_map(const OffsetTuple& x) {
    OffsetTuple y = x;
    for (int& v : y.offsets) v = 2 * (v / 2);
    return y;
}

bool verify_adjacency_reducing(int w) {
    if (w < 1) throw std::invalid_argument("verify_adjacency_reducing: w must be >= 1");
    if (w > kMaxVerifyW)
        throw std::invalid_argument("verify_adjacency_reducing: w above the exhaustive guard");

    for (int h = 0; h <= w; ++h) {
        const auto vertices = enumerate_tuples(h, w - h);
        const int n = static_cast<int>(vertices.size());

        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (is_edge(vertices[i], vertices[j])) continue;
                const OffsetTuple fi = f_map(vertices[i]);
                const OffsetTuple fj = f_map(vertices[j]);
                if (fi == fj || is_edge(fi, fj)) return false;
            }
        }

        // range independence: distinct images are never adjacent
        std::vector<OffsetTuple> range;
        range.reserve(vertices.size());
        for (const auto& v : vertices) range.push_back(f_map(v));
        std::sort(range.begin(), range.end());
        range.erase(std::unique(range.begin(), range.end()), range.end());
        for (std::size_t i = 0; i < range.size(); ++i)
            for (std::size_t j = i + 1; j < range.size(); ++j)
                if (is_edge(range[i], range[j])) return false;
    }
    return true;
}

namespace {

// Rank/unrank of halved codewords: weakly increasing h-tuples over [0, d]
// in lexicographic order, counted with C((d - v) + len, len) suffixes.

std::vector<int> unrank_halved(const Codebook& cb, int h, int d, std::uint64_t r) {
    std::vector<int> y(h);
    int lo = 0;
    for (int i = 0; i < h; ++i) {
        const int left = h - 1 - i;
        for (int v = lo;; ++v) {
            if (v > d) throw std::logic_error("unrank: rank exceeds class size");
            const std::uint64_t cnt = cb.choose((d - v) + left, left);
            if (r < cnt) { y[i] = v; lo = v; break; }
            r -= cnt;
        }
    }
    return y;
}

std::uint64_t rank_halved(const Codebook& cb, int d, const std::vector<int>& y) {
    std::uint64_t r = 0;
    int lo = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const int left = static_cast<int>(y.size()) - 1 - static_cast<int>(i);
        for (int v = lo; v < y[i]; ++v) r += cb.choose((d - v) + left, left);
        lo = y[i];
    }
    return r;
}

}  // namespace

BinaryWord encode(Message m, const Codebook& cb) {
    if (m.index >= cb.total()) throw std::out_of_range("encode: message index out of range");

    int h = 0;
    while (cb.class_offset(h + 1) <= m.index) ++h;
    const std::uint64_t r = m.index - cb.class_offset(h);

    const int w = cb.w();
    const int d = floor_half(w - h);
    OffsetTuple x;
    x.offsets = unrank_halved(cb, h, d, r);
    for (int& v : x.offsets) v *= 2;
    x.bound = w - h;
    return from_offsets(x, w);
}

Message rank(const BinaryWord& word, const Codebook& cb) {
    if (word.w() != cb.w()) throw std::invalid_argument("rank: block length mismatch");

    OffsetTuple x = to_offsets(word);
    std::vector<int> y(x.offsets.size());
    for (std::size_t i = 0; i < x.offsets.size(); ++i) {
        if (x.offsets[i] % 2 != 0)
            throw NotACodeword("rank: offset " + std::to_string(x.offsets[i]) + " is odd");
        y[i] = x.offsets[i] / 2;
    }

    const int h = x.weight();
    const int d = floor_half(cb.w() - h);
    return Message{cb.class_offset(h) + rank_halved(cb, d, y)};
}

Message decode(const ReceivedBlock& rx, const Codebook& cb) {
    const int w = cb.w();
    const int h = static_cast<int>(rx.arrivals.size());
    if (!std::is_sorted(rx.arrivals.begin(), rx.arrivals.end()))
        throw std::invalid_argument("decode: arrivals not sorted");
    if (h > w) throw ParityViolation("decode: more pulses than slots");

    std::vector<int> y(h);
    int prev_offset = 0;
    for (int i = 1; i <= h; ++i) {
        const int r = rx.arrivals[i - 1];
        if (r < 1 || r > 2 * w + 1)
            throw ParityViolation("decode: arrival index outside the block");

        // the transmitted slot is whichever of floor(r/2), ceil(r/2) has
        // the parity of i; codeword offsets are even, so p_i = i + even
        int p;
        if (r % 2 == 0) {
            p = r / 2;
            if ((p - i) % 2 != 0)
                throw ParityViolation("decode: no slot of the required parity");
        } else {
            p = ((r / 2) - i) % 2 == 0 ? r / 2 : r / 2 + 1;
        }
        if (p < 1 || p > w)
            throw ParityViolation("decode: resolved slot outside the block");

        const int offset = p - i;
        if (offset < 0 || offset < prev_offset || offset > w - h)
            throw ParityViolation("decode: reconstructed offsets not a codeword");
        prev_offset = offset;
        y[i - 1] = offset / 2;
    }

    const int d = floor_half(w - h);
    return Message{cb.class_offset(h) + rank_halved(cb, d, y)};
}

std::vector<BinaryWord> encode_stream(const std::vector<Message>& ms, const Codebook& cb) {
    std::vector<BinaryWord> words;
    words.reserve(ms.size());
    for (const Message& m : ms) words.push_back(encode(m, cb));
    return words;
}

std::vector<Message> decode_stream(const std::vector<ReceivedBlock>& blocks, const Codebook& cb) {
    std::vector<Message> ms;
    ms.reserve(blocks.size());
    for (const ReceivedBlock& rx : blocks) ms.push_back(decode(rx, cb));
    return ms;
}

std::string codebook_to_json(const Codebook& cb) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : cb.classes()) {
        nlohmann::json jcls = nlohmann::json::array();
        for (const auto& x : cls) jcls.push_back(x.offsets);
        classes.push_back(std::move(jcls));
    }
    nlohmann::json j{{"w", cb.w()}, {"classes", std::move(classes)}};
    return j.dump();
}

std::string to_json_line(const StreamRecord& rec) {
    nlohmann::json j{{"block", rec.block},
                     {"message", rec.message},
                     {"word", rec.word},
                     {"arrivals", rec.arrivals}};
    if (!rec.times.empty()) j["times"] = rec.times;
    return j.dump();
}

StreamRecord stream_record_from_json(const std::string& line) {
    const nlohmann::json j = nlohmann::json::parse(line);
    StreamRecord rec;
    rec.block = j.at("block").get<std::uint64_t>();
    rec.message = j.at("message").get<std::uint64_t>();
    rec.word = j.at("word").get<std::string>();
    rec.arrivals = j.at("arrivals").get<std::vector<int>>();
    if (j.contains("times")) rec.times = j.at("times").get<std::vector<double>>();
    return rec;
}

}  // namespace skewcode
