#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewcode/channel.hpp"
#include "skewcode/words.hpp"

namespace skewcode {

// Thrown by decode when the received block cannot have come from a
// codeword: a detected breach of the channel contract, never a guess.
class ParityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown by rank for words outside the codebook.
class NotACodeword : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Message {
    std::uint64_t index = 0;

    auto operator<=>(const Message&) const = default;
};

// The codebook for block length w: per weight class h, all offset tuples
// with even entries bounded by w - h. Canonical message order is classes
// ascending in h, lexicographic within a class. Counting and message
// indexing are always available; the codeword lists themselves are only
// filled by the materializing builder.
class Codebook {
public:
    int w() const { return w_; }
    std::uint64_t class_size(int h) const;
    std::uint64_t class_offset(int h) const;  // messages of weight < h
    std::uint64_t total() const { return offsets_.back(); }

    bool materialized() const { return !classes_.empty(); }
    const std::vector<std::vector<OffsetTuple>>& classes() const;

    // Exact C(n, k) for n <= w; shared by rank/unrank.
    std::uint64_t choose(int n, int k) const;

private:
    friend Codebook build_codebook_index(int w);
    friend Codebook build_codebook(int w);

    int w_ = 0;
    std::vector<std::uint64_t> pascal_;               // row-major lower triangle
    std::vector<std::uint64_t> sizes_;                // per h
    std::vector<std::uint64_t> offsets_;              // size w + 2
    std::vector<std::vector<OffsetTuple>> classes_;   // empty unless materialized
};

// Counting-only codebook. Message indices are 64-bit, which holds the
// full codebook for w <= 90; larger w is rejected.
Codebook build_codebook_index(int w);

// Codebook with all codewords materialized; guarded to w <= 30.
Codebook build_codebook(int w);

// Componentwise 2*floor(x_i/2): rounds every offset down to even.
OffsetTuple f_map(const OffsetTuple& x);

// Checks, exhaustively over every weight class of block length w, that
// the mapping sends non-adjacent pairs to distinct non-adjacent pairs and
// that its range is an independent set. Guarded to w <= 12.
bool verify_adjacency_reducing(int w);

BinaryWord encode(Message m, const Codebook& cb);

Message rank(const BinaryWord& word, const Codebook& cb);

// Zero-error decoding: the i'th arrival resolves to the unique slot of
// the right parity, which recovers the even offsets exactly.
Message decode(const ReceivedBlock& rx, const Codebook& cb);

// Blockwise stream codec; block i carries message ms[i] independently.
std::vector<BinaryWord> encode_stream(const std::vector<Message>& ms, const Codebook& cb);
std::vector<Message> decode_stream(const std::vector<ReceivedBlock>& blocks, const Codebook& cb);

// JSON export { "w": ..., "classes": [...] }; needs a materialized codebook.
std::string codebook_to_json(const Codebook& cb);

// One block of a codec stream, serialized as a single JSON line.
struct StreamRecord {
    std::uint64_t block = 0;
    std::uint64_t message = 0;
    std::string word;            // bitstring
    std::vector<int> arrivals;
    std::vector<double> times;   // optional physical timestamps; empty = absent
};

std::string to_json_line(const StreamRecord& rec);
StreamRecord stream_record_from_json(const std::string& line);

}  // namespace skewcode
