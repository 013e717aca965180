#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "skewcode/channel.hpp"
#include "skewcode/words.hpp"

namespace skewcode {

// One connected component of the confusability graph: all weight-h words
// of a w-slot block, held as offset tuples in lexicographic order. Edges
// are stored as sorted adjacency lists keyed by vertex rank.
struct WeightComponent {
    int w = 0;
    int h = 0;
    std::vector<OffsetTuple> vertices;
    std::vector<std::vector<int>> adj;
    std::size_t edge_count = 0;
};

// Confusability criterion on offset tuples: x != y and ||x - y||_inf <= 1.
bool is_edge(const OffsetTuple& x, const OffsetTuple& y);

WeightComponent build_component(int w, int h);

// Same vertices, edges recomputed from exhaustive channel outputs.
// Guarded to w <= 16.
WeightComponent oracle_component(int w, int h, SkewMode mode,
                                 TernaryBoundary boundary = TernaryBoundary::Relaxed);

// Exact maximum independent set, returned as ascending vertex ranks.
// Branch and bound with a greedy clique-cover upper bound; guarded to
// components of at most 1000 vertices. The cardinality is canonical, the
// particular set is whichever the search finds first.
std::vector<int> max_independent_set(const WeightComponent& c);

// Plain text export: header "w h n m", one line "i j" per edge (i < j,
// sorted), then the vertex rank table as "# rank: offsets" comments.
std::string to_edge_list(const WeightComponent& c);

}  // namespace skewcode
