#include "skewcode/graph.hpp"

#include <algorithm>
#include <bitset>
#include <cstdlib>
#include <stdexcept>

namespace skewcode {

namespace {

constexpr int kMaxMisVertices = 1000;
constexpr int kMaxOracleW = 16;

WeightComponent component_shell(int w, int h) {
    if (w < 1) throw std::invalid_argument("component: w must be >= 1");
    if (h < 0 || h > w) throw std::invalid_argument("component: weight out of range");
    WeightComponent c;
    c.w = w;
    c.h = h;
    c.vertices = enumerate_tuples(h, w - h);
    c.adj.resize(c.vertices.size());
    return c;
}

void add_edge(WeightComponent& c, int i, int j) {
    c.adj[i].push_back(j);
    c.adj[j].push_back(i);
    ++c.edge_count;
}

}  // namespace

bool is_edge(const OffsetTuple& x, const OffsetTuple& y) {
    if (x.weight() != y.weight()) throw std::invalid_argument("is_edge: weight mismatch");
    if (x.bound != y.bound) throw std::invalid_argument("is_edge: bound mismatch");
    if (x.offsets == y.offsets) return false;
    for (int i = 0; i < x.weight(); ++i)
        if (std::abs(x.offsets[i] - y.offsets[i]) > 1) return false;
    return true;
}

WeightComponent build_component(int w, int h) {
    WeightComponent c = component_shell(w, h);
    const int n = static_cast<int>(c.vertices.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (is_edge(c.vertices[i], c.vertices[j])) add_edge(c, i, j);
    return c;
}

WeightComponent oracle_component(int w, int h, SkewMode mode, TernaryBoundary boundary) {
    if (w > kMaxOracleW)
        throw std::invalid_argument("oracle_component: w above the exhaustive guard");
    WeightComponent c = component_shell(w, h);
    const int n = static_cast<int>(c.vertices.size());

    std::vector<std::vector<ReceivedBlock>> outputs(n);
    for (int i = 0; i < n; ++i)
        outputs[i] = output_set(from_offsets(c.vertices[i], w), mode, boundary);

    auto intersects = [](const std::vector<ReceivedBlock>& a, const std::vector<ReceivedBlock>& b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            if (a[i] < b[j]) ++i; else ++j;
        }
        return false;
    };

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (intersects(outputs[i], outputs[j])) add_edge(c, i, j);
    return c;
}

namespace {

using Bits = std::bitset<kMaxMisVertices>;

struct MisSearch {
    int n = 0;
    std::vector<Bits> nbr;
    std::vector<int> best;

    // Greedy clique cover of cand; number of cliques bounds the
    // independent set size within cand.
    int clique_cover_bound(Bits cand) const {
        int cliques = 0;
        while (cand.any()) {
            int v = first_of(cand);
            Bits clique;
            clique.set(v);
            cand.reset(v);
            for (int u = v + 1; u < n; ++u) {
                if (!cand.test(u)) continue;
                if ((clique & ~nbr[u]).none()) {  // u adjacent to all of clique
                    clique.set(u);
                    cand.reset(u);
                }
            }
            ++cliques;
        }
        return cliques;
    }

    static int first_of(const Bits& b) { return static_cast<int>(b._Find_first()); }

    void run(Bits cand, Bits chosen) {
        const int have = static_cast<int>(chosen.count());
        const int left = static_cast<int>(cand.count());
        if (have + left <= static_cast<int>(best.size())) return;
        if (cand.none()) {
            best.clear();
            for (int v = first_of(chosen); v < n; v = static_cast<int>(chosen._Find_next(v)))
                best.push_back(v);
            return;
        }
        if (have + clique_cover_bound(cand) <= static_cast<int>(best.size())) return;

        // branch on the highest-degree candidate (lowest rank on ties)
        int pick = -1, pick_deg = -1;
        for (int v = first_of(cand); v < n; v = static_cast<int>(cand._Find_next(v))) {
            const int d = static_cast<int>((nbr[v] & cand).count());
            if (d > pick_deg) { pick_deg = d; pick = v; }
        }

        Bits with = cand & ~nbr[pick];
        with.reset(pick);
        chosen.set(pick);
        run(with, chosen);
        chosen.reset(pick);

        cand.reset(pick);
        run(cand, chosen);
    }
};

}  // namespace

std::vector<int> max_independent_set(const WeightComponent& c) {
    const int n = static_cast<int>(c.vertices.size());
    if (n > kMaxMisVertices)
        throw std::invalid_argument("max_independent_set: component too large for exact search");

    MisSearch search;
    search.n = n;
    search.nbr.resize(n);
    for (int v = 0; v < n; ++v)
        for (int u : c.adj[v]) search.nbr[v].set(u);

    // greedy seed: take vertices in rank order when compatible
    Bits taken_nbrs;
    for (int v = 0; v < n; ++v) {
        if (!taken_nbrs.test(v)) {
            search.best.push_back(v);
            taken_nbrs |= search.nbr[v];
            taken_nbrs.set(v);
        }
    }

    Bits all;
    for (int v = 0; v < n; ++v) all.set(v);
    search.run(all, Bits{});

    std::sort(search.best.begin(), search.best.end());
    return search.best;
}

std::string to_edge_list(const WeightComponent& c) {
    std::string out;
    out += std::to_string(c.w) + " " + std::to_string(c.h) + " " +
           std::to_string(c.vertices.size()) + " " + std::to_string(c.edge_count) + "\n";
    for (std::size_t i = 0; i < c.adj.size(); ++i)
        for (int j : c.adj[i])
            if (static_cast<int>(i) < j)
                out += std::to_string(i) + " " + std::to_string(j) + "\n";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        out += "# " + std::to_string(i) + ":";
        const std::string s = c.vertices[i].to_string();
        if (!s.empty()) out += " " + s;
        out += "\n";
    }
    return out;
}

}  // namespace skewcode
