#ifndef HYPERCHROMA_HYPERGRAPH_HPP
#define HYPERCHROMA_HYPERGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <hyperchroma/rng.hpp>

namespace hyperchroma {

using VertexId = std::uint32_t;
using EdgeId = std::size_t;

// An edge is a set of vertex ids, stored sorted and duplicate-free.
using Edge = std::vector<VertexId>;

inline Edge make_edge(std::vector<VertexId> ids) {
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("edge contains a repeated vertex id");
    return ids;
}

inline bool edges_intersect(const Edge& a, const Edge& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

inline std::size_t intersection_size(const Edge& a, const Edge& b) {
    std::size_t i = 0, j = 0, count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++count; ++i; ++j; }
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return count;
}

/// Hypergraph H = (V, E) with dense vertex ids 0..vertex_count-1.
/// Duplicate edges are kept as-is; they count separately everywhere.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::size_t vertex_count, std::vector<Edge> edges,
               std::optional<std::uint32_t> uniformity = std::nullopt)
        : vertex_count_(vertex_count),
          edges_(std::move(edges)),
          uniformity_(uniformity) {}

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[id]; }
    std::size_t edge_count() const { return edges_.size(); }
    std::optional<std::uint32_t> uniformity() const { return uniformity_; }

    // Sets the uniformity field from the edge sizes when they agree.
    void deduce_uniformity() {
        if (edges_.empty()) return;
        std::size_t n = edges_.front().size();
        for (const Edge& e : edges_)
            if (e.size() != n) return;
        uniformity_ = static_cast<std::uint32_t>(n);
    }

    bool operator==(const Hypergraph& other) const {
        return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
    }

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::uint32_t> uniformity_;
};

struct ValidationResult {
    bool ok = true;
    std::string violation;  // first violated invariant, empty when ok
};

inline ValidationResult validate(const Hypergraph& h) {
    for (EdgeId i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edge(i);
        if (e.empty())
            return {false, "edge " + std::to_string(i) + " is empty"};
        for (VertexId v : e)
            if (v >= h.vertex_count())
                return {false, "edge " + std::to_string(i) + " has vertex id " +
                                   std::to_string(v) + " out of range"};
        if (h.uniformity() && e.size() != *h.uniformity())
            return {false, "edge " + std::to_string(i) + " has size " +
                               std::to_string(e.size()) + ", expected uniformity " +
                               std::to_string(*h.uniformity())};
    }
    return {};
}

/// All n-subsets of {0..v-1}; C(v,n) edges in lexicographic order.
inline Hypergraph complete_uniform(std::size_t v, std::size_t n) {
    if (n < 1 || n > v)
        throw std::invalid_argument("complete_uniform requires 1 <= n <= v");
    std::vector<Edge> edges;
    Edge cur(n);
    for (std::size_t i = 0; i < n; ++i) cur[i] = static_cast<VertexId>(i);
    while (true) {
        edges.push_back(cur);
        // next lexicographic n-subset
        std::size_t i = n;
        while (i > 0 && cur[i - 1] == v - n + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < n; ++j) cur[j] = cur[j - 1] + 1;
    }
    return Hypergraph(v, std::move(edges), static_cast<std::uint32_t>(n));
}

/// m edges drawn uniformly with replacement from all n-subsets of {0..v-1}.
/// Pure function of (v, n, m, seed).
inline Hypergraph random_uniform(std::size_t v, std::size_t n, std::size_t m,
                                 std::uint64_t seed) {
    if (n < 1 || n > v)
        throw std::invalid_argument("random_uniform requires 1 <= n <= v");
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(m);
    std::vector<VertexId> pool(v);
    for (std::size_t i = 0; i < v; ++i) pool[i] = static_cast<VertexId>(i);
    for (std::size_t k = 0; k < m; ++k) {
        // partial Fisher-Yates gives a uniform n-subset
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng.uniform_below(v - i));
            std::swap(pool[i], pool[j]);
        }
        edges.push_back(make_edge({pool.begin(), pool.begin() + static_cast<long>(n)}));
    }
    return Hypergraph(v, std::move(edges), static_cast<std::uint32_t>(n));
}

/// Maximum edge degree D: the most other edges (duplicates counted,
/// the edge's own index excluded) any single edge intersects.
inline std::size_t max_edge_degree(const Hypergraph& h) {
    std::size_t best = 0;
    for (EdgeId i = 0; i < h.edge_count(); ++i) {
        std::size_t deg = 0;
        for (EdgeId j = 0; j < h.edge_count(); ++j)
            if (j != i && edges_intersect(h.edge(i), h.edge(j))) ++deg;
        best = std::max(best, deg);
    }
    return best;
}

}  // namespace hyperchroma

#endif
