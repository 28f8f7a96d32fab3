#ifndef HYPERCHROMA_CHAINS_HPP
#define HYPERCHROMA_CHAINS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <hyperchroma/coloring.hpp>
#include <hyperchroma/hypergraph.hpp>

namespace hyperchroma {

/// A candidate chain: a sequence of r edge ids (repeats allowed).
struct ChainCandidate {
    std::vector<EdgeId> edge_ids;

    std::size_t length() const { return edge_ids.size(); }
};

namespace detail {

inline void require_covered(const Hypergraph& h, const VertexOrdering& sigma,
                            const ChainCandidate& c) {
    for (EdgeId id : c.edge_ids)
        for (VertexId v : h.edge(id))
            if (!sigma.contains(v))
                throw std::invalid_argument("ordering does not cover chain vertices");
}

}  // namespace detail

/// Conditions: consecutive edges share exactly one vertex, non-adjacent
/// edges are disjoint, and every vertex of A_i precedes (<=) every vertex
/// of A_{i+1} in sigma.
inline bool is_ordered_chain(const Hypergraph& h, const VertexOrdering& sigma,
                             const ChainCandidate& c) {
    if (c.length() < 1) throw std::invalid_argument("chain length must be >= 1");
    detail::require_covered(h, sigma, c);
    const std::size_t r = c.length();
    for (std::size_t i = 0; i + 1 < r; ++i) {
        const Edge& a = h.edge(c.edge_ids[i]);
        const Edge& b = h.edge(c.edge_ids[i + 1]);
        if (intersection_size(a, b) != 1) return false;
        for (VertexId v : a)
            for (VertexId u : b)
                if (sigma.position(v) > sigma.position(u)) return false;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 2; j < r; ++j)
            if (intersection_size(h.edge(c.edge_ids[i]), h.edge(c.edge_ids[j])) != 0)
                return false;
    return true;
}

/// An ordered chain whose i-th edge additionally carries label i (1-based).
inline bool is_strong_ordered_chain(const Hypergraph& h, const VertexOrdering& sigma,
                                    const EdgeLabeling& f, const ChainCandidate& c) {
    for (std::size_t i = 0; i < c.length(); ++i) {
        EdgeId id = c.edge_ids[i];
        if (id >= f.size() || f[id] == 0)
            throw std::invalid_argument("chain edge has no label");
        if (f[id] != i + 1) return false;
    }
    return is_ordered_chain(h, sigma, c);
}

namespace detail {

struct EdgeSpan {
    std::size_t min_pos;
    std::size_t max_pos;
    VertexId min_vertex;
    VertexId max_vertex;
};

inline std::vector<EdgeSpan> edge_spans(const Hypergraph& h,
                                        const VertexOrdering& sigma) {
    std::vector<EdgeSpan> spans(h.edge_count());
    for (EdgeId i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edge(i);
        if (e.size() < 2)
            throw std::invalid_argument(
                "unsupported instance: chain search requires edges of size >= 2");
        EdgeSpan s{VertexOrdering::kAbsent, 0, 0, 0};
        for (VertexId v : e) {
            std::size_t p = sigma.position(v);
            if (p < s.min_pos || s.min_pos == VertexOrdering::kAbsent) {
                s.min_pos = p;
                s.min_vertex = v;
            }
            if (p >= s.max_pos) {
                s.max_pos = p;
                s.max_vertex = v;
            }
        }
        spans[i] = s;
    }
    return spans;
}

// Dynamic program over "edge is the i-th link". Two edges link when they
// share exactly one vertex which is the sigma-max of the first and the
// sigma-min of the second; with all edges of size >= 2 this implies the
// non-adjacent disjointness condition for the whole chain.
inline std::optional<ChainCandidate> find_chain_impl(
    const Hypergraph& h, const VertexOrdering& sigma,
    const EdgeLabeling* f, std::size_t r) {
    if (r < 1) throw std::invalid_argument("chain length must be >= 1");
    auto spans = edge_spans(h, sigma);
    auto admissible = [&](EdgeId e, std::size_t layer) {
        return f == nullptr || ((*f)[e] == layer + 1);
    };

    // edges grouped by their sigma-min position
    std::vector<std::vector<EdgeId>> by_min_pos(sigma.size());
    for (EdgeId e = 0; e < h.edge_count(); ++e)
        by_min_pos[spans[e].min_pos].push_back(e);

    const EdgeId kNone = static_cast<EdgeId>(-1);
    std::vector<std::vector<EdgeId>> parent(r, std::vector<EdgeId>(h.edge_count(), kNone));
    std::vector<char> reachable(h.edge_count(), 0);
    for (EdgeId e = 0; e < h.edge_count(); ++e)
        reachable[e] = admissible(e, 0) ? 1 : 0;

    for (std::size_t layer = 1; layer < r; ++layer) {
        std::vector<char> next(h.edge_count(), 0);
        for (EdgeId e = 0; e < h.edge_count(); ++e) {
            if (!reachable[e]) continue;
            for (EdgeId e2 : by_min_pos[spans[e].max_pos]) {
                if (next[e2] || !admissible(e2, layer)) continue;
                if (intersection_size(h.edge(e), h.edge(e2)) != 1) continue;
                next[e2] = 1;
                parent[layer][e2] = e;
            }
        }
        reachable = std::move(next);
    }

    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        if (!reachable[e]) continue;
        ChainCandidate c;
        c.edge_ids.assign(r, kNone);
        EdgeId cur = e;
        for (std::size_t layer = r; layer-- > 0;) {
            c.edge_ids[layer] = cur;
            if (layer > 0) cur = parent[layer][cur];
        }
        return c;
    }
    return std::nullopt;
}

}  // namespace detail

/// Exhaustive search for an ordered r-chain; none means none exists.
inline std::optional<ChainCandidate> find_ordered_chain(
    const Hypergraph& h, const VertexOrdering& sigma, std::size_t r) {
    return detail::find_chain_impl(h, sigma, nullptr, r);
}

/// Exhaustive search for a strong ordered r-chain under labeling f.
inline std::optional<ChainCandidate> find_strong_ordered_chain(
    const Hypergraph& h, const VertexOrdering& sigma, const EdgeLabeling& f,
    std::size_t r) {
    if (f.size() < h.edge_count())
        throw std::invalid_argument("labeling must be total on edges");
    return detail::find_chain_impl(h, sigma, &f, r);
}

/// Greedy coloring driven by sigma. Each vertex in turn takes the minimal
/// color c such that it does not complete an edge A (all earlier vertices
/// of A already colored f(A)) with c = f(A); if every color is blocked the
/// vertex takes color r. When sigma admits no strong ordered r-chain the
/// result is good for f: a bad edge would force a blocked-color cascade
/// whose blocking edges form exactly such a chain.
///
/// Vertices outside sigma keep color 0; sigma must cover every edge.
inline std::vector<Color> greedy_color(const Hypergraph& h, const EdgeLabeling& f,
                                       const VertexOrdering& sigma, Color r) {
    if (r < 1) throw std::invalid_argument("need at least one color");
    std::vector<Color> colors(h.vertex_count(), kColorless);
    // edges keyed by their sigma-last vertex
    std::vector<std::vector<EdgeId>> ending_at(sigma.size());
    for (EdgeId i = 0; i < h.edge_count(); ++i) {
        std::size_t last = 0;
        for (VertexId v : h.edge(i)) last = std::max(last, sigma.position(v));
        ending_at[last].push_back(i);
    }
    for (std::size_t pos = 0; pos < sigma.size(); ++pos) {
        VertexId v = sigma.sequence()[pos];
        auto blocked = [&](Color c) {
            for (EdgeId id : ending_at[pos]) {
                if (f[id] != c) continue;
                bool others_match = true;
                for (VertexId u : h.edge(id))
                    if (u != v && colors[u] != c) { others_match = false; break; }
                if (others_match) return true;
            }
            return false;
        };
        Color chosen = r;
        for (Color c = 1; c <= r; ++c)
            if (!blocked(c)) { chosen = c; break; }
        colors[v] = chosen;
    }
    return colors;
}

}  // namespace hyperchroma

#endif
