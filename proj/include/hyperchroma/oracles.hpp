#ifndef HYPERCHROMA_ORACLES_HPP
#define HYPERCHROMA_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include <hyperchroma/bounds.hpp>
#include <hyperchroma/chains.hpp>
#include <hyperchroma/coloring.hpp>
#include <hyperchroma/hypergraph.hpp>

// Slow, exact ground truth coded straight from the definitions. These
// never call the chain-search fast path; the only shared dependency is
// the definitional is_ordered_chain / is_strong_ordered_chain pair.

namespace hyperchroma::oracle {

class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

// Enumerates colorings v -> {1..r}; calls fn on each; stops when fn
// returns true. first_fixed pins the first vertex's color to 1.
template <typename Fn>
bool any_coloring(std::size_t vertex_count, Color r, bool first_fixed, Fn&& fn) {
    std::vector<Color> colors(vertex_count, 1);
    if (vertex_count == 0) return fn(colors);
    while (true) {
        if (fn(colors)) return true;
        std::size_t i = vertex_count;
        while (i > (first_fixed ? 1u : 0u) && colors[i - 1] == r) colors[--i] = 1;
        if (i == (first_fixed ? 1u : 0u)) return false;
        ++colors[i - 1];
    }
}

inline bool has_monochromatic_edge(const Hypergraph& h, const std::vector<Color>& colors) {
    for (const Edge& e : h.edges()) {
        bool mono = true;
        for (VertexId v : e)
            if (colors[v] != colors[e.front()]) { mono = false; break; }
        if (mono) return true;
    }
    return false;
}

}  // namespace detail

/// Smallest r admitting a coloring with no monochromatic edge, by full
/// enumeration (first vertex's color pinned for symmetry).
inline std::size_t chromatic_number(const Hypergraph& h) {
    if (h.vertex_count() > 20)
        throw BudgetError("chromatic_number is capped at 20 vertices");
    for (const Edge& e : h.edges())
        if (e.size() == 1)
            throw std::invalid_argument("size-1 edge can never be non-monochromatic");
    for (std::size_t r = 1;; ++r) {
        bool found = detail::any_coloring(
            h.vertex_count(), static_cast<Color>(r), true,
            [&](const std::vector<Color>& colors) {
                return !detail::has_monochromatic_edge(h, colors);
            });
        if (found) return r;
    }
}

/// Exhaustive test for a coloring that is good for f (no edge A entirely
/// in color f(A)).
inline bool exists_good_coloring(const Hypergraph& h, const EdgeLabeling& f, Color r) {
    if (h.vertex_count() > 12)
        throw BudgetError("exists_good_coloring is capped at 12 vertices");
    return detail::any_coloring(h.vertex_count(), r, false,
                                [&](const std::vector<Color>& colors) {
                                    return is_good_coloring(h, f, colors);
                                });
}

/// Full |V|! scan for an ordering without (strong, when f is given)
/// ordered r-chains; chain existence per ordering is decided by checking
/// every r-tuple of edges against the definitional predicates.
inline bool exists_chain_free_ordering(const Hypergraph& h,
                                       const EdgeLabeling* f, std::size_t r) {
    if (h.vertex_count() > 8)
        throw BudgetError("exists_chain_free_ordering is capped at 8 vertices");
    const std::size_t m = h.edge_count();
    // tuples of edge ids, enumerated odometer-style
    auto has_chain = [&](const VertexOrdering& sigma) {
        if (m == 0) return false;
        std::vector<EdgeId> tuple(r, 0);
        while (true) {
            ChainCandidate c{tuple};
            bool hit = f ? is_strong_ordered_chain(h, sigma, *f, c)
                         : is_ordered_chain(h, sigma, c);
            if (hit) return true;
            std::size_t i = 0;
            while (i < r && tuple[i] == m - 1) tuple[i++] = 0;
            if (i == r) return false;
            ++tuple[i];
        }
    };
    std::vector<VertexId> seq(h.vertex_count());
    std::iota(seq.begin(), seq.end(), 0u);
    do {
        if (!has_chain(VertexOrdering(seq))) return true;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return false;
}

struct SearchBudget {
    std::size_t max_vertices = 5;
    std::size_t max_edges = 8;
};

struct MinEdgesResult {
    bool found = false;
    std::size_t min_edges = 0;       // valid when found
    std::size_t searched_edges = 0;  // every count up to this was exhausted
    std::optional<Hypergraph> witness;
};

/// Desk-scale search for the fewest edges of an n-uniform hypergraph with
/// chromatic number > r. Edges are distinct n-subsets of a vertex pool of
/// the budgeted size; candidates are edge-subsets in lexicographic order.
inline MinEdgesResult min_edges_uncolorable(std::size_t n, std::size_t r,
                                            const SearchBudget& budget) {
    if (budget.max_vertices < n)
        throw std::invalid_argument("vertex budget below the edge size");
    Hypergraph all = complete_uniform(budget.max_vertices, n);
    const std::size_t total = all.edge_count();
    MinEdgesResult result;
    for (std::size_t m = 1; m <= std::min(budget.max_edges, total); ++m) {
        std::vector<std::size_t> pick(m);
        std::iota(pick.begin(), pick.end(), 0u);
        while (true) {
            std::vector<Edge> edges;
            edges.reserve(m);
            for (std::size_t idx : pick) edges.push_back(all.edge(idx));
            Hypergraph h(budget.max_vertices, std::move(edges),
                         static_cast<std::uint32_t>(n));
            if (chromatic_number(h) > r) {
                result.found = true;
                result.min_edges = m;
                result.searched_edges = m;
                result.witness = std::move(h);
                return result;
            }
            // next lexicographic m-combination of {0..total-1}
            std::size_t i = m;
            while (i > 0 && pick[i - 1] == total - m + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
        }
        result.searched_edges = m;
    }
    return result;
}

namespace detail {

// The canonical chain with edge sizes s_1..s_r: consecutive edges share
// exactly one vertex, non-adjacent edges are disjoint.
inline std::vector<Edge> canonical_chain(const std::vector<std::size_t>& sizes,
                                         std::size_t& vertex_count) {
    std::vector<Edge> edges;
    std::size_t next = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        Edge e;
        std::size_t start = (i == 0) ? 0 : next - 1;  // reuse the shared vertex
        for (std::size_t v = start; v < start + sizes[i]; ++v)
            e.push_back(static_cast<VertexId>(v));
        next = start + sizes[i];
        edges.push_back(std::move(e));
    }
    vertex_count = next;
    return edges;
}

}  // namespace detail

/// Exact probability that the canonical chain, traversed in its fixed
/// direction, is ordered under a uniform random ordering: enumerate all
/// (sum a_i - r + 1)! orderings and count.
inline Rational exact_ordered_probability(const std::vector<std::size_t>& sizes) {
    std::size_t total = 0;
    for (std::size_t s : sizes) total += s;
    if (total - (sizes.size() - 1) > 10)
        throw BudgetError("exact_ordered_probability is capped at 10 chain vertices");
    std::size_t vertex_count = 0;
    auto edges = detail::canonical_chain(sizes, vertex_count);
    Hypergraph h(vertex_count, edges);
    ChainCandidate chain;
    for (EdgeId i = 0; i < edges.size(); ++i) chain.edge_ids.push_back(i);

    std::vector<VertexId> seq(vertex_count);
    std::iota(seq.begin(), seq.end(), 0u);
    BigInt hits = 0, runs = 0;
    do {
        ++runs;
        if (is_ordered_chain(h, VertexOrdering(seq), chain)) ++hits;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return Rational(hits, runs);
}

/// Exact probability that the canonical chain of r n-edges is strong with
/// truncated cardinalities a_1..a_r: every shared vertex colorless, edge i
/// with exactly a_i colorless vertices and its colored part monochromatic
/// in color i. Enumerates all (r+1)^V weighted phase-1 colorings.
inline Rational exact_strong_probability(std::size_t n, std::size_t r,
                                         const std::vector<std::size_t>& a,
                                         const Rational& p) {
    if (a.size() != r) throw std::invalid_argument("need one cardinality per edge");
    const std::size_t vertex_total = r * n - (r - 1);
    if (vertex_total > 10)
        throw BudgetError("exact_strong_probability is capped at 10 chain vertices");
    std::size_t vertex_count = 0;
    auto edges = detail::canonical_chain(std::vector<std::size_t>(r, n), vertex_count);

    const Rational colored_p = (1 - p) / static_cast<int>(r);
    Rational total = 0;
    std::vector<Color> colors(vertex_count, 0);  // 0 = colorless, 1..r colors
    while (true) {
        bool event = true;
        for (std::size_t i = 0; i < r && event; ++i) {
            std::size_t colorless = 0;
            Color common = 0;
            bool mono = true;
            for (VertexId v : edges[i]) {
                if (colors[v] == 0) ++colorless;
                else if (common == 0) common = colors[v];
                else if (colors[v] != common) mono = false;
            }
            if (colorless != a[i] || !mono || common != static_cast<Color>(i + 1))
                event = false;
        }
        // shared vertices must be colorless; they are the edge boundaries
        for (std::size_t i = 0; i + 1 < r && event; ++i) {
            VertexId shared = edges[i].back();
            if (colors[shared] != 0) event = false;
        }
        if (event) {
            Rational weight = 1;
            for (Color c : colors) weight *= (c == 0) ? p : colored_p;
            total += weight;
        }
        std::size_t i = 0;
        while (i < vertex_count && colors[i] == static_cast<Color>(r)) colors[i++] = 0;
        if (i == vertex_count) break;
        ++colors[i];
    }
    return total;
}

}  // namespace hyperchroma::oracle

#endif
