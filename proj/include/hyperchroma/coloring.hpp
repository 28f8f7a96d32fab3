#ifndef HYPERCHROMA_COLORING_HPP
#define HYPERCHROMA_COLORING_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <hyperchroma/hypergraph.hpp>

namespace hyperchroma {

// Color 0 means colorless; real colors are 1..r.
using Color = std::uint32_t;
inline constexpr Color kColorless = 0;

/// Per-vertex colors over the full vertex set.
struct PartialColoring {
    std::vector<Color> colors;  // indexed by vertex id
    Color r = 0;

    bool is_total() const {
        return std::none_of(colors.begin(), colors.end(),
                            [](Color c) { return c == kColorless; });
    }
};

/// Edge label map f : E -> {1..r}, indexed by edge id.
using EdgeLabeling = std::vector<Color>;

/// A permutation of a vertex subset, with O(1) rank lookup.
class VertexOrdering {
public:
    static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

    VertexOrdering() = default;

    explicit VertexOrdering(std::vector<VertexId> sequence)
        : sequence_(std::move(sequence)) {
        VertexId max_id = 0;
        for (VertexId v : sequence_) max_id = std::max(max_id, v);
        position_.assign(sequence_.empty() ? 0 : max_id + 1, kAbsent);
        for (std::size_t i = 0; i < sequence_.size(); ++i) {
            if (position_[sequence_[i]] != kAbsent)
                throw std::invalid_argument("ordering repeats a vertex id");
            position_[sequence_[i]] = i;
        }
    }

    static VertexOrdering identity(std::size_t vertex_count) {
        std::vector<VertexId> seq(vertex_count);
        std::iota(seq.begin(), seq.end(), 0u);
        return VertexOrdering(std::move(seq));
    }

    const std::vector<VertexId>& sequence() const { return sequence_; }
    std::size_t size() const { return sequence_.size(); }

    bool contains(VertexId v) const {
        return v < position_.size() && position_[v] != kAbsent;
    }

    std::size_t position(VertexId v) const {
        if (!contains(v))
            throw std::invalid_argument("vertex not covered by ordering");
        return position_[v];
    }

private:
    std::vector<VertexId> sequence_;
    std::vector<std::size_t> position_;
};

/// True iff no edge is monochromatic. Requires a total coloring in {1..r}.
inline bool is_proper_coloring(const Hypergraph& h,
                               const std::vector<Color>& colors, Color r) {
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (colors[v] < 1 || colors[v] > r)
            throw std::invalid_argument("color out of range {1..r}");
    for (const Edge& e : h.edges()) {
        bool mono = true;
        for (VertexId v : e)
            if (colors[v] != colors[e.front()]) { mono = false; break; }
        if (mono) return false;
    }
    return true;
}

/// True iff no edge A has all its vertices colored f(A).
inline bool is_good_coloring(const Hypergraph& h, const EdgeLabeling& f,
                             const std::vector<Color>& colors) {
    for (EdgeId i = 0; i < h.edge_count(); ++i) {
        bool all_label = true;
        for (VertexId v : h.edge(i))
            if (colors[v] != f[i]) { all_label = false; break; }
        if (all_label) return false;
    }
    return true;
}

/// Ordering by color ascending, ties by vertex id ascending.
inline VertexOrdering ordering_from_coloring(const Hypergraph& h,
                                             const std::vector<Color>& colors) {
    std::vector<VertexId> seq(h.vertex_count());
    std::iota(seq.begin(), seq.end(), 0u);
    std::stable_sort(seq.begin(), seq.end(), [&](VertexId a, VertexId b) {
        return colors[a] < colors[b];
    });
    return VertexOrdering(std::move(seq));
}

}  // namespace hyperchroma

#endif
