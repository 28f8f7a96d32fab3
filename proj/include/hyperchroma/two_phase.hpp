#ifndef HYPERCHROMA_TWO_PHASE_HPP
#define HYPERCHROMA_TWO_PHASE_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <hyperchroma/chains.hpp>
#include <hyperchroma/coloring.hpp>
#include <hyperchroma/hypergraph.hpp>
#include <hyperchroma/rng.hpp>

namespace hyperchroma {

/// The colorless probability from the analysis:
/// p = (r-1) ln(r^{r/(r-1)} n ln^2 n) / (r n).
/// Throws when the value falls outside (0,1); callers must then pass an
/// explicit p, since clamping would void the analysis.
inline double default_p(std::size_t n, std::size_t r) {
    if (n < 2 || r < 2)
        throw std::invalid_argument("default_p requires n >= 2, r >= 2");
    const double rd = static_cast<double>(r);
    const double nd = static_cast<double>(n);
    const double ln_n = std::log(nd);
    const double inner = (rd / (rd - 1.0)) * std::log(rd) + ln_n + 2.0 * std::log(ln_n);
    const double p = (rd - 1.0) * inner / (rd * nd);
    if (!(p > 0.0 && p < 1.0))
        throw std::out_of_range("default p = " + std::to_string(p) +
                                " outside (0,1); supply an explicit p");
    return p;
}

struct ColorerConfig {
    Color r = 2;
    std::optional<double> p;  // nullopt = use default_p(n, r)
    std::size_t max_retries = 20;
    std::uint64_t seed = 0;

    void check() const {
        if (r < 2) throw std::invalid_argument("need r >= 2");
        if (p && !(*p > 0.0 && *p < 1.0))
            throw std::invalid_argument("explicit p must lie in (0,1)");
        if (max_retries < 1) throw std::invalid_argument("max_retries must be >= 1");
    }
};

enum class BadEdgeKind { monochromatic, almost_monochromatic, fully_colorless };

inline const char* to_string(BadEdgeKind k) {
    switch (k) {
        case BadEdgeKind::monochromatic: return "monochromatic";
        case BadEdgeKind::almost_monochromatic: return "almost-monochromatic";
        case BadEdgeKind::fully_colorless: return "fully-colorless";
    }
    return "?";
}

struct Phase1Outcome {
    PartialColoring coloring;
    bool ok = true;
    BadEdgeKind bad_kind = BadEdgeKind::monochromatic;
    EdgeId bad_edge = 0;
};

/// Independently color each vertex: colorless with probability p, else
/// uniform over {1..r}; then screen every edge for the three bad kinds.
inline Phase1Outcome phase1(const Hypergraph& h, Color r, double p, Rng& rng) {
    Phase1Outcome out;
    out.coloring.r = r;
    out.coloring.colors.resize(h.vertex_count());
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        if (rng.uniform01() < p)
            out.coloring.colors[v] = kColorless;
        else
            out.coloring.colors[v] = static_cast<Color>(rng.uniform_below(r)) + 1;
    }
    for (EdgeId i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edge(i);
        std::size_t colorless = 0;
        Color common = kColorless;  // common color of the colored part
        bool mono_colored = true;
        for (VertexId v : e) {
            Color c = out.coloring.colors[v];
            if (c == kColorless) {
                ++colorless;
            } else if (common == kColorless) {
                common = c;
            } else if (c != common) {
                mono_colored = false;
            }
        }
        std::optional<BadEdgeKind> kind;
        if (colorless == e.size())
            kind = BadEdgeKind::fully_colorless;
        else if (colorless == 0 && mono_colored)
            kind = BadEdgeKind::monochromatic;
        else if (colorless == 1 && mono_colored)
            kind = BadEdgeKind::almost_monochromatic;
        if (kind) {
            out.ok = false;
            out.bad_kind = *kind;
            out.bad_edge = i;
            return out;
        }
    }
    return out;
}

/// H' = (W, F): colorless vertices plus the truncations B = A cap W of
/// edges whose colored part is monochromatic, labeled with that color.
struct TruncatedHypergraph {
    std::vector<VertexId> colorless;  // W, ascending
    Hypergraph sub;                   // edges F over the original vertex ids
    EdgeLabeling labels;              // f on F
    std::vector<EdgeId> origins;      // originating edge id in H per F edge
};

inline TruncatedHypergraph build_truncated(const Hypergraph& h,
                                           const Phase1Outcome& outcome) {
    if (!outcome.ok)
        throw std::invalid_argument("build_truncated requires an ok phase-1 verdict");
    const auto& colors = outcome.coloring.colors;
    TruncatedHypergraph t;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (colors[v] == kColorless) t.colorless.push_back(v);
    std::vector<Edge> sub_edges;
    for (EdgeId i = 0; i < h.edge_count(); ++i) {
        const Edge& a = h.edge(i);
        Edge b;
        Color common = kColorless;
        bool mono = true;
        for (VertexId v : a) {
            if (colors[v] == kColorless) b.push_back(v);
            else if (common == kColorless) common = colors[v];
            else if (colors[v] != common) mono = false;
        }
        if (b.empty() || b.size() == a.size() || !mono) continue;
        if (b.size() < 2)
            throw std::logic_error("phase-1 screening let an almost-monochromatic edge through");
        sub_edges.push_back(std::move(b));
        t.labels.push_back(common);
        t.origins.push_back(i);
    }
    t.sub = Hypergraph(h.vertex_count(), std::move(sub_edges));
    return t;
}

/// Either a full coloring of W or the witness chain that blocked it.
using Phase2Result = std::variant<std::vector<Color>, ChainCandidate>;

/// Draw a uniform ordering of W; if it has no strong ordered r-chain,
/// finish with the greedy coloring, otherwise report the chain.
inline Phase2Result phase2(const TruncatedHypergraph& t, Color r, Rng& rng) {
    std::vector<VertexId> seq = t.colorless;
    rng.shuffle(seq);
    VertexOrdering sigma(std::move(seq));
    if (auto chain = find_strong_ordered_chain(t.sub, sigma, t.labels, r))
        return *chain;
    return greedy_color(t.sub, t.labels, sigma, r);
}

enum class AttemptFailure { none, phase1_bad_edge, chain_found };

struct AttemptRecord {
    std::size_t attempt = 0;
    std::uint64_t seed = 0;
    AttemptFailure failure = AttemptFailure::none;
    BadEdgeKind bad_kind = BadEdgeKind::monochromatic;  // valid for phase1_bad_edge
    bool success = false;
};

struct ColoringResult {
    std::optional<std::vector<Color>> coloring;  // present on success
    std::vector<AttemptRecord> attempts;

    bool success() const { return coloring.has_value(); }
    std::size_t phase1_failures() const {
        std::size_t k = 0;
        for (const auto& a : attempts)
            if (a.failure == AttemptFailure::phase1_bad_edge) ++k;
        return k;
    }
    std::size_t chain_failures() const {
        std::size_t k = 0;
        for (const auto& a : attempts)
            if (a.failure == AttemptFailure::chain_found) ++k;
        return k;
    }
};

/// Full pipeline with retries: phase 1, screening, truncation, phase 2,
/// merge. Every returned coloring has been re-verified proper.
inline ColoringResult color_hypergraph(const Hypergraph& h, const ColorerConfig& config) {
    config.check();
    auto valid = validate(h);
    if (!valid.ok) throw std::invalid_argument("invalid hypergraph: " + valid.violation);
    if (!h.uniformity() && h.edge_count() > 0)
        throw std::invalid_argument("hypergraph must be n-uniform");
    const std::size_t n = h.edge_count() > 0 ? *h.uniformity() : 3;
    const double p = config.p ? *config.p : default_p(n, config.r);

    ColoringResult result;
    for (std::size_t attempt = 0; attempt < config.max_retries; ++attempt) {
        AttemptRecord rec;
        rec.attempt = attempt;
        rec.seed = derive_seed(config.seed, attempt);
        Rng rng(rec.seed);

        Phase1Outcome p1 = phase1(h, config.r, p, rng);
        if (!p1.ok) {
            rec.failure = AttemptFailure::phase1_bad_edge;
            rec.bad_kind = p1.bad_kind;
            result.attempts.push_back(rec);
            continue;
        }
        TruncatedHypergraph t = build_truncated(h, p1);
        Phase2Result p2 = phase2(t, config.r, rng);
        if (std::holds_alternative<ChainCandidate>(p2)) {
            rec.failure = AttemptFailure::chain_found;
            result.attempts.push_back(rec);
            continue;
        }
        // merge: phase-1 colors stand, W takes the greedy colors; colorless
        // vertices outside every kept edge default to color 1
        std::vector<Color> merged = p1.coloring.colors;
        const auto& w_colors = std::get<std::vector<Color>>(p2);
        for (VertexId v : t.colorless)
            merged[v] = w_colors[v] == kColorless ? 1 : w_colors[v];
        if (!is_proper_coloring(h, merged, config.r))
            throw std::logic_error("internal error: merged coloring failed verification");
        rec.success = true;
        result.attempts.push_back(rec);
        result.coloring = std::move(merged);
        return result;
    }
    return result;
}

/// Attempt log in CSV form: attempt,seed,phase1_verdict,bad_edge_kind,chain_found,success
inline std::string attempts_to_csv(const std::vector<AttemptRecord>& attempts) {
    std::string out = "attempt,seed,phase1_verdict,bad_edge_kind,chain_found,success\n";
    for (const auto& a : attempts) {
        bool p1_bad = a.failure == AttemptFailure::phase1_bad_edge;
        out += std::to_string(a.attempt) + ',' + std::to_string(a.seed) + ',' +
               (p1_bad ? "bad" : "ok") + ',' + (p1_bad ? to_string(a.bad_kind) : "") +
               ',' + (a.failure == AttemptFailure::chain_found ? "1" : "0") + ',' +
               (a.success ? "1" : "0") + '\n';
    }
    return out;
}

}  // namespace hyperchroma

#endif
