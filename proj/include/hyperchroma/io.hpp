#ifndef HYPERCHROMA_IO_HPP
#define HYPERCHROMA_IO_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <hyperchroma/coloring.hpp>
#include <hyperchroma/hypergraph.hpp>

namespace hyperchroma {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline bool parse_u64(const std::string& tok, std::uint64_t& out) {
    if (tok.empty()) return false;
    out = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        if (out > (UINT64_MAX - static_cast<unsigned>(c - '0')) / 10) return false;
        out = out * 10 + static_cast<unsigned>(c - '0');
    }
    return true;
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

}  // namespace detail

/// Text format: `#` comments, one `v <count>` header, then `e <id> <id> ...`
/// lines. Serialization sorts ids within each edge, edges stay in order.
inline Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::uint64_t vertex_count = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "v") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (toks.size() != 2 || !detail::parse_u64(toks[1], vertex_count))
                throw ParseError(lineno, "malformed header, expected `v <count>`");
            have_header = true;
        } else if (toks[0] == "e") {
            if (!have_header) throw ParseError(lineno, "edge before `v` header");
            if (toks.size() < 2) throw ParseError(lineno, "empty edge");
            std::vector<VertexId> ids;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                std::uint64_t id;
                if (!detail::parse_u64(toks[i], id))
                    throw ParseError(lineno, "bad vertex id `" + toks[i] + "`");
                if (id >= vertex_count)
                    throw ParseError(lineno, "vertex id " + toks[i] + " out of range");
                ids.push_back(static_cast<VertexId>(id));
            }
            try {
                edges.push_back(make_edge(std::move(ids)));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
        } else {
            throw ParseError(lineno, "unknown directive `" + toks[0] + "`");
        }
    }
    if (!have_header) throw ParseError(lineno, "missing `v` header");
    Hypergraph h(static_cast<std::size_t>(vertex_count), std::move(edges));
    h.deduce_uniformity();
    return h;
}

inline std::string serialize_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "v " << h.vertex_count() << "\n";
    for (const Edge& e : h.edges()) {
        out << "e";
        for (VertexId v : e) out << ' ' << v;  // edges are stored sorted
        out << "\n";
    }
    return out.str();
}

/// Labeling format: lines `l <edge_index> <color>`.
inline EdgeLabeling parse_labeling(const std::string& text, std::size_t edge_count) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    EdgeLabeling labels(edge_count, 0);
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        std::uint64_t idx, color;
        if (toks[0] != "l" || toks.size() != 3 ||
            !detail::parse_u64(toks[1], idx) || !detail::parse_u64(toks[2], color))
            throw ParseError(lineno, "malformed label line, expected `l <edge> <color>`");
        if (idx >= edge_count)
            throw ParseError(lineno, "edge index out of range");
        labels[idx] = static_cast<Color>(color);
    }
    return labels;
}

inline std::string serialize_labeling(const EdgeLabeling& labels) {
    std::ostringstream out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        out << "l " << i << ' ' << labels[i] << "\n";
    return out.str();
}

/// Coloring format: lines `c <vertex_id> <color>`, color 0 = colorless.
inline std::vector<Color> parse_coloring(const std::string& text,
                                         std::size_t vertex_count) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<Color> colors(vertex_count, kColorless);
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        std::uint64_t id, color;
        if (toks[0] != "c" || toks.size() != 3 ||
            !detail::parse_u64(toks[1], id) || !detail::parse_u64(toks[2], color))
            throw ParseError(lineno, "malformed color line, expected `c <vertex> <color>`");
        if (id >= vertex_count)
            throw ParseError(lineno, "vertex id out of range");
        colors[id] = static_cast<Color>(color);
    }
    return colors;
}

inline std::string serialize_coloring(const std::vector<Color>& colors) {
    std::ostringstream out;
    for (std::size_t v = 0; v < colors.size(); ++v)
        out << "c " << v << ' ' << colors[v] << "\n";
    return out.str();
}

}  // namespace hyperchroma

#endif
