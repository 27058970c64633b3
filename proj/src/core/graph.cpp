#include "core/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace bfly {

VertexSet::VertexSet(std::int64_t universe) : n_(universe) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    words_.assign(static_cast<std::size_t>((universe + 63) / 64), 0);
}

void VertexSet::check(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::invalid_argument("VertexSet: vertex out of range: " + std::to_string(v));
    }
}

void VertexSet::insert(Vertex v) {
    check(v);
    auto& w = words_[static_cast<std::size_t>(v >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (!(w & bit)) {
        w |= bit;
        ++count_;
    }
}

void VertexSet::erase(Vertex v) {
    check(v);
    auto& w = words_[static_cast<std::size_t>(v >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (w & bit) {
        w &= ~bit;
        --count_;
    }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
            bits &= bits - 1;
        }
    }
    return out;
}

VertexSet VertexSet::of(std::int64_t universe, std::initializer_list<Vertex> vs) {
    VertexSet s(universe);
    for (Vertex v : vs) s.insert(v);
    return s;
}

VertexSet VertexSet::all(std::int64_t universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto ns = neighbors(u);
    return std::binary_search(ns.begin(), ns.end(), v);
}

GraphBuilder::GraphBuilder(std::int64_t n) : n_(n) {
    if (n < 0) throw std::invalid_argument("GraphBuilder: negative vertex count");
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
        throw std::invalid_argument("add_edge: vertex out of range");
    }
    if (u == v) throw std::invalid_argument("add_edge: self-loop rejected");
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
    return *this;
}

Graph GraphBuilder::build() {
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("build: duplicate edge");
    }
    Graph g;
    g.n_ = n_;
    g.m_ = static_cast<std::int64_t>(edges_.size());
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& [u, v] : edges_) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    g.offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (std::int64_t v = 0; v < n_; ++v) {
        g.offsets_[static_cast<std::size_t>(v) + 1] =
            g.offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
    }
    g.adj_.assign(static_cast<std::size_t>(2 * g.m_), 0);
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
        g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
    }
    // edges were sorted by (u,v), so each list comes out ascending already;
    // sort defensively anyway for the v-side inserts
    for (std::int64_t v = 0; v < n_; ++v) {
        auto b = g.adj_.begin() + g.offsets_[static_cast<std::size_t>(v)];
        auto e = g.adj_.begin() + g.offsets_[static_cast<std::size_t>(v) + 1];
        std::sort(b, e);
    }
    return g;
}

VertexSet open_neighborhood(const Graph& g, Vertex v) {
    VertexSet out(g.vertex_count());
    for (Vertex w : g.neighbors(v)) out.insert(w);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count()) {
        throw std::invalid_argument("closed_neighborhood: set universe mismatch");
    }
    VertexSet out(g.vertex_count());
    for (Vertex v : s.to_vector()) {
        out.insert(v);
        for (Vertex w : g.neighbors(v)) out.insert(w);
    }
    return out;
}

std::int64_t max_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("max_degree: empty graph");
    std::int64_t best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v) os << u << ' ' << v << '\n';
        }
    }
    return os.str();
}

namespace {

std::int64_t parse_int(std::string_view& sv) {
    std::size_t i = 0;
    while (i < sv.size() && (sv[i] == ' ' || sv[i] == '\t' || sv[i] == '\n' || sv[i] == '\r')) ++i;
    sv.remove_prefix(i);
    std::int64_t value = 0;
    auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc{}) throw std::runtime_error("edge list: expected integer");
    sv.remove_prefix(static_cast<std::size_t>(p - sv.data()));
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::string_view sv = text;
    const std::int64_t n = parse_int(sv);
    const std::int64_t m = parse_int(sv);
    if (n < 0 || m < 0) throw std::runtime_error("edge list: negative counts");
    GraphBuilder b(n);
    for (std::int64_t k = 0; k < m; ++k) {
        const Vertex u = parse_int(sv);
        const Vertex v = parse_int(sv);
        try {
            b.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(std::string("edge list: ") + e.what());
        }
    }
    try {
        return b.build();
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("edge list: ") + e.what());
    }
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v) os << "  " << u << " -- " << v << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string to_dense_matrix_text(const Graph& g) {
    std::ostringstream os;
    const std::int64_t n = g.vertex_count();
    std::vector<char> row;
    for (Vertex u = 0; u < n; ++u) {
        row.assign(static_cast<std::size_t>(n), '0');
        for (Vertex v : g.neighbors(u)) row[static_cast<std::size_t>(v)] = '1';
        for (std::int64_t c = 0; c < n; ++c) {
            if (c) os << ' ';
            os << row[static_cast<std::size_t>(c)];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace bfly
