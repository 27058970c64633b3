#ifndef BUTTERFLY_CORE_GRAPH_HPP
#define BUTTERFLY_CORE_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bfly {

using Vertex = std::int64_t;

// Thrown when a computation exceeds a configured budget (subset search,
// graph size caps). Carries the best lower bound proven before giving up.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg, std::int64_t proven_lower_bound = 0)
        : std::runtime_error(msg), proven_lower_bound_(proven_lower_bound) {}
    std::int64_t proven_lower_bound() const { return proven_lower_bound_; }

private:
    std::int64_t proven_lower_bound_;
};

// Dense bitset over vertex ids 0..n-1 with a cached population count.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::int64_t universe);

    std::int64_t universe() const { return n_; }
    std::int64_t count() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool full() const { return count_ == n_; }

    bool contains(Vertex v) const {
        return v >= 0 && v < n_ &&
               (words_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    bool operator==(const VertexSet& other) const = default;
    bool is_subset_of(const VertexSet& other) const;

    std::vector<Vertex> to_vector() const;  // ascending

    static VertexSet of(std::int64_t universe, std::initializer_list<Vertex> vs);
    static VertexSet all(std::int64_t universe);

private:
    void check(Vertex v) const;
    std::int64_t n_ = 0;
    std::int64_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

// Simple undirected graph, immutable after construction. Adjacency is stored
// CSR-style with each neighbor list sorted ascending.
class Graph {
public:
    Graph() = default;

    std::int64_t vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        check(v);
        const auto b = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
        const auto e = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
        return {adj_.data() + b, e - b};
    }
    std::int64_t degree(Vertex v) const {
        check(v);
        return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
    }
    bool has_edge(Vertex u, Vertex v) const;

private:
    friend class GraphBuilder;
    void check(Vertex v) const {
        if (v < 0 || v >= n_) {
            throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
        }
    }
    std::int64_t n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::int64_t> offsets_;
    std::vector<Vertex> adj_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::int64_t n);
    // Rejects self-loops, out-of-range ids and duplicate edges.
    GraphBuilder& add_edge(Vertex u, Vertex v);
    Graph build();

private:
    std::int64_t n_;
    std::vector<std::pair<Vertex, Vertex>> edges_;  // stored with u < v
};

VertexSet open_neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
std::int64_t max_degree(const Graph& g);  // throws on empty graph

// Text formats. Edge list: first line "n m", then m lines "u v" with
// 0-based ids, u < v, rows ascending.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);
std::string to_dot(const Graph& g);
// Dense 0/1 adjacency rows, one space-separated row per line.
std::string to_dense_matrix_text(const Graph& g);

}  // namespace bfly

#endif
