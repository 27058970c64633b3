#ifndef BUTTERFLY_CORE_BUTTERFLY_GEN_HPP
#define BUTTERFLY_CORE_BUTTERFLY_GEN_HPP

#include <cstdint>
#include <vector>

#include "core/graph.hpp"

namespace bfly {

// Vertex orderings for BF(r).
//   layer:     id = level * 2^r + x
//   recursive: id = recursive_label(x, level) - 1, which groups the two
//              sub-butterflies into leading diagonal blocks
enum class Ordering { layer, recursive };

struct LayerVertex {
    std::int64_t x;  // row, 0 <= x < 2^r
    int level;       // 0 <= level <= r
    bool operator==(const LayerVertex&) const = default;
};

// For x > 0, the unique s with 2^(s-1) <= x < 2^s; for x = 0, -1.
// This is the lowest level whose straight-numbered block contains row x.
int split_level(std::int64_t x);

// The 1-based recursive vertex number of (x, level): peel the top set bit
// of x into a block offset until level >= split_level(x), then number
// straight through the block.
std::int64_t recursive_label(std::int64_t x, std::int64_t level);

// Inverse of recursive_label for a fixed order r.
LayerVertex label_to_coord(std::int64_t label, int r);

// Generation cap on (r+1)*2^r, overridable with env BUTTERFLY_MAX_VERTICES.
std::int64_t max_vertex_budget();

// BF(r) together with the bijections between ids, layer coordinates and
// recursive labels. Immutable.
class Butterfly {
public:
    // Throws std::invalid_argument for r < 1, resource_error over budget.
    static Butterfly generate(int r, Ordering order);

    int r() const { return r_; }
    Ordering ordering() const { return order_; }
    const Graph& graph() const { return graph_; }
    std::int64_t vertex_count() const { return graph_.vertex_count(); }

    Vertex id_of(LayerVertex v) const;
    LayerVertex coord_of(Vertex id) const;
    std::int64_t label_of(Vertex id) const;          // 1-based recursive label
    Vertex id_of_label(std::int64_t label) const;

private:
    Butterfly() = default;
    int r_ = 0;
    Ordering order_ = Ordering::layer;
    Graph graph_;
    std::vector<LayerVertex> coords_;  // id -> coordinate
};

}  // namespace bfly

#endif
