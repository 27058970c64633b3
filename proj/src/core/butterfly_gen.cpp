#include "core/butterfly_gen.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bfly {

int split_level(std::int64_t x) {
    if (x < 0) throw std::invalid_argument("split_level: negative argument");
    if (x == 0) return -1;
    return std::bit_width(static_cast<std::uint64_t>(x));
}

std::int64_t recursive_label(std::int64_t x, std::int64_t level) {
    if (x < 0 || level < 0) throw std::invalid_argument("recursive_label: negative argument");
    std::int64_t offset = 0;
    int s = split_level(x);
    while (level < s) {
        offset += static_cast<std::int64_t>(s) << (s - 1);  // s * 2^(s-1)
        x -= std::int64_t{1} << (s - 1);
        s = split_level(x);
    }
    return offset + (level << level) + x + 1;
}

std::int64_t max_vertex_budget() {
    static const std::int64_t budget = [] {
        if (const char* env = std::getenv("BUTTERFLY_MAX_VERTICES")) {
            const std::int64_t v = std::atoll(env);
            if (v > 0) return v;
        }
        return std::int64_t{1} << 24;
    }();
    return budget;
}

Butterfly Butterfly::generate(int r, Ordering order) {
    if (r < 1) throw std::invalid_argument("Butterfly: r must be >= 1");
    if (r > 57) throw std::invalid_argument("Butterfly: r too large for 64-bit ids");
    const std::int64_t rows = std::int64_t{1} << r;
    const std::int64_t n = (r + 1) * rows;
    if (n > max_vertex_budget()) {
        throw resource_error("Butterfly: (r+1)*2^r = " + std::to_string(n) +
                                 " exceeds vertex budget " + std::to_string(max_vertex_budget()),
                             0);
    }

    Butterfly bf;
    bf.r_ = r;
    bf.order_ = order;
    bf.coords_.resize(static_cast<std::size_t>(n));

    // id_of must work before graph() exists, so fill coords_ first
    for (int level = 0; level <= r; ++level) {
        for (std::int64_t x = 0; x < rows; ++x) {
            const Vertex id = order == Ordering::layer
                                  ? static_cast<std::int64_t>(level) * rows + x
                                  : recursive_label(x, level) - 1;
            bf.coords_[static_cast<std::size_t>(id)] = LayerVertex{x, level};
        }
    }

    GraphBuilder builder(n);
    for (int level = 1; level <= r; ++level) {
        const std::int64_t flip = std::int64_t{1} << (level - 1);
        for (std::int64_t x = 0; x < rows; ++x) {
            const Vertex a = bf.id_of({x, level - 1});
            builder.add_edge(a, bf.id_of({x, level}));
            builder.add_edge(a, bf.id_of({x ^ flip, level}));
        }
    }
    bf.graph_ = builder.build();
    return bf;
}

Vertex Butterfly::id_of(LayerVertex v) const {
    const std::int64_t rows = std::int64_t{1} << r_;
    if (v.x < 0 || v.x >= rows || v.level < 0 || v.level > r_) {
        throw std::invalid_argument("Butterfly: coordinate out of range");
    }
    if (order_ == Ordering::layer) return static_cast<std::int64_t>(v.level) * rows + v.x;
    return recursive_label(v.x, v.level) - 1;
}

LayerVertex Butterfly::coord_of(Vertex id) const {
    if (id < 0 || id >= vertex_count()) {
        throw std::invalid_argument("Butterfly: id out of range");
    }
    return coords_[static_cast<std::size_t>(id)];
}

std::int64_t Butterfly::label_of(Vertex id) const {
    const LayerVertex v = coord_of(id);
    return recursive_label(v.x, v.level);
}

Vertex Butterfly::id_of_label(std::int64_t label) const {
    if (label < 1 || label > vertex_count()) {
        throw std::invalid_argument("Butterfly: label out of range");
    }
    if (order_ == Ordering::recursive) return label - 1;
    return id_of(label_to_coord(label, r_));
}

LayerVertex label_to_coord(std::int64_t label, int r) {
    if (r < 0 || label < 1 || label > (std::int64_t{r} + 1) << r) {
        throw std::invalid_argument("label_to_coord: out of range");
    }
    // undo the block recursion: the label space of order s splits into the
    // two sub-blocks of order s-1 followed by the straight level-s block
    std::int64_t x = 0;
    for (int s = r; s >= 0; --s) {
        const std::int64_t straight = static_cast<std::int64_t>(s) << s;  // s * 2^s
        if (label > straight) {
            return LayerVertex{x + label - straight - 1, s};
        }
        const std::int64_t half = straight / 2;  // s * 2^(s-1)
        if (label > half) {
            x += std::int64_t{1} << (s - 1);
            label -= half;
        }
    }
    throw std::logic_error("label_to_coord: unreachable");
}

}  // namespace bfly
