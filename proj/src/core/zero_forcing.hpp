#ifndef BUTTERFLY_CORE_ZERO_FORCING_HPP
#define BUTTERFLY_CORE_ZERO_FORCING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "core/butterfly_gen.hpp"
#include "core/graph.hpp"

namespace bfly {

// One simultaneous round: every colored vertex with a unique uncolored
// neighbor forces it, all at once.
struct ForcingRound {
    std::vector<std::pair<Vertex, Vertex>> forces;  // (colored v, forced w)
    VertexSet colored;                              // snapshot after the round
};

struct ForcingTrace {
    VertexSet initial;
    std::vector<ForcingRound> rounds;
    VertexSet final_set;
    bool forcing() const { return final_set.full(); }
    std::int64_t rounds_taken() const { return static_cast<std::int64_t>(rounds.size()); }
};

// Simultaneous-round closure; the final set is the (order-independent)
// zero-forcing closure of start.
ForcingTrace closure(const Graph& g, const VertexSet& start);

bool is_zero_forcing(const Graph& g, const VertexSet& s);

inline constexpr std::int64_t kNotForcing = -1;

// Number of simultaneous rounds until everything is colored, or kNotForcing.
std::int64_t propagation_time(const Graph& g, const VertexSet& s);

// Per-level interval description of a colored set in layer coordinates:
// on each level the colored rows are the windows [b, b+len) at every
// multiple b of stride. stride == 1 && len == 1 encodes a full level.
// Counting and membership never materialize vertices, so r up to ~60 works.
struct IntervalPattern {
    struct LevelRule {
        std::int64_t stride;
        std::int64_t len;
    };
    int r = 0;
    std::vector<LevelRule> levels;  // indexed by level, size r+1

    bool contains(std::int64_t x, int level) const;
    std::int64_t count() const;
};

// The interval construction of the canonical forcing set: level i < r uses
// windows of length J_{i+1} at stride 2^(i+1), level r the prefix of
// length J_{r+1}.
IntervalPattern forcing_pattern(int r);

// Colored set after k rounds of the level-wave schedule (see wave_chain),
// in closed form: down-step k halves the stride on level r-k, up-step k
// fills level k.  k = 0 gives forcing_pattern(r); k = 2r covers everything.
IntervalPattern wave_prediction(int r, int k);

// The canonical forcing set as 1-based recursive labels (block recursion
// over orders), sorted ascending.
std::vector<std::int64_t> recursive_forcing_set(int r);

// Materializations against a generated butterfly (ids in its ordering).
VertexSet materialize(const IntervalPattern& p, const Butterfly& bf);
VertexSet construct_forcing_set(const Butterfly& bf);

// The scheduled forcing dynamics used by the closed-form analysis: r down
// steps where only level r-k+1 forces onto level r-k, then r up steps where
// only level k-1 forces onto level k. Returns the 2r+1 colored sets
// X_0..X_2r computed from actual neighborhoods.
std::vector<VertexSet> wave_chain(const Butterfly& bf);

struct ZSearchOptions {
    std::uint64_t max_evaluations = 5'000'000;  // closure calls before giving up
    std::int64_t start_size = 1;                // e.g. a corank lower bound
};

struct ZSearchResult {
    std::int64_t z = 0;
    std::vector<Vertex> witness;  // lexicographically smallest minimum set
    std::uint64_t evaluations = 0;
};

// Exhaustive minimum zero-forcing search in increasing subset size,
// lexicographic within a size. Throws resource_error (carrying the size
// below which everything was excluded) when the budget runs out.
ZSearchResult brute_force_min_forcing(const Graph& g, const ZSearchOptions& opts = {});

}  // namespace bfly

#endif
