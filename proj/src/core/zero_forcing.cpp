#include "core/zero_forcing.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "core/jacobsthal.hpp"

namespace bfly {

ForcingTrace closure(const Graph& g, const VertexSet& start) {
    const std::int64_t n = g.vertex_count();
    if (start.universe() != n) throw std::invalid_argument("closure: set universe mismatch");

    ForcingTrace trace;
    trace.initial = start;
    VertexSet colored = start;

    // uncolored-neighbor counts let a round scan only candidate forcers
    std::vector<std::int64_t> uncolored_deg(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        std::int64_t d = 0;
        for (Vertex w : g.neighbors(v)) d += colored.contains(w) ? 0 : 1;
        uncolored_deg[static_cast<std::size_t>(v)] = d;
    }

    std::vector<Vertex> frontier = colored.to_vector();
    while (true) {
        ForcingRound round;
        for (Vertex v : frontier) {
            if (uncolored_deg[static_cast<std::size_t>(v)] != 1) continue;
            for (Vertex w : g.neighbors(v)) {
                if (!colored.contains(w)) {
                    round.forces.emplace_back(v, w);
                    break;
                }
            }
        }
        std::vector<Vertex> added;
        for (const auto& [v, w] : round.forces) {
            if (!colored.contains(w)) {
                colored.insert(w);
                added.push_back(w);
            }
        }
        if (added.empty()) break;
        for (Vertex w : added) {
            for (Vertex u : g.neighbors(w)) --uncolored_deg[static_cast<std::size_t>(u)];
        }
        // next round: only vertices adjacent to this round's additions can
        // newly become forcers, plus the additions themselves
        frontier = colored.to_vector();
        round.colored = colored;
        trace.rounds.push_back(std::move(round));
        if (colored.full()) break;
    }
    trace.final_set = std::move(colored);
    return trace;
}

bool is_zero_forcing(const Graph& g, const VertexSet& s) { return closure(g, s).forcing(); }

std::int64_t propagation_time(const Graph& g, const VertexSet& s) {
    const ForcingTrace t = closure(g, s);
    return t.forcing() ? t.rounds_taken() : kNotForcing;
}

bool IntervalPattern::contains(std::int64_t x, int level) const {
    if (level < 0 || level > r || x < 0 || x >= (std::int64_t{1} << r)) return false;
    const LevelRule& rule = levels[static_cast<std::size_t>(level)];
    return x % rule.stride < rule.len;
}

std::int64_t IntervalPattern::count() const {
    const std::int64_t rows = std::int64_t{1} << r;
    std::int64_t total = 0;
    for (const LevelRule& rule : levels) {
        total += (rows / rule.stride) * rule.len;  // stride divides 2^r, len <= stride
    }
    return total;
}

IntervalPattern forcing_pattern(int r) {
    if (r < 1) throw std::invalid_argument("forcing_pattern: r must be >= 1");
    IntervalPattern p;
    p.r = r;
    p.levels.resize(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i < r; ++i) {
        p.levels[static_cast<std::size_t>(i)] = {std::int64_t{1} << (i + 1), jacobsthal(i + 1)};
    }
    p.levels[static_cast<std::size_t>(r)] = {std::int64_t{1} << r, jacobsthal(r + 1)};
    return p;
}

IntervalPattern wave_prediction(int r, int k) {
    if (k < 0 || k > 2 * r) throw std::invalid_argument("wave_prediction: k out of 0..2r");
    IntervalPattern p = forcing_pattern(r);
    const int down = std::min(k, r);
    // down-steps 1..down halve the stride on levels r-1 down to r-down
    for (int i = r - down; i < r; ++i) {
        p.levels[static_cast<std::size_t>(i)].stride = std::int64_t{1} << i;
    }
    // up-steps fill levels 1..k-r completely (level 0 is already full after
    // the down phase: stride 1, len 1)
    for (int i = 0; i <= k - r; ++i) {
        p.levels[static_cast<std::size_t>(i)] = {1, 1};
    }
    if (k == 2 * r) p.levels[static_cast<std::size_t>(r)] = {1, 1};
    return p;
}

std::vector<std::int64_t> recursive_forcing_set(int r) {
    if (r < 1) throw std::invalid_argument("recursive_forcing_set: r must be >= 1");
    std::vector<std::int64_t> s = {1, 3};
    for (int k = 2; k <= r; ++k) {
        const std::int64_t half = static_cast<std::int64_t>(k) << (k - 1);  // k * 2^(k-1)
        const std::int64_t low_cut = static_cast<std::int64_t>(k - 1) << (k - 1);
        std::vector<std::int64_t> next = s;
        for (std::int64_t i : s) {
            if (i <= low_cut) next.push_back(i + half);
        }
        const std::int64_t base = static_cast<std::int64_t>(k) << k;  // k * 2^k
        for (std::int64_t i = 1; i <= jacobsthal(k + 1); ++i) next.push_back(base + i);
        std::sort(next.begin(), next.end());
        s = std::move(next);
    }
    return s;
}

VertexSet materialize(const IntervalPattern& p, const Butterfly& bf) {
    if (p.r != bf.r()) throw std::invalid_argument("materialize: order mismatch");
    VertexSet out(bf.vertex_count());
    const std::int64_t rows = std::int64_t{1} << p.r;
    for (int level = 0; level <= p.r; ++level) {
        const auto& rule = p.levels[static_cast<std::size_t>(level)];
        for (std::int64_t base = 0; base < rows; base += rule.stride) {
            for (std::int64_t x = base; x < base + rule.len; ++x) {
                out.insert(bf.id_of({x, level}));
            }
        }
    }
    return out;
}

VertexSet construct_forcing_set(const Butterfly& bf) {
    return materialize(forcing_pattern(bf.r()), bf);
}

std::vector<VertexSet> wave_chain(const Butterfly& bf) {
    const Graph& g = bf.graph();
    const int r = bf.r();
    VertexSet colored = construct_forcing_set(bf);
    std::vector<VertexSet> chain;
    chain.push_back(colored);
    for (int step = 1; step <= 2 * r; ++step) {
        // down phase forces from level r-step+1 onto r-step; up phase from
        // level step-r-1 onto step-r
        const int from = step <= r ? r - step + 1 : step - r - 1;
        const int onto = step <= r ? r - step : step - r;
        std::vector<Vertex> added;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (!colored.contains(v) || bf.coord_of(v).level != from) continue;
            Vertex unique_uncolored = -1;
            int uncolored = 0;
            for (Vertex w : g.neighbors(v)) {
                if (!colored.contains(w)) {
                    ++uncolored;
                    unique_uncolored = w;
                }
            }
            if (uncolored == 1 && bf.coord_of(unique_uncolored).level == onto) {
                added.push_back(unique_uncolored);
            }
        }
        for (Vertex w : added) colored.insert(w);
        chain.push_back(colored);
    }
    return chain;
}

namespace {

// first force needs some member with at most one uncolored neighbor
bool has_startable_force(const Graph& g, const std::vector<Vertex>& subset,
                         const VertexSet& as_set) {
    if (as_set.full()) return true;
    for (Vertex v : subset) {
        std::int64_t uncolored = 0;
        for (Vertex w : g.neighbors(v)) {
            if (!as_set.contains(w) && ++uncolored > 1) break;
        }
        if (uncolored <= 1) return true;
    }
    return false;
}

}  // namespace

ZSearchResult brute_force_min_forcing(const Graph& g, const ZSearchOptions& opts) {
    const std::int64_t n = g.vertex_count();
    if (n == 0) return {0, {}, 0};
    ZSearchResult result;

    std::int64_t first_size = std::max<std::int64_t>(opts.start_size, 1);
    for (std::int64_t size = first_size; size <= n; ++size) {
        // lexicographic combinations of {0..n-1}
        std::vector<Vertex> comb(static_cast<std::size_t>(size));
        for (std::int64_t i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i;
        while (true) {
            VertexSet s(n);
            for (Vertex v : comb) s.insert(v);
            if (has_startable_force(g, comb, s)) {
                if (++result.evaluations > opts.max_evaluations) {
                    throw resource_error(
                        "brute_force_min_forcing: evaluation budget exhausted; every size below " +
                            std::to_string(size) + " is fully excluded, so Z >= " +
                            std::to_string(size),
                        size);
                }
                if (is_zero_forcing(g, s)) {
                    result.z = size;
                    result.witness = comb;
                    return result;
                }
            }
            // advance
            std::int64_t i = size - 1;
            while (i >= 0 &&
                   comb[static_cast<std::size_t>(i)] == n - size + i) {
                --i;
            }
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (std::int64_t j = i + 1; j < size; ++j) {
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    result.z = n;
    result.witness = VertexSet::all(n).to_vector();
    return result;
}

}  // namespace bfly
