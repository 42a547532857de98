#pragma once
// The cube of resolutions over a diagram and its (optionally windowed)
// chain-group materialization.
//
// Generators: a state is a smoothing choice per crossing (bit c of the mask
// = 1-smoothing at crossing c); an enhanced generator decorates each circle
// of the resolved state with 1 or X (bit set = X). Unnormalized gradings:
// homological degree = state weight |mask|, quantum degree = (#1-labels -
// #X-labels) + |mask|. Within a weight, states are ordered by ascending
// mask; within a (weight, quantum) block, label masks of fixed popcount are
// ordered ascending (colex rank), giving a deterministic generator order.
//
// A window [a,b] (in unnormalized homological degrees) materializes only the
// weights a-1..b+1 clipped to [0,n]; a budget caps the total number of
// enhanced generators that may be materialized.

#include "khcable/common.hpp"
#include "khcable/diagram.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace khc {

struct SmoothingState {
    std::uint64_t mask = 0;
    int weight = 0;  // popcount of mask
};

struct ResolvedState {
    std::uint64_t mask = 0;
    int k = 0;                                 // circles, free loops included
    std::vector<std::int8_t> circle_of_edge;   // size edge_count
    std::vector<int> min_edge_of_circle;       // size k - free_loops (edge circles only)
};

inline ResolvedState resolve(const PlanarDiagram& d, std::uint64_t mask) {
    ResolvedState r;
    r.mask = mask;
    auto [k, circ] = smoothing_circles(d, mask);
    r.k = k;
    r.circle_of_edge = std::move(circ);
    r.min_edge_of_circle.assign(k - d.free_loops, -1);
    for (int e = 0; e < d.edge_count; e++) {
        int c = r.circle_of_edge[e];
        if (r.min_edge_of_circle[c] < 0) r.min_edge_of_circle[c] = e;
    }
    return r;
}

struct EnhancedGenerator {
    std::uint64_t state = 0;   // smoothing mask
    std::uint64_t labels = 0;  // bit c set = circle c carries X
    int i_un = 0;              // unnormalized homological degree
    int q_un = 0;              // unnormalized quantum degree
};

// Description of the cube edge leaving `mask` by flipping crossing c from 0
// to 1: either two circles merge or one splits, with sign (-1)^(number of
// 1-smoothings at crossings before c).
struct EdgeMapInfo {
    int crossing = 0;
    int sign = 1;
    bool is_merge = true;
    int src_x = 0, src_y = 0;  // merge: the joined circles (x != y); split: src_x == src_y
    int dst_z = 0;             // merge result circle
    int dst_z1 = 0, dst_z2 = 0;  // split result circles
};

inline EdgeMapInfo edge_map(const PlanarDiagram& d, std::uint64_t mask, int c) {
    if ((mask >> c) & 1u) throw std::invalid_argument("edge_map: crossing already 1-smoothed");
    ResolvedState src = resolve(d, mask);
    ResolvedState dst = resolve(d, mask | (1ull << c));
    const auto& e = d.crossings[c].e;
    EdgeMapInfo info;
    info.crossing = c;
    info.sign = (std::popcount(mask & ((1ull << c) - 1)) % 2 == 0) ? +1 : -1;
    info.src_x = src.circle_of_edge[e[0]];
    info.src_y = src.circle_of_edge[e[2]];
    if (info.src_x != info.src_y) {
        info.is_merge = true;
        info.dst_z = dst.circle_of_edge[e[0]];
    } else {
        info.is_merge = false;
        info.dst_z1 = dst.circle_of_edge[e[0]];
        info.dst_z2 = dst.circle_of_edge[e[1]];
    }
    return info;
}

// Unnormalized (i,q) -> normalized (i - n_minus, q + n_plus - 2 n_minus).
struct Normalizer {
    int n_plus = 0, n_minus = 0;
    explicit Normalizer(const PlanarDiagram& d) : n_plus(d.n_plus()), n_minus(d.n_minus()) {}
    int i(int i_un) const { return i_un - n_minus; }
    int q(int q_un) const { return q_un + n_plus - 2 * n_minus; }
};

class ChainComplexSlice {
public:
    struct StateRec {
        std::uint64_t mask;
        std::int32_t k;
        std::uint64_t circ_off;     // offset into the pooled circle arrays
        std::uint64_t minedge_off;  // offset into the pooled min-edge arrays
        std::uint64_t lee_prefix;   // prefix sum of 2^k within this weight
    };

    ChainComplexSlice(PlanarDiagram d, std::optional<std::pair<int, int>> window, std::uint64_t budget)
        : d_(std::move(d)), n_(d_.n()), binom_(63) {
        if (n_ > 62) throw std::invalid_argument("complex: diagrams with more than 62 crossings unsupported");
        if (window) {
            windowed_ = true;
            req_a_ = window->first;
            req_b_ = window->second;
            if (req_a_ > req_b_) throw std::invalid_argument("complex: empty window");
            wlo_ = std::max(0, req_a_ - 1);
            whi_ = std::min(n_, req_b_ + 1);
            if (wlo_ > whi_) throw std::invalid_argument("complex: window misses degrees 0..n");
        } else {
            windowed_ = false;
            req_a_ = wlo_ = 0;
            req_b_ = whi_ = n_;
        }
        states_.resize(whi_ - wlo_ + 1);
        std::uint64_t running = 0;
        for (int w = wlo_; w <= whi_; w++) {
            auto& vec = states_[w - wlo_];
            vec.reserve(static_cast<std::size_t>(binom_(n_, w)));
            std::uint64_t lee_prefix = 0;
            std::uint64_t mask = (w == 0) ? 0 : (1ull << w) - 1;
            std::uint64_t count = binom_(n_, w);
            for (std::uint64_t idx = 0; idx < count; idx++) {
                auto [k, circ] = smoothing_circles(d_, mask);
                running += (1ull << k);
                if (running > budget) throw BudgetExceeded(budget, running);
                StateRec rec;
                rec.mask = mask;
                rec.k = k;
                rec.circ_off = circ_pool_.size();
                rec.minedge_off = minedge_pool_.size();
                rec.lee_prefix = lee_prefix;
                lee_prefix += (1ull << k);
                circ_pool_.insert(circ_pool_.end(), circ.begin(), circ.end());
                int k_edges = k - d_.free_loops;
                std::size_t me0 = minedge_pool_.size();
                minedge_pool_.resize(me0 + k_edges, -1);
                for (int e = 0; e < d_.edge_count; e++) {
                    int c = circ[e];
                    if (minedge_pool_[me0 + c] < 0) minedge_pool_[me0 + c] = e;
                }
                vec.push_back(rec);
                if (w == 0) break;
                // Gosper's hack: next mask of the same popcount.
                std::uint64_t lo = mask & (~mask + 1);
                std::uint64_t up = mask + lo;
                mask = up | (((mask ^ up) >> 2) / lo);
            }
        }
        total_generators_ = running;
    }

    const PlanarDiagram& diagram() const { return d_; }
    int n() const { return n_; }
    bool windowed() const { return windowed_; }
    std::pair<int, int> requested_window() const { return {req_a_, req_b_}; }
    int w_lo() const { return wlo_; }
    int w_hi() const { return whi_; }
    std::uint64_t total_generators() const { return total_generators_; }

    std::vector<int> materialized_weights() const {
        std::vector<int> ws;
        for (int w = wlo_; w <= whi_; w++) ws.push_back(w);
        return ws;
    }

    const std::vector<StateRec>& states(int w) const {
        check_w(w);
        return states_[w - wlo_];
    }
    const std::int8_t* circles(const StateRec& s) const { return circ_pool_.data() + s.circ_off; }
    const std::int32_t* min_edges(const StateRec& s) const { return minedge_pool_.data() + s.minedge_off; }

    // Index of the state with this mask within its weight, or -1.
    std::int64_t state_index(int w, std::uint64_t mask) const {
        const auto& vec = states(w);
        auto it = std::lower_bound(vec.begin(), vec.end(), mask,
                                   [](const StateRec& r, std::uint64_t m) { return r.mask < m; });
        if (it == vec.end() || it->mask != mask) return -1;
        return it - vec.begin();
    }

    // Quantum degrees with nonzero chain group at weight w, ascending.
    std::vector<int> q_values(int w) const {
        std::vector<int> qs;
        for (const auto& s : states(w))
            for (int t = 0; t <= s.k; t++) {
                int q = w + s.k - 2 * t;
                if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
            }
        std::sort(qs.begin(), qs.end());
        return qs;
    }

    // Generator layout of the (w, q_un) block: per-state offsets and total dim.
    struct QBlock {
        int w = 0, q = 0;
        std::int64_t dim = 0;
        std::vector<std::int64_t> state_offset;  // parallel to states(w); -1 if state absent
        std::vector<int> t_of_state;             // X-count per state; -1 if absent
    };

    QBlock qblock(int w, int q) const {
        const auto& vec = states(w);
        QBlock b;
        b.w = w;
        b.q = q;
        b.state_offset.assign(vec.size(), -1);
        b.t_of_state.assign(vec.size(), -1);
        for (std::size_t i = 0; i < vec.size(); i++) {
            int num = vec[i].k + w - q;
            if (num % 2 != 0) continue;
            int t = num / 2;
            if (t < 0 || t > vec[i].k) continue;
            b.state_offset[i] = b.dim;
            b.t_of_state[i] = t;
            b.dim += static_cast<std::int64_t>(binom_(vec[i].k, t));
        }
        return b;
    }

    std::int64_t block_dim(int w, int q) const { return qblock(w, q).dim; }

    std::int64_t lee_dim(int w) const {
        const auto& vec = states(w);
        if (vec.empty()) return 0;
        return static_cast<std::int64_t>(vec.back().lee_prefix + (1ull << vec.back().k));
    }

    // Explicit generator list of one block, in the canonical order (intended
    // for tests and small computations).
    std::vector<EnhancedGenerator> block_generators(int w, int q) const {
        QBlock b = qblock(w, q);
        const auto& vec = states(w);
        std::vector<EnhancedGenerator> gens;
        gens.reserve(b.dim);
        for (std::size_t i = 0; i < vec.size(); i++) {
            if (b.state_offset[i] < 0) continue;
            int t = b.t_of_state[i];
            for_each_mask(vec[i].k, t, [&](std::uint64_t labels) {
                gens.push_back({vec[i].mask, labels, w, q});
            });
        }
        return gens;
    }

    // Colex rank of a label mask among masks of equal popcount.
    std::int64_t label_rank(std::uint64_t labels) const {
        std::int64_t r = 0;
        int seen = 0;
        while (labels) {
            int p = std::countr_zero(labels);
            labels &= labels - 1;
            r += static_cast<std::int64_t>(binom_(p, ++seen));
        }
        return r;
    }

    const BinomialTable& binom() const { return binom_; }

    // Enumerate all k-bit masks of popcount t in ascending numeric order.
    template <class F>
    static void for_each_mask(int k, int t, F&& f) {
        if (t < 0 || t > k) return;
        if (t == 0) {
            f(0ull);
            return;
        }
        std::uint64_t mask = (1ull << t) - 1;
        const std::uint64_t limit = (k == 64) ? ~0ull : (1ull << k);
        while (mask < limit) {
            f(mask);
            std::uint64_t lo = mask & (~mask + 1);
            std::uint64_t up = mask + lo;
            if (up >= limit && t > 0) break;
            mask = up | (((mask ^ up) >> 2) / lo);
            if ((mask & ~(limit - 1)) != 0) break;
        }
    }

private:
    void check_w(int w) const {
        if (w < wlo_ || w > whi_)
            throw std::out_of_range("complex: weight " + std::to_string(w) + " not materialized");
    }

    PlanarDiagram d_;
    int n_;
    bool windowed_ = false;
    int req_a_ = 0, req_b_ = 0;
    int wlo_ = 0, whi_ = 0;
    std::vector<std::vector<StateRec>> states_;
    std::vector<std::int8_t> circ_pool_;
    std::vector<std::int32_t> minedge_pool_;
    std::uint64_t total_generators_ = 0;
    BinomialTable binom_;
};

inline ChainComplexSlice build_complex(const PlanarDiagram& d,
                                       std::optional<std::pair<int, int>> window = std::nullopt,
                                       std::uint64_t budget = 50'000'000ull) {
    return ChainComplexSlice(d, window, budget);
}

}  // namespace khc
