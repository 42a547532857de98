#pragma once
// Planar link diagrams as signed 4-valent graphs ("PD data"), plus the
// diagram-level operations: braid closure, single-crossing smoothing,
// mirror image, metadata (components / linking / writhe / Seifert count),
// and a canonical encoding used for hashing and diagram equality.
//
// Conventions (fixed throughout the project):
//  * A crossing stores its four incident edge ids counterclockwise starting
//    from the incoming under-strand: slots (0,1,2,3). The under-strand runs
//    slot0 -> slot2. The over-strand runs slot3 -> slot1 at a positive
//    crossing and slot1 -> slot3 at a negative one.
//  * The 0-smoothing joins slot0-slot1 and slot2-slot3; the 1-smoothing
//    joins slot0-slot3 and slot1-slot2. (Both descriptions are independent
//    of the sign; the 0-smoothing of a positive crossing is its oriented
//    smoothing.)
//  * Crossing-free circles are not given edge ids; they are tracked by the
//    free_loops counter.

#include "khcable/braid.hpp"
#include "khcable/common.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace khc {

struct Crossing {
    std::array<int, 4> e;  // edge ids, CCW from the incoming under-strand
    int sign;              // +1 or -1

    friend bool operator==(const Crossing& a, const Crossing& b) = default;
};

// True iff the strand at `slot` points into the crossing.
inline bool slot_is_in(int sign, int slot) {
    switch (slot) {
        case 0: return true;
        case 1: return sign < 0;
        case 2: return false;
        case 3: return sign > 0;
    }
    throw std::logic_error("slot out of range");
}

struct PlanarDiagram {
    std::vector<Crossing> crossings;
    int edge_count = 0;  // edge ids are 0..edge_count-1
    int free_loops = 0;  // crossing-free circle components

    int n() const { return static_cast<int>(crossings.size()); }
    int n_plus() const {
        int c = 0;
        for (const auto& x : crossings) c += (x.sign > 0);
        return c;
    }
    int n_minus() const { return n() - n_plus(); }
    int writhe() const { return n_plus() - n_minus(); }

    friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) = default;
};

// Checks structural and orientation consistency: signs are +-1, edge ids are
// dense, and every edge points into exactly one crossing slot and out of
// exactly one. Throws std::invalid_argument on the first violation.
inline void validate(const PlanarDiagram& d) {
    if (d.free_loops < 0 || d.edge_count < 0) throw std::invalid_argument("diagram: negative counts");
    std::vector<int> in_deg(d.edge_count, 0), out_deg(d.edge_count, 0);
    for (const auto& x : d.crossings) {
        if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("diagram: crossing sign must be +-1");
        for (int s = 0; s < 4; s++) {
            int e = x.e[s];
            if (e < 0 || e >= d.edge_count) throw std::invalid_argument("diagram: edge id out of range");
            (slot_is_in(x.sign, s) ? in_deg : out_deg)[e]++;
        }
    }
    for (int e = 0; e < d.edge_count; e++) {
        if (in_deg[e] != 1 || out_deg[e] != 1)
            throw std::invalid_argument("diagram: edge " + std::to_string(e) +
                                        " must enter one crossing and leave one");
    }
}

inline PlanarDiagram make_diagram(std::vector<Crossing> crossings, int free_loops = 0) {
    PlanarDiagram d;
    d.crossings = std::move(crossings);
    d.free_loops = free_loops;
    int max_e = -1;
    for (const auto& x : d.crossings)
        for (int e : x.e) max_e = std::max(max_e, e);
    d.edge_count = max_e + 1;
    validate(d);
    return d;
}

// Closure of a braid word, all strands oriented downward (so positive letters
// give positive crossings). The word is read top to bottom; edge ids start
// with the p strand-top edges 0..p-1, then two fresh ids per letter, and the
// closure identifies each strand's bottom edge with its top edge. Strand
// positions untouched by any letter close into free loops.
inline PlanarDiagram braid_closure(const BraidWord& b) {
    validate_braid(b);
    const int p = b.strands;
    std::vector<int> cur(p);
    std::iota(cur.begin(), cur.end(), 0);
    int next_id = p;
    std::vector<Crossing> xs;
    xs.reserve(b.letters.size());
    for (int l : b.letters) {
        int g = std::abs(l) - 1;
        int nL = next_id++, nR = next_id++;
        if (l > 0)
            xs.push_back({{cur[g], nL, nR, cur[g + 1]}, +1});  // under: NW->SE
        else
            xs.push_back({{cur[g + 1], cur[g], nL, nR}, -1});  // under: NE->SW
        cur[g] = nL;
        cur[g + 1] = nR;
    }
    // Close up: bottom edge of strand s becomes the top edge s again.
    std::vector<int> rename(next_id);
    std::iota(rename.begin(), rename.end(), 0);
    int free_loops = 0;
    for (int s = 0; s < p; s++) {
        if (cur[s] == s)
            free_loops++;  // no crossings on this strand position
        else
            rename[cur[s]] = s;
    }
    for (auto& x : xs)
        for (int& e : x.e) e = rename[e];
    // Compact edge ids, preserving relative order.
    std::vector<char> used(next_id, 0);
    for (const auto& x : xs)
        for (int e : x.e) used[e] = 1;
    std::vector<int> compact(next_id, -1);
    int ec = 0;
    for (int e = 0; e < next_id; e++)
        if (used[e]) compact[e] = ec++;
    for (auto& x : xs)
        for (int& e : x.e) e = compact[e];
    PlanarDiagram d;
    d.crossings = std::move(xs);
    d.edge_count = ec;
    d.free_loops = free_loops;
    validate(d);
    return d;
}

namespace detail {
// Minimal union-find over 0..n-1 with path halving.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};
}  // namespace detail

// Circles of the complete smoothing selected by `mask` (bit c = choice at
// crossing c). Returns the circle count k (free loops included) and, per
// edge, the circle id it lies on. Circle ids are ordered by smallest edge
// id; the free loops come last.
inline std::pair<int, std::vector<std::int8_t>> smoothing_circles(const PlanarDiagram& d, std::uint64_t mask) {
    detail::UnionFind uf(d.edge_count);
    for (int c = 0; c < d.n(); c++) {
        const auto& e = d.crossings[c].e;
        if ((mask >> c) & 1u) {
            uf.unite(e[0], e[3]);
            uf.unite(e[1], e[2]);
        } else {
            uf.unite(e[0], e[1]);
            uf.unite(e[2], e[3]);
        }
    }
    std::vector<std::int8_t> circle(d.edge_count, -1);
    int k = 0;
    std::vector<int> id_of_root(d.edge_count, -1);
    for (int e = 0; e < d.edge_count; e++) {
        int r = uf.find(e);
        if (id_of_root[r] < 0) id_of_root[r] = k++;
        circle[e] = static_cast<std::int8_t>(id_of_root[r]);
    }
    return {k + d.free_loops, std::move(circle)};
}

// Oriented strand components. Returns the total component count (free loops
// included, listed last) and the component id of every edge; ids are ordered
// by smallest edge id.
inline std::pair<int, std::vector<int>> components_of_edges(const PlanarDiagram& d) {
    // head_of[e] = (crossing, slot) into which e flows.
    std::vector<std::pair<int, int>> head_of(d.edge_count, {-1, -1});
    for (int c = 0; c < d.n(); c++)
        for (int s = 0; s < 4; s++)
            if (slot_is_in(d.crossings[c].sign, s)) head_of[d.crossings[c].e[s]] = {c, s};
    auto continue_slot = [](int s) {  // arriving slot -> departing slot of the same strand
        switch (s) {
            case 0: return 2;
            case 2: return 0;
            case 1: return 3;
            default: return 1;
        }
    };
    std::vector<int> comp(d.edge_count, -1);
    int count = 0;
    for (int e0 = 0; e0 < d.edge_count; e0++) {
        if (comp[e0] >= 0) continue;
        int id = count++;
        int e = e0;
        do {
            comp[e] = id;
            auto [c, s] = head_of[e];
            e = d.crossings[c].e[continue_slot(s)];
        } while (e != e0);
    }
    return {count + d.free_loops, std::move(comp)};
}

struct LinkMetadata {
    int components = 0;
    std::vector<std::vector<int>> linking;  // pairwise linking numbers, zero diagonal
    int writhe = 0;
    int n_plus = 0;   // l_+ of the diagram
    int n_minus = 0;  // l_-
    int seifert_circles = 0;  // s_0: circles of the oriented smoothing
};

inline LinkMetadata metadata(const PlanarDiagram& d) {
    LinkMetadata m;
    auto [count, comp] = components_of_edges(d);
    m.components = count;
    m.linking.assign(count, std::vector<int>(count, 0));
    std::vector<std::vector<int>> acc(count, std::vector<int>(count, 0));
    for (const auto& x : d.crossings) {
        int cu = comp[x.e[0]], co = comp[x.e[1]];  // under / over strand components
        if (cu != co) {
            acc[cu][co] += x.sign;
            acc[co][cu] += x.sign;
        }
    }
    for (int a = 0; a < count; a++)
        for (int b = 0; b < count; b++) {
            if (acc[a][b] % 2 != 0) throw std::logic_error("metadata: odd crossing sum between components");
            m.linking[a][b] = acc[a][b] / 2;
        }
    m.writhe = d.writhe();
    m.n_plus = d.n_plus();
    m.n_minus = d.n_minus();
    std::uint64_t oriented_mask = 0;
    for (int c = 0; c < d.n(); c++)
        if (d.crossings[c].sign < 0) oriented_mask |= (1ull << c);
    m.seifert_circles = smoothing_circles(d, oriented_mask).first;
    return m;
}

namespace detail {
// True iff every edge flows into exactly one slot and out of exactly one.
inline bool orientation_consistent(const PlanarDiagram& d) {
    std::vector<int> in_deg(d.edge_count, 0), out_deg(d.edge_count, 0);
    for (const auto& x : d.crossings)
        for (int s = 0; s < 4; s++) (slot_is_in(x.sign, s) ? in_deg : out_deg)[x.e[s]]++;
    for (int e = 0; e < d.edge_count; e++)
        if (in_deg[e] != 1 || out_deg[e] != 1) return false;
    return true;
}

// Re-orients all strands from scratch with a deterministic rule: the cycle
// through the smallest unvisited edge is directed so that this edge flows
// into the lexicographically smaller of its two (crossing, slot) endpoints.
// Slots are rotated by two where needed so slot0 is again the incoming
// under-strand, and signs are recomputed.
inline void reorient(PlanarDiagram& d) {
    std::vector<std::vector<std::pair<int, int>>> occ(d.edge_count);
    for (int c = 0; c < d.n(); c++)
        for (int s = 0; s < 4; s++) occ[d.crossings[c].e[s]].push_back({c, s});
    for (int e = 0; e < d.edge_count; e++) {
        if (occ[e].size() != 2) throw std::invalid_argument("reorient: edge not of degree 2");
        std::sort(occ[e].begin(), occ[e].end());
    }
    // head_at[c][s] = strand flows into crossing c at slot s.
    std::vector<std::array<char, 4>> head_at(d.n(), {0, 0, 0, 0});
    std::vector<char> visited(d.edge_count, 0);
    for (int e0 = 0; e0 < d.edge_count; e0++) {
        if (visited[e0]) continue;
        int e = e0;
        auto head = occ[e0][0];  // deterministic starting direction
        do {
            visited[e] = 1;
            head_at[head.first][head.second] = 1;
            int out_slot = head.second ^ 2;  // strand passes straight through
            int enext = d.crossings[head.first].e[out_slot];
            // The next edge's head is its occurrence away from (head.first, out_slot).
            auto cand = occ[enext][0];
            if (cand == std::make_pair(head.first, out_slot)) cand = occ[enext][1];
            e = enext;
            head = cand;
        } while (e != e0);
    }
    for (int c = 0; c < d.n(); c++) {
        auto& x = d.crossings[c];
        if (!head_at[c][0]) {  // under-strand enters at slot2: rotate by two
            std::swap(head_at[c][0], head_at[c][2]);
            std::swap(head_at[c][1], head_at[c][3]);
            x.e = {x.e[2], x.e[3], x.e[0], x.e[1]};
        }
        if (!head_at[c][0] || head_at[c][2] || head_at[c][1] == head_at[c][3])
            throw std::logic_error("reorient: inconsistent strand directions");
        x.sign = head_at[c][3] ? +1 : -1;
    }
}
}  // namespace detail

// Replace crossing `c` by its `choice`-smoothing (0 or 1). Surviving
// crossings keep their relative order; edges merged by the smoothing are
// renumbered by first appearance. If the chosen smoothing respects the
// orientation the remaining signs are untouched, otherwise all strands are
// re-oriented deterministically. Circles that no longer meet any crossing
// become free loops.
inline PlanarDiagram smooth(const PlanarDiagram& d, int c, int choice) {
    if (c < 0 || c >= d.n()) throw std::invalid_argument("smooth: crossing index out of range");
    if (choice != 0 && choice != 1) throw std::invalid_argument("smooth: choice must be 0 or 1");
    detail::UnionFind uf(d.edge_count);
    const auto& rm = d.crossings[c].e;
    if (choice == 0) {
        uf.unite(rm[0], rm[1]);
        uf.unite(rm[2], rm[3]);
    } else {
        uf.unite(rm[0], rm[3]);
        uf.unite(rm[1], rm[2]);
    }
    std::vector<int> new_id(d.edge_count, -1);
    int ec = 0;
    std::vector<Crossing> xs;
    xs.reserve(d.n() - 1);
    for (int i = 0; i < d.n(); i++) {
        if (i == c) continue;
        Crossing y = d.crossings[i];
        for (int& e : y.e) {
            int r = uf.find(e);
            if (new_id[r] < 0) new_id[r] = ec++;
            e = new_id[r];
        }
        xs.push_back(y);
    }
    int freed = 0;
    std::set<int> roots;
    for (int e : rm) roots.insert(uf.find(e));
    for (int r : roots)
        if (new_id[r] < 0) freed++;
    PlanarDiagram out;
    out.crossings = std::move(xs);
    out.edge_count = ec;
    out.free_loops = d.free_loops + freed;
    if (!detail::orientation_consistent(out)) detail::reorient(out);
    validate(out);
    return out;
}

// Mirror image: every crossing swaps over- and under-strand. The stored slot
// cycle is rotated so slot0 is again the incoming under-strand; applying
// mirror twice returns the identical diagram.
inline PlanarDiagram mirror(const PlanarDiagram& d) {
    PlanarDiagram m = d;
    for (auto& x : m.crossings) {
        if (x.sign > 0) {
            x.e = {x.e[3], x.e[0], x.e[1], x.e[2]};
            x.sign = -1;
        } else {
            x.e = {x.e[1], x.e[2], x.e[3], x.e[0]};
            x.sign = +1;
        }
    }
    return m;
}

inline PlanarDiagram disjoint_union_unknot(const PlanarDiagram& d) {
    PlanarDiagram u = d;
    u.free_loops++;
    return u;
}

// Canonical integer encoding, minimized over BFS traversals from every start
// crossing; edges are renumbered by first encounter. Two diagrams that differ
// only by relabeling crossings/edges of a connected diagram get equal
// encodings. (For diagrams whose crossing graph is disconnected the traversal
// restarts at the smallest-index unseen crossing, which is deterministic but
// not relabel-invariant.)
inline std::vector<std::int64_t> canonical_encoding(const PlanarDiagram& d) {
    const int n = d.n();
    std::vector<std::int64_t> best;
    if (n == 0) return {0, d.free_loops};
    // occurrences of each edge: (crossing, slot), sorted
    std::vector<std::vector<std::pair<int, int>>> occ(d.edge_count);
    for (int c = 0; c < n; c++)
        for (int s = 0; s < 4; s++) occ[d.crossings[c].e[s]].push_back({c, s});
    for (int start = 0; start < n; start++) {
        std::vector<std::int64_t> enc;
        enc.reserve(2 + 5 * n);
        enc.push_back(n);
        enc.push_back(d.free_loops);
        std::vector<int> emap(d.edge_count, -1);
        std::vector<char> seen(n, 0);
        std::vector<int> queue;
        queue.reserve(n);
        int qhead = 0;
        auto push = [&](int c) {
            if (!seen[c]) {
                seen[c] = 1;
                queue.push_back(c);
            }
        };
        push(start);
        int done = 0;
        int enext = 0;
        while (done < n) {
            if (qhead == static_cast<int>(queue.size())) {
                for (int c = 0; c < n; c++)  // disconnected: deterministic restart
                    if (!seen[c]) {
                        push(c);
                        break;
                    }
            }
            int c = queue[qhead++];
            done++;
            enc.push_back(d.crossings[c].sign);
            for (int s = 0; s < 4; s++) {
                int e = d.crossings[c].e[s];
                if (emap[e] < 0) emap[e] = enext++;
                enc.push_back(emap[e]);
            }
            for (int s = 0; s < 4; s++) {
                int e = d.crossings[c].e[s];
                for (const auto& [oc, os] : occ[e])
                    if (oc != c) push(oc);
            }
        }
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

inline std::uint64_t diagram_hash(const PlanarDiagram& d) { return fnv1a64_values(canonical_encoding(d)); }

inline bool same_diagram(const PlanarDiagram& a, const PlanarDiagram& b) {
    return canonical_encoding(a) == canonical_encoding(b);
}

}  // namespace khc
