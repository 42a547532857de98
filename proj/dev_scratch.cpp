// temporary smoke checks (not part of the build)
#include "khcable/diagram.hpp"

#include <cstdio>

using namespace khc;

static void dump(const char* name, const PlanarDiagram& d) {
    auto m = metadata(d);
    std::printf("%s: n=%d (+%d/-%d) edges=%d free=%d comps=%d s0=%d writhe=%d\n", name, d.n(), d.n_plus(),
                d.n_minus(), d.edge_count, d.free_loops, m.components, m.seifert_circles, m.writhe);
    for (const auto& x : d.crossings)
        std::printf("  (%d,%d,%d,%d) %+d\n", x.e[0], x.e[1], x.e[2], x.e[3], x.sign);
    if (m.components == 2) std::printf("  lk(0,1)=%d\n", m.linking[0][1]);
}

int main() {
    auto unknot = braid_closure(BraidWord{1, {}});
    dump("unknot", unknot);

    auto kinkp = braid_closure(BraidWord{2, {1}});
    dump("kink+", kinkp);

    auto hopf = braid_closure(torus_braid(2, 2));
    dump("hopf+", hopf);

    auto tref = braid_closure(torus_braid(2, 3));
    dump("trefoil", tref);

    auto t33 = braid_closure(torus_braid(3, 3));
    dump("T(3,3)", t33);

    auto mt = mirror(tref);
    dump("mirror trefoil", mt);
    dump("mirror^2 trefoil", mirror(mt));
    std::printf("mirror involution: %s\n", mirror(mt) == tref ? "ok" : "FAIL");

    // smoothing circle counts on the trefoil, all 8 states
    for (std::uint64_t mask = 0; mask < 8; mask++) {
        auto [k, circ] = smoothing_circles(tref, mask);
        std::printf("tref state %llu: k=%d\n", (unsigned long long)mask, k);
    }

    // smooth once: trefoil 0-smoothing at crossing 0 -> Hopf link diagram
    auto sm = smooth(tref, 0, 0);
    dump("tref smoothed(0,0)", sm);
    std::printf("is hopf: %s\n", same_diagram(sm, hopf) ? "yes" : "no");

    // D(3,4) smoothed per the two-step recipe -> D(3,3)
    auto d34 = braid_closure(torus_braid(3, 4));
    auto s1 = smooth(d34, 1, 0);   // crossing (2,1): first sigma_2 letter
    auto s2 = smooth(s1, 0, 0);    // crossing (1,1): first sigma_1 letter
    auto d33 = braid_closure(torus_braid(3, 3));
    std::printf("D34 two-step == D33: %s\n", same_diagram(s2, d33) ? "yes" : "no");

    // kink smoothings
    auto k0 = smooth(kinkp, 0, 0);
    auto k1 = smooth(kinkp, 0, 1);
    std::printf("kink+ 0-smoothing: free=%d n=%d; 1-smoothing: free=%d n=%d\n", k0.free_loops, k0.n(),
                k1.free_loops, k1.n());
    return 0;
}
