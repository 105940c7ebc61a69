// Regenerates data/witnesses.g6: one verified witness per known (r,c) cell
// with r <= 6, plus the planar witnesses. Every graph is checked against
// its intended signature before being printed; any mismatch aborts.

#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcgraph/circulant.hpp"
#include "rcgraph/constructions.hpp"
#include "rcgraph/families.hpp"
#include "rcgraph/graph6.hpp"
#include "rcgraph/search.hpp"
#include "rcgraph/small_graph.hpp"

using namespace rcg;

namespace {

// (6,2) on 15 vertices: five column triangles over Z5 x Z3, a +1 shift to
// the next column and a 0<->2 swap to the column after. Each vertex sits on
// its column triangle plus exactly one cross triangle.
SmallGraph triangle_cover_15() {
    SmallGraph g(15);
    auto id = [](int col, int a) { return 3 * (((col % 5) + 5) % 5) + a; };
    const int swap02[3] = {2, 1, 0};
    for (int col = 0; col < 5; ++col)
        for (int a = 0; a < 3; ++a) {
            g.add_edge(id(col, a), id(col, (a + 1) % 3));
            g.add_edge(id(col, a), id(col + 1, (a + 1) % 3));
            g.add_edge(id(col, a), id(col + 2, swap02[a]));
        }
    return g;
}

// (5,2) on 12 vertices: the cuboctahedron plus its antipodal matching. The
// matching joins vertices at graph distance 3; no edge of it closes a
// triangle, so every link keeps exactly two edges.
SmallGraph cuboctahedron_plus_matching() {
    SmallGraph g = cuboctahedron();
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> dist(g.order(), -1);
        std::vector<int> queue{v};
        dist[v] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (int w : g.neighbors(queue[h]))
                if (dist[w] < 0) {
                    dist[w] = dist[queue[h]] + 1;
                    queue.push_back(w);
                }
        for (int u = v + 1; u < g.order(); ++u)
            if (dist[u] == 3)
                g.add_edge(v, u);
    }
    return g;
}

SmallGraph searched(int r, int c, int n_max) {
    auto res = smallest_rc_graph(r, c, n_max, false);
    if (!res.witness)
        throw std::logic_error("search found no witness for (" + std::to_string(r) + "," +
                               std::to_string(c) + ")");
    return *res.witness;
}

struct Entry {
    SmallGraph graph;
    int r, c, n;
};

} // namespace

int main() {
    std::vector<Entry> entries;
    auto add = [&](const SmallGraph& g, int r, int c) {
        auto sig = rc_signature(g);
        if (!sig || sig->r != r || sig->c != c)
            throw std::logic_error("witness for (" + std::to_string(r) + "," +
                                   std::to_string(c) + ") failed verification");
        entries.push_back({g, r, c, g.order()});
    };
    auto circ = [&](int n, std::vector<int> jumps, int r, int c) {
        add(make_circulant({n, std::move(jumps)}), r, c);
    };

    add(complete_graph(2), 1, 0);
    add(cycle_graph(4), 2, 0);
    add(complete_graph(3), 2, 1);

    add(complete_bipartite(3, 3), 3, 0);
    add(hypercube(3), 3, 0); // smallest planar (3,0)
    add(petersen_graph(), 3, 0);
    add(cartesian_product(cycle_graph(3), complete_graph(2)), 3, 1);
    add(complete_graph(4), 3, 3);

    add(complete_bipartite(4, 4), 4, 0);
    circ(9, {1, 3}, 4, 1);
    add(rhombicuboctahedron(), 4, 1); // smallest planar (4,1)
    add(searched(4, 2, 9), 4, 2);
    add(cuboctahedron(), 4, 2); // smallest planar (4,2)
    circ(7, {1, 2}, 4, 3);
    add(antiprism(4), 4, 3); // smallest planar (4,3)
    add(octahedron(), 4, 4);
    add(complete_graph(5), 4, 6);

    add(complete_bipartite(5, 5), 5, 0);
    circ(12, {1, 4, 6}, 5, 1);
    add(cuboctahedron_plus_matching(), 5, 2);
    add(searched(5, 3, 10), 5, 3);
    circ(12, {3, 4, 6}, 5, 4);
    add(snub_cube(), 5, 4); // smallest planar (5,4)
    add(icosahedron(), 5, 5);
    add(searched(5, 6, 8), 5, 6);
    add(cartesian_product(complete_graph(2), complete_graph(5)), 5, 6);
    add(complete_graph(6), 5, 10);

    circ(12, {1, 3, 5}, 6, 0);
    circ(15, {2, 5, 6}, 6, 1);
    add(triangle_cover_15(), 6, 2);
    circ(13, {1, 3, 5}, 6, 3);
    add(make_circulant(construct_rc_circulant(6, 4)), 6, 4);
    add(complement_transform(icosahedron()), 6, 5);
    circ(11, {1, 2, 4}, 6, 6);
    circ(12, {1, 2, 4}, 6, 7);
    add(complement_transform(cuboctahedron_plus_matching()), 6, 8);
    circ(9, {1, 2, 4}, 6, 9);
    circ(9, {1, 3, 4}, 6, 10);
    circ(8, {1, 2, 3}, 6, 12);
    add(complete_graph(7), 6, 15);

    add(hypercube(4), 4, 0); // extra nonplanar (4,0) witness

    for (const auto& e : entries)
        std::cout << g6_encode(e.graph) << "\n";
    std::cerr << entries.size() << " witnesses written\n";
    return 0;
}
