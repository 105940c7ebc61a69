#pragma once

#include "rcgraph/small_graph.hpp"

namespace rcg {

SmallGraph complete_graph(int n);
SmallGraph empty_graph(int n);
SmallGraph cycle_graph(int n);
SmallGraph path_graph(int n);
SmallGraph complete_bipartite(int a, int b);
SmallGraph petersen_graph();

/// Generalized Petersen graph GP(n,k): outer n-cycle, inner jumps of k,
/// spokes between. GP(5,2) is the Petersen graph, GP(10,2) the dodecahedron.
SmallGraph generalized_petersen(int n, int k);

/// n-gonal antiprism: two parallel n-cycles joined by a band of triangles.
/// antiprism(3) is the octahedron.
SmallGraph antiprism(int n);

SmallGraph hypercube(int dim);

// Polyhedral graphs built from vertex coordinates (edges at minimal distance).
SmallGraph octahedron();
SmallGraph cube_graph();
SmallGraph cuboctahedron();
SmallGraph icosahedron();
SmallGraph rhombicuboctahedron();
SmallGraph snub_cube();

} // namespace rcg
