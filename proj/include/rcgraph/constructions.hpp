#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rcgraph/small_graph.hpp"

namespace rcg {

struct NoPartition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Multiset of clique sizes x_1 >= ... >= x_m with sum(x_j) = r and
/// sum(C(x_j,2)) = c. Witness data for the constant-link clique construction.
struct CliquePartition {
    std::vector<int> parts;
};

/// Cartesian product. Vertex (g,h) maps to g*|V(H)| + h.
/// An (r1,c1)-graph times an (r2,c2)-graph is an (r1+r2, c1+c2)-graph.
SmallGraph cartesian_product(const SmallGraph& g, const SmallGraph& h);

/// Complement. An (r,c)-graph on n vertices becomes an
/// (n-1-r, C(n-1,2) - 3r(n-1-r)/2 - c)-graph.
SmallGraph complement_transform(const SmallGraph& g);

/// A partition of r with link edge count c, or empty when none exists.
/// Among all solutions the one with minimal product(x_j + 1) is returned,
/// ties broken by reverse-lexicographic enumeration order.
std::optional<CliquePartition> solve_clique_partition(int r, int c);

/// Product of cliques K_{x_1+1} x ... x K_{x_m+1} realizing an (r,c)-graph
/// on product(x_j + 1) vertices. Throws NoPartition when unsolvable.
SmallGraph fact2_construct(int r, int c);

} // namespace rcg
