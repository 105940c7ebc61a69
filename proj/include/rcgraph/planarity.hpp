#pragma once

#include "rcgraph/small_graph.hpp"

namespace rcg {

/// Left-right planarity test. True iff g embeds in the plane.
bool is_planar(const SmallGraph& g);

} // namespace rcg
