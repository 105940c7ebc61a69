#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rcgraph/small_graph.hpp"

namespace rcg {

struct SearchConfig {
    int n = 0;
    int r = 0;
    int c = 0;
    bool planar_only = false;
    std::uint64_t limit = 0; // max results, 0 = all
    enum class Mode { AllGraphs, FirstFound } mode = Mode::AllGraphs;
    int threads = 1;
    std::uint64_t max_nodes = 100'000'000; // expanded-partial budget
    double max_seconds = 600.0;
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t pruned_degree = 0;
    std::uint64_t pruned_link = 0;
    std::uint64_t pruned_feasibility = 0;
    std::uint64_t isomorphs_rejected = 0;
    double elapsed_seconds = 0.0;
};

struct SearchResult {
    std::vector<SmallGraph> graphs; // sorted by canonical form
    SearchStats stats;
    bool complete = true; // false when the budget cut the run short
};

enum class PruneVerdict { Keep, CutDegree, CutLink, CutFeasibility };

/// Decide whether a partial graph can still extend to an (r,c)-graph on
/// cfg.n vertices. Cuts on: a vertex over degree r; a link over c edges; a
/// saturated closed neighbourhood whose link misses c; residual-degree
/// infeasibility; and (under planar_only) nonplanarity.
PruneVerdict prune(const SmallGraph& partial, const SearchConfig& cfg);

/// All admissible one-vertex extensions of a partial graph: every neighbour
/// set for the new vertex that survives prune(), enumerated as bitmasks in
/// increasing numeric order. The new vertex must attain a weakly maximal
/// degree (symmetry break).
std::vector<SmallGraph> extend_one_vertex(const SmallGraph& partial, const SearchConfig& cfg);

/// All pairwise non-isomorphic (r,c)-graphs on cfg.n vertices (planar when
/// requested), generated by pruned vertex-by-vertex extension with
/// per-level canonical-form deduplication.
SearchResult generate_rc_graphs(const SearchConfig& cfg);

struct SmallestResult {
    std::optional<SmallGraph> witness;
    int order = 0;            // order of the witness when found
    int last_completed_n = 0; // highest order fully searched
    SearchStats stats;
    bool complete = true;
};

/// Smallest n <= n_max carrying an (r,c)-graph, with the witness of
/// lexicographically least canonical form at that order.
SmallestResult smallest_rc_graph(int r, int c, int n_max, bool planar_only,
                                 const SearchConfig& base = {});

} // namespace rcg
