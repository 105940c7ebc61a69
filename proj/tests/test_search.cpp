#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "rcgraph/canonical.hpp"
#include "rcgraph/families.hpp"
#include "rcgraph/planarity.hpp"
#include "rcgraph/search.hpp"

using namespace rcg;

namespace {

// Canonical forms of all labeled graphs on n vertices with constant degree r
// and constant link c, grouped by (r,c). One pass over all 2^C(n,2) masks.
std::map<std::pair<int, int>, std::set<CanonicalForm>> rc_classes_by_masks(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            slots.push_back({i, j});
    int total = static_cast<int>(slots.size());
    std::map<std::pair<int, int>, std::set<CanonicalForm>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
        int deg[8] = {0};
        for (int b = 0; b < total; ++b)
            if (mask & (std::uint64_t{1} << b)) {
                ++deg[slots[b].first];
                ++deg[slots[b].second];
            }
        bool regular = true;
        for (int v = 1; v < n; ++v)
            if (deg[v] != deg[0]) {
                regular = false;
                break;
            }
        if (!regular)
            continue;
        SmallGraph g(n);
        for (int b = 0; b < total; ++b)
            if (mask & (std::uint64_t{1} << b))
                g.add_edge(slots[b].first, slots[b].second);
        auto sig = rc_signature(g);
        if (!sig)
            continue;
        out[{sig->r, sig->c}].insert(canonical_form(g));
    }
    return out;
}

std::set<CanonicalForm> forms_of(const std::vector<SmallGraph>& graphs) {
    std::set<CanonicalForm> out;
    for (const auto& g : graphs)
        out.insert(canonical_form(g));
    return out;
}

SearchConfig cfg_for(int n, int r, int c, bool planar = false) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.r = r;
    cfg.c = c;
    cfg.planar_only = planar;
    return cfg;
}

} // namespace

TEST_CASE("search finds the classics") {
    SearchResult res = generate_rc_graphs(cfg_for(4, 3, 3));
    REQUIRE(res.graphs.size() == 1);
    CHECK(canonical_form(res.graphs[0]) == canonical_form(complete_graph(4)));
    CHECK(res.complete);

    res = generate_rc_graphs(cfg_for(6, 3, 0));
    REQUIRE(res.graphs.size() == 1);
    CHECK(canonical_form(res.graphs[0]) == canonical_form(complete_bipartite(3, 3)));

    // Handshake: 3-regular on 5 vertices is impossible.
    res = generate_rc_graphs(cfg_for(5, 3, 0));
    CHECK(res.graphs.empty());
    CHECK(res.stats.nodes_expanded == 0);

    res = generate_rc_graphs(cfg_for(10, 3, 0));
    for (const auto& g : res.graphs)
        CHECK(rc_signature(g) == RcSignature{3, 0});
    bool petersen_found = false;
    for (const auto& g : res.graphs)
        if (canonical_form(g) == canonical_form(petersen_graph()))
            petersen_found = true;
    CHECK(petersen_found);
}

TEST_CASE("search output is sound, duplicate-free and deterministic") {
    SearchConfig cfg = cfg_for(8, 4, 2);
    SearchResult a = generate_rc_graphs(cfg);
    SearchResult b = generate_rc_graphs(cfg);
    REQUIRE(a.graphs.size() == b.graphs.size());
    for (std::size_t i = 0; i < a.graphs.size(); ++i)
        CHECK(a.graphs[i] == b.graphs[i]); // byte-identical output order
    std::set<CanonicalForm> forms = forms_of(a.graphs);
    CHECK(forms.size() == a.graphs.size());
    for (const auto& g : a.graphs) {
        CHECK(g.order() == 8);
        CHECK(rc_signature(g) == RcSignature{4, 2});
    }
}

TEST_CASE("parallel execution returns the identical sequence") {
    SearchConfig solo = cfg_for(8, 3, 1);
    SearchConfig multi = solo;
    multi.threads = 4;
    SearchResult a = generate_rc_graphs(solo);
    SearchResult b = generate_rc_graphs(multi);
    REQUIRE(a.graphs.size() == b.graphs.size());
    for (std::size_t i = 0; i < a.graphs.size(); ++i)
        CHECK(a.graphs[i] == b.graphs[i]);
}

TEST_CASE("pruned search equals the mask oracle for n <= 7, r <= 4") {
    for (int n = 4; n <= 7; ++n) {
        auto oracle_classes = rc_classes_by_masks(n);
        for (int r = 0; r <= std::min(4, n - 1); ++r)
            for (int c = 0; c <= r * (r - 1) / 2; ++c) {
                SearchResult res = generate_rc_graphs(cfg_for(n, r, c));
                std::set<CanonicalForm> got = forms_of(res.graphs);
                auto it = oracle_classes.find({r, c});
                std::set<CanonicalForm> want =
                    it == oracle_classes.end() ? std::set<CanonicalForm>{} : it->second;
                CHECK(got == want);
            }
    }
}

TEST_CASE("prune verdicts") {
    SearchConfig cfg = cfg_for(6, 3, 0);

    SmallGraph over_degree(5);
    for (int v = 1; v <= 4; ++v)
        over_degree.add_edge(0, v);
    CHECK(prune(over_degree, cfg) == PruneVerdict::CutDegree);

    // A triangle forces e(v) = 1 > 0.
    SmallGraph tri(4);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    CHECK(prune(tri, cfg) == PruneVerdict::CutLink);

    // All six vertices placed, some below degree r.
    SmallGraph under(6);
    under.add_edge(0, 1);
    CHECK(prune(under, cfg) == PruneVerdict::CutFeasibility);

    // Saturated closed neighbourhood with the wrong link count.
    SearchConfig cfg2 = cfg_for(8, 2, 1);
    SmallGraph square(4);
    for (int i = 0; i < 4; ++i)
        square.add_edge(i, (i + 1) % 4);
    // every vertex has degree 2 = r and e(v) = 0 != 1, frozen
    CHECK(prune(square, cfg2) == PruneVerdict::CutLink);

    CHECK(prune(complete_graph(3), cfg_for(4, 3, 3)) == PruneVerdict::Keep);
}

namespace {

// All ways of appending vertices (with arbitrary neighbour masks) up to
// order n; true when some completion hits the target signature.
bool exists_completion(const SmallGraph& partial, int n, const RcSignature& want) {
    if (partial.order() == n) {
        auto sig = rc_signature(partial);
        return sig && *sig == want;
    }
    int m = partial.order();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        SmallGraph grown(m + 1);
        for (int u = 0; u < m; ++u)
            for (int v : partial.neighbors(u))
                if (u < v)
                    grown.add_edge(u, v);
        for (int v = 0; v < m; ++v)
            if (mask & (1u << v))
                grown.add_edge(v, m);
        if (exists_completion(grown, n, want))
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("prune is monotone: cut partials have no completion (n <= 7)") {
    // Every labeled graph on 4 or 5 vertices that the prune cuts must have
    // no completion at all, checked by unpruned brute force.
    std::vector<SearchConfig> targets{cfg_for(6, 3, 0), cfg_for(6, 3, 1), cfg_for(6, 2, 0),
                                      cfg_for(7, 4, 3), cfg_for(7, 2, 0)};
    for (const auto& cfg : targets) {
        int m = cfg.n - 2; // leave two vertices of completion headroom
        int slots = m * (m - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
            SmallGraph g(m);
            int bit = 0;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j, ++bit)
                    if (mask & (1u << bit))
                        g.add_edge(i, j);
            if (prune(g, cfg) == PruneVerdict::Keep)
                continue;
            CHECK_FALSE(exists_completion(g, cfg.n, {cfg.r, cfg.c}));
        }
    }
}

TEST_CASE("extend_one_vertex enumerates admissible extensions") {
    SearchConfig cfg = cfg_for(4, 3, 3);
    auto exts = extend_one_vertex(complete_graph(3), cfg);
    REQUIRE(exts.size() == 1); // only joining to all of K3 survives
    CHECK(canonical_form(exts[0]) == canonical_form(complete_graph(4)));

    // Extensions of C4 toward (6,3,0): no triangle may appear.
    SearchConfig cfg2 = cfg_for(6, 3, 0);
    SmallGraph c4(4);
    for (int i = 0; i < 4; ++i)
        c4.add_edge(i, (i + 1) % 4);
    for (const auto& ext : extend_one_vertex(c4, cfg2))
        for (int v = 0; v < ext.order(); ++v)
            CHECK(neighborhood_edges(ext, v) == 0);
}

TEST_CASE("planar-restricted search") {
    // (3,0): K3,3 at order 6 is rejected, the cube appears at order 8.
    SearchResult res = generate_rc_graphs(cfg_for(6, 3, 0, true));
    CHECK(res.graphs.empty());
    res = generate_rc_graphs(cfg_for(8, 3, 0, true));
    bool cube_found = false;
    for (const auto& g : res.graphs) {
        CHECK(is_planar(g));
        if (canonical_form(g) == canonical_form(hypercube(3)))
            cube_found = true;
    }
    CHECK(cube_found);
}

TEST_CASE("smallest_rc_graph reproduces small table cells") {
    auto res = smallest_rc_graph(4, 3, 10, false);
    REQUIRE(res.witness.has_value());
    CHECK(res.order == 7);

    res = smallest_rc_graph(3, 3, 10, false);
    REQUIRE(res.witness.has_value());
    CHECK(res.order == 4);

    res = smallest_rc_graph(3, 3, 10, true);
    REQUIRE(res.witness.has_value());
    CHECK(res.order == 4);

    res = smallest_rc_graph(2, 1, 10, false);
    REQUIRE(res.witness.has_value());
    CHECK(res.order == 3);

    // Nothing exists: (3,2) within 8 vertices comes back empty but complete.
    res = smallest_rc_graph(3, 2, 8, false);
    CHECK_FALSE(res.witness.has_value());
    CHECK(res.complete);
    CHECK(res.last_completed_n == 8);
}

TEST_CASE("budget cuts produce incomplete results") {
    SearchConfig cfg = cfg_for(10, 3, 0);
    cfg.max_nodes = 5;
    SearchResult res = generate_rc_graphs(cfg);
    CHECK_FALSE(res.complete);
    CHECK(res.graphs.empty());

    SearchConfig base;
    base.max_nodes = 5;
    auto small = smallest_rc_graph(5, 0, 12, false, base);
    CHECK_FALSE(small.complete);
}

TEST_CASE("limit and first-found modes") {
    SearchConfig cfg = cfg_for(8, 3, 0);
    SearchResult all = generate_rc_graphs(cfg);
    REQUIRE(all.graphs.size() >= 2); // cube and K3,3 u K2? -- at least two classes

    cfg.limit = 1;
    SearchResult limited = generate_rc_graphs(cfg);
    REQUIRE(limited.graphs.size() == 1);
    CHECK(limited.graphs[0] == all.graphs[0]);

    cfg.limit = 0;
    cfg.mode = SearchConfig::Mode::FirstFound;
    SearchResult first = generate_rc_graphs(cfg);
    REQUIRE(first.graphs.size() == 1);
    CHECK(first.graphs[0] == all.graphs[0]);
}

TEST_CASE("search statistics are populated") {
    SearchResult res = generate_rc_graphs(cfg_for(7, 4, 3));
    CHECK(res.stats.nodes_expanded > 0);
    CHECK(res.stats.nodes_expanded >= res.graphs.size());
    CHECK(res.stats.elapsed_seconds >= 0.0);
    CHECK(res.stats.pruned_link + res.stats.pruned_degree + res.stats.pruned_feasibility > 0);
}
