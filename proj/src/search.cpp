#include "rcgraph/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <future>
#include <map>
#include <stdexcept>

#include "rcgraph/canonical.hpp"
#include "rcgraph/planarity.hpp"

namespace rcg {

namespace {

using Clock = std::chrono::steady_clock;

void check_config(const SearchConfig& cfg) {
    if (cfg.n < 1)
        throw std::invalid_argument("search needs n >= 1");
    if (cfg.r < 0 || cfg.r >= cfg.n)
        throw std::invalid_argument("search needs 0 <= r < n");
    if (cfg.c < 0 || static_cast<long long>(cfg.c) > static_cast<long long>(cfg.r) * (cfg.r - 1) / 2)
        throw std::invalid_argument("search needs 0 <= c <= C(r,2)");
}

} // namespace

PruneVerdict prune(const SmallGraph& partial, const SearchConfig& cfg) {
    int m = partial.order();
    int future = cfg.n - m;

    for (int v = 0; v < m; ++v)
        if (partial.degree(v) > cfg.r)
            return PruneVerdict::CutDegree;

    std::vector<int> link(m);
    for (int v = 0; v < m; ++v) {
        link[v] = neighborhood_edges(partial, v);
        if (link[v] > cfg.c)
            return PruneVerdict::CutLink;
    }
    // A saturated closed neighbourhood freezes the link; it must hit c.
    for (int v = 0; v < m; ++v) {
        if (partial.degree(v) != cfg.r || link[v] == cfg.c)
            continue;
        bool frozen = true;
        for (int u : partial.neighbors(v))
            if (partial.degree(u) != cfg.r) {
                frozen = false;
                break;
            }
        if (frozen)
            return PruneVerdict::CutLink;
    }

    long long residual_sum = 0;
    for (int v = 0; v < m; ++v) {
        int residual = cfg.r - partial.degree(v);
        if (residual > future)
            return PruneVerdict::CutFeasibility;
        residual_sum += residual;
    }
    // Stubs left for future vertices: nonnegative, even, and few enough to
    // fit among the future vertices themselves.
    long long future_internal_twice = static_cast<long long>(future) * cfg.r - residual_sum;
    if (future_internal_twice < 0 || future_internal_twice % 2 != 0)
        return PruneVerdict::CutFeasibility;
    if (future_internal_twice / 2 > static_cast<long long>(future) * (future - 1) / 2)
        return PruneVerdict::CutFeasibility;

    if (cfg.planar_only && !is_planar(partial))
        return PruneVerdict::CutFeasibility;

    return PruneVerdict::Keep;
}

namespace {

struct LocalBatch {
    std::vector<std::pair<CanonicalForm, SmallGraph>> extensions;
    std::uint64_t pruned_degree = 0;
    std::uint64_t pruned_link = 0;
    std::uint64_t pruned_feasibility = 0;
    std::uint64_t symmetry_skipped = 0;
};

// Enumerate admissible neighbour masks for the next vertex and collect the
// surviving extensions with their canonical forms.
void extend_into(const SmallGraph& partial, const SearchConfig& cfg, LocalBatch& out) {
    int m = partial.order();
    if (m > 63)
        throw std::invalid_argument("vertex-addition search is limited to 64 vertices");
    SmallGraph grown(m + 1);
    for (int u = 0; u < m; ++u)
        for (int v : partial.neighbors(u))
            if (u < v)
                grown.add_edge(u, v);

    std::uint64_t open = 0;
    int max_deg = 0;
    for (int v = 0; v < m; ++v) {
        int d = partial.degree(v);
        max_deg = std::max(max_deg, d);
        if (d < cfg.r)
            open |= std::uint64_t{1} << v;
    }

    // Submasks of `open` in increasing numeric order, empty mask included.
    std::uint64_t mask = 0;
    for (;;) {
        int deg = std::popcount(mask);
        if (deg <= cfg.r) {
            // Symmetry break: the new vertex must end weakly maximal;
            // every untouched old vertex keeps its degree, touched ones
            // gain one.
            bool maximal = deg >= max_deg;
            if (maximal)
                for (int v = 0; v < m && maximal; ++v)
                    if ((mask >> v) & 1)
                        maximal = partial.degree(v) + 1 <= deg;
            if (!maximal) {
                ++out.symmetry_skipped;
            } else {
                for (int v = 0; v < m; ++v)
                    if ((mask >> v) & 1)
                        grown.add_edge(v, m);
                switch (prune(grown, cfg)) {
                case PruneVerdict::Keep:
                    out.extensions.emplace_back(canonical_form(grown), grown);
                    break;
                case PruneVerdict::CutDegree: ++out.pruned_degree; break;
                case PruneVerdict::CutLink: ++out.pruned_link; break;
                case PruneVerdict::CutFeasibility: ++out.pruned_feasibility; break;
                }
                for (int v = 0; v < m; ++v)
                    if ((mask >> v) & 1)
                        grown.remove_edge(v, m);
            }
        }
        if (mask == open)
            break;
        mask = (mask - open) & open;
    }
}

} // namespace

std::vector<SmallGraph> extend_one_vertex(const SmallGraph& partial, const SearchConfig& cfg) {
    check_config(cfg);
    if (partial.order() >= cfg.n)
        throw std::invalid_argument("partial graph already has n vertices");
    LocalBatch batch;
    extend_into(partial, cfg, batch);
    std::vector<SmallGraph> out;
    out.reserve(batch.extensions.size());
    for (auto& [cf, g] : batch.extensions)
        out.push_back(std::move(g));
    return out;
}

SearchResult generate_rc_graphs(const SearchConfig& cfg) {
    check_config(cfg);
    auto t0 = Clock::now();
    SearchResult result;

    auto elapsed = [&] {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    };

    if (static_cast<long long>(cfg.n) * cfg.r % 2 != 0) {
        result.stats.elapsed_seconds = elapsed();
        return result; // handshake: trivially empty
    }

    // Level m holds one representative per isomorphism class of viable
    // partial graphs on m vertices.
    std::vector<SmallGraph> level{SmallGraph(1)};
    if (prune(level[0], cfg) != PruneVerdict::Keep)
        level.clear();

    bool budget_hit = false;
    for (int m = 1; m < cfg.n && !level.empty() && !budget_hit; ++m) {
        result.stats.nodes_expanded += level.size();
        if (result.stats.nodes_expanded > cfg.max_nodes || elapsed() > cfg.max_seconds) {
            budget_hit = true;
            break;
        }

        int threads = std::max(1, cfg.threads);
        std::size_t chunk = (level.size() + threads - 1) / threads;
        std::atomic<bool> stop{false};
        std::vector<std::future<LocalBatch>> futures;
        for (int t = 0; t < threads; ++t) {
            std::size_t lo = t * chunk;
            std::size_t hi = std::min(level.size(), lo + chunk);
            if (lo >= hi)
                break;
            futures.push_back(std::async(
                threads == 1 ? std::launch::deferred : std::launch::async, [&, lo, hi] {
                    LocalBatch batch;
                    for (std::size_t i = lo; i < hi; ++i) {
                        if ((i - lo) % 64 == 0 &&
                            (stop.load(std::memory_order_relaxed) || elapsed() > cfg.max_seconds)) {
                            stop.store(true, std::memory_order_relaxed);
                            break;
                        }
                        extend_into(level[i], cfg, batch);
                    }
                    return batch;
                }));
        }

        std::map<CanonicalForm, SmallGraph> next;
        for (auto& f : futures) {
            LocalBatch batch = f.get();
            result.stats.pruned_degree += batch.pruned_degree;
            result.stats.pruned_link += batch.pruned_link;
            result.stats.pruned_feasibility += batch.pruned_feasibility;
            for (auto& [cf, g] : batch.extensions) {
                if (!next.emplace(std::move(cf), std::move(g)).second)
                    ++result.stats.isomorphs_rejected;
            }
        }
        if (stop.load(std::memory_order_relaxed)) {
            budget_hit = true;
            break;
        }

        level.clear();
        level.reserve(next.size());
        for (auto& [cf, g] : next)
            level.push_back(std::move(g));
    }

    if (!budget_hit) {
        RcSignature want{cfg.r, cfg.c};
        for (auto& g : level) {
            if (g.order() != cfg.n)
                continue;
            auto sig = rc_signature(g);
            if (sig && *sig == want)
                result.graphs.push_back(std::move(g));
        }
        // Level graphs arrive sorted by canonical form already; re-sort to
        // keep the contract independent of the pipeline.
        std::sort(result.graphs.begin(), result.graphs.end(),
                  [](const SmallGraph& a, const SmallGraph& b) {
                      return canonical_form(a) < canonical_form(b);
                  });
        if (cfg.limit > 0 && result.graphs.size() > cfg.limit)
            result.graphs.erase(result.graphs.begin() + cfg.limit, result.graphs.end());
        if (cfg.mode == SearchConfig::Mode::FirstFound && result.graphs.size() > 1)
            result.graphs.erase(result.graphs.begin() + 1, result.graphs.end());
    }

    result.complete = !budget_hit;
    result.stats.elapsed_seconds = elapsed();
    return result;
}

SmallestResult smallest_rc_graph(int r, int c, int n_max, bool planar_only,
                                 const SearchConfig& base) {
    if (r < 0 || c < 0 || static_cast<long long>(c) > static_cast<long long>(r) * (r - 1) / 2)
        throw std::invalid_argument("need 0 <= c <= C(r,2)");
    SmallestResult out;
    auto t0 = Clock::now();
    for (int n = std::max(1, r + 1); n <= n_max; ++n) {
        if (static_cast<long long>(n) * r % 2 != 0)
            continue;
        SearchConfig cfg = base;
        cfg.n = n;
        cfg.r = r;
        cfg.c = c;
        cfg.planar_only = planar_only;
        cfg.mode = SearchConfig::Mode::FirstFound;
        cfg.max_seconds =
            base.max_seconds - std::chrono::duration<double>(Clock::now() - t0).count();
        SearchResult res = generate_rc_graphs(cfg);
        out.stats.nodes_expanded += res.stats.nodes_expanded;
        out.stats.pruned_degree += res.stats.pruned_degree;
        out.stats.pruned_link += res.stats.pruned_link;
        out.stats.pruned_feasibility += res.stats.pruned_feasibility;
        out.stats.isomorphs_rejected += res.stats.isomorphs_rejected;
        if (!res.complete) {
            out.complete = false;
            break;
        }
        if (!res.graphs.empty()) {
            out.witness = std::move(res.graphs.front());
            out.order = n;
            out.last_completed_n = n;
            break;
        }
        out.last_completed_n = n;
    }
    out.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return out;
}

} // namespace rcg
