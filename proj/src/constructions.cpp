#include "rcgraph/constructions.hpp"

#include <functional>

#include "rcgraph/families.hpp"

namespace rcg {

SmallGraph cartesian_product(const SmallGraph& g, const SmallGraph& h) {
    long long n = static_cast<long long>(g.order()) * h.order();
    if (n > order_cap())
        throw std::invalid_argument("cartesian product order exceeds cap");
    int nh = h.order();
    SmallGraph p(static_cast<int>(n));
    for (int a = 0; a < g.order(); ++a)
        for (int x = 0; x < nh; ++x) {
            for (int y : h.neighbors(x))
                if (x < y)
                    p.add_edge(a * nh + x, a * nh + y);
            for (int b : g.neighbors(a))
                if (a < b)
                    p.add_edge(a * nh + x, b * nh + x);
        }
    return p;
}

SmallGraph complement_transform(const SmallGraph& g) {
    int n = g.order();
    SmallGraph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v))
                c.add_edge(u, v);
    return c;
}

namespace {

// Enumerate partitions of r in reverse-lexicographic order.
void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    const std::function<void(const std::vector<int>&)>& emit) {
    if (remaining == 0) {
        emit(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, emit);
        prefix.pop_back();
    }
}

} // namespace

std::optional<CliquePartition> solve_clique_partition(int r, int c) {
    if (r < 0 || c < 0)
        throw std::invalid_argument("r and c must be nonnegative");
    if (r == 0)
        return c == 0 ? std::optional<CliquePartition>{CliquePartition{}} : std::nullopt;

    std::optional<CliquePartition> best;
    long long best_order = -1;
    std::vector<int> prefix;
    partitions_rec(r, r, prefix, [&](const std::vector<int>& parts) {
        long long edges = 0;
        for (int x : parts)
            edges += static_cast<long long>(x) * (x - 1) / 2;
        if (edges != c)
            return;
        long long ord = 1;
        for (int x : parts)
            ord *= x + 1;
        if (!best || ord < best_order) {
            best = CliquePartition{parts};
            best_order = ord;
        }
    });
    return best;
}

SmallGraph fact2_construct(int r, int c) {
    auto partition = solve_clique_partition(r, c);
    if (!partition)
        throw NoPartition("no clique partition for r=" + std::to_string(r) +
                          ", c=" + std::to_string(c));
    SmallGraph g = complete_graph(partition->parts.empty() ? 1 : partition->parts[0] + 1);
    for (std::size_t i = 1; i < partition->parts.size(); ++i)
        g = cartesian_product(g, complete_graph(partition->parts[i] + 1));
    return g;
}

} // namespace rcg
