#include "rcgraph/small_graph.hpp"

#include <atomic>
#include <bit>
#include <queue>
#include <stdexcept>

namespace rcg {

namespace {
std::atomic<int> g_order_cap{kDefaultOrderCap};
}

int order_cap() { return g_order_cap.load(std::memory_order_relaxed); }

void set_order_cap(int cap) {
    if (cap < 1)
        throw std::invalid_argument("order cap must be positive");
    g_order_cap.store(cap, std::memory_order_relaxed);
}

SmallGraph::SmallGraph(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("graph order must be at least 1");
    if (n > order_cap())
        throw std::invalid_argument("graph order " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(order_cap()));
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void SmallGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

void SmallGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void SmallGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int SmallGraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (auto w : row(v))
        d += std::popcount(w);
    return d;
}

long long SmallGraph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v)
        total += degree(v);
    return total / 2;
}

std::vector<int> SmallGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    auto r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

SmallGraph SmallGraph::induced(const std::vector<int>& vertices) const {
    SmallGraph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (has_edge(vertices[i], vertices[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

SmallGraph SmallGraph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    SmallGraph h(n_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v)
                h.add_edge(perm[u], perm[v]);
    return h;
}

int neighborhood_edges(const SmallGraph& g, int v) {
    auto rv = g.row(v); // bounds-checked
    int words = g.words_per_row();
    long long twice = 0;
    for (int u : g.neighbors(v)) {
        auto ru = g.row(u);
        for (int w = 0; w < words; ++w)
            twice += std::popcount(rv[w] & ru[w]);
    }
    return static_cast<int>(twice / 2);
}

std::optional<RcSignature> rc_signature(const SmallGraph& g) {
    int n = g.order();
    int r = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != r)
            return std::nullopt;
    int c = neighborhood_edges(g, 0);
    for (int v = 1; v < n; ++v)
        if (neighborhood_edges(g, v) != c)
            return std::nullopt;
    return RcSignature{r, c};
}

long long triangle_count(const SmallGraph& g) {
    long long sum = 0;
    for (int v = 0; v < g.order(); ++v)
        sum += neighborhood_edges(g, v);
    return sum / 3;
}

std::optional<int> girth(const SmallGraph& g) {
    int n = g.order();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (best != -1 && 2 * dist[u] + 1 >= best)
                break;
            for (int w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u] && u != parent[w]) {
                    int cand = dist[u] + dist[w] + 1;
                    if (best == -1 || cand < best)
                        best = cand;
                }
            }
        }
    }
    if (best == -1)
        return std::nullopt;
    return best;
}

} // namespace rcg
