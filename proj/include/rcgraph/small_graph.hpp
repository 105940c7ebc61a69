#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rcg {

// Process-wide cap on graph order. Constructors and product-style
// operations refuse to build anything larger.
int order_cap();
void set_order_cap(int cap);
inline constexpr int kDefaultOrderCap = 512;

/// (r,c) signature: r-regular, every open neighbourhood induces c edges.
struct RcSignature {
    int r = 0;
    int c = 0;
    friend bool operator==(const RcSignature&, const RcSignature&) = default;
};

/// Simple undirected graph on {0..n-1} with bitset adjacency rows.
/// Rows are kept symmetric and irreflexive at all times.
class SmallGraph {
  public:
    explicit SmallGraph(int n);

    int order() const { return n_; }
    long long edge_count() const;

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return bit(u, v);
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    // Raw adjacency row of v, for popcount-style set arithmetic.
    std::span<const std::uint64_t> row(int v) const {
        check_vertex(v);
        return { bits_.data() + static_cast<std::size_t>(v) * words_,
                 static_cast<std::size_t>(words_) };
    }
    int words_per_row() const { return words_; }

    /// Vertex-induced subgraph on the given vertices (in the given order).
    SmallGraph induced(const std::vector<int>& vertices) const;

    /// Image of the graph under the permutation perm (vertex v maps to perm[v]).
    SmallGraph relabeled(const std::vector<int>& perm) const;

    friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

  private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;

    bool bit(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    void check_vertex(int v) const;
};

/// e(v): number of edges in the subgraph induced by the open neighbourhood of v.
int neighborhood_edges(const SmallGraph& g, int v);

/// (r,c) of the graph, or empty when degrees or link sizes are not constant.
std::optional<RcSignature> rc_signature(const SmallGraph& g);

/// Total number of triangles.
long long triangle_count(const SmallGraph& g);

/// Length of a shortest cycle; empty for forests.
std::optional<int> girth(const SmallGraph& g);

} // namespace rcg
