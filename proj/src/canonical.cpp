#include "rcgraph/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rcg {

namespace {

// Ordered partition of the vertex set. Cell order is part of the state;
// refinement and individualization keep it isomorphism-invariant.
using Partition = std::vector<std::vector<int>>;

// 1-dimensional Weisfeiler-Leman colour refinement until stable.
// Cells split by the multiset of neighbour colours; sub-cells are ordered
// by their signature so the result does not depend on vertex labels.
void refine(const SmallGraph& g, Partition& part) {
    int n = g.order();
    std::vector<int> color(n);
    for (;;) {
        for (std::size_t c = 0; c < part.size(); ++c)
            for (int v : part[c])
                color[v] = static_cast<int>(c);
        Partition next;
        bool changed = false;
        for (const auto& cell : part) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(g.degree(v));
                for (int u : g.neighbors(v))
                    sig.push_back(color[u]);
                std::sort(sig.begin(), sig.end());
                split[sig].push_back(v);
            }
            if (split.size() > 1)
                changed = true;
            for (auto& [sig, vs] : split)
                next.push_back(std::move(vs));
        }
        part = std::move(next);
        if (!changed)
            return;
    }
}

std::string encode_under(const SmallGraph& g, const std::vector<int>& lab) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n & 0xff));
    out.push_back(static_cast<char>((n >> 8) & 0xff));
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    out.resize(2 + (nbits + 7) / 8, '\0');
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.has_edge(lab[i], lab[j]))
                out[2 + bit / 8] |= static_cast<char>(1u << (7 - bit % 8));
    return out;
}

struct Best {
    std::string enc;
    bool have = false;
};

// A stable partition is homogeneous when every cell induces a complete or
// empty graph and every cell pair is completely joined or not at all. Then
// any labeling listing the cells in order yields one and the same encoding,
// so the whole subtree collapses into a single leaf.
bool homogeneous(const SmallGraph& g, const Partition& part) {
    for (std::size_t a = 0; a < part.size(); ++a) {
        const auto& cell = part[a];
        for (std::size_t i = 0; i < cell.size(); ++i)
            for (std::size_t j = i + 1; j < cell.size(); ++j)
                if (g.has_edge(cell[i], cell[j]) != g.has_edge(cell[0], cell[1]))
                    return false;
        for (std::size_t b = a + 1; b < part.size(); ++b) {
            bool first = g.has_edge(cell[0], part[b][0]);
            for (int u : cell)
                for (int v : part[b])
                    if (g.has_edge(u, v) != first)
                        return false;
        }
    }
    return true;
}

void emit_leaf(const SmallGraph& g, const Partition& part, Best& best) {
    std::vector<int> lab;
    lab.reserve(g.order());
    for (const auto& cell : part)
        for (int v : cell)
            lab.push_back(v);
    std::string enc = encode_under(g, lab);
    if (!best.have || enc < best.enc) {
        best.enc = std::move(enc);
        best.have = true;
    }
}

void descend(const SmallGraph& g, Partition part, Best& best) {
    refine(g, part);
    std::size_t target = part.size();
    for (std::size_t i = 0; i < part.size(); ++i)
        if (part[i].size() > 1) {
            target = i;
            break;
        }
    if (target == part.size() || homogeneous(g, part)) {
        emit_leaf(g, part, best);
        return;
    }
    std::vector<int> cell = part[target];
    std::sort(cell.begin(), cell.end());
    for (int v : cell) {
        Partition child;
        child.reserve(part.size() + 1);
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (i != target) {
                child.push_back(part[i]);
                continue;
            }
            child.push_back({v});
            std::vector<int> rest;
            rest.reserve(part[i].size() - 1);
            for (int u : part[i])
                if (u != v)
                    rest.push_back(u);
            child.push_back(std::move(rest));
        }
        descend(g, std::move(child), best);
    }
}

} // namespace

CanonicalForm canonical_form(const SmallGraph& g) {
    int n = g.order();
    if (n > order_cap())
        throw std::invalid_argument("canonical_form: order exceeds cap");

    long long edges = g.edge_count();
    long long full = static_cast<long long>(n) * (n - 1) / 2;
    if (edges == 0 || edges == full) {
        // Complete and edgeless graphs are canonical under any labeling.
        std::vector<int> identity(n);
        for (int i = 0; i < n; ++i)
            identity[i] = i;
        return CanonicalForm{encode_under(g, identity)};
    }

    // Start from the degree partition: cells ordered by degree.
    std::map<int, std::vector<int>> by_degree;
    for (int v = 0; v < n; ++v)
        by_degree[g.degree(v)].push_back(v);
    Partition part;
    for (auto& [d, vs] : by_degree)
        part.push_back(std::move(vs));

    Best best;
    descend(g, std::move(part), best);
    return CanonicalForm{std::move(best.enc)};
}

SmallGraph canonical_relabel(const SmallGraph& g) {
    CanonicalForm cf = canonical_form(g);
    int n = g.order();
    SmallGraph h(n);
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((cf.bytes[2 + bit / 8] >> (7 - bit % 8)) & 1)
                h.add_edge(i, j);
    return h;
}

std::string canonical_digest(const CanonicalForm& c) {
    unsigned __int128 hash = (static_cast<unsigned __int128>(0x6c62272e07bb0142ULL) << 64) |
                             0x62b821756295c58dULL;
    const unsigned __int128 prime =
        (static_cast<unsigned __int128>(0x0000000001000000ULL) << 64) | 0x000000000000013bULL;
    for (unsigned char byte : c.bytes) {
        hash ^= byte;
        hash *= prime;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(32, '0');
    for (int i = 31; i >= 0; --i) {
        out[i] = hex[static_cast<unsigned>(hash & 0xf)];
        hash >>= 4;
    }
    return out;
}

} // namespace rcg
