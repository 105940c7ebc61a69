#include "rcgraph/planarity.hpp"

#include <algorithm>
#include <vector>

namespace rcg {

namespace {

// Left-right planarity test (de Fraysseix-Rosenstiehl criterion), testing
// phase only. Follows Brandes' formulation with conflict-pair stacks.
class LeftRightTest {
  public:
    explicit LeftRightTest(const SmallGraph& g) : g_(g), n_(g.order()) {
        for (int u = 0; u < n_; ++u)
            for (int v : g.neighbors(u))
                if (u < v) {
                    adj_[u].push_back({v, m_});
                    adj_[v].push_back({u, m_});
                    ++m_;
                }
    }

    bool run() {
        if (n_ <= 2)
            return true;
        if (m_ > 3LL * n_ - 6)
            return false;

        height_.assign(n_, -1);
        parent_edge_.assign(n_, kNone);
        src_.assign(m_, kNone);
        dst_.assign(m_, kNone);
        lowpt_.assign(m_, 0);
        lowpt2_.assign(m_, 0);
        nesting_.assign(m_, 0);
        ref_.assign(m_, kNone);
        side_.assign(m_, 1);
        lowpt_edge_.assign(m_, kNone);
        stack_bottom_.assign(m_, 0);

        std::vector<int> roots;
        for (int v = 0; v < n_; ++v)
            if (height_[v] == -1) {
                height_[v] = 0;
                roots.push_back(v);
                dfs_orientation(v);
            }

        ordered_out_.assign(n_, {});
        for (int e = 0; e < m_; ++e)
            ordered_out_[src_[e]].push_back(e);
        for (int v = 0; v < n_; ++v)
            std::sort(ordered_out_[v].begin(), ordered_out_[v].end(), [&](int a, int b) {
                if (nesting_[a] != nesting_[b])
                    return nesting_[a] < nesting_[b];
                return dst_[a] < dst_[b];
            });

        for (int r : roots)
            if (!dfs_testing(r))
                return false;
        return true;
    }

  private:
    static constexpr int kNone = -1;

    struct Interval {
        int low = kNone;
        int high = kNone;
        bool empty() const { return low == kNone && high == kNone; }
    };
    struct ConflictPair {
        Interval L, R;
    };

    const SmallGraph& g_;
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<std::pair<int, int>>> adj_{static_cast<std::size_t>(g_.order())};

    std::vector<int> height_, parent_edge_;
    std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_, ref_, lowpt_edge_, stack_bottom_;
    std::vector<signed char> side_;
    std::vector<std::vector<int>> ordered_out_;
    std::vector<ConflictPair> stack_;

    void dfs_orientation(int v) {
        int e = parent_edge_[v];
        for (auto [w, id] : adj_[v]) {
            if (src_[id] != kNone)
                continue; // already oriented
            src_[id] = v;
            dst_[id] = w;
            lowpt_[id] = height_[v];
            lowpt2_[id] = height_[v];
            if (height_[w] == -1) { // tree edge
                parent_edge_[w] = id;
                height_[w] = height_[v] + 1;
                dfs_orientation(w);
            } else { // back edge
                lowpt_[id] = height_[w];
            }
            nesting_[id] = 2 * lowpt_[id];
            if (lowpt2_[id] < height_[v])
                ++nesting_[id]; // chordal
            if (e != kNone) {
                if (lowpt_[id] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[id]);
                    lowpt_[e] = lowpt_[id];
                } else if (lowpt_[id] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[id]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[id]);
                }
            }
        }
    }

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt_[i.high] > lowpt_[b];
    }

    int lowest(const ConflictPair& p) const {
        if (p.L.empty())
            return lowpt_[p.R.low];
        if (p.R.empty())
            return lowpt_[p.L.low];
        return std::min(lowpt_[p.L.low], lowpt_[p.R.low]);
    }

    bool dfs_testing(int v) {
        int e = parent_edge_[v];
        bool first = true;
        for (int ei : ordered_out_[v]) {
            int w = dst_[ei];
            stack_bottom_[ei] = static_cast<int>(stack_.size());
            if (ei == parent_edge_[w]) { // tree edge
                if (!dfs_testing(w))
                    return false;
            } else { // back edge
                lowpt_edge_[ei] = ei;
                stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
            }
            if (lowpt_[ei] < height_[v]) { // ei has a return edge
                if (first) {
                    lowpt_edge_[e] = lowpt_edge_[ei];
                } else if (!add_constraints(ei, e)) {
                    return false;
                }
            }
            first = false;
        }
        if (e != kNone)
            remove_back_edges(e);
        return true;
    }

    bool add_constraints(int ei, int e) {
        ConflictPair p;
        // Merge return edges of ei into p.R.
        for (;;) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.L.empty())
                std::swap(q.L, q.R);
            if (!q.L.empty())
                return false; // not planar
            if (lowpt_[q.R.low] > lowpt_[e]) {
                if (p.R.empty())
                    p.R.high = q.R.high;
                else
                    ref_[p.R.low] = q.R.high;
                p.R.low = q.R.low;
            } else {
                ref_[q.R.low] = lowpt_edge_[e]; // align
            }
            if (static_cast<int>(stack_.size()) == stack_bottom_[ei])
                break;
        }
        // Merge conflicting return edges of earlier siblings into p.L.
        while (!stack_.empty() &&
               (conflicting(stack_.back().L, ei) || conflicting(stack_.back().R, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.R, ei))
                std::swap(q.L, q.R);
            if (conflicting(q.R, ei))
                return false; // not planar
            if (p.R.low != kNone)
                ref_[p.R.low] = q.R.high;
            if (q.R.low != kNone)
                p.R.low = q.R.low;
            if (p.L.empty())
                p.L.high = q.L.high;
            else
                ref_[p.L.low] = q.L.high;
            p.L.low = q.L.low;
        }
        if (!(p.L.empty() && p.R.empty()))
            stack_.push_back(p);
        return true;
    }

    void remove_back_edges(int e) {
        int u = src_[e];
        // Drop entire conflict pairs ending at u.
        while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
            ConflictPair p = stack_.back();
            stack_.pop_back();
            if (p.L.low != kNone)
                side_[p.L.low] = -1;
        }
        if (!stack_.empty()) {
            ConflictPair p = stack_.back();
            stack_.pop_back();
            while (p.L.high != kNone && dst_[p.L.high] == u)
                p.L.high = ref_[p.L.high];
            if (p.L.high == kNone && p.L.low != kNone) { // just emptied
                ref_[p.L.low] = p.R.low;
                side_[p.L.low] = -1;
                p.L.low = kNone;
            }
            while (p.R.high != kNone && dst_[p.R.high] == u)
                p.R.high = ref_[p.R.high];
            if (p.R.high == kNone && p.R.low != kNone) {
                ref_[p.R.low] = p.L.low;
                side_[p.R.low] = -1;
                p.R.low = kNone;
            }
            stack_.push_back(p);
        }
        // Side of e is the side of a highest return edge.
        if (lowpt_[e] < height_[u] && !stack_.empty()) {
            int hl = stack_.back().L.high;
            int hr = stack_.back().R.high;
            if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr]))
                ref_[e] = hl;
            else
                ref_[e] = hr;
        }
    }
};

} // namespace

bool is_planar(const SmallGraph& g) { return LeftRightTest(g).run(); }

} // namespace rcg
