#include "rcgraph/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace rcg {

SmallGraph complete_graph(int n) {
    SmallGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

SmallGraph empty_graph(int n) { return SmallGraph(n); }

SmallGraph cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    SmallGraph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

SmallGraph path_graph(int n) {
    SmallGraph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

SmallGraph complete_bipartite(int a, int b) {
    SmallGraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            g.add_edge(i, a + j);
    return g;
}

SmallGraph petersen_graph() {
    // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            pairs.push_back({i, j});
    SmallGraph g(10);
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            auto [i, j] = pairs[a];
            auto [k, l] = pairs[b];
            if (i != k && i != l && j != k && j != l)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return g;
}

SmallGraph generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n)
        throw std::invalid_argument("generalized Petersen needs n >= 3, 1 <= k < n/2");
    SmallGraph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);         // outer cycle
        g.add_edge(n + i, n + (i + k) % n); // inner star
        g.add_edge(i, n + i);               // spoke
    }
    return g;
}

SmallGraph antiprism(int n) {
    if (n < 3)
        throw std::invalid_argument("antiprism needs n >= 3");
    SmallGraph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(n + i, n + (i + 1) % n);
        g.add_edge(i, n + i);
        g.add_edge((i + 1) % n, n + i);
    }
    return g;
}

SmallGraph hypercube(int dim) {
    if (dim < 0 || dim > 20)
        throw std::invalid_argument("hypercube dimension out of range");
    SmallGraph g(1 << dim);
    for (int v = 0; v < (1 << dim); ++v)
        for (int b = 0; b < dim; ++b)
            if (!(v & (1 << b)))
                g.add_edge(v, v | (1 << b));
    return g;
}

SmallGraph octahedron() { return antiprism(3); }

SmallGraph cube_graph() { return hypercube(3); }

namespace {

// Quadratic integers a + b*w with w*w = ww_int + ww_coef*w. Exact squared
// distances between polyhedron vertices, no floating point.
struct Quad {
    long long a = 0, b = 0;
    friend Quad operator-(Quad x, Quad y) { return {x.a - y.a, x.b - y.b}; }
    friend Quad operator+(Quad x, Quad y) { return {x.a + y.a, x.b + y.b}; }
    friend bool operator==(const Quad&, const Quad&) = default;
};

Quad square(Quad x, long long ww_int, long long ww_coef) {
    // (a + b w)^2 = a^2 + b^2 w^2 + 2ab w
    return {x.a * x.a + x.b * x.b * ww_int, 2 * x.a * x.b + x.b * x.b * ww_coef};
}

using Point3 = std::array<Quad, 3>;

SmallGraph from_points(const std::vector<Point3>& pts, Quad edge_sq, long long ww_int,
                       long long ww_coef) {
    SmallGraph g(static_cast<int>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Quad d{0, 0};
            for (int k = 0; k < 3; ++k)
                d = d + square(pts[i][k] - pts[j][k], ww_int, ww_coef);
            if (d == edge_sq)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return g;
}

} // namespace

SmallGraph cuboctahedron() {
    // Permutations of (+-1, +-1, 0); edges at squared distance 2.
    std::vector<Point3> pts;
    for (int zero = 0; zero < 3; ++zero)
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1}) {
                Point3 p{};
                int k = 0;
                for (int axis = 0; axis < 3; ++axis)
                    if (axis == zero)
                        p[axis] = Quad{0, 0};
                    else
                        p[axis] = Quad{(k++ == 0 ? s1 : s2), 0};
                pts.push_back(p);
            }
    return from_points(pts, Quad{2, 0}, 0, 0);
}

SmallGraph icosahedron() {
    // Cyclic permutations of (0, +-1, +-phi), phi^2 = 1 + phi.
    // Edges at squared distance 4.
    std::vector<Point3> pts;
    for (int rot = 0; rot < 3; ++rot)
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1}) {
                Point3 base{Quad{0, 0}, Quad{s1, 0}, Quad{0, s2}};
                Point3 p{};
                for (int axis = 0; axis < 3; ++axis)
                    p[(axis + rot) % 3] = base[axis];
                pts.push_back(p);
            }
    return from_points(pts, Quad{4, 0}, 1, 1);
}

SmallGraph rhombicuboctahedron() {
    // Permutations of (+-1, +-1, +-(1 + sqrt2)); edges at squared distance 4.
    std::vector<Point3> pts;
    for (int big = 0; big < 3; ++big)
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1})
                for (int s3 : {-1, 1}) {
                    Point3 p{};
                    int k = 0;
                    std::array<int, 2> small{s1, s2};
                    for (int axis = 0; axis < 3; ++axis)
                        if (axis == big)
                            p[axis] = Quad{s3, s3};
                        else
                            p[axis] = Quad{small[k++], 0};
                    pts.push_back(p);
                }
    return from_points(pts, Quad{4, 0}, 2, 0);
}

SmallGraph snub_cube() {
    // Even permutations of (+-1, +-1/t, +-t) with an even number of minus
    // signs, odd permutations with an odd number, t the tribonacci constant.
    // The 60 shortest pairwise distances are the edges.
    const double t = 1.8392867552141612;
    std::array<double, 3> base{1.0, 1.0 / t, t};
    const int even_perms[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    const int odd_perms[3][3] = {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    std::vector<std::array<double, 3>> pts;
    for (int signs = 0; signs < 8; ++signs) {
        int minus = __builtin_popcount(signs);
        const auto& perms = (minus % 2 == 0) ? even_perms : odd_perms;
        for (int p = 0; p < 3; ++p) {
            std::array<double, 3> v{};
            for (int axis = 0; axis < 3; ++axis) {
                double coord = base[perms[p][axis]];
                if (signs & (1 << perms[p][axis]))
                    coord = -coord;
                v[axis] = coord;
            }
            pts.push_back(v);
        }
    }
    struct Cand {
        double d2;
        int i, j;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < 24; ++i)
        for (int j = i + 1; j < 24; ++j) {
            double d2 = 0;
            for (int k = 0; k < 3; ++k)
                d2 += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
            cands.push_back({d2, i, j});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.d2 < b.d2; });
    if (cands[60].d2 - cands[59].d2 < 1e-6)
        throw std::logic_error("snub cube edge lengths did not separate");
    SmallGraph g(24);
    for (int e = 0; e < 60; ++e)
        g.add_edge(cands[e].i, cands[e].j);
    return g;
}

} // namespace rcg
