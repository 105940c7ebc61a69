#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rcgraph/small_graph.hpp"

namespace rcg {

struct Mod3Impossible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BelowBound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Circ(n, S): vertex i adjacent to i +- s (mod n) for every jump s in S.
struct CirculantSpec {
    int n = 0;
    std::vector<int> jumps; // distinct, each in [1, n/2]

    /// Throws std::invalid_argument on out-of-range or duplicate jumps.
    void validate() const;
    /// 2|S|, minus one when n/2 is a jump.
    int degree() const;
    /// "n:s1,s2,..." text form.
    std::string to_string() const;
    static CirculantSpec parse(const std::string& text);
};

SmallGraph make_circulant(const CirculantSpec& spec);

/// Unique writing of a neighbourhood edge as {x, x+y} with x in S u -S,
/// y in S, and x in S whenever y is an involution. Residues are kept
/// normalized to {0..n-1}.
struct CanonicalEdge {
    int x = 0; // residue in S u -S
    int y = 0; // jump value in S
};

/// Unordered vertex pair inside the subgraph induced by N(0).
struct NeighborhoodEdge {
    int a = 0, b = 0;
    friend bool operator==(const NeighborhoodEdge&, const NeighborhoodEdge&) = default;
    friend auto operator<=>(const NeighborhoodEdge&, const NeighborhoodEdge&) = default;
};

/// Canonical representation of an edge of the subgraph induced by N(0).
/// Throws std::invalid_argument when {a,b} is not such an edge.
CanonicalEdge canonical_edge(const CirculantSpec& spec, NeighborhoodEdge e);

/// Orbit of a canonically represented edge {x, x+y}: its six
/// sign/translation images {x,x+y}, {y,x+y}, {x,-y}, {y,-x}, {-x,-x-y},
/// {-y,-x-y}, coincident images merged. Size is 1, 3 or 6.
struct EdgeOrbit {
    std::vector<NeighborhoodEdge> edges; // sorted
};

EdgeOrbit edge_orbit(const CirculantSpec& spec, const CanonicalEdge& e);

/// Disjoint orbits covering every edge of the subgraph induced by N(0),
/// sorted by their smallest edge. At most one orbit has size 1, present
/// exactly when 3 | n and n/3 is a jump.
std::vector<EdgeOrbit> orbit_partition(const CirculantSpec& spec);

/// e(0) mod 3. Equals 1 exactly when 3 | n and n/3 is a jump, else 0.
int mod3_class(const CirculantSpec& spec);

/// Jump-set family S_{k,j,l}: {1..k-1, k+j} plus the first l terms of the
/// arithmetic progression starting at 2(k+j)+1 with difference k+j+1.
struct JumpSetFamily {
    int k = 0, j = 0, l = 0;
};

std::vector<int> build_jump_set(const JumpSetFamily& f);

/// Link edge count of the family: 3*C(k-1,2) + 3(k-1-j), plus one for the
/// unit orbit when requested.
int link_edge_formula(int k, int j, bool with_unit_orbit);

/// A verified (r,c)-circulant. Scans the order upward within the recipe's
/// congruence constraints and returns the first spec whose built graph has
/// signature exactly (r,c). Throws Mod3Impossible when c = 2 (mod 3) and
/// BelowBound when r is under the recipes' feasibility threshold.
CirculantSpec construct_rc_circulant(int r, int c);

} // namespace rcg
