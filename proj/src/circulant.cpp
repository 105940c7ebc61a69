#include "rcgraph/circulant.hpp"

#include <algorithm>
#include <set>

namespace rcg {

void CirculantSpec::validate() const {
    if (n < 2)
        throw std::invalid_argument("circulant order must be at least 2");
    std::set<int> seen;
    for (int s : jumps) {
        if (s < 1 || 2 * s > n)
            throw std::invalid_argument("jump " + std::to_string(s) + " out of range [1," +
                                        std::to_string(n / 2) + "]");
        if (!seen.insert(s).second)
            throw std::invalid_argument("duplicate jump " + std::to_string(s));
    }
}

int CirculantSpec::degree() const {
    int d = 2 * static_cast<int>(jumps.size());
    for (int s : jumps)
        if (2 * s == n)
            --d;
    return d;
}

std::string CirculantSpec::to_string() const {
    std::string out = std::to_string(n) + ":";
    std::vector<int> sorted = jumps;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(sorted[i]);
    }
    return out;
}

CirculantSpec CirculantSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("circulant spec must look like \"n:s1,s2,...\"");
    CirculantSpec spec;
    spec.n = std::stoi(text.substr(0, colon));
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        if (comma == std::string::npos)
            comma = rest.size();
        spec.jumps.push_back(std::stoi(rest.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    spec.validate();
    return spec;
}

SmallGraph make_circulant(const CirculantSpec& spec) {
    spec.validate();
    SmallGraph g(spec.n);
    for (int i = 0; i < spec.n; ++i)
        for (int s : spec.jumps)
            g.add_edge(i, (i + s) % spec.n);
    return g;
}

namespace {

// Residues of N(0), normalized to {0..n-1}, ascending.
std::vector<int> neighborhood_residues(const CirculantSpec& spec) {
    std::set<int> out;
    for (int s : spec.jumps) {
        out.insert(s);
        out.insert(spec.n - s);
    }
    return {out.begin(), out.end()};
}

bool is_jump(const CirculantSpec& spec, int residue) {
    return std::find(spec.jumps.begin(), spec.jumps.end(), residue) != spec.jumps.end();
}

// Whether the residue pair is an edge of Circ(n, S).
bool residues_adjacent(const CirculantSpec& spec, int a, int b) {
    int d = (b - a) % spec.n;
    if (d < 0)
        d += spec.n;
    return is_jump(spec, std::min(d, spec.n - d));
}

} // namespace

CanonicalEdge canonical_edge(const CirculantSpec& spec, NeighborhoodEdge e) {
    spec.validate();
    int n = spec.n;
    int a = ((e.a % n) + n) % n;
    int b = ((e.b % n) + n) % n;
    auto in_n0 = [&](int v) { return v != 0 && is_jump(spec, std::min(v, n - v)); };
    if (a == b || !in_n0(a) || !in_n0(b) || !residues_adjacent(spec, a, b))
        throw std::invalid_argument("not an edge of the subgraph induced by N(0)");

    std::vector<CanonicalEdge> found;
    auto consider = [&](int x, int y) {
        if (!is_jump(spec, y))
            return; // y must be a jump value
        if (2 * y == n && !is_jump(spec, x))
            return; // involution rule: x must lie in S itself
        for (const auto& f : found)
            if (f.x == x && f.y == y)
                return;
        found.push_back(CanonicalEdge{x, y});
    };
    consider(a, (b - a + n) % n);
    consider(b, (a - b + n) % n);
    if (found.size() != 1)
        throw std::logic_error("canonical representation not unique for edge {" +
                               std::to_string(a) + "," + std::to_string(b) + "}");
    return found[0];
}

EdgeOrbit edge_orbit(const CirculantSpec& spec, const CanonicalEdge& e) {
    spec.validate();
    int n = spec.n;
    auto norm = [&](int v) { return ((v % n) + n) % n; };
    int x = norm(e.x), y = norm(e.y), s = norm(e.x + e.y);
    // The six sign/translation images of {x, x+y}; coincidences merge.
    std::set<NeighborhoodEdge> members;
    auto put = [&](int a, int b) {
        a = norm(a);
        b = norm(b);
        members.insert(a < b ? NeighborhoodEdge{a, b} : NeighborhoodEdge{b, a});
    };
    put(x, s);
    put(y, s);
    put(x, -y);
    put(y, -x);
    put(-x, -s);
    put(-y, -s);
    EdgeOrbit orbit;
    orbit.edges.assign(members.begin(), members.end());
    return orbit;
}

std::vector<EdgeOrbit> orbit_partition(const CirculantSpec& spec) {
    spec.validate();
    std::vector<int> nbhd = neighborhood_residues(spec);
    std::set<NeighborhoodEdge> covered;
    std::vector<EdgeOrbit> orbits;
    for (std::size_t i = 0; i < nbhd.size(); ++i)
        for (std::size_t j = i + 1; j < nbhd.size(); ++j) {
            NeighborhoodEdge e{nbhd[i], nbhd[j]};
            if (!residues_adjacent(spec, e.a, e.b) || covered.count(e))
                continue;
            EdgeOrbit orbit = edge_orbit(spec, canonical_edge(spec, e));
            for (const auto& oe : orbit.edges)
                if (!covered.insert(oe).second)
                    throw std::logic_error("orbits are not disjoint");
            orbits.push_back(std::move(orbit));
        }
    std::sort(orbits.begin(), orbits.end(), [](const EdgeOrbit& a, const EdgeOrbit& b) {
        return a.edges.front() < b.edges.front();
    });
    return orbits;
}

int mod3_class(const CirculantSpec& spec) {
    spec.validate();
    std::vector<int> nbhd = neighborhood_residues(spec);
    int count = 0;
    for (std::size_t i = 0; i < nbhd.size(); ++i)
        for (std::size_t j = i + 1; j < nbhd.size(); ++j)
            if (residues_adjacent(spec, nbhd[i], nbhd[j]))
                ++count;
    return count % 3;
}

std::vector<int> build_jump_set(const JumpSetFamily& f) {
    if (f.k < 1 || f.j < 0 || f.j >= f.k || f.l < 0)
        throw std::invalid_argument("jump set family needs k > j >= 0 and l >= 0");
    std::vector<int> jumps;
    for (int i = 1; i < f.k; ++i)
        jumps.push_back(i);
    jumps.push_back(f.k + f.j);
    int start = 2 * (f.k + f.j) + 1;
    int diff = f.k + f.j + 1;
    for (int i = 0; i < f.l; ++i)
        jumps.push_back(start + i * diff);
    return jumps;
}

int link_edge_formula(int k, int j, bool with_unit_orbit) {
    if (k < 1 || j < 0 || j >= k)
        throw std::invalid_argument("link edge formula needs k > j >= 0");
    int base = 3 * (k - 1) * (k - 2) / 2 + 3 * (k - 1 - j);
    return base + (with_unit_orbit ? 1 : 0);
}

namespace {

bool verify_spec(const CirculantSpec& spec, int r, int c) {
    for (std::size_t i = 0; i < spec.jumps.size(); ++i) {
        if (spec.jumps[i] < 1 || 2 * spec.jumps[i] > spec.n)
            return false;
        for (std::size_t j = i + 1; j < spec.jumps.size(); ++j)
            if (spec.jumps[i] == spec.jumps[j])
                return false;
    }
    auto sig = rc_signature(make_circulant(spec));
    return sig && *sig == RcSignature{r, c};
}

// Recover (k,j) with c0 = 3*C(k-1,2) + 3(k-1-j), k minimal. c0 = 0 (mod 3).
std::pair<int, int> recover_family(int c0) {
    int k = 1;
    while (3 * k * (k - 1) / 2 < c0)
        ++k;
    int j = (k - 1) - (c0 - 3 * (k - 1) * (k - 2) / 2) / 3;
    return {k, j};
}

constexpr int kScanLimit = 4000;

// First n in [start, kScanLimit] stepping by `step` whose augmented jump set
// verifies as an (r,c)-circulant. `make_jumps` may return an empty list to
// skip a candidate order.
template <typename F>
CirculantSpec scan_orders(int start, int step, int r, int c, F&& make_jumps) {
    for (int n = start; n <= kScanLimit; n += step) {
        std::vector<int> jumps = make_jumps(n);
        if (jumps.empty())
            continue;
        CirculantSpec spec{n, std::move(jumps)};
        if (verify_spec(spec, r, c))
            return spec;
    }
    throw BelowBound("no verifying circulant order found for r=" + std::to_string(r) +
                     ", c=" + std::to_string(c));
}

bool jumps_fit(const std::vector<int>& jumps, int n) {
    for (int s : jumps)
        if (2 * s > n)
            return false;
    return true;
}

} // namespace

CirculantSpec construct_rc_circulant(int r, int c) {
    if (r < 0 || c < 0)
        throw std::invalid_argument("r and c must be nonnegative");
    if (c % 3 == 2)
        throw Mod3Impossible("no (r,c)-circulant exists when c = 2 (mod 3)");
    if (static_cast<long long>(c) > static_cast<long long>(r) * (r - 1) / 2)
        throw std::invalid_argument("need 0 <= c <= C(r,2)");
    if (r < 1)
        throw BelowBound("degree must be at least 1");

    if (c == 0) {
        if (r == 1)
            return scan_orders(2, 2, r, c, [](int n) { return std::vector<int>{n / 2}; });
        if (r % 2 == 0) {
            std::vector<int> jumps = build_jump_set({1, 0, r / 2 - 1});
            return scan_orders(2 * jumps.back() + 1, 1, r, c, [&](int) { return jumps; });
        }
        std::vector<int> base = build_jump_set({1, 0, (r - 3) / 2});
        int start = 2 * base.back() + 2;
        start += start % 2;
        return scan_orders(start, 2, r, c, [&](int n) {
            std::vector<int> jumps = base;
            jumps.push_back(n / 2);
            return jumps;
        });
    }

    if (c % 3 == 0) {
        auto [k, j] = recover_family(c);
        if (r < 2 * k)
            throw BelowBound("degree too small for the clique family of c=" + std::to_string(c));
        if (r % 2 == 0) {
            std::vector<int> jumps = build_jump_set({k, j, r / 2 - k});
            return scan_orders(2 * jumps.back() + 1, 1, r, c, [&](int) { return jumps; });
        }
        std::vector<int> base = build_jump_set({k, j, (r - 1) / 2 - k});
        int start = 2 * base.back() + 2;
        start += start % 2;
        return scan_orders(start, 2, r, c, [&](int n) {
            std::vector<int> jumps = base;
            if (n / 2 == jumps.back())
                return std::vector<int>{};
            jumps.push_back(n / 2);
            return jumps;
        });
    }

    // c = 1 (mod 3): a unit orbit is needed, so 3 | n with n/3 a jump.
    auto [k, j] = recover_family(c - 1);
    int l = (r - (r % 2)) / 2 - k; // l with r = 2(k+l) or 2(k+l)+1
    if (l < 0)
        throw BelowBound("degree too small for the clique family of c=" + std::to_string(c));

    if (l == 0) {
        // Use the base family itself and pick n = 3s for a jump s, so that
        // the unit orbit comes from an existing jump.
        std::vector<int> base = build_jump_set({k, j, 0});
        std::vector<int> candidates;
        for (int s : base)
            if (r % 2 == 0 || (3 * s) % 2 == 0)
                candidates.push_back(3 * s);
        std::sort(candidates.begin(), candidates.end());
        for (int n : candidates) {
            std::vector<int> jumps = base;
            if (r % 2 == 1) {
                if (n / 2 == 0 || std::find(jumps.begin(), jumps.end(), n / 2) != jumps.end())
                    continue;
                jumps.push_back(n / 2);
            }
            if (!jumps_fit(jumps, n))
                continue;
            CirculantSpec spec{n, jumps};
            if (verify_spec(spec, r, c))
                return spec;
        }
        throw BelowBound("no verifying order for the l=0 unit-orbit recipe at r=" +
                         std::to_string(r) + ", c=" + std::to_string(c));
    }

    std::vector<int> base = build_jump_set({k, j, l - 1});
    if (r % 2 == 0) {
        // n = 0 (mod 3), n/3 beyond every base jump; append n/3.
        int start = 3 * (base.back() + 1);
        return scan_orders(start, 3, r, c, [&](int n) {
            std::vector<int> jumps = base;
            jumps.push_back(n / 3);
            return jumps;
        });
    }
    // Odd degree: n = 0 (mod 6), n/6 beyond every base jump; append n/3 and n/2.
    int start = 6 * (base.back() + 1);
    return scan_orders(start, 6, r, c, [&](int n) {
        std::vector<int> jumps = base;
        jumps.push_back(n / 3);
        jumps.push_back(n / 2);
        return jumps;
    });
}

} // namespace rcg
