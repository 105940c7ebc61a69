#include "rcgraph/nonexistence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "rcgraph/canonical.hpp"
#include "rcgraph/graph6.hpp"
#include "rcgraph/planarity.hpp"

namespace rcg {

namespace {

long long choose2(long long x) { return x * (x - 1) / 2; }

// All graphs on n vertices with exactly e edges, up to isomorphism.
std::vector<SmallGraph> graphs_with_edges(int n, long long e) {
    if (n > 8)
        throw std::invalid_argument("edge-count enumeration is limited to 8 vertices");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            slots.push_back({i, j});
    int total = static_cast<int>(slots.size());
    std::map<CanonicalForm, SmallGraph> seen;

    // Fixed-popcount masks in increasing order.
    if (e > total)
        return {};
    std::uint32_t mask = e == 0 ? 0 : (1u << e) - 1;
    for (;;) {
        SmallGraph g(n);
        for (int b = 0; b < total; ++b)
            if (mask & (1u << b))
                g.add_edge(slots[b].first, slots[b].second);
        seen.emplace(canonical_form(g), std::move(g));
        if (e == 0 || e == total)
            break;
        // next mask with the same popcount (Gosper's hack)
        std::uint32_t c = mask & -mask;
        std::uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        if (mask >= (1u << total))
            break;
    }
    std::vector<SmallGraph> out;
    out.reserve(seen.size());
    for (auto& [cf, g] : seen)
        out.push_back(std::move(g));
    return out;
}

} // namespace

std::optional<NonexistenceCertificate> fact3_check(int r, int c) {
    if (r < 0 || c < 0)
        return std::nullopt;
    long long k = choose2(r) - c;
    if (k >= 1 && r >= 3 * k) {
        NonexistenceCertificate cert;
        cert.kind = NonexistenceCertificate::Kind::Fact3;
        cert.k = static_cast<int>(k);
        return cert;
    }
    return std::nullopt;
}

std::vector<LinkCandidate> enumerate_links(int r, int c) {
    if (r < 1 || r > 8)
        throw std::invalid_argument("link enumeration needs 1 <= r <= 8");
    if (c < 0 || c > choose2(r))
        throw std::invalid_argument("link enumeration needs 0 <= c <= C(r,2)");
    std::vector<LinkCandidate> out;
    for (auto& g : graphs_with_edges(r, c))
        out.push_back(LinkCandidate{std::move(g)});
    return out;
}

int bad_vertex_bound(const LinkCandidate& h, int a, int r) {
    const SmallGraph& g = h.graph;
    if (a < 0 || a >= g.order())
        throw std::out_of_range("bad_vertex_bound: vertex out of range");
    int deg_a = g.degree(a);
    int z = r - 1 - deg_a; // neighbours of a outside the closed neighbourhood
    if (z < 0)
        z = 0;
    std::vector<int> nbrs = g.neighbors(a);

    int inside = 0; // edges among N_H(a), fixed by H
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (g.has_edge(nbrs[i], nbrs[j]))
                ++inside;

    int cross = 0; // edges between N_H(a) and the outside vertices
    for (int b : nbrs) {
        int capacity = r - 1 - g.degree(b); // b already sees the host vertex
        cross += std::min(z, std::max(0, capacity));
    }

    return deg_a + inside + cross + static_cast<int>(choose2(z));
}

std::optional<NonexistenceCertificate> bad_link_certificate(int r, int c) {
    if (r < 1 || r > 8 || c < 0 || c > choose2(r))
        return std::nullopt;
    std::vector<LinkCandidate> candidates = enumerate_links(r, c);
    if (candidates.empty())
        return std::nullopt; // no candidate links means c out of reach, not a BadLinks case
    NonexistenceCertificate cert;
    cert.kind = NonexistenceCertificate::Kind::BadLinks;
    for (const auto& h : candidates) {
        int best_vertex = -1, best_bound = 0;
        for (int a = 0; a < h.graph.order(); ++a) {
            int bound = bad_vertex_bound(h, a, r);
            if (bound < c && (best_vertex == -1 || bound < best_bound)) {
                best_vertex = a;
                best_bound = bound;
            }
        }
        if (best_vertex == -1)
            return std::nullopt; // this link cannot be excluded
        cert.links.push_back({g6_encode(h.graph), best_vertex, best_bound});
    }
    return cert;
}

namespace {

// Graphs on r+1 vertices with c+r edges and a dominating vertex: candidate
// closed neighbourhoods of an (r,c)-planar graph. Vertex 0 dominates.
std::vector<SmallGraph> closed_nbhd_candidates(int r, int c) {
    std::vector<SmallGraph> out;
    std::map<CanonicalForm, bool> seen;
    for (auto& link : graphs_with_edges(r, c)) {
        SmallGraph g(r + 1);
        for (int v = 1; v <= r; ++v)
            g.add_edge(0, v);
        for (int u = 0; u < r; ++u)
            for (int v : link.neighbors(u))
                if (u < v)
                    g.add_edge(u + 1, v + 1);
        if (seen.emplace(canonical_form(g), true).second)
            out.push_back(std::move(g));
    }
    return out;
}

} // namespace

std::optional<NonexistenceCertificate> planar_arithmetic(int r, int c) {
    if (r < 1 || c < 0 || c > choose2(r))
        return std::nullopt;

    NonexistenceCertificate cert;
    if (r >= 6) {
        // Planar graphs have a vertex of degree at most 5.
        cert.kind = NonexistenceCertificate::Kind::PlanarArithmetic;
        cert.planar_case = "min_degree";
        return cert;
    }
    if (auto f3 = fact3_check(r, c))
        return f3;
    if (r >= 4 && c == 0) {
        // Triangle-free forces girth >= 4, e <= 2n-4, average degree < 4.
        cert.kind = NonexistenceCertificate::Kind::PlanarArithmetic;
        cert.planar_case = "i";
        return cert;
    }
    if (r == 5 && c >= 1 && c <= 3) {
        // Face counting: d <= 4 + c/3 - 8/n < 5.
        cert.kind = NonexistenceCertificate::Kind::PlanarArithmetic;
        cert.planar_case = "ii";
        return cert;
    }
    if (c == 6 && r <= 5) {
        // Face counting: d >= 6 - 4/n > 5.
        cert.kind = NonexistenceCertificate::Kind::PlanarArithmetic;
        cert.planar_case = "iii";
        return cert;
    }
    // Closed neighbourhood needs r+1 vertices and c+r edges.
    if (c + r > 3 * (r + 1) - 6 && r + 1 >= 3) {
        cert.kind = NonexistenceCertificate::Kind::PlanarClosedNbhd;
        cert.closed_variant = "edge_excess";
        cert.required_edges = c + r;
        cert.max_edges = 3 * (r + 1) - 6;
        return cert;
    }
    // Enumerate dominating-vertex candidates; all nonplanar rules (r,c) out.
    std::vector<SmallGraph> candidates = closed_nbhd_candidates(r, c);
    bool any_planar = false;
    for (const auto& g : candidates)
        if (is_planar(g)) {
            any_planar = true;
            break;
        }
    if (!any_planar && !candidates.empty()) {
        cert.kind = NonexistenceCertificate::Kind::PlanarClosedNbhd;
        cert.closed_variant = "candidate_list";
        for (const auto& g : candidates)
            cert.candidates.push_back(g6_encode(g));
        return cert;
    }
    // Last resort: the bad-vertex link argument rules the pair out globally.
    // (5,7) needs this: among its closed-neighbourhood candidates, K2 + P4
    // is a planar triangulation, so the enumeration above declines.
    if (auto bad = bad_link_certificate(r, c))
        return bad;
    return std::nullopt;
}

std::optional<NonexistenceCertificate> handshake_check(int r, int n) {
    if (r % 2 != 0 && n % 2 != 0) {
        NonexistenceCertificate cert;
        cert.kind = NonexistenceCertificate::Kind::Handshake;
        cert.n = n;
        return cert;
    }
    return std::nullopt;
}

std::optional<NonexistenceCertificate> mod3_circulant_check(int c) {
    if (c >= 0 && c % 3 == 2) {
        NonexistenceCertificate cert;
        cert.kind = NonexistenceCertificate::Kind::Mod3Circulant;
        return cert;
    }
    return std::nullopt;
}

bool verify_certificate(const NonexistenceCertificate& cert, int r, int c) {
    using Kind = NonexistenceCertificate::Kind;
    try {
        switch (cert.kind) {
        case Kind::Fact3:
            return cert.k >= 1 && choose2(r) - c == cert.k && r >= 3 * cert.k;

        case Kind::BadLinks: {
            if (r < 1 || r > 8 || c < 0 || c > choose2(r))
                return false;
            std::vector<LinkCandidate> expected = enumerate_links(r, c);
            if (expected.empty() || expected.size() != cert.links.size())
                return false;
            std::vector<CanonicalForm> want;
            for (const auto& h : expected)
                want.push_back(canonical_form(h.graph));
            std::vector<CanonicalForm> have;
            for (const auto& entry : cert.links) {
                SmallGraph g = g6_decode(entry.g6);
                if (g.order() != r || g.edge_count() != c)
                    return false;
                if (bad_vertex_bound(LinkCandidate{g}, entry.bad_vertex, r) != entry.bound)
                    return false;
                if (entry.bound >= c)
                    return false;
                have.push_back(canonical_form(g));
            }
            std::sort(want.begin(), want.end());
            std::sort(have.begin(), have.end());
            return want == have;
        }

        case Kind::PlanarArithmetic:
            if (cert.planar_case == "min_degree")
                return r >= 6;
            if (cert.planar_case == "i")
                return r >= 4 && c == 0;
            if (cert.planar_case == "ii")
                return r == 5 && c >= 1 && c <= 3;
            if (cert.planar_case == "iii")
                return c == 6 && r <= 5;
            return false;

        case Kind::PlanarClosedNbhd:
            if (cert.closed_variant == "edge_excess")
                return cert.required_edges == c + r && cert.max_edges == 3 * (r + 1) - 6 &&
                       cert.required_edges > cert.max_edges;
            if (cert.closed_variant == "candidate_list") {
                std::vector<SmallGraph> expected = closed_nbhd_candidates(r, c);
                if (expected.empty() || expected.size() != cert.candidates.size())
                    return false;
                std::vector<CanonicalForm> want, have;
                for (const auto& g : expected)
                    want.push_back(canonical_form(g));
                for (const auto& text : cert.candidates) {
                    SmallGraph g = g6_decode(text);
                    if (g.order() != r + 1 || g.edge_count() != c + r || is_planar(g))
                        return false;
                    have.push_back(canonical_form(g));
                }
                std::sort(want.begin(), want.end());
                std::sort(have.begin(), have.end());
                return want == have;
            }
            return false;

        case Kind::Handshake:
            return cert.n >= 1 && r % 2 != 0 && cert.n % 2 != 0;

        case Kind::Mod3Circulant:
            return c % 3 == 2;
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

namespace {

std::string kind_name(NonexistenceCertificate::Kind kind) {
    using Kind = NonexistenceCertificate::Kind;
    switch (kind) {
    case Kind::Fact3: return "fact3";
    case Kind::BadLinks: return "bad_links";
    case Kind::PlanarArithmetic: return "planar_arithmetic";
    case Kind::PlanarClosedNbhd: return "planar_closed_nbhd";
    case Kind::Handshake: return "handshake";
    case Kind::Mod3Circulant: return "mod3_circulant";
    }
    return "?";
}

NonexistenceCertificate::Kind kind_from_name(const std::string& name) {
    using Kind = NonexistenceCertificate::Kind;
    if (name == "fact3") return Kind::Fact3;
    if (name == "bad_links") return Kind::BadLinks;
    if (name == "planar_arithmetic") return Kind::PlanarArithmetic;
    if (name == "planar_closed_nbhd") return Kind::PlanarClosedNbhd;
    if (name == "handshake") return Kind::Handshake;
    if (name == "mod3_circulant") return Kind::Mod3Circulant;
    throw std::invalid_argument("unknown certificate kind: " + name);
}

} // namespace

std::string certificate_to_json(const NonexistenceCertificate& cert) {
    using Kind = NonexistenceCertificate::Kind;
    nlohmann::ordered_json j;
    j["kind"] = kind_name(cert.kind);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    switch (cert.kind) {
    case Kind::Fact3: params["k"] = cert.k; break;
    case Kind::PlanarArithmetic: params["case"] = cert.planar_case; break;
    case Kind::PlanarClosedNbhd:
        params["variant"] = cert.closed_variant;
        if (cert.closed_variant == "edge_excess") {
            params["required_edges"] = cert.required_edges;
            params["max_edges"] = cert.max_edges;
        } else {
            params["candidates"] = cert.candidates;
        }
        break;
    case Kind::Handshake: params["n"] = cert.n; break;
    default: break;
    }
    j["params"] = params;
    nlohmann::ordered_json links = nlohmann::ordered_json::array();
    for (const auto& entry : cert.links) {
        links.push_back({{"graph6", entry.g6},
                         {"bad_vertex", entry.bad_vertex},
                         {"bound", entry.bound}});
    }
    j["links"] = links;
    return j.dump();
}

NonexistenceCertificate certificate_from_json(const std::string& text) {
    using Kind = NonexistenceCertificate::Kind;
    nlohmann::json j = nlohmann::json::parse(text);
    NonexistenceCertificate cert;
    cert.kind = kind_from_name(j.at("kind").get<std::string>());
    const auto& params = j.at("params");
    switch (cert.kind) {
    case Kind::Fact3: cert.k = params.at("k").get<int>(); break;
    case Kind::PlanarArithmetic: cert.planar_case = params.at("case").get<std::string>(); break;
    case Kind::PlanarClosedNbhd:
        cert.closed_variant = params.at("variant").get<std::string>();
        if (cert.closed_variant == "edge_excess") {
            cert.required_edges = params.at("required_edges").get<int>();
            cert.max_edges = params.at("max_edges").get<int>();
        } else {
            cert.candidates = params.at("candidates").get<std::vector<std::string>>();
        }
        break;
    case Kind::Handshake: cert.n = params.at("n").get<int>(); break;
    default: break;
    }
    for (const auto& entry : j.at("links")) {
        cert.links.push_back({entry.at("graph6").get<std::string>(),
                              entry.at("bad_vertex").get<int>(),
                              entry.at("bound").get<int>()});
    }
    return cert;
}

} // namespace rcg
