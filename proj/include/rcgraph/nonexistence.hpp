#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcgraph/small_graph.hpp"

namespace rcg {

/// An open-neighbourhood candidate: a graph on r vertices with c edges.
struct LinkCandidate {
    SmallGraph graph;
};

/// Machine-checkable witness that no (r,c)-graph (or no planar one) exists.
/// Every certificate can be re-derived from scratch by verify_certificate.
struct NonexistenceCertificate {
    enum class Kind {
        Fact3,            // c = C(r,2) - k with k >= 1 and r >= 3k
        BadLinks,         // every candidate link has a vertex whose link bound misses c
        PlanarArithmetic, // face/degree counting: cases i, ii, iii, min_degree
        PlanarClosedNbhd, // closed neighbourhood: edge excess or candidate list
        Handshake,        // r and n both odd
        Mod3Circulant     // c = 2 (mod 3) rules out circulants
    };
    struct BadLinkEntry {
        std::string g6;
        int bad_vertex = 0;
        int bound = 0;
    };

    Kind kind{};
    int k = 0;                            // Fact3
    std::string planar_case;              // "i" | "ii" | "iii" | "min_degree"
    std::string closed_variant;           // "edge_excess" | "candidate_list"
    int required_edges = 0;               // edge_excess
    int max_edges = 0;                    // edge_excess
    std::vector<std::string> candidates;  // candidate_list, graph6
    int n = 0;                            // Handshake
    std::vector<BadLinkEntry> links;      // BadLinks
};

/// Top-band arithmetic: k = C(r,2) - c with k >= 1 and r >= 3k rules (r,c) out.
std::optional<NonexistenceCertificate> fact3_check(int r, int c);

/// All graphs on r vertices with c edges, up to isomorphism, sorted by
/// canonical form. Desk scale: r <= 8.
std::vector<LinkCandidate> enumerate_links(int r, int c);

/// Upper bound on e(a) in any r-regular host whose link at some vertex is H.
int bad_vertex_bound(const LinkCandidate& h, int a, int r);

/// BadLinks certificate: every candidate link contains a vertex whose bound
/// falls below c. Empty when some candidate survives.
std::optional<NonexistenceCertificate> bad_link_certificate(int r, int c);

/// Planar feasibility: min-degree cutoff, face-counting arithmetic,
/// closed-neighbourhood edge excess, dominating-vertex candidate
/// enumeration, with fact3_check delegation. Empty when (r,c)-planar graphs may
/// exist.
std::optional<NonexistenceCertificate> planar_arithmetic(int r, int c);

/// Handshake certificate for a specific order: r*n odd.
std::optional<NonexistenceCertificate> handshake_check(int r, int n);

/// Circulant-only certificate: c = 2 (mod 3).
std::optional<NonexistenceCertificate> mod3_circulant_check(int c);

/// Re-derives the certificate's arithmetic or enumeration from scratch and
/// confirms it rules out (r,c). False means the certificate is invalid.
bool verify_certificate(const NonexistenceCertificate& cert, int r, int c);

std::string certificate_to_json(const NonexistenceCertificate& cert);
NonexistenceCertificate certificate_from_json(const std::string& text);

} // namespace rcg
