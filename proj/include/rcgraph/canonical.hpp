#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "rcgraph/small_graph.hpp"

namespace rcg {

/// Canonical adjacency encoding: two graphs are isomorphic iff their
/// canonical forms compare equal. Bytes are the order (2 bytes, little
/// endian) followed by the packed upper triangle under a canonical labeling.
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& c) const {
        return std::hash<std::string>{}(c.bytes);
    }
};

CanonicalForm canonical_form(const SmallGraph& g);

/// The graph relabeled into its canonical labeling. Isomorphic inputs
/// produce identical (not merely isomorphic) outputs.
SmallGraph canonical_relabel(const SmallGraph& g);

/// 128-bit FNV-1a digest of a canonical form, as 32 hex characters.
/// Used as a stable cross-run key for catalog records.
std::string canonical_digest(const CanonicalForm& c);

} // namespace rcg
