#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "rcgraph/small_graph.hpp"

namespace rcg {

struct CatalogRecord {
    std::string id; // canonical-form digest, unique across the store
    std::string g6;
    int n = 0;
    int r = 0;
    int c = 0;
    bool planar = false;
    std::optional<std::string> circulant_spec; // "n:s1,s2,..." when known
    std::optional<std::string> constant_link;  // graph6 of the common link, when constant
    std::string source;
    bool certified_smallest = false;
};

struct IngestReport {
    int accepted = 0;
    int rejected = 0;   // decodes but is not an (r,c)-graph
    int duplicates = 0; // isomorphic to a stored record
    std::vector<std::pair<int, std::string>> malformed; // (line number, error)
};

/// Append-only store of (r,c)-graphs, one JSON record per line, with an
/// in-memory canonical index rebuilt on open. Records failing
/// re-verification on load are quarantined, never served.
class Catalog {
  public:
    /// Opens (or prepares to create) the store at the given path.
    explicit Catalog(std::filesystem::path file);

    /// One graph6 line per graph. Graphs without an (r,c) signature are
    /// rejected; isomorphs of stored graphs are duplicates. The ingest
    /// continues past malformed lines and reports them.
    IngestReport ingest(std::istream& g6_lines, const std::string& source);

    /// Ingest a single graph with optional metadata.
    /// Returns the stored record, or nullopt on reject/duplicate.
    std::optional<CatalogRecord> ingest_graph(const SmallGraph& g, const std::string& source,
                                              std::optional<std::string> circulant_spec = {},
                                              bool certified_smallest = false);

    std::vector<CatalogRecord> query(std::optional<int> r = {}, std::optional<int> c = {},
                                     std::optional<int> n_max = {},
                                     std::optional<bool> planar = {}) const;

    /// c values realized by stored records, with the smallest stored order.
    std::map<int, int> spectrum(int r) const;
    /// r values realized by stored records with link count c.
    std::map<int, int> co_spectrum(int c) const;

    void export_jsonl(std::ostream& out) const;
    void export_csv(std::ostream& out) const;

    std::size_t size() const;
    const std::vector<std::pair<int, std::string>>& quarantined() const { return quarantined_; }

  private:
    std::filesystem::path file_;
    std::vector<CatalogRecord> records_;
    std::set<std::string> index_; // canonical digests
    std::vector<std::pair<int, std::string>> quarantined_; // (line number, reason)
    mutable std::shared_mutex mutex_;

    void load();
    std::optional<CatalogRecord> add_locked(const SmallGraph& g, const std::string& source,
                                            std::optional<std::string> circulant_spec,
                                            bool certified_smallest, IngestReport* report);
};

} // namespace rcg
