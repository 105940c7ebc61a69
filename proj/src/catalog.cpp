#include "rcgraph/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <tuple>

#include <json.hpp>

#include "rcgraph/canonical.hpp"
#include "rcgraph/graph6.hpp"
#include "rcgraph/planarity.hpp"

namespace rcg {

namespace {

nlohmann::ordered_json record_to_json(const CatalogRecord& rec) {
    nlohmann::ordered_json j;
    j["id"] = rec.id;
    j["g6"] = rec.g6;
    j["n"] = rec.n;
    j["r"] = rec.r;
    j["c"] = rec.c;
    j["planar"] = rec.planar;
    j["circulant"] = rec.circulant_spec ? nlohmann::ordered_json(*rec.circulant_spec)
                                        : nlohmann::ordered_json(nullptr);
    j["constant_link"] = rec.constant_link ? nlohmann::ordered_json(*rec.constant_link)
                                           : nlohmann::ordered_json(nullptr);
    j["source"] = rec.source;
    j["certified_smallest"] = rec.certified_smallest;
    return j;
}

CatalogRecord record_from_json(const nlohmann::json& j) {
    CatalogRecord rec;
    rec.id = j.at("id").get<std::string>();
    rec.g6 = j.at("g6").get<std::string>();
    rec.n = j.at("n").get<int>();
    rec.r = j.at("r").get<int>();
    rec.c = j.at("c").get<int>();
    rec.planar = j.at("planar").get<bool>();
    if (j.contains("circulant") && !j.at("circulant").is_null())
        rec.circulant_spec = j.at("circulant").get<std::string>();
    if (j.contains("constant_link") && !j.at("constant_link").is_null())
        rec.constant_link = j.at("constant_link").get<std::string>();
    rec.source = j.value("source", std::string{});
    rec.certified_smallest = j.value("certified_smallest", false);
    return rec;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

// The common link in canonical labeling when every vertex link is
// isomorphic to it; empty otherwise.
std::optional<std::string> common_link_g6(const SmallGraph& g) {
    if (g.degree(0) == 0)
        return std::nullopt; // links of an edgeless regular graph are empty
    std::optional<CanonicalForm> common;
    SmallGraph link = g.induced(g.neighbors(0));
    common = canonical_form(link);
    for (int v = 1; v < g.order(); ++v) {
        SmallGraph other = g.induced(g.neighbors(v));
        if (canonical_form(other) != *common)
            return std::nullopt;
    }
    return g6_encode(canonical_relabel(g.induced(g.neighbors(0))));
}

} // namespace

Catalog::Catalog(std::filesystem::path file) : file_(std::move(file)) { load(); }

void Catalog::load() {
    std::ifstream in(file_);
    if (!in)
        return; // a fresh store; the file appears on first ingest
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        try {
            CatalogRecord rec = record_from_json(nlohmann::json::parse(line));
            SmallGraph g = g6_decode(rec.g6);
            auto sig = rc_signature(g);
            if (!sig || sig->r != rec.r || sig->c != rec.c)
                throw std::runtime_error("signature mismatch");
            if (g.order() != rec.n)
                throw std::runtime_error("order mismatch");
            if (is_planar(g) != rec.planar)
                throw std::runtime_error("planar flag mismatch");
            if (canonical_digest(canonical_form(g)) != rec.id)
                throw std::runtime_error("canonical digest mismatch");
            if (!index_.insert(rec.id).second)
                throw std::runtime_error("duplicate id");
            records_.push_back(std::move(rec));
        } catch (const std::exception& e) {
            quarantined_.push_back({line_no, e.what()});
        }
    }
}

std::optional<CatalogRecord> Catalog::add_locked(const SmallGraph& g, const std::string& source,
                                                 std::optional<std::string> circulant_spec,
                                                 bool certified_smallest, IngestReport* report) {
    auto sig = rc_signature(g);
    if (!sig) {
        if (report)
            ++report->rejected;
        return std::nullopt;
    }
    std::string id = canonical_digest(canonical_form(g));
    if (index_.count(id)) {
        if (report)
            ++report->duplicates;
        return std::nullopt;
    }
    CatalogRecord rec;
    rec.id = id;
    rec.g6 = g6_encode(g);
    rec.n = g.order();
    rec.r = sig->r;
    rec.c = sig->c;
    rec.planar = is_planar(g);
    rec.circulant_spec = std::move(circulant_spec);
    rec.constant_link = common_link_g6(g);
    rec.source = source;
    rec.certified_smallest = certified_smallest;

    std::ofstream out(file_, std::ios::app);
    if (!out)
        throw std::runtime_error("cannot append to catalog file " + file_.string());
    out << record_to_json(rec).dump() << '\n';

    index_.insert(rec.id);
    records_.push_back(rec);
    if (report)
        ++report->accepted;
    return rec;
}

IngestReport Catalog::ingest(std::istream& g6_lines, const std::string& source) {
    std::unique_lock lock(mutex_);
    IngestReport report;
    std::string line;
    int line_no = 0;
    while (std::getline(g6_lines, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        try {
            SmallGraph g = g6_decode(line);
            add_locked(g, source, std::nullopt, false, &report);
        } catch (const std::exception& e) {
            report.malformed.push_back({line_no, e.what()});
        }
    }
    return report;
}

std::optional<CatalogRecord> Catalog::ingest_graph(const SmallGraph& g, const std::string& source,
                                                   std::optional<std::string> circulant_spec,
                                                   bool certified_smallest) {
    std::unique_lock lock(mutex_);
    return add_locked(g, source, std::move(circulant_spec), certified_smallest, nullptr);
}

std::vector<CatalogRecord> Catalog::query(std::optional<int> r, std::optional<int> c,
                                          std::optional<int> n_max,
                                          std::optional<bool> planar) const {
    std::shared_lock lock(mutex_);
    std::vector<CatalogRecord> out;
    for (const auto& rec : records_) {
        if (r && rec.r != *r)
            continue;
        if (c && rec.c != *c)
            continue;
        if (n_max && rec.n > *n_max)
            continue;
        if (planar && rec.planar != *planar)
            continue;
        out.push_back(rec);
    }
    std::sort(out.begin(), out.end(), [](const CatalogRecord& a, const CatalogRecord& b) {
        return std::tie(a.n, a.id) < std::tie(b.n, b.id);
    });
    return out;
}

std::map<int, int> Catalog::spectrum(int r) const {
    std::shared_lock lock(mutex_);
    std::map<int, int> out;
    for (const auto& rec : records_)
        if (rec.r == r) {
            auto [it, fresh] = out.emplace(rec.c, rec.n);
            if (!fresh && rec.n < it->second)
                it->second = rec.n;
        }
    return out;
}

std::map<int, int> Catalog::co_spectrum(int c) const {
    std::shared_lock lock(mutex_);
    std::map<int, int> out;
    for (const auto& rec : records_)
        if (rec.c == c) {
            auto [it, fresh] = out.emplace(rec.r, rec.n);
            if (!fresh && rec.n < it->second)
                it->second = rec.n;
        }
    return out;
}

void Catalog::export_jsonl(std::ostream& out) const {
    std::shared_lock lock(mutex_);
    for (const auto& rec : records_)
        out << record_to_json(rec).dump() << '\n';
}

void Catalog::export_csv(std::ostream& out) const {
    std::shared_lock lock(mutex_);
    out << "id,g6,n,r,c,planar,circulant,constant_link,source,certified_smallest\n";
    for (const auto& rec : records_) {
        out << rec.id << ',' << csv_escape(rec.g6) << ',' << rec.n << ',' << rec.r << ','
            << rec.c << ',' << (rec.planar ? "true" : "false") << ','
            << csv_escape(rec.circulant_spec.value_or("")) << ','
            << csv_escape(rec.constant_link.value_or("")) << ',' << csv_escape(rec.source) << ','
            << (rec.certified_smallest ? "true" : "false") << '\n';
    }
}

std::size_t Catalog::size() const {
    std::shared_lock lock(mutex_);
    return records_.size();
}

} // namespace rcg
