// rcgraph: construct, verify, search and certify (r,c)-constant graphs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcgraph/catalog.hpp"
#include "rcgraph/circulant.hpp"
#include "rcgraph/constructions.hpp"
#include "rcgraph/graph6.hpp"
#include "rcgraph/nonexistence.hpp"
#include "rcgraph/search.hpp"
#include "rcgraph/small_graph.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

double budget_seconds() {
    if (const char* env = std::getenv("RC_BUDGET_SECONDS")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed RC_BUDGET_SECONDS\n";
        }
    }
    return 600.0;
}

rcg::SmallGraph first_graph_of(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            return rcg::g6_decode(line);
    }
    throw std::runtime_error("no graph6 line in " + path);
}

ordered_json stats_json(const rcg::SearchStats& s) {
    return ordered_json{{"nodes_expanded", s.nodes_expanded},
                        {"pruned_degree", s.pruned_degree},
                        {"pruned_link", s.pruned_link},
                        {"pruned_feasibility", s.pruned_feasibility},
                        {"isomorphs_rejected", s.isomorphs_rejected},
                        {"elapsed", s.elapsed_seconds}};
}

struct Options {
    bool json = false;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
};

int run_verify(const std::string& file, const Options& opt) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot read " << file << "\n";
        return kExitDomain;
    }
    ordered_json lines = ordered_json::array();
    std::string line;
    int line_no = 0;
    int bad = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        try {
            rcg::SmallGraph g = rcg::g6_decode(line);
            auto sig = rcg::rc_signature(g);
            if (opt.json) {
                ordered_json entry{{"line", line_no}, {"n", g.order()}};
                if (sig) {
                    entry["r"] = sig->r;
                    entry["c"] = sig->c;
                } else {
                    entry["constant"] = false;
                }
                lines.push_back(entry);
            } else if (sig) {
                std::cout << "(" << sig->r << "," << sig->c << ")\n";
            } else {
                std::cout << "not constant\n";
            }
        } catch (const rcg::Graph6Error& e) {
            ++bad;
            std::cerr << file << ":" << line_no << ": " << e.what() << "\n";
        }
    }
    if (opt.json)
        std::cout << lines.dump() << "\n";
    return bad ? kExitDomain : kExitOk;
}

int run_search(int n, int r, int c, bool planar, bool all, std::uint64_t limit,
               const Options& opt) {
    rcg::SearchConfig cfg;
    cfg.n = n;
    cfg.r = r;
    cfg.c = c;
    cfg.planar_only = planar;
    cfg.limit = limit;
    cfg.mode = all ? rcg::SearchConfig::Mode::AllGraphs : rcg::SearchConfig::Mode::FirstFound;
    cfg.threads = std::max(1, opt.threads);
    cfg.max_seconds = budget_seconds();
    rcg::SearchResult res = rcg::generate_rc_graphs(cfg);
    if (opt.json) {
        ordered_json out;
        out["graphs"] = ordered_json::array();
        for (const auto& g : res.graphs)
            out["graphs"].push_back(rcg::g6_encode(g));
        out["stats"] = stats_json(res.stats);
        out["complete"] = res.complete;
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& g : res.graphs)
            std::cout << rcg::g6_encode(g) << "\n";
        std::cerr << stats_json(res.stats).dump() << "\n";
        if (!res.complete)
            std::cerr << "budget exceeded: results are incomplete\n";
    }
    return res.complete ? kExitOk : kExitDomain;
}

int run_smallest(int r, int c, int n_max, bool planar, const Options& opt) {
    rcg::SearchConfig base;
    base.threads = std::max(1, opt.threads);
    base.max_seconds = budget_seconds();
    rcg::SmallestResult res = rcg::smallest_rc_graph(r, c, n_max, planar, base);
    if (opt.json) {
        ordered_json out;
        out["found"] = res.witness.has_value();
        if (res.witness) {
            out["order"] = res.order;
            out["witness"] = rcg::g6_encode(*res.witness);
        }
        out["last_completed_n"] = res.last_completed_n;
        out["complete"] = res.complete;
        out["stats"] = stats_json(res.stats);
        std::cout << out.dump() << "\n";
    } else if (res.witness) {
        std::cout << "order " << res.order << "\n" << rcg::g6_encode(*res.witness) << "\n";
    } else if (res.complete) {
        std::cout << "no (" << r << "," << c << ")-graph within n <= " << n_max << "\n";
    } else {
        std::cout << "budget exceeded; last completed order " << res.last_completed_n << "\n";
    }
    return res.witness ? kExitOk : kExitDomain;
}

int run_circulant(int r, int c, const Options& opt) {
    try {
        rcg::CirculantSpec spec = rcg::construct_rc_circulant(r, c);
        rcg::SmallGraph g = rcg::make_circulant(spec);
        if (opt.json) {
            ordered_json out{{"spec", spec.to_string()},
                             {"n", spec.n},
                             {"jumps", spec.jumps},
                             {"graph6", rcg::g6_encode(g)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << spec.to_string() << "\n" << rcg::g6_encode(g) << "\n";
        }
        return kExitOk;
    } catch (const rcg::Mod3Impossible& e) {
        std::cout << "Mod3Impossible: " << e.what() << "\n";
        return kExitDomain;
    } catch (const rcg::BelowBound& e) {
        std::cout << "BelowBound: " << e.what() << "\n";
        return kExitDomain;
    }
}

int run_orbits(int n, const std::string& jumps_text, const Options& opt) {
    rcg::CirculantSpec spec = rcg::CirculantSpec::parse(std::to_string(n) + ":" + jumps_text);
    auto orbits = rcg::orbit_partition(spec);
    int e0 = 0;
    for (const auto& o : orbits)
        e0 += static_cast<int>(o.edges.size());
    if (opt.json) {
        ordered_json out;
        out["spec"] = spec.to_string();
        out["orbits"] = ordered_json::array();
        for (const auto& o : orbits) {
            ordered_json edges = ordered_json::array();
            for (const auto& e : o.edges)
                edges.push_back({e.a, e.b});
            out["orbits"].push_back(edges);
        }
        out["e0"] = e0;
        out["residue"] = rcg::mod3_class(spec);
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& o : orbits) {
            std::cout << "orbit size " << o.edges.size() << ":";
            for (const auto& e : o.edges)
                std::cout << " {" << e.a << "," << e.b << "}";
            std::cout << "\n";
        }
        std::cout << "e(0) = " << e0 << ", e(0) mod 3 = " << rcg::mod3_class(spec) << "\n";
    }
    return kExitOk;
}

int run_nonexist(int r, int c, bool planar, const Options& opt) {
    (void)opt; // certificate output is JSON either way
    std::optional<rcg::NonexistenceCertificate> cert;
    if (planar) {
        cert = rcg::planar_arithmetic(r, c);
    } else {
        cert = rcg::fact3_check(r, c);
        if (!cert && r >= 1 && r <= 8 && c <= r * (r - 1) / 2)
            cert = rcg::bad_link_certificate(r, c);
    }
    if (!cert) {
        std::cout << "no certificate found\n";
        return kExitDomain;
    }
    if (!rcg::verify_certificate(*cert, r, c)) {
        std::cerr << "internal error: produced certificate failed verification\n";
        return kExitDomain;
    }
    std::cout << rcg::certificate_to_json(*cert) << "\n";
    return kExitOk;
}

int run_product(const std::string& file_a, const std::string& file_b, const Options& opt) {
    rcg::SmallGraph p = rcg::cartesian_product(first_graph_of(file_a), first_graph_of(file_b));
    if (opt.json)
        std::cout << ordered_json{{"graph6", rcg::g6_encode(p)}, {"n", p.order()}}.dump()
                  << "\n";
    else
        std::cout << rcg::g6_encode(p) << "\n";
    return kExitOk;
}

int run_complement(const std::string& file, const Options& opt) {
    rcg::SmallGraph c = rcg::complement_transform(first_graph_of(file));
    if (opt.json)
        std::cout << ordered_json{{"graph6", rcg::g6_encode(c)}, {"n", c.order()}}.dump()
                  << "\n";
    else
        std::cout << rcg::g6_encode(c) << "\n";
    return kExitOk;
}

int run_fact2(int r, int c, const Options& opt) {
    try {
        rcg::SmallGraph g = rcg::fact2_construct(r, c);
        if (opt.json)
            std::cout << ordered_json{{"graph6", rcg::g6_encode(g)}, {"n", g.order()}}.dump()
                      << "\n";
        else
            std::cout << rcg::g6_encode(g) << "\n";
        return kExitOk;
    } catch (const rcg::NoPartition& e) {
        std::cout << "NoPartition: " << e.what() << "\n";
        return kExitDomain;
    }
}

int run_catalog_ingest(const std::string& db, const std::string& file, const std::string& source,
                       const Options& opt) {
    rcg::Catalog cat(db);
    std::ifstream file_in;
    std::istream* in = &std::cin;
    if (!file.empty() && file != "-") {
        file_in.open(file);
        if (!file_in) {
            std::cerr << "cannot read " << file << "\n";
            return kExitDomain;
        }
        in = &file_in;
    }
    rcg::IngestReport report = cat.ingest(*in, source);
    ordered_json out{{"accepted", report.accepted},
                     {"rejected", report.rejected},
                     {"duplicates", report.duplicates},
                     {"malformed", ordered_json::array()}};
    for (const auto& [line, what] : report.malformed)
        out["malformed"].push_back({{"line", line}, {"error", what}});
    if (opt.json)
        std::cout << out.dump() << "\n";
    else
        std::cout << "accepted " << report.accepted << ", rejected " << report.rejected
                  << ", duplicates " << report.duplicates << ", malformed "
                  << report.malformed.size() << "\n";
    return kExitOk;
}

int run_catalog_query(const std::string& db, std::optional<int> r, std::optional<int> c,
                      std::optional<int> n_max, std::optional<bool> planar, const Options& opt) {
    rcg::Catalog cat(db);
    auto recs = cat.query(r, c, n_max, planar);
    if (opt.json) {
        ordered_json out = ordered_json::array();
        for (const auto& rec : recs) {
            out.push_back({{"id", rec.id},
                           {"g6", rec.g6},
                           {"n", rec.n},
                           {"r", rec.r},
                           {"c", rec.c},
                           {"planar", rec.planar}});
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& rec : recs)
            std::cout << rec.n << " (" << rec.r << "," << rec.c << ")"
                      << (rec.planar ? " planar " : " ") << rec.g6 << "\n";
    }
    if (!cat.quarantined().empty())
        std::cerr << "warning: " << cat.quarantined().size() << " quarantined record(s)\n";
    return kExitOk;
}

int run_catalog_export(const std::string& db, const std::string& format) {
    rcg::Catalog cat(db);
    if (format == "jsonl")
        cat.export_jsonl(std::cout);
    else
        cat.export_csv(std::cout);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tools for (r,c)-constant graphs: construction, search, certificates"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_option("--threads", opt.threads, "worker threads (default: all cores)");

    std::string verify_file;
    auto* verify = app.add_subcommand("verify", "print (r,c) per graph6 line, or 'not constant'");
    verify->fallthrough();
    verify->add_option("file", verify_file, "graph6 file, one graph per line")->required();

    int s_n = 0, s_r = 0, s_c = 0;
    bool s_planar = false, s_all = false;
    std::uint64_t s_limit = 0;
    auto* search = app.add_subcommand("search", "enumerate (r,c)-graphs of a given order");
    search->fallthrough();
    search->add_option("--n", s_n, "order")->required();
    search->add_option("--r", s_r, "degree")->required();
    search->add_option("--c", s_c, "link edge count")->required();
    search->add_flag("--planar", s_planar, "planar graphs only");
    search->add_flag("--all", s_all, "all graphs up to isomorphism (default: first only)");
    search->add_option("--limit", s_limit, "cap the number of results (0 = no cap)");

    int m_r = 0, m_c = 0, m_nmax = 12;
    bool m_planar = false;
    auto* smallest = app.add_subcommand("smallest", "smallest order carrying an (r,c)-graph");
    smallest->fallthrough();
    smallest->add_option("--r", m_r, "degree")->required();
    smallest->add_option("--c", m_c, "link edge count")->required();
    smallest->add_option("--n-max", m_nmax, "search bound (default 12)");
    smallest->add_flag("--planar", m_planar, "planar graphs only");

    int c_r = 0, c_c = 0;
    auto* circulant = app.add_subcommand("circulant", "construct a verified (r,c)-circulant");
    circulant->fallthrough();
    circulant->add_option("--r", c_r, "degree")->required();
    circulant->add_option("--c", c_c, "link edge count")->required();

    int o_n = 0;
    std::string o_jumps;
    auto* orbits = app.add_subcommand("orbits", "orbit partition of N(0) edges of Circ(n,S)");
    orbits->fallthrough();
    orbits->add_option("--n", o_n, "order")->required();
    orbits->add_option("--s", o_jumps, "jumps, e.g. \"1,3,4,6\"")->required();

    int x_r = 0, x_c = 0;
    bool x_planar = false;
    auto* nonexist = app.add_subcommand("nonexist", "emit a nonexistence certificate as JSON");
    nonexist->fallthrough();
    nonexist->add_option("--r", x_r, "degree")->required();
    nonexist->add_option("--c", x_c, "link edge count")->required();
    nonexist->add_flag("--planar", x_planar, "certify nonexistence of planar (r,c)-graphs");

    std::string p_a, p_b;
    auto* product = app.add_subcommand("product", "Cartesian product of two graph6 files");
    product->fallthrough();
    product->add_option("a", p_a, "first graph6 file")->required();
    product->add_option("b", p_b, "second graph6 file")->required();

    std::string comp_file;
    auto* complement = app.add_subcommand("complement", "complement of a graph6 file");
    complement->fallthrough();
    complement->add_option("a", comp_file, "graph6 file")->required();

    int f_r = 0, f_c = 0;
    auto* fact2 = app.add_subcommand("fact2", "clique-product (r,c)-graph construction");
    fact2->fallthrough();
    fact2->add_option("--r", f_r, "degree")->required();
    fact2->add_option("--c", f_c, "link edge count")->required();

    auto* catalog = app.add_subcommand("catalog", "persistent (r,c)-graph database");
    catalog->fallthrough();
    catalog->require_subcommand(1);
    std::string db, ingest_file, ingest_source = "cli", export_format = "jsonl";
    auto* ingest = catalog->add_subcommand("ingest", "add graph6 lines (file or stdin)");
    ingest->fallthrough();
    ingest->add_option("--db", db, "catalog file")->required();
    ingest->add_option("file", ingest_file, "graph6 file (default: stdin)");
    ingest->add_option("--source", ingest_source, "provenance note");
    auto* query = catalog->add_subcommand("query", "list matching records");
    query->fallthrough();
    query->add_option("--db", db, "catalog file")->required();
    int q_r = -1, q_c = -1, q_nmax = -1, q_planar = -1;
    query->add_option("--r", q_r, "degree filter");
    query->add_option("--c", q_c, "link filter");
    query->add_option("--n-max", q_nmax, "max order");
    query->add_option("--planar", q_planar, "planar filter (0 or 1)");
    auto* exportc = catalog->add_subcommand("export", "dump all records");
    exportc->fallthrough();
    exportc->add_option("--db", db, "catalog file")->required();
    exportc->add_option("--format", export_format, "jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify)
            return run_verify(verify_file, opt);
        if (*search)
            return run_search(s_n, s_r, s_c, s_planar, s_all, s_limit, opt);
        if (*smallest)
            return run_smallest(m_r, m_c, m_nmax, m_planar, opt);
        if (*circulant)
            return run_circulant(c_r, c_c, opt);
        if (*orbits)
            return run_orbits(o_n, o_jumps, opt);
        if (*nonexist)
            return run_nonexist(x_r, x_c, x_planar, opt);
        if (*product)
            return run_product(p_a, p_b, opt);
        if (*complement)
            return run_complement(comp_file, opt);
        if (*fact2)
            return run_fact2(f_r, f_c, opt);
        if (*ingest)
            return run_catalog_ingest(db, ingest_file, ingest_source, opt);
        if (*query)
            return run_catalog_query(
                db, q_r >= 0 ? std::optional<int>(q_r) : std::nullopt,
                q_c >= 0 ? std::optional<int>(q_c) : std::nullopt,
                q_nmax >= 0 ? std::optional<int>(q_nmax) : std::nullopt,
                q_planar >= 0 ? std::optional<bool>(q_planar != 0) : std::nullopt, opt);
        if (*exportc)
            return run_catalog_export(db, export_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
