#include "digitop/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "digitop/canonical.hpp"
#include "digitop/errors.hpp"
#include "digitop/graph6.hpp"

namespace digitop {

namespace detail {

std::vector<std::uint64_t> enumerate_graph_codes(int n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("graph enumeration supported for 1 <= n <= 10");
    std::vector<std::uint64_t> level{0}; // the one-point graph
    for (int m = 2; m <= n; ++m) {
        std::unordered_set<std::uint64_t> next;
        std::uint64_t rows[11];
        for (std::uint64_t parent : level) {
            rows_from_code(m - 1, parent, rows);
            // attach vertex m-1 with every possible neighborhood
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (m - 1)); ++nb) {
                rows[m - 1] = nb;
                for (int v = 0; v < m - 1; ++v)
                    rows[v] = (rows[v] & ~(std::uint64_t{1} << (m - 1))) |
                              (((nb >> v) & 1) << (m - 1));
                next.insert(canonical_code_rows(m, rows));
            }
        }
        level.assign(next.begin(), next.end());
        std::sort(level.begin(), level.end());
    }
    return level;
}

namespace {

bool rows_connected(int n, const std::uint64_t* rows) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t grow = 0;
        std::uint64_t m = frontier;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            grow |= rows[v];
        }
        frontier = grow & ~seen;
        seen |= grow;
    }
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return (seen & all) == all;
}

DigitalImage image_from_rows(int n, const std::uint64_t* rows) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        std::uint64_t m = rows[v] >> (v + 1) << (v + 1);
        while (m) {
            int w = std::countr_zero(m);
            m &= m - 1;
            edges.emplace_back(v, w);
        }
    }
    return DigitalImage(n, edges);
}

} // namespace

std::vector<DigitalImage> connected_graphs_unchecked(int n) {
    std::vector<DigitalImage> out;
    std::uint64_t rows[11];
    for (std::uint64_t code : enumerate_graph_codes(n)) {
        rows_from_code(n, code, rows);
        if (rows_connected(n, rows))
            out.push_back(image_from_rows(n, rows));
    }
    return out;
}

} // namespace detail

std::vector<DigitalImage> generate_connected_graphs(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("built-in generation covers n <= 7; "
                                    "ingest a graph6 corpus for larger n");
    return detail::connected_graphs_unchecked(n);
}

void ingest_graph6(const std::string& path,
                   const std::function<void(DigitalImage&&, long)>& sink, bool verify_unique) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open graph6 file: " + path);
    std::string line;
    long line_no = 0;
    std::unordered_set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        try {
            DigitalImage img = parse_graph6(line);
            if (verify_unique && !seen.insert(canonical_form(img)).second)
                throw ParseError("duplicate isomorphism class", 0, line_no);
            sink(std::move(img), line_no);
        } catch (const ParseError& e) {
            if (e.line() != 0)
                throw;
            throw ParseError(std::string(e.what()) + " (line " + std::to_string(line_no) + ")",
                             e.offset(), line_no);
        }
    }
}

namespace {

CatalogEntry make_entry(const DigitalImage& img, const CensusOptions& options) {
    CatalogEntry e;
    e.n = img.size();
    e.canon = canonical_form(img);
    e.graph6 = write_graph6(img);
    e.strongly_reducible = is_strongly_reducible(img).has_value();
    if (options.compute_reducible)
        e.reducible = is_reducible(img, options.reducible_step_budget);
    return e;
}

CensusResult run_census(const std::vector<DigitalImage>& batch, const CensusOptions& options,
                        const std::string& provenance) {
    CensusResult result;
    result.report.provenance = provenance;
    if (batch.empty())
        return result;
    result.report.n = batch.front().size();

    std::vector<CatalogEntry> entries(batch.size());
    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < batch.size(); ++i)
            entries[i] = make_entry(batch[i], options);
    } else {
        std::vector<std::future<void>> workers;
        std::size_t chunk = (batch.size() + jobs - 1) / jobs;
        for (int w = 0; w < jobs; ++w) {
            std::size_t lo = w * chunk, hi = std::min(batch.size(), lo + chunk);
            if (lo >= hi)
                break;
            workers.push_back(std::async(std::launch::async, [&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i)
                    entries[i] = make_entry(batch[i], options);
            }));
        }
        for (auto& f : workers)
            f.get();
    }

    for (auto& e : entries) {
        if (e.n != result.report.n)
            throw std::invalid_argument("census source mixes vertex counts");
        if (!batch[&e - entries.data()].connected())
            throw std::invalid_argument("census source contains a disconnected image");
        ++result.report.total_connected;
        if (!e.strongly_reducible)
            ++result.report.not_strongly_reducible;
        if (options.compute_reducible) {
            if (*e.reducible == Verdict::Undecided)
                ++result.report.undecided;
            else if (*e.reducible == Verdict::No)
                result.report.not_reducible = result.report.not_reducible.value_or(0) + 1;
        }
        if (options.keep_all_entries || !e.strongly_reducible)
            result.entries.push_back(std::move(e));
    }
    if (options.compute_reducible && !result.report.not_reducible)
        result.report.not_reducible = 0;

    std::sort(result.entries.begin(), result.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                  return std::tie(a.n, a.canon) < std::tie(b.n, b.canon);
              });
    return result;
}

} // namespace

CensusResult build_census(int n, const CensusOptions& options) {
    return run_census(generate_connected_graphs(n), options, "generated");
}

CensusResult build_census_file(const std::string& path, const CensusOptions& options) {
    std::vector<DigitalImage> batch;
    ingest_graph6(path, [&](DigitalImage&& img, long) { batch.push_back(std::move(img)); });
    return run_census(batch, options, "ingested");
}

void write_catalog(const std::vector<CatalogEntry>& entries, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open catalog for writing: " + path);
    for (const auto& e : entries) {
        nlohmann::json j{{"n", e.n},
                         {"canon", e.canon},
                         {"graph6", e.graph6},
                         {"strongly_reducible", e.strongly_reducible}};
        if (e.reducible) {
            if (*e.reducible == Verdict::Undecided)
                j["reducible"] = "undecided";
            else
                j["reducible"] = (*e.reducible == Verdict::Yes);
        }
        out << j.dump() << "\n";
    }
}

std::vector<CatalogEntry> read_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open catalog: " + path);
    std::vector<CatalogEntry> entries;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw ParseError("catalog line is not valid JSON", 0, line_no);
        CatalogEntry e;
        for (const char* field : {"n", "canon", "graph6", "strongly_reducible"})
            if (!j.contains(field))
                throw ParseError(std::string("catalog entry missing field '") + field + "'", 0,
                                 line_no);
        if (!j["n"].is_number_integer())
            throw ParseError("catalog field 'n' must be an integer", 0, line_no);
        if (!j["canon"].is_string() || !j["graph6"].is_string())
            throw ParseError("catalog fields 'canon'/'graph6' must be strings", 0, line_no);
        if (!j["strongly_reducible"].is_boolean())
            throw ParseError("catalog field 'strongly_reducible' must be boolean", 0, line_no);
        e.n = j["n"];
        e.canon = j["canon"];
        e.graph6 = j["graph6"];
        e.strongly_reducible = j["strongly_reducible"];
        if (j.contains("reducible")) {
            if (j["reducible"].is_boolean())
                e.reducible = j["reducible"].get<bool>() ? Verdict::Yes : Verdict::No;
            else if (j["reducible"] == "undecided")
                e.reducible = Verdict::Undecided;
            else
                throw ParseError("catalog field 'reducible' must be boolean or \"undecided\"", 0,
                                 line_no);
        }
        DigitalImage img = parse_graph6(e.graph6);
        if (canonical_form(img) != e.canon)
            throw ParseError("catalog field 'canon' does not match the graph6 encoding", 0,
                             line_no);
        entries.push_back(std::move(e));
    }
    return entries;
}

std::string census_csv(const std::vector<CensusReport>& reports) {
    std::ostringstream out;
    out << "n,total,d,c,undecided\n";
    for (const auto& r : reports) {
        out << r.n << "," << r.total_connected << "," << r.not_strongly_reducible << ",";
        if (r.not_reducible)
            out << *r.not_reducible;
        out << "," << r.undecided << "\n";
    }
    return out.str();
}

} // namespace digitop
