#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "digitop/homotopy.hpp"
#include "digitop/image.hpp"

namespace digitop {

/// One connected graph per isomorphism class, built by growing smaller
/// graphs one vertex at a time with canonical-form deduplication.
/// Supported for 1 <= n <= 7; larger n is served by graph6 ingestion.
std::vector<DigitalImage> generate_connected_graphs(int n);

/// Streams a graph6 file (one graph per line, assumed pre-deduplicated)
/// through the sink with 1-based line numbers. Parse errors carry the
/// line number. With verify_unique set, duplicate isomorphism classes
/// raise ParseError naming the offending line.
void ingest_graph6(const std::string& path,
                   const std::function<void(DigitalImage&&, long)>& sink,
                   bool verify_unique = false);

struct CatalogEntry {
    int n = 0;
    std::string canon;  ///< canonical form, also a valid graph6 line
    std::string graph6; ///< the encoding as ingested or generated
    bool strongly_reducible = false;
    std::optional<Verdict> reducible; ///< absent when the check was not requested
};

struct CensusReport {
    int n = 0;
    long total_connected = 0;
    long not_strongly_reducible = 0;          ///< d(n)
    std::optional<long> not_reducible;        ///< c(n); absent when not requested
    long undecided = 0;                       ///< graphs whose reducibility ran out of budget
    std::string provenance;                   ///< "generated" or "ingested"
};

struct CensusOptions {
    bool compute_reducible = false;
    std::uint64_t reducible_step_budget = 50'000'000;
    int jobs = 1;
    bool keep_all_entries = false; ///< default keeps only the survivors
};

struct CensusResult {
    CensusReport report;
    std::vector<CatalogEntry> entries; ///< sorted by (n, canonical form)
};

/// Census over the built-in generator (n <= 7).
CensusResult build_census(int n, const CensusOptions& options = {});

/// Census over an ingested graph6 corpus of connected graphs, all of one
/// vertex count.
CensusResult build_census_file(const std::string& path, const CensusOptions& options = {});

void write_catalog(const std::vector<CatalogEntry>& entries, const std::string& path);
std::vector<CatalogEntry> read_catalog(const std::string& path);

/// CSV table with columns n,total,d,c,undecided.
std::string census_csv(const std::vector<CensusReport>& reports);

namespace detail {

/// Packed canonical codes of all graphs (connected or not) on n vertices
/// up to isomorphism, sorted. Practical up to n = 10.
std::vector<std::uint64_t> enumerate_graph_codes(int n);

/// Connected members of enumerate_graph_codes(n) as images, in code order.
std::vector<DigitalImage> connected_graphs_unchecked(int n);

} // namespace detail

} // namespace digitop
