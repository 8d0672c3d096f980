#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "digitop/canonical.hpp"
#include "digitop/catalog.hpp"
#include "digitop/errors.hpp"
#include "digitop/graph6.hpp"
#include "oracles.hpp"

using namespace digitop;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("digitop_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("connected graph generation matches the edge-subset oracle") {
    CHECK(generate_connected_graphs(1).size() == 1);
    CHECK(generate_connected_graphs(4).size() == 6);
    CHECK(generate_connected_graphs(6).size() == 112);
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<long>(generate_connected_graphs(n).size()) ==
              oracles::brute_count_connected(n));

    // one representative per class: canonical forms are pairwise distinct
    auto graphs = generate_connected_graphs(5);
    std::set<std::string> canon;
    for (const auto& g : graphs) {
        CHECK(g.connected());
        CHECK(g.size() == 5);
        canon.insert(canonical_form(g));
    }
    CHECK(canon.size() == graphs.size());

    CHECK_THROWS_AS(generate_connected_graphs(0), std::invalid_argument);
    CHECK_THROWS_AS(generate_connected_graphs(8), std::invalid_argument);
}

TEST_CASE("graph6 ingestion") {
    TempFile f("ingest.g6");
    {
        std::ofstream out(f.path);
        out << "@\n";
    }
    std::vector<DigitalImage> got;
    ingest_graph6(f.path, [&](DigitalImage&& img, long line) {
        CHECK(line == 1);
        got.push_back(std::move(img));
    });
    REQUIRE(got.size() == 1);
    CHECK(got[0].size() == 1);

    TempFile empty("empty.g6");
    { std::ofstream out(empty.path); }
    long count = 0;
    ingest_graph6(empty.path, [&](DigitalImage&&, long) { ++count; });
    CHECK(count == 0);

    TempFile bad("bad.g6");
    {
        std::ofstream out(bad.path);
        out << "@\nA_\nA\n"; // line 3 truncated
    }
    try {
        ingest_graph6(bad.path, [](DigitalImage&&, long) {});
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    TempFile dup("dup.g6");
    {
        std::ofstream out(dup.path);
        out << write_graph6(cycle_image(4)) << "\n";
        out << write_graph6(relabel_image(cycle_image(4), {2, 0, 3, 1})) << "\n";
    }
    CHECK_THROWS_AS(ingest_graph6(dup.path, [](DigitalImage&&, long) {}, true), ParseError);
}

TEST_CASE("census counts on the built-in range") {
    CensusOptions opts;
    opts.compute_reducible = true;

    auto c1 = build_census(1, opts);
    CHECK(c1.report.not_strongly_reducible == 1);
    CHECK(c1.report.not_reducible == 1);

    auto c4 = build_census(4, opts);
    CHECK(c4.report.total_connected == 6);
    CHECK(c4.report.not_strongly_reducible == 1);
    CHECK(c4.report.not_reducible == 0);
    REQUIRE(c4.entries.size() == 1);
    CHECK(c4.entries[0].canon == canonical_form(cycle_image(4)));

    auto c6 = build_census(6, opts);
    CHECK(c6.report.not_strongly_reducible == 9);
    CHECK(c6.report.not_reducible == 1);
    CHECK(c6.report.undecided == 0);
}

TEST_CASE("census determinism and parallel agreement") {
    CensusOptions serial;
    serial.compute_reducible = true;
    CensusOptions parallel = serial;
    parallel.jobs = 4;

    auto a = build_census(6, serial);
    auto b = build_census(6, serial);
    auto c = build_census(6, parallel);

    auto as_tuple = [](const CatalogEntry& e) {
        return std::tuple{e.n, e.canon, e.graph6, e.strongly_reducible,
                          e.reducible.has_value() ? static_cast<int>(*e.reducible) : -1};
    };
    REQUIRE(a.entries.size() == b.entries.size());
    REQUIRE(a.entries.size() == c.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(as_tuple(a.entries[i]) == as_tuple(b.entries[i]));
        CHECK(as_tuple(a.entries[i]) == as_tuple(c.entries[i]));
    }
    CHECK(a.report.not_strongly_reducible == c.report.not_strongly_reducible);
    CHECK(a.report.not_reducible == c.report.not_reducible);
}

TEST_CASE("census over an ingested file equals the generated census") {
    TempFile f("conn5.g6");
    {
        std::ofstream out(f.path);
        for (const auto& img : generate_connected_graphs(5))
            out << write_graph6(img) << "\n";
    }
    auto from_file = build_census_file(f.path, {});
    auto generated = build_census(5, {});
    CHECK(from_file.report.total_connected == generated.report.total_connected);
    CHECK(from_file.report.not_strongly_reducible == generated.report.not_strongly_reducible);
    CHECK(from_file.report.provenance == "ingested");
    REQUIRE(from_file.entries.size() == generated.entries.size());
    for (std::size_t i = 0; i < from_file.entries.size(); ++i)
        CHECK(from_file.entries[i].canon == generated.entries[i].canon);
}

TEST_CASE("d(n) dominates c(n) and survivors keep their flags honest") {
    CensusOptions opts;
    opts.compute_reducible = true;
    opts.keep_all_entries = true;
    for (int n = 1; n <= 6; ++n) {
        auto census = build_census(n, opts);
        REQUIRE(census.report.not_reducible.has_value());
        CHECK(census.report.not_strongly_reducible >= *census.report.not_reducible);
        long survivors = 0;
        for (const auto& e : census.entries) {
            if (!e.strongly_reducible)
                ++survivors;
            else
                CHECK(*e.reducible == Verdict::Yes); // strongly reducible implies reducible
        }
        CHECK(survivors == census.report.not_strongly_reducible);
        CHECK(static_cast<long>(census.entries.size()) == census.report.total_connected);
    }
}

TEST_CASE("catalog persistence round trip") {
    CensusOptions opts;
    opts.compute_reducible = true;
    auto census = build_census(5, opts);

    TempFile f("catalog.jsonl");
    write_catalog(census.entries, f.path);
    auto back = read_catalog(f.path);
    REQUIRE(back.size() == census.entries.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].n == census.entries[i].n);
        CHECK(back[i].canon == census.entries[i].canon);
        CHECK(back[i].graph6 == census.entries[i].graph6);
        CHECK(back[i].strongly_reducible == census.entries[i].strongly_reducible);
        CHECK(back[i].reducible == census.entries[i].reducible);
    }

    // empty catalog round-trips
    TempFile e("catalog_empty.jsonl");
    write_catalog({}, e.path);
    CHECK(read_catalog(e.path).empty());

    // schema violations name the field
    TempFile bad("catalog_bad.jsonl");
    {
        std::ofstream out(bad.path);
        out << R"({"n": 1, "canon": "@", "strongly_reducible": false})" << "\n";
    }
    try {
        read_catalog(bad.path);
        CHECK(false);
    } catch (const ParseError& err) {
        CHECK(std::string(err.what()).find("graph6") != std::string::npos);
    }
}

TEST_CASE("census csv") {
    CensusOptions opts;
    opts.compute_reducible = true;
    std::vector<CensusReport> reports;
    for (int n = 1; n <= 4; ++n)
        reports.push_back(build_census(n, opts).report);
    std::string csv = census_csv(reports);
    CHECK(csv.find("n,total,d,c,undecided") == 0);
    CHECK(csv.find("4,6,1,0,0") != std::string::npos);
}
