// digitop: homology, homotopy checks, reduction, cycle classification,
// census, and the built-in verification suite for finite digital images.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "digitop/canonical.hpp"
#include "digitop/catalog.hpp"
#include "digitop/cycles.hpp"
#include "digitop/errors.hpp"
#include "digitop/graph6.hpp"
#include "digitop/homology.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/verification.hpp"

using nlohmann::json;
using namespace digitop;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitUndecided = 3;

json image_json(const DigitalImage& img) {
    return json{{"n", img.size()}, {"graph6", write_graph6(img)}};
}

DigitalImage image_from_json(const json& j) {
    if (j.is_string())
        return parse_graph6(j.get<std::string>());
    if (j.contains("graph6"))
        return parse_graph6(j["graph6"].get<std::string>());
    if (!j.contains("n") || !j.contains("edges"))
        throw ParseError("image JSON needs either \"graph6\" or \"n\" and \"edges\"");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("image edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return DigitalImage(j["n"].get<int>(), edges);
}

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Yes:
        return "yes";
    case Verdict::No:
        return "no";
    default:
        return "undecided";
    }
}

json homotopy_json(const Homotopy& h) {
    json stages = json::array();
    for (const auto& s : h.stages())
        stages.push_back(s.values());
    return json{{"k", h.steps()}, {"stages", stages}};
}

json matrix_json(const IntegerMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(to_int64(m.at(i, j)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!token.empty())
                out.push_back(std::stoi(token));
            token.clear();
        } else {
            token.push_back(c);
        }
    }
    if (!token.empty())
        out.push_back(std::stoi(token));
    return out;
}

void emit(const json& j, const std::string& format) {
    if (format == "text") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
}

int cmd_homology(const std::string& input, int max_q, const std::string& format) {
    DigitalImage img = read_image_file(input);
    ChainComplex C(share(img));
    int top = (max_q >= 0) ? max_q : C.top_dimension() + 1;
    json per_q = json::array();
    for (int q = 0; q <= top; ++q) {
        auto h = homology(C, q);
        per_q.push_back(json{{"q", q}, {"betti", h.betti}, {"torsion", h.torsion}});
    }
    emit(json{{"image", image_json(img)}, {"homology", per_q}}, format);
    return 0;
}

int cmd_check(const std::string& input, const std::string& mode, bool want_witness,
              std::uint64_t budget_maps, const std::string& format) {
    std::ifstream in(input);
    if (!in)
        throw ParseError("cannot open input: " + input);
    json payload = json::parse(in, nullptr, false);
    if (payload.is_discarded())
        throw ParseError("input is not valid JSON");
    if (!payload.contains("f") || !payload.contains("g"))
        throw ParseError("check input needs maps \"f\" and \"g\"");
    if (!payload.contains("domain"))
        throw ParseError("check input needs a \"domain\" image");

    ImagePtr dom = share(image_from_json(payload["domain"]));
    ImagePtr cod = payload.contains("codomain") ? share(image_from_json(payload["codomain"])) : dom;
    VertexMap f(dom, cod, payload["f"].get<std::vector<int>>());
    VertexMap g(dom, cod, payload["g"].get<std::vector<int>>());

    json out{{"mode", mode}};
    Verdict verdict;
    std::optional<Homotopy> witness;
    if (mode == "one-step") {
        verdict = one_step_homotopic(f, g) ? Verdict::Yes : Verdict::No;
        if (verdict == Verdict::Yes)
            witness = Homotopy(std::vector<VertexMap>{f, g});
    } else if (mode == "one-step-strong") {
        verdict = one_step_strong_homotopic(f, g) ? Verdict::Yes : Verdict::No;
        if (verdict == Verdict::Yes)
            witness = puncturate_one_step(f, g, /*drop_duplicate_stages=*/true);
    } else if (mode == "homotopic" || mode == "strong") {
        auto res = (mode == "strong") ? strongly_homotopic(f, g, SearchBudget{budget_maps})
                                      : homotopic(f, g, SearchBudget{budget_maps});
        verdict = res.verdict;
        witness = res.witness;
    } else {
        throw ParseError("unknown mode: " + mode);
    }
    out["verdict"] = verdict_name(verdict);
    if (want_witness && witness && verdict == Verdict::Yes)
        out["witness"] = homotopy_json(*witness);
    emit(out, format);
    return verdict == Verdict::Undecided ? kExitUndecided : 0;
}

int cmd_reduce(const std::string& input, std::optional<int> basepoint, bool all_basepoints,
               std::uint64_t budget_maps, const std::string& format) {
    DigitalImage img = read_image_file(input);
    ImagePtr X = share(std::move(img));

    auto core = strong_core(X);
    json out{{"image", image_json(*X)},
             {"core", image_json(*core.core)},
             {"old_to_new", core.old_to_new},
             {"retraction", core.retraction.values()}};

    auto ordering = strong_contraction_ordering(*X);
    out["strongly_contractible"] = ordering.has_value();
    if (ordering)
        out["ordering"] = json{{"order", ordering->order}, {"witnesses", ordering->witnesses}};

    bool undecided = false;
    json pointed = json::array();
    std::vector<int> basepoints;
    if (all_basepoints)
        for (int v = 0; v < X->size(); ++v)
            basepoints.push_back(v);
    else if (basepoint)
        basepoints.push_back(*basepoint);
    for (int bp : basepoints) {
        auto res = pointed_strongly_contractible(X, bp, SearchBudget{budget_maps});
        pointed.push_back(json{{"basepoint", bp},
                               {"label", X->display_label(bp)},
                               {"verdict", verdict_name(res.verdict)}});
        undecided = undecided || res.verdict == Verdict::Undecided;
    }
    if (!pointed.empty())
        out["pointed"] = pointed;
    emit(out, format);
    return undecided ? kExitUndecided : 0;
}

int cmd_census(int n, const std::string& corpus, bool with_reducible,
               std::uint64_t budget_candidates, int jobs, const std::string& out_catalog,
               const std::string& format) {
    CensusOptions opts;
    opts.compute_reducible = with_reducible;
    opts.reducible_step_budget = budget_candidates;
    opts.jobs = jobs;

    CensusResult result =
        (n > 0) ? build_census(n, opts) : build_census_file(corpus, opts);

    if (!out_catalog.empty())
        write_catalog(result.entries, out_catalog);

    if (format == "json") {
        json j{{"n", result.report.n},
               {"total", result.report.total_connected},
               {"d", result.report.not_strongly_reducible},
               {"undecided", result.report.undecided},
               {"provenance", result.report.provenance}};
        if (result.report.not_reducible)
            j["c"] = *result.report.not_reducible;
        emit(j, format);
    } else {
        std::cout << census_csv({result.report});
    }
    return (with_reducible && result.report.undecided > 0) ? kExitUndecided : 0;
}

int cmd_classify_cycle(int n, const std::string& map_text, const std::string& format) {
    ImagePtr Cn = share(cycle_image(n));
    VertexMap f(Cn, Cn, parse_int_list(map_text));
    if (!is_continuous(f))
        throw ParseError("map is not continuous on the cycle");
    auto cls = cycles::classify_selfmap(f);

    const char* tag = cls.tag == cycles::CycleClass::Tag::Identity  ? "identity"
                      : cls.tag == cycles::CycleClass::Tag::Flip    ? "flip"
                                                                    : "constant";
    ChainComplex C(Cn);
    json induced = json::array();
    for (int q = 0; q <= 2; ++q) {
        auto expected = cycles::expected_induced(cls, q);
        auto computed = induced_homology_map(C, C, f, q);
        json entry{{"q", q},
                   {"expected_scalar", expected.scalar},
                   {"computed", matrix_json(computed.matrix)}};
        bool match = true;
        if (computed.matrix.rows() == 1 && computed.matrix.cols() == 1)
            match = computed.matrix.at(0, 0) == expected.scalar;
        else if (expected.scalar != 0 && computed.matrix.rows() == 0)
            match = false;
        entry["match"] = match;
        induced.push_back(entry);
    }
    emit(json{{"n", n}, {"map", f.values()}, {"class", tag}, {"d", cls.parameter},
              {"induced", induced}},
         format);
    return 0;
}

int cmd_verify(const std::string& corpus_dir, std::uint64_t seed, int jobs,
               std::uint64_t budget_maps, std::uint64_t budget_candidates,
               const std::string& format) {
    VerifyOptions opts;
    opts.seed = seed;
    opts.jobs = jobs;
    opts.map_budget = budget_maps;
    opts.candidate_budget = budget_candidates;
    if (!corpus_dir.empty()) {
        auto probe = [&](const std::string& name) -> std::string {
            std::string path = corpus_dir + "/" + name;
            return std::ifstream(path).good() ? path : "";
        };
        opts.corpus8 = probe("graphs8.g6");
        opts.corpus9 = probe("graphs9.g6");
    }

    auto results = run_verification(opts);
    bool any_failed = false;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back(json{{"id", r.id},
                               {"status", r.skipped ? "skip" : (r.pass ? "pass" : "fail")},
                               {"detail", r.detail}});
            any_failed = any_failed || (!r.skipped && !r.pass);
        }
        emit(arr, format);
    } else {
        for (const auto& r : results) {
            const char* status = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
            std::cout << "[" << status << "] " << r.id << ": " << r.detail << "\n";
            any_failed = any_failed || (!r.skipped && !r.pass);
        }
    }
    return any_failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"digital image topology toolkit"};
    app.require_subcommand(1);

    std::string input, format = "json", corpus, out_catalog, mode = "homotopic", map_text;
    std::uint64_t budget_maps = 1'000'000, budget_candidates = 50'000'000, seed = 20240802;
    int jobs = 1, max_q = -1, n = 0, basepoint = -1;
    bool want_witness = false, with_reducible = false, all_basepoints = false;

    auto* homology_cmd = app.add_subcommand("homology", "integer homology of an image");
    homology_cmd->add_option("--input", input, "image file (graph6 or adjacency list)")
        ->required();
    homology_cmd->add_option("--max-q", max_q, "largest dimension to report");
    homology_cmd->add_option("--format", format, "json|text");

    auto* check_cmd = app.add_subcommand("check", "homotopy relations between two maps");
    check_cmd->add_option("--input", input, "JSON file with domain/codomain/f/g")->required();
    check_cmd->add_option("--mode", mode, "one-step|one-step-strong|homotopic|strong");
    check_cmd->add_flag("--witness", want_witness, "emit a stage list when yes");
    check_cmd->add_option("--budget-maps", budget_maps, "visited-map budget for searches")
        ->check(CLI::PositiveNumber);
    check_cmd->add_option("--format", format, "json|text");

    auto* reduce_cmd = app.add_subcommand("reduce", "strong core, contraction ordering, "
                                                    "pointed contractibility");
    reduce_cmd->add_option("--input", input, "image file")->required();
    reduce_cmd->add_option("--basepoint", basepoint, "pointed check at this vertex");
    reduce_cmd->add_flag("--all-basepoints", all_basepoints, "pointed check at every vertex");
    reduce_cmd->add_option("--budget-maps", budget_maps, "visited-map budget")
        ->check(CLI::PositiveNumber);
    reduce_cmd->add_option("--format", format, "json|text");

    std::string census_format = "csv";
    auto* census_cmd = app.add_subcommand("census", "count images up to strong homotopy "
                                                    "equivalence");
    census_cmd->add_option("--n", n, "built-in generation (1..7)");
    census_cmd->add_option("--corpus", corpus, "graph6 corpus of connected graphs")
        ->envname("DIGITOP_CORPUS");
    census_cmd->add_flag("--with-reducible", with_reducible, "also compute the c(n) column");
    census_cmd->add_option("--budget-candidates", budget_candidates,
                           "step budget per reducibility search")
        ->check(CLI::PositiveNumber);
    census_cmd->add_option("--jobs", jobs, "parallel filter workers");
    census_cmd->add_option("--out-catalog", out_catalog, "write the survivor catalog (JSON lines)");
    census_cmd->add_option("--format", census_format, "csv|json");

    auto* classify_cmd = app.add_subcommand("classify-cycle", "classify a selfmap of C_n");
    classify_cmd->add_option("--n", n, "cycle length (n > 4)")->required();
    classify_cmd->add_option("--map", map_text, "comma-separated values, e.g. 1,2,3,4,0")
        ->required();
    classify_cmd->add_option("--format", format, "json|text");

    std::string verify_format = "text";
    auto* verify_cmd = app.add_subcommand("verify-paper", "run the verification suite");
    verify_cmd->add_option("--corpus", corpus,
                           "directory holding graphs8.g6 / graphs9.g6")
        ->envname("DIGITOP_CORPUS");
    verify_cmd->add_option("--seed", seed, "seed for the randomized suites");
    verify_cmd->add_option("--jobs", jobs, "parallel census workers");
    verify_cmd->add_option("--budget-maps", budget_maps, "visited-map budget");
    verify_cmd->add_option("--budget-candidates", budget_candidates,
                           "reducibility step budget");
    verify_cmd->add_option("--format", verify_format, "text|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (homology_cmd->parsed())
            return cmd_homology(input, max_q, format);
        if (check_cmd->parsed())
            return cmd_check(input, mode, want_witness, budget_maps, format);
        if (reduce_cmd->parsed())
            return cmd_reduce(input,
                              basepoint >= 0 ? std::optional<int>(basepoint) : std::nullopt,
                              all_basepoints, budget_maps, format);
        if (census_cmd->parsed()) {
            if ((n > 0) == !corpus.empty()) {
                std::cerr << "census: give exactly one of --n or --corpus\n";
                return kExitParse;
            }
            return cmd_census(n, corpus, with_reducible, budget_candidates, jobs, out_catalog,
                              census_format);
        }
        if (classify_cmd->parsed())
            return cmd_classify_cycle(n, map_text, format);
        if (verify_cmd->parsed())
            return cmd_verify(corpus, seed, jobs, budget_maps, budget_candidates,
                              verify_format);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
