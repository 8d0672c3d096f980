#include "digitop/verification.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "digitop/canonical.hpp"
#include "digitop/catalog.hpp"
#include "digitop/cycles.hpp"
#include "digitop/graph6.hpp"
#include "digitop/homology.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/matrix.hpp"

namespace digitop {

DigitalImage nested_squares_image() {
    // outer square 0..3, inner square 4..7, joined so that vertex 0 is
    // the unique vertex a one-step strong move away from the identity
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0},  // outer square
                                           {4, 5}, {5, 6}, {6, 7}, {7, 4},  // inner square
                                           {3, 6}, {6, 4}, {4, 1},          // long diagonal
                                           {2, 5}, {7, 0}, {3, 5},
                                           {2, 4}, {1, 7}, {3, 7}, {6, 0}};
    std::vector<std::string> labels;
    for (int i = 1; i <= 8; ++i)
        labels.push_back("x_" + std::to_string(i));
    return DigitalImage(8, edges, std::move(labels));
}

namespace {

struct Suite {
    std::vector<CheckResult> results;

    void record(const std::string& id, bool pass, const std::string& detail) {
        results.push_back({id, pass, false, detail});
    }
    void skip(const std::string& id, const std::string& detail) {
        results.push_back({id, false, true, detail});
    }
};

std::string fmt_counts(const std::vector<long>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    return out.str();
}

// ---- census counts --------------------------------------------------

void check_census_d(Suite& s, const VerifyOptions& opt) {
    const std::vector<long> expected_d{1, 0, 0, 1, 2, 9, 46};
    const std::vector<long> expected_total{1, 1, 2, 6, 21, 112, 853};
    std::vector<long> got_d, got_total;
    CensusOptions copt;
    copt.jobs = opt.jobs;
    for (int n = 1; n <= 7; ++n) {
        auto census = build_census(n, copt);
        got_d.push_back(census.report.not_strongly_reducible);
        got_total.push_back(census.report.total_connected);
    }
    bool ok = got_d == expected_d && got_total == expected_total;
    s.record("census-d-builtin", ok,
             "d(1..7) = " + fmt_counts(got_d) + " over totals " + fmt_counts(got_total));

    struct CorpusCase {
        const char* id;
        std::string path;
        long total, d;
    };
    for (const CorpusCase& c : {CorpusCase{"census-d-corpus8", opt.corpus8, 11117, 507},
                                CorpusCase{"census-d-corpus9", opt.corpus9, 261080, 11800}}) {
        if (c.path.empty()) {
            s.skip(c.id, "no corpus supplied");
            continue;
        }
        auto census = build_census_file(c.path, copt);
        bool cok = census.report.total_connected == c.total &&
                   census.report.not_strongly_reducible == c.d;
        s.record(c.id, cok,
                 "d = " + std::to_string(census.report.not_strongly_reducible) + " of " +
                     std::to_string(census.report.total_connected) + " connected graphs");
    }
}

void check_census_c(Suite& s, const VerifyOptions& opt) {
    const std::vector<long> expected_c{1, 0, 0, 0, 1, 1, 3};
    std::vector<long> got_c;
    long undecided = 0;
    CensusOptions copt;
    copt.jobs = opt.jobs;
    copt.compute_reducible = true;
    copt.reducible_step_budget = opt.candidate_budget;
    for (int n = 1; n <= 7; ++n) {
        auto census = build_census(n, copt);
        got_c.push_back(census.report.not_reducible.value_or(-1));
        undecided += census.report.undecided;
    }
    bool ok = got_c == expected_c && undecided == 0;
    s.record("census-c-builtin", ok,
             "c(1..7) = " + fmt_counts(got_c) + ", undecided = " + std::to_string(undecided));
}

void check_small_survivors(Suite& s, const VerifyOptions& opt) {
    const std::vector<long> expected{1, 0, 0, 1, 2, 9};
    std::vector<long> got;
    std::set<std::string> survivors;
    CensusOptions copt;
    copt.jobs = opt.jobs;
    for (int n = 1; n <= 6; ++n) {
        auto census = build_census(n, copt);
        got.push_back(census.report.not_strongly_reducible);
        for (const auto& e : census.entries)
            survivors.insert(e.canon);
    }
    bool ok = got == expected;

    // named survivors: the 4-, 5-, 6-cycles and K_{3,3}
    std::vector<std::pair<const char*, DigitalImage>> named;
    named.emplace_back("C_4", cycle_image(4));
    named.emplace_back("C_5", cycle_image(5));
    named.emplace_back("C_6", cycle_image(6));
    {
        std::vector<std::pair<int, int>> e;
        for (int a = 0; a < 3; ++a)
            for (int b = 3; b < 6; ++b)
                e.emplace_back(a, b);
        named.emplace_back("K_{3,3}", DigitalImage(6, e));
    }
    std::string missing;
    for (const auto& [name, img] : named)
        if (!survivors.count(canonical_form(img))) {
            ok = false;
            missing += std::string(" ") + name;
        }

    // the two 5-point survivors: C_5 and the square with a midpoint path
    {
        DigitalImage wheelish(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 2}});
        auto census = build_census(5, copt);
        std::set<std::string> got5;
        for (const auto& e : census.entries)
            got5.insert(e.canon);
        std::set<std::string> want5{canonical_form(cycle_image(5)), canonical_form(wheelish)};
        if (got5 != want5)
            ok = false;
    }

    s.record("small-survivor-catalog", ok,
             "survivors per n = " + fmt_counts(got) +
                 (missing.empty() ? "" : ("; missing:" + missing)));
}

// ---- homology of cycles ---------------------------------------------

void check_cycle_homology(Suite& s, const VerifyOptions&) {
    bool ok = true;
    std::string detail;
    for (int n = 4; n <= 10; ++n) {
        ChainComplex C(share(cycle_image(n)));
        for (int q = 0; q <= 3; ++q) {
            auto h = homology(C, q);
            long want = (q <= 1) ? 1 : 0;
            if (h.betti != want || !h.torsion.empty()) {
                ok = false;
                detail += " n=" + std::to_string(n) + ",q=" + std::to_string(q) + " betti=" +
                          std::to_string(h.betti) + " torsion=" + std::to_string(h.torsion.size());
            }
        }
    }
    s.record("cycle-homology", ok, ok ? "H_q(C_n) = Z,Z,0,0 for n=4..10" : detail);
}

void check_cycle_rigidity(Suite& s, const VerifyOptions& opt) {
    bool ok = true;
    std::string detail;
    for (int n = 4; n <= 7; ++n) {
        ImagePtr Cn = share(cycle_image(n));
        VertexMap id = identity_map(Cn);
        auto nb = strong_neighbors(id);
        if (nb.size() != 1 || !(nb.front() == id)) {
            ok = false;
            detail += " strong_neighbors(id_C" + std::to_string(n) + ") has " +
                      std::to_string(nb.size()) + " maps;";
        }
        auto res = strongly_homotopic(id, constant_map(Cn, Cn, 0),
                                      SearchBudget{opt.map_budget});
        if (res.verdict != Verdict::No || res.visited != 1) {
            ok = false;
            detail += " strong class of id_C" + std::to_string(n) + " has " +
                      std::to_string(res.visited) + " maps;";
        }
    }
    {
        ImagePtr C4 = share(cycle_image(4));
        auto res = homotopic(identity_map(C4), constant_map(C4, C4, 0),
                             SearchBudget{opt.map_budget});
        if (res.verdict != Verdict::Yes) {
            ok = false;
            detail += " id_C4 not found homotopic to a constant;";
        }
    }
    s.record("cycle-strong-rigidity", ok,
             ok ? "strong class of id_Cn = {id} for n=4..7; id_C4 ~ constant ordinarily"
                : detail);
}

// ---- prism identity --------------------------------------------------

// randomized greedy assignment with restarts; terminates because constant
// maps always complete any prefix of a partial continuous map
VertexMap random_continuous_selfmap(const ImagePtr& X, std::mt19937_64& rng) {
    int n = X->size();
    for (;;) {
        std::vector<int> values;
        bool dead = false;
        for (int v = 0; v < n && !dead; ++v) {
            std::vector<int> options;
            for (int y = 0; y < n; ++y) {
                bool ok = true;
                for (int w : X->neighbors(v)) {
                    if (w >= v)
                        break;
                    if (!X->adjacent_or_equal(values[w], y)) {
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    options.push_back(y);
            }
            if (options.empty())
                dead = true;
            else
                values.push_back(options[rng() % options.size()]);
        }
        if (!dead)
            return VertexMap(X, X, std::move(values));
    }
}

bool prism_identity_holds(const ChainComplex& CX, const ChainComplex& CY, const VertexMap& f,
                          const VertexMap& g) {
    for (int q = 0; q <= CX.top_dimension(); ++q) {
        IntegerMatrix P = prism_operator(CX, CY, f, g, q);
        IntegerMatrix lhs = CY.boundary_matrix(q + 1) * P;
        IntegerMatrix rhs =
            induced_chain_map(CX, CY, g, q) - induced_chain_map(CX, CY, f, q);
        if (q > 0) {
            IntegerMatrix Pprev = prism_operator(CX, CY, f, g, q - 1);
            rhs = rhs - Pprev * CX.boundary_matrix(q);
        }
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

void check_prism_identity(Suite& s, const VerifyOptions& opt) {
    bool ok = true;
    long exhaustive_pairs = 0;
    // exhaustive over connected images with <= 4 vertices
    for (int n = 1; n <= 4 && ok; ++n)
        for (const auto& img : generate_connected_graphs(n)) {
            ImagePtr X = share(img);
            ChainComplex C(X);
            auto maps = all_continuous_maps(X, X);
            for (std::size_t i = 0; i < maps.size() && ok; ++i)
                for (std::size_t j = 0; j < maps.size() && ok; ++j) {
                    int moved = 0;
                    for (int v = 0; v < X->size(); ++v)
                        if (maps[i](v) != maps[j](v))
                            ++moved;
                    if (moved > 1 || !one_step_strong_homotopic(maps[i], maps[j]))
                        continue;
                    ++exhaustive_pairs;
                    if (!prism_identity_holds(C, C, maps[i], maps[j]))
                        ok = false;
                }
        }

    // seeded random punctuated pairs on 5- and 6-point images
    std::mt19937_64 rng(opt.seed);
    long random_pairs = 0;
    std::vector<ImagePtr> pool;
    std::vector<ChainComplex> complexes;
    for (int n = 5; n <= 6; ++n)
        for (const auto& img : generate_connected_graphs(n)) {
            pool.push_back(share(img));
            complexes.emplace_back(pool.back());
        }
    while (random_pairs < 1000 && ok) {
        std::size_t pick = rng() % pool.size();
        VertexMap f = random_continuous_selfmap(pool[pick], rng);
        int v = static_cast<int>(rng() % pool[pick]->size());
        std::vector<VertexMap> partners;
        for (int y = 0; y < pool[pick]->size(); ++y) {
            std::vector<int> values = f.values();
            values[v] = y;
            VertexMap g(f.dom_ptr(), f.cod_ptr(), values);
            if (is_continuous(g) && one_step_strong_homotopic(f, g))
                partners.push_back(std::move(g));
        }
        const VertexMap& g = partners[rng() % partners.size()]; // f itself always qualifies
        ++random_pairs;
        if (!prism_identity_holds(complexes[pick], complexes[pick], f, g))
            ok = false;
    }
    s.record("prism-identity", ok,
             "exact on " + std::to_string(exhaustive_pairs) + " exhaustive pairs and " +
                 std::to_string(random_pairs) + " random punctuated pairs");
}

// ---- strong invariance of induced maps -------------------------------

void check_strong_invariance(Suite& s, const VerifyOptions&) {
    bool ok = true;
    long classes_checked = 0;
    for (int n = 1; n <= 4 && ok; ++n)
        for (const auto& img : generate_connected_graphs(n)) {
            ImagePtr X = share(img);
            ChainComplex C(X);
            auto maps = all_continuous_maps(X, X);
            auto cls = one_step_partition(maps, /*strong=*/true);
            int nclasses = *std::max_element(cls.begin(), cls.end()) + 1;
            for (int c = 0; c < nclasses && ok; ++c) {
                std::vector<std::size_t> members;
                for (std::size_t i = 0; i < maps.size(); ++i)
                    if (cls[i] == c)
                        members.push_back(i);
                ++classes_checked;
                for (int q = 0; q <= 2 && ok; ++q) {
                    auto ref = induced_homology_map(C, C, maps[members.front()], q);
                    for (std::size_t m = 1; m < members.size() && ok; ++m) {
                        auto other = induced_homology_map(C, C, maps[members[m]], q);
                        if (!homology_maps_equal(ref, other))
                            ok = false;
                    }
                }
            }
        }

    // the non-strong failure: id and the constant act differently on H_1(C_4)
    {
        ImagePtr C4 = share(cycle_image(4));
        ChainComplex C(C4);
        auto idm = induced_homology_map(C, C, identity_map(C4), 1);
        auto cm = induced_homology_map(C, C, constant_map(C4, C4, 0), 1);
        if (homology_maps_equal(idm, cm))
            ok = false;
    }
    s.record("strong-homotopy-invariance", ok,
             "induced maps constant on " + std::to_string(classes_checked) +
                 " strong classes; id_* != c_* on H_1(C_4)");
}

// ---- selfmap classification on cycles --------------------------------

void check_cycle_selfmaps(Suite& s, const VerifyOptions&) {
    bool ok = true;
    std::string detail;
    for (int n = 5; n <= 6 && ok; ++n) {
        ImagePtr Cn = share(cycle_image(n));
        ChainComplex C(Cn);
        auto maps = all_continuous_maps(Cn, Cn);
        auto cls = one_step_partition(maps, /*strong=*/false);
        int nclasses = *std::max_element(cls.begin(), cls.end()) + 1;
        if (nclasses != 3) {
            ok = false;
            detail += " C_" + std::to_string(n) + " has " + std::to_string(nclasses) +
                      " homotopy classes;";
            continue;
        }
        // per-map: classification tag, literal-match consistency, induced
        // scalars against the class table
        std::vector<int> h1(maps.size());
        std::vector<cycles::CycleClass::Tag> tags(maps.size());
        for (std::size_t i = 0; i < maps.size(); ++i) {
            auto c = cycles::classify_selfmap(maps[i]);
            tags[i] = c.tag;
            if (c.tag == cycles::CycleClass::Tag::Identity)
                for (int v = 0; v < n; ++v)
                    if (maps[i](v) != (v + c.parameter) % n)
                        ok = false;
            auto h0m = induced_homology_map(C, C, maps[i], 0);
            auto h1m = induced_homology_map(C, C, maps[i], 1);
            if (h0m.matrix.at(0, 0) != 1)
                ok = false;
            h1[i] = static_cast<int>(to_int64(h1m.matrix.at(0, 0)));
            int expected = cycles::expected_induced(c, 1).scalar;
            if (h1[i] != expected)
                ok = false;
            auto h2m = induced_homology_map(C, C, maps[i], 2);
            if (h2m.matrix.rows() != 0 || h2m.source.rank() != 0)
                ok = false;
        }
        // the Hopf property: induced maps agree in q <= 2 iff homotopic
        for (std::size_t i = 0; i < maps.size() && ok; ++i)
            for (std::size_t j = i + 1; j < maps.size(); ++j)
                if ((h1[i] == h1[j]) != (cls[i] == cls[j])) {
                    ok = false;
                    break;
                }
        // classes align with tags, and each class contains what it should
        for (std::size_t i = 0; i < maps.size() && ok; ++i)
            for (std::size_t j = i + 1; j < maps.size(); ++j)
                if ((tags[i] == tags[j]) != (cls[i] == cls[j])) {
                    ok = false;
                    break;
                }
        // constant-class maps are strongly homotopic to an actual constant
        if (ok) {
            auto strong_cls = one_step_partition(maps, /*strong=*/true);
            std::size_t const0 = 0;
            for (std::size_t i = 0; i < maps.size(); ++i)
                if (maps[i] == cycles::constant_map(Cn, 0))
                    const0 = i;
            for (std::size_t i = 0; i < maps.size() && ok; ++i)
                if (tags[i] == cycles::CycleClass::Tag::Constant &&
                    strong_cls[i] != strong_cls[const0])
                    ok = false;
        }
    }
    s.record("cycle-selfmap-classification", ok,
             ok ? "C_5 and C_6 selfmaps: 3 classes, induced maps match the table, "
                  "agreement iff homotopic"
                : detail);
}

// ---- the eight-point pointed example ---------------------------------

void check_pointed_example(Suite& s, const VerifyOptions& opt) {
    bool ok = true;
    std::string detail;
    ImagePtr X = share(nested_squares_image());

    auto ord = strong_contraction_ordering(*X);
    if (!ord || !validate_contraction_ordering(*X, *ord)) {
        ok = false;
        detail += " no valid contraction ordering found;";
    }
    ContractionOrdering fixed;
    fixed.order = {0, 1, 2, 3, 4, 5, 6, 7};
    fixed.witnesses = {7, 4, 5, 6, 6, 6, 7};
    if (!validate_contraction_ordering(*X, fixed)) {
        ok = false;
        detail += " the stated ordering fails;";
    }

    VertexMap id = identity_map(X);
    for (const auto& f : strong_neighbors(id))
        if (!(f == id) && f(0) == 0) {
            ok = false;
            detail += " a nonidentity strong neighbor fixes vertex 0;";
        }

    auto pointed = pointed_strongly_contractible(X, 0, SearchBudget{opt.map_budget});
    if (pointed.verdict != Verdict::No) {
        ok = false;
        detail += " pointed contractibility at vertex 0 not refuted;";
    }
    if (!is_strongly_contractible(*X)) {
        ok = false;
        detail += " image not recognized as strongly contractible;";
    }
    s.record("pointed-example", ok,
             ok ? "contractible with the stated ordering, yet not pointed contractible at x_1"
                : detail);
}

// ---- property suites --------------------------------------------------

void check_property_suites(Suite& s, const VerifyOptions& opt) {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(opt.seed + 1);

    // random strong homotopies stay ordinarily valid
    {
        std::vector<ImagePtr> pool;
        std::vector<std::vector<VertexMap>> poolmaps;
        for (int n = 1; n <= 5; ++n)
            for (const auto& img : generate_connected_graphs(n)) {
                pool.push_back(share(img));
                poolmaps.push_back(all_continuous_maps(pool.back(), pool.back()));
            }
        // images with isolated vertices stress the pointwise conditions
        pool.push_back(share(DigitalImage(2, {})));
        poolmaps.push_back(all_continuous_maps(pool.back(), pool.back()));
        pool.push_back(share(DigitalImage(3, {{0, 1}})));
        poolmaps.push_back(all_continuous_maps(pool.back(), pool.back()));
        long strong_seen = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            std::size_t pick = rng() % pool.size();
            const auto& maps = poolmaps[pick];
            std::vector<VertexMap> stages{maps[rng() % maps.size()]};
            int k = 1 + static_cast<int>(rng() % 4);
            bool walk = (trial % 2 == 0);
            for (int t = 0; t < k; ++t) {
                if (walk) {
                    auto nb = strong_neighbors(stages.back());
                    stages.push_back(nb[rng() % nb.size()]);
                } else {
                    stages.push_back(maps[rng() % maps.size()]);
                }
            }
            Homotopy H(stages);
            if (is_valid_strong_homotopy(H)) {
                ++strong_seen;
                if (!is_valid_homotopy(H))
                    ok = false;
            }
            // the two validation routes agree on arbitrary stage data
            if (is_valid_homotopy(H) != is_valid_homotopy_stagewise(H) ||
                is_valid_strong_homotopy(H) != is_valid_strong_homotopy_stagewise(H))
                ok = false;
        }
        if (strong_seen < 400) {
            ok = false;
            detail += " too few strong homotopies sampled;";
        }
        if (!ok)
            detail += " strong=>ordinary suite failed;";
    }

    // boundary-of-boundary vanishes on the whole n <= 6 corpus
    if (ok)
        for (int n = 1; n <= 6 && ok; ++n)
            for (const auto& img : generate_connected_graphs(n)) {
                ChainComplex C(share(img));
                for (int q = 0; q <= C.top_dimension() && ok; ++q)
                    if (!(C.boundary_matrix(q) * C.boundary_matrix(q + 1)).is_zero()) {
                        ok = false;
                        detail += " boundary composition nonzero;";
                    }
            }

    // Smith form contracts on random matrices
    if (ok) {
        std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9);
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            IntegerMatrix M(dim(rng), dim(rng));
            for (int i = 0; i < M.rows(); ++i)
                for (int j = 0; j < M.cols(); ++j)
                    M.at(i, j) = entry(rng);
            auto snf = smith_normal_form(M);
            if (!(snf.U * M * snf.V == snf.D) ||
                !(snf.U * snf.Uinv == IntegerMatrix::identity(M.rows())) ||
                !(snf.V * snf.Vinv == IntegerMatrix::identity(M.cols()))) {
                ok = false;
                detail += " SNF transform equation failed;";
            }
            auto d = snf.diagonal();
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (d[i] < 0)
                    ok = false;
                if (i + 1 < d.size() && d[i] != 0 && d[i + 1] % d[i] != 0)
                    ok = false;
                if (d[i] == 0 && i + 1 < d.size() && d[i + 1] != 0)
                    ok = false;
            }
            for (int i = 0; i < snf.D.rows() && ok; ++i)
                for (int j = 0; j < snf.D.cols(); ++j)
                    if (i != j && snf.D.at(i, j) != 0) {
                        ok = false;
                        detail += " SNF not diagonal;";
                        break;
                    }
        }
    }

    // punctuated homotopies are strong: exhaustive walks on tiny images
    if (ok) {
        std::vector<DigitalImage> tiny;
        for (int n = 1; n <= 3; ++n)
            for (const auto& img : generate_connected_graphs(n))
                tiny.push_back(img);
        tiny.push_back(DigitalImage(2, {})); // the edgeless pair, for isolated vertices
        for (const auto& img : tiny) {
            ImagePtr X = share(img);
            auto maps = all_continuous_maps(X, X);
            for (const auto& f0 : maps) {
                auto nb1 = homotopy_neighbors(f0);
                for (const auto& f1 : nb1) {
                    auto nb2 = homotopy_neighbors(f1);
                    for (const auto& f2 : nb2) {
                        Homotopy H(std::vector<VertexMap>{f0, f1, f2});
                        if (is_punctuated(H) && !is_valid_strong_homotopy(H)) {
                            ok = false;
                            detail += " punctuated homotopy not strong;";
                        }
                    }
                }
            }
        }
    }

    // graph6 round trip across the n <= 7 corpus
    if (ok) {
        long count = 0;
        for (int n = 1; n <= 7 && ok; ++n)
            for (const auto& img : generate_connected_graphs(n)) {
                ++count;
                if (!(parse_graph6(write_graph6(img)) == img)) {
                    ok = false;
                    detail += " graph6 round trip failed;";
                }
            }
        if (count != 996) {
            ok = false;
            detail += " corpus size unexpected;";
        }
    }

    s.record("property-suites", ok, ok ? "all property suites passed" : detail);
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    Suite s;
    check_census_d(s, options);
    check_census_c(s, options);
    check_small_survivors(s, options);
    check_cycle_homology(s, options);
    check_cycle_rigidity(s, options);
    check_prism_identity(s, options);
    check_strong_invariance(s, options);
    check_cycle_selfmaps(s, options);
    check_pointed_example(s, options);
    check_property_suites(s, options);
    return s.results;
}

} // namespace digitop
