#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "digitop/canonical.hpp"
#include "digitop/catalog.hpp"
#include "digitop/errors.hpp"
#include "digitop/graph6.hpp"
#include "digitop/image.hpp"
#include "digitop/map.hpp"
#include "oracles.hpp"

using namespace digitop;

TEST_CASE("image construction enforces the adjacency invariants") {
    DigitalImage g(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(1, 1));
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});

    CHECK_THROWS_AS(DigitalImage(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(DigitalImage(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(DigitalImage(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("interval images are paths") {
    DigitalImage p0 = interval_image(0, 0);
    CHECK(p0.size() == 1);
    CHECK(p0.edge_count() == 0);

    DigitalImage p1 = interval_image(0, 1);
    CHECK(p1.size() == 2);
    CHECK(p1.edge_count() == 1);

    DigitalImage p4 = interval_image(0, 4);
    CHECK(p4.size() == 5);
    CHECK(p4.edge_count() == 4);
    CHECK_FALSE(p4.adjacent(0, 2));

    CHECK_THROWS_AS(interval_image(1, 0), std::invalid_argument);
}

TEST_CASE("cycle images") {
    DigitalImage c4 = cycle_image(4);
    for (int i = 0; i < 4; ++i)
        CHECK(c4.degree(i) == 2);
    CHECK(c4.adjacent(0, 3));

    CHECK(is_isomorphic(cycle_image(3), complete_image(3)));
    CHECK_FALSE(cycle_image(6).adjacent(0, 3));
    CHECK_THROWS_AS(cycle_image(2), std::invalid_argument);
}

TEST_CASE("normal products recover 4- and 8-adjacency") {
    DigitalImage unit = interval_image(0, 1);
    CHECK(is_isomorphic(product_image({unit, unit}, 1), cycle_image(4)));
    CHECK(is_isomorphic(product_image({unit, unit}, 2), complete_image(4)));

    DigitalImage pt = interval_image(0, 0);
    DigitalImage pp = product_image({pt, pt}, 2);
    CHECK(pp.size() == 1);
    CHECK(pp.edge_count() == 0);

    CHECK_THROWS_AS(product_image({unit, unit}, 0), std::invalid_argument);
    CHECK_THROWS_AS(product_image({unit, unit}, 3), std::invalid_argument);
}

TEST_CASE("NP_1 edges are NP_2 edges, and NP_u=1 is the cartesian product rule") {
    std::vector<DigitalImage> factor_pool{interval_image(0, 1), interval_image(0, 2),
                                          cycle_image(3)};
    for (const auto& a : factor_pool)
        for (const auto& b : factor_pool) {
            DigitalImage p1 = product_image({a, b}, 1);
            DigitalImage p2 = product_image({a, b}, 2);
            for (auto [u, v] : p1.edges())
                CHECK(p2.adjacent(u, v));
            // direct cartesian-product evaluation over all tuple pairs
            int nb = b.size();
            for (int x = 0; x < p1.size(); ++x)
                for (int y = 0; y < p1.size(); ++y) {
                    if (x == y)
                        continue;
                    int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
                    bool want = (xa == ya && b.adjacent(xb, yb)) ||
                                (xb == yb && a.adjacent(xa, ya));
                    CHECK(p1.adjacent(x, y) == want);
                }
        }

    // u = #factors on two-point factors gives a complete image
    DigitalImage unit = interval_image(0, 1);
    DigitalImage cube = product_image({unit, unit, unit}, 3);
    CHECK(cube.edge_count() == 8L * 7 / 2);
    DigitalImage tess = product_image({unit, unit, unit, unit}, 4);
    CHECK(tess.edge_count() == 16L * 15 / 2);
}

TEST_CASE("NP_1 products of three and four factors follow the cartesian rule") {
    std::vector<std::vector<DigitalImage>> factor_lists{
        {interval_image(0, 1), interval_image(0, 2), cycle_image(3)},
        {interval_image(0, 2), interval_image(0, 1), interval_image(0, 1)},
        {interval_image(0, 1), interval_image(0, 1), interval_image(0, 1),
         interval_image(0, 2)}};
    for (const auto& fs : factor_lists) {
        DigitalImage p = product_image(fs, 1);
        int k = static_cast<int>(fs.size());
        auto decode = [&](int idx) {
            std::vector<int> t(k);
            for (int i = k - 1; i >= 0; --i) {
                t[i] = idx % fs[i].size();
                idx /= fs[i].size();
            }
            return t;
        };
        for (int a = 0; a < p.size(); ++a)
            for (int b = a + 1; b < p.size(); ++b) {
                auto ta = decode(a), tb = decode(b);
                int diff = -1;
                bool cart = true;
                for (int i = 0; i < k && cart; ++i)
                    if (ta[i] != tb[i]) {
                        if (diff >= 0 || !fs[i].adjacent(ta[i], tb[i]))
                            cart = false;
                        else
                            diff = i;
                    }
                cart = cart && diff >= 0;
                CHECK(p.adjacent(a, b) == cart);
            }
    }
}

TEST_CASE("closed neighborhoods") {
    DigitalImage c4 = cycle_image(4);
    CHECK(closed_neighborhood(c4, 0) == std::vector<int>{0, 1, 3});
    DigitalImage pt = interval_image(0, 0);
    CHECK(closed_neighborhood(pt, 0) == std::vector<int>{0});
    DigitalImage k4 = complete_image(4);
    CHECK(closed_neighborhood(k4, 2) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("continuity of maps") {
    ImagePtr c4 = share(cycle_image(4));
    CHECK(is_continuous(identity_map(c4)));

    ImagePtr c5 = share(cycle_image(5));
    CHECK(is_continuous(constant_map(c5, c5, 0)));

    ImagePtr i2 = share(interval_image(0, 2));
    VertexMap f(i2, i2, {0, 2, 2});
    CHECK_FALSE(is_continuous(f)); // edge 0~1 lands on the non-adjacent pair 0,2
}

TEST_CASE("identity and composition") {
    ImagePtr c5 = share(cycle_image(5));
    VertexMap id = identity_map(c5);
    VertexMap r1(c5, c5, {1, 2, 3, 4, 0});
    CHECK(compose(id, r1) == r1);
    CHECK(compose(r1, id) == r1);
    VertexMap r2(c5, c5, {2, 3, 4, 0, 1});
    CHECK(compose(r1, r1) == r2);

    ImagePtr i1 = share(interval_image(0, 1));
    CHECK_THROWS_AS(compose(VertexMap(i1, i1, {0, 1}), r1), std::invalid_argument);
}

TEST_CASE("composition of continuous maps is continuous") {
    std::mt19937_64 rng(7);
    std::vector<ImagePtr> pool{share(cycle_image(4)), share(cycle_image(5)),
                               share(interval_image(0, 3)), share(complete_image(3))};
    for (int trial = 0; trial < 200; ++trial) {
        const ImagePtr& a = pool[rng() % pool.size()];
        const ImagePtr& b = pool[rng() % pool.size()];
        const ImagePtr& c = pool[rng() % pool.size()];
        auto fs = all_continuous_maps(a, b);
        auto gs = all_continuous_maps(b, c);
        const VertexMap& f = fs[rng() % fs.size()];
        const VertexMap& g = gs[rng() % gs.size()];
        CHECK(is_continuous(compose(g, f)));
    }
}

TEST_CASE("canonical forms are relabeling invariants") {
    // two orderings of the 4-cycle
    DigitalImage a(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    DigitalImage b(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    CHECK(canonical_form(a) == canonical_form(b));

    DigitalImage path4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(canonical_form(a) != canonical_form(path4));
    CHECK_FALSE(is_isomorphic(a, path4));
}

TEST_CASE("canonical form matches the exhaustive-permutation oracle on all graphs up to 6") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                slots.emplace_back(i, j);
        // random sample of edge sets plus random relabelings
        for (int trial = 0; trial < 120; ++trial) {
            std::uint64_t mask = rng() & ((std::uint64_t{1} << slots.size()) - 1);
            std::vector<std::pair<int, int>> edges;
            for (std::size_t t = 0; t < slots.size(); ++t)
                if ((mask >> t) & 1)
                    edges.push_back(slots[t]);
            DigitalImage x(n, edges);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int rep = 0; rep < 20; ++rep) {
                std::shuffle(perm.begin(), perm.end(), rng);
                DigitalImage y = relabel_image(x, perm);
                CHECK(canonical_form(x) == canonical_form(y));
                CHECK(oracles::brute_isomorphic(x, y));
            }
            // cross-check equivalence classes against the oracle
            std::shuffle(perm.begin(), perm.end(), rng);
            DigitalImage z(n, edges.empty() ? std::vector<std::pair<int, int>>{}
                                            : std::vector<std::pair<int, int>>(
                                                  edges.begin(), edges.end() - 1));
            CHECK(is_isomorphic(x, z) == oracles::brute_isomorphic(x, z));
        }
    }
}

TEST_CASE("canonical form is invariant on every graph class up to 6 vertices") {
    // one representative per isomorphism class, 20 shuffles each
    std::mt19937_64 rng(13);
    long classes = 0;
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t rows[11];
        for (std::uint64_t code : digitop::detail::enumerate_graph_codes(n)) {
            digitop::detail::rows_from_code(n, code, rows);
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if ((rows[i] >> j) & 1)
                        edges.emplace_back(i, j);
            DigitalImage x(n, edges);
            ++classes;
            std::string form = canonical_form(x);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int rep = 0; rep < 20; ++rep) {
                std::shuffle(perm.begin(), perm.end(), rng);
                CHECK(canonical_form(relabel_image(x, perm)) == form);
            }
        }
    }
    CHECK(classes == 1 + 2 + 4 + 11 + 34 + 156);
}

TEST_CASE("graph6 round trip and reference encodings") {
    // frozen against an independent reference encoder
    CHECK(write_graph6(interval_image(0, 0)) == "@");
    CHECK(write_graph6(complete_image(2)) == "A_");
    CHECK(write_graph6(cycle_image(6)) == "EhEG");
    CHECK(write_graph6(cycle_image(4)) == "Cl");
    CHECK(write_graph6(complete_image(4)) == "C~");
    CHECK(write_graph6(interval_image(0, 3)) == "Ch");

    CHECK(parse_graph6("@") == interval_image(0, 0));
    CHECK(parse_graph6("A_") == complete_image(2));

    DigitalImage c6 = cycle_image(6);
    CHECK(parse_graph6(write_graph6(c6)) == c6);
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("A"), ParseError);    // truncated
    CHECK_THROWS_AS(parse_graph6("A_x"), ParseError);  // overlong
    CHECK_THROWS_AS(parse_graph6("A "), ParseError);   // byte below 63
    CHECK_THROWS_AS(parse_graph6("Ao"), ParseError);   // nonzero padding bits

    try {
        parse_graph6("A ");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
}

TEST_CASE("adjacency-list format") {
    DigitalImage c4 = cycle_image(4);
    std::string text = write_adjacency_list(c4);
    CHECK(parse_adjacency_list(text) == c4);

    CHECK(parse_adjacency_list("# comment\n3\n0 1\n1 2 # chord\n") ==
          interval_image(0, 2));
    CHECK_THROWS_AS(parse_adjacency_list("2\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_adjacency_list("2\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_adjacency_list(""), ParseError);
}

TEST_CASE("induced subimages carry translation tables") {
    DigitalImage c5 = cycle_image(5);
    auto sub = induced_subimage(c5, {0, 1, 2, 4});
    CHECK(sub.image.size() == 4);
    CHECK(sub.old_to_new[3] == -1);
    CHECK(sub.image.adjacent(sub.old_to_new[0], sub.old_to_new[1]));
    CHECK(sub.image.adjacent(sub.old_to_new[0], sub.old_to_new[4]));
    CHECK_FALSE(sub.image.adjacent(sub.old_to_new[2], sub.old_to_new[4]));
}

TEST_CASE("vertex map totality") {
    ImagePtr c4 = share(cycle_image(4));
    CHECK_THROWS_AS(VertexMap(c4, c4, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(VertexMap(c4, c4, {0, 1, 2, 4}), std::invalid_argument);
}
