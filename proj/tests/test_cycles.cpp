#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "digitop/cycles.hpp"
#include "digitop/homology.hpp"
#include "digitop/homotopy.hpp"

using namespace digitop;
namespace cy = digitop::cycles;

TEST_CASE("rotations, flips, constants") {
    ImagePtr c5 = share(cycle_image(5));

    CHECK(cy::rotation_map(c5, 0) == identity_map(c5));
    CHECK(cy::rotation_map(5, 7) == cy::rotation_map(c5, 2));

    VertexMap l = cy::flip_map(c5);
    CHECK(compose(l, l) == identity_map(c5));
    CHECK(compose(cy::rotation_map(c5, 1), cy::rotation_map(c5, 4)) == identity_map(c5));

    CHECK(is_continuous(cy::rotation_map(c5, 3)));
    CHECK(is_continuous(l));
    CHECK(is_continuous(cy::constant_map(c5, 2)));

    CHECK_THROWS_AS(cy::rotation_map(3, 1), std::invalid_argument);
    ImagePtr notcycle = share(interval_image(0, 4));
    CHECK_THROWS_AS(cy::flip_map(notcycle), std::invalid_argument);
}

TEST_CASE("classification of cycle selfmaps") {
    ImagePtr c5 = share(cycle_image(5));
    auto r2 = cy::classify_selfmap(cy::rotation_map(c5, 2));
    CHECK(r2.tag == cy::CycleClass::Tag::Identity);
    CHECK(r2.parameter == 2);

    ImagePtr c6 = share(cycle_image(6));
    auto c0 = cy::classify_selfmap(cy::constant_map(c6, 0));
    CHECK(c0.tag == cy::CycleClass::Tag::Constant);

    auto rl = cy::classify_selfmap(compose(cy::rotation_map(c5, 1), cy::flip_map(c5)));
    CHECK(rl.tag == cy::CycleClass::Tag::Flip);
    CHECK(rl.parameter == 1);

    // n = 4 is outside the classification theorem
    ImagePtr c4 = share(cycle_image(4));
    CHECK_THROWS_AS(cy::classify_selfmap(identity_map(c4)), std::invalid_argument);
}

TEST_CASE("classification agrees with literal equality") {
    for (int n : {5, 6}) {
        ImagePtr cn = share(cycle_image(n));
        for (const auto& f : all_continuous_maps(cn, cn)) {
            auto cls = cy::classify_selfmap(f);
            if (cls.tag == cy::CycleClass::Tag::Identity)
                for (int i = 0; i < n; ++i)
                    CHECK(f(i) == (i + cls.parameter) % n);
            if (cls.tag == cy::CycleClass::Tag::Flip)
                for (int i = 0; i < n; ++i)
                    CHECK(f(i) == ((cls.parameter - i) % n + n) % n);
        }
    }
}

TEST_CASE("expected induced homomorphisms") {
    ImagePtr c5 = share(cycle_image(5));
    CHECK(cy::expected_induced(cy::rotation_map(c5, 3), 1).scalar == 1);
    CHECK(cy::expected_induced(cy::flip_map(c5), 1).scalar == -1);
    CHECK(cy::expected_induced(cy::constant_map(c5, 0), 1).scalar == 0);
    CHECK(cy::expected_induced(cy::flip_map(c5), 0).scalar == 1);
    CHECK(cy::expected_induced(cy::flip_map(c5), 2).scalar == 0);
}

TEST_CASE("expected matches computed induced maps") {
    for (int n : {5, 6}) {
        ImagePtr cn = share(cycle_image(n));
        ChainComplex C(cn);
        std::vector<VertexMap> sample{
            identity_map(cn),           cy::rotation_map(cn, 1), cy::rotation_map(cn, n - 1),
            cy::flip_map(cn),           cy::constant_map(cn, 2),
            compose(cy::rotation_map(cn, 2), cy::flip_map(cn))};
        for (const auto& f : sample) {
            auto h1 = induced_homology_map(C, C, f, 1);
            CHECK(to_int64(h1.matrix.at(0, 0)) == cy::expected_induced(f, 1).scalar);
            auto h0 = induced_homology_map(C, C, f, 0);
            CHECK(to_int64(h0.matrix.at(0, 0)) == 1);
        }
    }
}

TEST_CASE("selfmap enumeration count is stable against the unpruned filter") {
    // no closed form asserted; the pruned enumerator must agree with a
    // plain filter of all n^n candidates
    for (int n : {4, 5}) {
        ImagePtr cn = share(cycle_image(n));
        auto pruned = all_continuous_maps(cn, cn);
        long plain = 0;
        std::vector<int> values(n, 0);
        for (;;) {
            VertexMap f(cn, cn, values);
            if (is_continuous(f))
                ++plain;
            int i = n - 1;
            while (i >= 0 && ++values[i] == n)
                values[i--] = 0;
            if (i < 0)
                break;
        }
        CHECK(static_cast<long>(pruned.size()) == plain);
    }
}

TEST_CASE("constant-class maps are strongly homotopic to a constant") {
    ImagePtr c5 = share(cycle_image(5));
    auto maps = all_continuous_maps(c5, c5);
    VertexMap c0 = cy::constant_map(c5, 0);
    for (const auto& f : maps) {
        auto cls = cy::classify_selfmap(f);
        if (cls.tag != cy::CycleClass::Tag::Constant)
            continue;
        auto res = strongly_homotopic(f, c0);
        REQUIRE(res.verdict != Verdict::Undecided);
        CHECK(res.verdict == Verdict::Yes);
    }
}
