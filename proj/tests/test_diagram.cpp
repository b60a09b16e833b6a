#include <catch2/catch_amalgamated.hpp>
#include <ckh/diagram.hpp>

using namespace ckh;

TEST_CASE("braid parsing") {
    auto w = parse_braid("{1,1,1}");
    CHECK(w.gens == std::vector<int>{1, 1, 1});
    CHECK(w.strands == 2);
    auto w2 = parse_braid("{1,-2,1,-2}");
    CHECK(w2.strands == 3);
    CHECK_THROWS(parse_braid("{0,1}"));
}

TEST_CASE("trefoil closure basics") {
    auto d = from_braid_word("{1,1,1}");
    CHECK(d.crossings.size() == 3);
    CHECK(d.components.size() == 1);
    CHECK(d.writhe() == 3);
    CHECK(d.framing == std::vector<int>{3});
    // every arc appears exactly twice as an in and twice... once in, once out
    std::vector<int> ins(d.narcs, 0), outs(d.narcs, 0);
    for (auto& x : d.crossings) {
        ins[x.in_under]++; ins[x.in_over]++;
        outs[x.out_under]++; outs[x.out_over]++;
    }
    for (int a = 0; a < d.narcs; ++a) {
        CHECK(ins[a] == 1);
        CHECK(outs[a] == 1);
    }
}

TEST_CASE("cancelling pair and empty word") {
    // trivial permutation: the closure is a 2-component unlink drawn with
    // one Reidemeister-II pair
    auto d = from_braid_word(parse_braid("{1,-1}", 2));
    CHECK(d.components.size() == 2);
    CHECK(d.writhe() == 0);
    auto u = from_braid_word(parse_braid("", 1));
    CHECK(u.crossings.empty());
    CHECK(u.components.size() == 1);
    CHECK(u.narcs == 1);
}

TEST_CASE("figure-eight closure") {
    auto d = from_braid_word("{1,-2,1,-2}");
    CHECK(d.components.size() == 1);
    CHECK(d.writhe() == 0);
}

TEST_CASE("mirror is an involution and flips writhe") {
    auto d = from_braid_word("{1,1,1}");
    auto m = d.mirror();
    CHECK(m.writhe() == -3);
    CHECK(m.mirror().canonical_key() == d.canonical_key());
}

TEST_CASE("framing by kinks") {
    LinkDiagram u;
    u.narcs = 1;
    u.compute_components();  // 0-crossing unknot
    CHECK(u.framing == std::vector<int>{0});
    auto k1 = u.with_framing({1});
    CHECK(k1.crossings.size() == 1);
    CHECK(k1.writhe() == 1);
    CHECK(k1.framing == std::vector<int>{1});
    auto km2 = u.with_framing({-2});
    CHECK(km2.crossings.size() == 2);
    CHECK(km2.writhe() == -2);
    CHECK(km2.framing == std::vector<int>{-2});
    auto same = k1.with_framing({1});
    CHECK(same.canonical_key() == k1.canonical_key());
    // framing on a knot with crossings
    auto t = from_braid_word("{1,1,1}");
    auto t0 = t.with_framing({0});
    CHECK(t0.writhe() == 0);
    CHECK(t0.crossings.size() == 6);
    CHECK(t0.framing == std::vector<int>{0});
}

TEST_CASE("PD code parsing") {
    auto d = from_pd_code("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]");
    CHECK(d.crossings.size() == 3);
    CHECK(d.components.size() == 1);
    CHECK(std::abs(d.writhe()) == 3);
    CHECK_THROWS(from_pd_code("PD[]"));
}

TEST_CASE("cable combinatorics") {
    auto u = from_braid_word(parse_braid("", 1));
    auto c2 = cable(u, {2});
    CHECK(c2.diagram.components.size() == 2);
    CHECK(c2.diagram.crossings.empty());

    auto t = from_braid_word("{1,1,1}");
    auto c1 = cable(t, {1});
    CHECK(c1.diagram.crossings.size() == 3);
    CHECK(c1.diagram.writhe() == 3);

    auto tc = cable(t, {2});
    CHECK(tc.diagram.crossings.size() == 12);  // n^2 per crossing
    CHECK(tc.diagram.components.size() == 2);
    // alternating orientations: each original + crossing gives grid signs
    // (+,-,-,+); total writhe 0
    CHECK(tc.diagram.writhe() == 0);
    int plus = tc.diagram.n_plus();
    CHECK(plus == 6);

    auto c3 = cable(t, {3});
    CHECK(c3.diagram.crossings.size() == 27);
    CHECK(c3.diagram.components.size() == 3);

    // every arc used exactly once as in / once as out
    for (auto* d : {&tc.diagram, &c3.diagram}) {
        std::vector<int> ins(d->narcs, 0), outs(d->narcs, 0);
        for (auto& x : d->crossings) {
            ins[x.in_under]++; ins[x.in_over]++;
            outs[x.out_under]++; outs[x.out_over]++;
        }
        for (int a = 0; a < d->narcs; ++a) {
            CHECK(ins[a] == 1);
            CHECK(outs[a] == 1);
        }
    }

    // zero color deletes the component
    auto c0 = cable(t, {0});
    CHECK(c0.diagram.crossings.empty());
    CHECK(c0.diagram.components.empty());
}

TEST_CASE("cable of a link: component counts and color vector") {
    auto hopf = from_braid_word("{1,1}");
    REQUIRE(hopf.components.size() == 2);
    auto c = cable(hopf, {2, 3});
    CHECK(c.diagram.components.size() == 5);
    CHECK(c.diagram.crossings.size() == 2 * 2 * 3);
    auto cz = cable(hopf, {2, 0});
    CHECK(cz.diagram.components.size() == 2);
    CHECK(cz.diagram.crossings.empty());  // unknot 2-cable, 0 framing
}
