#include <catch2/catch_amalgamated.hpp>
#include <ckh/cube.hpp>
#include <ckh/bracket.hpp>
#include <ckh/chain.hpp>
#include <ckh/diagram.hpp>

using namespace ckh;

static Superpolynomial kh_cube(const LinkDiagram& d) {
    CubeComplex cube(d);
    cube.C.check_d_squared();
    Reduction red(cube.C, false);
    return red.poly();
}

TEST_CASE("unknot homology") {
    LinkDiagram u;
    u.narcs = 1;
    u.compute_components();
    auto p = kh_cube(u);
    CHECK(p.p == Laurent2::mono(0, 1) + Laurent2::mono(0, -1));
}

TEST_CASE("kinked unknots: RI invariance of the unframed theory") {
    LinkDiagram u;
    u.narcs = 1;
    u.compute_components();
    Laurent2 expect = Laurent2::mono(0, 1) + Laurent2::mono(0, -1);
    CHECK(kh_cube(u.with_framing({1})).p == expect);
    CHECK(kh_cube(u.with_framing({-1})).p == expect);
    CHECK(kh_cube(u.with_framing({2})).p == expect);
    CHECK(kh_cube(u.with_framing({-2})).p == expect);
    CHECK(kh_cube(u.with_framing({3})).p == expect);
}

TEST_CASE("trefoil homology fixes the grading convention") {
    auto t = from_braid_word("{1,1,1}");
    auto p = kh_cube(t);
    Laurent2 expect = Laurent2::mono(0, 1) + Laurent2::mono(0, 3) +
                      Laurent2::mono(2, 5) + Laurent2::mono(3, 9);
    CHECK(p.p == expect);
    // and the mirror
    auto pm = kh_cube(t.mirror());
    CHECK(pm.p == expect.mirrored());
}

TEST_CASE("figure-eight homology") {
    auto d = from_braid_word("{1,-2,1,-2}");
    auto p = kh_cube(d);
    Laurent2 expect = Laurent2::mono(-2, -5) + Laurent2::mono(-1, -1) +
                      Laurent2::mono(0, -1) + Laurent2::mono(0, 1) +
                      Laurent2::mono(1, 1) + Laurent2::mono(2, 5);
    CHECK(p.p == expect);
    CHECK(p.p == p.p.mirrored());  // amphichiral
}

TEST_CASE("Hopf link homology") {
    auto h = from_braid_word("{1,1}");
    auto p = kh_cube(h);
    // positive Hopf link in these conventions
    Laurent2 expect = Laurent2::mono(0, 0) + Laurent2::mono(0, 2) +
                      Laurent2::mono(2, 4) + Laurent2::mono(2, 6);
    CHECK(p.p == expect);
}

TEST_CASE("graded Euler characteristic matches the state sum") {
    for (auto word : {"{1,1,1}", "{1,-2,1,-2}", "{1,1}", "{1,1,1,1,1}",
                      "{1,-1}", "{1,1,-2,1,-2}"}) {
        auto d = from_braid_word(word);
        CHECK(kh_cube(d).graded_euler() == jones_state_sum(d));
    }
    LinkDiagram u;
    u.narcs = 1;
    u.compute_components();
    for (int f : {-2, -1, 1, 2})
        CHECK(kh_cube(u.with_framing({f})).graded_euler() ==
              jones_state_sum(u.with_framing({f})));
}

TEST_CASE("RI/RII invariance on braid-level perturbations") {
    auto t = kh_cube(from_braid_word("{1,1,1}"));
    // Markov-stabilized and RII-padded versions of the trefoil
    CHECK(kh_cube(from_braid_word(parse_braid("{1,1,1,2}", 3))).p == t.p);
    CHECK(kh_cube(from_braid_word(parse_braid("{1,1,1,-2}", 3))).p == t.p);
    // {1,1,2,-2,1} closes to trefoil plus a split unknot
    CHECK(kh_cube(from_braid_word(parse_braid("{1,1,2,-2,1}", 3))).p ==
          t.p * (Laurent2::mono(0, 1) + Laurent2::mono(0, -1)));
    // R3: slide braid relation
    CHECK(kh_cube(from_braid_word(parse_braid("{1,2,1}", 3))).p ==
          kh_cube(from_braid_word(parse_braid("{2,1,2}", 3))).p);
}

TEST_CASE("2-cable of the unknot: two-circle homology") {
    LinkDiagram u;
    u.narcs = 1;
    u.compute_components();
    auto c = cable(u, {2});
    auto p = kh_cube(c.diagram);
    Laurent2 v = Laurent2::mono(0, 1) + Laurent2::mono(0, -1);
    CHECK(p.p == v * v);
}

TEST_CASE("trefoil cables have consistent Euler characteristic") {
    auto t = from_braid_word("{1,1,1}");
    auto tc = cable(t, {2});
    auto p = kh_cube(tc.diagram);
    CHECK(p.graded_euler() == jones_state_sum(tc.diagram));
}
