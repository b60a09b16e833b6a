#include <catch2/catch_amalgamated.hpp>
#include <ckh/observations.hpp>

using namespace ckh;

TEST_CASE("shift functions") {
    CHECK(o_fn(2) == 6);
    CHECK(o_fn(3) == 9);
    CHECK(o_fn(4) == 16);
    CHECK(ell_fn(4) == 7);
    CHECK(ell_fn(5) == 5);
    for (int n = 1; n <= 20; ++n) CHECK(ell_fn(n) == o_fn(n) - o_fn(n - 1));
}

TEST_CASE("pochhammer products") {
    Laurent2 a = Laurent2::mono(1, -4);  // t q^-4
    Laurent2 Q = Laurent2::mono(-2, 2);  // q^2 t^-2
    CHECK(q_pochhammer(a, Q, 0) == Laurent2(1));
    CHECK(q_pochhammer(a, Q, 1) == Laurent2(1) - a);
    CHECK(q_pochhammer(a, Q, 2) == (Laurent2(1) - a) * (Laurent2(1) - a * Q));
}

TEST_CASE("one-framed unknot recursion and support boxes") {
    auto rep = verify_recursion(4);
    CHECK(rep.calibration_ok);
    CHECK(rep.tribonacci_ok);
    REQUIRE(rep.P.size() == 5);
    CHECK(rep.P[0] == Laurent2(1));
    CHECK(rep.dims == std::vector<long long>{1, 2, 3, 6, 11});
    for (auto& e : rep.entries) {
        INFO("n = " << e.n);
        CHECK(e.recursion_ok);
        CHECK(e.box_ok);
    }
    CHECK(rep.all_ok);

    SECTION("torus knot decomposition") {
        for (int n : {2, 3, 4}) {
            INFO("n = " << n);
            CHECK(torus_decomposition_check(n, rep.P));
        }
    }
}

TEST_CASE("truncated series for the stabilized colored homology") {
    auto rep = verify_recursion(4);
    auto P = rep.P;
    extend_by_recursion(P, 7);
    for (int par : {0, 1}) {
        INFO("parity " << par);
        // A_n = q^{-2n-par} P_{2n+par}(t, q^{-1})
        auto stab = [&](int n) {
            Laurent2 r;
            for (auto& [e, c] : P[2 * n + par].c)
                r.c[{e.first, -e.second - 2 * n - par}] = c;
            return r;
        };
        Laurent2 A2 = stab(2), A3 = stab(3);
        int tmin = 0, qmin = 0;
        std::map<std::pair<int, int>, long long> stable;
        for (auto& [e, c] : A2.c)
            if (A3.coeff(e.first, e.second) == c) {
                stable[e] = c;
                tmin = std::min(tmin, e.first);
                qmin = std::min(qmin, e.second);
            }
        REQUIRE(stable.size() >= 8);
        auto S = lasagna_series(par, tmin, qmin);
        for (auto& [e, c] : stable) {
            INFO("(t^" << e.first << ", q^" << e.second << ")");
            CHECK(S.coeff(e.first, e.second) == c);
            CHECK(c > 0);
        }
        // constant term of the series is 1
        CHECK(S.coeff(0, 0) == 1);
    }
}

TEST_CASE("framing sweep on the figure-eight") {
    auto d = from_braid_word("{1,-2,1,-2}");
    auto r = framing_sweep(d, 2, -2, 2);
    CHECK(r.minimizers == std::vector<int>{-1, 0, 1});
    // amphichiral: dimension map symmetric under negating the framing
    for (auto& [k, dim] : r.dims) CHECK(dim == r.dims.at(-k));
}
