#include <catch2/catch_amalgamated.hpp>
#include <ckh/colored.hpp>
#include <random>

using namespace ckh;

// brute-force lattice-path oracle: number of +-1 sequences of length n with
// all partial sums >= 0 and final sum m
static long long dyck_count(int n, int m) {
    long long total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int s = 0;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            s += (mask >> i & 1) ? 1 : -1;
            if (s < 0) ok = false;
        }
        if (ok && s == m) ++total;
    }
    return total;
}

TEST_CASE("Catalan triangle") {
    CHECK(catalan_T(2, 0) == 1);
    CHECK(catalan_T(2, 2) == 1);
    CHECK(catalan_T(4, 0) == 2);
    CHECK(catalan_T(4, 2) == 3);
    CHECK(catalan_T(4, 4) == 1);
    for (int n = 0; n <= 20; ++n) CHECK(catalan_T(n, n) == 1);
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= n; ++m) {
            INFO("n=" << n << " m=" << m);
            CHECK(catalan_T(n, m) == dyck_count(n, m));
        }
}

static Laurent2 qpow(int i) {  // (q + q^{-1})^i
    Laurent2 r(1);
    for (int j = 0; j < i; ++j)
        r = r * (Laurent2::mono(0, 1) + Laurent2::mono(0, -1));
    return r;
}

TEST_CASE("cable formula and its Catalan inverse") {
    auto unknot_P = [](const ColorVector& m) { return qpow(m[0]); };
    // single term at n = 1
    CHECK(colored_formula(unknot_P, {1}) == qpow(1));
    // unknot examples
    Laurent2 n2 = Laurent2::mono(0, 2) + Laurent2(1) + Laurent2::mono(0, -2);
    CHECK(colored_formula(unknot_P, {2}) == n2);
    Laurent2 n4 = n2 + Laurent2::mono(0, 4) + Laurent2::mono(0, -4);
    CHECK(colored_formula(unknot_P, {4}) == n4);
    CHECK(inverse_formula([&](const ColorVector& m) {
        return colored_formula(unknot_P, m);
    }, {2}) == qpow(2));

    // round trips on random nonnegative inputs, n <= 8
    std::mt19937 rng(20240817);
    auto rand_poly = [&]() {
        Laurent2 p;
        for (int i = 0; i < 6; ++i) {
            int te = (int)(rng() % 7) - 3, qe = (int)(rng() % 11) - 5;
            p += Laurent2::mono(te, qe, 1 + rng() % 5);
        }
        return p;
    };
    for (int n = 0; n <= 8; ++n) {
        std::map<ColorVector, Laurent2> P;
        for (int m = n; m >= 0; m -= 2) P[{m}] = rand_poly();
        auto lookup = [&](const ColorVector& m) { return P.at(m); };
        std::map<ColorVector, Laurent2> col;
        for (int m = n; m >= 0; m -= 2)
            col[{m}] = colored_formula(lookup, {m}, false);
        CHECK(inverse_formula([&](const ColorVector& m) { return col.at(m); },
                              {n}) == P.at({n}));
    }
    // two-component round trip
    {
        std::map<ColorVector, Laurent2> P;
        for (int a = 3; a >= 0; --a)
            for (int b = 2; b >= 0; --b) P[{a, b}] = rand_poly();
        auto lookup = [&](const ColorVector& m) { return P.at(m); };
        auto col = [&](const ColorVector& m) {
            return colored_formula(lookup, m, false);
        };
        CHECK(inverse_formula(col, {3, 2}) == P.at({3, 2}));
    }
    // negative-coefficient hard assertion fires on invalid input
    auto bad = [](const ColorVector& m) { return Laurent2(m[0] == 0 ? 2 : 1); };
    CHECK_THROWS_AS(colored_formula(bad, {2}), std::logic_error);
}

TEST_CASE("colored superpolynomial of the zero-framed unknot") {
    auto u = unknot_diagram();
    for (int n = 0; n <= 6; ++n) {
        INFO("n = " << n);
        auto r = colored_superpoly(u, {0}, {n});
        CHECK(r.poly == Laurent2::from_q(quantum_int(n + 1)));
    }
}

TEST_CASE("colored superpolynomial degenerate colors") {
    auto tre = from_braid_word("{1,1,1}");
    // n = 0: empty cable, constant 1
    CHECK(colored_superpoly(tre, {3}, {0}).poly == Laurent2(1));
    // n = 1 at the diagram's own framing: plain Khovanov homology
    CHECK(colored_superpoly(tre, {3}, {1}).poly == kh(tre).p);
}

TEST_CASE("colored superpolynomial t=-1 specializes to colored Jones") {
    auto tre = from_braid_word("{1,1,1}");
    for (int n : {1, 2}) {
        INFO("n = " << n);
        auto r = colored_superpoly(tre, {3}, {n});
        CHECK(r.poly.at_t(-1) == colored_jones(tre, n));
    }
    auto f8 = from_braid_word("{1,-2,1,-2}");
    auto r = colored_superpoly(f8, {0}, {2});
    CHECK(r.poly.at_t(-1) == colored_jones(f8, 2));
}

TEST_CASE("colored mirror duality") {
    for (auto& w : {"{1,1,1}", "{1,-2,1,-2}"}) {
        auto d = from_braid_word(parse_braid(w, 0));
        for (int f : {0, 2}) {
            INFO("word " << w << " framing " << f);
            auto a = colored_superpoly(d, {f}, {2});
            auto b = colored_superpoly(d.mirror(), {-f}, {2});
            CHECK(b.poly == a.poly.mirrored());
        }
    }
}
