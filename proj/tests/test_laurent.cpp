#include <catch2/catch_amalgamated.hpp>
#include <ckh/laurent.hpp>
#include <ckh/superpoly.hpp>

using namespace ckh;

TEST_CASE("Laurent arithmetic") {
    Laurent a = Laurent::mono(1) + Laurent::mono(-1);  // q + 1/q
    CHECK(a == quantum_int(2));
    CHECK((a * a).coeff(0) == 2);
    CHECK((a - a).is_zero());
    CHECK(quantum_int(3) * quantum_int(2) == quantum_int(4) + quantum_int(2));
    CHECK(quantum_int(2).str() == "q^-1 + q");
    CHECK(a.substitute_q_inverse() == a);
    CHECK(Laurent::mono(3, 2).substitute_q_inverse() == Laurent::mono(-3, 2));
}

TEST_CASE("Laurent2 arithmetic and specialization") {
    Laurent2 p = Laurent2::mono(2, 5) + Laurent2::mono(0, 1);  // t^2 q^5 + q
    CHECK(p.coeff(2, 5) == 1);
    CHECK(p.at_t(-1) == Laurent::mono(5) + Laurent::mono(1));
    CHECK(p.at_t(1) == Laurent::mono(5) + Laurent::mono(1));
    Laurent2 m = p.mirrored();
    CHECK(m.coeff(-2, -5) == 1);
    CHECK(m.mirrored() == p);
    CHECK(p.scaled(1, -1).coeff(3, 4) == 1);
    CHECK(p.q_window(0, 2) == Laurent2::mono(0, 1));
    CHECK((p - p).is_zero());
}

TEST_CASE("Superpolynomial JSON round-trip, sorted terms") {
    Superpolynomial s;
    s.conv = Convention::Kh;
    s.p = Laurent2::mono(3, 9) + Laurent2::mono(0, 1) + Laurent2::mono(0, 3) +
          Laurent2::mono(2, 5);
    auto j = s.to_json();
    CHECK(j["convention"] == "Kh");
    REQUIRE(j["terms"].size() == 4);
    // lexicographic by (t, q)
    CHECK(j["terms"][0]["t"] == 0);
    CHECK(j["terms"][0]["q"] == 1);
    CHECK(j["terms"][1]["q"] == 3);
    CHECK(j["terms"][3]["t"] == 3);
    CHECK(Superpolynomial::from_json(j) == s);
}

TEST_CASE("convention conversion round-trips and is index-bijective") {
    Superpolynomial s;
    s.conv = Convention::Kh;
    s.p = Laurent2::mono(0, 1) + Laurent2::mono(0, 3) + Laurent2::mono(2, 5) +
          Laurent2::mono(3, 9);
    int w = 3;
    for (auto target : {Convention::Kh, Convention::KhBar, Convention::KhR2,
                        Convention::KhR2framed}) {
        auto t = convert_convention(s, target, w);
        CHECK(t.conv == target);
        CHECK(t.total_dim() == s.total_dim());
        auto back = convert_convention(t, Convention::Kh, w);
        CHECK(back == s);
    }
    // KhBar negates q-degrees
    auto b = convert_convention(s, Convention::KhBar, w);
    CHECK(b.p.coeff(0, -1) == 1);
    CHECK(b.p.coeff(3, -9) == 1);
    // the framed flavor shifts q by -writhe relative to KhR2
    auto r = convert_convention(s, Convention::KhR2, w);
    auto f = convert_convention(s, Convention::KhR2framed, w);
    CHECK(f.p == r.p.scaled(0, -w));
}
