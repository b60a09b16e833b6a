#include <catch2/catch_amalgamated.hpp>
#include <ckh/versions.hpp>

using namespace ckh;

TEST_CASE("eight versions for the zero-framed unknot") {
    auto u = unknot_diagram();
    for (int n : {1, 2, 3}) {
        INFO("color " << n);
        auto r = compute_versions(u, n);
        CHECK(r.reference == Laurent2::from_q(quantum_int(n + 1)));
        for (auto& [name, p] : r.polys) {
            INFO("version " << name);
            CHECK(p == r.reference);
        }
        CHECK(r.all_agree);
    }
}

TEST_CASE("eight versions for the blackboard-framed trefoil at color 2") {
    auto tre = from_braid_word("{1,1,1}");
    auto r = compute_versions(tre, 2);
    auto ref = colored_superpoly(tre, {3}, {2});
    CHECK(r.reference == ref.poly);
    for (auto& [name, p] : r.polys) {
        INFO("version " << name);
        CHECK(p == r.reference);
    }
    CHECK(r.all_agree);
}
