// End-to-end acceptance suite. Each numbered check prints exactly one
// PASS/FAIL line; the process exits with the number of failed checks.
#include <ckh/bracket.hpp>
#include <ckh/colored.hpp>
#include <ckh/kh.hpp>
#include <ckh/observations.hpp>
#include <ckh/versions.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ckh;

namespace {

// prime knots up to 8 crossings as braid closures (knot atlas conventions)
const std::vector<std::pair<std::string, std::string>> kCorpus = {
    {"3_1", "{1,1,1}"},
    {"4_1", "{1,-2,1,-2}"},
    {"5_1", "{1,1,1,1,1}"},
    {"5_2", "{1,1,1,2,-1,2}"},
    {"6_1", "{1,1,2,-1,-3,2,-3}"},
    {"6_2", "{1,1,1,-2,1,-2}"},
    {"6_3", "{1,1,-2,1,-2,-2}"},
    {"7_1", "{1,1,1,1,1,1,1}"},
    {"7_2", "{1,1,1,2,-1,2,3,-2,3}"},
    {"7_3", "{1,1,1,1,1,2,-1,2}"},
    {"7_4", "{1,1,2,-1,2,2,3,-2,3}"},
    {"7_5", "{1,1,1,1,2,-1,2,2}"},
    {"7_6", "{1,1,-2,1,3,-2,3}"},
    {"7_7", "{-1,2,-1,2,-3,2,-3}"},
    {"8_1", "{1,1,2,-1,2,3,-2,-4,3,-4}"},
    {"8_2", "{1,1,1,1,1,-2,1,-2}"},
    {"8_3", "{1,1,2,-1,-3,2,-3,-4,3,-4}"},
    {"8_4", "{-1,-1,-1,2,-1,2,3,-2,3}"},
    {"8_5", "{1,1,1,-2,1,1,1,-2}"},
    {"8_6", "{1,1,1,1,2,-1,-3,2,-3}"},
    {"8_7", "{-1,-1,-1,-1,2,-1,2,2}"},
    {"8_8", "{-1,-1,-1,-2,1,3,-2,3,3}"},
    {"8_9", "{1,1,1,-2,1,-2,-2,-2}"},
    {"8_10", "{-1,-1,-1,2,-1,-1,2,2}"},
    {"8_11", "{1,1,2,-1,2,2,-3,2,-3}"},
    {"8_12", "{1,-2,1,3,-2,-4,3,-4}"},
    {"8_13", "{1,1,-2,1,-2,-2,-3,2,-3}"},
    {"8_14", "{1,1,1,2,-1,2,-3,2,-3}"},
    {"8_15", "{1,1,-2,1,3,2,2,2,3}"},
    {"8_16", "{-1,-1,2,-1,-1,2,-1,2}"},
    {"8_17", "{1,1,-2,1,-2,1,-2,-2}"},
    {"8_18", "{1,-2,1,-2,1,-2,1,-2}"},
    {"8_19", "{1,1,1,2,1,1,1,2}"},
    {"8_20", "{1,1,1,-2,-1,-1,-1,-2}"},
    {"8_21", "{1,1,1,2,-1,-1,2,2}"},
};

bool check1_oracles(std::string& msg) {
    for (auto& [name, word] : kCorpus) {
        auto d = from_braid_word(parse_braid(word));
        Scanner<mpq_class> sc(d);
        Laurent2 scan = sc.run();
        CubeComplex cube(d);
        Reduction red(cube.C, false);
        if (!(scan == red.poly().p)) {
            msg = name + ": scan != full cube";
            return false;
        }
        if (!(scan.at_t(-1) == jones_state_sum(d))) {
            msg = name + ": t=-1 specialization != state sum";
            return false;
        }
    }
    msg = "35 knots, scan == cube and t=-1 == state sum";
    return true;
}

bool check2_unknot_colors(std::string& msg) {
    auto u = unknot_diagram();
    for (int n = 0; n <= 6; ++n) {
        auto r = colored_superpoly(u, {0}, {n});
        if (!(r.poly == Laurent2::from_q(quantum_int(n + 1)))) {
            msg = "color " + std::to_string(n) + ": expected [" +
                  std::to_string(n + 1) + "] at t = 0";
            return false;
        }
    }
    msg = "0-framed unknot colors 0..6 give quantum integers at t = 0";
    return true;
}

bool check3_roundtrip(std::string& msg) {
    // Dyck-path brute force against the closed triangle values
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= n; ++m) {
            long long cnt = 0;
            for (uint32_t b = 0; b < (1u << n); ++b) {
                int s = 0;
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) {
                    s += ((b >> i) & 1) ? 1 : -1;
                    if (s < 0) ok = false;
                }
                if (ok && s == m) ++cnt;
            }
            if (cnt != catalan_T(n, m)) {
                msg = "triangle entry (" + std::to_string(n) + "," +
                      std::to_string(m) + ") != path count";
                return false;
            }
        }
    // change of basis and its inverse on random nonnegative inputs
    std::mt19937 rng(20260823);
    auto rnd_poly = [&]() {
        Laurent2 p;
        for (int trm = 0; trm < 6; ++trm)
            p.c[{(int)(rng() % 7) - 3, (int)(rng() % 9) - 4}] = rng() % 5 + 1;
        return p;
    };
    for (int n = 0; n <= 8; ++n)
        for (int rep = 0; rep < 5; ++rep) {
            std::map<int, Laurent2> cablep;
            for (int m = n; m >= 0; m -= 2) cablep[m] = rnd_poly();
            auto P = [&](const ColorVector& m) { return cablep.at(m[0]); };
            std::map<int, Laurent2> col;
            for (int m = n; m >= 0; m -= 2)
                col[m] = colored_formula(P, {m}, false);
            auto C = [&](const ColorVector& m) { return col.at(m[0]); };
            if (!(inverse_formula(C, {n}) == cablep.at(n))) {
                msg = "round trip failed at n = " + std::to_string(n);
                return false;
            }
        }
    msg = "triangle == path oracle (n <= 12); basis change invertible (n <= 8)";
    return true;
}

bool check4_versions(std::string& msg) {
    auto run = [&](const LinkDiagram& framed, int n, const std::string& tag) {
        VersionsResult vr = compute_versions(framed, n);
        if (!vr.all_agree) {
            msg = tag + ": versions disagree";
            return false;
        }
        for (auto& [name, p] : vr.polys)
            if (!(p == vr.reference)) {
                msg = tag + ": " + name + " != cable-formula reference";
                return false;
            }
        return true;
    };
    auto u = unknot_diagram();
    if (!run(u.with_framing({0}), 2, "unknot n=2")) return false;
    if (!run(u.with_framing({0}), 3, "unknot n=3")) return false;
    auto t = from_braid_word(parse_braid("{1,1,1}"));
    if (!run(t.with_framing({t.writhe()}), 2, "trefoil n=2")) return false;
    msg = "all eight homology versions agree (unknot n=2,3; trefoil n=2)";
    return true;
}

template <class R>
bool jw_suite(std::string& msg, const char* ring) {
    for (int n = 1; n <= 6; ++n) {
        const auto& p = jones_wenzl<R>(n);
        bool ok = compose(p, p) == p;
        auto it = p.terms.find(tl_id_diag(n).pair_);
        ok = ok && it != p.terms.end() && it->second == R(1);
        for (int i = 0; ok && i + 1 < n; ++i)
            ok = compose(tl_cap<R>(n, i), p).is_zero() &&
                 compose(p, tl_cup<R>(n, i)).is_zero() &&
                 compose(p, tl_e<R>(n, i)).is_zero() &&
                 compose(tl_e<R>(n, i), p).is_zero();
        if (!ok) {
            msg = std::string(ring) + ", n = " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool check5_jw(std::string& msg) {
    if (!jw_suite<RatFunc>(msg, "rational functions")) return false;
    if (!jw_suite<mpq_class>(msg, "q = 1")) return false;
    msg = "idempotence, cap/cup annihilation, unit identity coefficient, "
          "p e_i = 0 (n <= 6, both rings)";
    return true;
}

bool check6_cn(std::string& msg) {
    for (int n = 0; n <= 12; ++n) {
        auto C = build_Cn(n);
        if (!complex_d_squared_zero(C)) {
            msg = "d^2 != 0 at n = " + std::to_string(n);
            return false;
        }
        for (int k = 0; k <= n / 2; ++k) {
            if ((long long)C.at(k).size() != binom_ll(n - k, k)) {
                msg = "multiplicity mismatch at n = " + std::to_string(n);
                return false;
            }
            for (auto& s : C.at(k))
                if (s.obj != n - 2 * k) {
                    msg = "object mismatch at n = " + std::to_string(n);
                    return false;
                }
        }
        // Euler characteristic: sum_k (-1)^k binom(n-k,k) [2]^{n-2k} = [n+1]
        Laurent eu;
        Laurent two = quantum_int(2);
        for (int k = 0; k <= n / 2; ++k) {
            Laurent pw(1);
            for (int i = 0; i < n - 2 * k; ++i) pw = pw * two;
            eu += ((k % 2) ? -binom_ll(n - k, k) : binom_ll(n - k, k)) * pw;
        }
        if (!(eu == quantum_int(n + 1))) {
            msg = "Euler characteristic mismatch at n = " + std::to_string(n);
            return false;
        }
    }
    msg = "d^2 = 0, multiplicities binom(n-k,k), Euler class (n <= 12)";
    return true;
}

bool check7_recursion(std::string& msg) {
    auto rep = verify_recursion(4);
    if (!rep.calibration_ok) {
        msg = "support-box calibration failed at n = 1, 2";
        return false;
    }
    if (!rep.tribonacci_ok) {
        msg = "total dimensions break the three-term recurrence";
        return false;
    }
    for (auto& e : rep.entries) {
        if (!e.recursion_ok) {
            msg = "recursion mismatch at n = " + std::to_string(e.n);
            return false;
        }
        if (!e.box_ok) {
            msg = "support box mismatch at n = " + std::to_string(e.n);
            return false;
        }
    }
    for (int n : {2, 3, 4})
        if (!torus_decomposition_check(n, rep.P)) {
            msg = "torus decomposition failed at n = " + std::to_string(n);
            return false;
        }
    msg = "three-term recursion + support boxes (n = 3, 4; identity-shift "
          "calibration on n = 1, 2), torus decomposition (n = 2, 3, 4); "
          "n in {5..8} is out of desk scale and not attempted";
    return true;
}

bool check8_sweeps(std::string& msg) {
    auto fig8 =
        framing_sweep(from_braid_word(parse_braid("{1,-2,1,-2}")), 2, -6, 6);
    if (fig8.minimizers != std::vector<int>{-1, 0, 1}) {
        msg = "4_1 minimizer set != {-1, 0, 1}";
        return false;
    }
    auto tre = from_braid_word(parse_braid("{1,1,1}"));
    auto s1 = framing_sweep(tre, 2, -6, 6);
    auto s2 = framing_sweep(tre.mirror(), 2, -6, 6);
    std::vector<int> want{2, 3}, wantm{-3, -2};
    bool ok = (s1.minimizers == want && s2.minimizers == wantm) ||
              (s1.minimizers == wantm && s2.minimizers == want);
    if (!ok) {
        msg = "trefoil chirality pair != {2,3} / {-3,-2}";
        return false;
    }
    msg = "color-2 window [-6,6]: 4_1 -> {-1,0,1}; trefoil pair -> {2,3} and "
          "{-3,-2}";
    return true;
}

bool check9_lasagna(std::string& msg) {
    auto rep = verify_recursion(4);
    auto P = rep.P;  // P_0..P_4 from cables; larger colors by the recursion
    extend_by_recursion(P, 7);
    int total = 0;
    for (int par : {0, 1}) {
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
        if (stable.size() < 8) {
            msg = "parity " + std::to_string(par) + ": stable range too small";
            return false;
        }
        auto S = lasagna_series(par, tmin, qmin);
        for (auto& [e, c] : stable) {
            if (c <= 0) {
                msg = "nonpositive stable coefficient";
                return false;
            }
            if (S.coeff(e.first, e.second) != c) {
                std::ostringstream os;
                os << "parity " << par << ": series coefficient at (t^"
                   << e.first << ", q^" << e.second << ") is "
                   << S.coeff(e.first, e.second) << ", expected " << c;
                msg = os.str();
                return false;
            }
            ++total;
        }
    }
    msg = "closed-formula series matches all " + std::to_string(total) +
          " stabilized coefficients (both parities, colors 4/6 and 5/7)";
    return true;
}

bool check10_mirror(std::string& msg) {
    for (auto& [name, word] : kCorpus) {
        std::cerr << "  mirror duality: " << name << std::endl;
        auto d = from_braid_word(parse_braid(word));
        int w = d.writhe();
        for (int n = 1; n <= 2; ++n) {
            auto a = colored_superpoly(d, {w}, {n});
            auto b = colored_superpoly(d.mirror(), {-w}, {n});
            if (!(b.poly == a.poly.mirrored())) {
                msg = name + " at color " + std::to_string(n);
                return false;
            }
        }
    }
    msg = "35 knots, colors 1..2: mirror + negated framing inverts (t, q)";
    return true;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    struct Item {
        int id;
        const char* title;
        std::function<bool(std::string&)> run;
    };
    std::vector<Item> items = {
        {1, "scanning vs full cube vs state sum on the knot corpus", check1_oracles},
        {2, "colored unknot gives quantum integers", check2_unknot_colors},
        {3, "basis-change round trip and triangle oracle", check3_roundtrip},
        {4, "eight homology versions agree", check4_versions},
        {5, "symmetrizer identities over both rings", check5_jw},
        {6, "complex shape, signs, and Euler class", check6_cn},
        {7, "one-framed unknot recursion and torus decomposition", check7_recursion},
        {8, "framing sweeps reproduce the minimizer table", check8_sweeps},
        {9, "truncated series matches stabilized coefficients", check9_lasagna},
        {10, "mirror duality across the corpus", check10_mirror},
    };
    int failed = 0;
    for (auto& it : items) {
        auto t0 = Clock::now();
        std::string msg;
        bool ok = false;
        try {
            ok = it.run(msg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(Clock::now() - t0).count();
        std::ostringstream line;
        line << "[" << (it.id < 10 ? " " : "") << it.id << "] "
             << (ok ? "PASS" : "FAIL") << "  " << it.title << " -- " << msg
             << "  (" << (int)(secs * 10) / 10.0 << "s)";
        std::cout << line.str() << std::endl;
        if (!ok) ++failed;
    }
    std::cout << (failed ? "ACCEPTANCE: FAILED " + std::to_string(failed) +
                               " of 10"
                         : "ACCEPTANCE: all 10 criteria passed")
              << std::endl;
    return failed;
}
