#pragma once
// Empirical structure of colored homology at small scale: the three-term
// recursion for the 1-framed unknot, its torus-knot decomposition, the
// truncated closed-formula series for the stabilized colored homology, and
// framing sweeps producing window-relative minimizer sets.
#include "colored.hpp"
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckh {

// o(2k) = 2k(k+2), o(2k+1) = 2k(k+3)+1; l(n) = o(n) - o(n-1).
inline long long o_fn(long long n) {
    long long k = n / 2;
    return (n % 2 == 0) ? 2 * k * (k + 2) : 2 * k * (k + 3) + 1;
}
inline long long ell_fn(long long n) { return (n % 2 == 0) ? n + 3 : n; }

// P_n: colored superpolynomial of the 1-framed unknot, display convention.
inline Laurent2 one_framed_unknot_colored(int n, int budget = 64) {
    return colored_superpoly(unknot_diagram(), {1}, {n}, Convention::Kh, budget)
        .poly;
}

struct SupportBox {
    int tmin = 0, tmax = 0, qmin = 0, qmax = 0;
    bool empty = true;
};

inline SupportBox support_box(const Laurent2& p) {
    SupportBox b;
    for (auto& [e, c] : p.c) {
        if (b.empty) {
            b = {e.first, e.first, e.second, e.second, false};
        } else {
            b.tmin = std::min(b.tmin, e.first);
            b.tmax = std::max(b.tmax, e.first);
            b.qmin = std::min(b.qmin, e.second);
            b.qmax = std::max(b.qmax, e.second);
        }
    }
    return b;
}

// Expected support corners of P_n: from (-2*floor(n^2/4), -o(n)) up to
// (0, -n) for even n, (0, -n+2) for odd n.
inline bool support_box_matches(const Laurent2& p, int n) {
    if (n == 0) return p == Laurent2(1);
    SupportBox b = support_box(p);
    return !b.empty && b.tmin == -2 * ((n * n) / 4) && b.tmax == 0 &&
           b.qmin == -o_fn(n) && b.qmax == (n % 2 ? -n + 2 : -n);
}

// t^{-2 floor(n/2)} q^{-l(n)} P_{n-1} + q^{-2} P_{n-2}
//   + t^{-2 floor(n/2)+1} q^{-l(n)+2} P_{n-3},  with P_{-1} := 0.
inline Laurent2 recursion_rhs(const std::vector<Laurent2>& P, int n) {
    auto at = [&](int m) { return m < 0 ? Laurent2() : P[m]; };
    int fl = n / 2;
    return at(n - 1).scaled(-2 * fl, (int)-ell_fn(n)) +
           at(n - 2).scaled(0, -2) +
           at(n - 3).scaled(-2 * fl + 1, (int)-ell_fn(n) + 2);
}

struct RecursionEntry {
    int n;
    Laurent2 computed, predicted;
    bool recursion_ok = false;
    bool box_ok = false;
};

struct RecursionReport {
    std::vector<Laurent2> P;  // P_0 .. P_N, each computed directly from cables
    std::vector<long long> dims;
    std::vector<RecursionEntry> entries;  // n = 3 .. N
    bool calibration_ok = false;  // n = 1, 2 support boxes match unshifted
    bool tribonacci_ok = true;    // dims satisfy d_n = d_{n-1}+d_{n-2}+d_{n-3}
    bool all_ok = false;
};

inline RecursionReport verify_recursion(int maxN, int budget = 64) {
    RecursionReport rep;
    for (int n = 0; n <= maxN; ++n) {
        rep.P.push_back(one_framed_unknot_colored(n, budget));
        long long d = 0;
        for (auto& [e, c] : rep.P.back().c) d += c;
        rep.dims.push_back(d);
    }
    // calibration: the global grading shift is fixed by requiring the n = 1, 2
    // support boxes to match the stated corners; the display convention needs
    // no extra shift, and that identity shift is what gets extrapolated
    rep.calibration_ok = maxN >= 2 && support_box_matches(rep.P[1], 1) &&
                         support_box_matches(rep.P[2], 2);
    for (int n = 2; n <= maxN; ++n) {
        long long want = rep.dims[n - 1] + rep.dims[n - 2] +
                         (n >= 3 ? rep.dims[n - 3] : 0);
        if (rep.dims[n] != want) rep.tribonacci_ok = false;
    }
    bool all = rep.calibration_ok && rep.tribonacci_ok;
    for (int n = 3; n <= maxN; ++n) {
        RecursionEntry e;
        e.n = n;
        e.computed = rep.P[n];
        e.predicted = recursion_rhs(rep.P, n);
        e.recursion_ok = e.computed == e.predicted;
        e.box_ok = support_box_matches(rep.P[n], n);
        all = all && e.recursion_ok && e.box_ok;
        rep.entries.push_back(std::move(e));
    }
    rep.all_ok = all;
    return rep;
}

// Extend P_0..P_N by the recursion itself (used where direct cables are out
// of reach; the recursion is verified directly at small n).
inline void extend_by_recursion(std::vector<Laurent2>& P, int upto) {
    for (int n = (int)P.size(); n <= upto; ++n)
        P.push_back(recursion_rhs(P, n));
}

// Braid word of the (n, n-1) torus knot: (s_1 ... s_{n-1})^{n-1}.
inline LinkDiagram torus_knot_diagram(int n) {
    BraidWord w;
    w.strands = n;
    for (int rep = 0; rep < n - 1; ++rep)
        for (int i = 1; i <= n - 1; ++i) w.gens.push_back(i);
    return from_braid_word(w);
}

// t^{-2 floor(n^2/4)} q^{-o(n)-(n-1)(n-2)+1} Pol(Kh(T(n,n-1)))
//   = t^{-2 floor(n/2)} q^{-l(n)} P_{n-1}
//   + t^{-2 floor(n/2)+1} q^{-l(n)+2} P_{n-3}.
inline bool torus_decomposition_check(int n, const std::vector<Laurent2>& P,
                                      int budget = 64) {
    Laurent2 khT = kh(torus_knot_diagram(n), Convention::Kh, Method::Auto,
                      budget).p;
    Laurent2 lhs = khT.scaled(-2 * ((n * n) / 4),
                              (int)(-o_fn(n) - (n - 1) * (n - 2) + 1));
    auto at = [&](int m) { return m < 0 ? Laurent2() : P[m]; };
    int fl = n / 2;
    Laurent2 rhs = at(n - 1).scaled(-2 * fl, (int)-ell_fn(n)) +
                   at(n - 3).scaled(-2 * fl + 1, (int)-ell_fn(n) + 2);
    return lhs == rhs;
}

// ------------------------------------------------------------------------
// Truncated two-variable series for the stabilized colored homology of the
// 1-framed unknot. Every atom of the closed formula -- powers of Q = q^2 t^-2
// and of u = t q^-4 -- strictly lowers the functional f(t,q) = 2t + q, so
// dropping monomials with f < fmin is stable under multiplication and all
// retained coefficients are exact on the region {t >= tmin, q >= qmin} with
// fmin = 2 tmin + qmin.
// ------------------------------------------------------------------------
struct TruncatedSeries {
    int parity = 0;
    int tmin = 0, qmin = 0;  // exactness region bounds
    long long fmin = 0;
    std::map<std::pair<int, int>, long long> c;

    long long coeff(int te, int qe) const {
        auto it = c.find({te, qe});
        return it == c.end() ? 0 : it->second;
    }
};

// (a ; Q)_n = prod_{i=0}^{n-1} (1 - a Q^i) as an exact Laurent polynomial.
inline Laurent2 q_pochhammer(const Laurent2& a, const Laurent2& Q, int n) {
    Laurent2 r(1);
    Laurent2 aQ = a;
    for (int i = 0; i < n; ++i) {
        r = r * (Laurent2(1) - aQ);
        aQ = aQ * Q;
    }
    return r;
}

namespace detail {

inline long long fval(int te, int qe) { return 2LL * te + qe; }

inline void ts_trim(std::map<std::pair<int, int>, long long>& m, long long fmin) {
    for (auto it = m.begin(); it != m.end();) {
        if (fval(it->first.first, it->first.second) < fmin) it = m.erase(it);
        else ++it;
    }
}

inline std::map<std::pair<int, int>, long long> ts_mul(
    const std::map<std::pair<int, int>, long long>& a,
    const std::map<std::pair<int, int>, long long>& b, long long fmin) {
    std::map<std::pair<int, int>, long long> r;
    for (auto& [e1, k1] : a)
        for (auto& [e2, k2] : b) {
            int te = e1.first + e2.first, qe = e1.second + e2.second;
            if (fval(te, qe) < fmin) continue;
            auto& v = r[{te, qe}];
            v += k1 * k2;
            if (!v) r.erase({te, qe});
        }
    return r;
}

// expansion of 1/(1 - t^dt q^dq) down to the f-cutoff, given that products
// will involve monomials with f <= fcap
inline std::map<std::pair<int, int>, long long> ts_geom(int dt, int dq,
                                                        long long fmin,
                                                        long long fcap) {
    long long step = fval(dt, dq);
    if (step >= 0)
        throw std::runtime_error(
            "lasagna_series: geometric factor does not drift out of the box");
    std::map<std::pair<int, int>, long long> r;
    for (long long j = 0;; ++j) {
        if (fcap + j * step < fmin) break;
        r[{(int)(j * dt), (int)(j * dq)}] = 1;
    }
    return r;
}

}  // namespace detail

// Closed-formula series for the stabilized colored homology of the 1-framed
// unknot in the given parity, with all coefficients on {t >= tmin, q >= qmin}
// exact. Summation over k stops once the summand prefactor leaves the region;
// the monotone drift of the prefactors is checked at runtime.
inline TruncatedSeries lasagna_series(int parity, int tmin, int qmin,
                                      int kmax = 64) {
    using detail::fval;
    TruncatedSeries S;
    S.parity = parity;
    S.tmin = tmin;
    S.qmin = qmin;
    S.fmin = 2LL * tmin + qmin;
    const long long fmin = S.fmin;
    // atoms: u = t q^-4, Q = q^2 t^-2
    auto summand = [&](int pt, int pq, int npoch, int dpoch) {
        // t^pt q^pq * (-u; Q)_npoch / (Q; Q)_dpoch, truncated
        std::map<std::pair<int, int>, long long> acc{{{pt, pq}, 1}};
        long long fcap = fval(pt, pq);
        for (int i = 0; i < npoch; ++i) {
            // 1 + u Q^i = 1 + t^{1-2i} q^{2i-4}
            std::map<std::pair<int, int>, long long> f{
                {{0, 0}, 1}, {{1 - 2 * i, 2 * i - 4}, 1}};
            acc = detail::ts_mul(acc, f, fmin);
        }
        for (int i = 1; i <= dpoch; ++i)
            acc = detail::ts_mul(acc, detail::ts_geom(-2 * i, 2 * i, fmin, fcap),
                                 fmin);
        return acc;
    };
    std::map<std::pair<int, int>, long long> total;
    long long prevA = 1, prevB = 1;  // sentinel > 0 >= all prefactor drifts
    int k = 0;
    for (;; ++k) {
        if (k > kmax)
            throw std::runtime_error(
                "lasagna_series: summand prefactors never left the box");
        long long pA[2], pB[2];  // (t, q) exponents of the two prefactors
        if (parity == 0) {
            pA[0] = -2LL * k * k;
            pA[1] = 2LL * k * (k + 1);
            pB[0] = -2LL * (k + 1) * (k + 1);
            pB[1] = 2LL * ((k + 1) * (k + 1) + k);
        } else {
            pA[0] = -2LL * k * (k + 1);
            pA[1] = 2LL * (k * k + 2 * k - 1);
            pB[0] = -2LL * k * (k + 1);
            pB[1] = 2LL * k * (k + 2);
        }
        long long fA = 2 * pA[0] + pA[1], fB = 2 * pB[0] + pB[1];
        if (k > 0 && (fA > prevA || fB > prevB))
            throw std::runtime_error(
                "lasagna_series: prefactor drift is not monotone");
        prevA = fA;
        prevB = fB;
        if (fA < fmin && fB < fmin) break;
        auto A = summand((int)pA[0], (int)pA[1], 2 * k + 1, 2 * k);
        auto B = summand((int)pB[0], (int)pB[1], 2 * k + 2, 2 * k + 1);
        for (auto& [e, v] : A) { auto& w = total[e]; w += v; if (!w) total.erase(e); }
        for (auto& [e, v] : B) { auto& w = total[e]; w += v; if (!w) total.erase(e); }
    }
    // outer factor 1/(1 + q^-4 t): alternating geometric series in u
    long long fcap = 0;
    for (auto& [e, v] : total) fcap = std::max(fcap, fval(e.first, e.second));
    std::map<std::pair<int, int>, long long> outer;
    for (long long m = 0; -2 * m + fcap >= fmin; ++m)
        outer[{(int)m, (int)(-4 * m)}] = (m % 2 ? -1 : 1);
    S.c = detail::ts_mul(total, outer, fmin);
    return S;
}

// ------------------------------------------------------------------------
// Framing sweep: total dimension of n-colored homology across a framing
// window, and the window-relative minimizer set.
// ------------------------------------------------------------------------
struct SweepResult {
    std::string diagram_key;
    int color = 2;
    int kmin = 0, kmax = 0;
    std::map<int, long long> dims;  // framing -> total dimension
    std::vector<int> minimizers;    // window-relative argmin set
};

inline SweepResult framing_sweep(const LinkDiagram& d, int n, int kmin,
                                 int kmax, int budget = 64) {
    if (d.components.size() != 1)
        throw std::invalid_argument("framing_sweep: expects a knot");
    SweepResult r;
    r.diagram_key = d.canonical_key();
    r.color = n;
    r.kmin = kmin;
    r.kmax = kmax;
    long long best = -1;
    for (int k = kmin; k <= kmax; ++k) {
        auto cr = colored_superpoly(d, {k}, {n}, Convention::Kh, budget);
        long long dim = 0;
        for (auto& [e, c] : cr.poly.c) dim += c;
        r.dims[k] = dim;
        if (best < 0 || dim < best) best = dim;
    }
    for (auto& [k, dim] : r.dims)
        if (dim == best) r.minimizers.push_back(k);
    return r;
}

}  // namespace ckh
