#pragma once
// Colored superpolynomials via the alternating cable formula, its inverse
// through the Catalan triangle, and the shared result record.
#include "kh.hpp"
#include "tl.hpp"
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckh {

// T_{n,m}: coefficient of the m-th Chebyshev basis element in x^n
// (equivalently a truncated-Dyck-path count). Recurrence
// T_{n,m} = T_{n-1,m-1} + T_{n-1,m+1}, T_{0,0} = 1.
inline long long catalan_T(int n, int m) {
    if (m < 0 || m > n || (n - m) % 2) return 0;
    if (n == 0) return 1;
    static std::map<std::pair<int, int>, long long> memo;
    auto key = std::make_pair(n, m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long v = catalan_T(n - 1, m - 1) + catalan_T(n - 1, m + 1);
    memo[key] = v;
    return v;
}

using ColorVector = std::vector<int>;

// iterate a componentwise odometer 0 <= k_i <= lim_i; returns false at wrap
inline bool odometer_next(ColorVector& k, const std::function<int(size_t)>& lim) {
    for (size_t i = 0; i < k.size(); ++i) {
        if (k[i] + 1 <= lim(i)) {
            ++k[i];
            return true;
        }
        k[i] = 0;
    }
    return false;
}

// Sum over 0 <= k <= floor(n/2) componentwise of
//   (-1)^|k| * prod_i binom(n_i - k_i, k_i) * P(n - 2k),
// where P supplies the cable polynomial for each needed color vector.
inline Laurent2 colored_formula(
    const std::function<Laurent2(const ColorVector&)>& P, const ColorVector& n,
    bool assert_nonneg = true) {
    Laurent2 total;
    ColorVector k(n.size(), 0);
    do {
        long long c = 1;
        int parity = 0;
        ColorVector sub(n.size());
        for (size_t i = 0; i < n.size(); ++i) {
            c *= binom_ll(n[i] - k[i], k[i]);
            parity += k[i];
            sub[i] = n[i] - 2 * k[i];
        }
        if (parity % 2) c = -c;
        total += c * P(sub);
    } while (odometer_next(k, [&](size_t i) { return n[i] / 2; }));
    if (assert_nonneg)
        for (auto& [e, c] : total.c)
            if (c < 0)
                throw std::logic_error(
                    "colored_formula: negative coefficient in result");
    return total;
}

// Inverse change of basis: recovers the cable-n polynomial from the colored
// polynomials of colors n, n-2, ... via the Catalan triangle,
//   P_cable(n) = sum_k prod_i T_{n_i, n_i - 2 k_i} * Colored(n - 2k).
inline Laurent2 inverse_formula(
    const std::function<Laurent2(const ColorVector&)>& colored,
    const ColorVector& n) {
    Laurent2 total;
    ColorVector k(n.size(), 0);
    do {
        long long c = 1;
        ColorVector sub(n.size());
        for (size_t i = 0; i < n.size(); ++i) {
            sub[i] = n[i] - 2 * k[i];
            c *= catalan_T(n[i], sub[i]);
        }
        total += c * colored(sub);
    } while (odometer_next(k, [&](size_t i) { return n[i] / 2; }));
    return total;
}

struct ColoredResult {
    std::string diagram_key;         // canonical form of the input diagram
    std::vector<int> framing;
    ColorVector colors;
    Convention conv = Convention::Kh;
    std::string method = "formula";
    Laurent2 poly;
    std::map<ColorVector, Laurent2> cables_used;  // provenance
};

// Shared cache of cable Khovanov polynomials for one framed diagram.
class CableKh {
  public:
    CableKh(LinkDiagram framed, Convention conv, int budget_crossings)
        : d_(std::move(framed)), conv_(conv), budget_(budget_crossings) {}

    const Laurent2& operator()(const ColorVector& m) {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        auto ci = cable(d_, m);
        Superpolynomial s = kh(ci.diagram, conv_, Method::Auto, budget_);
        return cache_.emplace(m, s.p).first->second;
    }
    const std::map<ColorVector, Laurent2>& cache() const { return cache_; }
    const LinkDiagram& framed_diagram() const { return d_; }

  private:
    LinkDiagram d_;
    Convention conv_;
    int budget_;
    std::map<ColorVector, Laurent2> cache_;
};

// Pipeline: with_framing -> cable (all required sub-colors) -> kh ->
// colored_formula. Throws ResourceLimit if the largest cable exceeds budget.
inline ColoredResult colored_superpoly(const LinkDiagram& d,
                                       const std::vector<int>& framings,
                                       const ColorVector& colors,
                                       Convention conv = Convention::Kh,
                                       int budget_crossings = 64) {
    LinkDiagram framed = d.with_framing(framings);
    CableKh P(framed, conv, budget_crossings);
    ColoredResult r;
    r.diagram_key = d.canonical_key();
    r.framing = framings;
    r.colors = colors;
    r.conv = conv;
    r.method = "formula";
    r.poly = colored_formula([&](const ColorVector& m) { return P(m); }, colors);
    r.cables_used = P.cache();
    return r;
}

inline LinkDiagram unknot_diagram() {
    LinkDiagram u;
    u.narcs = 1;
    u.compute_components();
    return u;
}

}  // namespace ckh
