#pragma once
// Kauffman-bracket state sum: unnormalized Jones polynomial, normalized to
// agree with the graded Euler characteristic of the Kh-convention homology.
#include "diagram.hpp"
#include "laurent.hpp"
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace ckh {

inline Laurent jones_state_sum(const LinkDiagram& d, int budget_crossings = 22) {
    int nx = (int)d.crossings.size();
    if (nx > budget_crossings)
        throw std::runtime_error("crossing budget exceeded for state sum");
    int npl = d.n_plus(), nmi = nx - npl;
    Laurent total;
    Laurent loop = quantum_int(2);  // q + q^{-1}
    int na = d.narcs;
    std::vector<int> parent(na);
    for (uint32_t r = 0; r < (uint32_t(1) << nx); ++r) {
        for (int i = 0; i < na; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int c = 0; c < nx; ++c) {
            auto pr = LinkDiagram::smoothing(d.crossings[c], (r >> c) & 1);
            for (auto& [u, v] : pr) parent[find(u)] = find(v);
        }
        int circles = 0;
        for (int i = 0; i < na; ++i)
            if (find(i) == i) ++circles;
        int w = (int)std::popcount(r);
        long long sign = ((w - nmi) % 2) ? -1 : 1;
        Laurent term(sign);
        for (int i = 0; i < circles; ++i) term = term * loop;
        total += term.shifted(w + npl - 2 * nmi);
    }
    return total;
}

}  // namespace ckh
