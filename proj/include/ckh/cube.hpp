#pragma once
// Full resolution cube of a link diagram over F[X]/(X^2), assembled into an
// explicit bigraded chain complex. Exponential in crossing number; intended
// for small diagrams and as the substrate for cobordism-induced chain maps.
#include "diagram.hpp"
#include "chain.hpp"
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace ckh {

// Thrown whenever a computation would exceed its declared size budget.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class CubeComplex {
public:
    LinkDiagram dia;
    int nx = 0, nplus = 0, nminus = 0;
    // per vertex r: arc -> circle id (circles numbered by first arc scan order)
    std::vector<std::vector<int>> arc2circ;
    std::vector<int> ncirc;
    std::vector<long long> offset;  // generator index base per vertex
    long long ngen = 0;
    ChainComplex C;

    explicit CubeComplex(const LinkDiagram& d, int budget_crossings = 22)
        : dia(d) {
        nx = (int)d.crossings.size();
        if (nx > budget_crossings)
            throw ResourceLimit("crossing budget exceeded for full cube");
        nplus = d.n_plus();
        nminus = d.n_minus();
        size_t nv = size_t(1) << nx;
        arc2circ.resize(nv);
        ncirc.resize(nv);
        offset.resize(nv);
        for (size_t r = 0; r < nv; ++r) {
            circles_at((uint32_t)r, arc2circ[r], ncirc[r]);
            offset[r] = ngen;
            ngen += (long long)1 << ncirc[r];
        }
        build_complex();
    }

    // generator = (vertex r, labels mask: bit k set means circle k carries X)
    long long index(uint32_t r, uint32_t labels) const {
        return offset[r] + labels;
    }
    std::pair<uint32_t, uint32_t> vertex_labels(long long idx) const {
        // binary search over offsets
        size_t lo = 0, hi = offset.size() - 1;
        while (lo < hi) {
            size_t mid = (lo + hi + 1) / 2;
            if (offset[mid] <= idx) lo = mid; else hi = mid - 1;
        }
        return {(uint32_t)lo, (uint32_t)(idx - offset[lo])};
    }

    int hdeg(uint32_t r) const { return (int)std::popcount(r) - nminus; }
    int qdeg(uint32_t r, uint32_t labels) const {
        int qc = ncirc[r] - 2 * (int)std::popcount(labels);
        return qc + (int)std::popcount(r) + nplus - 2 * nminus;
    }

private:
    void circles_at(uint32_t r, std::vector<int>& a2c, int& count) const {
        int na = dia.narcs;
        std::vector<int> parent(na);
        for (int i = 0; i < na; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int c = 0; c < nx; ++c) {
            auto pr = LinkDiagram::smoothing(dia.crossings[c], (r >> c) & 1);
            for (auto& [u, v] : pr) parent[find(u)] = find(v);
        }
        a2c.assign(na, -1);
        count = 0;
        for (int i = 0; i < na; ++i) {
            int root = find(i);
            if (a2c[root] < 0) a2c[root] = count++;
            a2c[i] = a2c[root];
        }
    }

    void build_complex() {
        C.grading.reserve(ngen);
        C.d.resize(ngen);
        size_t nv = size_t(1) << nx;
        for (size_t r = 0; r < nv; ++r)
            for (uint32_t l = 0; l < (uint32_t(1) << ncirc[r]); ++l)
                C.grading.push_back({hdeg((uint32_t)r), qdeg((uint32_t)r, l)});
        for (size_t r = 0; r < nv; ++r)
            for (int c = 0; c < nx; ++c) {
                if ((r >> c) & 1) continue;
                uint32_t r2 = (uint32_t)r | (1u << c);
                int sgn = (std::popcount((uint32_t)r & ((1u << c) - 1)) & 1) ? -1 : 1;
                add_edge((uint32_t)r, r2, c, sgn);
            }
    }

    void add_edge(uint32_t r, uint32_t r2, int c, int sgn) {
        const auto& A = arc2circ[r];
        const auto& B = arc2circ[r2];
        // circle correspondence via representative arcs
        int nB = ncirc[r2];
        std::vector<int> repB(nB, -1);  // circle at r2 -> an arc on it
        for (int a = 0; a < dia.narcs; ++a)
            if (repB[B[a]] < 0) repB[B[a]] = a;
        const auto& x = dia.crossings[c];
        // strands at the crossing before/after the resolution change; each
        // smoothing pair lies on one circle
        auto P0 = LinkDiagram::smoothing(x, 0);
        auto P1 = LinkDiagram::smoothing(x, 1);
        int c1 = A[P0[0].first], c2 = A[P0[1].first];  // circles at r
        int z1 = B[P1[0].first], z2 = B[P1[1].first];  // circles at r2
        bool merge = (c1 != c2);
        if (merge != (z1 == z2)) throw std::logic_error("cube edge: circle mismatch");
        for (uint32_t l = 0; l < (uint32_t(1) << ncirc[r]); ++l) {
            long long src = index(r, l);
            auto carry = [&](uint32_t extra_targets_mask) {
                // labels of circles away from the crossing are carried over
                uint32_t tl = extra_targets_mask;
                for (int k = 0; k < nB; ++k) {
                    int srcc = A[repB[k]];
                    if (srcc == c1 || srcc == c2) continue;
                    if ((l >> srcc) & 1) tl |= 1u << k;
                }
                return tl;
            };
            if (merge) {
                int la = (l >> c1) & 1, lb = (l >> c2) & 1;
                if (la && lb) continue;  // X.X = 0
                C.d[src][index(r2, carry((la | lb) ? (1u << z1) : 0))] += sgn;
            } else if ((l >> c1) & 1) {  // Delta(X) = X (x) X
                C.d[src][index(r2, carry((1u << z1) | (1u << z2)))] += sgn;
            } else {  // Delta(1) = 1 (x) X + X (x) 1
                C.d[src][index(r2, carry(1u << z1))] += sgn;
                C.d[src][index(r2, carry(1u << z2))] += sgn;
            }
        }
    }
};

}  // namespace ckh
