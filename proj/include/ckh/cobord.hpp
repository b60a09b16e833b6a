#pragma once
// Cobordism-induced chain maps between resolution-cube complexes:
// elementary saddles, births/deaths of free loops, and the homotopy
// equivalences (projection/inclusion pairs) realizing Reidemeister I and II
// simplifications. A movie driver composes these into annulus maps between
// cable diagrams.
#include "cube.hpp"
#include <memory>
#include <optional>
#include <set>

namespace ckh {

// partial arc dictionary between two diagrams (-1 = arc disappears)
using ArcDict = std::vector<int>;

// Circle correspondence at a fixed pair of vertices: for each circle of A at
// rA, the circle of B at rB containing the image of one of its arcs (skipping
// arcs without a dictionary entry). -1 when no arc of the circle maps.
inline std::vector<int> circ_corr(const CubeComplex& A, uint32_t rA,
                                  const CubeComplex& B, uint32_t rB,
                                  const ArcDict& dict) {
    std::vector<int> m(A.ncirc[rA], -1);
    for (int a = 0; a < A.dia.narcs; ++a) {
        if (dict[a] < 0) continue;
        int ca = A.arc2circ[rA][a];
        int cb = B.arc2circ[rB][dict[a]];
        if (m[ca] >= 0 && m[ca] != cb)
            throw std::logic_error("circ_corr: inconsistent dictionary");
        m[ca] = cb;
    }
    return m;
}

// translate a label mask through a circle correspondence (all labeled
// circles must have images)
inline uint32_t push_labels(uint32_t labels, const std::vector<int>& corr) {
    uint32_t out = 0;
    for (size_t k = 0; k < corr.size(); ++k)
        if ((labels >> k) & 1) {
            if (corr[k] < 0) throw std::logic_error("push_labels: lost circle");
            out |= 1u << corr[k];
        }
    return out;
}

// Unsigned label algebra of flipping crossing bit c at vertex r: the images
// of the generator `labels` in the cube at vertex r|1<<c, without the cube
// edge sign. (Same merge/split rules as the cube differential.)
inline std::vector<uint32_t> edge_images(const CubeComplex& K, uint32_t r,
                                         int c, uint32_t labels) {
    uint32_t r2 = r | (1u << c);
    const auto& A = K.arc2circ[r];
    const auto& B = K.arc2circ[r2];
    auto P0 = LinkDiagram::smoothing(K.dia.crossings[c], 0);
    auto P1 = LinkDiagram::smoothing(K.dia.crossings[c], 1);
    int c1 = A[P0[0].first], c2 = A[P0[1].first];
    int z1 = B[P1[0].first], z2 = B[P1[1].first];
    // carry unaffected circles
    std::vector<int> repB(K.ncirc[r2], -1);
    for (int a = 0; a < K.dia.narcs; ++a)
        if (repB[B[a]] < 0) repB[B[a]] = a;
    auto carry = [&](uint32_t extra) {
        uint32_t tl = extra;
        for (int k = 0; k < K.ncirc[r2]; ++k) {
            int sc = A[repB[k]];
            if (sc == c1 || sc == c2) continue;
            if ((labels >> sc) & 1) tl |= 1u << k;
        }
        return tl;
    };
    std::vector<uint32_t> out;
    if (c1 != c2) {  // merge
        int la = (labels >> c1) & 1, lb = (labels >> c2) & 1;
        if (!(la && lb)) out.push_back(carry((la | lb) ? (1u << z1) : 0));
    } else if ((labels >> c1) & 1) {
        out.push_back(carry((1u << z1) | (1u << z2)));
    } else {
        out.push_back(carry(1u << z1));
        out.push_back(carry(1u << z2));
    }
    return out;
}

inline int cube_edge_sign(uint32_t r, int c) {
    return (std::popcount(r & ((1u << c) - 1)) & 1) ? -1 : 1;
}

// One simplification step: target diagram, built cube, and the homotopy
// equivalence pair between the source and target cubes.
struct CobordStep {
    LinkDiagram tgt;
    std::shared_ptr<CubeComplex> cube;  // cube of tgt
    ChainMap fwd;                       // C(src) -> C(tgt)
    ChainMap bwd;                       // C(tgt) -> C(src)
    ArcDict dict;                       // src arc -> tgt arc (-1 = gone)
};

// -------------------------------------------------------------------------
// Elementary saddle between arcs a, b of d (head-swap reconnection). Both
// diagrams share the arc and crossing lists; at each vertex the map is a
// merge or split on the circles through a and b.
// -------------------------------------------------------------------------
inline LinkDiagram head_swap(const LinkDiagram& d, int a, int b) {
    LinkDiagram e = d;
    for (auto& x : e.crossings) {
        int* slots[2] = {&x.in_under, &x.in_over};
        for (int* s : slots) {
            if (*s == a) *s = b;
            else if (*s == b) *s = a;
        }
    }
    e.compute_components();
    return e;
}

inline CobordStep saddle_step(const CubeComplex& K, int a, int b) {
    CobordStep st;
    st.tgt = head_swap(K.dia, a, b);
    st.cube = std::make_shared<CubeComplex>(st.tgt);
    const CubeComplex& T = *st.cube;
    ArcDict dict(K.dia.narcs);
    for (int i = 0; i < K.dia.narcs; ++i) dict[i] = i;
    st.dict = dict;
    st.fwd = ChainMap::zero((int)K.ngen);
    st.bwd = ChainMap::zero((int)T.ngen);
    size_t nv = size_t(1) << K.nx;
    for (size_t r = 0; r < nv; ++r) {
        // correspondence for circles not through a or b
        const auto& A = K.arc2circ[r];
        const auto& B = T.arc2circ[r];
        int caA = A[a], cbA = A[b], caB = B[a], cbB = B[b];
        std::vector<int> corr(K.ncirc[r], -1);
        for (int i = 0; i < K.dia.narcs; ++i) {
            int cA = A[i], cB = B[i];
            if (cA == caA || cA == cbA || cB == caB || cB == cbB) continue;
            corr[cA] = cB;
        }
        for (uint32_t l = 0; l < (uint32_t(1) << K.ncirc[r]); ++l) {
            long long src = K.index((uint32_t)r, l);
            uint32_t rest =
                push_labels(l & ~((1u << caA) | (1u << cbA)), corr);
            if (caA != cbA) {  // merge in the forward direction
                int la = (l >> caA) & 1, lb = (l >> cbA) & 1;
                if (la && lb) continue;
                uint32_t tl = rest | ((la | lb) ? (1u << caB) : 0);
                st.fwd.cols[src][T.index((uint32_t)r, tl)] += 1;
            } else {  // split forward
                if ((l >> caA) & 1) {
                    st.fwd.cols[src][T.index(
                        (uint32_t)r, rest | (1u << caB) | (1u << cbB))] += 1;
                } else {
                    st.fwd.cols[src][T.index((uint32_t)r, rest | (1u << caB))] += 1;
                    st.fwd.cols[src][T.index((uint32_t)r, rest | (1u << cbB))] += 1;
                }
            }
        }
        // backward direction: same saddle read the other way
        std::vector<int> rcorr(T.ncirc[r], -1);
        for (int i = 0; i < K.dia.narcs; ++i) {
            int cA = A[i], cB = B[i];
            if (cA == caA || cA == cbA || cB == caB || cB == cbB) continue;
            rcorr[cB] = cA;
        }
        for (uint32_t l = 0; l < (uint32_t(1) << T.ncirc[r]); ++l) {
            long long src = T.index((uint32_t)r, l);
            uint32_t rest = push_labels(l & ~((1u << caB) | (1u << cbB)), rcorr);
            if (caB != cbB) {  // merge backward
                int la = (l >> caB) & 1, lb = (l >> cbB) & 1;
                if (la && lb) continue;
                uint32_t tl = rest | ((la | lb) ? (1u << caA) : 0);
                st.bwd.cols[src][K.index((uint32_t)r, tl)] += 1;
            } else {
                if ((l >> caB) & 1) {
                    st.bwd.cols[src][K.index(
                        (uint32_t)r, rest | (1u << caA) | (1u << cbA))] += 1;
                } else {
                    st.bwd.cols[src][K.index((uint32_t)r, rest | (1u << caA))] += 1;
                    st.bwd.cols[src][K.index((uint32_t)r, rest | (1u << cbA))] += 1;
                }
            }
        }
    }
    return st;
}

// -------------------------------------------------------------------------
// Merge of two crossingless free loops a, b (target drops arc b), and its
// reverse (split). Used when the saddle site has no crossings at all.
// -------------------------------------------------------------------------
inline LinkDiagram drop_arc(const LinkDiagram& d, int gone, ArcDict& dict) {
    LinkDiagram e;
    dict.assign(d.narcs, -1);
    for (int i = 0; i < d.narcs; ++i)
        if (i != gone) dict[i] = e.narcs++;
    e.crossings = d.crossings;
    for (auto& x : e.crossings) {
        x.in_under = dict[x.in_under];
        x.in_over = dict[x.in_over];
        x.out_under = dict[x.out_under];
        x.out_over = dict[x.out_over];
    }
    e.compute_components();
    return e;
}

inline CobordStep loop_merge_step(const CubeComplex& K, int a, int b) {
    CobordStep st;
    ArcDict dict;
    st.tgt = drop_arc(K.dia, b, dict);
    st.dict = dict;
    st.cube = std::make_shared<CubeComplex>(st.tgt);
    const CubeComplex& T = *st.cube;
    st.fwd = ChainMap::zero((int)K.ngen);
    st.bwd = ChainMap::zero((int)T.ngen);
    size_t nv = size_t(1) << K.nx;
    for (size_t r = 0; r < nv; ++r) {
        auto corr = circ_corr(K, (uint32_t)r, T, (uint32_t)r, dict);
        int ca = K.arc2circ[r][a], cb = K.arc2circ[r][b];
        int tz = T.arc2circ[r][dict[a]];
        for (uint32_t l = 0; l < (uint32_t(1) << K.ncirc[r]); ++l) {
            long long src = K.index((uint32_t)r, l);
            int la = (l >> ca) & 1, lb = (l >> cb) & 1;
            if (la && lb) continue;  // merge: X.X = 0
            uint32_t rest = push_labels(l & ~((1u << ca) | (1u << cb)), corr);
            uint32_t tl = rest | ((la | lb) ? (1u << tz) : 0);
            st.fwd.cols[src][T.index((uint32_t)r, tl)] += 1;
        }
        // reverse: split the merged loop back into two
        std::vector<int> rcorr(T.ncirc[r], -1);
        for (size_t k = 0; k < corr.size(); ++k)
            if (corr[k] >= 0) rcorr[corr[k]] = (int)k;
        for (uint32_t l = 0; l < (uint32_t(1) << T.ncirc[r]); ++l) {
            long long src = T.index((uint32_t)r, l);
            uint32_t rest = push_labels(l & ~(1u << tz), rcorr);
            if ((l >> tz) & 1) {
                st.bwd.cols[src][K.index((uint32_t)r,
                                         rest | (1u << ca) | (1u << cb))] += 1;
            } else {
                st.bwd.cols[src][K.index((uint32_t)r, rest | (1u << ca))] += 1;
                st.bwd.cols[src][K.index((uint32_t)r, rest | (1u << cb))] += 1;
            }
        }
    }
    return st;
}

// -------------------------------------------------------------------------
// Death of a crossingless free loop (counit), and its reverse birth (unit).
// -------------------------------------------------------------------------
inline CobordStep death_step(const CubeComplex& K, int loop_arc) {
    CobordStep st;
    ArcDict dict;
    st.tgt = drop_arc(K.dia, loop_arc, dict);
    st.dict = dict;
    st.cube = std::make_shared<CubeComplex>(st.tgt);
    const CubeComplex& T = *st.cube;
    st.fwd = ChainMap::zero((int)K.ngen);
    st.bwd = ChainMap::zero((int)T.ngen);
    size_t nv = size_t(1) << K.nx;
    for (size_t r = 0; r < nv; ++r) {
        auto corr = circ_corr(K, (uint32_t)r, T, (uint32_t)r, dict);
        int cz = K.arc2circ[r][loop_arc];
        for (uint32_t l = 0; l < (uint32_t(1) << K.ncirc[r]); ++l) {
            if (!((l >> cz) & 1)) continue;  // counit kills the unit label
            long long src = K.index((uint32_t)r, l);
            uint32_t tl = push_labels(l & ~(1u << cz), corr);
            st.fwd.cols[src][T.index((uint32_t)r, tl)] += 1;
        }
        std::vector<int> rcorr(T.ncirc[r], -1);
        for (size_t k = 0; k < corr.size(); ++k)
            if (corr[k] >= 0) rcorr[corr[k]] = (int)k;
        for (uint32_t l = 0; l < (uint32_t(1) << T.ncirc[r]); ++l) {
            long long src = T.index((uint32_t)r, l);
            uint32_t tl = push_labels(l, rcorr);  // born loop labeled 1
            st.bwd.cols[src][K.index((uint32_t)r, tl)] += 1;
        }
    }
    return st;
}

// -------------------------------------------------------------------------
// Reidemeister I: remove kink crossing c. The kept cube vertex is the one
// whose resolution contains the small circle; the projection keeps (kink
// circle = X) for a positive crossing and (kink circle = 1) for a negative
// one, with the standard Gaussian-elimination correction terms.
// -------------------------------------------------------------------------
struct KinkInfo {
    int c;           // crossing index
    int loop_arc;    // the curl arc
    int s_in, s_out; // strand arcs entering/leaving the kink
};

inline std::optional<KinkInfo> find_kink(const LinkDiagram& d, int c) {
    const auto& x = d.crossings[c];
    KinkInfo k;
    k.c = c;
    if (x.in_over == x.out_under) {
        k.loop_arc = x.in_over;
        k.s_in = x.in_under;
        k.s_out = x.out_over;
    } else if (x.in_under == x.out_over) {
        k.loop_arc = x.in_under;
        k.s_in = x.in_over;
        k.s_out = x.out_under;
    } else {
        return std::nullopt;
    }
    return k;
}

// build the target diagram with crossing set `gone` removed and arcs fused
// per the union-find `join` pairs; returns dict old arc -> new arc
inline LinkDiagram remove_crossings(
    const LinkDiagram& d, const std::vector<int>& gone,
    const std::vector<std::pair<int, int>>& join, ArcDict& dict,
    const std::vector<int>& drop = {}) {
    std::vector<int> rep(d.narcs);
    for (int i = 0; i < d.narcs; ++i) rep[i] = i;
    auto find = [&](int x) {
        while (rep[x] != x) x = rep[x] = rep[rep[x]];
        return x;
    };
    for (auto& [u, v] : join) rep[find(u)] = find(v);
    std::vector<char> dropped(d.narcs, 0);
    for (int a : drop) dropped[find(a)] = 1;
    LinkDiagram e;
    dict.assign(d.narcs, -1);
    std::vector<int> dense(d.narcs, -1);
    for (int i = 0; i < d.narcs; ++i)
        if (find(i) == i && !dropped[i]) dense[i] = e.narcs++;
    for (int i = 0; i < d.narcs; ++i) dict[i] = dense[find(i)];
    std::set<int> gs(gone.begin(), gone.end());
    for (int c = 0; c < (int)d.crossings.size(); ++c) {
        if (gs.count(c)) continue;
        auto x = d.crossings[c];
        e.crossings.push_back({dict[x.in_under], dict[x.in_over],
                               dict[x.out_under], dict[x.out_over], x.sign});
    }
    e.compute_components();
    return e;
}

// Build the homotopy-equivalence pair out of a partial Gaussian elimination
// whose survivors are in bijection with the target cube's generators.
// tgtpos[s] = target generator of survivor s (-1 for cancelled generators);
// eps[s] = +-1 reconciling the two cubes' edge-sign conventions. Verifies
// that the reduced differential equals the target differential on the nose.
inline void assemble_equivalence(const Reduction& R, const CubeComplex& T,
                                 const std::vector<long long>& tgtpos,
                                 const std::vector<int>& eps, ChainMap& fwd,
                                 ChainMap& bwd) {
    long long n = R.C.size();
    long long nsurv = 0;
    for (long long s = 0; s < n; ++s) {
        if (!R.alive[s]) {
            if (tgtpos[s] >= 0)
                throw std::logic_error("equivalence: survivor was cancelled");
            continue;
        }
        if (tgtpos[s] < 0)
            throw std::logic_error("equivalence: unexpected survivor");
        ++nsurv;
        const SparseCol& dr = R.C.d[s];
        const SparseCol& dt = T.C.d[tgtpos[s]];
        if (dr.size() != dt.size())
            throw std::logic_error("equivalence: differential mismatch");
        for (auto& [s2, c] : dr) {
            auto it = dt.find(tgtpos[s2]);
            if (it == dt.end() || it->second != c * eps[s] * eps[s2])
                throw std::logic_error("equivalence: differential mismatch");
        }
    }
    if (nsurv != T.ngen) throw std::logic_error("equivalence: size mismatch");
    fwd = ChainMap::zero((int)n);
    bwd = ChainMap::zero((int)T.ngen);
    for (long long g = 0; g < n; ++g)
        for (auto& [s, c] : R.proj[g]) fwd.cols[g][tgtpos[s]] += c * eps[s];
    for (long long s = 0; s < n; ++s) {
        if (!R.alive[s]) continue;
        for (auto& [o, c] : R.incl[s]) bwd.cols[tgtpos[s]][o] += c * eps[s];
    }
}

inline CobordStep r1_step(const CubeComplex& K, const KinkInfo& k) {
    CobordStep st;
    ArcDict dict;
    std::vector<std::pair<int, int>> join;
    if (k.s_in != k.s_out) join.push_back({k.s_in, k.s_out});
    st.tgt = remove_crossings(K.dia, {k.c}, join, dict, {k.loop_arc});
    st.dict = dict;
    st.cube = std::make_shared<CubeComplex>(st.tgt);
    const CubeComplex& T = *st.cube;

    int sign = K.dia.crossings[k.c].sign;
    uint32_t rC = sign > 0 ? 0u : 1u;  // resolution with the kink circle
    size_t nvT = size_t(1) << T.nx;
    auto lift_vertex = [&](uint32_t rt) {  // insert bit k.c = rC
        uint32_t low = rt & ((1u << k.c) - 1);
        uint32_t high = (rt >> k.c) << (k.c + 1);
        return low | high | (rC << k.c);
    };
    std::vector<std::pair<int, int>> pairs;
    std::vector<long long> tgtpos(K.ngen, -1);
    std::vector<int> eps(K.ngen, 1);
    for (size_t rt = 0; rt < nvT; ++rt) {
        uint32_t rs = lift_vertex((uint32_t)rt);  // kink-circle vertex
        uint32_t ro = rs ^ (1u << k.c);           // strand-only vertex
        auto corr = circ_corr(K, rs, T, (uint32_t)rt, dict);  // rs -> tgt
        int cz = K.arc2circ[rs][k.loop_arc];  // the small kink circle
        // circle match rs (minus z) <-> ro via the arcs off the kink loop
        std::vector<int> s2o(K.ncirc[rs], -1);
        std::vector<int> o2s(K.ncirc[ro], -1);
        for (int a = 0; a < K.dia.narcs; ++a) {
            if (a == k.loop_arc) continue;
            s2o[K.arc2circ[rs][a]] = K.arc2circ[ro][a];
            o2s[K.arc2circ[ro][a]] = K.arc2circ[rs][a];
        }
        int es = (rC && (std::popcount((uint32_t)rt >> k.c) & 1)) ? -1 : 1;
        if (sign > 0) {
            // edge rs -> ro is the merge of z into the strand; cancel the
            // z = 1 half against all of ro, keep the z = X half
            for (uint32_t l = 0; l < (uint32_t(1) << K.ncirc[rs]); ++l) {
                uint32_t rest = l & ~(1u << cz);
                if ((l >> cz) & 1) {
                    long long s = K.index(rs, l);
                    tgtpos[s] = T.index((uint32_t)rt, push_labels(rest, corr));
                    eps[s] = es;
                } else {
                    pairs.push_back({(int)K.index(rs, l),
                                     (int)K.index(ro, push_labels(rest, s2o))});
                }
            }
        } else {
            // edge ro -> rs is the split creating z; cancel all of ro
            // against the z = X half of rs, keep the z = 1 half
            for (uint32_t u = 0; u < (uint32_t(1) << K.ncirc[ro]); ++u)
                pairs.push_back(
                    {(int)K.index(ro, u),
                     (int)K.index(rs, push_labels(u, o2s) | (1u << cz))});
            for (uint32_t l = 0; l < (uint32_t(1) << K.ncirc[rs]); ++l) {
                if ((l >> cz) & 1) continue;
                long long s = K.index(rs, l);
                tgtpos[s] = T.index((uint32_t)rt, push_labels(l, corr));
                eps[s] = es;
            }
        }
    }
    Reduction R(K.C, pairs);
    assemble_equivalence(R, T, tgtpos, eps, st.fwd, st.bwd);
    return st;
}

// -------------------------------------------------------------------------
// Reidemeister II: remove a bigon pair x < y with parallel arcs a (over at
// both) and b (under at both).
// -------------------------------------------------------------------------
struct BigonInfo {
    int x, y;    // crossing indices, x < y
    int a, b;    // over arc and under arc of the bigon
    int tx, ty;  // resolutions at x, y producing the bigon circle
};

inline std::optional<BigonInfo> find_bigon(const LinkDiagram& d, int x, int y) {
    const auto& X = d.crossings[x];
    const auto& Y = d.crossings[y];
    auto ends = [&](int arc, const Crossing& c) {
        return c.in_under == arc || c.in_over == arc || c.out_under == arc ||
               c.out_over == arc;
    };
    auto over_at = [&](int arc, const Crossing& c) {
        return c.in_over == arc || c.out_over == arc;
    };
    auto under_at = [&](int arc, const Crossing& c) {
        return c.in_under == arc || c.out_under == arc;
    };
    // candidate arcs with one end at each crossing
    int a = -1, b = -1;
    for (int arc : {X.in_over, X.out_over})
        if (ends(arc, Y) && over_at(arc, Y)) a = arc;
    for (int arc : {X.in_under, X.out_under})
        if (ends(arc, Y) && under_at(arc, Y)) b = arc;
    if (a < 0 || b < 0 || a == b) return std::nullopt;
    if (X.sign == Y.sign) return std::nullopt;  // not an R2 pair
    // locate the resolutions forming the bigon circle: at each crossing the
    // smoothing must pair a with b
    BigonInfo g{x, y, a, b, -1, -1};
    for (int r = 0; r < 2; ++r) {
        auto p = LinkDiagram::smoothing(X, r);
        for (auto& [u, v] : p)
            if ((u == a && v == b) || (u == b && v == a)) g.tx = r;
        p = LinkDiagram::smoothing(Y, r);
        for (auto& [u, v] : p)
            if ((u == a && v == b) || (u == b && v == a)) g.ty = r;
    }
    if (g.tx < 0 || g.ty < 0) return std::nullopt;
    if (g.tx + g.ty != 1) return std::nullopt;  // bigon must sit mid-cube
    return g;
}

inline CobordStep r2_step(const CubeComplex& K, const BigonInfo& g) {
    CobordStep st;
    const auto& X = K.dia.crossings[g.x];
    const auto& Y = K.dia.crossings[g.y];
    // outer strand arcs to fuse with a resp. b
    auto outer = [&](int arc, const Crossing& C1, const Crossing& C2, bool over) {
        // the two non-bigon arcs on the same strand as `arc`
        std::vector<int> outs;
        for (const Crossing* c : {&C1, &C2}) {
            int other = over ? (c->in_over == arc ? c->out_over : c->in_over)
                             : (c->in_under == arc ? c->out_under : c->in_under);
            outs.push_back(other);
        }
        return outs;
    };
    auto ao = outer(g.a, X, Y, true);
    auto bo = outer(g.b, X, Y, false);
    ArcDict dict;
    std::vector<std::pair<int, int>> join = {
        {g.a, ao[0]}, {g.a, ao[1]}, {g.b, bo[0]}, {g.b, bo[1]}};
    st.tgt = remove_crossings(K.dia, {g.x, g.y}, join, dict);
    // the bigon arcs are pinched away by the isotopy: in the kept smoothing
    // each of them runs along the *other* strand's circle, so they must not
    // participate in circle matching
    ArcDict match_dict = dict;
    match_dict[g.a] = match_dict[g.b] = -1;
    st.dict = dict;
    st.cube = std::make_shared<CubeComplex>(st.tgt);
    const CubeComplex& T = *st.cube;
    st.fwd = ChainMap::zero((int)K.ngen);
    st.bwd = ChainMap::zero((int)T.ngen);

    // vertex embedding: insert bits at positions x < y
    auto lift_vertex = [&](uint32_t rt, uint32_t bx, uint32_t by) {
        uint32_t low = rt & ((1u << g.x) - 1);
        uint32_t mid = rt >> g.x;
        uint32_t v = low | (bx << g.x) | ((mid & ((1u << (g.y - g.x - 1)) - 1))
                                          << (g.x + 1));
        uint32_t high = mid >> (g.y - g.x - 1);
        v |= (by << g.y) | (high << (g.y + 1));
        return v;
    };
    uint32_t idx_ = (uint32_t)(1 - g.tx), idy_ = (uint32_t)(1 - g.ty);
    size_t nvT = size_t(1) << T.nx;
    std::vector<std::pair<int, int>> fam1, fam2;
    std::vector<long long> tgtpos(K.ngen, -1);
    std::vector<int> eps(K.ngen, 1);
    for (size_t rt = 0; rt < nvT; ++rt) {
        uint32_t v_id = lift_vertex((uint32_t)rt, idx_, idy_);
        uint32_t v_z = lift_vertex((uint32_t)rt, (uint32_t)g.tx, (uint32_t)g.ty);
        uint32_t v00 = lift_vertex((uint32_t)rt, 0, 0);
        uint32_t v11 = lift_vertex((uint32_t)rt, 1, 1);
        int cz = K.arc2circ[v_z][g.a];  // bigon circle at v_z
        auto corr_id = circ_corr(K, v_id, T, (uint32_t)rt, match_dict);
        // correspondence v_z (minus z) <-> v00 / v11 via arcs != a, b
        auto corr_pair = [&](uint32_t rA, uint32_t rB) {
            std::vector<int> m(K.ncirc[rA], -1);
            for (int arc = 0; arc < K.dia.narcs; ++arc) {
                if (arc == g.a || arc == g.b) continue;
                m[K.arc2circ[rA][arc]] = K.arc2circ[rB][arc];
            }
            return m;
        };
        auto z_to_00 = corr_pair(v_z, v00);
        auto z_to_11 = corr_pair(v_z, v11);
        std::vector<int> c00_to_z(K.ncirc[v00], -1);
        for (size_t i = 0; i < z_to_00.size(); ++i)
            if (z_to_00[i] >= 0) c00_to_z[z_to_00[i]] = (int)i;

        // family 1: the split edge v00 -> v_z kills all of v00 against the
        // z = X half of v_z (unit pivot through Delta's z = X component)
        for (uint32_t u = 0; u < (uint32_t(1) << K.ncirc[v00]); ++u)
            fam1.push_back(
                {(int)K.index(v00, u),
                 (int)K.index(v_z, push_labels(u, c00_to_z) | (1u << cz))});
        // family 2: the merge edge v_z -> v11 kills the z = 1 half of v_z
        // against all of v11 (unit pivot m(1 (x) w) = w)
        for (uint32_t l = 0; l < (uint32_t(1) << K.ncirc[v_z]); ++l) {
            if ((l >> cz) & 1) continue;
            fam2.push_back(
                {(int)K.index(v_z, l),
                 (int)K.index(v11, push_labels(l & ~(1u << cz), z_to_11))});
        }
        // survivors: the identity vertex, relabelled, with the vertex-sign
        // conjugation reconciling the two cubes' edge-sign conventions
        int p1 = std::popcount((uint32_t)rt >> g.x);
        int p2 = std::popcount((uint32_t)rt >> (g.y - 1));
        int es = (((int)idx_ * p1 + (int)idy_ * p2) & 1) ? -1 : 1;
        for (uint32_t l = 0; l < (uint32_t(1) << K.ncirc[v_id]); ++l) {
            long long s = K.index(v_id, l);
            tgtpos[s] = T.index((uint32_t)rt, push_labels(l, corr_id));
            eps[s] = es;
        }
    }
    // family-1 pivots are never disturbed by other family-1 cancellations,
    // and family-2 pivots survive all of family 1; so this order is safe
    fam1.insert(fam1.end(), fam2.begin(), fam2.end());
    Reduction R(K.C, fam1);
    assemble_equivalence(R, T, tgtpos, eps, st.fwd, st.bwd);
    return st;
}

}  // namespace ckh
