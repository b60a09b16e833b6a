#pragma once
// Bigraded chain complexes of Q-vector spaces, Gaussian-elimination reduction
// with inclusion/projection witnesses, and transport of chain maps to homology.
#include "laurent.hpp"
#include "superpoly.hpp"
#include <gmpxx.h>
#include <map>
#include <set>
#include <vector>
#include <cassert>

namespace ckh {

using SparseCol = std::map<int, mpq_class>;  // row index -> coefficient

inline void col_axpy(SparseCol& dst, const mpq_class& c, const SparseCol& src) {
    if (c == 0) return;
    for (auto& [r, v] : src) {
        auto it = dst.find(r);
        if (it == dst.end()) {
            dst.emplace(r, c * v);
        } else {
            it->second += c * v;
            if (it->second == 0) dst.erase(it);
        }
    }
}

struct ChainComplex {
    std::vector<std::pair<int, int>> grading;  // per generator: (h, q)
    std::vector<SparseCol> d;                  // d[i] = boundary of generator i

    int size() const { return (int)grading.size(); }
    int add_gen(int h, int q) {
        grading.push_back({h, q});
        d.emplace_back();
        return size() - 1;
    }

    void check_d_squared() const {  // test support
        for (int i = 0; i < size(); ++i) {
            SparseCol acc;
            for (auto& [j, c] : d[i]) col_axpy(acc, c, d[j]);
            assert(acc.empty());
        }
    }
};

// A chain map between two complexes, columns indexed by source generators in
// the ORIGINAL (unreduced) bases of both complexes.
struct ChainMap {
    std::vector<SparseCol> cols;

    static ChainMap zero(int srcsize) {
        ChainMap f;
        f.cols.resize(srcsize);
        return f;
    }
    SparseCol apply(const SparseCol& v) const {
        SparseCol w;
        for (auto& [i, c] : v) col_axpy(w, c, cols[i]);
        return w;
    }
    // composition: this after g  (src --g--> mid --this--> tgt)
    ChainMap after(const ChainMap& g) const {
        ChainMap f = zero((int)g.cols.size());
        for (size_t i = 0; i < g.cols.size(); ++i) f.cols[i] = apply(g.cols[i]);
        return f;
    }
    // residual of the chain-map equation: d_tgt . f - (-1)^? f . d_src with
    // matching signs trivial here (all our maps commute strictly)
    bool commutes(const ChainComplex& src, const ChainComplex& tgt) const {
        for (int i = 0; i < src.size(); ++i) {
            SparseCol a;  // f(d x)
            for (auto& [j, c] : src.d[i]) col_axpy(a, c, cols[j]);
            SparseCol b;  // d f(x)
            for (auto& [j, c] : cols[i]) col_axpy(b, c, tgt.d[j]);
            for (auto& [r, v] : a) {
                auto it = b.find(r);
                if (it == b.end() || it->second != v) return false;
                b.erase(it);
            }
            if (!b.empty()) return false;
        }
        return true;
    }
};

// Reduce a complex by cancelling differential entries; keeps witnesses
//   proj : original -> reduced   and   incl : reduced -> original,
// both chain maps, with proj.incl = id. The surviving generators form a
// basis of the homology (differential is zero after full reduction).
class Reduction {
public:
    ChainComplex C;               // mutated copy; d empty on completion
    std::vector<char> alive;
    std::vector<SparseCol> proj;  // column g (original) -> reduced coords
    std::vector<SparseCol> incl;  // column a (reduced space uses same ids)

    explicit Reduction(const ChainComplex& input, bool witness = true)
        : C(input), track(witness) {
        init();
        run();
    }

    // Partial reduction: cancel exactly the given (source, target) generator
    // pairs, in order, with witnesses. Each pair must have a nonzero
    // differential entry when its turn comes.
    Reduction(const ChainComplex& input,
              const std::vector<std::pair<int, int>>& pairs)
        : C(input), track(true) {
        init();
        for (auto& [i, j] : pairs) {
            auto it = C.d[i].find(j);
            if (it == C.d[i].end() || it->second == 0)
                throw std::logic_error("partial reduction: missing pivot");
            cancel(i, j, it->second);
        }
    }

    std::vector<int> homology_basis() const {
        std::vector<int> b;
        for (int i = 0; i < C.size(); ++i)
            if (alive[i]) b.push_back(i);
        return b;
    }

    Superpolynomial poly(Convention conv = Convention::Kh) const {
        Superpolynomial s;
        s.conv = conv;
        for (int i = 0; i < C.size(); ++i)
            if (alive[i]) s.p += Laurent2::mono(C.grading[i].first, C.grading[i].second);
        return s;
    }

private:
    bool track;
    std::vector<std::set<int>> rowidx;   // target j -> sources with d entry to j
    std::vector<std::set<int>> projrow;  // reduced row a -> original cols using it

    void init() {
        int n = C.size();
        alive.assign(n, 1);
        if (track) {
            proj.resize(n);
            incl.resize(n);
            for (int i = 0; i < n; ++i) {
                proj[i] = {{i, 1}};
                incl[i] = {{i, 1}};
            }
        }
        rowidx.assign(n, {});
        for (int i = 0; i < n; ++i)
            for (auto& [j, c] : C.d[i]) rowidx[j].insert(i);
        if (track) {
            projrow.assign(n, {});
            for (int i = 0; i < n; ++i) projrow[i].insert(i);
        }
    }

    void run() {
        int n = C.size();
        // pass 1: unit pivots first to limit coefficient growth
        for (int pass = 0; pass < 2; ++pass) {
            bool progress = true;
            while (progress) {
                progress = false;
                for (int i = 0; i < n; ++i) {
                    if (!alive[i] || C.d[i].empty()) continue;
                    int j = -1;
                    mpq_class phi;
                    for (auto& [jj, c] : C.d[i]) {
                        if (pass == 0 && !(c == 1 || c == -1)) continue;
                        j = jj;
                        phi = c;
                        break;
                    }
                    if (j < 0) continue;
                    cancel(i, j, phi);
                    progress = true;
                }
            }
        }
    }

    void cancel(int i, int j, const mpq_class& phi) {
        mpq_class inv = 1 / phi;
        SparseCol gamma = C.d[i];  // remaining targets of i
        gamma.erase(j);
        // d entries into j from other sources
        std::vector<std::pair<int, mpq_class>> into_j;
        for (int x : rowidx[j])
            if (x != i) into_j.push_back({x, C.d[x][j]});

        if (track) {
            // incl: every reduced column keeps id except columns x with
            // d[x] hitting j pick up -incl(i)*inv*delta_x
            for (auto& [x, dx] : into_j)
                if (alive[x]) col_axpy(incl[x], -inv * dx, incl[i]);
            // proj: original columns seeing row i drop it; columns seeing row j
            // replace it with -sum_y gamma_y*inv
            std::vector<int> icols(projrow[i].begin(), projrow[i].end());
            for (int g : icols) {
                proj[g].erase(i);
                projrow[i].erase(g);
            }
            std::vector<int> jcols(projrow[j].begin(), projrow[j].end());
            for (int g : jcols) {
                mpq_class c = proj[g][j];
                proj[g].erase(j);
                projrow[j].erase(g);
                for (auto& [y, gy] : gamma) {
                    auto it = proj[g].find(y);
                    mpq_class add = -c * inv * gy;
                    if (it == proj[g].end()) {
                        if (add != 0) {
                            proj[g][y] = add;
                            projrow[y].insert(g);
                        }
                    } else {
                        it->second += add;
                        if (it->second == 0) {
                            proj[g].erase(it);
                            projrow[y].erase(g);
                        }
                    }
                }
            }
        }

        // differential update: d[x] += -delta_x*inv*gamma, drop entry to j
        for (auto& [x, dx] : into_j) {
            C.d[x].erase(j);
            for (auto& [y, gy] : gamma) {
                auto it = C.d[x].find(y);
                mpq_class add = -dx * inv * gy;
                if (it == C.d[x].end()) {
                    if (add != 0) {
                        C.d[x][y] = add;
                        rowidx[y].insert(x);
                    }
                } else {
                    it->second += add;
                    if (it->second == 0) {
                        C.d[x].erase(it);
                        rowidx[y].erase(x);
                    }
                }
            }
        }
        // retire i and j: clear their outgoing entries and all entries into them
        for (auto& [y, gy] : C.d[i]) rowidx[y].erase(i);
        C.d[i].clear();
        for (auto& [y, gy] : C.d[j]) rowidx[y].erase(j);
        C.d[j].clear();
        for (int x : rowidx[i]) C.d[x].erase(i);
        rowidx[i].clear();
        for (int x : rowidx[j]) C.d[x].erase(j);
        rowidx[j].clear();
        alive[i] = alive[j] = 0;
        if (track) {
            incl[i].clear();
            incl[j].clear();
        }
    }
};

// Matrix of the map induced on homology by a chain map F : C -> C',
// expressed in the reduced bases. Rows/cols are positions into the
// homology_basis() vectors of tgt/src.
struct HomologyMap {
    std::vector<int> src_basis, tgt_basis;          // original-generator ids
    std::vector<std::pair<int, int>> src_gr, tgt_gr;  // bigradings
    std::vector<SparseCol> cols;  // column k: image of src_basis[k], rows index tgt_basis

    static HomologyMap induced(const ChainMap& F, const Reduction& src,
                               const Reduction& tgt) {
        HomologyMap h;
        h.src_basis = src.homology_basis();
        h.tgt_basis = tgt.homology_basis();
        for (int g : h.src_basis) h.src_gr.push_back(src.C.grading[g]);
        for (int g : h.tgt_basis) h.tgt_gr.push_back(tgt.C.grading[g]);
        std::map<int, int> tpos;
        for (int k = 0; k < (int)h.tgt_basis.size(); ++k) tpos[h.tgt_basis[k]] = k;
        for (int g : h.src_basis) {
            SparseCol w = F.apply(src.incl[g]);  // into tgt original basis
            SparseCol red;
            for (auto& [r, c] : w) col_axpy(red, c, tgt.proj[r]);
            SparseCol out;
            for (auto& [r, c] : red) out[tpos.at(r)] = c;
            h.cols.push_back(out);
        }
        return h;
    }
};

}  // namespace ckh
