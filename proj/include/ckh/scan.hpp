#pragma once
// Incremental tangle-scanning computation of Khovanov homology.
//
// The complex is built one crossing at a time. Chain objects are perfect
// matchings of the open boundary ports (arc ends whose crossing has not been
// processed yet); morphisms are linear combinations of dotted cobordisms in
// canonical form: each surface component is a disk over one cycle of the
// union of source and target matchings, carrying at most one dot. Circles
// appearing after a smoothing are delooped immediately, and invertible
// differential entries are cancelled by Gaussian elimination, which keeps the
// object count far below the full 2^c cube.
#include "diagram.hpp"
#include "laurent.hpp"
#include <gmpxx.h>
#include <algorithm>
#include <array>
#include <cassert>
#include <deque>
#include <map>
#include <queue>
#include <tuple>
#include <set>
#include <stdexcept>
#include <vector>

namespace ckh {

// Z/p arithmetic for the optional heuristic modular mode.
template <int P>
struct ModP {
    long long v = 0;
    ModP() = default;
    ModP(long long x) : v(((x % P) + P) % P) {}
    ModP operator+(ModP o) const { return ModP(v + o.v); }
    ModP operator-(ModP o) const { return ModP(v - o.v); }
    ModP operator-() const { return ModP(-v); }
    ModP operator*(ModP o) const { return ModP(v * o.v); }
    ModP inverse() const {  // Fermat
        long long r = 1, b = v, e = P - 2;
        while (e) {
            if (e & 1) r = r * b % P;
            b = b * b % P;
            e >>= 1;
        }
        return ModP(r);
    }
    ModP& operator+=(ModP o) { v = (v + o.v) % P; return *this; }
    bool operator==(ModP o) const { return v == o.v; }
    bool is_zero() const { return v == 0; }
};

template <class F>
struct FieldOps {
    static F inv(const F& x) { return F(1) / x; }
    static bool zero(const F& x) { return x == 0; }
};
template <int P>
struct FieldOps<ModP<P>> {
    static ModP<P> inv(const ModP<P>& x) { return x.inverse(); }
    static bool zero(const ModP<P>& x) { return x.is_zero(); }
};

template <class F = mpq_class>
class Scanner {
public:
    explicit Scanner(LinkDiagram dia) : d(std::move(dia)) {}

    // Homology of the diagram as a (t,q) Laurent polynomial with nonnegative
    // coefficients, in the Kh grading convention.
    Laurent2 run() {
        auto order = girth_order();
        objs.push_back(Obj{});
        alive.push_back(1);
        outs.emplace_back();
        ins.emplace_back();
        for (int c : order) add_crossing(c);
        eliminate();
        Laurent2 res;
        for (size_t i = 0; i < objs.size(); ++i) {
            if (!alive[i]) continue;
            if (!outs[i].empty() || !ins[i].empty())
                throw std::logic_error("scan: nonzero differential at end");
            res += Laurent2::mono(objs[i].h, objs[i].q);
        }
        std::vector<char> used(d.narcs, 0);
        for (auto& x : d.crossings)
            used[x.in_under] = used[x.in_over] = used[x.out_under] = used[x.out_over] = 1;
        Laurent2 loop = Laurent2::mono(0, 1) + Laurent2::mono(0, -1);
        for (int a = 0; a < d.narcs; ++a)
            if (!used[a]) res = res * loop;
        int np = d.n_plus(), nm = (int)d.crossings.size() - np;
        return res.scaled(-nm, np - 2 * nm);
    }

    size_t peak_objects = 0;  // diagnostics

private:
    using Dots = std::vector<int>;      // sorted cycle representatives
    using Mor = std::map<Dots, F>;      // dotted-cobordism linear combination

    struct Obj {
        int h = 0, q = 0;
        std::map<int, int> m;           // port -> partner (both directions)
        std::vector<int> circles;       // pending circles (negative ids)
        std::map<int, int> anchor;      // circle id -> a port it passed through
    };

    const LinkDiagram d;
    std::vector<Obj> objs;
    std::vector<char> alive;
    std::vector<std::set<int>> outs, ins;
    std::map<std::pair<int, int>, Mor> edge;
    std::vector<char> active_arc = std::vector<char>(d.narcs, 0);
    int next_circle = -1;

    static int tail(int a) { return 2 * a; }
    static int head(int a) { return 2 * a + 1; }

    // the two port pairings of crossing c under resolution r
    std::array<std::pair<int, int>, 2> port_pairs(int c, int r) const {
        const Crossing& x = d.crossings[c];
        bool oriented = (x.sign > 0) ? (r == 0) : (r == 1);
        if (oriented)
            return {{{head(x.in_under), tail(x.out_over)},
                     {head(x.in_over), tail(x.out_under)}}};
        return {{{head(x.in_under), head(x.in_over)},
                 {tail(x.out_under), tail(x.out_over)}}};
    }

    std::vector<int> girth_order() const {
        int nx = (int)d.crossings.size();
        std::vector<int> ord;
        std::vector<char> done(nx, 0), act(d.narcs, 0);
        for (int step = 0; step < nx; ++step) {
            int best = -1, bestdelta = 1 << 30;
            for (int c = 0; c < nx; ++c) {
                if (done[c]) continue;
                const Crossing& x = d.crossings[c];
                std::set<int> fresh;
                for (int a : {x.in_under, x.in_over, x.out_under, x.out_over})
                    if (!act[a]) fresh.insert(a);
                int delta = 2 * (int)fresh.size() - 4;
                if (delta < bestdelta) {
                    bestdelta = delta;
                    best = c;
                }
            }
            done[best] = 1;
            const Crossing& x = d.crossings[best];
            for (int a : {x.in_under, x.in_over, x.out_under, x.out_over}) act[a] = 1;
            ord.push_back(best);
        }
        return ord;
    }

    // ---- canonical cycle bookkeeping -------------------------------------

    struct CycleInfo {
        std::map<int, int> rep;    // port -> representative (min port of cycle)
        std::vector<int> reps;     // distinct representatives
    };

    CycleInfo cycles_of(const Obj& A, const Obj& B) const {
        CycleInfo ci;
        std::set<int> todo;
        for (auto& [p, q] : A.m) todo.insert(p);
        while (!todo.empty()) {
            int start = *todo.begin();
            int r = start, p = start;
            std::vector<int> seen;
            bool side = false;  // false: follow A, true: follow B
            do {
                seen.push_back(p);
                r = std::min(r, p);
                auto& m = side ? B.m : A.m;
                auto it = m.find(p);
                if (it == m.end()) throw std::logic_error("cycles_of: port mismatch");
                p = it->second;
                seen.push_back(p);
                r = std::min(r, p);
                side = !side;
            } while (p != start || side);
            for (int x : seen) {
                ci.rep[x] = r;
                todo.erase(x);
            }
            ci.reps.push_back(r);
        }
        return ci;
    }

    // ---- glue-and-reduce: the canonical-form engine ----------------------
    //
    // Pieces are disks (chi = 1). Gluing two pieces along an arc drops chi
    // by 1. Each output boundary cycle is assigned to a piece; a component's
    // genus follows from chi and its cycle count. Dots per component get the
    // standard neck-cutting reduction:
    //   genus+dots = 0 : sum over cycles, all dotted except one
    //   genus+dots = 1 : all cycles dotted, coefficient 2^genus
    //   otherwise     : zero. Closed components evaluate to 2^genus or 0.
    static std::vector<std::pair<Dots, F>> glue_expand(
        int nnodes, const std::vector<std::pair<int, int>>& arcs,
        const std::vector<std::pair<int, int>>& bdry,  // (cycle rep, node)
        const std::vector<int>& node_dots) {
        std::vector<int> uf(nnodes);
        for (int i = 0; i < nnodes; ++i) uf[i] = i;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (auto& [a, b] : arcs) uf[find(a)] = find(b);
        std::map<int, int> comp;  // root -> dense id
        for (int i = 0; i < nnodes; ++i)
            if (!comp.count(find(i))) comp[find(i)] = (int)comp.size();
        int nc = (int)comp.size();
        std::vector<int> pieces(nc, 0), glues(nc, 0), dots(nc, 0);
        std::vector<std::vector<int>> cyc(nc);
        for (int i = 0; i < nnodes; ++i) {
            pieces[comp[find(i)]]++;
            dots[comp[find(i)]] += node_dots[i];
        }
        for (auto& [a, b] : arcs) glues[comp[find(a)]]++;
        for (auto& [r, n] : bdry) cyc[comp[find(n)]].push_back(r);

        std::vector<std::pair<Dots, F>> out = {{Dots{}, F(1)}};
        for (int cmp = 0; cmp < nc; ++cmp) {
            int chi = pieces[cmp] - glues[cmp];
            int k = (int)cyc[cmp].size();
            int dd = dots[cmp];
            std::vector<std::pair<Dots, F>> local;
            if (k == 0) {
                int twog = 2 - chi;
                if (twog < 0 || twog % 2) throw std::logic_error("glue: bad closed chi");
                int g = twog / 2;
                if (g + dd == 1) {
                    F f(1);
                    for (int i = 0; i < g; ++i) f = f * F(2);
                    local.push_back({Dots{}, f});
                }  // else component evaluates to zero
            } else {
                int twog = 2 - chi - k;
                if (twog < 0 || twog % 2) throw std::logic_error("glue: bad chi");
                int g = twog / 2;
                if (g + dd == 0) {
                    for (int skip = 0; skip < k; ++skip) {
                        Dots ds;
                        for (int i = 0; i < k; ++i)
                            if (i != skip) ds.push_back(cyc[cmp][i]);
                        local.push_back({ds, F(1)});
                    }
                } else if (g + dd == 1) {
                    F f(1);
                    for (int i = 0; i < g; ++i) f = f * F(2);
                    local.push_back({Dots(cyc[cmp].begin(), cyc[cmp].end()), f});
                }  // else zero
            }
            if (local.empty()) return {};
            std::vector<std::pair<Dots, F>> next;
            for (auto& [ds, cf] : out)
                for (auto& [lds, lcf] : local) {
                    Dots nd = ds;
                    nd.insert(nd.end(), lds.begin(), lds.end());
                    next.push_back({nd, cf * lcf});
                }
            out = std::move(next);
        }
        for (auto& [ds, cf] : out) std::sort(ds.begin(), ds.end());
        return out;
    }

    static void mor_add(Mor& m, const Dots& dts, const F& c) {
        auto it = m.find(dts);
        if (it == m.end()) {
            if (!FieldOps<F>::zero(c)) m.emplace(dts, c);
        } else {
            it->second += c;
            if (FieldOps<F>::zero(it->second)) m.erase(it);
        }
    }

    void set_edge(int a, int b, Mor m) {
        auto key = std::make_pair(a, b);
        if (m.empty()) {
            if (edge.count(key)) {
                edge.erase(key);
                outs[a].erase(b);
                ins[b].erase(a);
            }
            return;
        }
        edge[key] = std::move(m);
        outs[a].insert(b);
        ins[b].insert(a);
    }

    // ---- morphism constructors -------------------------------------------

    // composite g.f with f : X->B, g : B->Y (all circle-free)
    Mor compose(const Obj& X, const Obj& B, const Obj& Y, const Mor& f,
                const Mor& g) const {
        CycleInfo cxb = cycles_of(X, B), cby = cycles_of(B, Y);
        CycleInfo cxy = cycles_of(X, Y);
        std::map<int, int> n0, n1;
        for (int r : cxb.reps) n0[r] = (int)n0.size();
        int off = (int)n0.size();
        for (int r : cby.reps) n1[r] = off + (int)n1.size();
        int nn = off + (int)n1.size();
        std::vector<std::pair<int, int>> arcs;
        std::set<int> seen;
        for (auto& [p, q] : B.m) {
            if (seen.count(p)) continue;
            seen.insert(p);
            seen.insert(q);
            arcs.push_back({n0[cxb.rep.at(p)], n1[cby.rep.at(p)]});
        }
        std::vector<std::pair<int, int>> bdry;
        for (int r : cxy.reps) bdry.push_back({r, n0[cxb.rep.at(r)]});
        Mor out;
        for (auto& [fd, fc] : f)
            for (auto& [gd, gc] : g) {
                std::vector<int> nd(nn, 0);
                for (int r : fd) nd[n0.at(r)]++;
                for (int r : gd) nd[n1.at(r)]++;
                for (auto& [ds, cf] : glue_expand(nn, arcs, bdry, nd))
                    mor_add(out, ds, fc * gc * cf);
            }
        return out;
    }

    // f (x) identity-over-smoothing-s: carry an old edge f : O->P through the
    // attachment of crossing c with resolution s on both sides.
    Mor tensor_carry(const Obj& O, const Obj& P, const Mor& f, int c, int s,
                     const Obj& TO, const Obj& TP) const {
        CycleInfo cop = cycles_of(O, P);
        std::map<int, int> node;
        for (int r : cop.reps) node[r] = (int)node.size();
        int sq0 = (int)node.size(), sq1 = sq0 + 1, nn = sq0 + 2;
        auto pp = port_pairs(c, s);
        std::vector<std::pair<int, int>> arcs;
        for (int j = 0; j < 2; ++j)
            for (int p : {pp[j].first, pp[j].second})
                arcs.push_back({j == 0 ? sq0 : sq1, node.at(cop.rep.at(p))});
        CycleInfo cnew = cycles_of(TO, TP);
        std::vector<std::pair<int, int>> bdry;
        for (int r : cnew.reps) bdry.push_back({r, node.at(cop.rep.at(r))});
        for (auto* T : {&TO, &TP})
            for (int cid : T->circles)
                bdry.push_back({cid, node.at(cop.rep.at(T->anchor.at(cid)))});
        Mor out;
        for (auto& [fd, fc] : f) {
            std::vector<int> nd(nn, 0);
            for (int r : fd) nd[node.at(r)]++;
            for (auto& [ds, cf] : glue_expand(nn, arcs, bdry, nd))
                mor_add(out, ds, fc * cf);
        }
        return out;
    }

    // elementary saddle between the two resolutions of crossing c on top of
    // object O (matching M before consumption)
    Mor saddle(const Obj& O, int c, const Obj& T0, const Obj& T1,
               const F& coeff) const {
        // strand squares of M indexed by min port, plus the saddle block
        std::map<int, int> node;
        for (auto& [p, q] : O.m) {
            int r = std::min(p, q);
            if (!node.count(r)) node[r] = (int)node.size();
        }
        auto strand_of = [&](int p) { return node.at(std::min(p, O.m.at(p))); };
        int block = (int)node.size(), nn = block + 1;
        std::vector<std::pair<int, int>> arcs;
        auto pp = port_pairs(c, 0);
        for (int j = 0; j < 2; ++j)
            for (int p : {pp[j].first, pp[j].second})
                arcs.push_back({block, strand_of(p)});
        CycleInfo cnew = cycles_of(T0, T1);
        std::vector<std::pair<int, int>> bdry;
        for (int r : cnew.reps) bdry.push_back({r, strand_of(r)});
        for (auto* T : {&T0, &T1})
            for (int cid : T->circles) bdry.push_back({cid, strand_of(T->anchor.at(cid))});
        std::vector<int> nd(nn, 0);
        Mor out;
        for (auto& [ds, cf] : glue_expand(nn, arcs, bdry, nd))
            mor_add(out, ds, coeff * cf);
        return out;
    }

    // ---- the scan --------------------------------------------------------

    int new_obj(Obj o) {
        objs.push_back(std::move(o));
        alive.push_back(1);
        outs.emplace_back();
        ins.emplace_back();
        return (int)objs.size() - 1;
    }

    void kill_obj(int i) {
        for (int b : std::vector<int>(outs[i].begin(), outs[i].end())) {
            edge.erase({i, b});
            ins[b].erase(i);
        }
        for (int a : std::vector<int>(ins[i].begin(), ins[i].end())) {
            edge.erase({a, i});
            outs[a].erase(i);
        }
        outs[i].clear();
        ins[i].clear();
        alive[i] = 0;
        // release the payload of dead objects; long scans retire millions
        objs[i].m.clear();
        objs[i].circles.clear();
        objs[i].circles.shrink_to_fit();
        objs[i].anchor.clear();
    }

    // apply smoothing pairs to a matching; records circles with anchors
    Obj smoothed(const Obj& O, int c, int s) {
        Obj t = O;
        t.h = O.h + s;
        t.q = O.q + s;
        for (auto& [p, q] : port_pairs(c, s)) {
            int u = t.m.at(p), v = t.m.at(q);
            t.m.erase(p);
            t.m.erase(q);
            if (u == q) {  // the strand was exactly {p,q}: a circle closes
                int cid = next_circle--;
                t.circles.push_back(cid);
                t.anchor[cid] = p;
            } else {
                t.m[u] = v;
                t.m[v] = u;
            }
        }
        return t;
    }

    void add_crossing(int c) {
        const Crossing& x = d.crossings[c];
        // activate untouched arcs: they enter every matching as a bare strand
        for (int a : {x.in_under, x.in_over, x.out_under, x.out_over})
            if (!active_arc[a]) {
                active_arc[a] = 1;
                for (size_t i = 0; i < objs.size(); ++i)
                    if (alive[i]) {
                        objs[i].m[tail(a)] = head(a);
                        objs[i].m[head(a)] = tail(a);
                    }
            }
        std::vector<int> old;
        for (size_t i = 0; i < objs.size(); ++i)
            if (alive[i]) old.push_back((int)i);
        auto old_edges = std::move(edge);
        edge.clear();

        std::map<std::pair<int, int>, int> tid;  // (old obj, s) -> new obj
        for (int o : old)
            for (int s = 0; s < 2; ++s)
                tid[{o, s}] = new_obj(smoothed(objs[o], c, s));
        // carried differentials
        for (auto& [key, f] : old_edges) {
            auto [o, p] = key;
            for (int s = 0; s < 2; ++s) {
                Mor g = tensor_carry(objs[o], objs[p], f, c, s,
                                     objs[tid[{o, s}]], objs[tid[{p, s}]]);
                set_edge(tid[{o, s}], tid[{p, s}], std::move(g));
            }
        }
        // new saddle differentials
        for (int o : old) {
            F sgn = (objs[o].h % 2) ? F(-1) : F(1);
            Mor g = saddle(objs[o], c, objs[tid[{o, 0}]], objs[tid[{o, 1}]], sgn);
            set_edge(tid[{o, 0}], tid[{o, 1}], std::move(g));
        }
        for (int o : old) kill_obj(o);
        deloop();
        eliminate();
        size_t cnt = 0;
        for (size_t i = 0; i < objs.size(); ++i) cnt += alive[i];
        peak_objects = std::max(peak_objects, cnt);
#ifdef CKH_SCAN_TRACE
        std::fprintf(stderr, "crossing %d: %zu objects, %zu edges\n", c, cnt,
                     edge.size());
#endif
    }

    void deloop() {
        bool again = true;
        while (again) {
            again = false;
            for (size_t i = 0; i < objs.size(); ++i) {
                if (!alive[i] || objs[i].circles.empty()) continue;
                again = true;
                int cid = objs[i].circles.back();
                Obj plus = objs[i], minus = objs[i];
                plus.circles.pop_back();
                minus.circles.pop_back();
                plus.anchor.erase(cid);
                minus.anchor.erase(cid);
                plus.q += 1;
                minus.q -= 1;
                int ip = new_obj(std::move(plus)), im = new_obj(std::move(minus));
                // incoming f : X -> T. Plus summand keeps generators with the
                // circle undotted; minus keeps dotted ones (dot absorbed).
                for (int a : std::vector<int>(ins[i].begin(), ins[i].end())) {
                    Mor& f = edge.at({a, (int)i});
                    Mor fp, fm;
                    for (auto& [ds, cf] : f) {
                        auto it = std::find(ds.begin(), ds.end(), cid);
                        if (it == ds.end()) {
                            mor_add(fp, ds, cf);
                        } else {
                            Dots nd = ds;
                            nd.erase(nd.begin() + (it - ds.begin()));
                            mor_add(fm, nd, cf);
                        }
                    }
                    set_edge(a, ip, std::move(fp));
                    set_edge(a, im, std::move(fm));
                }
                // outgoing g : T -> Y. Plus summand keeps dotted generators.
                for (int b : std::vector<int>(outs[i].begin(), outs[i].end())) {
                    Mor& g = edge.at({(int)i, b});
                    Mor gp, gm;
                    for (auto& [ds, cf] : g) {
                        auto it = std::find(ds.begin(), ds.end(), cid);
                        if (it == ds.end()) {
                            mor_add(gm, ds, cf);
                        } else {
                            Dots nd = ds;
                            nd.erase(nd.begin() + (it - ds.begin()));
                            mor_add(gp, nd, cf);
                        }
                    }
                    set_edge(ip, b, std::move(gp));
                    set_edge(im, b, std::move(gm));
                }
                kill_obj((int)i);
            }
        }
    }

    bool invertible(int a, int b, const Mor& m) const {
        if (objs[a].q != objs[b].q) return false;
        if (objs[a].m != objs[b].m) return false;
        return m.size() == 1 && m.begin()->first.empty();
    }

    long long pivot_cost(int a, int b) const {
        return (long long)(ins[b].size() - 1) * (long long)(outs[a].size() - 1);
    }

    void eliminate() {
        // Lazy-heap Markowitz pivoting: an edge can only become invertible
        // when it is created or modified, so seeding with all edges and
        // re-queueing the updated ones after each cancellation finds every
        // pivot; among the available pivots, always cancelling the one with
        // the smallest fill-in bound (#ins-1)(#outs-1) keeps the edge count
        // (and with it peak memory) far below creation-order cancellation.
        // Stale heap entries are detected by cost mismatch and re-pushed.
        using Item = std::tuple<long long, int, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        auto push = [&](int a, int b) {
            auto it = edge.find({a, b});
            if (it != edge.end() && invertible(a, b, it->second))
                heap.push({pivot_cost(a, b), a, b});
        };
        for (auto& [k, m] : edge) push(k.first, k.second);
        std::deque<std::pair<int, int>> touched;
        while (!heap.empty()) {
            auto [cost, a, b] = heap.top();
            heap.pop();
            if (!alive[a] || !alive[b]) continue;
            auto it = edge.find({a, b});
            if (it == edge.end() || !invertible(a, b, it->second)) continue;
            if (cost != pivot_cost(a, b)) {  // stale: degrees changed
                heap.push({pivot_cost(a, b), a, b});
                continue;
            }
            cancel(a, b, it->second.begin()->second, touched);
            for (auto& [x, y] : touched) push(x, y);
            touched.clear();
        }
    }

    void cancel(int a, int b, const F& phi, std::deque<std::pair<int, int>>& work) {
        F inv = FieldOps<F>::inv(phi);
        std::vector<int> xs(ins[b].begin(), ins[b].end());
        std::vector<int> ys(outs[a].begin(), outs[a].end());
        // snapshot morphisms before deleting
        std::map<int, Mor> xb, ay;
        for (int x : xs)
            if (x != a) xb[x] = edge.at({x, b});
        for (int y : ys)
            if (y != b) ay[y] = edge.at({a, y});
        const Obj& mid = objs[a];  // same matching as b
        for (auto& [x, fxb] : xb)
            for (auto& [y, gay] : ay) {
                Mor corr = compose(objs[x], mid, objs[y], fxb, gay);
                auto key = std::make_pair(x, y);
                Mor cur = edge.count(key) ? edge.at(key) : Mor{};
                for (auto& [ds, cf] : corr) mor_add(cur, ds, -(inv * cf));
                set_edge(x, y, std::move(cur));
                work.push_back(key);
            }
        kill_obj(a);
        kill_obj(b);
    }
};

}  // namespace ckh
