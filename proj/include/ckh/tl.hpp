#pragma once
// Symbolic Temperley-Lieb category: crossingless matchings, linear
// combinations over an exact coefficient ring with a circle parameter,
// Jones-Wenzl projectors, the Fibonacci-cube complexes C_n, and colored
// Jones polynomials as Euler-characteristic oracles.
#include "bracket.hpp"
#include "diagram.hpp"
#include "laurent.hpp"
#include "ratfunc.hpp"
#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace ckh {

// ---------------------------------------------------------------------------
// Coefficient rings. TLRing<R> supplies the circle parameter and quantum
// integers: R = RatFunc works in Q(q) with d = [2]; R = mpq_class works in Q
// at q = 1 with d = 2.
// ---------------------------------------------------------------------------
template <class R> struct TLRing;

template <> struct TLRing<RatFunc> {
    static RatFunc d() { return qint(2); }
    static RatFunc qint(int n) {
        QPoly p;
        for (int e = -(n - 1); e <= n - 1; e += 2) p += QPoly::mono(e);
        return RatFunc::poly(p);
    }
    static bool is_zero(const RatFunc& r) { return r.is_zero(); }
};

template <> struct TLRing<mpq_class> {
    static mpq_class d() { return 2; }
    static mpq_class qint(int n) { return n; }
    static bool is_zero(const mpq_class& r) { return r == 0; }
};

// ---------------------------------------------------------------------------
// Diagrams: a crossingless matching on n bottom points (0..n-1, left to
// right) and m top points (n..n+m-1, left to right), stored as the full
// involution pair[i] = partner of point i. This representation is already
// canonical, so it doubles as the hash key for linear combinations.
// ---------------------------------------------------------------------------
struct TLDiag {
    int n = 0, m = 0;
    std::vector<int> pair_;

    bool operator==(const TLDiag& o) const {
        return n == o.n && m == o.m && pair_ == o.pair_;
    }
    bool operator<(const TLDiag& o) const {
        if (n != o.n) return n < o.n;
        if (m != o.m) return m < o.m;
        return pair_ < o.pair_;
    }
    // position along the disk boundary: bottom left-to-right, then top
    // right-to-left
    int circ(int i) const { return i < n ? i : n + (n + m - 1 - i); }
    bool planar() const {
        int N = n + m;
        if (N % 2) return false;
        for (int a = 0; a < N; ++a) {
            if (pair_[a] == a || pair_[a] < 0 || pair_[a] >= N) return false;
            if (pair_[pair_[a]] != a) return false;
        }
        for (int a = 0; a < N; ++a)
            for (int c = 0; c < N; ++c) {
                if (a == c || a == pair_[c]) continue;
                int b = pair_[a], d = pair_[c];
                int ca = circ(a), cb = circ(b), cc = circ(c), cd = circ(d);
                if (ca > cb) std::swap(ca, cb);
                bool c_in = ca < cc && cc < cb, d_in = ca < cd && cd < cb;
                if (c_in != d_in) return false;  // interleaved pair
            }
        return true;
    }
};

inline TLDiag tl_id_diag(int n) {
    TLDiag d;
    d.n = d.m = n;
    d.pair_.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        d.pair_[i] = n + i;
        d.pair_[n + i] = i;
    }
    return d;
}

// e_i in TL_n (0-based, strands i and i+1): cup-over-cap turnback
inline TLDiag tl_e_diag(int n, int i) {
    TLDiag d = tl_id_diag(n);
    d.pair_[i] = i + 1;
    d.pair_[i + 1] = i;
    d.pair_[n + i] = n + i + 1;
    d.pair_[n + i + 1] = n + i;
    return d;
}

// cap at position i: n -> n-2, joining bottom points i, i+1
inline TLDiag tl_cap_diag(int n, int i) {
    TLDiag d;
    d.n = n;
    d.m = n - 2;
    d.pair_.resize(2 * n - 2);
    d.pair_[i] = i + 1;
    d.pair_[i + 1] = i;
    for (int j = 0; j < n; ++j) {
        if (j == i || j == i + 1) continue;
        int t = n + (j < i ? j : j - 2);
        d.pair_[j] = t;
        d.pair_[t] = j;
    }
    return d;
}

// cup at position i: n-2 -> n, creating top points i, i+1
inline TLDiag tl_cup_diag(int n, int i) {
    TLDiag d;
    d.n = n - 2;
    d.m = n;
    d.pair_.resize(2 * n - 2);
    int base = n - 2;
    d.pair_[base + i] = base + i + 1;
    d.pair_[base + i + 1] = base + i;
    for (int j = 0; j < n - 2; ++j) {
        int t = base + (j < i ? j : j + 2);
        d.pair_[j] = t;
        d.pair_[t] = j;
    }
    return d;
}

// Stack f on top of g (g: a -> b first, then f: b -> c); returns the glued
// matching on a bottom + c top points and the number of closed loops formed.
inline std::pair<TLDiag, int> tl_stack(const TLDiag& f, const TLDiag& g) {
    if (g.m != f.n) throw std::invalid_argument("TL compose: boundary mismatch");
    int a = g.n, b = g.m, c = f.m;
    // node ids: 0..a-1 outer bottom, a..a+c-1 outer top, a+c..a+c+b-1 middle
    auto gnode = [&](int p) { return p < a ? p : a + c + (p - a); };
    auto fnode = [&](int p) { return p < b ? a + c + p : a + (p - b); };
    std::vector<int> adj(a + c + b, -1);  // matching edges from both diagrams
    // each node has exactly one matching edge from its own diagram; middle
    // nodes have one from each side, so store both
    std::vector<int> from_g(a + c + b, -1), from_f(a + c + b, -1);
    for (int p = 0; p < a + b; ++p) {
        int u = gnode(p), v = gnode(g.pair_[p]);
        from_g[u] = v;
    }
    for (int p = 0; p < b + c; ++p) {
        int u = fnode(p), v = fnode(f.pair_[p]);
        from_f[u] = v;
    }
    (void)adj;
    TLDiag r;
    r.n = a;
    r.m = c;
    r.pair_.assign(a + c, -1);
    std::vector<char> seen(a + c + b, 0);
    auto walk = [&](int start) {
        // start is an outer node; its single matching edge comes from g if
        // bottom, from f if top
        int cur = start;
        bool use_g = start < a;
        for (;;) {
            seen[cur] = 1;
            int nxt = use_g ? from_g[cur] : from_f[cur];
            seen[nxt] = 1;
            if (nxt < a + c) return nxt;  // reached an outer node
            cur = nxt;       // middle node: continue through the other diagram
            use_g = !use_g;  // g-arcs and f-arcs alternate through the middle
        }
    };
    for (int s = 0; s < a + c; ++s) {
        if (r.pair_[s] >= 0) continue;
        int e = walk(s);
        r.pair_[s] = e;
        r.pair_[e] = s;
    }
    int loops = 0;
    for (int v = a + c; v < a + c + b; ++v) {
        if (seen[v]) continue;
        ++loops;
        int cur = v;
        bool use_g = true;
        do {
            seen[cur] = 1;
            cur = use_g ? from_g[cur] : from_f[cur];
            use_g = !use_g;
        } while (cur != v || !use_g);
    }
    return {r, loops};
}

inline TLDiag tl_tensor_diag(const TLDiag& x, const TLDiag& y) {
    TLDiag r;
    r.n = x.n + y.n;
    r.m = x.m + y.m;
    r.pair_.resize(r.n + r.m);
    auto xnode = [&](int p) { return p < x.n ? p : r.n + (p - x.n); };
    auto ynode = [&](int p) {
        return p < y.n ? x.n + p : r.n + x.m + (p - y.n);
    };
    for (int p = 0; p < x.n + x.m; ++p) r.pair_[xnode(p)] = xnode(x.pair_[p]);
    for (int p = 0; p < y.n + y.m; ++p) r.pair_[ynode(p)] = ynode(y.pair_[p]);
    return r;
}

// 180-degree rotation: swaps bottom and top and reverses left-right
inline TLDiag tl_rotate_diag(const TLDiag& d) {
    TLDiag r;
    r.n = d.m;
    r.m = d.n;
    r.pair_.resize(d.n + d.m);
    auto map = [&](int p) {
        return p < d.n ? r.n + (d.n - 1 - p) : (d.n + d.m - 1 - p);
    };
    for (int p = 0; p < d.n + d.m; ++p) r.pair_[map(p)] = map(d.pair_[p]);
    return r;
}

// ---------------------------------------------------------------------------
// Linear combinations of diagrams with fixed (source, target)
// ---------------------------------------------------------------------------
template <class R> struct TLMor {
    int n = 0, m = 0;
    std::map<std::vector<int>, R> terms;  // keyed by the pairing sequence

    static TLMor single(const TLDiag& d, R coeff = R(1)) {
        TLMor f;
        f.n = d.n;
        f.m = d.m;
        if (!TLRing<R>::is_zero(coeff)) f.terms[d.pair_] = coeff;
        return f;
    }
    static TLMor zero(int n, int m) {
        TLMor f;
        f.n = n;
        f.m = m;
        return f;
    }
    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<int>& key, const R& c) {
        auto it = terms.find(key);
        if (it == terms.end()) {
            if (!TLRing<R>::is_zero(c)) terms[key] = c;
        } else {
            it->second = it->second + c;
            if (TLRing<R>::is_zero(it->second)) terms.erase(it);
        }
    }
    friend TLMor operator+(const TLMor& a, const TLMor& b) {
        TLMor r = a;
        for (auto& [k, c] : b.terms) r.add(k, c);
        return r;
    }
    friend TLMor operator-(const TLMor& a, const TLMor& b) {
        TLMor r = a;
        for (auto& [k, c] : b.terms) r.add(k, R(0) - c);
        return r;
    }
    TLMor scaled(const R& s) const {
        TLMor r = zero(n, m);
        if (TLRing<R>::is_zero(s)) return r;
        for (auto& [k, c] : terms) {
            R v = c * s;
            if (!TLRing<R>::is_zero(v)) r.terms[k] = v;
        }
        return r;
    }
    friend bool operator==(const TLMor& a, const TLMor& b) {
        return a.n == b.n && a.m == b.m && a.terms == b.terms;
    }
};

template <class R> TLMor<R> tl_id(int n) {
    return TLMor<R>::single(tl_id_diag(n));
}
template <class R> TLMor<R> tl_e(int n, int i) {
    return TLMor<R>::single(tl_e_diag(n, i));
}
template <class R> TLMor<R> tl_cap(int n, int i) {
    return TLMor<R>::single(tl_cap_diag(n, i));
}
template <class R> TLMor<R> tl_cup(int n, int i) {
    return TLMor<R>::single(tl_cup_diag(n, i));
}

// f after g: source(f) must equal target(g)
template <class R> TLMor<R> compose(const TLMor<R>& f, const TLMor<R>& g) {
    if (g.m != f.n) throw std::invalid_argument("TL compose: boundary mismatch");
    TLMor<R> r = TLMor<R>::zero(g.n, f.m);
    R d = TLRing<R>::d();
    for (auto& [kf, cf] : f.terms)
        for (auto& [kg, cg] : g.terms) {
            TLDiag df{f.n, f.m, kf}, dg{g.n, g.m, kg};
            auto [glued, loops] = tl_stack(df, dg);
            R c = cf * cg;
            for (int i = 0; i < loops; ++i) c = c * d;
            r.add(glued.pair_, c);
        }
    return r;
}

template <class R> TLMor<R> tensor(const TLMor<R>& x, const TLMor<R>& y) {
    TLMor<R> r = TLMor<R>::zero(x.n + y.n, x.m + y.m);
    for (auto& [kx, cx] : x.terms)
        for (auto& [ky, cy] : y.terms) {
            TLDiag dx{x.n, x.m, kx}, dy{y.n, y.m, ky};
            r.add(tl_tensor_diag(dx, dy).pair_, cx * cy);
        }
    return r;
}

template <class R> TLMor<R> tl_rotate(const TLMor<R>& f) {
    TLMor<R> r = TLMor<R>::zero(f.m, f.n);
    for (auto& [k, c] : f.terms) {
        TLDiag d{f.n, f.m, k};
        r.add(tl_rotate_diag(d).pair_, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Jones-Wenzl projectors, memoized per ring:
//   p_1 = id,  p_n = p' - ([n-1]/[n]) p' e_{n-1} p'  with  p' = p_{n-1} (x) 1
// ---------------------------------------------------------------------------
template <class R> const TLMor<R>& jones_wenzl(int n) {
    static std::map<int, TLMor<R>> memo;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    TLMor<R> p;
    if (n == 0) {
        p = TLMor<R>::zero(0, 0);
        TLDiag empty;
        p.terms[empty.pair_] = R(1);
    } else if (n == 1) {
        p = tl_id<R>(1);
    } else {
        TLMor<R> pp = tensor(jones_wenzl<R>(n - 1), tl_id<R>(1));
        R coef = TLRing<R>::qint(n - 1) / TLRing<R>::qint(n);
        p = pp - compose(pp, compose(tl_e<R>(n, n - 2), pp)).scaled(coef);
    }
    return memo.emplace(n, std::move(p)).first->second;
}

// ---------------------------------------------------------------------------
// The complexes C_n: degree-k chain objects are compositions of n into 1s
// and 2s with exactly k twos; the differential merges two adjacent 1s into
// a 2, acting by a cap, with sign (-1)^(number of 2s left of the new 2).
// ---------------------------------------------------------------------------
struct TLSummand {
    int obj;                    // number of TL strands = number of 1s
    std::vector<int> comp;      // the composition (entries 1 and 2)
};

struct TLEntry {
    int degree;   // differential out of this homological degree
    int row;      // index of target summand in degree+1 (cap) / degree-1 shape
    int col;      // index of source summand
    int coeff;    // +1 or -1
    bool is_cup;  // false: cap(src_obj, pos); true: cup(tgt_obj... see entry_mor
    int pos;      // strand position of the turnback
};

struct TLComplex {
    int n = 0;
    int min_degree = 0;                        // lowest homological degree
    std::vector<std::vector<TLSummand>> degs;  // degs[k - min_degree]
    std::vector<TLEntry> entries;              // all differential entries

    int ndeg() const { return (int)degs.size(); }
    const std::vector<TLSummand>& at(int degree) const {
        return degs[degree - min_degree];
    }
    template <class R> TLMor<R> entry_mor(const TLEntry& e) const {
        int src = degs[e.degree - min_degree][e.col].obj;
        TLMor<R> m = e.is_cup ? tl_cup<R>(src + 2, e.pos)
                              : tl_cap<R>(src, e.pos);
        return e.coeff == 1 ? m : m.scaled(R(-1));
    }
};

inline TLComplex build_Cn(int n) {
    TLComplex C;
    C.n = n;
    // enumerate compositions grouped by number of 2s
    int kmax = n / 2;
    C.min_degree = 0;
    C.degs.resize(kmax + 1);
    std::map<std::vector<int>, std::pair<int, int>> index;  // comp -> (deg,idx)
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            int twos = (int)std::count(cur.begin(), cur.end(), 2);
            TLSummand s;
            s.comp = cur;
            s.obj = (int)cur.size() - twos;  // number of 1s
            index[cur] = {twos, (int)C.degs[twos].size()};
            C.degs[twos].push_back(std::move(s));
            return;
        }
        for (int part : {1, 2}) {
            if (part > rem) continue;
            cur.push_back(part);
            self(self, rem - part);
            cur.pop_back();
        }
    };
    rec(rec, n);
    // differential: replace an adjacent pair of 1s by a 2
    for (int k = 0; k < kmax; ++k) {
        for (int ci = 0; ci < (int)C.degs[k].size(); ++ci) {
            const auto& s = C.degs[k][ci];
            for (size_t i = 0; i + 1 < s.comp.size(); ++i) {
                if (s.comp[i] != 1 || s.comp[i + 1] != 1) continue;
                std::vector<int> tgt(s.comp.begin(), s.comp.begin() + i);
                tgt.push_back(2);
                tgt.insert(tgt.end(), s.comp.begin() + i + 2, s.comp.end());
                auto [tk, ti] = index.at(tgt);
                (void)tk;
                int ell = (int)std::count(s.comp.begin(), s.comp.begin() + i, 2);
                int ones_left =
                    (int)std::count(s.comp.begin(), s.comp.begin() + i, 1);
                TLEntry e;
                e.degree = k;
                e.row = ti;
                e.col = ci;
                e.coeff = (ell % 2 == 0) ? 1 : -1;
                e.is_cup = false;
                e.pos = ones_left;  // cap joins the two merged strands
                C.entries.push_back(e);
            }
        }
    }
    return C;
}

inline TLComplex dual_complex(const TLComplex& C) {
    TLComplex D;
    D.n = C.n;
    D.min_degree = -(C.min_degree + C.ndeg() - 1);
    D.degs.assign(C.degs.rbegin(), C.degs.rend());
    for (const auto& e : C.entries) {
        // 180-degree rotation exchanges cap and cup and reverses strand
        // positions within the wider of the two objects; homological degrees
        // are negated, so the entry maps -(degree+1) -> -degree.
        int src_obj = C.degs[e.degree - C.min_degree][e.col].obj;
        int wide = e.is_cup ? src_obj + 2 : src_obj;
        TLEntry f;
        f.degree = -(e.degree + 1);
        f.row = e.col;
        f.col = e.row;
        f.coeff = e.coeff;
        f.is_cup = !e.is_cup;
        f.pos = wide - 2 - e.pos;
        D.entries.push_back(f);
    }
    return D;
}

// exact entrywise check that consecutive differentials compose to zero
inline bool complex_d_squared_zero(const TLComplex& C) {
    using R = mpq_class;
    std::map<std::pair<int, int>, std::vector<const TLEntry*>> by_deg_col;
    for (const auto& e : C.entries)
        by_deg_col[{e.degree, e.col}].push_back(&e);
    for (int k = C.min_degree; k <= C.min_degree + C.ndeg() - 3; ++k) {
        const auto& src = C.at(k);
        for (size_t a = 0; a < src.size(); ++a) {
            auto it1 = by_deg_col.find({k, (int)a});
            if (it1 == by_deg_col.end()) continue;
            std::map<int, TLMor<R>> acc;  // target index -> accumulated map
            for (const TLEntry* e1 : it1->second) {
                TLMor<R> m1 = C.entry_mor<R>(*e1);
                auto it2 = by_deg_col.find({k + 1, e1->row});
                if (it2 == by_deg_col.end()) continue;
                for (const TLEntry* e2 : it2->second) {
                    TLMor<R> m = compose(C.entry_mor<R>(*e2), m1);
                    auto [pos, fresh] = acc.emplace(e2->row, m);
                    if (!fresh) pos->second = pos->second + m;
                }
            }
            for (auto& [b, m] : acc)
                if (!m.is_zero()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Colored Jones via the Kauffman-bracket oracle:
//   J_n(K) = sum_k (-1)^k binom(n-k, k) J(cable(K, n-2k))
// ---------------------------------------------------------------------------
inline long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline Laurent colored_jones(const LinkDiagram& d, int n,
                             int budget_crossings = 22) {
    if (d.components.size() != 1)
        throw std::invalid_argument("colored_jones expects a knot diagram");
    Laurent total;
    for (int k = 0; 2 * k <= n; ++k) {
        auto c = cable(d, {n - 2 * k});
        Laurent j = jones_state_sum(c.diagram, budget_crossings);
        long long b = binom_ll(n - k, k);
        if (k % 2) b = -b;
        total = total + j * Laurent::mono(0, b);
    }
    return total;
}

}  // namespace ckh
