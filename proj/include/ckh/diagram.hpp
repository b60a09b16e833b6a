#pragma once
// Oriented link diagrams: braid closures, PD codes, framing kinks, cables.
#include <vector>
#include <array>
#include <map>
#include <string>
#include <sstream>
#include <stdexcept>
#include <algorithm>
#include <cstdlib>

namespace ckh {

struct Crossing {
    // Arc ids by role relative to the strand orientations.
    int in_under, in_over, out_under, out_over;
    int sign;  // +1 or -1
};

struct BraidWord {
    std::vector<int> gens;  // nonzero; |g| = strand index, sign = crossing sign
    int strands = 0;
};

inline BraidWord parse_braid(const std::string& text, int strands = 0) {
    // Accepts "{1,1,1}" or "1,1,1" or "1 1 1".
    BraidWord w;
    std::string s;
    for (char ch : text)
        if (ch != '{' && ch != '}' && ch != ',') s += ch; else s += ' ';
    std::istringstream is(s);
    int g, maxi = 0;
    while (is >> g) {
        if (g == 0) throw std::invalid_argument("braid generator 0");
        w.gens.push_back(g);
        maxi = std::max(maxi, std::abs(g));
    }
    w.strands = strands ? strands : maxi + 1;
    for (int x : w.gens)
        if (std::abs(x) >= w.strands) throw std::invalid_argument("generator exceeds strand count");
    return w;
}

class LinkDiagram {
public:
    int narcs = 0;
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> components;  // arc cycles in orientation order
    std::vector<int> framing;                  // blackboard framing per component

    int writhe() const {
        int w = 0;
        for (auto& x : crossings) w += x.sign;
        return w;
    }
    int n_plus() const {
        int w = 0;
        for (auto& x : crossings) w += x.sign > 0;
        return w;
    }
    int n_minus() const { return (int)crossings.size() - n_plus(); }

    // The two arc pairings produced by resolving crossing x the r-th way
    // (r = 0 or 1). The oriented resolution is r = 0 at a positive crossing
    // and r = 1 at a negative one.
    static std::array<std::pair<int, int>, 2> smoothing(const Crossing& x, int r) {
        bool oriented = (x.sign > 0) ? (r == 0) : (r == 1);
        if (oriented)
            return {{{x.in_under, x.out_over}, {x.in_over, x.out_under}}};
        return {{{x.in_under, x.in_over}, {x.out_under, x.out_over}}};
    }

    // Successor arc along the orientation; -1 for arcs not entering any crossing.
    std::vector<int> successors() const {
        std::vector<int> nxt(narcs, -1);
        for (auto& x : crossings) {
            nxt[x.in_under] = x.out_under;
            nxt[x.in_over] = x.out_over;
        }
        return nxt;
    }

    void compute_components() {
        components.clear();
        auto nxt = successors();
        std::vector<char> seen(narcs, 0);
        for (int a0 = 0; a0 < narcs; ++a0) {
            if (seen[a0]) continue;
            std::vector<int> cyc;
            int a = a0;
            do {
                seen[a] = 1;
                cyc.push_back(a);
                a = nxt[a];
                if (a < 0) { a = a0; break; }  // free loop: single closed arc
            } while (a != a0);
            components.push_back(cyc);
        }
        recompute_framing();
    }

    std::vector<int> arc_component() const {
        std::vector<int> ac(narcs, -1);
        for (int c = 0; c < (int)components.size(); ++c)
            for (int a : components[c]) ac[a] = c;
        return ac;
    }

    // Blackboard framing = sum of signs over self-crossings of each component.
    void recompute_framing() {
        auto ac = arc_component();
        framing.assign(components.size(), 0);
        for (auto& x : crossings)
            if (ac[x.in_under] == ac[x.in_over]) framing[ac[x.in_under]] += x.sign;
    }

    LinkDiagram mirror() const {
        LinkDiagram m = *this;
        for (auto& x : m.crossings) {
            std::swap(x.in_under, x.in_over);
            std::swap(x.out_under, x.out_over);
            x.sign = -x.sign;
        }
        m.compute_components();
        return m;
    }

    // Insert one kink (Reidemeister I curl) of the given sign on arc a.
    void add_kink(int arc, int sign) {
        bool free_loop = true;
        for (auto& x : crossings)
            if (x.in_under == arc || x.in_over == arc) free_loop = false;
        int a2;
        if (free_loop) {
            a2 = arc;  // the strand arc keeps both ends at the new crossing
        } else {
            a2 = narcs++;  // outgoing half of the split arc
            for (auto& x : crossings) {  // re-point the head of `arc` to a2
                if (x.in_under == arc) x.in_under = a2;
                if (x.in_over == arc) x.in_over = a2;
            }
        }
        int loop = narcs++;  // the curl
        crossings.push_back({arc, loop, loop, a2, sign});
        compute_components();
    }

    // Adjust per-component blackboard framing to k by inserting kinks.
    LinkDiagram with_framing(const std::vector<int>& k) const {
        if (k.size() != components.size())
            throw std::invalid_argument("framing vector length mismatch");
        LinkDiagram d = *this;
        for (int c = 0; c < (int)k.size(); ++c) {
            int delta = k[c] - framing[c];
            int s = delta > 0 ? 1 : -1;
            // Component order is stable across kink insertion: each component
            // keeps its minimal arc id, and compute_components scans by arc id.
            for (int i = 0; i < std::abs(delta); ++i)
                d.add_kink(d.components[c].front(), s);
        }
        d.compute_components();
        return d;
    }

    // Delete the marked components; crossings they participate in disappear
    // and the other strand's arcs fuse.
    LinkDiagram without_components(const std::vector<char>& kill) const {
        LinkDiagram d;
        auto ac = arc_component();
        std::vector<int> rep(narcs);
        for (int i = 0; i < narcs; ++i) rep[i] = i;
        auto find = [&](int a) {
            while (rep[a] != a) a = rep[a] = rep[rep[a]];
            return a;
        };
        std::vector<Crossing> keep;
        for (auto& x : crossings) {
            bool ku = kill[ac[x.in_under]], ko = kill[ac[x.in_over]];
            if (ku && ko) continue;
            if (ku) { rep[find(x.in_over)] = find(x.out_over); continue; }
            if (ko) { rep[find(x.in_under)] = find(x.out_under); continue; }
            keep.push_back(x);
        }
        std::vector<int> dense(narcs, -1);
        for (int a = 0; a < narcs; ++a)
            if (!kill[ac[a]] && find(a) == a) dense[a] = d.narcs++;
        for (auto& x : keep)
            d.crossings.push_back({dense[find(x.in_under)], dense[find(x.in_over)],
                                   dense[find(x.out_under)], dense[find(x.out_over)],
                                   x.sign});
        // surviving free loops (fully fused or originally crossingless)
        d.compute_components();
        return d;
    }

    std::string canonical_key() const {
        std::ostringstream os;
        os << narcs << ";";
        for (auto& x : crossings)
            os << x.in_under << "," << x.in_over << "," << x.out_under << ","
               << x.out_over << "," << x.sign << ";";
        for (int f : framing) os << f << "|";
        return os.str();
    }
};

inline LinkDiagram from_braid_word(const BraidWord& w) {
    LinkDiagram d;
    std::vector<int> start(w.strands), cur(w.strands);
    for (int i = 0; i < w.strands; ++i) start[i] = cur[i] = d.narcs++;
    for (int g : w.gens) {
        int k = std::abs(g) - 1;  // crossing between positions k, k+1
        int a = cur[k], b = cur[k + 1];
        int outk = d.narcs++, outk1 = d.narcs++;
        if (g > 0)  // strand at position k passes under toward k+1
            d.crossings.push_back({a, b, outk1, outk, +1});
        else  // strand at position k+1 passes under toward k
            d.crossings.push_back({b, a, outk, outk1, -1});
        cur[k] = outk;
        cur[k + 1] = outk1;
    }
    // closure: identify the top arc of each strand with its bottom arc
    std::vector<int> relab(d.narcs);
    for (int i = 0; i < d.narcs; ++i) relab[i] = i;
    for (int i = 0; i < w.strands; ++i) relab[cur[i]] = start[i];
    std::vector<int> dense(d.narcs, -1);
    int na = 0;
    for (int i = 0; i < d.narcs; ++i)
        if (relab[i] == i) dense[i] = na++;
    for (int i = 0; i < d.narcs; ++i) dense[i] = dense[relab[i]];
    for (auto& x : d.crossings) {
        x.in_under = dense[x.in_under];
        x.in_over = dense[x.in_over];
        x.out_under = dense[x.out_under];
        x.out_over = dense[x.out_over];
    }
    d.narcs = na;
    d.compute_components();
    return d;
}

inline LinkDiagram from_braid_word(const std::string& text) {
    return from_braid_word(parse_braid(text));
}

// PD code, e.g. "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]". In X(a,b,c,d) the
// under strand runs a -> c; the over strand direction is recovered from the
// arc numbering (consecutive along each component, with wraparound).
inline LinkDiagram from_pd_code(const std::string& text) {
    std::vector<std::array<int, 4>> xs;
    // simple scanner: collect every X(...) group
    for (size_t i = 0; i + 1 < text.size(); ++i) {
        if ((text[i] == 'X' || text[i] == 'x') &&
            (text[i + 1] == '(' || text[i + 1] == '[')) {
            size_t j = i + 2;
            std::array<int, 4> q{};
            for (int k = 0; k < 4; ++k) {
                size_t e = j;
                while (e < text.size() && (isdigit(text[e]) || text[e] == '-')) ++e;
                if (e == j) throw std::invalid_argument("bad PD code");
                q[k] = std::stoi(text.substr(j, e - j));
                j = e;
                while (j < text.size() && (text[j] == ',' || text[j] == ' ')) ++j;
            }
            xs.push_back(q);
            i = j;
        }
    }
    if (xs.empty()) throw std::invalid_argument("no crossings in PD code");
    LinkDiagram d;
    std::map<int, int> lab;
    for (auto& q : xs)
        for (int v : q)
            if (!lab.count(v)) lab[v] = 0;
    // arc labels are consecutive along components; detect heads/tails first
    int na = 0;
    for (auto& [v, id] : lab) id = na++;
    d.narcs = na;
    for (auto& q : xs) {
        int a = q[0], b = q[1], c = q[2], e = q[3];
        bool over_b_to_e = (e == b + 1) || (b - e > 1);  // wraparound: b is max label
        int io = over_b_to_e ? b : e;
        int oo = over_b_to_e ? e : b;
        int sign = over_b_to_e ? +1 : -1;
        d.crossings.push_back({lab[a], lab[io], lab[c], lab[oo], sign});
    }
    d.compute_components();
    return d;
}

// Parallel cable data: which cable arc/component each copy of each original
// arc/component became. Copy p (1-based) of a component carries the original
// orientation times (-1)^{p-1}.
struct CableInfo {
    LinkDiagram diagram;
    std::vector<int> colors;                  // per original component
    std::vector<std::vector<int>> arc_copy;   // arc_copy[a][p-1] = cable arc id
    std::vector<std::vector<int>> copy_comp;  // copy_comp[c][p-1] = cable component
    std::vector<int> base_arc;                // chosen band-site arc per orig component
};

inline CableInfo cable(const LinkDiagram& d, const std::vector<int>& colors) {
    if (colors.size() != d.components.size())
        throw std::invalid_argument("color vector length mismatch");
    for (int m : colors)
        if (m < 0) throw std::invalid_argument("negative color");
    if (std::find(colors.begin(), colors.end(), 0) != colors.end()) {
        std::vector<char> kill(colors.size(), 0);
        std::vector<int> rest;
        for (size_t i = 0; i < colors.size(); ++i)
            if (colors[i] == 0) kill[i] = 1; else rest.push_back(colors[i]);
        return cable(d.without_components(kill), rest);
    }
    CableInfo ci;
    ci.colors = colors;
    LinkDiagram& c = ci.diagram;
    auto ac = d.arc_component();

    ci.arc_copy.assign(d.narcs, {});
    for (int a = 0; a < d.narcs; ++a) {
        int m = colors[ac[a]];
        for (int p = 0; p < m; ++p) ci.arc_copy[a].push_back(c.narcs++);
    }
    // orientation of copy p (0-based here): +1 keeps original direction
    auto orient = [&](int comp, int p) { return (p % 2 == 0) ? +1 : -1; };

    for (auto& x : d.crossings) {
        int cu = ac[x.in_under], co = ac[x.in_over];
        int m = colors[cu], n = colors[co];
        // Copies are laid out at increasing offset to the right of the travel
        // direction. In that layout, at a positive crossing each under-copy
        // meets the over-copies in increasing order and each over-copy meets
        // the under-copies in decreasing order; at a negative crossing both
        // orders flip. (Checked against explicit parallel braid blocks
        // s2 s1 s3 s2 and their inverses.)
        std::vector<std::vector<int>> u_in(m, std::vector<int>(n)), u_out = u_in,
                                      o_in = u_in, o_out = u_in;
        bool pos = x.sign > 0;
        for (int p = 0; p < m; ++p) {
            int first = pos ? 0 : n - 1, last = pos ? n - 1 : 0, step = pos ? 1 : -1;
            int prev = -1;
            for (int q = first;; q += step) {
                u_in[p][q] = (q == first) ? ci.arc_copy[x.in_under][p] : c.narcs++;
                if (prev >= 0) u_out[p][prev] = u_in[p][q];
                prev = q;
                if (q == last) break;
            }
            u_out[p][last] = ci.arc_copy[x.out_under][p];
        }
        for (int q = 0; q < n; ++q) {
            int first = pos ? m - 1 : 0, last = pos ? 0 : m - 1, step = pos ? -1 : 1;
            int prev = -1;
            for (int p = first;; p += step) {
                o_in[p][q] = (p == first) ? ci.arc_copy[x.in_over][q] : c.narcs++;
                if (prev >= 0) o_out[prev][q] = o_in[p][q];
                prev = p;
                if (p == last) break;
            }
            o_out[last][q] = ci.arc_copy[x.out_over][q];
        }

        for (int p = 0; p < m; ++p)
            for (int q = 0; q < n; ++q) {
                int ou_ = orient(cu, p), oo_ = orient(co, q);
                int sgn = x.sign * ou_ * oo_;
                int iu = ou_ > 0 ? u_in[p][q] : u_out[p][q];
                int ux = ou_ > 0 ? u_out[p][q] : u_in[p][q];
                int io = oo_ > 0 ? o_in[p][q] : o_out[p][q];
                int ox = oo_ > 0 ? o_out[p][q] : o_in[p][q];
                c.crossings.push_back({iu, io, ux, ox, sgn});
            }
    }
    c.compute_components();

    // locate the cable component holding each copy
    auto cac = c.arc_component();
    ci.copy_comp.assign(d.components.size(), {});
    ci.base_arc.assign(d.components.size(), -1);
    for (int comp = 0; comp < (int)d.components.size(); ++comp) {
        int a0 = d.components[comp].front();
        ci.base_arc[comp] = a0;
        for (int p = 0; p < colors[comp]; ++p)
            ci.copy_comp[comp].push_back(cac[ci.arc_copy[a0][p]]);
    }
    return ci;
}

}  // namespace ckh
