#pragma once
// Composite annulus cobordism maps between cable complexes: a cap joining
// two adjacent cable copies is realized as a movie (saddle, then a greedy
// retraction of the merged turn-back component by curl/bigon removals, then
// the death of the resulting free loop). The reverse movie realizes the cup.
#include "cobord.hpp"
#include <vector>

namespace ckh {

struct AnnulusMovie {
    LinkDiagram tgt;
    std::shared_ptr<CubeComplex> tgt_cube;
    ChainMap cap;  // C(src) -> C(tgt)
    ChainMap cup;  // C(tgt) -> C(src)
    int steps = 0;
};

inline bool arc_is_free(const LinkDiagram& d, int a) {
    for (auto& x : d.crossings)
        if (x.in_under == a || x.in_over == a || x.out_under == a ||
            x.out_over == a)
            return false;
    return true;
}

// Cap between the cable copies carrying arcs a, b of K's diagram.
inline AnnulusMovie cap_movie(const CubeComplex& K, int a, int b,
                              int max_steps = 128) {
    std::vector<CobordStep> steps;
    int rep;  // an arc on the merged component, in the current diagram
    if (arc_is_free(K.dia, a) && arc_is_free(K.dia, b)) {
        steps.push_back(loop_merge_step(K, a, b));
        rep = steps.back().dict[a];
    } else {
        steps.push_back(saddle_step(K, a, b));
        rep = a;
    }
    for (;;) {
        const CubeComplex& C = *steps.back().cube;
        const LinkDiagram& d = C.dia;
        auto ac = d.arc_component();
        int comp = ac[rep];
        bool has_x = false;
        for (auto& x : d.crossings)
            if (ac[x.in_under] == comp || ac[x.in_over] == comp) has_x = true;
        if (!has_x) break;
        if ((int)steps.size() > max_steps)
            throw std::runtime_error("cap_movie: retraction step limit");
        bool moved = false;
        for (int c = 0; c < (int)d.crossings.size() && !moved; ++c) {
            auto k = find_kink(d, c);
            if (!k || ac[k->loop_arc] != comp) continue;
            int strand = k->s_in;
            steps.push_back(r1_step(C, *k));
            rep = steps.back().dict[strand];
            moved = true;
        }
        for (int x = 0; x < (int)d.crossings.size() && !moved; ++x)
            for (int y = x + 1; y < (int)d.crossings.size() && !moved; ++y) {
                auto g = find_bigon(d, x, y);
                if (!g || (ac[g->a] != comp && ac[g->b] != comp)) continue;
                int keep = g->a;
                steps.push_back(r2_step(C, *g));
                rep = steps.back().dict[keep];
                moved = true;
            }
        if (!moved)
            throw std::runtime_error(
                "cap_movie: merged component not reducible by curl/bigon moves");
    }
    steps.push_back(death_step(*steps.back().cube, rep));

    AnnulusMovie mv;
    mv.tgt = steps.back().tgt;
    mv.tgt_cube = steps.back().cube;
    mv.steps = (int)steps.size();
    mv.cap = steps[0].fwd;
    for (size_t i = 1; i < steps.size(); ++i) mv.cap = steps[i].fwd.after(mv.cap);
    mv.cup = steps.back().bwd;
    for (int i = (int)steps.size() - 2; i >= 0; --i)
        mv.cup = steps[i].bwd.after(mv.cup);
    return mv;
}

}  // namespace ckh
