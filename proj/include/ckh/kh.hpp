#pragma once
// Top-level entry points for Khovanov homology of a framed diagram.
#include "bracket.hpp"
#include "chain.hpp"
#include "cube.hpp"
#include "diagram.hpp"
#include "scan.hpp"
#include "superpoly.hpp"
#include <stdexcept>

namespace ckh {

enum class Method { Auto, Cube, Scan };

inline Method method_from_string(const std::string& s) {
    if (s == "auto") return Method::Auto;
    if (s == "cube") return Method::Cube;
    if (s == "scan") return Method::Scan;
    throw std::invalid_argument("unknown method: " + s);
}

// Khovanov homology over the rationals, as a two-variable Poincare
// polynomial in the requested grading convention.
inline Superpolynomial kh(const LinkDiagram& d, Convention conv = Convention::Kh,
                          Method method = Method::Auto, int budget_crossings = 64) {
    if ((int)d.crossings.size() > budget_crossings)
        throw ResourceLimit("crossing budget exceeded: " +
                            std::to_string(d.crossings.size()) + " > " +
                            std::to_string(budget_crossings));
    Superpolynomial s;
    s.conv = Convention::Kh;
    if (method == Method::Cube ||
        (method == Method::Auto && d.crossings.size() <= 8)) {
        CubeComplex cube(d, budget_crossings);
        Reduction red(cube.C, false);
        s = red.poly();
    } else {
        Scanner<mpq_class> sc(d);
        s.p = sc.run();
    }
    return convert_convention(s, conv, d.writhe());
}

// Heuristic fast path over F_32003; agrees with the rational answer unless a
// differential entry happens to vanish mod p. Never used for verified output.
inline Superpolynomial kh_modp(const LinkDiagram& d,
                               Convention conv = Convention::Kh) {
    Scanner<ModP<32003>> sc(d);
    Superpolynomial s;
    s.conv = Convention::Kh;
    s.p = sc.run();
    return convert_convention(s, conv, d.writhe());
}

}  // namespace ckh
