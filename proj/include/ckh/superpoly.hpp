#pragma once
// Bigraded dimension series ("superpolynomial") with grading-convention tags.
//
// Four index conventions are supported:
//   Kh         -- original unreduced bigrading
//   KhBar      -- q-degree negated relative to Kh
//   KhR2       -- equals KhBar of the mirror diagram; the index map applied
//                 here is the identity, mirroring is the caller's job
//   KhR2framed -- KhR2 with q-degree shifted down by the writhe
#include "laurent.hpp"
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

namespace ckh {

enum class Convention { Kh, KhBar, KhR2, KhR2framed };

inline std::string to_string(Convention c) {
    switch (c) {
        case Convention::Kh: return "Kh";
        case Convention::KhBar: return "KhBar";
        case Convention::KhR2: return "KhR2";
        case Convention::KhR2framed: return "KhR2framed";
    }
    return "?";
}

inline Convention convention_from_string(const std::string& s) {
    if (s == "Kh") return Convention::Kh;
    if (s == "KhBar") return Convention::KhBar;
    if (s == "KhR2") return Convention::KhR2;
    if (s == "KhR2framed") return Convention::KhR2framed;
    throw std::invalid_argument("unknown convention: " + s);
}

struct Superpolynomial {
    Convention conv = Convention::Kh;
    Laurent2 p;  // coefficients are dimensions; nonnegative for honest homology

    bool operator==(const Superpolynomial& o) const {
        return conv == o.conv && p == o.p;
    }
    long long total_dim() const {
        long long s = 0;
        for (auto& [e, k] : p.c) s += k;
        return s;
    }
    Laurent graded_euler() const { return p.at_t(-1); }

    nlohmann::json to_json() const {
        nlohmann::json terms = nlohmann::json::array();
        for (auto& [e, k] : p.c)  // std::map iterates lexicographically by (t,q)
            terms.push_back({{"t", e.first}, {"q", e.second}, {"dim", k}});
        return {{"convention", to_string(conv)}, {"terms", terms}};
    }
    static Superpolynomial from_json(const nlohmann::json& j) {
        Superpolynomial s;
        s.conv = convention_from_string(j.at("convention").get<std::string>());
        for (auto& t : j.at("terms"))
            s.p.c[{t.at("t").get<int>(), t.at("q").get<int>()}] = t.at("dim").get<long long>();
        return s;
    }
    std::string csv() const {
        std::string out = "t,q,dim\n";
        for (auto& [e, k] : p.c)
            out += std::to_string(e.first) + "," + std::to_string(e.second) + "," +
                   std::to_string(k) + "\n";
        return out;
    }
};

namespace detail {
// Index map from `from` into the Kh convention. writhe enters only for the
// framed convention.
inline Laurent2 to_kh_indices(const Laurent2& p, Convention from, int writhe) {
    switch (from) {
        case Convention::Kh: return p;
        case Convention::KhBar: {
            Laurent2 r;
            for (auto& [e, k] : p.c) r.c[{e.first, -e.second}] = k;
            return r;
        }
        case Convention::KhR2:  // identity on indices (mirror handled by caller)
            return detail::to_kh_indices(p, Convention::KhBar, writhe);
        case Convention::KhR2framed:
            return to_kh_indices(p.scaled(0, writhe), Convention::KhR2, writhe);
    }
    return p;
}
inline Laurent2 from_kh_indices(const Laurent2& p, Convention to, int writhe) {
    switch (to) {
        case Convention::Kh: return p;
        case Convention::KhBar: {
            Laurent2 r;
            for (auto& [e, k] : p.c) r.c[{e.first, -e.second}] = k;
            return r;
        }
        case Convention::KhR2:
            return from_kh_indices(p, Convention::KhBar, writhe);
        case Convention::KhR2framed:
            return from_kh_indices(p, Convention::KhR2, writhe).scaled(0, -writhe);
    }
    return p;
}
}  // namespace detail

// Bijective re-indexing between conventions. Where a convention is defined in
// terms of the mirror diagram, the indices are transformed as documented above
// and the caller is responsible for mirroring the underlying diagram.
inline Superpolynomial convert_convention(const Superpolynomial& s, Convention to,
                                          int writhe = 0) {
    Superpolynomial r;
    r.conv = to;
    r.p = detail::from_kh_indices(detail::to_kh_indices(s.p, s.conv, writhe), to, writhe);
    return r;
}

}  // namespace ckh
