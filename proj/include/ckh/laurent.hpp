#pragma once
// Integer Laurent polynomials in one and two variables, exact coefficients.
#include <map>
#include <cstdint>
#include <string>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ckh {

// One variable (q) with int64 coefficients.
class Laurent {
public:
    std::map<int, long long> c;  // exponent -> coefficient, no zero entries

    Laurent() = default;
    explicit Laurent(long long k) { if (k) c[0] = k; }
    static Laurent mono(int e, long long k = 1) { Laurent p; if (k) p.c[e] = k; return p; }

    bool is_zero() const { return c.empty(); }
    long long coeff(int e) const { auto it = c.find(e); return it == c.end() ? 0 : it->second; }
    int min_deg() const { return c.empty() ? 0 : c.begin()->first; }
    int max_deg() const { return c.empty() ? 0 : c.rbegin()->first; }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, k] : o.c) { auto& v = c[e]; v += k; if (!v) c.erase(e); }
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, k] : o.c) { auto& v = c[e]; v -= k; if (!v) c.erase(e); }
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [e1, k1] : a.c)
            for (auto& [e2, k2] : b.c) {
                auto& v = r.c[e1 + e2]; v += k1 * k2; if (!v) r.c.erase(e1 + e2);
            }
        return r;
    }
    friend Laurent operator*(long long k, const Laurent& a) { return Laurent(k) * a; }
    friend Laurent operator-(const Laurent& a) { return Laurent(-1) * a; }
    bool operator==(const Laurent& o) const { return c == o.c; }

    Laurent substitute_q_inverse() const {  // q -> q^{-1}
        Laurent r;
        for (auto& [e, k] : c) r.c[-e] = k;
        return r;
    }
    Laurent shifted(int d) const {  // multiply by q^d
        Laurent r;
        for (auto& [e, k] : c) r.c[e + d] = k;
        return r;
    }
    long long eval1() const {  // q = 1
        long long s = 0;
        for (auto& [e, k] : c) s += k;
        return s;
    }

    std::string str(const std::string& var = "q") const {
        if (c.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, k] : c) {
            long long a = k;
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            first = false;
            long long aa = a < 0 ? -a : a;
            if (aa != 1 || e == 0) os << aa;
            if (e != 0) {
                if (aa != 1) os << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }
};

// Quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
inline Laurent quantum_int(int n) {
    Laurent p;
    if (n < 0) { p = quantum_int(-n); return Laurent(-1) * p; }
    for (int e = 1 - n; e <= n - 1; e += 2) p.c[e] = 1;
    return p;
}

// Two variables (t, q) with int64 coefficients.
class Laurent2 {
public:
    using Key = std::pair<int, int>;       // (t-exponent, q-exponent)
    std::map<Key, long long> c;

    Laurent2() = default;
    explicit Laurent2(long long k) { if (k) c[{0, 0}] = k; }
    static Laurent2 mono(int te, int qe, long long k = 1) {
        Laurent2 p; if (k) p.c[{te, qe}] = k; return p;
    }
    static Laurent2 from_q(const Laurent& p) {
        Laurent2 r;
        for (auto& [e, k] : p.c) r.c[{0, e}] = k;
        return r;
    }

    bool is_zero() const { return c.empty(); }
    long long coeff(int te, int qe) const {
        auto it = c.find({te, qe}); return it == c.end() ? 0 : it->second;
    }

    Laurent2& operator+=(const Laurent2& o) {
        for (auto& [e, k] : o.c) { auto& v = c[e]; v += k; if (!v) c.erase(e); }
        return *this;
    }
    Laurent2& operator-=(const Laurent2& o) {
        for (auto& [e, k] : o.c) { auto& v = c[e]; v -= k; if (!v) c.erase(e); }
        return *this;
    }
    friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { a += b; return a; }
    friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { a -= b; return a; }
    friend Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
        Laurent2 r;
        for (auto& [e1, k1] : a.c)
            for (auto& [e2, k2] : b.c) {
                Key e{e1.first + e2.first, e1.second + e2.second};
                auto& v = r.c[e]; v += k1 * k2; if (!v) r.c.erase(e);
            }
        return r;
    }
    friend Laurent2 operator*(long long k, const Laurent2& a) { return Laurent2(k) * a; }
    friend Laurent2 operator-(const Laurent2& a) { return Laurent2(-1) * a; }
    bool operator==(const Laurent2& o) const { return c == o.c; }

    Laurent2 scaled(int dt, int dq) const {  // multiply by t^dt q^dq
        Laurent2 r;
        for (auto& [e, k] : c) r.c[{e.first + dt, e.second + dq}] = k;
        return r;
    }
    Laurent2 mirrored() const {  // t -> t^{-1}, q -> q^{-1}
        Laurent2 r;
        for (auto& [e, k] : c) r.c[{-e.first, -e.second}] = k;
        return r;
    }
    Laurent at_t(long long tval) const {  // specialize t (e.g. -1); tval must be +-1
        if (tval != 1 && tval != -1) throw std::invalid_argument("at_t: expect +-1");
        Laurent r;
        for (auto& [e, k] : c) {
            long long s = (tval == -1 && (e.first & 1)) ? -k : k;
            auto& v = r.c[e.second]; v += s; if (!v) r.c.erase(e.second);
        }
        return r;
    }
    // Drop all terms outside the q-window [qlo, qhi].
    Laurent2 q_window(int qlo, int qhi) const {
        Laurent2 r;
        for (auto& [e, k] : c)
            if (e.second >= qlo && e.second <= qhi) r.c[e] = k;
        return r;
    }

    std::string str() const {
        if (c.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, k] : c) {
            long long a = k;
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            first = false;
            long long aa = a < 0 ? -a : a;
            bool any = false;
            if (aa != 1 || (e.first == 0 && e.second == 0)) { os << aa; any = true; }
            if (e.first != 0) {
                if (any) os << "*";
                os << "t"; if (e.first != 1) os << "^" << e.first;
                any = true;
            }
            if (e.second != 0) {
                if (any) os << "*";
                os << "q"; if (e.second != 1) os << "^" << e.second;
            }
        }
        return os.str();
    }
};

}  // namespace ckh
