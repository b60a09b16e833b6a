#pragma once
// Exact rational functions in q: fractions of Laurent polynomials with
// rational coefficients, reduced after every operation.
#include <gmpxx.h>
#include <map>
#include <stdexcept>
#include <string>

namespace ckh {

// Laurent polynomial in q with exact rational coefficients.
struct QPoly {
    std::map<int, mpq_class> c;  // exponent -> coefficient, no zero entries

    QPoly() = default;
    explicit QPoly(const mpq_class& k) {
        if (k != 0) c[0] = k;
    }
    static QPoly mono(int e, const mpq_class& k = 1) {
        QPoly p;
        if (k != 0) p.c[e] = k;
        return p;
    }
    bool is_zero() const { return c.empty(); }
    int min_deg() const { return c.begin()->first; }
    int max_deg() const { return c.rbegin()->first; }
    mpq_class coeff(int e) const {
        auto it = c.find(e);
        return it == c.end() ? mpq_class(0) : it->second;
    }
    QPoly& operator+=(const QPoly& o) {
        for (auto& [e, k] : o.c) {
            auto it = c.find(e);
            if (it == c.end()) {
                if (k != 0) c[e] = k;
            } else {
                it->second += k;
                if (it->second == 0) c.erase(it);
            }
        }
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        QPoly r = a;
        for (auto& [e, k] : b.c) {
            auto it = r.c.find(e);
            if (it == r.c.end()) {
                r.c[e] = -k;
            } else {
                it->second -= k;
                if (it->second == 0) r.c.erase(it);
            }
        }
        return r;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly r;
        for (auto& [e1, k1] : a.c)
            for (auto& [e2, k2] : b.c) {
                mpq_class v = k1 * k2;
                auto it = r.c.find(e1 + e2);
                if (it == r.c.end()) {
                    if (v != 0) r.c[e1 + e2] = v;
                } else {
                    it->second += v;
                    if (it->second == 0) r.c.erase(it);
                }
            }
        return r;
    }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
    QPoly shifted(int s) const {
        QPoly r;
        for (auto& [e, k] : c) r.c[e + s] = k;
        return r;
    }
    QPoly scaled(const mpq_class& k) const {
        QPoly r;
        if (k == 0) return r;
        for (auto& [e, v] : c) r.c[e] = v * k;
        return r;
    }
    mpq_class eval1() const {  // q = 1
        mpq_class s = 0;
        for (auto& [e, k] : c) s += k;
        return s;
    }
};

// quotient remainder of ordinary (nonnegative-exponent) polynomials
inline QPoly qp_rem(QPoly a, const QPoly& b) {
    int db = b.max_deg();
    mpq_class lead = b.c.rbegin()->second;
    while (!a.is_zero() && a.max_deg() >= db) {
        int da = a.max_deg();
        mpq_class f = a.c.rbegin()->second / lead;
        a += b.shifted(da - db).scaled(-f);
    }
    return a;
}

inline QPoly qp_gcd(QPoly a, QPoly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    a = a.shifted(-a.min_deg());
    b = b.shifted(-b.min_deg());
    while (!b.is_zero()) {
        QPoly r = qp_rem(a, b);
        a = b;
        b = r.is_zero() ? r : r.shifted(-r.min_deg());
    }
    return a.scaled(1 / a.c.rbegin()->second);  // monic
}

// Field of fractions of QPoly, always reduced; denominator has min_deg 0 and
// leading coefficient 1.
struct RatFunc {
    QPoly num, den = QPoly(mpq_class(1));

    RatFunc() = default;
    RatFunc(int k) : num(mpq_class(k)) {}
    RatFunc(const mpq_class& k) : num(k) {}
    RatFunc(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }
    static RatFunc poly(QPoly p) {
        RatFunc r;
        r.num = std::move(p);
        return r;
    }

    void reduce() {
        if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num.is_zero()) {
            den = QPoly(mpq_class(1));
            return;
        }
        QPoly g = qp_gcd(num, den);
        if (g.max_deg() > 0) {
            num = qp_div(num, g);
            den = qp_div(den, g);
        }
        // normalize: den min_deg 0, leading coefficient 1
        int s = den.min_deg();
        num = num.shifted(-s);
        den = den.shifted(-s);
        mpq_class lead = den.c.rbegin()->second;
        if (lead != 1) {
            den = den.scaled(1 / lead);
            num = num.scaled(1 / lead);
        }
    }

    static QPoly qp_div(const QPoly& a, const QPoly& b) {
        // exact division (shift-normalized), used after gcd
        QPoly r = a.shifted(-a.min_deg()), q;
        QPoly bb = b.shifted(-b.min_deg());
        int db = bb.max_deg();
        mpq_class lead = bb.c.rbegin()->second;
        while (!r.is_zero() && r.max_deg() >= db) {
            int da = r.max_deg();
            mpq_class f = r.c.rbegin()->second / lead;
            q += QPoly::mono(da - db, f);
            r += bb.shifted(da - db).scaled(-f);
        }
        if (!r.is_zero()) throw std::logic_error("qp_div: not divisible");
        return q.shifted(a.min_deg() - b.min_deg());
    }

    bool is_zero() const { return num.is_zero(); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num = QPoly() - r.num;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
};

}  // namespace ckh
