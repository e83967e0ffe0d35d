#pragma once

/*
 * Sparse multivariate polynomials and rational functions over Rational.
 *
 * RatFunc is the coefficient field for symbolic character coordinates
 * (l1, ..., lr).  Fractions are kept normalized: the common monomial
 * factor and the rational content of the denominator are cancelled and,
 * in the univariate case, the full polynomial gcd is divided out.
 * Equality is decided by cross-multiplication, so it never depends on
 * how far a fraction happened to be reduced.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyntwist/rational.hpp"

namespace dyntwist {

using ExpVec = std::vector<int>;

class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}
    Poly(int nvars, const Rational& c) : nvars_(nvars) {
        if (!c.is_zero()) terms_[ExpVec(nvars, 0)] = c;
    }

    static Poly variable(int nvars, int i) {
        if (i < 0 || i >= nvars) throw std::invalid_argument("Poly::variable: index out of range");
        Poly p(nvars);
        ExpVec e(nvars, 0);
        e[i] = 1;
        p.terms_[e] = Rational(1);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, Rational>& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        auto it = terms_.find(ExpVec(nvars_, 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    int degree_in(int i) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
        return d;
    }

    void add_term(const ExpVec& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    /// Constants are arity-polymorphic: a 0-variable constant combines with a
    /// polynomial in any number of variables.
    Poly promoted(int nv) const {
        if (nvars_ == nv) return *this;
        if (!is_constant()) throw std::invalid_argument("Poly: arity mismatch");
        return Poly(nv, constant_value());
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        int nv = common_nvars(a, b);
        Poly r = a.promoted(nv);
        for (const auto& [e, c] : b.promoted(nv).terms_) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        int nv = common_nvars(a, b);
        Poly r = a.promoted(nv);
        for (const auto& [e, c] : b.promoted(nv).terms_) r.add_term(e, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        int nv = common_nvars(a, b);
        Poly pa = a.promoted(nv), pb = b.promoted(nv);
        Poly r(nv);
        for (const auto& [ea, ca] : pa.terms_)
            for (const auto& [eb, cb] : pb.terms_) {
                ExpVec e = ea;
                for (int i = 0; i < nv; ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly scaled(const Rational& c) const {
        Poly r(nvars_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
        if (a.is_constant() && b.is_constant()) return a.constant_value() == b.constant_value();
        return false;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rational eval(const std::vector<Rational>& x) const {
        if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("Poly::eval: arity mismatch");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    Poly derivative(int i) const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            ExpVec d = e;
            d[i] -= 1;
            r.add_term(d, c * Rational(e[i]));
        }
        return r;
    }

    /// Substitute x_i -> x_i + delta_i for all i.
    Poly shifted(const std::vector<Rational>& delta) const {
        if (static_cast<int>(delta.size()) != nvars_) throw std::invalid_argument("Poly::shifted: arity mismatch");
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Poly term(nvars_, c);
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                Poly base = variable(nvars_, i) + Poly(nvars_, delta[i]);
                for (int k = 0; k < e[i]; ++k) term *= base;
            }
            r += term;
        }
        return r;
    }

    /// Rational content: gcd of numerators over lcm of denominators, signed so
    /// that the leading (lex-largest) coefficient of p/content is positive.
    Rational content() const {
        if (terms_.empty()) return Rational(1);
        BigInt g = 0, l = 1;
        for (const auto& [e, c] : terms_) {
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c.num()));
            l = boost::multiprecision::lcm(l, c.den());
        }
        Rational content(g, l);
        if (terms_.rbegin()->second < Rational(0)) content = -content;
        return content;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << it->second.str();
            for (int i = 0; i < nvars_; ++i) {
                if (it->first[i] == 0) continue;
                os << "*l" << (i + 1);
                if (it->first[i] > 1) os << "^" << it->first[i];
            }
        }
        return os.str();
    }

private:
    static int common_nvars(const Poly& a, const Poly& b) {
        if (a.nvars_ == b.nvars_) return a.nvars_;
        if (a.is_constant()) return b.nvars_;
        if (b.is_constant()) return a.nvars_;
        throw std::invalid_argument("Poly: arity mismatch");
    }

    int nvars_;
    std::map<ExpVec, Rational> terms_;
};

namespace detail {

// Univariate gcd over Q via the Euclidean algorithm (content-normalized).
inline Poly univariate_gcd(Poly a, Poly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto norm = [](Poly p) {
        Rational c = p.content();
        return c.is_one() ? p : p.scaled(c.inverse());
    };
    a = norm(a);
    b = norm(b);
    while (!b.is_zero()) {
        // a mod b by long division in the single variable.
        int db = b.degree_in(0);
        Rational lb;
        for (const auto& [e, c] : b.terms())
            if (e[0] == db) lb = c;
        Poly r = a;
        while (!r.is_zero() && r.degree_in(0) >= db) {
            int dr = r.degree_in(0);
            Rational lr;
            for (const auto& [e, c] : r.terms())
                if (e[0] == dr) lr = c;
            Poly q(1);
            ExpVec e(1, dr - db);
            q.add_term(e, lr / lb);
            r -= q * b;
            if (!r.is_zero() && r.degree_in(0) == dr) throw std::logic_error("univariate_gcd: division failed");
        }
        a = b;
        b = norm(r);
    }
    return a;
}

}  // namespace detail

class RatFunc {
public:
    RatFunc() : num_(0), den_(0, Rational(1)) {}
    RatFunc(int nvars, const Rational& c) : num_(nvars, c), den_(nvars, Rational(1)) {}
    RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.nvars() != den_.nvars()) {
            int nv = std::max(num_.nvars(), den_.nvars());
            num_ = num_.promoted(nv);
            den_ = den_.promoted(nv);
        }
        reduce();
    }
    explicit RatFunc(const Poly& num) : num_(num), den_(num.nvars(), Rational(1)) {}

    static RatFunc variable(int nvars, int i) { return RatFunc(Poly::variable(nvars, i)); }
    static RatFunc constant(int nvars, const Rational& c) { return RatFunc(nvars, c); }

    int nvars() const { return num_.nvars(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("RatFunc::constant_value: not constant");
        return num_.constant_value() / den_.constant_value();
    }

    RatFunc operator-() const { return RatFunc(-num_, den_, NoReduce{}); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    /// Equality by cross-multiplication; independent of reduction state.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    Rational eval(const std::vector<Rational>& x) const {
        Rational d = den_.eval(x);
        if (d.is_zero()) throw std::domain_error("RatFunc::eval: pole at sample point");
        return num_.eval(x) / d;
    }

    RatFunc derivative(int i) const {
        return RatFunc(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
    }

    RatFunc shifted(const std::vector<Rational>& delta) const {
        return RatFunc(num_.shifted(delta), den_.shifted(delta));
    }

    int num_degree() const { return num_.total_degree(); }
    int den_degree() const { return den_.total_degree(); }

    std::string str() const {
        if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    struct NoReduce {};
    RatFunc(const Poly& num, const Poly& den, NoReduce) : num_(num), den_(den) {}

    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly(den_.nvars(), Rational(1));
            return;
        }
        // Cancel the common monomial factor.
        int nv = num_.nvars();
        ExpVec common(nv, 1 << 30);
        auto meet = [&](const Poly& p) {
            for (const auto& [e, c] : p.terms())
                for (int i = 0; i < nv; ++i) common[i] = std::min(common[i], e[i]);
        };
        meet(num_);
        meet(den_);
        bool any = false;
        for (int i = 0; i < nv; ++i) any = any || common[i] > 0;
        if (any) {
            num_ = strip_monomial(num_, common);
            den_ = strip_monomial(den_, common);
        }
        if (nv == 1) {
            Poly g = detail::univariate_gcd(num_, den_);
            if (g.degree_in(0) > 0) {
                num_ = divide_exact(num_, g);
                den_ = divide_exact(den_, g);
            }
        }
        Rational c = den_.content();
        if (!c.is_one()) {
            Rational ci = c.inverse();
            num_ = num_.scaled(ci);
            den_ = den_.scaled(ci);
        }
    }

    static Poly strip_monomial(const Poly& p, const ExpVec& m) {
        Poly r(p.nvars());
        for (const auto& [e, c] : p.terms()) {
            ExpVec f = e;
            for (int i = 0; i < p.nvars(); ++i) f[i] -= m[i];
            r.add_term(f, c);
        }
        return r;
    }

    // Exact univariate division (remainder must vanish).
    static Poly divide_exact(Poly a, const Poly& b) {
        Poly q(1);
        int db = b.degree_in(0);
        Rational lb;
        for (const auto& [e, c] : b.terms())
            if (e[0] == db) lb = c;
        while (!a.is_zero()) {
            int da = a.degree_in(0);
            if (da < db) throw std::logic_error("RatFunc: inexact division");
            Rational la;
            for (const auto& [e, c] : a.terms())
                if (e[0] == da) la = c;
            Poly m(1);
            ExpVec e(1, da - db);
            m.add_term(e, la / lb);
            q += m;
            a -= m * b;
        }
        return q;
    }

    Poly num_, den_;
};

inline bool field_is_zero(const RatFunc& x) { return x.is_zero(); }
inline RatFunc field_inverse(const RatFunc& x) { return x.inverse(); }
template <>
inline RatFunc field_unit<RatFunc>() {
    return RatFunc(0, Rational(1));
}

}  // namespace dyntwist
