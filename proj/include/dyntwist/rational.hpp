#pragma once

/*
 * Exact rational scalars.
 *
 * Rational wraps an arbitrary-precision fraction kept in canonical form:
 * gcd(num, den) == 1 and den > 0.  All engine arithmetic that is not
 * symbolic in the character coordinates runs over this type; nothing in
 * the library ever rounds.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dyntwist {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        BigInt n = num, d = den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        v_.assign(boost::multiprecision::cpp_rational(n, d));
    }
    Rational(int num, int den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return den() == 1; }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(1) / *this;
    }

    /// Canonical "p/q" form; integers print without the "/1".
    std::string str() const {
        std::ostringstream os;
        os << v_;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    std::size_t hash() const {
        std::hash<std::string> h;
        return h(str());
    }

private:
    boost::multiprecision::cpp_rational v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// Field-trait helpers shared by the templated layers (Rational vs RatFunc).
inline bool field_is_zero(const Rational& x) { return x.is_zero(); }
inline Rational field_inverse(const Rational& x) { return x.inverse(); }

template <class F>
F field_unit();
template <>
inline Rational field_unit<Rational>() {
    return Rational(1);
}

}  // namespace dyntwist
