#pragma once

/*
 * Truncated Laurent series in a formal parameter t, with coefficients in an
 * exact field F (Rational or RatFunc).  A series is stored as
 *
 *   c[0] t^val + c[1] t^(val+1) + ... + O(t^(upto+1))
 *
 * i.e. every coefficient of t^m with m <= upto is known exactly.  Negative
 * valuations are allowed; producing one where the caller expects a Taylor
 * expansion is the caller's error to detect.
 */

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "dyntwist/polynomial.hpp"
#include "dyntwist/rational.hpp"

namespace dyntwist {

struct PoleAtOriginError : std::domain_error {
    explicit PoleAtOriginError(const std::string& what) : std::domain_error(what) {}
};

template <class F>
class TruncSeries {
public:
    TruncSeries() : val_(0), upto_(-1) {}
    TruncSeries(int val, std::vector<F> coeffs, int upto)
        : val_(val), coeffs_(std::move(coeffs)), upto_(upto) {
        normalize();
    }

    static TruncSeries zero(int upto) { return TruncSeries(0, {}, upto); }
    static TruncSeries constant(const F& c, int upto) { return TruncSeries(0, {c}, upto); }

    int valuation() const { return val_; }       // meaningful only if !is_zero()
    int upto() const { return upto_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of t^m.  Throws if m is beyond the known precision.
    F coeff(int m) const {
        if (m > upto_) throw std::out_of_range("TruncSeries::coeff: beyond truncation order");
        if (coeffs_.empty() || m < val_ || m >= val_ + static_cast<int>(coeffs_.size())) return F{};
        return coeffs_[m - val_];
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        int upto = std::min(a.upto_, b.upto_);
        if (a.is_zero() && b.is_zero()) return zero(upto);
        int lo = a.is_zero() ? b.val_ : (b.is_zero() ? a.val_ : std::min(a.val_, b.val_));
        std::vector<F> c;
        for (int m = lo; m <= upto; ++m) c.push_back(a.coeff_unchecked(m) + b.coeff_unchecked(m));
        return TruncSeries(lo, std::move(c), upto);
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        return a + b.negated();
    }

    TruncSeries negated() const {
        std::vector<F> c;
        c.reserve(coeffs_.size());
        for (const auto& x : coeffs_) c.push_back(F{} - x);
        return TruncSeries(val_, std::move(c), upto_);
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        // A zero factor is zero to (its order) + (other's valuation).
        constexpr int kInf = 1 << 28;
        int va = a.is_zero() ? kInf : a.val_;
        int vb = b.is_zero() ? kInf : b.val_;
        int upto = std::min(a.upto_ + std::min(vb, kInf / 2), b.upto_ + std::min(va, kInf / 2));
        upto = std::min(upto, kInf);
        if (a.is_zero() || b.is_zero()) return zero(upto);
        int lo = va + vb;
        if (lo > upto) return zero(upto);
        std::vector<F> c(upto - lo + 1, F{});
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                int m = a.val_ + static_cast<int>(i) + b.val_ + static_cast<int>(j);
                if (m > upto) continue;
                c[m - lo] = c[m - lo] + a.coeffs_[i] * b.coeffs_[j];
            }
        return TruncSeries(lo, std::move(c), upto);
    }

    TruncSeries scaled(const F& k) const {
        std::vector<F> c;
        c.reserve(coeffs_.size());
        for (const auto& x : coeffs_) c.push_back(x * k);
        return TruncSeries(val_, std::move(c), upto_);
    }

    /// Equality of all coefficients up to the weaker of the two precisions.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        int upto = std::min(a.upto_, b.upto_);
        int lo = std::min(a.is_zero() ? upto : a.val_, b.is_zero() ? upto : b.val_);
        for (int m = lo; m <= upto; ++m)
            if (!(a.coeff_unchecked(m) == b.coeff_unchecked(m))) return false;
        return true;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        if (is_zero()) {
            os << "0";
        } else {
            bool first = true;
            for (size_t i = 0; i < coeffs_.size(); ++i) {
                if (field_is_zero(coeffs_[i])) continue;
                if (!first) os << " + ";
                first = false;
                os << "(" << coeffs_[i].str() << ")";
                int m = val_ + static_cast<int>(i);
                if (m != 0) os << "*t^" << m;
            }
            if (first) os << "0";
        }
        os << " + O(t^" << (upto_ + 1) << ")";
        return os.str();
    }

private:
    F coeff_unchecked(int m) const {
        if (coeffs_.empty() || m < val_ || m >= val_ + static_cast<int>(coeffs_.size())) return F{};
        return coeffs_[m - val_];
    }

    void normalize() {
        size_t lead = 0;
        while (lead < coeffs_.size() && field_is_zero(coeffs_[lead])) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            val_ = 0;
            return;
        }
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
            val_ += static_cast<int>(lead);
        }
        while (!coeffs_.empty() && field_is_zero(coeffs_.back())) coeffs_.pop_back();
        while (val_ + static_cast<int>(coeffs_.size()) - 1 > upto_) coeffs_.pop_back();
    }

    int val_;
    std::vector<F> coeffs_;
    int upto_;
};

namespace detail {

/// num/den as Laurent series up to t^N, where num, den are finite Laurent
/// polynomials given as exponent -> coefficient maps.
template <class F>
TruncSeries<F> laurent_divide(const std::map<int, F>& num, const std::map<int, F>& den, int N) {
    if (den.empty()) throw PoleAtOriginError("series expansion: denominator vanishes identically");
    if (num.empty()) return TruncSeries<F>::zero(N);
    int vn = num.begin()->first;
    int vd = den.begin()->first;
    int val = vn - vd;
    if (val > N) return TruncSeries<F>::zero(N);
    int len = N - val + 1;
    std::vector<F> n(len, F{}), d(len, F{}), r(len, F{});
    for (const auto& [e, c] : num)
        if (e - vn < len) n[e - vn] = c;
    for (const auto& [e, c] : den)
        if (e - vd < len) d[e - vd] = c;
    F d0inv = field_inverse(d[0]);
    for (int j = 0; j < len; ++j) {
        F acc = n[j];
        for (int k = 0; k < j; ++k) acc = acc - r[k] * d[j - k];
        r[j] = acc * d0inv;
    }
    return TruncSeries<F>(val, std::move(r), N);
}

}  // namespace detail

/// Expand f((l0 + t*l1)/t) = f(l0/t + l1) as a Laurent series in t up to t^N.
/// Throws PoleAtOriginError when the substituted denominator is identically
/// zero, i.e. f has a pole along the whole curve.
inline TruncSeries<Rational> series_expand(const RatFunc& f, const std::vector<Rational>& l0,
                                           const std::vector<Rational>& l1, int N) {
    int nv = f.nvars();
    if (static_cast<int>(l0.size()) != nv || static_cast<int>(l1.size()) != nv)
        throw std::invalid_argument("series_expand: arity mismatch");
    auto subst = [&](const Poly& p) {
        std::map<int, Rational> out;
        for (const auto& [e, c] : p.terms()) {
            int tot = 0;
            std::vector<Rational> prod{c};  // coefficients in t, lowest first
            for (int i = 0; i < nv; ++i) {
                for (int k = 0; k < e[i]; ++k) {
                    std::vector<Rational> next(prod.size() + 1, Rational(0));
                    for (size_t j = 0; j < prod.size(); ++j) {
                        next[j] += prod[j] * l0[static_cast<size_t>(i)];
                        next[j + 1] += prod[j] * l1[static_cast<size_t>(i)];
                    }
                    prod = std::move(next);
                }
                tot += e[i];
            }
            for (size_t j = 0; j < prod.size(); ++j) {
                if (prod[j].is_zero()) continue;
                int m = static_cast<int>(j) - tot;
                auto [it, fresh] = out.emplace(m, prod[j]);
                if (!fresh) {
                    it->second += prod[j];
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return out;
    };
    return detail::laurent_divide(subst(f.num()), subst(f.den()), N);
}

/// Expand f(l/t) (every coordinate scaled by 1/t) as a Laurent series in t
/// with RatFunc coefficients, up to t^N.
inline TruncSeries<RatFunc> scale_expand(const RatFunc& f, int N) {
    int nv = f.nvars();
    auto subst = [&](const Poly& p) {
        std::map<int, RatFunc> out;
        for (const auto& [e, c] : p.terms()) {
            int tot = 0;
            for (int i = 0; i < nv; ++i) tot += e[i];
            Poly mono(nv);
            mono.add_term(e, c);
            auto [it, fresh] = out.emplace(-tot, RatFunc(mono));
            if (!fresh) it->second += RatFunc(mono);
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    };
    return detail::laurent_divide(subst(f.num()), subst(f.den()), N);
}

}  // namespace dyntwist
