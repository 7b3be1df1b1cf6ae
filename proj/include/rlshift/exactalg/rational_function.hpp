#ifndef RLSHIFT_EXACTALG_RATIONAL_FUNCTION_HPP
#define RLSHIFT_EXACTALG_RATIONAL_FUNCTION_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace rlshift {

class RationalFunction;

/// Exact Laurent coefficients of a rational function around 0, for exponents
/// low_order() .. truncation_order().
class LaurentExpansion {
public:
    LaurentExpansion(long low, long truncation, std::vector<Rational> coeffs)
        : low_(low), truncation_(truncation), coeffs_(std::move(coeffs))
    {
    }

    long low_order() const noexcept { return low_; }
    long truncation_order() const noexcept { return truncation_; }

    Rational coeff(long k) const
    {
        if (k < low_ || k > truncation_) return Rational(0);
        return coeffs_[static_cast<std::size_t>(k - low_)];
    }

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

private:
    long low_;
    long truncation_;
    std::vector<Rational> coeffs_;
};

/// Univariate rational function over Q in the local coordinate xi, stored as
/// xi^v * N(xi) / D(xi) with N(0) != 0, D(0) != 0, D monic and gcd(N, D) = 1.
/// The explicit valuation v makes monomials and residues at 0 cheap.
class RationalFunction {
public:
    using Poly = RationalPolynomial;

    RationalFunction() = default;
    RationalFunction(const Rational& c) : num_(Poly::constant(c)) {} // NOLINT: implicit scalar embedding
    RationalFunction(long c) : RationalFunction(Rational(c)) {}      // NOLINT

    RationalFunction(const Poly& num, const Poly& den)
    {
        if (den.is_zero()) throw Error(Errc::invalid_argument, "rational function with zero denominator");
        if (num.is_zero()) return;
        const auto vn = num.valuation();
        const auto vd = den.valuation();
        val_ = static_cast<long>(vn) - static_cast<long>(vd);
        num_ = num.drop_low(vn);
        den_ = den.drop_low(vd);
        reduce_();
    }

    explicit RationalFunction(const Poly& num) : RationalFunction(num, Poly::one()) {}

    /// c * xi^k for any integer k.
    static RationalFunction monomial(const Rational& c, long k)
    {
        RationalFunction r;
        if (rlshift::is_zero(c)) return r;
        r.num_ = Poly::constant(c);
        r.val_ = k;
        return r;
    }

    static RationalFunction xi() { return monomial(Rational(1), 1); }

    /// (xi + a)^k for integer k (a may be zero).
    static RationalFunction binomial_power(const Rational& a, long k)
    {
        if (rlshift::is_zero(a)) return monomial(Rational(1), k);
        Poly base{a, Rational(1)};
        Poly p = Poly::one();
        for (long i = 0; i < (k < 0 ? -k : k); ++i) p = p * base;
        return k >= 0 ? RationalFunction(p) : RationalFunction(Poly::one(), p);
    }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_monomial() const { return num_.degree() == 0 && den_.is_one(); }

    /// xi-adic valuation (order of vanishing at 0; negative for a pole).
    long valuation() const noexcept { return val_; }

    /// Full numerator / monic denominator, with the xi power folded in.
    Poly numerator() const { return val_ >= 0 ? num_.shift_up(static_cast<std::size_t>(val_)) : num_; }
    Poly denominator() const { return val_ >= 0 ? den_ : den_.shift_up(static_cast<std::size_t>(-val_)); }

    /// Reduced parts: the function equals xi^valuation() * reduced_numerator() / reduced_denominator().
    const Poly& reduced_numerator() const noexcept { return num_; }
    const Poly& reduced_denominator() const noexcept { return den_; }

    /// Order of the pole at 0 (0 when regular there).
    long pole_order_at_zero() const noexcept { return is_zero() || val_ >= 0 ? 0 : -val_; }

    /// Laurent coefficient of xi^k in the expansion at 0.
    Rational coefficient(long k) const
    {
        if (is_zero() || k < val_) return Rational(0);
        const auto idx = static_cast<std::size_t>(k - val_);
        if (den_.is_one()) return num_.coeff(idx);
        return series_(idx + 1)[idx];
    }

    /// Exact Laurent expansion at 0 for exponents -pole_order .. order.
    LaurentExpansion expand_at_zero(long order) const
    {
        const long low = std::min<long>(val_, 0);
        if (is_zero() || order < val_) {
            return LaurentExpansion(low, order, std::vector<Rational>(static_cast<std::size_t>(std::max<long>(order - low + 1, 0))));
        }
        const auto terms = static_cast<std::size_t>(order - val_ + 1);
        const auto s = series_(terms);
        std::vector<Rational> out(static_cast<std::size_t>(order - low + 1));
        for (std::size_t i = 0; i < terms; ++i) out[static_cast<std::size_t>(val_ - low) + i] = s[i];
        return LaurentExpansion(low, order, std::move(out));
    }

    Rational operator()(const Rational& x) const
    {
        const Rational d = den_(x);
        if (is_zero()) return Rational(0);
        if (rlshift::is_zero(d) || (val_ < 0 && rlshift::is_zero(x)))
            throw Error(Errc::invalid_argument, "evaluation at a pole");
        Rational p = 1;
        Rational base = x;
        long e = val_ < 0 ? -val_ : val_;
        for (long i = 0; i < e; ++i) p *= base;
        if (val_ < 0) p = 1 / p;
        return p * num_(x) / d;
    }

    RationalFunction derivative() const
    {
        if (is_zero()) return {};
        // (xi^v N/D)' = xi^(v-1) (v N D + xi (N' D - N D')) / D^2
        Poly vnd = (num_ * den_).scaled(Rational(val_));
        Poly rest = (num_.derivative() * den_ - num_ * den_.derivative()).shift_up(1);
        RationalFunction r(vnd + rest, den_ * den_);
        if (!r.is_zero()) r.val_ += val_ - 1;
        return r;
    }

    RationalFunction inverse() const
    {
        if (is_zero()) throw Error(Errc::invalid_argument, "inverse of zero rational function");
        RationalFunction r;
        r.val_ = -val_;
        const Rational lc = num_.lead();
        r.num_ = den_.scaled(1 / Rational(lc));
        r.den_ = num_.monic();
        return r;
    }

    RationalFunction pow(long k) const
    {
        if (k < 0) return inverse().pow(-k);
        RationalFunction acc(1);
        RationalFunction base = *this;
        while (k > 0) {
            if (k & 1) acc *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return acc;
    }

    /// Substitution xi -> xi + a.
    RationalFunction translate(const Rational& a) const
    {
        if (is_zero() || rlshift::is_zero(a)) return *this;
        return RationalFunction(numerator().translate(a), denominator().translate(a));
    }

    RationalFunction operator-() const
    {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RationalFunction& operator*=(const RationalFunction& o)
    {
        if (is_zero()) return *this;
        if (o.is_zero()) return *this = RationalFunction{};
        val_ += o.val_;
        if (den_.is_one() && o.den_.is_one()) {
            num_ = num_ * o.num_;
            return *this;
        }
        // Cross-cancel: both inputs are already reduced.
        Poly g1 = Poly::gcd(num_, o.den_);
        Poly g2 = Poly::gcd(o.num_, den_);
        Poly n1 = g1.is_one() ? num_ : Poly::divmod(num_, g1).first;
        Poly d2 = g1.is_one() ? o.den_ : Poly::divmod(o.den_, g1).first;
        Poly n2 = g2.is_one() ? o.num_ : Poly::divmod(o.num_, g2).first;
        Poly d1 = g2.is_one() ? den_ : Poly::divmod(den_, g2).first;
        num_ = n1 * n2;
        den_ = d1 * d2;
        normalize_lead_();
        return *this;
    }

    RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

    RationalFunction& operator+=(const RationalFunction& o)
    {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        const long m = std::min(val_, o.val_);
        Poly a = num_.shift_up(static_cast<std::size_t>(val_ - m));
        Poly b = o.num_.shift_up(static_cast<std::size_t>(o.val_ - m));
        if (den_ == o.den_) {
            Poly n = a + b;
            *this = from_parts_(n, den_, m);
            return *this;
        }
        Poly n = a * o.den_ + b * den_;
        Poly d = den_ * o.den_;
        *this = from_parts_(n, d, m);
        return *this;
    }

    RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    RationalFunction scaled(const Rational& c) const
    {
        if (rlshift::is_zero(c) || is_zero()) return {};
        RationalFunction r = *this;
        r.num_ = r.num_.scaled(c);
        return r;
    }

    /// Multiplication by xi^k.
    RationalFunction shifted(long k) const
    {
        RationalFunction r = *this;
        if (!r.is_zero()) r.val_ += k;
        return r;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.val_ == b.val_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string to_string(const std::string& var = "xi") const
    {
        if (is_zero()) return "0";
        std::string s;
        if (val_ != 0) s = var + "^(" + std::to_string(val_) + ")*";
        s += "(" + num_.to_string(var) + ")";
        if (!den_.is_one()) s += "/(" + den_.to_string(var) + ")";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

private:
    static RationalFunction from_parts_(const Poly& n, const Poly& d, long v)
    {
        RationalFunction r;
        if (n.is_zero()) return r;
        const auto vn = n.valuation();
        r.val_ = v + static_cast<long>(vn);
        r.num_ = n.drop_low(vn);
        r.den_ = d;
        r.reduce_();
        return r;
    }

    void reduce_()
    {
        if (!den_.is_one() && den_.degree() > 0) {
            Poly g = Poly::gcd(num_, den_);
            if (!g.is_one()) {
                num_ = Poly::divmod(num_, g).first;
                den_ = Poly::divmod(den_, g).first;
            }
        }
        normalize_lead_();
    }

    void normalize_lead_()
    {
        const Rational l = den_.lead();
        if (l != 1) {
            num_ = num_.scaled(1 / l);
            den_ = den_.scaled(1 / l);
        }
    }

    // First `terms` power-series coefficients of N/D (D(0) != 0).
    std::vector<Rational> series_(std::size_t terms) const
    {
        std::vector<Rational> s(terms);
        const Rational d0 = den_.coeff(0);
        const auto& dc = den_.coeffs();
        for (std::size_t k = 0; k < terms; ++k) {
            Rational acc = num_.coeff(k);
            for (std::size_t j = 1; j < dc.size() && j <= k; ++j) acc -= dc[j] * s[k - j];
            s[k] = acc / d0;
        }
        return s;
    }

    long val_ = 0;
    Poly num_;
    Poly den_ = Poly::one();
};

/// Res_{xi=0}(g df): coefficient of xi^-1 in g * f'.
inline Rational residue_at_zero(const RationalFunction& g, const RationalFunction& f)
{
    if (g.is_zero() || f.is_zero()) return Rational(0);
    return (g * f.derivative()).coefficient(-1);
}

/// Res_{xi=0}(f dxi).
inline Rational residue(const RationalFunction& f) { return f.coefficient(-1); }

inline LaurentExpansion expand_at_zero(const RationalFunction& r, long order) { return r.expand_at_zero(order); }

} // namespace rlshift

#endif
