#ifndef RLSHIFT_EXACTALG_FRAC_LAURENT_HPP
#define RLSHIFT_EXACTALG_FRAC_LAURENT_HPP

#include <map>
#include <string>
#include <utility>

#include "../error.hpp"
#include "rational.hpp"
#include "rational_function.hpp"

namespace rlshift {

/// Finite Laurent sum with exponents in (1/m)Z, as produced by conjugating with
/// diag(xi^q_1, ..., xi^q_N) for a fractional coweight.
class FracLaurent {
public:
    FracLaurent() = default;
    explicit FracLaurent(Integer denominator_bound) : bound_(std::move(denominator_bound)) { check_bound_(); }

    /// c * xi^e; the bound defaults to the denominator of e.
    static FracLaurent monomial(const Rational& c, const Rational& e, Integer bound = 0)
    {
        if (bound == 0) bound = e.get_den();
        FracLaurent r(bound);
        r.add_term(e, c);
        return r;
    }

    const Integer& denominator_bound() const noexcept { return bound_; }
    const std::map<Rational, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Rational& e, const Rational& c)
    {
        if (rlshift::is_zero(c)) return;
        if (Integer(bound_ % e.get_den()) != 0)
            throw Error(Errc::invalid_argument, "exponent " + e.get_str() + " outside (1/" + bound_.get_str() + ")Z");
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (rlshift::is_zero(it->second)) terms_.erase(it);
        }
    }

    bool is_integral_exponents() const
    {
        for (const auto& [e, c] : terms_)
            if (!is_integer(e)) return false;
        return true;
    }

    /// The same element as a rational function; only valid with integral exponents.
    RationalFunction to_rational_function() const
    {
        if (!is_integral_exponents())
            throw Error(Errc::fractional_exponent_result, "fractional exponent in " + to_string());
        RationalFunction f;
        for (const auto& [e, c] : terms_) f += RationalFunction::monomial(c, to_long(e));
        return f;
    }

    friend FracLaurent operator*(const FracLaurent& a, const FracLaurent& b)
    {
        FracLaurent r(lcm(a.bound_, b.bound_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(Rational(ea + eb), Rational(ca * cb));
        return r;
    }

    friend FracLaurent operator+(const FracLaurent& a, const FracLaurent& b)
    {
        FracLaurent r(lcm(a.bound_, b.bound_));
        for (const auto& [e, c] : a.terms_) r.add_term(e, c);
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend bool operator==(const FracLaurent& a, const FracLaurent& b) { return a.terms_ == b.terms_; }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.get_str() + ")*xi^(" + e.get_str() + ")";
        }
        return s;
    }

private:
    void check_bound_() const
    {
        if (bound_ <= 0) throw Error(Errc::invalid_argument, "denominator bound must be positive");
    }

    Integer bound_ = 1;
    std::map<Rational, Rational> terms_;
};

inline bool is_integral_exponents(const FracLaurent& x) { return x.is_integral_exponents(); }

} // namespace rlshift

#endif
