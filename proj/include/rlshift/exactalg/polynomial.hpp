#ifndef RLSHIFT_EXACTALG_POLYNOMIAL_HPP
#define RLSHIFT_EXACTALG_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "rational.hpp"

namespace rlshift {

/// Dense univariate polynomial over a field. coeffs_[k] is the coefficient of x^k;
/// the leading coefficient is never zero (the zero polynomial has no coefficients).
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim_(); }
    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim_(); }

    static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
    static Polynomial one() { return constant(T(1)); }

    /// c * x^k
    static Polynomial monomial(const T& c, std::size_t k)
    {
        std::vector<T> v(k + 1, T(0));
        v[k] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == T(1); }

    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    const T& lead() const { return coeffs_.back(); }

    T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
    const std::vector<T>& coeffs() const noexcept { return coeffs_; }

    /// Largest k with x^k dividing this polynomial (0 for the zero polynomial).
    std::size_t valuation() const
    {
        std::size_t k = 0;
        while (k < coeffs_.size() && coeffs_[k] == T(0)) ++k;
        return k < coeffs_.size() ? k : 0;
    }

    /// Divides by x^k; the low coefficients must be zero.
    Polynomial drop_low(std::size_t k) const
    {
        if (k >= coeffs_.size()) return {};
        return Polynomial(std::vector<T>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
    }

    Polynomial shift_up(std::size_t k) const
    {
        if (is_zero() || k == 0) return *this;
        std::vector<T> v(k, T(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(v));
    }

    T operator()(const T& x) const
    {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const
    {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> v(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * T(static_cast<long>(k));
        return Polynomial(std::move(v));
    }

    /// p(x + a), by repeated synthetic division (Taylor shift).
    Polynomial translate(const T& a) const
    {
        std::vector<T> v = coeffs_;
        const std::size_t n = v.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j > i; --j) v[j - 1] += a * v[j];
        return Polynomial(std::move(v));
    }

    Polynomial monic() const
    {
        if (is_zero()) return {};
        std::vector<T> v = coeffs_;
        const T l = v.back();
        for (auto& c : v) c /= l;
        return Polynomial(std::move(v));
    }

    Polynomial operator-() const
    {
        std::vector<T> v = coeffs_;
        for (auto& c : v) c = -c;
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim_();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim_();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.coeffs_.size() == 1) return b.scaled(a.coeffs_[0]);
        if (b.coeffs_.size() == 1) return a.scaled(b.coeffs_[0]);
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == T(0)) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(v));
    }

    Polynomial scaled(const T& c) const
    {
        if (c == T(0)) return {};
        std::vector<T> v = coeffs_;
        for (auto& x : v) x *= c;
        return Polynomial(std::move(v));
    }

    /// Euclidean division: returns (q, r) with a = q b + r, deg r < deg b.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
    {
        if (b.is_zero()) throw Error(Errc::invalid_argument, "polynomial division by zero");
        if (a.degree() < b.degree()) return {Polynomial{}, a};
        std::vector<T> r = a.coeffs_;
        std::vector<T> q(a.coeffs_.size() - b.coeffs_.size() + 1, T(0));
        const T& lb = b.coeffs_.back();
        const std::size_t db = b.coeffs_.size() - 1;
        for (std::size_t k = q.size(); k-- > 0;) {
            const T c = r[k + db] / lb;
            q[k] = c;
            if (c == T(0)) continue;
            for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * b.coeffs_[j];
        }
        r.resize(db);
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

    /// Monic gcd; gcd(0, 0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b)
    {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const
    {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            if (coeffs_[k] == T(0)) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << coeffs_[k] << ")";
            if (k >= 1) os << "*" << var;
            if (k >= 2) os << "^" << k;
        }
        return os.str();
    }

private:
    void trim_()
    {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

} // namespace rlshift

#endif
