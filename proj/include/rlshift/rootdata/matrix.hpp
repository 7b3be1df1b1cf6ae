#ifndef RLSHIFT_ROOTDATA_MATRIX_HPP
#define RLSHIFT_ROOTDATA_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "../exactalg/rational.hpp"

namespace rlshift {

/// Small dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix square(std::size_t n) { return Matrix(n, n); }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    /// E_{ij}
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j)
    {
        Matrix m(n, n);
        m(i, j) = T(1);
        return m;
    }

    static Matrix diagonal(const std::vector<T>& d)
    {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!(x == T(0))) return false;
        return true;
    }

    bool is_diagonal() const
    {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !((*this)(i, j) == T(0))) return false;
        return true;
    }

    std::vector<T> diagonal_entries() const
    {
        std::vector<T> d(std::min(rows_, cols_));
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
        return d;
    }

    T trace() const
    {
        T t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    Matrix transpose() const
    {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix scaled(const T& c) const
    {
        Matrix m = *this;
        for (auto& x : m.data_) x *= c;
        return m;
    }

    Matrix operator-() const { return scaled(T(-1)); }

    Matrix& operator+=(const Matrix& o)
    {
        check_same_(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        check_same_(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw Error(Errc::invalid_argument, "matrix shape mismatch in product");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!(b(k, j) == T(0))) m(i, j) += aik * b(k, j);
            }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Kronecker product; index (i, k) of a (x) b is i * b.rows() + k.
    friend Matrix kron(const Matrix& a, const Matrix& b)
    {
        Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                if (a(i, j) == T(0)) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l) m(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
            }
        return m;
    }

    const std::vector<T>& data() const noexcept { return data_; }

private:
    void check_same_(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::invalid_argument, "matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b)
{
    return a * b - b * a;
}

using RationalMatrix = Matrix<Rational>;

/// Inverse of a square rational matrix by Gauss-Jordan; nullopt when singular.
inline std::optional<RationalMatrix> inverse(const RationalMatrix& m)
{
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) return std::nullopt;
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const Rational piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || is_zero(a(r, c))) continue;
            const Rational f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Rank of a rational matrix.
inline std::size_t rank(RationalMatrix a)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && is_zero(a(p, c))) ++p;
        if (p == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (is_zero(a(i, c))) continue;
            const Rational f = a(i, c) / a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

inline std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& v)
{
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

/// Scales a nonzero rational matrix to a primitive integer matrix whose first nonzero entry is positive.
inline RationalMatrix primitive(const RationalMatrix& m)
{
    Integer den = 1;
    Integer g = 0;
    for (const auto& x : m.data()) den = lcm(den, x.get_den());
    for (const auto& x : m.data()) {
        Integer v = x.get_num() * (den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g == 0) throw Error(Errc::invalid_argument, "primitive() of zero matrix");
    Rational s = Rational(den) / Rational(g);
    for (const auto& x : m.data())
        if (!is_zero(x)) {
            if (sgn(x) < 0) s = -s;
            break;
        }
    return m.scaled(s);
}

} // namespace rlshift

#endif
