#ifndef RLSHIFT_ROOTDATA_ROOT_SYSTEM_HPP
#define RLSHIFT_ROOTDATA_ROOT_SYSTEM_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "../exactalg/rational.hpp"
#include "matrix.hpp"

namespace rlshift {

enum class Series { A, B, C, D };

inline char series_letter(Series s)
{
    switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
    }
    return '?';
}

/// A classical simple Lie algebra: series and rank, e.g. A2 = sl(3), C2 = sp(4).
struct AlgebraId {
    Series series = Series::A;
    int rank = 1;

    static AlgebraId make(Series s, int rank)
    {
        AlgebraId id{s, rank};
        id.validate();
        return id;
    }

    void validate() const
    {
        const int min_rank = series == Series::B ? 2 : series == Series::D ? 3 : 1;
        if (rank < min_rank)
            throw Error(Errc::invalid_rank, std::string(1, series_letter(series)) + std::to_string(rank) +
                                                " is not a simple classical algebra (rank must be >= " +
                                                std::to_string(min_rank) + ")");
    }

    /// Parses "A2", "C3", ... and also sl(n), sp(2n), so(n).
    static AlgebraId parse(const std::string& text)
    {
        auto num = [&](const std::string& s) -> int {
            try {
                std::size_t pos = 0;
                int v = std::stoi(s, &pos);
                if (pos != s.size()) throw 0;
                return v;
            } catch (...) {
                throw Error(Errc::parse_error, "bad algebra '" + text + "'");
            }
        };
        if (text.size() >= 2 && std::string("ABCD").find(text[0]) != std::string::npos) {
            const Series s = text[0] == 'A' ? Series::A : text[0] == 'B' ? Series::B : text[0] == 'C' ? Series::C : Series::D;
            return make(s, num(text.substr(1)));
        }
        auto inner = [&](std::size_t prefix) {
            if (text.size() < prefix + 2 || text.back() != ')') throw Error(Errc::parse_error, "bad algebra '" + text + "'");
            return num(text.substr(prefix + 1, text.size() - prefix - 2));
        };
        if (text.rfind("sl(", 0) == 0) return make(Series::A, inner(2) - 1);
        if (text.rfind("sp(", 0) == 0) {
            const int n = inner(2);
            if (n % 2) throw Error(Errc::parse_error, "sp(n) needs even n");
            return make(Series::C, n / 2);
        }
        if (text.rfind("so(", 0) == 0) {
            const int n = inner(2);
            return n % 2 ? make(Series::B, (n - 1) / 2) : make(Series::D, n / 2);
        }
        throw Error(Errc::parse_error, "bad algebra '" + text + "'");
    }

    std::string name() const { return std::string(1, series_letter(series)) + std::to_string(rank); }

    /// Dimension of the defining representation.
    std::size_t defining_dim() const
    {
        switch (series) {
        case Series::A: return static_cast<std::size_t>(rank + 1);
        case Series::B: return static_cast<std::size_t>(2 * rank + 1);
        case Series::C:
        case Series::D: return static_cast<std::size_t>(2 * rank);
        }
        return 0;
    }

    friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;
};

/// Diagonal element of the Cartan subalgebra in the defining representation.
class CartanElement {
public:
    CartanElement() = default;
    explicit CartanElement(std::vector<Rational> diag) : diag_(std::move(diag)) {}

    static CartanElement zero(std::size_t n) { return CartanElement(std::vector<Rational>(n, Rational(0))); }

    std::size_t size() const noexcept { return diag_.size(); }
    const Rational& operator[](std::size_t i) const { return diag_[i]; }
    const std::vector<Rational>& entries() const noexcept { return diag_; }
    RationalMatrix matrix() const { return RationalMatrix::diagonal(diag_); }

    bool is_zero() const
    {
        return std::all_of(diag_.begin(), diag_.end(), [](const Rational& q) { return rlshift::is_zero(q); });
    }

    CartanElement& operator+=(const CartanElement& o)
    {
        for (std::size_t i = 0; i < diag_.size(); ++i) diag_[i] += o.diag_[i];
        return *this;
    }
    CartanElement& operator-=(const CartanElement& o)
    {
        for (std::size_t i = 0; i < diag_.size(); ++i) diag_[i] -= o.diag_[i];
        return *this;
    }
    friend CartanElement operator+(CartanElement a, const CartanElement& b) { return a += b; }
    friend CartanElement operator-(CartanElement a, const CartanElement& b) { return a -= b; }
    friend CartanElement operator*(const Rational& c, CartanElement a)
    {
        for (auto& x : a.diag_) x *= c;
        return a;
    }
    CartanElement operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const CartanElement& a, const CartanElement& b) { return a.diag_ == b.diag_; }

private:
    std::vector<Rational> diag_;
};

/// A root, recorded by its simple-root coordinates and the matrix entry (row, col)
/// where its root vectors are nonzero in the defining representation.
struct Root {
    std::vector<int> coords;
    int height = 0;
    std::size_t row = 0;
    std::size_t col = 0;

    bool positive() const { return height > 0; }
};

/// Exact root data of a classical algebra in its defining matrix representation.
/// Roots are ordered: positive roots by (height, simple coordinates descending),
/// then the negatives in the same order, so root i + npos() is -(root i).
class RootSystem {
public:
    const AlgebraId& algebra() const noexcept { return id_; }
    std::size_t rank() const noexcept { return static_cast<std::size_t>(id_.rank); }
    std::size_t dim() const noexcept { return dim_; }

    std::size_t num_roots() const noexcept { return roots_.size(); }
    std::size_t npos() const noexcept { return roots_.size() / 2; }
    const Root& root(std::size_t i) const { return roots_.at(i); }
    const std::vector<Root>& roots() const noexcept { return roots_; }

    /// Index of -root(i).
    std::size_t negative(std::size_t i) const { return i < npos() ? i + npos() : i - npos(); }

    std::optional<std::size_t> find(const std::vector<int>& coords) const
    {
        auto it = index_.find(coords);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Index of the sum of two roots, if it is a root.
    std::optional<std::size_t> sum(std::size_t a, std::size_t b) const
    {
        std::vector<int> c(rank());
        for (std::size_t k = 0; k < rank(); ++k) c[k] = roots_[a].coords[k] + roots_[b].coords[k];
        return find(c);
    }

    std::size_t simple_root(std::size_t i) const { return simple_.at(i); }

    /// alpha(h) for a Cartan element h.
    Rational root_value(std::size_t a, const CartanElement& h) const
    {
        const Root& r = roots_[a];
        return h[r.row] - h[r.col];
    }

    /// The invariant form on the Cartan: scale * trace(x y), with (theta, theta) = 2.
    Rational form(const CartanElement& x, const CartanElement& y) const
    {
        Rational t = 0;
        for (std::size_t i = 0; i < dim_; ++i) t += x[i] * y[i];
        return form_scale_ * t;
    }

    /// Invariant form on arbitrary defining-rep matrices.
    Rational form(const RationalMatrix& x, const RationalMatrix& y) const { return form_scale_ * (x * y).trace(); }

    const Rational& form_scale() const noexcept { return form_scale_; }

    const CartanElement& coroot(std::size_t a) const { return coroots_.at(a); }
    const CartanElement& simple_coroot(std::size_t i) const { return coroots_.at(simple_.at(i)); }
    /// Image of alpha under the identification of the Cartan with its dual.
    const CartanElement& h_alpha(std::size_t a) const { return h_alpha_.at(a); }
    /// (alpha, alpha)
    const Rational& root_norm2(std::size_t a) const { return norm2_.at(a); }

    const CartanElement& fundamental_coweight(std::size_t i) const { return coweights_.at(i); }
    /// Fundamental weight Lambda_i, transported to the Cartan by the form.
    const CartanElement& fundamental_weight(std::size_t i) const { return weights_.at(i); }

    /// a_ij = alpha_j(H_i)
    int cartan_matrix(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
    const std::vector<std::vector<int>>& cartan_matrix() const noexcept { return cartan_; }

    std::size_t highest_root() const noexcept { return highest_; }
    /// Coefficients of theta in simple roots.
    const std::vector<int>& marks() const noexcept { return roots_[highest_].coords; }
    /// Coefficients of theta^vee in simple coroots.
    const std::vector<int>& comarks() const noexcept { return comarks_; }
    int dual_coxeter() const noexcept { return dual_coxeter_; }

    /// Symmetric or symplectic form preserved by the algebra; identity for type A (unused).
    const RationalMatrix& invariant_form() const noexcept { return form_matrix_; }

    /// Membership of a matrix in the algebra.
    bool contains(const RationalMatrix& x) const
    {
        if (x.rows() != dim_ || x.cols() != dim_) return false;
        if (id_.series == Series::A) return is_zero(x.trace());
        return (x.transpose() * form_matrix_ + form_matrix_ * x).is_zero();
    }

    /// Projection of an arbitrary matrix onto the algebra (identity on traceless matrices for A).
    RationalMatrix project(const RationalMatrix& e) const
    {
        if (id_.series == Series::A) {
            RationalMatrix r = e;
            const Rational t = e.trace() / Rational(static_cast<long>(dim_));
            for (std::size_t i = 0; i < dim_; ++i) r(i, i) -= t;
            return r;
        }
        // X -> (X - J^-1 X^T J) / 2
        return (e - form_inverse_ * e.transpose() * form_matrix_).scaled(Rational(1, 2));
    }

    /// Coordinates alpha_j(h); integral exactly when h lies in the coweight lattice.
    std::vector<Rational> coweight_coords(const CartanElement& h) const
    {
        std::vector<Rational> v(rank());
        for (std::size_t j = 0; j < rank(); ++j) v[j] = root_value(simple_[j], h);
        return v;
    }

    /// Coordinates of h in the basis of simple coroots.
    std::vector<Rational> coroot_coords(const CartanElement& h) const { return mat_vec(coroot_from_coweight_, coweight_coords(h)); }

    CartanElement from_coroot_coords(const std::vector<Rational>& x) const
    {
        CartanElement h = CartanElement::zero(dim_);
        for (std::size_t i = 0; i < rank(); ++i)
            if (!is_zero(x[i])) h += x[i] * simple_coroot(i);
        return h;
    }

    CartanElement from_coweight_coords(const std::vector<Rational>& m) const
    {
        CartanElement h = CartanElement::zero(dim_);
        for (std::size_t i = 0; i < rank(); ++i)
            if (!is_zero(m[i])) h += m[i] * coweights_[i];
        return h;
    }

    /// Whether a diagonal matrix belongs to the Cartan subalgebra.
    bool in_cartan(const CartanElement& h) const { return from_coroot_coords(coroot_coords(h)) == h; }

    /// Q^vee membership for an element of P^vee given by fundamental-coweight coordinates.
    bool is_in_coroot_lattice(const std::vector<long>& coweight_coords) const
    {
        std::vector<Rational> m(coweight_coords.begin(), coweight_coords.end());
        for (const auto& x : mat_vec(coroot_from_coweight_, m))
            if (!is_integer(x)) return false;
        return true;
    }

    std::string root_label(std::size_t a) const
    {
        std::string s = roots_[a].positive() ? "a[" : "-a[";
        for (std::size_t k = 0; k < rank(); ++k) {
            if (k) s += ",";
            s += std::to_string(std::abs(roots_[a].coords[k]));
        }
        return s + "]";
    }

    friend RootSystem build_root_system(const AlgebraId& id);

private:
    AlgebraId id_;
    std::size_t dim_ = 0;
    RationalMatrix form_matrix_;
    RationalMatrix form_inverse_;
    std::vector<Root> roots_;
    std::map<std::vector<int>, std::size_t> index_;
    std::vector<std::size_t> simple_;
    Rational form_scale_;
    std::vector<CartanElement> coroots_;
    std::vector<CartanElement> h_alpha_;
    std::vector<Rational> norm2_;
    std::vector<CartanElement> coweights_;
    std::vector<CartanElement> weights_;
    std::vector<std::vector<int>> cartan_;
    RationalMatrix coroot_from_coweight_;
    std::size_t highest_ = 0;
    std::vector<int> comarks_;
    int dual_coxeter_ = 0;
};

namespace detail {

// Antidiagonal invariant form: symmetric for B/D, [[0, K], [-K, 0]] for C.
inline RationalMatrix classical_form(const AlgebraId& id)
{
    const std::size_t n = id.defining_dim();
    RationalMatrix j(n, n);
    if (id.series == Series::A) return RationalMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = (id.series == Series::C && i >= n / 2) ? Rational(-1) : Rational(1);
    return j;
}

// Auxiliary Cartan basis used only to discover roots.
inline std::vector<CartanElement> auxiliary_cartan_basis(const AlgebraId& id)
{
    const std::size_t n = id.defining_dim();
    std::vector<CartanElement> b;
    for (int k = 0; k < id.rank; ++k) {
        std::vector<Rational> d(n, Rational(0));
        const auto uk = static_cast<std::size_t>(k);
        if (id.series == Series::A) {
            d[uk] = 1;
            d[uk + 1] = -1;
        } else {
            d[uk] = 1;
            d[n - 1 - uk] = -1;
        }
        b.emplace_back(std::move(d));
    }
    return b;
}

// Solves a small linear system A x = b exactly; throws when singular.
inline std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b)
{
    auto inv = inverse(a);
    if (!inv) throw Error(Errc::internal_inconsistency, "singular system in root data construction");
    return mat_vec(*inv, b);
}

} // namespace detail

/// Builds the root data of a classical algebra; see the class comment for the ordering.
inline RootSystem build_root_system(const AlgebraId& id)
{
    id.validate();
    RootSystem rs;
    rs.id_ = id;
    rs.dim_ = id.defining_dim();
    const std::size_t n = rs.dim_;
    const std::size_t r = static_cast<std::size_t>(id.rank);
    rs.form_matrix_ = detail::classical_form(id);
    rs.form_inverse_ = *inverse(rs.form_matrix_);
    const auto aux = detail::auxiliary_cartan_basis(id);

    // Root discovery: group matrix units by their weight on the auxiliary basis.
    struct Found {
        std::vector<Rational> value;
        std::size_t row, col;
    };
    std::vector<Found> found;
    std::map<std::vector<Rational>, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<Rational> v(r);
            bool nonzero = false;
            for (std::size_t k = 0; k < r; ++k) {
                v[k] = aux[k][i] - aux[k][j];
                nonzero = nonzero || !is_zero(v[k]);
            }
            if (!nonzero || seen.count(v)) continue;
            if (rs.project(RationalMatrix::unit(n, i, j)).is_zero()) continue;
            seen.emplace(v, found.size());
            found.push_back({v, i, j});
        }

    // Positive roots live above the diagonal; simple roots are the indecomposable ones.
    std::vector<std::size_t> pos;
    for (std::size_t a = 0; a < found.size(); ++a)
        if (found[a].row < found[a].col) pos.push_back(a);
    std::vector<std::size_t> simple;
    for (std::size_t a : pos) {
        bool decomposable = false;
        for (std::size_t b : pos) {
            std::vector<Rational> diff(r);
            for (std::size_t k = 0; k < r; ++k) diff[k] = found[a].value[k] - found[b].value[k];
            auto it = seen.find(diff);
            if (it != seen.end() && found[it->second].row < found[it->second].col) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(a);
    }
    if (simple.size() != r) throw Error(Errc::internal_inconsistency, "wrong number of simple roots for " + id.name());
    std::sort(simple.begin(), simple.end(), [&](std::size_t a, std::size_t b) {
        return std::make_pair(found[a].row, found[a].col) < std::make_pair(found[b].row, found[b].col);
    });

    RationalMatrix simple_values(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) simple_values(k, i) = found[simple[i]].value[k];
    const auto simple_inv = inverse(simple_values);
    if (!simple_inv) throw Error(Errc::internal_inconsistency, "dependent simple roots");

    std::vector<Root> positive;
    for (std::size_t a : pos) {
        const auto c = mat_vec(*simple_inv, found[a].value);
        Root root;
        for (const auto& x : c) {
            if (!is_integer(x) || sgn(x) < 0) throw Error(Errc::internal_inconsistency, "non-integral root coordinates");
            root.coords.push_back(static_cast<int>(to_long(x)));
            root.height += root.coords.back();
        }
        root.row = found[a].row;
        root.col = found[a].col;
        positive.push_back(std::move(root));
    }
    std::sort(positive.begin(), positive.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coords > b.coords;
    });
    rs.roots_ = positive;
    for (const Root& p : positive) {
        Root neg = p;
        for (auto& c : neg.coords) c = -c;
        neg.height = -p.height;
        std::swap(neg.row, neg.col);
        rs.roots_.push_back(std::move(neg));
    }
    for (std::size_t a = 0; a < rs.roots_.size(); ++a) rs.index_.emplace(rs.roots_[a].coords, a);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        rs.simple_.push_back(*rs.find(e));
    }

    // h_alpha from the trace form (scale 1 first), then the normalization (theta, theta) = 2.
    RationalMatrix gram(r, r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
            Rational t = 0;
            for (std::size_t i = 0; i < n; ++i) t += aux[k][i] * aux[l][i];
            gram(k, l) = t;
        }
    const auto gram_inv = inverse(gram);
    if (!gram_inv) throw Error(Errc::internal_inconsistency, "degenerate trace form");
    auto h_from_values = [&](const std::vector<Rational>& values, const Rational& scale) {
        auto x = mat_vec(*gram_inv, values);
        CartanElement h = CartanElement::zero(n);
        for (std::size_t k = 0; k < r; ++k) h += (x[k] / scale) * aux[k];
        return h;
    };
    auto values_of = [&](std::size_t a) {
        std::vector<Rational> v(r);
        for (std::size_t k = 0; k < r; ++k) v[k] = rs.root_value(a, aux[k]);
        return v;
    };
    rs.highest_ = rs.npos() - 1;
    for (std::size_t a = 0; a < rs.npos(); ++a)
        if (rs.roots_[a].height > rs.roots_[rs.highest_].height) rs.highest_ = a;
    {
        const CartanElement h_theta = h_from_values(values_of(rs.highest_), Rational(1));
        rs.form_scale_ = rs.root_value(rs.highest_, h_theta) / 2;
    }
    for (std::size_t a = 0; a < rs.roots_.size(); ++a) {
        CartanElement h = h_from_values(values_of(a), rs.form_scale_);
        const Rational nn = rs.root_value(a, h);
        rs.coroots_.push_back((2 / nn) * h);
        rs.h_alpha_.push_back(std::move(h));
        rs.norm2_.push_back(nn);
    }

    rs.cartan_.assign(r, std::vector<int>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            rs.cartan_[i][j] = static_cast<int>(to_long(rs.root_value(rs.simple_[j], rs.simple_coroot(i))));

    // Fundamental coweights: alpha_j(X_i) = delta_ij.
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Rational> e(r, Rational(0));
        e[i] = 1;
        RationalMatrix m(r, r);
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < r; ++j) m(j, k) = rs.root_value(rs.simple_[j], aux[k]);
        const auto x = detail::solve(m, e);
        CartanElement h = CartanElement::zero(n);
        for (std::size_t k = 0; k < r; ++k) h += x[k] * aux[k];
        rs.coweights_.push_back(std::move(h));
    }
    // coroot coords x of h satisfy sum_i x_i a_ij = alpha_j(h), i.e. x = (A^T)^-1 m.
    {
        RationalMatrix at(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) at(j, i) = rs.cartan_[i][j];
        rs.coroot_from_coweight_ = *inverse(at);
    }
    // Fundamental weights: <w_i, H_j> = delta_ij.
    for (std::size_t i = 0; i < r; ++i) {
        RationalMatrix m(r, r);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) m(j, k) = rs.form(rs.simple_coroot(j), rs.simple_coroot(k));
        std::vector<Rational> e(r, Rational(0));
        e[i] = 1;
        rs.weights_.push_back(rs.from_coroot_coords(detail::solve(m, e)));
    }

    // theta^vee = sum_i comark_i H_i.
    const auto theta_coroot = rs.coroot_coords(rs.coroot(rs.highest_));
    rs.dual_coxeter_ = 1;
    for (const auto& c : theta_coroot) {
        rs.comarks_.push_back(static_cast<int>(to_long(c)));
        rs.dual_coxeter_ += rs.comarks_.back();
    }
    return rs;
}

/// An element of the coweight lattice P^vee, given by integer coordinates over the
/// fundamental coweights, together with its diagonal matrix realization.
class CowLatticeElement {
public:
    CowLatticeElement() = default;
    CowLatticeElement(const RootSystem& rs, std::vector<long> coords) : coords_(std::move(coords))
    {
        if (coords_.size() != rs.rank()) throw Error(Errc::invalid_argument, "coweight coordinate count differs from rank");
        std::vector<Rational> m(coords_.begin(), coords_.end());
        matrix_ = rs.from_coweight_coords(m);
    }

    static CowLatticeElement zero(const RootSystem& rs) { return CowLatticeElement(rs, std::vector<long>(rs.rank(), 0)); }

    static CowLatticeElement fundamental(const RootSystem& rs, std::size_t i)
    {
        std::vector<long> c(rs.rank(), 0);
        c.at(i) = 1;
        return CowLatticeElement(rs, std::move(c));
    }

    /// The simple coroot H_i as a coweight.
    static CowLatticeElement simple_coroot(const RootSystem& rs, std::size_t i)
    {
        return from_cartan(rs, rs.simple_coroot(i));
    }

    /// Throws CoweightNotInTargetLattice unless h lies in P^vee.
    static CowLatticeElement from_cartan(const RootSystem& rs, const CartanElement& h)
    {
        if (h.size() != rs.dim() || !rs.in_cartan(h))
            throw Error(Errc::coweight_not_in_target_lattice, "diagonal element is not in the Cartan of " + rs.algebra().name());
        std::vector<long> c;
        for (const auto& x : rs.coweight_coords(h)) {
            if (!is_integer(x))
                throw Error(Errc::coweight_not_in_target_lattice,
                            "element has alpha(h) = " + x.get_str() + " for a simple root of " + rs.algebra().name());
            c.push_back(to_long(x));
        }
        return CowLatticeElement(rs, std::move(c));
    }

    const std::vector<long>& coords() const noexcept { return coords_; }
    const CartanElement& cartan() const noexcept { return matrix_; }

    bool is_zero() const
    {
        return std::all_of(coords_.begin(), coords_.end(), [](long c) { return c == 0; });
    }

    /// alpha(mu) for root index a; always an integer.
    long pairing(const RootSystem& rs, std::size_t a) const
    {
        long v = 0;
        const auto& c = rs.root(a).coords;
        for (std::size_t i = 0; i < coords_.size(); ++i) v += c[i] * coords_[i];
        return v;
    }

    friend CowLatticeElement add(const RootSystem& rs, const CowLatticeElement& a, const CowLatticeElement& b)
    {
        std::vector<long> c(a.coords_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
        return CowLatticeElement(rs, std::move(c));
    }

    CowLatticeElement negated(const RootSystem& rs) const
    {
        std::vector<long> c = coords_;
        for (auto& x : c) x = -x;
        return CowLatticeElement(rs, std::move(c));
    }

    friend bool operator==(const CowLatticeElement& a, const CowLatticeElement& b) { return a.coords_ == b.coords_; }

private:
    std::vector<long> coords_;
    CartanElement matrix_;
};

/// Q^vee membership test.
inline bool is_in_coroot_lattice(const RootSystem& rs, const CowLatticeElement& mu) { return rs.is_in_coroot_lattice(mu.coords()); }

inline Rational normalized_form_value(const RootSystem& rs, const CartanElement& x, const CartanElement& y) { return rs.form(x, y); }

} // namespace rlshift

#endif
