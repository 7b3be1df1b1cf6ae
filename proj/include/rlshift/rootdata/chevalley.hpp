#ifndef RLSHIFT_ROOTDATA_CHEVALLEY_HPP
#define RLSHIFT_ROOTDATA_CHEVALLEY_HPP

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "../error.hpp"
#include "../exactalg/rational.hpp"
#include "matrix.hpp"
#include "root_system.hpp"

namespace rlshift {

/// Coordinates of an algebra element in the Chevalley basis: one coefficient per
/// root and one per simple coroot.
struct ChevalleyCoords {
    std::vector<Rational> roots;
    std::vector<Rational> cartan;
};

/// A Chevalley basis {X_alpha, H_i} realized as defining-rep matrices, with its
/// structure constants. The basis satisfies [X_a, X_-a] = H_a, N_{a,b} = +-(p+1)
/// and N_{-a,-b} = -N_{a,b}; all three are checked exhaustively on construction.
class ChevalleyBasis {
public:
    explicit ChevalleyBasis(RootSystem rs) : rs_(std::move(rs)) { build_(); }
    explicit ChevalleyBasis(const AlgebraId& id) : ChevalleyBasis(build_root_system(id)) {}

    const RootSystem& roots() const noexcept { return rs_; }
    std::size_t rank() const noexcept { return rs_.rank(); }
    std::size_t num_roots() const noexcept { return rs_.num_roots(); }
    /// Number of basis elements: roots plus simple coroots.
    std::size_t dim() const noexcept { return rs_.num_roots() + rs_.rank(); }

    const RationalMatrix& root_vector(std::size_t a) const { return x_.at(a); }
    const RationalMatrix& coroot_matrix(std::size_t i) const { return h_.at(i); }

    /// Basis element k: roots first, then simple coroots.
    const RationalMatrix& basis_matrix(std::size_t k) const { return k < num_roots() ? x_.at(k) : h_.at(k - num_roots()); }

    /// N_{a,b} with [X_a, X_b] = N_{a,b} X_{a+b}; zero when a+b is not a root.
    int structure_constant(std::size_t a, std::size_t b) const { return n_[a][b]; }
    /// Index of root a+b, if any.
    std::optional<std::size_t> root_sum(std::size_t a, std::size_t b) const
    {
        const long s = sum_[a][b];
        if (s < 0) return std::nullopt;
        return static_cast<std::size_t>(s);
    }

    /// H_a in simple-coroot coordinates (always integral).
    const std::vector<long>& coroot_coords(std::size_t a) const { return coroot_coords_.at(a); }

    /// alpha_a(H_i)
    long root_on_coroot(std::size_t a, std::size_t i) const { return root_on_coroot_[a][i]; }

    /// <H_i, H_j> in the normalized form.
    const Rational& coroot_gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }

    /// <X_a, X_-a> = 2 / (a, a).
    const Rational& pairing(std::size_t a) const { return k_.at(a); }

    /// For each non-simple positive root: the simple root index used to build it.
    const std::map<std::size_t, std::size_t>& extraspecial_pairs() const noexcept { return extraspecial_; }

    /// Decomposes an element of the algebra; throws AlgebraMismatch if it is not one.
    ChevalleyCoords decompose(const RationalMatrix& m) const
    {
        const std::size_t n = rs_.dim();
        if (m.rows() != n || m.cols() != n) throw Error(Errc::algebra_mismatch, "matrix size differs from defining representation");
        ChevalleyCoords c;
        c.roots.resize(num_roots());
        RationalMatrix rest = m;
        for (std::size_t a = 0; a < num_roots(); ++a) {
            const Root& r = rs_.root(a);
            c.roots[a] = m(r.row, r.col) / x_[a](r.row, r.col);
            if (!is_zero(c.roots[a])) rest -= x_[a].scaled(c.roots[a]);
        }
        if (!rest.is_diagonal()) throw Error(Errc::algebra_mismatch, "element is not in " + rs_.algebra().name());
        const CartanElement h(rest.diagonal_entries());
        c.cartan = rs_.coroot_coords(h);
        if (!(rs_.from_coroot_coords(c.cartan) == h)) throw Error(Errc::algebra_mismatch, "diagonal part is not in the Cartan subalgebra");
        return c;
    }

    RationalMatrix compose(const ChevalleyCoords& c) const
    {
        RationalMatrix m(rs_.dim(), rs_.dim());
        for (std::size_t a = 0; a < num_roots(); ++a)
            if (!is_zero(c.roots[a])) m += x_[a].scaled(c.roots[a]);
        for (std::size_t i = 0; i < rank(); ++i)
            if (!is_zero(c.cartan[i])) m += h_[i].scaled(c.cartan[i]);
        return m;
    }

    /// Summary of the root data and chosen signs.
    nlohmann::ordered_json summary() const
    {
        nlohmann::ordered_json j;
        j["algebra"] = rs_.algebra().name();
        j["rank"] = rank();
        j["definingDim"] = rs_.dim();
        j["numRoots"] = num_roots();
        j["dualCoxeter"] = rs_.dual_coxeter();
        j["formScale"] = rs_.form_scale().get_str();
        j["cartanMatrix"] = rs_.cartan_matrix();
        j["marks"] = rs_.marks();
        j["comarks"] = rs_.comarks();
        nlohmann::ordered_json roots = nlohmann::ordered_json::array();
        for (std::size_t a = 0; a < num_roots(); ++a) {
            nlohmann::ordered_json r;
            r["index"] = a;
            r["coords"] = rs_.root(a).coords;
            r["norm2"] = rs_.root_norm2(a).get_str();
            r["matrixEntry"] = {rs_.root(a).row, rs_.root(a).col};
            roots.push_back(r);
        }
        j["roots"] = roots;
        nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
        for (const auto& [g, i] : extraspecial_) {
            const auto beta = *rs_.find(diff_(g, rs_.simple_root(i)));
            pairs.push_back({{"root", rs_.root(g).coords},
                             {"simple", i + 1},
                             {"rest", rs_.root(beta).coords},
                             {"N", n_[rs_.simple_root(i)][beta]}});
        }
        j["extraspecialPairs"] = pairs;
        nlohmann::ordered_json consts = nlohmann::ordered_json::array();
        for (std::size_t a = 0; a < num_roots(); ++a)
            for (std::size_t b = 0; b < num_roots(); ++b)
                if (n_[a][b] != 0) consts.push_back({a, b, n_[a][b]});
        j["structureConstants"] = consts;
        return j;
    }

private:
    std::vector<int> diff_(std::size_t a, std::size_t b) const
    {
        std::vector<int> c(rank());
        for (std::size_t k = 0; k < rank(); ++k) c[k] = rs_.root(a).coords[k] - rs_.root(b).coords[k];
        return c;
    }

    // Largest p with beta - p*alpha a root (p = 0 when beta - alpha is not a root).
    int string_down_(std::size_t beta, std::size_t alpha) const
    {
        int p = 0;
        std::vector<int> c = rs_.root(beta).coords;
        for (;;) {
            for (std::size_t k = 0; k < rank(); ++k) c[k] -= rs_.root(alpha).coords[k];
            if (!rs_.find(c)) return p;
            ++p;
        }
    }

    // Multiplier m with a = m * b, for b a nonzero matrix proportional to a.
    static Rational ratio_(const RationalMatrix& a, const RationalMatrix& b)
    {
        for (std::size_t k = 0; k < b.data().size(); ++k)
            if (!is_zero(b.data()[k])) {
                const Rational m = a.data()[k] / b.data()[k];
                if (!(b.scaled(m) == a)) throw Error(Errc::sign_consistency_failure, "bracket is not proportional to root vector");
                return m;
            }
        throw Error(Errc::internal_inconsistency, "zero root vector");
    }

    void build_()
    {
        const std::size_t nr = num_roots();
        const std::size_t np = rs_.npos();
        const std::size_t r = rank();
        const std::size_t n = rs_.dim();
        x_.assign(nr, RationalMatrix(n, n));

        for (std::size_t i = 0; i < r; ++i) {
            const std::size_t a = rs_.simple_root(i);
            const Root& ra = rs_.root(a);
            x_[a] = primitive(rs_.project(RationalMatrix::unit(n, ra.row, ra.col)));
            const RationalMatrix f = primitive(rs_.project(RationalMatrix::unit(n, ra.col, ra.row)));
            const RationalMatrix hi = rs_.simple_coroot(i).matrix();
            x_[rs_.negative(a)] = f.scaled(ratio_(hi, commutator(x_[a], f)));
            h_.push_back(hi);
        }

        for (std::size_t g = 0; g < np; ++g) {
            if (rs_.root(g).height == 1) continue;
            bool done = false;
            for (std::size_t i = 0; i < r && !done; ++i) {
                const auto beta = rs_.find(diff_(g, rs_.simple_root(i)));
                if (!beta || !rs_.root(*beta).positive()) continue;
                const std::size_t a = rs_.simple_root(i);
                const Rational d(string_down_(*beta, a) + 1);
                x_[g] = commutator(x_[a], x_[*beta]).scaled(1 / d);
                x_[rs_.negative(g)] = commutator(x_[rs_.negative(a)], x_[rs_.negative(*beta)]).scaled(-1 / d);
                extraspecial_.emplace(g, i);
                done = true;
            }
            if (!done) throw Error(Errc::internal_inconsistency, "positive root with no simple predecessor");
        }

        sum_.assign(nr, std::vector<long>(nr, -1));
        n_.assign(nr, std::vector<int>(nr, 0));
        for (std::size_t a = 0; a < nr; ++a)
            for (std::size_t b = 0; b < nr; ++b) {
                const auto s = rs_.sum(a, b);
                if (!s) continue;
                sum_[a][b] = static_cast<long>(*s);
                const Rational m = ratio_(commutator(x_[a], x_[b]), x_[*s]);
                if (!is_integer(m)) throw Error(Errc::sign_consistency_failure, "non-integral structure constant");
                n_[a][b] = static_cast<int>(to_long(m));
            }

        coroot_coords_.resize(nr);
        root_on_coroot_.assign(nr, std::vector<long>(r));
        k_.resize(nr);
        for (std::size_t a = 0; a < nr; ++a) {
            for (const auto& c : rs_.coroot_coords(rs_.coroot(a))) coroot_coords_[a].push_back(to_long(c));
            for (std::size_t i = 0; i < r; ++i) root_on_coroot_[a][i] = to_long(rs_.root_value(a, rs_.simple_coroot(i)));
            k_[a] = rs_.form(x_[a], x_[rs_.negative(a)]);
        }
        gram_.assign(r, std::vector<Rational>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) gram_[i][j] = rs_.form(rs_.simple_coroot(i), rs_.simple_coroot(j));

        verify_();
    }

    void verify_() const
    {
        const std::size_t nr = num_roots();
        for (std::size_t a = 0; a < nr; ++a) {
            if (!rs_.contains(x_[a])) throw Error(Errc::sign_consistency_failure, "root vector outside algebra: " + rs_.root_label(a));
            if (!(commutator(x_[a], x_[rs_.negative(a)]) == rs_.coroot(a).matrix()))
                throw Error(Errc::sign_consistency_failure, "[X_a, X_-a] != H_a for " + rs_.root_label(a));
            if (!(k_[a] == 2 / rs_.root_norm2(a)))
                throw Error(Errc::sign_consistency_failure, "<X_a, X_-a> != 2/(a,a) for " + rs_.root_label(a));
        }
        for (std::size_t a = 0; a < nr; ++a)
            for (std::size_t b = 0; b < nr; ++b) {
                if (sum_[a][b] < 0) {
                    if (b != rs_.negative(a) && !commutator(x_[a], x_[b]).is_zero())
                        throw Error(Errc::sign_consistency_failure, "nonzero bracket with non-root sum");
                    continue;
                }
                const int p = string_down_(b, a);
                if (std::abs(n_[a][b]) != p + 1)
                    throw Error(Errc::sign_consistency_failure, "|N| != p+1 for " + rs_.root_label(a) + ", " + rs_.root_label(b));
                if (n_[rs_.negative(a)][rs_.negative(b)] != -n_[a][b])
                    throw Error(Errc::sign_consistency_failure, "N_{-a,-b} != -N_{a,b} for " + rs_.root_label(a) + ", " + rs_.root_label(b));
            }
    }

    RootSystem rs_;
    std::vector<RationalMatrix> x_;
    std::vector<RationalMatrix> h_;
    std::vector<std::vector<long>> sum_;
    std::vector<std::vector<int>> n_;
    std::vector<std::vector<long>> coroot_coords_;
    std::vector<std::vector<long>> root_on_coroot_;
    std::vector<std::vector<Rational>> gram_;
    std::vector<Rational> k_;
    std::map<std::size_t, std::size_t> extraspecial_;
};

} // namespace rlshift

#endif
