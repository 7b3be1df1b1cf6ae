#ifndef RLSHIFT_LOOPALG_SHIFTS_HPP
#define RLSHIFT_LOOPALG_SHIFTS_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "../exactalg/frac_laurent.hpp"
#include "../exactalg/rational.hpp"
#include "../exactalg/rational_function.hpp"
#include "../rootdata/chevalley.hpp"
#include "loop_element.hpp"

namespace rlshift {

struct ShiftSpec {
    CowLatticeElement mu;
};

/// n marked points z_1..z_n with coweights summing to zero, acting in the
/// local coordinate xi_t = z - z_t around point t (0-based here).
struct MultiShiftSpec {
    std::vector<Rational> points;
    std::vector<CowLatticeElement> mus;
    std::size_t t = 0;

    void validate(const RootSystem& rs) const
    {
        if (points.empty() || points.size() != mus.size())
            throw Error(Errc::invalid_argument, "multi-shift needs one coweight per point");
        if (t >= points.size()) throw Error(Errc::invalid_argument, "point index out of range");
        std::set<Rational> seen(points.begin(), points.end());
        if (seen.size() != points.size()) throw Error(Errc::point_collision, "multi-shift points must be distinct");
        std::vector<long> total(rs.rank(), 0);
        for (const auto& m : mus) {
            if (m.coords().size() != rs.rank()) throw Error(Errc::algebra_mismatch, "coweight rank differs from algebra rank");
            for (std::size_t i = 0; i < total.size(); ++i) total[i] += m.coords()[i];
        }
        for (long v : total)
            if (v != 0) throw Error(Errc::invalid_argument, "multi-shift coweights must sum to zero");
    }

    MultiShiftSpec at(std::size_t point) const
    {
        MultiShiftSpec s = *this;
        s.t = point;
        return s;
    }

    /// z_t - z_s, so that phi_{t,s} = (xi + offset(s))^-1.
    Rational offset(std::size_t s) const { return points[t] - points[s]; }
};

/// Default points z_i = i - 1.
inline std::vector<Rational> default_points(std::size_t n)
{
    std::vector<Rational> z;
    for (std::size_t i = 0; i < n; ++i) z.emplace_back(static_cast<long>(i));
    return z;
}

namespace detail {

inline void check_coweight(const ChevalleyBasis& cb, const CowLatticeElement& mu)
{
    if (mu.coords().size() != cb.rank() || mu.cartan().size() != cb.roots().dim())
        throw Error(Errc::algebra_mismatch, "coweight does not belong to " + cb.roots().algebra().name());
}

} // namespace detail

/// Single shift: X_a (x) f -> X_a (x) xi^{a(mu)} f, h (x) f -> h (x) f + <mu, h> f_0 c, c -> c.
inline LoopElement single_shift(const ChevalleyBasis& cb, const CowLatticeElement& mu, const LoopElement& x)
{
    detail::check_coweight(cb, mu);
    check_basis_index(cb, x);
    const std::size_t nr = cb.num_roots();
    LoopElement out = LoopElement::central(x.central_part());
    for (const auto& [k, f] : x.terms()) {
        if (k < nr) {
            out.add_term(k, f.shifted(mu.pairing(cb.roots(), k)));
        } else {
            out.add_term(k, f);
            const Rational w = cb.roots().form(mu.cartan(), cb.roots().simple_coroot(k - nr));
            if (!is_zero(w)) out.add_central(w * f.coefficient(0));
        }
    }
    return out;
}

/// Multi shift at point t: X_a (x) f -> X_a (x) f prod_s (xi + z_t - z_s)^{a(mu_s)},
/// h (x) f -> h (x) f + sum_s <h, mu_s> Res(f / (xi + z_t - z_s)) c.
inline LoopElement multi_shift(const ChevalleyBasis& cb, const MultiShiftSpec& spec, const LoopElement& x)
{
    spec.validate(cb.roots());
    check_basis_index(cb, x);
    const std::size_t nr = cb.num_roots();
    const std::size_t n = spec.points.size();
    LoopElement out = LoopElement::central(x.central_part());
    for (const auto& [k, f] : x.terms()) {
        if (k < nr) {
            RationalFunction g = f;
            for (std::size_t s = 0; s < n; ++s) {
                const long e = spec.mus[s].pairing(cb.roots(), k);
                if (e != 0) g *= RationalFunction::binomial_power(spec.offset(s), e);
            }
            out.add_term(k, g);
        } else {
            out.add_term(k, f);
            for (std::size_t s = 0; s < n; ++s) {
                const Rational w = cb.roots().form(spec.mus[s].cartan(), cb.roots().simple_coroot(k - nr));
                if (is_zero(w)) continue;
                out.add_central(w * residue(f * RationalFunction::binomial_power(spec.offset(s), -1)));
            }
        }
    }
    return out;
}

/// Diagonal exponents q_1..q_N of tau_mu = diag(xi^{q_i}) in the defining representation.
inline std::vector<Rational> tau_exponents(const RootSystem& rs, const CowLatticeElement& mu)
{
    if (mu.cartan().size() != rs.dim()) throw Error(Errc::algebra_mismatch, "coweight does not belong to " + rs.algebra().name());
    return mu.cartan().entries();
}

/// Exponents of tau_mu on a faithful representation of the simply connected group:
/// the defining representation for A and C, defining plus spin weights for B and D.
inline std::vector<Rational> faithful_tau_exponents(const RootSystem& rs, const CowLatticeElement& mu)
{
    std::vector<Rational> q = tau_exponents(rs, mu);
    const Series s = rs.algebra().series;
    if (s == Series::B || s == Series::D) {
        const std::size_t n = rs.rank();
        for (unsigned long signs = 0; signs < (1UL << n); ++signs) {
            Rational v = 0;
            for (std::size_t i = 0; i < n; ++i) v += ((signs >> i) & 1UL) ? -q[i] : q[i];
            q.push_back(v / 2);
        }
    }
    return q;
}

inline bool all_integral(const std::vector<Rational>& v)
{
    for (const auto& x : v)
        if (!is_integer(x)) return false;
    return true;
}

/// Denominator bound for fractional coweight exponents: n for A_{n-1}, 2 otherwise.
inline Integer exponent_denominator_bound(const AlgebraId& id)
{
    return id.series == Series::A ? Integer(id.rank + 1) : Integer(2);
}

/// tau_mu x tau_mu^-1 on the loop part of x, entrywise E_ij(n) -> E_ij(n + q_i - q_j),
/// decomposed back into the Chevalley basis.
inline LoopElement tau_conjugate(const ChevalleyBasis& cb, const CowLatticeElement& mu, const LoopElement& x)
{
    detail::check_coweight(cb, mu);
    check_basis_index(cb, x);
    const auto q = tau_exponents(cb.roots(), mu);
    const Integer bound = exponent_denominator_bound(cb.roots().algebra());
    const std::size_t n = cb.roots().dim();
    LoopElement out;
    for (const auto& [k, f] : x.terms()) {
        const RationalMatrix& m = cb.basis_matrix(k);
        std::map<long, RationalMatrix> by_shift;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (is_zero(m(i, j))) continue;
                const FracLaurent entry = FracLaurent::monomial(m(i, j), Rational(q[i] - q[j]), bound);
                if (!entry.is_integral_exponents())
                    throw Error(Errc::fractional_exponent_result, "conjugated entry " + entry.to_string());
                auto [it, inserted] = by_shift.try_emplace(to_long(entry.terms().begin()->first), RationalMatrix(n, n));
                it->second(i, j) = m(i, j);
            }
        for (const auto& [shift, part] : by_shift) {
            const auto c = cb.decompose(part);
            const RationalFunction g = f.shifted(shift);
            for (std::size_t a = 0; a < c.roots.size(); ++a)
                if (!is_zero(c.roots[a])) out.add_term(a, g.scaled(c.roots[a]));
            for (std::size_t i = 0; i < c.cartan.size(); ++i)
                if (!is_zero(c.cartan[i])) out.add_term(cb.num_roots() + i, g.scaled(c.cartan[i]));
        }
    }
    return out;
}

/// Conjugation by tau_{mu,t} = exp(sum_s ln(xi_s) mu_s) written in xi_t: entry (i, j)
/// picks up prod_s (xi + z_t - z_s)^{(mu_s)_i - (mu_s)_j}.
inline LoopElement multi_shift_tau_conjugate(const ChevalleyBasis& cb, const MultiShiftSpec& spec, const LoopElement& x)
{
    spec.validate(cb.roots());
    check_basis_index(cb, x);
    const std::size_t np = spec.points.size();
    const std::size_t n = cb.roots().dim();
    std::vector<std::vector<Rational>> q;
    for (const auto& mu : spec.mus) q.push_back(tau_exponents(cb.roots(), mu));
    LoopElement out;
    for (const auto& [k, f] : x.terms()) {
        const RationalMatrix& m = cb.basis_matrix(k);
        std::map<std::vector<long>, RationalMatrix> by_shift;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (is_zero(m(i, j))) continue;
                std::vector<long> d(np);
                for (std::size_t s = 0; s < np; ++s) {
                    const Rational e = q[s][i] - q[s][j];
                    if (!is_integer(e))
                        throw Error(Errc::fractional_exponent_result, "entry exponent " + e.get_str() + " at point " + std::to_string(s + 1));
                    d[s] = to_long(e);
                }
                auto [it, inserted] = by_shift.try_emplace(d, RationalMatrix(n, n));
                it->second(i, j) = m(i, j);
            }
        for (const auto& [d, part] : by_shift) {
            const auto c = cb.decompose(part);
            RationalFunction g = f;
            for (std::size_t s = 0; s < np; ++s)
                if (d[s] != 0) g *= RationalFunction::binomial_power(spec.offset(s), d[s]);
            for (std::size_t a = 0; a < c.roots.size(); ++a)
                if (!is_zero(c.roots[a])) out.add_term(a, g.scaled(c.roots[a]));
            for (std::size_t i = 0; i < c.cartan.size(); ++i)
                if (!is_zero(c.cartan[i])) out.add_term(cb.num_roots() + i, g.scaled(c.cartan[i]));
        }
    }
    return out;
}

} // namespace rlshift

#endif
