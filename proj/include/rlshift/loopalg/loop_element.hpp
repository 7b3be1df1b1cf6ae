#ifndef RLSHIFT_LOOPALG_LOOP_ELEMENT_HPP
#define RLSHIFT_LOOPALG_LOOP_ELEMENT_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "../exactalg/rational.hpp"
#include "../exactalg/rational_function.hpp"
#include "../rootdata/chevalley.hpp"

namespace rlshift {

/// Element of the affine algebra: sum of basis(k) (x) f_k plus a multiple of c.
/// Basis indices follow ChevalleyBasis: roots first, then simple coroots.
class LoopElement {
public:
    using Terms = std::map<std::size_t, RationalFunction>;

    LoopElement() = default;

    static LoopElement basis(std::size_t k, const RationalFunction& f)
    {
        LoopElement x;
        x.add_term(k, f);
        return x;
    }

    /// basis(k) (x) xi^n
    static LoopElement monomial(std::size_t k, long n) { return basis(k, RationalFunction::monomial(Rational(1), n)); }

    static LoopElement central(const Rational& c)
    {
        LoopElement x;
        x.central_ = c;
        return x;
    }

    /// h (x) f for h given in simple-coroot coordinates.
    static LoopElement cartan(const ChevalleyBasis& cb, const std::vector<Rational>& coords, const RationalFunction& f)
    {
        LoopElement x;
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!rlshift::is_zero(coords[i])) x.add_term(cb.num_roots() + i, f.scaled(coords[i]));
        return x;
    }

    void add_term(std::size_t k, const RationalFunction& f)
    {
        if (f.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, f);
        if (!inserted) {
            it->second += f;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_central(const Rational& c) { central_ += c; }

    const Terms& terms() const noexcept { return terms_; }
    const Rational& central_part() const noexcept { return central_; }
    bool is_zero() const { return terms_.empty() && rlshift::is_zero(central_); }

    /// The same element with the central term dropped.
    LoopElement loop_part() const
    {
        LoopElement x = *this;
        x.central_ = 0;
        return x;
    }

    RationalFunction coefficient(std::size_t k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? RationalFunction{} : it->second;
    }

    LoopElement& operator+=(const LoopElement& o)
    {
        for (const auto& [k, f] : o.terms_) add_term(k, f);
        central_ += o.central_;
        return *this;
    }
    LoopElement& operator-=(const LoopElement& o) { return *this += o.scaled(Rational(-1)); }
    friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
    friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }

    LoopElement scaled(const Rational& c) const
    {
        LoopElement x;
        if (rlshift::is_zero(c)) return x;
        for (const auto& [k, f] : terms_) x.terms_.emplace(k, f.scaled(c));
        x.central_ = central_ * c;
        return x;
    }

    friend bool operator==(const LoopElement& a, const LoopElement& b) { return a.terms_ == b.terms_ && a.central_ == b.central_; }
    friend bool operator!=(const LoopElement& a, const LoopElement& b) { return !(a == b); }

    std::string to_string(const ChevalleyBasis& cb) const
    {
        std::string s;
        for (const auto& [k, f] : terms_) {
            if (!s.empty()) s += " + ";
            s += basis_label(cb, k) + "*(" + f.to_string() + ")";
        }
        if (!rlshift::is_zero(central_)) {
            if (!s.empty()) s += " + ";
            s += "(" + central_.get_str() + ")*c";
        }
        return s.empty() ? "0" : s;
    }

    static std::string basis_label(const ChevalleyBasis& cb, std::size_t k)
    {
        if (k < cb.num_roots()) return "X" + cb.roots().root_label(k);
        return "H" + std::to_string(k - cb.num_roots() + 1);
    }

private:
    Terms terms_;
    Rational central_ = 0;
};

inline std::string monomial_label(const ChevalleyBasis& cb, std::size_t k, long n)
{
    return LoopElement::basis_label(cb, k) + "(" + std::to_string(n) + ")";
}

/// Normalized invariant form on basis elements.
inline Rational basis_form(const ChevalleyBasis& cb, std::size_t k1, std::size_t k2)
{
    const std::size_t nr = cb.num_roots();
    if (k1 < nr && k2 < nr) return k2 == cb.roots().negative(k1) ? cb.pairing(k1) : Rational(0);
    if (k1 >= nr && k2 >= nr) return cb.coroot_gram(k1 - nr, k2 - nr);
    return Rational(0);
}

inline void check_basis_index(const ChevalleyBasis& cb, const LoopElement& x)
{
    if (!x.terms().empty() && x.terms().rbegin()->first >= cb.dim())
        throw Error(Errc::algebra_mismatch, "loop element has a basis index outside " + cb.roots().algebra().name());
}

/// [X (x) f, Y (x) g] = [X, Y] (x) fg + <X, Y> Res(g df) c.
inline LoopElement bracket(const ChevalleyBasis& cb, const LoopElement& x, const LoopElement& y)
{
    check_basis_index(cb, x);
    check_basis_index(cb, y);
    const std::size_t nr = cb.num_roots();
    LoopElement out;
    for (const auto& [k1, f] : x.terms())
        for (const auto& [k2, g] : y.terms()) {
            const Rational form = basis_form(cb, k1, k2);
            if (!is_zero(form)) out.add_central(form * residue_at_zero(g, f));
            if (k1 < nr && k2 < nr) {
                if (k2 == cb.roots().negative(k1)) {
                    const RationalFunction fg = f * g;
                    const auto& h = cb.coroot_coords(k1);
                    for (std::size_t i = 0; i < h.size(); ++i)
                        if (h[i] != 0) out.add_term(nr + i, fg.scaled(Rational(h[i])));
                } else if (const auto s = cb.root_sum(k1, k2)) {
                    out.add_term(*s, (f * g).scaled(Rational(cb.structure_constant(k1, k2))));
                }
            } else if (k1 >= nr && k2 < nr) {
                const long v = cb.root_on_coroot(k2, k1 - nr);
                if (v != 0) out.add_term(k2, (f * g).scaled(Rational(v)));
            } else if (k1 < nr && k2 >= nr) {
                const long v = cb.root_on_coroot(k1, k2 - nr);
                if (v != 0) out.add_term(k1, (f * g).scaled(Rational(-v)));
            }
        }
    return out;
}

} // namespace rlshift

#endif
