#ifndef RLSHIFT_EMBED_VERIFY_HPP
#define RLSHIFT_EMBED_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "../loopalg/shifts.hpp"
#include "../loopalg/verify.hpp"
#include "../report.hpp"
#include "embedding.hpp"

namespace rlshift {

/// phi_1(X_alpha) has no component on the target Cartan.
inline bool verify_lemma_cartan_purity(const Embedding& emb, std::size_t alpha)
{
    if (alpha >= emb.source(0).num_roots()) throw Error(Errc::invalid_argument, "expected a root of the first source");
    for (const auto& c : emb.image_coords(0, alpha).cartan)
        if (!is_zero(c)) return false;
    return true;
}

/// [phi_2(h_2), phi_1(X_alpha)] = 0, i.e. every target root in phi_1(X_alpha) vanishes on phi_2(h_2).
inline bool verify_lemma_vanishing(const Embedding& emb, std::size_t alpha, const CartanElement& h2)
{
    if (alpha >= emb.source(0).num_roots()) throw Error(Errc::invalid_argument, "expected a root of the first source");
    const RationalMatrix h = emb.map_cartan(1, h2).matrix();
    return commutator(h, emb.image(0, alpha)).is_zero();
}

/// <phi_1(h_1), phi_2(h_2)> = 0.
inline bool verify_cartan_orthogonality(const Embedding& emb, const CartanElement& h1, const CartanElement& h2)
{
    return is_zero(emb.target().roots().form(emb.map_cartan(0, h1), emb.map_cartan(1, h2)));
}

/// Both lemmas and orthogonality, exhaustive over source roots and simple coroots (and symmetric in the factors).
inline Report verify_embedding_lemmas(const Embedding& emb)
{
    Report r = Report::check("embedding lemmas: Cartan purity, vanishing, orthogonality", "embedding-lemmas", Json{{"embedding", emb.name()}});
    for (std::size_t first = 0; first < 2; ++first) {
        const std::size_t second = 1 - first;
        const ChevalleyBasis& s1 = emb.source(first);
        const ChevalleyBasis& s2 = emb.source(second);
        for (std::size_t a = 0; a < s1.num_roots(); ++a) {
            r.count();
            bool pure = true;
            for (const auto& c : emb.image_coords(first, a).cartan) pure = pure && is_zero(c);
            if (!pure) r.fail({{"lemma", "Cartan purity"}, {"factor", first + 1}, {"root", s1.roots().root_label(a)}});
            for (std::size_t j = 0; j < s2.rank(); ++j) {
                r.count();
                const RationalMatrix h = emb.map_cartan(second, s2.roots().simple_coroot(j)).matrix();
                if (!commutator(h, emb.image(first, a)).is_zero())
                    r.fail({{"lemma", "vanishing"}, {"factor", first + 1}, {"root", s1.roots().root_label(a)}, {"coroot", j + 1}});
            }
        }
    }
    const ChevalleyBasis& s1 = emb.source(0);
    const ChevalleyBasis& s2 = emb.source(1);
    for (std::size_t i = 0; i < s1.rank(); ++i)
        for (std::size_t j = 0; j < s2.rank(); ++j) {
            r.count();
            if (!verify_cartan_orthogonality(emb, s1.roots().simple_coroot(i), s2.roots().simple_coroot(j)))
                r.fail({{"lemma", "orthogonality"}, {"pair", {i + 1, j + 1}}});
        }
    return r;
}

/// phi-hat is a homomorphism of affine algebras on basis monomials with |n| <= window.
inline Report verify_affine_extension(const Embedding& emb, long window)
{
    Report r = Report::automorphism("affine extension of the embedding is a homomorphism", "phi-hat " + emb.name(),
                                    emb.target().roots().algebra().name());
    r.set("degreeWindow", window);
    for (std::size_t i = 0; i < emb.num_factors(); ++i) {
        const ChevalleyBasis& src = emb.source(i);
        const auto mons = basis_monomials(src, window);
        for (const auto& [k1, n1] : mons)
            for (const auto& [k2, n2] : mons) {
                r.count();
                const LoopElement x = LoopElement::monomial(k1, n1), y = LoopElement::monomial(k2, n2);
                const LoopElement lhs = emb.extend(i, bracket(src, x, y));
                const LoopElement rhs = bracket(emb.target(), emb.extend(i, x), emb.extend(i, y));
                if (lhs != rhs)
                    r.fail({{"factor", i + 1}, {"x", monomial_label(src, k1, n1)}, {"y", monomial_label(src, k2, n2)}});
            }
    }
    return r;
}

/// The four identities of the commuting square, for a shift sigma on g_1 and its
/// transport sigma~ on the target:
///   sigma~(phi1(h1(n))) = phi1(sigma(h1(n))),  sigma~(phi1(X_a(n))) = phi1(sigma(X_a(n))),
///   sigma~(phi2(h2(n))) = phi2(h2(n)),          sigma~(phi2(X_b(n))) = phi2(X_b(n)).
inline Report verify_commuting_square_maps(const Embedding& emb, const std::string& label, const LoopMap& source_shift,
                                           const LoopMap& target_shift, long window)
{
    Report r = Report::automorphism("shift commutes with the affine extension of the embedding", label, emb.name());
    r.set("degreeWindow", window);
    for (std::size_t i = 0; i < 2; ++i) {
        const ChevalleyBasis& src = emb.source(i);
        for (const auto& [k, n] : basis_monomials(src, window)) {
            r.count();
            const LoopElement x = LoopElement::monomial(k, n);
            const LoopElement lhs = target_shift(emb.extend(i, x));
            const LoopElement rhs = i == 0 ? emb.extend(0, source_shift(x)) : emb.extend(1, x);
            if (lhs != rhs) {
                const bool cartan = k >= src.num_roots();
                const std::string id = i == 0 ? (cartan ? "h1" : "X_alpha") : (cartan ? "h2" : "X_beta");
                r.fail({{"identity", id}, {"x", monomial_label(src, k, n)}, {"lhs", lhs.to_string(emb.target())}, {"rhs", rhs.to_string(emb.target())}});
            }
        }
    }
    return r;
}

/// Single-shift square for mu a coweight of the first factor.
inline Report verify_commuting_square(const Embedding& emb, const CowLatticeElement& mu, long window)
{
    const CowLatticeElement image = emb.map_coweight(0, mu);
    const ChevalleyBasis& src = emb.source(0);
    const ChevalleyBasis& tgt = emb.target();
    return verify_commuting_square_maps(
        emb, "single-shift mu=" + coweight_label(mu) + " -> " + coweight_label(image),
        [&](const LoopElement& x) { return single_shift(src, mu, x); },
        [&](const LoopElement& x) { return single_shift(tgt, image, x); }, window);
}

/// Multi-shift square: spec over the first factor, transported coweight by coweight.
inline Report verify_commuting_square(const Embedding& emb, const MultiShiftSpec& spec, long window)
{
    const ChevalleyBasis& src = emb.source(0);
    const ChevalleyBasis& tgt = emb.target();
    spec.validate(src.roots());
    MultiShiftSpec image{spec.points, {}, spec.t};
    for (const auto& mu : spec.mus) image.mus.push_back(emb.map_coweight(0, mu));
    image.validate(tgt.roots());
    return verify_commuting_square_maps(
        emb, multi_shift_label(spec) + " -> " + multi_shift_label(image),
        [&](const LoopElement& x) { return multi_shift(src, spec, x); },
        [&](const LoopElement& x) { return multi_shift(tgt, image, x); }, window);
}

} // namespace rlshift

#endif
