#include <gtest/gtest.h>

#include "rlshift/loopalg.hpp"

using namespace rlshift;

namespace {

const ChevalleyBasis& basis(const char* name)
{
    static std::map<std::string, std::unique_ptr<ChevalleyBasis>> cache;
    auto& slot = cache[name];
    if (!slot) slot = std::make_unique<ChevalleyBasis>(AlgebraId::parse(name));
    return *slot;
}

std::size_t cartan_index(const ChevalleyBasis& cb, std::size_t i) { return cb.num_roots() + i; }

MultiShiftSpec a1_two_point(const ChevalleyBasis& cb)
{
    const auto& rs = cb.roots();
    const auto x1 = CowLatticeElement::fundamental(rs, 0);
    return MultiShiftSpec{{Rational(0), Rational(1)}, {x1, x1.negated(rs)}, 0};
}

RationalFunction xi_plus(long a, long k = 1) { return RationalFunction::binomial_power(Rational(a), k); }

} // namespace

TEST(Bracket, CentralCocycle)
{
    const auto& cb = basis("A1");
    const std::size_t h = cartan_index(cb, 0);
    EXPECT_EQ(bracket(cb, LoopElement::monomial(h, 1), LoopElement::monomial(h, -1)), LoopElement::central(2));
}

TEST(Bracket, DegreeZeroRootPair)
{
    const auto& cb = basis("A1");
    EXPECT_EQ(bracket(cb, LoopElement::monomial(0, 0), LoopElement::monomial(1, 0)), LoopElement::monomial(cartan_index(cb, 0), 0));
}

TEST(Bracket, CentralElementIsCentral)
{
    const auto& cb = basis("C2");
    for (std::size_t k = 0; k < cb.dim(); ++k) EXPECT_TRUE(bracket(cb, LoopElement::central(1), LoopElement::monomial(k, 2)).is_zero());
}

TEST(Bracket, AntisymmetricAndJacobi)
{
    const auto& cb = basis("A2");
    const auto mons = basis_monomials(cb, 1);
    for (std::size_t i = 0; i < mons.size(); i += 3)
        for (std::size_t j = 0; j < mons.size(); j += 2) {
            const LoopElement x = LoopElement::monomial(mons[i].first, mons[i].second);
            const LoopElement y = LoopElement::monomial(mons[j].first, mons[j].second);
            EXPECT_EQ(bracket(cb, x, y), bracket(cb, y, x).scaled(-1));
            for (std::size_t k = 0; k < mons.size(); k += 5) {
                const LoopElement z = LoopElement::monomial(mons[k].first, mons[k].second);
                const LoopElement sum = bracket(cb, x, bracket(cb, y, z)) + bracket(cb, y, bracket(cb, z, x)) + bracket(cb, z, bracket(cb, x, y));
                EXPECT_TRUE(sum.is_zero());
            }
        }
}

TEST(SingleShift, RootDegreeShift)
{
    const auto& cb = basis("A1");
    const auto x1 = CowLatticeElement::fundamental(cb.roots(), 0);
    EXPECT_EQ(single_shift(cb, x1, LoopElement::monomial(0, 0)), LoopElement::monomial(0, 1));
    EXPECT_EQ(single_shift(cb, x1, LoopElement::monomial(1, 0)), LoopElement::monomial(1, -1));
}

TEST(SingleShift, CartanPicksUpCentralTerm)
{
    const auto& cb = basis("A1");
    const auto x1 = CowLatticeElement::fundamental(cb.roots(), 0);
    const std::size_t h = cartan_index(cb, 0);
    EXPECT_EQ(single_shift(cb, x1, LoopElement::monomial(h, 0)), LoopElement::monomial(h, 0) + LoopElement::central(1));
    EXPECT_EQ(single_shift(cb, x1, LoopElement::monomial(h, 2)), LoopElement::monomial(h, 2));
}

TEST(SingleShift, ZeroIsIdentity)
{
    const auto& cb = basis("B2");
    const auto zero = CowLatticeElement::zero(cb.roots());
    for (const auto& [k, n] : basis_monomials(cb, 2)) {
        const LoopElement x = LoopElement::monomial(k, n);
        EXPECT_EQ(single_shift(cb, zero, x), x);
        EXPECT_EQ(tau_conjugate(cb, zero, x), x);
    }
}

TEST(SingleShift, Additive)
{
    for (const char* name : {"A2", "C2", "B2"}) {
        const auto& cb = basis(name);
        const auto& rs = cb.roots();
        for (std::size_t i = 0; i < rs.rank(); ++i)
            for (std::size_t j = 0; j < rs.rank(); ++j) {
                const auto mi = CowLatticeElement::fundamental(rs, i), mj = CowLatticeElement::fundamental(rs, j);
                const auto sum = add(rs, mi, mj);
                for (const auto& [k, n] : basis_monomials(cb, 2)) {
                    const LoopElement x = LoopElement::monomial(k, n);
                    EXPECT_EQ(single_shift(cb, sum, x), single_shift(cb, mi, single_shift(cb, mj, x))) << name;
                }
            }
    }
}

TEST(SingleShift, RejectsForeignCoweight)
{
    const auto& a1 = basis("A1");
    const auto& a2 = basis("A2");
    EXPECT_THROW(single_shift(a1, CowLatticeElement::fundamental(a2.roots(), 0), LoopElement::monomial(0, 0)), Error);
}

TEST(TauConjugate, SlCaseFormula)
{
    const auto& cb = basis("A3");
    const auto& rs = cb.roots();
    for (std::size_t i = 1; i <= rs.rank(); ++i) {
        const auto mu = CowLatticeElement::fundamental(rs, i - 1);
        for (std::size_t a = 0; a < rs.npos(); ++a) {
            // E_{row+1, col+1} with row < col.
            const Root& root = rs.root(a);
            const bool straddles = root.row < i && i <= root.col;
            for (long m = -2; m <= 2; ++m)
                EXPECT_EQ(tau_conjugate(cb, mu, LoopElement::monomial(a, m)), LoopElement::monomial(a, m + (straddles ? 1 : 0)));
        }
    }
}

TEST(TauConjugate, AgreesWithSingleShiftOnLoopPart)
{
    for (const char* name : {"A1", "A2", "B2", "C2"}) {
        const auto& cb = basis(name);
        for (std::size_t i = 0; i < cb.rank(); ++i) {
            const Report r = verify_conjugation_agreement(cb, CowLatticeElement::fundamental(cb.roots(), i), 2);
            EXPECT_TRUE(r.passed()) << name << " " << r.to_json().dump();
            EXPECT_GT(r.checked(), 0u);
        }
    }
}

TEST(TauConjugate, IntegralityCriterion)
{
    for (const char* name : {"A1", "A3", "B2", "C3", "D4"}) {
        const Report r = verify_inner_criterion(basis(name).roots());
        EXPECT_TRUE(r.passed()) << name << " " << r.to_json().dump();
    }
    const auto& a1 = basis("A1").roots();
    EXPECT_FALSE(all_integral(tau_exponents(a1, CowLatticeElement::fundamental(a1, 0))));
    EXPECT_TRUE(all_integral(tau_exponents(a1, CowLatticeElement::simple_coroot(a1, 0))));
    const auto& b2 = basis("B2").roots();
    // X_1 of so(5) is integral on the vector representation but not on the spin representation.
    EXPECT_TRUE(all_integral(tau_exponents(b2, CowLatticeElement::fundamental(b2, 0))));
    EXPECT_FALSE(all_integral(faithful_tau_exponents(b2, CowLatticeElement::fundamental(b2, 0))));
    EXPECT_TRUE(all_integral(faithful_tau_exponents(b2, CowLatticeElement::fundamental(b2, 1))));
}

TEST(MultiShift, A1TwoPointRootFactor)
{
    const auto& cb = basis("A1");
    const MultiShiftSpec spec = a1_two_point(cb);
    const LoopElement expected = LoopElement::basis(0, RationalFunction::xi() / xi_plus(-1));
    EXPECT_EQ(multi_shift(cb, spec, LoopElement::monomial(0, 0)), expected);
    EXPECT_EQ(multi_shift_tau_conjugate(cb, spec, LoopElement::monomial(0, 0)), expected);
}

TEST(MultiShift, A1TwoPointCartan)
{
    const auto& cb = basis("A1");
    const std::size_t h = cartan_index(cb, 0);
    EXPECT_EQ(multi_shift(cb, a1_two_point(cb), LoopElement::monomial(h, 0)), LoopElement::monomial(h, 0) + LoopElement::central(1));
}

TEST(MultiShift, ZeroCoweightsAreIdentity)
{
    const auto& cb = basis("C2");
    const auto zero = CowLatticeElement::zero(cb.roots());
    const MultiShiftSpec spec{{Rational(0), rat(1, 2), Rational(3)}, {zero, zero, zero}, 1};
    for (const auto& [k, n] : basis_monomials(cb, 2)) {
        const LoopElement x = LoopElement::monomial(k, n);
        EXPECT_EQ(multi_shift(cb, spec, x), x);
        EXPECT_EQ(multi_shift_tau_conjugate(cb, spec, x).loop_part(), x);
    }
}

TEST(MultiShift, OnePointReducesToSingleConjugation)
{
    const auto& cb = basis("A2");
    const MultiShiftSpec spec{{Rational(0)}, {CowLatticeElement::zero(cb.roots())}, 0};
    for (const auto& [k, n] : basis_monomials(cb, 1))
        EXPECT_EQ(multi_shift_tau_conjugate(cb, spec, LoopElement::monomial(k, n)),
                  tau_conjugate(cb, CowLatticeElement::zero(cb.roots()), LoopElement::monomial(k, n)));
}

TEST(MultiShift, LeadingOrderMatchesSingleShift)
{
    for (const char* name : {"A2", "C2"}) {
        const auto& cb = basis(name);
        const auto& rs = cb.roots();
        const auto x1 = CowLatticeElement::fundamental(rs, 0);
        const MultiShiftSpec spec{default_points(3), {x1, CowLatticeElement::zero(rs), x1.negated(rs)}, 0};
        for (std::size_t t = 0; t < 3; ++t)
            for (std::size_t a = 0; a < cb.num_roots(); ++a)
                for (long n = -2; n <= 2; ++n) {
                    const RationalFunction g = multi_shift(cb, spec.at(t), LoopElement::monomial(a, n)).coefficient(a);
                    EXPECT_EQ(g.valuation(), n + spec.mus[t].pairing(rs, a)) << name;
                }
    }
}

TEST(MultiShift, SpecValidation)
{
    const auto& cb = basis("A1");
    const auto& rs = cb.roots();
    const auto x1 = CowLatticeElement::fundamental(rs, 0);
    EXPECT_THROW((MultiShiftSpec{{Rational(1), Rational(1)}, {x1, x1.negated(rs)}, 0}.validate(rs)), Error);
    try {
        MultiShiftSpec{{Rational(1), Rational(1)}, {x1, x1.negated(rs)}, 0}.validate(rs);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::point_collision);
    }
    EXPECT_THROW((MultiShiftSpec{{Rational(0), Rational(1)}, {x1, x1}, 0}.validate(rs)), Error);
}

TEST(MultiShift, ConjugationAgreement)
{
    for (const char* name : {"A1", "A2", "C2"}) {
        const auto& cb = basis(name);
        const auto& rs = cb.roots();
        const auto x1 = CowLatticeElement::fundamental(rs, 0);
        const MultiShiftSpec spec{default_points(2), {x1, x1.negated(rs)}, 0};
        for (std::size_t t = 0; t < 2; ++t) EXPECT_TRUE(verify_multishift_conjugation(cb, spec.at(t), 2).passed()) << name;
    }
}

TEST(BracketPreservation, SingleAndMultiShift)
{
    for (const char* name : {"A1", "A2", "C2"}) {
        const auto& cb = basis(name);
        const auto& rs = cb.roots();
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            const auto mu = CowLatticeElement::fundamental(rs, i);
            EXPECT_TRUE(verify_bracket_preservation(cb, "shift", single_shift_map(cb, mu), 2).passed()) << name;
            const MultiShiftSpec spec{default_points(2), {mu, mu.negated(rs)}, 1};
            EXPECT_TRUE(verify_bracket_preservation(cb, "multi", multi_shift_map(cb, spec), 1).passed()) << name;
        }
    }
}

TEST(BracketPreservation, IdentityPasses)
{
    const auto& cb = basis("B2");
    const Report r = verify_bracket_preservation(cb, "identity", [](const LoopElement& x) { return x; }, 2);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checked(), cb.dim() * 5 * cb.dim() * 5);
}

TEST(BracketPreservation, CorruptedShiftIsCaught)
{
    const auto& cb = basis("A1");
    const auto x1 = CowLatticeElement::fundamental(cb.roots(), 0);
    // Shift X_-a one degree too far.
    const LoopMap corrupted = [&](const LoopElement& x) {
        LoopElement y = single_shift(cb, x1, x);
        LoopElement out = LoopElement::central(y.central_part());
        for (const auto& [k, f] : y.terms()) out.add_term(k, k == 1 ? f.shifted(-1) : f);
        return out;
    };
    const Report r = verify_bracket_preservation(cb, "corrupted", corrupted, 3);
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(r.witnesses().empty());
    EXPECT_EQ(r.witnesses().front()["relation"], "[X_a(m),X_-a(n)]");
    // The degree-zero pair alone already exposes the central mismatch.
    const LoopElement x = LoopElement::monomial(0, 0), y = LoopElement::monomial(1, 0);
    EXPECT_NE(corrupted(bracket(cb, x, y)), bracket(cb, corrupted(x), corrupted(y)));
    EXPECT_EQ(single_shift(cb, x1, bracket(cb, x, y)), bracket(cb, single_shift(cb, x1, x), single_shift(cb, x1, y)));
}

TEST(CurrentAlgebra, Samples)
{
    const auto& cb = basis("A1");
    const MultiShiftSpec spec = a1_two_point(cb);
    EXPECT_TRUE(verify_current_algebra_preservation(cb, spec, 0, RationalFunction(1)));
    EXPECT_TRUE(verify_current_algebra_preservation(cb, spec, cartan_index(cb, 0), RationalFunction(1)));
    EXPECT_TRUE(verify_current_algebra_preservation(cb, spec, 0, xi_plus(0, -1)));
    // A pole away from the marked points is not a current-algebra sample.
    EXPECT_FALSE(verify_current_algebra_preservation(cb, spec, 0, xi_plus(-5, -1)));
}

TEST(CurrentAlgebra, GeneratingSet)
{
    for (const char* name : {"A2", "C2"}) {
        const auto& cb = basis(name);
        const auto& rs = cb.roots();
        const auto x2 = CowLatticeElement::fundamental(rs, 1);
        const MultiShiftSpec spec{default_points(3), {x2, x2.negated(rs), CowLatticeElement::zero(rs)}, 0};
        EXPECT_TRUE(verify_current_algebra(cb, spec, 2).passed()) << name;
    }
}
