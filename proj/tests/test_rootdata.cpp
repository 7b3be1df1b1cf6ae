#include <set>

#include <gtest/gtest.h>

#include "rlshift/rootdata.hpp"

using namespace rlshift;

namespace {

std::vector<AlgebraId> algebras_up_to(int max_rank)
{
    std::vector<AlgebraId> out;
    for (int n = 1; n <= max_rank; ++n) {
        out.push_back(AlgebraId::make(Series::A, n));
        out.push_back(AlgebraId::make(Series::C, n));
        if (n >= 2) out.push_back(AlgebraId::make(Series::B, n));
        if (n >= 3) out.push_back(AlgebraId::make(Series::D, n));
    }
    return out;
}

/// Bracket of two basis vectors read off the structure constants alone.
using Vec = std::vector<Rational>;

Vec basis_bracket(const ChevalleyBasis& cb, std::size_t k1, std::size_t k2)
{
    const std::size_t nr = cb.num_roots();
    Vec out(cb.dim(), Rational(0));
    if (k1 < nr && k2 < nr) {
        if (cb.roots().negative(k1) == k2) {
            const auto& c = cb.coroot_coords(k1);
            for (std::size_t i = 0; i < c.size(); ++i) out[nr + i] = c[i];
        } else if (auto s = cb.root_sum(k1, k2)) {
            out[*s] = cb.structure_constant(k1, k2);
        }
    } else if (k1 >= nr && k2 < nr) {
        out[k2] = cb.root_on_coroot(k2, k1 - nr);
    } else if (k1 < nr && k2 >= nr) {
        out[k1] = -cb.root_on_coroot(k1, k2 - nr);
    }
    return out;
}

Vec bracket(const ChevalleyBasis& cb, const Vec& x, const Vec& y)
{
    Vec out(cb.dim(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (is_zero(y[j])) continue;
            const Vec b = basis_bracket(cb, i, j);
            for (std::size_t k = 0; k < b.size(); ++k) out[k] += x[i] * y[j] * b[k];
        }
    }
    return out;
}

Vec unit_vec(const ChevalleyBasis& cb, std::size_t k)
{
    Vec v(cb.dim(), Rational(0));
    v[k] = 1;
    return v;
}

CartanElement reflect(const RootSystem& rs, std::size_t i, const CartanElement& h)
{
    return h - rs.root_value(rs.simple_root(i), h) * rs.simple_coroot(i);
}

} // namespace

TEST(AlgebraId, RejectsNonSimpleRanks)
{
    EXPECT_THROW(AlgebraId::make(Series::D, 2), Error);
    EXPECT_THROW(AlgebraId::make(Series::B, 1), Error);
    EXPECT_THROW(AlgebraId::make(Series::A, 0), Error);
    EXPECT_NO_THROW(AlgebraId::make(Series::C, 1));
    EXPECT_EQ(AlgebraId::parse("sp(4)").name(), "C2");
    EXPECT_EQ(AlgebraId::parse("so(8)").name(), "D4");
    EXPECT_EQ(AlgebraId::parse("sl(3)").name(), "A2");
}

TEST(RootSystem, A1)
{
    const RootSystem rs = build_root_system(AlgebraId::make(Series::A, 1));
    EXPECT_EQ(rs.num_roots(), 2u);
    EXPECT_EQ(rs.dual_coxeter(), 2);
    EXPECT_EQ(rs.coroot(0), CartanElement({Rational(1), Rational(-1)}));
}

TEST(RootSystem, CountsMatchOracle)
{
    // Oracle: brute-force eigenvalues of ad(h) on matrix units (tests/oracles/oracles.py).
    EXPECT_EQ(build_root_system(AlgebraId::make(Series::A, 2)).num_roots(), 6u);
    EXPECT_EQ(build_root_system(AlgebraId::make(Series::A, 2)).dual_coxeter(), 3);
    EXPECT_EQ(build_root_system(AlgebraId::make(Series::C, 2)).num_roots(), 8u);
}

TEST(RootSystem, C2RootLengths)
{
    const RootSystem rs = build_root_system(AlgebraId::make(Series::C, 2));
    int long_roots = 0, short_roots = 0;
    for (std::size_t a = 0; a < rs.num_roots(); ++a) {
        if (rs.root_norm2(a) == Rational(2)) ++long_roots;
        else if (rs.root_norm2(a) == Rational(1)) ++short_roots;
        else ADD_FAILURE() << rs.root_label(a);
    }
    EXPECT_EQ(long_roots, 4);
    EXPECT_EQ(short_roots, 4);
}

TEST(RootSystem, FrozenDualCoxeterAndMarks)
{
    struct Row {
        const char* name;
        std::size_t roots;
        int dual_coxeter;
        std::vector<int> marks;
    };
    const std::vector<Row> rows = {
        {"A3", 12, 4, {1, 1, 1}},    {"B2", 8, 3, {1, 2}},       {"B3", 18, 5, {1, 2, 2}},
        {"C3", 18, 4, {2, 2, 1}},    {"D4", 24, 6, {1, 2, 1, 1}}, {"D5", 40, 8, {1, 2, 2, 1, 1}},
    };
    for (const auto& row : rows) {
        const RootSystem rs = build_root_system(AlgebraId::parse(row.name));
        EXPECT_EQ(rs.num_roots(), row.roots) << row.name;
        EXPECT_EQ(rs.dual_coxeter(), row.dual_coxeter) << row.name;
        EXPECT_EQ(rs.marks(), row.marks) << row.name;
    }
}

TEST(Form, FrozenValues)
{
    const RootSystem a1 = build_root_system(AlgebraId::make(Series::A, 1));
    EXPECT_EQ(normalized_form_value(a1, a1.coroot(0), a1.coroot(0)), Rational(2));
    const RootSystem a2 = build_root_system(AlgebraId::make(Series::A, 2));
    EXPECT_EQ(normalized_form_value(a2, a2.simple_coroot(0), a2.simple_coroot(1)), Rational(-1));
    const RootSystem c2 = build_root_system(AlgebraId::make(Series::C, 2));
    for (std::size_t a = 0; a < c2.num_roots(); ++a)
        if (c2.root_norm2(a) == Rational(1)) EXPECT_EQ(normalized_form_value(c2, c2.coroot(a), c2.coroot(a)), Rational(4));
}

TEST(Form, HighestRootAndDualIdentity)
{
    for (const auto& id : algebras_up_to(6)) {
        const RootSystem rs = build_root_system(id);
        EXPECT_EQ(rs.root_norm2(rs.highest_root()), Rational(2)) << id.name();
        const ChevalleyBasis cb(rs);
        for (std::size_t a = 0; a < rs.num_roots(); ++a) EXPECT_EQ(cb.pairing(a) * rs.h_alpha(a), rs.coroot(a)) << id.name();
        for (std::size_t i = 0; i < rs.rank(); ++i)
            for (std::size_t j = 0; j < rs.rank(); ++j)
                EXPECT_EQ(rs.root_value(rs.simple_root(j), rs.fundamental_coweight(i)), Rational(i == j ? 1 : 0)) << id.name();
    }
}

TEST(Form, WeylInvariant)
{
    for (const auto& id : algebras_up_to(4)) {
        const RootSystem rs = build_root_system(id);
        for (std::size_t i = 0; i < rs.rank(); ++i)
            for (std::size_t a = 0; a < rs.num_roots(); ++a)
                for (std::size_t b = 0; b < rs.num_roots(); ++b) {
                    const CartanElement x = rs.h_alpha(a), y = rs.h_alpha(b);
                    EXPECT_EQ(rs.form(reflect(rs, i, x), reflect(rs, i, y)), rs.form(x, y)) << id.name();
                }
    }
}

TEST(Coweights, RootsIntegralOnFundamentalCoweights)
{
    for (const auto& id : algebras_up_to(6)) {
        const RootSystem rs = build_root_system(id);
        for (std::size_t i = 0; i < rs.rank(); ++i)
            for (std::size_t a = 0; a < rs.num_roots(); ++a)
                EXPECT_TRUE(is_integer(rs.root_value(a, rs.fundamental_coweight(i)))) << id.name();
    }
}

TEST(Coweights, CorootLatticeMembership)
{
    const RootSystem a1 = build_root_system(AlgebraId::make(Series::A, 1));
    EXPECT_TRUE(is_in_coroot_lattice(a1, CowLatticeElement::simple_coroot(a1, 0)));
    EXPECT_FALSE(is_in_coroot_lattice(a1, CowLatticeElement::fundamental(a1, 0)));
    const RootSystem a2 = build_root_system(AlgebraId::make(Series::A, 2));
    EXPECT_FALSE(is_in_coroot_lattice(a2, CowLatticeElement::fundamental(a2, 0)));
    // X_1 + X_2 = H_1 + H_2 in sl(3).
    const CowLatticeElement sum = add(a2, CowLatticeElement::fundamental(a2, 0), CowLatticeElement::fundamental(a2, 1));
    EXPECT_EQ(sum.cartan(), a2.simple_coroot(0) + a2.simple_coroot(1));
    EXPECT_TRUE(is_in_coroot_lattice(a2, sum));
}

TEST(Coweights, FromCartanRejectsFractionalPairing)
{
    const RootSystem a1 = build_root_system(AlgebraId::make(Series::A, 1));
    EXPECT_THROW(CowLatticeElement::from_cartan(a1, CartanElement({rat(1, 4), rat(-1, 4)})), Error);
}

TEST(Chevalley, A1Generators)
{
    const ChevalleyBasis cb(AlgebraId::make(Series::A, 1));
    EXPECT_EQ(cb.root_vector(0), RationalMatrix::unit(2, 0, 1));
    EXPECT_EQ(cb.root_vector(1), RationalMatrix::unit(2, 1, 0));
    EXPECT_EQ(commutator(cb.root_vector(0), cb.root_vector(1)), cb.roots().coroot(0).matrix());
}

TEST(Chevalley, A2SimpleConstant)
{
    const ChevalleyBasis cb(AlgebraId::make(Series::A, 2));
    const auto& rs = cb.roots();
    const std::size_t a1 = rs.simple_root(0), a2 = rs.simple_root(1);
    const int n = cb.structure_constant(a1, a2);
    EXPECT_EQ(std::abs(n), 1);
    EXPECT_EQ(cb.structure_constant(rs.negative(a1), rs.negative(a2)), -n);
}

TEST(Chevalley, C2ConstantsAreOneOrTwo)
{
    const ChevalleyBasis cb(AlgebraId::make(Series::C, 2));
    std::set<int> seen;
    for (std::size_t a = 0; a < cb.num_roots(); ++a)
        for (std::size_t b = 0; b < cb.num_roots(); ++b)
            if (cb.root_sum(a, b)) seen.insert(std::abs(cb.structure_constant(a, b)));
    EXPECT_EQ(seen, (std::set<int>{1, 2}));
}

TEST(Chevalley, InvariantsExhaustive)
{
    for (const auto& id : algebras_up_to(6)) {
        const ChevalleyBasis cb(id);
        const auto& rs = cb.roots();
        for (std::size_t a = 0; a < rs.num_roots(); ++a) {
            ASSERT_EQ(commutator(cb.root_vector(a), cb.root_vector(rs.negative(a))), rs.coroot(a).matrix()) << id.name();
            for (std::size_t b = 0; b < rs.num_roots(); ++b) {
                if (b == rs.negative(a)) continue;
                const RationalMatrix c = commutator(cb.root_vector(a), cb.root_vector(b));
                if (auto s = rs.sum(a, b)) {
                    ASSERT_EQ(c, cb.root_vector(*s).scaled(Rational(cb.structure_constant(a, b)))) << id.name();
                    ASSERT_EQ(cb.structure_constant(rs.negative(a), rs.negative(b)), -cb.structure_constant(a, b)) << id.name();
                } else {
                    ASSERT_TRUE(c.is_zero()) << id.name();
                }
            }
        }
    }
}

TEST(Chevalley, JacobiFromStructureConstants)
{
    for (const auto& id : algebras_up_to(3)) {
        const ChevalleyBasis cb(id);
        const std::size_t d = cb.dim();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                for (std::size_t k = j + 1; k < d; ++k) {
                    const Vec x = unit_vec(cb, i), y = unit_vec(cb, j), z = unit_vec(cb, k);
                    Vec total = bracket(cb, x, bracket(cb, y, z));
                    const Vec t2 = bracket(cb, y, bracket(cb, z, x)), t3 = bracket(cb, z, bracket(cb, x, y));
                    for (std::size_t m = 0; m < d; ++m) total[m] += t2[m] + t3[m];
                    for (const auto& q : total) ASSERT_TRUE(is_zero(q)) << id.name() << " " << i << "," << j << "," << k;
                }
    }
}

TEST(Chevalley, DecomposeRoundTrip)
{
    const ChevalleyBasis cb(AlgebraId::make(Series::B, 2));
    for (std::size_t k = 0; k < cb.dim(); ++k) EXPECT_EQ(cb.compose(cb.decompose(cb.basis_matrix(k))), cb.basis_matrix(k));
    EXPECT_THROW(cb.decompose(RationalMatrix::identity(5)), Error);
}
