#include <random>

#include <gtest/gtest.h>

#include "rlshift/exactalg.hpp"

using namespace rlshift;

namespace {

using Poly = RationalFunction::Poly;

RationalFunction xi_plus(long a, long k = 1) { return RationalFunction::binomial_power(Rational(a), k); }

struct Sampler {
    std::mt19937_64 gen{20260101};

    Rational coefficient()
    {
        std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
        return rat(num(gen), den(gen));
    }

    Poly poly(std::size_t max_degree, bool unit_constant = false)
    {
        std::uniform_int_distribution<std::size_t> deg(0, max_degree);
        std::vector<Rational> c(deg(gen) + 1);
        for (auto& x : c) x = coefficient();
        if (unit_constant) c[0] = 1;
        Poly p(c);
        return p.is_zero() ? Poly::one() : p;
    }

    RationalFunction function(bool regular = false)
    {
        std::uniform_int_distribution<long> shift(-2, 2);
        RationalFunction f(poly(3), poly(2, true));
        return regular ? f : f.shifted(shift(gen));
    }

    FracLaurent laurent(long bound)
    {
        std::uniform_int_distribution<long> num(-6, 6), count(1, 3);
        FracLaurent x{Integer(bound)};
        for (long i = count(gen); i > 0; --i) x.add_term(rat(num(gen), bound), coefficient());
        return x;
    }
};

} // namespace

TEST(Residue, InverseXiAgainstXi) { EXPECT_EQ(residue_at_zero(RationalFunction::monomial(1, -1), RationalFunction::xi()), Rational(1)); }

TEST(Residue, NoInverseTermInPolynomial)
{
    EXPECT_EQ(residue_at_zero(RationalFunction::xi(), RationalFunction::monomial(1, 2)), Rational(0));
}

TEST(Residue, DerivativeOfRegularFunction)
{
    EXPECT_EQ(residue_at_zero(RationalFunction(1), xi_plus(1, -1)), Rational(0));
}

TEST(Residue, IntegrationByParts)
{
    Sampler s;
    for (int i = 0; i < 200; ++i) {
        const RationalFunction f = s.function(), g = s.function();
        EXPECT_EQ(residue_at_zero(g, f) + residue_at_zero(f, g), Rational(0)) << f << " ; " << g;
    }
}

TEST(Expansion, GeometricSeries)
{
    const auto e = xi_plus(1, -1).expand_at_zero(2);
    EXPECT_EQ(e.coeff(0), Rational(1));
    EXPECT_EQ(e.coeff(1), Rational(-1));
    EXPECT_EQ(e.coeff(2), Rational(1));
}

TEST(Expansion, Polynomial)
{
    const auto e = RationalFunction::xi().expand_at_zero(2);
    EXPECT_EQ(e.coeff(0), Rational(0));
    EXPECT_EQ(e.coeff(1), Rational(1));
    EXPECT_EQ(e.coeff(2), Rational(0));
}

TEST(Expansion, XiOverXiMinusOne)
{
    const auto e = (RationalFunction::xi() / xi_plus(-1)).expand_at_zero(2);
    EXPECT_EQ(e.coeff(0), Rational(0));
    EXPECT_EQ(e.coeff(1), Rational(-1));
    EXPECT_EQ(e.coeff(2), Rational(-1));
}

TEST(Expansion, ResumsAgainstDenominator)
{
    Sampler s;
    const long order = 8;
    for (int i = 0; i < 100; ++i) {
        const RationalFunction r = s.function(true);
        const auto e = r.expand_at_zero(order);
        std::vector<Rational> c(order + 1);
        for (long k = 0; k <= order; ++k) c[static_cast<std::size_t>(k)] = e.coeff(k);
        const Poly product = Poly(c) * r.denominator();
        const Poly num = r.numerator();
        for (std::size_t k = 0; k <= order; ++k) EXPECT_EQ(product.coeff(k), num.coeff(k)) << r << " at order " << k;
    }
}

TEST(RationalFunction, RingAxioms)
{
    Sampler s;
    for (int i = 0; i < 100; ++i) {
        const RationalFunction a = s.function(), b = s.function(), c = s.function();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a - a, RationalFunction());
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), RationalFunction(1));
    }
}

TEST(RationalFunction, ReducedForm)
{
    const RationalFunction f = xi_plus(2) * xi_plus(3) / xi_plus(2);
    EXPECT_EQ(f, xi_plus(3));
    EXPECT_EQ(f.denominator(), Poly::one());
    EXPECT_EQ(Poly::gcd(f.numerator(), f.denominator()).degree(), 0);
}

TEST(RationalFunction, EvaluationAndDerivative)
{
    const RationalFunction f = xi_plus(1, 2) / xi_plus(-2);
    EXPECT_EQ(f(Rational(0)), rat(-1, 2));
    const RationalFunction expected = (xi_plus(1).scaled(2) * xi_plus(-2) - xi_plus(1, 2)) / xi_plus(-2, 2);
    EXPECT_EQ(f.derivative(), expected);
}

TEST(RationalFunction, ValuationAndTranslate)
{
    EXPECT_EQ(RationalFunction::monomial(3, -2).valuation(), -2);
    EXPECT_EQ(RationalFunction::xi().translate(Rational(5)), xi_plus(5));
}

TEST(FracLaurent, HalfExponentIsFractional) { EXPECT_FALSE(is_integral_exponents(FracLaurent::monomial(1, rat(1, 2)))); }

TEST(FracLaurent, IntegralSum)
{
    const FracLaurent x = FracLaurent::monomial(3, 2) + FracLaurent::monomial(1, -1);
    EXPECT_TRUE(is_integral_exponents(x));
    EXPECT_EQ(x.to_rational_function(), RationalFunction::monomial(3, 2) + RationalFunction::monomial(1, -1));
}

TEST(FracLaurent, HalvesCollapse)
{
    const FracLaurent h = FracLaurent::monomial(1, rat(1, 2));
    const FracLaurent sq = h * h;
    EXPECT_TRUE(is_integral_exponents(sq));
    EXPECT_EQ(sq.to_rational_function(), RationalFunction::xi());
}

TEST(FracLaurent, ProductBoundIsLcm)
{
    const FracLaurent a = FracLaurent::monomial(1, rat(1, 2)), b = FracLaurent::monomial(1, rat(1, 3));
    EXPECT_EQ((a * b).denominator_bound(), Integer(6));
    EXPECT_EQ((a * b).terms().begin()->first, rat(5, 6));
}

TEST(FracLaurent, RejectsExponentOutsideBound)
{
    FracLaurent x{Integer(2)};
    EXPECT_THROW(x.add_term(rat(1, 3), 1), Error);
}

TEST(FracLaurent, NoZeroCoefficientsStored)
{
    const FracLaurent x = FracLaurent::monomial(2, rat(1, 2)) + FracLaurent::monomial(-2, rat(1, 2));
    EXPECT_TRUE(x.is_zero());
    EXPECT_THROW(FracLaurent::monomial(1, rat(1, 2)).to_rational_function(), Error);
}

TEST(FracLaurent, RingAxioms)
{
    Sampler s;
    for (int i = 0; i < 100; ++i) {
        const FracLaurent a = s.laurent(2), b = s.laurent(3), c = s.laurent(6);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
    }
}

TEST(Rational, Helpers)
{
    EXPECT_EQ(parse_rational("-3/6"), rat(-1, 2));
    EXPECT_TRUE(is_integer(rat(4, 2)));
    EXPECT_EQ(to_long(rat(6, 3)), 2);
    EXPECT_EQ(lcm(Integer(4), Integer(6)), Integer(12));
}
