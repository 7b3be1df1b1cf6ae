#ifndef RLSHIFT_EXACTALG_RATIONAL_HPP
#define RLSHIFT_EXACTALG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>

#include "../error.hpp"

namespace rlshift {

/// Arbitrary-precision rational. Always kept canonical.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1)
{
    if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Converts an integral rational to long; throws if not integral or out of range.
inline long to_long(const Rational& q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw Error(Errc::invalid_argument, "rational " + q.get_str() + " is not a machine integer");
    return q.get_num().get_si();
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error(Errc::parse_error, "bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

inline Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace rlshift

#endif
