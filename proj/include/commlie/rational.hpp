#ifndef COMMLIE_RATIONAL_HPP
#define COMMLIE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace commlie {

// Exact rational scalar. GMP keeps values canonical: lowest terms,
// positive denominator, zero stored as 0/1.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// The two-argument mpq constructor does not normalise a negative
// denominator, so all fraction construction goes through division.
inline Rational frac(long num, long den) {
    return Rational(num) / Rational(den);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const Rational& r) { return r.str(); }

using RationalVector = std::vector<Rational>;

} // namespace commlie

#endif
