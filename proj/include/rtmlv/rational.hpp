#ifndef RTMLV_RATIONAL_HPP
#define RTMLV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace rtmlv {

// Exact coefficient arithmetic. Coefficients stay tiny in practice, but
// denominators do appear transiently, so nothing here assumes integers.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string rational_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline double rational_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace rtmlv

#endif
