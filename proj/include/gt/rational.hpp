#ifndef GT_RATIONAL_HPP
#define GT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Integer part of r rounding toward -inf, so that r - floor_rat(r) lies in [0,1).
Int floor_rat(const Rat& r);

// Accepts "p", "p/q" and plain decimal integers with optional sign.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& r);
std::string int_str(const Int& i);

}  // namespace gt

#endif
