#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hurwitz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms with q > 0, or just "p" when q == 1.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);
Rat rat_pow(const Rat& base, unsigned e);
Int int_pow(const Int& base, unsigned e);

}  // namespace hurwitz
