#pragma once

// Arbitrary-precision integer and rational scalar types used everywhere in
// the library. No floating point appears anywhere in qtorb: every quantity
// (determinants, group orders, box coefficients, ages, cohomology degrees)
// is an exact integer or rational.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace qtorb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// num/den with sign normalized onto the numerator. Throws on zero denominator.
Rat make_rat(const Int& num, const Int& den);

// Largest integer <= r.
Int rat_floor(const Rat& r);

// r - floor(r), always in [0, 1).
Rat rat_frac(const Rat& r);

bool rat_is_integer(const Rat& r);

// gcd of absolute values; 0 for the zero vector (and the empty vector).
Int vec_gcd(const IntVec& v);

// Canonical "p/q" form with q >= 1, e.g. "-2/3", "1/1".
std::string rat_to_string(const Rat& r);

// Pretty form for human-facing tables: "p" when q == 1, else "p/q".
std::string rat_to_display(const Rat& r);

// Accepts "p" or "p/q". Throws qtorb::Error on malformed input.
Rat rat_from_string(std::string_view text);

std::string int_vec_to_string(const IntVec& v);  // "(a, b, c)"
std::string rat_vec_to_display(const RatVec& v); // "(1/2, 1/2)"

// Lexicographic comparison, used for canonical orderings.
bool lex_less(const IntVec& a, const IntVec& b);

} // namespace qtorb
