#include "numeric.hpp"

#include "error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>

namespace qtorb {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  }
  // The two-argument cpp_rational constructor rejects negative denominators;
  // division normalizes the sign and reduces to lowest terms.
  return Rat(num) / Rat(den);
}

Int rat_floor(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r); // cpp_rational keeps den > 0
  Int q = num / den;        // truncates toward zero
  if (num < 0 && q * den != num) {
    --q;
  }
  return q;
}

Rat rat_frac(const Rat& r) { return r - Rat(rat_floor(r)); }

bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = boost::multiprecision::gcd(g, x);
  }
  return g < 0 ? Int(-g) : g;
}

std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string rat_to_display(const Rat& r) {
  if (rat_is_integer(r)) {
    return numerator(r).str();
  }
  return rat_to_string(r);
}

Rat rat_from_string(std::string_view text) {
  auto fail = [&]() -> Rat {
    throw Error(ErrorCode::InvalidArgument,
                "malformed rational '" + std::string(text) + "' (expected 'p' or 'p/q')");
  };
  if (text.empty()) {
    return fail();
  }
  auto parse_int = [&](std::string_view part) -> Int {
    if (part.empty()) {
      fail();
    }
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) {
      fail();
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        fail();
      }
    }
    return Int(std::string(part));
  };
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_int(text));
  }
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "malformed rational '" + std::string(text) + "' (zero denominator)");
  }
  return make_rat(num, den);
}

std::string int_vec_to_string(const IntVec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out << ", ";
    }
    out << v[i].str();
  }
  out << ")";
  return out.str();
}

std::string rat_vec_to_display(const RatVec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out << ", ";
    }
    out << rat_to_display(v[i]);
  }
  out << ")";
  return out.str();
}

bool lex_less(const IntVec& a, const IntVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) {
      return a[i] < b[i];
    }
  }
  return a.size() < b.size();
}

} // namespace qtorb
