#pragma once

// Exact arithmetic aliases and "p/q" (de)serialization used across the
// library. All polyhedral computations run over the rationals; homology
// runs over arbitrary-precision integers.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace stripdef {

using Q = boost::multiprecision::mpq_rational;
using Z = boost::multiprecision::mpz_int;

inline int sgn(const Q& x) { return x.sign(); }

inline Q abs_q(const Q& x) { return x < 0 ? Q(-x) : x; }

/// Canonical "p/q" rendering; integers render without the "/q" part.
inline std::string format_rational(const Q& x) {
  const Z num = numerator(x);
  const Z den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Accepts "p", "-p", "p/q" with optional sign on the numerator.
inline Q parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Q(Z(s));
    const Z num(s.substr(0, slash));
    const Z den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Q(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational literal '" + s + "': " + e.what());
  }
}

}  // namespace stripdef
