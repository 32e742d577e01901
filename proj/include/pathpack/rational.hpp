#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pathpack {

// Exact rational used for every weight, objective and dual quantity.
using Rational = mpq_class;

inline Rational make_rational(long long num, long long den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Serialized form is always "p/q" with q > 0, including integers ("3/1").
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline double approx(const Rational& r) { return r.get_d(); }

}  // namespace pathpack
