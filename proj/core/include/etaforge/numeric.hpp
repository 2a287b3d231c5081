#pragma once

#include <gmpxx.h>

#include <string>

#include "etaforge/errors.hpp"

namespace etaforge {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow2_int(long e) {
  hard_assert(e >= 0, "pow2_int: negative exponent");
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

inline Rat pow2_rat(long e) {
  if (e >= 0) return Rat(pow2_int(e));
  Rat r(1, pow2_int(-e));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

struct Budget {
  // Visit cap for raising-operator expansion and nilCoxeter products; a trip
  // signals pathological input, not a math error.
  long long visits = 10'000'000;
};

}  // namespace etaforge
