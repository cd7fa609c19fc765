#pragma once

// Exact scalar types for the whole library: arbitrary-precision integers and
// rationals backed by GMP. Every quantity that the artifact certifies is held
// in these types; doubles appear only in the quadrature/probe module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pvlab {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rpow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), a);
  if (e < 0) {
    if (r == 0) throw std::domain_error("negative power of zero");
    return Rat(1) / r;
  }
  return r;
}

// Parses "a", "-a" or "a/b". Decimal notation is rejected on purpose: exact
// parameters must never pass through floating point.
inline Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (slash != std::string::npos)
        throw std::invalid_argument("malformed rational: " + text);
      slash = i;
    } else if (c == '-') {
      if (i != 0 && i != slash + 1)
        throw std::invalid_argument("malformed rational: " + text);
    } else if (c < '0' || c > '9') {
      throw std::invalid_argument("rational literals must be \"a\" or \"a/b\", got: " + text);
    }
  }
  if (slash == 0 || slash == text.size() - 1)
    throw std::invalid_argument("malformed rational: " + text);
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace pvlab
