#ifndef OCTIC_COMMON_HPP
#define OCTIC_COMMON_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace octic {

// Arbitrary-precision integer; all coefficient arithmetic is exact.
using Int = mpz_class;
using Rat = mpq_class;

inline Int pow2(unsigned k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

// 2-adic valuation of a nonzero integer.
inline unsigned val2(const Int& x) {
  return static_cast<unsigned>(mpz_scan1(x.get_mpz_t(), 0));
}

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct case_mismatch : error {
  explicit case_mismatch(const std::string& what) : error(what) {}
};

struct unbound_variable : error {
  explicit unbound_variable(const std::string& what) : error(what) {}
};

struct not_rational : error {
  explicit not_rational(const std::string& what) : error(what) {}
};

struct not_integral : error {
  explicit not_integral(const std::string& what) : error(what) {}
};

struct not_primitive : error {
  explicit not_primitive(const std::string& what) : error(what) {}
};

struct non_square_quotient : error {
  explicit non_square_quotient(const std::string& what) : error(what) {}
};

struct mismatch_error : error {
  explicit mismatch_error(const std::string& what) : error(what) {}
};

// Log level from OCTIC_LOG: quiet | info | debug (default info).
int log_level();

inline void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[octic] " << msg << "\n";
}

inline void log_debug(const std::string& msg) {
  if (log_level() >= 2) std::cerr << "[octic:debug] " << msg << "\n";
}

}  // namespace octic

#endif
