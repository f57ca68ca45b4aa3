#ifndef OCTIC_TEST_UTIL_HPP
#define OCTIC_TEST_UTIL_HPP

#include <random>

#include "octic/polynomial.hpp"

namespace octic::testutil {

// Small random polynomials for property tests; deterministic per seed.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed, std::vector<VarId> vars,
                   unsigned max_deg = 3, int coeff_bound = 9,
                   unsigned max_terms = 6)
      : rng_(seed), vars_(std::move(vars)), max_deg_(max_deg),
        coeff_bound_(coeff_bound), max_terms_(max_terms) {}

  IntPolynomial operator()() {
    IntPolynomial p;
    unsigned terms = 1 + rng_() % max_terms_;
    for (unsigned t = 0; t < terms; ++t) {
      Monomial m;
      for (VarId v : vars_) {
        unsigned e = rng_() % (max_deg_ + 1);
        if (e > 0) m = m * Monomial(v, e);
      }
      long c = static_cast<long>(rng_() % (2 * coeff_bound_ + 1)) - coeff_bound_;
      p += IntPolynomial::term(Int(c), m);
    }
    return p;
  }

  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
  std::vector<VarId> vars_;
  unsigned max_deg_;
  int coeff_bound_;
  unsigned max_terms_;
};

}  // namespace octic::testutil

#endif
