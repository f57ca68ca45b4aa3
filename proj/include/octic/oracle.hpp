#ifndef OCTIC_ORACLE_HPP
#define OCTIC_ORACLE_HPP

#include <array>
#include <vector>

#include "octic/index_form.hpp"

namespace octic {

// Independent fixed-m verifier.  Elements of Q(i, m^(1/4)) for a concrete
// square-free integer m are held as 8 exact rational coordinates on the
// monomial basis i^a th^b; no symbolic machinery and no floating point is
// involved, so results cross-check the parametric pipeline.
class NumericFieldElement {
 public:
  NumericFieldElement(Int m);  // zero element

  static NumericFieldElement basis_mono(const Int& m, unsigned a, unsigned b,
                                        const Rat& c = Rat(1));

  const Int& m() const { return m_; }
  const Rat& coord(unsigned a, unsigned b) const { return c_[4 * a + b]; }
  Rat& coord(unsigned a, unsigned b) { return c_[4 * a + b]; }

  bool is_zero() const;
  bool is_rational() const;
  const Rat& rational_part() const { return c_[0]; }

  NumericFieldElement operator-() const;
  friend NumericFieldElement operator+(const NumericFieldElement&,
                                       const NumericFieldElement&);
  friend NumericFieldElement operator-(const NumericFieldElement&,
                                       const NumericFieldElement&);
  friend NumericFieldElement operator*(const NumericFieldElement&,
                                       const NumericFieldElement&);
  NumericFieldElement& operator+=(const NumericFieldElement& o);
  NumericFieldElement& operator*=(const NumericFieldElement& o);

  // i |-> +-i (j), th |-> i^(k-1) th.
  NumericFieldElement conjugate(int j, int k) const;

  bool operator==(const NumericFieldElement& o) const {
    return m_ == o.m_ && c_ == o.c_;
  }

 private:
  Int m_;
  std::array<Rat, 8> c_;
};

// The integral basis for concrete m (same layout as known_basis).
std::array<NumericFieldElement, 8> numeric_basis(const Int& m);

// alpha = x1 + x2 b2 + ... + x8 b8 from concrete coordinates.
NumericFieldElement numeric_element(const Int& m, const std::array<Int, 8>& x);

// Characteristic polynomial coefficients of alpha (degree 8, monic),
// computed from the 8 conjugates; all rational.
std::array<Rat, 9> numeric_min_poly(const NumericFieldElement& alpha);

// I(alpha) = sqrt(|D(alpha)| / |D_K|) computed directly from the product of
// squared conjugate differences.  Throws not_primitive when two conjugates
// coincide and non_square_quotient if the quotient fails to be a perfect
// square (which would indicate a bug, not bad input).
Int direct_index(const Int& m, const std::array<Int, 8>& x);

// A single compared sample in a crosscheck run.
struct CrosscheckSample {
  std::array<Int, 8> x;
  Int index;
};

struct CrosscheckReport {
  Int m;
  int requested = 0;
  int evaluated = 0;  // primitive alpha actually compared
  int skipped = 0;    // non-primitive draws
  int bound = 0;
  std::uint64_t seed = 0;
  Int min_index;
  std::vector<CrosscheckSample> examples;  // first few samples
};

// Draws `samples` random coordinate vectors with |x_i| <= bound and asserts
// direct_index == |Q1...Q6| for each; throws mismatch_error on any
// disagreement (the polynomial and coordinates are included in the message).
CrosscheckReport crosscheck(const QFactorSet& q, const Int& m, int samples,
                            int bound, std::uint64_t seed, int threads = 1);

}  // namespace octic

#endif
