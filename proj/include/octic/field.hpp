#ifndef OCTIC_FIELD_HPP
#define OCTIC_FIELD_HPP

#include <array>
#include <functional>

#include "octic/polynomial.hpp"

namespace octic {

// Residue class of the square-free parameter: m = 4n+2 or m = 4n+3.
enum class CaseTag { I, II };

inline int case_residue(CaseTag c) { return c == CaseTag::I ? 2 : 3; }

CaseTag case_from_residue(int r);  // 2 -> I, 3 -> II

// m as a polynomial in n for the given residue class.
IntPolynomial m_poly(CaseTag c);

// One of the 8 embeddings of K: i |-> i (j=1) or -i (j=2), th |-> i^(k-1) th.
struct ConjugationIndex {
  int j = 1;  // 1..2
  int k = 1;  // 1..4
  friend bool operator==(const ConjugationIndex&, const ConjugationIndex&) = default;
};

// All embeddings, (1,1),(1,2),...,(2,4); index 0 is the identity.
const std::array<ConjugationIndex, 8>& all_embeddings();

// Element of K = Q(i, th), th^4 = m, with m symbolic through its case tag.
// Coordinates are dyadic polynomials on the monomial basis i^a th^b,
// a in {0,1}, b in {0..3}, stored at index 4a+b.
class FieldElement {
 public:
  explicit FieldElement(CaseTag tag) : tag_(tag) {}

  static FieldElement zero(CaseTag tag) { return FieldElement(tag); }
  static FieldElement one(CaseTag tag);
  static FieldElement i_unit(CaseTag tag);
  static FieldElement theta(CaseTag tag, unsigned b = 1);
  static FieldElement rational(CaseTag tag, DyadicPolynomial r);
  // i^a th^b with a dyadic coefficient.
  static FieldElement basis_mono(CaseTag tag, unsigned a, unsigned b,
                                 DyadicPolynomial c = DyadicPolynomial(1L));

  CaseTag tag() const { return tag_; }
  const DyadicPolynomial& coord(unsigned a, unsigned b) const;
  DyadicPolynomial& coord(unsigned a, unsigned b);
  const std::array<DyadicPolynomial, 8>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;  // all coords except (0,0) vanish

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement&, const FieldElement&);
  friend FieldElement operator-(const FieldElement&, const FieldElement&);
  friend FieldElement operator*(const FieldElement&, const FieldElement&);
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement scaled(const DyadicPolynomial& c) const;
  FieldElement halved() const;  // divide by 2
  FieldElement pow(unsigned e) const;

  bool operator==(const FieldElement& o) const {
    return tag_ == o.tag_ && c_ == o.c_;
  }

  std::string to_string() const;

 private:
  CaseTag tag_;
  std::array<DyadicPolynomial, 8> c_;
};

// Image under the embedding idx, coordinate-wise on i^a th^b.
FieldElement conjugate(const FieldElement& e, const ConjugationIndex& idx);

// Product over j = 1,2 of a j-indexed expression (the norm from K down to
// the quartic layer over Q(i)'s conjugation).
FieldElement norm_over_M(const std::function<FieldElement(int j)>& fn);

// The (0,0) coordinate when every other coordinate vanishes; throws
// not_rational otherwise.
DyadicPolynomial assert_rational(const FieldElement& e);

// As assert_rational but additionally requires an integral (denominator
// free) value; throws not_integral.
IntPolynomial assert_integer(const FieldElement& e);

// Product of all 8 conjugates; rational by symmetry.
DyadicPolynomial norm_K_Q(const FieldElement& e);

// Coefficients c_0..c_8 of prod_{j,k} (X - e^(j,k)), c_8 = 1; every
// coefficient is rational.
std::array<DyadicPolynomial, 9> min_poly(const FieldElement& e);

}  // namespace octic

#endif
