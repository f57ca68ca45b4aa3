#ifndef OCTIC_BASIS_HPP
#define OCTIC_BASIS_HPP

#include <optional>
#include <vector>

#include "octic/field.hpp"

namespace octic {

// Ordered 8-tuple of field elements spanning an order of K.
struct Basis {
  CaseTag tag;
  std::array<FieldElement, 8> elements;
};

// {1, th, th^2, th^3, i, i th, i th^2, i th^3}.
Basis initial_basis(CaseTag tag);

// The denominator-2 integral basis for the given residue class of m.
Basis known_basis(CaseTag tag);

// det(M)^2 for the 8x8 matrix M of conjugates of the basis elements; an
// integer-coefficient polynomial in n.
IntPolynomial basis_discriminant(const Basis& b);

// Discriminant of {1, th, th^2, th^3} over the quartic subfield's
// conjugates (fixed j); equals -256 m(n)^3.
IntPolynomial subfield_discriminant(CaseTag tag);

// Writes disc = sign * 2^h * m(n)^6 and returns h; throws if disc does not
// have that shape.
unsigned disc_two_exponent(const IntPolynomial& disc, CaseTag tag);

// Nonzero lambda in {0,1}^8 selecting a sum of basis elements; bit l-1
// corresponds to element l.
struct CandidateTuple {
  std::uint8_t bits = 0;
};

struct NormTestReport {
  bool pass = false;
  // Residues of the norm mod 2^divisor_exp at n = 0..residue_count-1; the
  // first nonzero entry fails the test.
  std::vector<unsigned long> residues;
  std::optional<unsigned> first_fail;  // index into residues
};

// Checks that norm(sum_l lambda_l b_l) is divisible by 2^divisor_exp for
// every residue of n mod residue_count.
NormTestReport candidate_norm_test(CandidateTuple lambda, const Basis& b,
                                   unsigned residue_count = 64,
                                   unsigned divisor_exp = 8);

// True when every coefficient of the degree-8 characteristic polynomial is
// denominator free, i.e. the element is an algebraic integer for all n.
bool integrality_test(const FieldElement& e);

// One enrichment step: first candidate (in increasing binary value) passing
// the norm and integrality tests replaces the highest-indexed constituent
// element; the discriminant drops by a factor of 4.
struct EnrichAttempt {
  std::uint8_t lambda = 0;
  bool norm_pass = false;
  std::optional<unsigned> norm_first_fail_n;
  bool integrality_pass = false;  // only evaluated when norm passes
  int replaced_index = -1;        // 1-based; -1 when not committed
};

struct EnrichRound {
  std::vector<EnrichAttempt> attempts;
  bool improved = false;
  unsigned h_before = 0, h_after = 0;
};

struct EnrichTrace {
  CaseTag tag;
  std::vector<EnrichRound> rounds;
  unsigned final_h = 0;
};

struct EnrichmentOutcome {
  bool improved = false;
  Basis basis;
};

EnrichmentOutcome enrich(const Basis& b, EnrichRound* round = nullptr,
                         unsigned residue_count = 64, unsigned divisor_exp = 8);

// Iterates enrich until no candidate passes; returns the fixed point.
Basis enrich_to_fixed_point(const Basis& start, EnrichTrace* trace = nullptr,
                            unsigned residue_count = 64,
                            unsigned divisor_exp = 8);

// True when the two bases generate the same lattice: the change-of-basis
// matrix is integral with determinant +-1.  Requires constant coordinates.
bool same_lattice(const Basis& a, const Basis& b);

}  // namespace octic

#endif
