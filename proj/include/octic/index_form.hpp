#ifndef OCTIC_INDEX_FORM_HPP
#define OCTIC_INDEX_FORM_HPP

#include "octic/basis.hpp"

namespace octic {

// x1 + x2 b2 + ... + x8 b8 over the denominator-2 integral basis, with
// symbolic coordinates.
FieldElement generic_element(CaseTag tag);

// The six factors of the discriminant of the generic element.  Each is an
// integer-coefficient polynomial in n, x2..x8 (x1 cancels in conjugate
// differences).  S1 and S2 are norms from the Q(i)-conjugation, S3..S6 pair
// the j = 1 and j = 2 embeddings; together the factors cover all 28
// embedding pairs exactly once.
struct SFactorSet {
  CaseTag tag;
  std::array<IntPolynomial, 6> s;
};

SFactorSet build_s_factors(CaseTag tag);

// Constant multiplier table: S_i = multiplier_i * Q_i.
std::array<IntPolynomial, 6> q_multipliers(CaseTag tag);

struct QFactorSet {
  CaseTag tag;
  std::array<IntPolynomial, 6> q;
  std::array<IntPolynomial, 6> multipliers;
};

// Divides out the multiplier table exactly; a nonzero remainder would
// falsify the table and raises not_divisible.
QFactorSet extract_q_factors(const SFactorSet& s);

// Checks  prod multipliers == 2^9 m^3 (case I) or 2^8 m^3 (case II)  and
// that the square of that product equals |disc| of the integral basis.
bool verify_product_identity(const QFactorSet& q);

// The full product Q1...Q6 (equal to +-I(alpha) as a polynomial).  Large;
// prefer specialized evaluation where a value is all that is needed.
IntPolynomial index_symbolic(const QFactorSet& q);

// |Q1...Q6| at concrete n and coordinates, evaluated factor-wise.
Int index_value(const QFactorSet& q, const Int& n0,
                const std::array<Int, 7>& x2to8);

// The embedding pairs used by each factor, as indices into
// all_embeddings(); for the coverage property.
std::array<std::vector<std::pair<int, int>>, 6> s_factor_pairs();

}  // namespace octic

#endif
