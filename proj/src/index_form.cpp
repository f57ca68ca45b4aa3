#include "octic/index_form.hpp"

#include <algorithm>

namespace octic {

FieldElement generic_element(CaseTag tag) {
  Basis kb = known_basis(tag);
  FieldElement alpha = FieldElement::zero(tag);
  for (unsigned l = 0; l < 8; ++l) {
    DyadicPolynomial xl{IntPolynomial::variable(vars::x(static_cast<int>(l) + 1))};
    alpha += kb.elements[l].scaled(xl);
  }
  return alpha;
}

namespace {

// Embedding table indexed [j-1][k-1].
std::array<std::array<FieldElement, 4>, 2> conjugates_of(const FieldElement& e) {
  std::array<std::array<FieldElement, 4>, 2> c{
      {{FieldElement::zero(e.tag()), FieldElement::zero(e.tag()),
        FieldElement::zero(e.tag()), FieldElement::zero(e.tag())},
       {FieldElement::zero(e.tag()), FieldElement::zero(e.tag()),
        FieldElement::zero(e.tag()), FieldElement::zero(e.tag())}}};
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 4; ++k)
      c[j - 1][k - 1] = conjugate(e, ConjugationIndex{j, k});
  return c;
}

FieldElement balanced_product(std::vector<FieldElement> f) {
  while (f.size() > 1) {
    std::vector<FieldElement> next;
    next.reserve((f.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < f.size(); i += 2) next.push_back(f[i] * f[i + 1]);
    if (f.size() % 2) next.push_back(f.back());
    f = std::move(next);
  }
  return f[0];
}

}  // namespace

std::array<std::vector<std::pair<int, int>>, 6> s_factor_pairs() {
  // Embedding index = 4*(j-1) + (k-1).
  auto at = [](int j, int k) { return 4 * (j - 1) + (k - 1); };
  std::array<std::vector<std::pair<int, int>>, 6> p;
  for (int j = 1; j <= 2; ++j) {
    for (int k = 1; k <= 4; ++k)
      p[0].emplace_back(at(j, k), at(j, k % 4 + 1));  // (1,2)(2,3)(3,4)(4,1)
    p[1].emplace_back(at(j, 1), at(j, 3));
    p[1].emplace_back(at(j, 2), at(j, 4));
  }
  for (int k = 1; k <= 4; ++k) {
    p[2].emplace_back(at(1, k), at(2, k));
    p[3].emplace_back(at(1, k), at(2, (k + 2) % 4 + 1));  // k -> k+3
    p[4].emplace_back(at(1, k), at(2, (k + 1) % 4 + 1));  // k -> k+2
    p[5].emplace_back(at(1, k), at(2, k % 4 + 1));        // k -> k+1
  }
  return p;
}

SFactorSet build_s_factors(CaseTag tag) {
  FieldElement alpha = generic_element(tag);
  auto c = conjugates_of(alpha);
  auto d = [&](int j1, int k1, int j2, int k2) {
    return c[j1 - 1][k1 - 1] - c[j2 - 1][k2 - 1];
  };

  SFactorSet out{tag, {}};

  // S1: the 4-cycles (k,k+1) inside each j, multiplied over j = 1,2.
  {
    FieldElement prod = norm_over_M([&](int j) {
      return balanced_product({d(j, 1, j, 2), d(j, 2, j, 3), d(j, 3, j, 4),
                               d(j, 4, j, 1)});
    });
    out.s[0] = assert_integer(prod);
  }
  // S2: the diagonals (1,3),(2,4) inside each j.
  {
    FieldElement prod = norm_over_M(
        [&](int j) { return d(j, 1, j, 3) * d(j, 2, j, 4); });
    out.s[1] = assert_integer(prod);
  }
  // S3..S6: cross-j pairs, k paired with k, k+3, k+2, k+1 respectively.
  auto cross = [&](int shift) {
    std::vector<FieldElement> f;
    for (int k = 1; k <= 4; ++k)
      f.push_back(d(1, k, 2, (k + shift - 1) % 4 + 1));
    return assert_integer(balanced_product(std::move(f)));
  };
  out.s[2] = cross(0);
  out.s[3] = cross(3);
  out.s[4] = cross(2);
  out.s[5] = cross(1);
  return out;
}

std::array<IntPolynomial, 6> q_multipliers(CaseTag tag) {
  IntPolynomial n = IntPolynomial::variable(vars::n());
  if (tag == CaseTag::I) {
    IntPolynomial two_n1 = IntPolynomial(2) * n + IntPolynomial(1);
    return {IntPolynomial(16) * two_n1 * two_n1, IntPolynomial(16) * two_n1,
            IntPolynomial(2), IntPolynomial(2), IntPolynomial(2),
            IntPolynomial(2)};
  }
  IntPolynomial m = m_poly(tag);  // 4n+3
  return {m * m, IntPolynomial(16) * m, IntPolynomial(1), IntPolynomial(4),
          IntPolynomial(1), IntPolynomial(4)};
}

QFactorSet extract_q_factors(const SFactorSet& s) {
  QFactorSet out{s.tag, {}, q_multipliers(s.tag)};
  for (unsigned i = 0; i < 6; ++i) out.q[i] = exact_div(s.s[i], out.multipliers[i]);
  return out;
}

bool verify_product_identity(const QFactorSet& q) {
  IntPolynomial prod(1);
  for (const auto& m : q.multipliers) prod *= m;
  IntPolynomial expected =
      IntPolynomial(pow2(q.tag == CaseTag::I ? 9 : 8)) * m_poly(q.tag).pow(3);
  if (!(prod == expected)) return false;
  IntPolynomial disc = basis_discriminant(known_basis(q.tag));
  return prod * prod == disc;
}

IntPolynomial index_symbolic(const QFactorSet& q) {
  // Multiply smallest factors first to keep intermediates down.
  std::vector<IntPolynomial> f(q.q.begin(), q.q.end());
  std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) {
    return a.term_count() < b.term_count();
  });
  IntPolynomial prod(1);
  for (const auto& p : f) prod *= p;
  return prod;
}

Int index_value(const QFactorSet& q, const Int& n0,
                const std::array<Int, 7>& x2to8) {
  std::map<VarId, Int> bind{{vars::n(), n0}};
  for (int i = 0; i < 7; ++i) bind[vars::x(i + 2)] = x2to8[i];
  // x1 is deliberately left unbound: a stray occurrence throws instead of
  // being silently evaluated.
  Int prod(1);
  for (const auto& p : q.q) prod *= p.specialize(bind);
  return abs(prod);
}

}  // namespace octic
