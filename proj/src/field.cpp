#include "octic/field.hpp"

namespace octic {

CaseTag case_from_residue(int r) {
  if (r == 2) return CaseTag::I;
  if (r == 3) return CaseTag::II;
  throw error("case residue must be 2 or 3");
}

IntPolynomial m_poly(CaseTag c) {
  IntPolynomial n = IntPolynomial::variable(vars::n());
  return IntPolynomial(4) * n + IntPolynomial(case_residue(c));
}

const std::array<ConjugationIndex, 8>& all_embeddings() {
  static const std::array<ConjugationIndex, 8> e = {
      ConjugationIndex{1, 1}, ConjugationIndex{1, 2}, ConjugationIndex{1, 3},
      ConjugationIndex{1, 4}, ConjugationIndex{2, 1}, ConjugationIndex{2, 2},
      ConjugationIndex{2, 3}, ConjugationIndex{2, 4}};
  return e;
}

FieldElement FieldElement::one(CaseTag tag) {
  return basis_mono(tag, 0, 0);
}

FieldElement FieldElement::i_unit(CaseTag tag) {
  return basis_mono(tag, 1, 0);
}

FieldElement FieldElement::theta(CaseTag tag, unsigned b) {
  FieldElement e(tag);
  // th^b for b up to 7 (reduced once through th^4 = m).
  if (b < 4) return basis_mono(tag, 0, b);
  if (b < 8)
    return basis_mono(tag, 0, b - 4, DyadicPolynomial(m_poly(tag)));
  throw error("theta power out of range");
}

FieldElement FieldElement::rational(CaseTag tag, DyadicPolynomial r) {
  return basis_mono(tag, 0, 0, std::move(r));
}

FieldElement FieldElement::basis_mono(CaseTag tag, unsigned a, unsigned b,
                                      DyadicPolynomial c) {
  if (a > 1 || b > 3) throw error("basis monomial index out of range");
  FieldElement e(tag);
  e.c_[4 * a + b] = std::move(c);
  return e;
}

const DyadicPolynomial& FieldElement::coord(unsigned a, unsigned b) const {
  return c_[4 * a + b];
}

DyadicPolynomial& FieldElement::coord(unsigned a, unsigned b) {
  return c_[4 * a + b];
}

bool FieldElement::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (unsigned idx = 1; idx < 8; ++idx)
    if (!c_[idx].is_zero()) return false;
  return true;
}

FieldElement FieldElement::operator-() const {
  FieldElement r(tag_);
  for (unsigned idx = 0; idx < 8; ++idx) r.c_[idx] = -c_[idx];
  return r;
}

namespace {

void check_tags(const FieldElement& a, const FieldElement& b) {
  if (a.tag() != b.tag())
    throw case_mismatch("mixed case tags in field arithmetic");
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_tags(a, b);
  FieldElement r(a.tag());
  for (unsigned a2 = 0; a2 < 2; ++a2)
    for (unsigned b2 = 0; b2 < 4; ++b2)
      r.coord(a2, b2) = a.coord(a2, b2) + b.coord(a2, b2);
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return a + (-b);
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  check_tags(x, y);
  const DyadicPolynomial m{m_poly(x.tag())};
  FieldElement r(x.tag());
  for (unsigned a1 = 0; a1 < 2; ++a1)
    for (unsigned b1 = 0; b1 < 4; ++b1) {
      const auto& cx = x.coord(a1, b1);
      if (cx.is_zero()) continue;
      for (unsigned a2 = 0; a2 < 2; ++a2)
        for (unsigned b2 = 0; b2 < 4; ++b2) {
          const auto& cy = y.coord(a2, b2);
          if (cy.is_zero()) continue;
          DyadicPolynomial c = cx * cy;
          unsigned a = a1 + a2;  // i^a, reduce i^2 = -1
          bool neg = false;
          if (a >= 2) {
            a -= 2;
            neg = !neg;
          }
          unsigned b = b1 + b2;  // th^b, reduce th^4 = m
          if (b >= 4) {
            b -= 4;
            c = c * m;
          }
          if (neg) c = -c;
          r.coord(a, b) += c;
        }
    }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  *this = *this + o;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  *this = *this * o;
  return *this;
}

FieldElement FieldElement::scaled(const DyadicPolynomial& c) const {
  FieldElement r(tag_);
  for (unsigned idx = 0; idx < 8; ++idx) r.c_[idx] = c_[idx] * c;
  return r;
}

FieldElement FieldElement::halved() const {
  FieldElement r(tag_);
  for (unsigned idx = 0; idx < 8; ++idx)
    r.c_[idx] = DyadicPolynomial(c_[idx].numerator(), c_[idx].denom_exp() + 1);
  return r;
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement r = one(tag_);
  FieldElement base(*this);
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

std::string FieldElement::to_string() const {
  static const char* basis[8] = {"1",   "th",   "th^2",   "th^3",
                                 "i",   "i*th", "i*th^2", "i*th^3"};
  std::string s;
  for (unsigned idx = 0; idx < 8; ++idx) {
    if (c_[idx].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[idx].to_string() + ")*" + basis[idx];
  }
  return s.empty() ? "0" : s;
}

FieldElement conjugate(const FieldElement& e, const ConjugationIndex& idx) {
  if (idx.j < 1 || idx.j > 2 || idx.k < 1 || idx.k > 4)
    throw error("conjugation index out of range");
  FieldElement r(e.tag());
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      const auto& c = e.coord(a, b);
      if (c.is_zero()) continue;
      // i^a th^b |-> ((-1)^(j-1) i)^a (i^(k-1) th)^b.
      unsigned ipow = (a + static_cast<unsigned>(idx.k - 1) * b) % 4;
      bool neg = (idx.j == 2 && a == 1);
      if (ipow >= 2) neg = !neg;
      r.coord(ipow % 2, b) += neg ? -c : c;
    }
  return r;
}

FieldElement norm_over_M(const std::function<FieldElement(int)>& fn) {
  return fn(1) * fn(2);
}

DyadicPolynomial assert_rational(const FieldElement& e) {
  for (unsigned idx = 1; idx < 8; ++idx)
    if (!e.coords()[idx].is_zero())
      throw not_rational("element is not rational; coordinate " +
                         std::to_string(idx) + " = " +
                         e.coords()[idx].to_string());
  return e.coords()[0];
}

IntPolynomial assert_integer(const FieldElement& e) {
  DyadicPolynomial r = assert_rational(e);
  if (!r.is_integral())
    throw not_integral("rational part has denominator 2^" +
                       std::to_string(r.denom_exp()));
  return r.numerator();
}

DyadicPolynomial norm_K_Q(const FieldElement& e) {
  FieldElement prod = FieldElement::one(e.tag());
  for (const auto& idx : all_embeddings()) prod *= conjugate(e, idx);
  return assert_rational(prod);
}

std::array<DyadicPolynomial, 9> min_poly(const FieldElement& e) {
  // Expand prod (X - e^(j,k)) as a degree-8 polynomial in X with
  // coefficients in K; they all land in Q.
  std::vector<FieldElement> coeff{FieldElement::one(e.tag())};
  for (const auto& idx : all_embeddings()) {
    FieldElement root = conjugate(e, idx);
    std::vector<FieldElement> next(coeff.size() + 1,
                                   FieldElement::zero(e.tag()));
    for (std::size_t d = 0; d < coeff.size(); ++d) {
      next[d + 1] += coeff[d];          // X * coeff
      next[d] += -(root * coeff[d]);    // -root * coeff
    }
    coeff = std::move(next);
  }
  std::array<DyadicPolynomial, 9> out;
  for (unsigned d = 0; d <= 8; ++d) out[d] = assert_rational(coeff[d]);
  return out;
}

}  // namespace octic
