#include "octic/basis.hpp"

#include <algorithm>
#include <bit>

namespace octic {

Basis initial_basis(CaseTag tag) {
  Basis b{tag,
          {FieldElement::one(tag), FieldElement::theta(tag, 1),
           FieldElement::theta(tag, 2), FieldElement::theta(tag, 3),
           FieldElement::basis_mono(tag, 1, 0), FieldElement::basis_mono(tag, 1, 1),
           FieldElement::basis_mono(tag, 1, 2), FieldElement::basis_mono(tag, 1, 3)}};
  return b;
}

Basis known_basis(CaseTag tag) {
  auto mono = [&](unsigned a, unsigned b2) {
    return FieldElement::basis_mono(tag, a, b2);
  };
  Basis b{tag,
          {FieldElement::one(tag), FieldElement::theta(tag, 1),
           FieldElement::theta(tag, 2), FieldElement::theta(tag, 3),
           FieldElement::one(tag), FieldElement::one(tag), FieldElement::one(tag),
           FieldElement::one(tag)}};
  if (tag == CaseTag::I) {
    b.elements[4] = mono(1, 0);                                   // i
    b.elements[5] = (mono(0, 1) + mono(1, 1) + mono(0, 3)).halved();  // ((1+i)th+th^3)/2
    b.elements[6] = (mono(0, 2) + mono(1, 2)).halved();           // (1+i)th^2/2
    b.elements[7] = (mono(0, 3) + mono(1, 3)).halved();           // (1+i)th^3/2
  } else {
    b.elements[4] = (mono(1, 0) + mono(0, 2)).halved();  // (i+th^2)/2
    b.elements[5] = (mono(1, 1) + mono(0, 3)).halved();  // (i th+th^3)/2
    b.elements[6] = (mono(0, 0) + mono(1, 2)).halved();  // (1+i th^2)/2
    b.elements[7] = (mono(0, 1) + mono(1, 3)).halved();  // (th+i th^3)/2
  }
  return b;
}

namespace {

// Determinant of an r x r matrix over the element algebra, by dynamic
// programming over column subsets (Laplace expansion along rows).
FieldElement det_subset_dp(const std::vector<std::vector<FieldElement>>& m,
                           CaseTag tag) {
  const unsigned r = m.size();
  std::vector<FieldElement> f(1u << r, FieldElement::zero(tag));
  f[0] = FieldElement::one(tag);
  for (unsigned s = 1; s < (1u << r); ++s) {
    unsigned row = static_cast<unsigned>(std::popcount(s)) - 1;
    FieldElement acc = FieldElement::zero(tag);
    unsigned pos = 0;
    for (unsigned c = 0; c < r; ++c) {
      if (!(s & (1u << c))) continue;
      FieldElement term = m[row][c] * f[s & ~(1u << c)];
      acc += ((row + pos) % 2 == 0) ? term : -term;
      ++pos;
    }
    f[s] = std::move(acc);
  }
  return f[(1u << r) - 1];
}

}  // namespace

IntPolynomial basis_discriminant(const Basis& b) {
  std::vector<std::vector<FieldElement>> m(
      8, std::vector<FieldElement>(8, FieldElement::zero(b.tag)));
  const auto& emb = all_embeddings();
  for (unsigned l = 0; l < 8; ++l)
    for (unsigned e = 0; e < 8; ++e) m[l][e] = conjugate(b.elements[l], emb[e]);
  FieldElement det = det_subset_dp(m, b.tag);
  return assert_integer(det * det);
}

IntPolynomial subfield_discriminant(CaseTag tag) {
  std::vector<std::vector<FieldElement>> m(
      4, std::vector<FieldElement>(4, FieldElement::zero(tag)));
  for (unsigned l = 0; l < 4; ++l)
    for (unsigned k = 0; k < 4; ++k)
      m[l][k] = conjugate(FieldElement::theta(tag, l),
                          ConjugationIndex{1, static_cast<int>(k) + 1});
  FieldElement det = det_subset_dp(m, tag);
  return assert_integer(det * det);
}

unsigned disc_two_exponent(const IntPolynomial& disc, CaseTag tag) {
  IntPolynomial m6 = m_poly(tag).pow(6);
  IntPolynomial q = exact_div(disc, m6);
  Int c = q.constant_value();
  if (c == 0) throw error("discriminant is zero");
  Int a = abs(c);
  unsigned h = val2(a);
  if (a != pow2(h)) throw error("discriminant is not +-2^h m^6");
  return h;
}

namespace {

FieldElement candidate_numerator(CandidateTuple lambda, const Basis& b) {
  FieldElement sum = FieldElement::zero(b.tag);
  for (unsigned l = 0; l < 8; ++l)
    if (lambda.bits & (1u << l)) sum += b.elements[l];
  return sum;
}

}  // namespace

NormTestReport candidate_norm_test(CandidateTuple lambda, const Basis& b,
                                   unsigned residue_count,
                                   unsigned divisor_exp) {
  if (lambda.bits == 0) throw error("candidate tuple must be nonzero");
  NormTestReport rep;
  DyadicPolynomial norm = norm_K_Q(candidate_numerator(lambda, b));
  const Int modulus = pow2(divisor_exp);
  rep.residues.reserve(residue_count);
  rep.pass = true;
  for (unsigned n0 = 0; n0 < residue_count; ++n0) {
    Int value = norm.specialize({{vars::n(), Int(n0)}});
    Int r;
    mpz_mod(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
    rep.residues.push_back(r.get_ui());
    if (r != 0 && !rep.first_fail) {
      rep.first_fail = n0;
      rep.pass = false;
    }
  }
  return rep;
}

bool integrality_test(const FieldElement& e) {
  for (const auto& c : min_poly(e))
    if (!c.is_integral()) return false;
  return true;
}

EnrichmentOutcome enrich(const Basis& b, EnrichRound* round,
                         unsigned residue_count, unsigned divisor_exp) {
  IntPolynomial disc_old = basis_discriminant(b);
  unsigned h_old = disc_two_exponent(disc_old, b.tag);
  if (round) {
    round->h_before = h_old;
    round->h_after = h_old;
  }
  for (unsigned bits = 1; bits <= 255; ++bits) {
    EnrichAttempt att;
    att.lambda = static_cast<std::uint8_t>(bits);
    CandidateTuple lambda{att.lambda};
    NormTestReport norm = candidate_norm_test(lambda, b, residue_count, divisor_exp);
    att.norm_pass = norm.pass;
    att.norm_first_fail_n = norm.first_fail;
    if (norm.pass) {
      FieldElement cand = candidate_numerator(lambda, b).halved();
      att.integrality_pass = integrality_test(cand);
      if (att.integrality_pass) {
        // Replace the highest-indexed element whose removal keeps the set
        // linearly independent (nonzero new discriminant).
        for (int l = 7; l >= 0; --l) {
          Basis nb = b;
          nb.elements[l] = cand;
          IntPolynomial disc_new;
          try {
            disc_new = basis_discriminant(nb);
          } catch (const not_rational&) {
            continue;
          }
          if (disc_new.is_zero()) continue;
          // Keep only a strict improvement by a power of 2.
          IntPolynomial ratio;
          try {
            ratio = exact_div(disc_old, disc_new);
          } catch (const not_divisible&) {
            continue;
          }
          if (!ratio.is_constant() || abs(ratio.constant_value()) <= 1) continue;
          att.replaced_index = l + 1;
          if (round) {
            round->attempts.push_back(att);
            round->improved = true;
            round->h_after = disc_two_exponent(disc_new, b.tag);
          }
          return EnrichmentOutcome{true, nb};
        }
      }
    }
    if (round) round->attempts.push_back(att);
  }
  return EnrichmentOutcome{false, b};
}

Basis enrich_to_fixed_point(const Basis& start, EnrichTrace* trace,
                            unsigned residue_count, unsigned divisor_exp) {
  Basis cur = start;
  if (trace) trace->tag = start.tag;
  for (;;) {
    EnrichRound round;
    EnrichmentOutcome out =
        enrich(cur, trace ? &round : nullptr, residue_count, divisor_exp);
    if (trace) trace->rounds.push_back(std::move(round));
    if (!out.improved) break;
    cur = std::move(out.basis);
  }
  if (trace) trace->final_h = disc_two_exponent(basis_discriminant(cur), cur.tag);
  return cur;
}

// ---------------------------------------------------------------------------
// Lattice comparison over constant dyadic coordinates.

namespace {

Rat coord_rational(const DyadicPolynomial& d) {
  if (!d.numerator().is_constant())
    throw error("basis coordinate is not constant");
  Rat r(d.numerator().constant_value());
  r /= Rat(pow2(d.denom_exp()));
  return r;
}

using Mat = std::array<std::array<Rat, 8>, 8>;

Mat coord_matrix(const Basis& b) {
  Mat m;
  for (unsigned l = 0; l < 8; ++l)
    for (unsigned c = 0; c < 8; ++c)
      m[l][c] = coord_rational(b.elements[l].coords()[c]);
  return m;
}

// Gauss-Jordan inverse; exact over rationals.
Mat invert(Mat a) {
  Mat inv;
  for (unsigned i = 0; i < 8; ++i)
    for (unsigned j = 0; j < 8; ++j) inv[i][j] = i == j ? 1 : 0;
  for (unsigned col = 0; col < 8; ++col) {
    unsigned piv = col;
    while (piv < 8 && a[piv][col] == 0) ++piv;
    if (piv == 8) throw error("basis coordinate matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (unsigned j = 0; j < 8; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (unsigned r = 0; r < 8; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (unsigned j = 0; j < 8; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

bool same_lattice(const Basis& a, const Basis& b) {
  Mat ea = coord_matrix(a);
  Mat kinv = invert(coord_matrix(b));
  // u = ea * kinv must be integral with |det| = 1.
  std::array<std::array<Int, 8>, 8> u;
  for (unsigned i = 0; i < 8; ++i)
    for (unsigned j = 0; j < 8; ++j) {
      Rat s(0);
      for (unsigned k = 0; k < 8; ++k) s += ea[i][k] * kinv[k][j];
      s.canonicalize();
      if (s.get_den() != 1) return false;
      u[i][j] = s.get_num();
    }
  // Integer determinant by fraction-free elimination is overkill at 8x8;
  // expand over rationals instead.
  Rat det(1);
  std::array<std::array<Rat, 8>, 8> w;
  for (unsigned i = 0; i < 8; ++i)
    for (unsigned j = 0; j < 8; ++j) w[i][j] = Rat(u[i][j]);
  for (unsigned col = 0; col < 8; ++col) {
    unsigned piv = col;
    while (piv < 8 && w[piv][col] == 0) ++piv;
    if (piv == 8) return false;
    if (piv != col) {
      std::swap(w[piv], w[col]);
      det = -det;
    }
    det *= w[col][col];
    for (unsigned r = col + 1; r < 8; ++r) {
      if (w[r][col] == 0) continue;
      Rat f = w[r][col] / w[col][col];
      for (unsigned j = col; j < 8; ++j) w[r][j] -= f * w[col][j];
    }
  }
  return det == 1 || det == -1;
}

}  // namespace octic
