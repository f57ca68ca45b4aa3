#include "octic/oracle.hpp"

#include <random>
#include <thread>

namespace octic {

NumericFieldElement::NumericFieldElement(Int m) : m_(std::move(m)) {}

NumericFieldElement NumericFieldElement::basis_mono(const Int& m, unsigned a,
                                                    unsigned b, const Rat& c) {
  if (a > 1 || b > 3) throw error("basis monomial index out of range");
  NumericFieldElement e(m);
  e.c_[4 * a + b] = c;
  return e;
}

bool NumericFieldElement::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool NumericFieldElement::is_rational() const {
  for (unsigned idx = 1; idx < 8; ++idx)
    if (c_[idx] != 0) return false;
  return true;
}

NumericFieldElement NumericFieldElement::operator-() const {
  NumericFieldElement r(m_);
  for (unsigned idx = 0; idx < 8; ++idx) r.c_[idx] = -c_[idx];
  return r;
}

NumericFieldElement operator+(const NumericFieldElement& a,
                              const NumericFieldElement& b) {
  if (a.m_ != b.m_) throw case_mismatch("mixed m in numeric arithmetic");
  NumericFieldElement r(a.m_);
  for (unsigned idx = 0; idx < 8; ++idx) r.c_[idx] = a.c_[idx] + b.c_[idx];
  return r;
}

NumericFieldElement operator-(const NumericFieldElement& a,
                              const NumericFieldElement& b) {
  return a + (-b);
}

NumericFieldElement operator*(const NumericFieldElement& x,
                              const NumericFieldElement& y) {
  if (x.m_ != y.m_) throw case_mismatch("mixed m in numeric arithmetic");
  NumericFieldElement r(x.m_);
  Rat mr(x.m_);
  for (unsigned a1 = 0; a1 < 2; ++a1)
    for (unsigned b1 = 0; b1 < 4; ++b1) {
      const Rat& cx = x.c_[4 * a1 + b1];
      if (cx == 0) continue;
      for (unsigned a2 = 0; a2 < 2; ++a2)
        for (unsigned b2 = 0; b2 < 4; ++b2) {
          const Rat& cy = y.c_[4 * a2 + b2];
          if (cy == 0) continue;
          Rat c = cx * cy;
          unsigned a = a1 + a2;
          bool neg = false;
          if (a >= 2) {
            a -= 2;
            neg = true;
          }
          unsigned b = b1 + b2;
          if (b >= 4) {
            b -= 4;
            c *= mr;
          }
          if (neg) c = -c;
          r.c_[4 * a + b] += c;
        }
    }
  return r;
}

NumericFieldElement& NumericFieldElement::operator+=(const NumericFieldElement& o) {
  *this = *this + o;
  return *this;
}

NumericFieldElement& NumericFieldElement::operator*=(const NumericFieldElement& o) {
  *this = *this * o;
  return *this;
}

NumericFieldElement NumericFieldElement::conjugate(int j, int k) const {
  if (j < 1 || j > 2 || k < 1 || k > 4)
    throw error("conjugation index out of range");
  NumericFieldElement r(m_);
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      const Rat& c = c_[4 * a + b];
      if (c == 0) continue;
      unsigned ipow = (a + static_cast<unsigned>(k - 1) * b) % 4;
      bool neg = (j == 2 && a == 1);
      if (ipow >= 2) neg = !neg;
      r.c_[4 * (ipow % 2) + b] += neg ? Rat(-c) : c;
    }
  return r;
}

std::array<NumericFieldElement, 8> numeric_basis(const Int& m) {
  auto mono = [&](unsigned a, unsigned b, const Rat& c = Rat(1)) {
    return NumericFieldElement::basis_mono(m, a, b, c);
  };
  const Rat half(1, 2);
  std::array<NumericFieldElement, 8> b{
      mono(0, 0), mono(0, 1), mono(0, 2), mono(0, 3),
      NumericFieldElement(m), NumericFieldElement(m),
      NumericFieldElement(m), NumericFieldElement(m)};
  unsigned rem = mpz_fdiv_ui(m.get_mpz_t(), 4);
  if (rem == 2) {
    b[4] = mono(1, 0);
    b[5] = mono(0, 1, half) + mono(1, 1, half) + mono(0, 3, half);
    b[6] = mono(0, 2, half) + mono(1, 2, half);
    b[7] = mono(0, 3, half) + mono(1, 3, half);
  } else if (rem == 3) {
    b[4] = mono(1, 0, half) + mono(0, 2, half);
    b[5] = mono(1, 1, half) + mono(0, 3, half);
    b[6] = mono(0, 0, half) + mono(1, 2, half);
    b[7] = mono(0, 1, half) + mono(1, 3, half);
  } else {
    throw error("m must be 2 or 3 mod 4");
  }
  return b;
}

NumericFieldElement numeric_element(const Int& m, const std::array<Int, 8>& x) {
  auto basis = numeric_basis(m);
  NumericFieldElement alpha(m);
  for (unsigned l = 0; l < 8; ++l) {
    NumericFieldElement scaled(m);
    for (unsigned a = 0; a < 2; ++a)
      for (unsigned b = 0; b < 4; ++b)
        scaled.coord(a, b) = basis[l].coord(a, b) * Rat(x[l]);
    alpha += scaled;
  }
  return alpha;
}

namespace {

std::array<NumericFieldElement, 8> conjugates(const NumericFieldElement& alpha) {
  std::array<NumericFieldElement, 8> c{
      NumericFieldElement(alpha.m()), NumericFieldElement(alpha.m()),
      NumericFieldElement(alpha.m()), NumericFieldElement(alpha.m()),
      NumericFieldElement(alpha.m()), NumericFieldElement(alpha.m()),
      NumericFieldElement(alpha.m()), NumericFieldElement(alpha.m())};
  unsigned idx = 0;
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 4; ++k) c[idx++] = alpha.conjugate(j, k);
  return c;
}

}  // namespace

std::array<Rat, 9> numeric_min_poly(const NumericFieldElement& alpha) {
  auto conj = conjugates(alpha);
  std::vector<NumericFieldElement> coeff{
      NumericFieldElement::basis_mono(alpha.m(), 0, 0)};
  for (const auto& root : conj) {
    std::vector<NumericFieldElement> next(coeff.size() + 1,
                                          NumericFieldElement(alpha.m()));
    for (std::size_t d = 0; d < coeff.size(); ++d) {
      next[d + 1] += coeff[d];
      next[d] += -(root * coeff[d]);
    }
    coeff = std::move(next);
  }
  std::array<Rat, 9> out;
  for (unsigned d = 0; d <= 8; ++d) {
    if (!coeff[d].is_rational())
      throw not_rational("characteristic coefficient not rational");
    out[d] = coeff[d].rational_part();
  }
  return out;
}

Int direct_index(const Int& m, const std::array<Int, 8>& x) {
  unsigned rem = mpz_fdiv_ui(m.get_mpz_t(), 4);
  if (rem != 2 && rem != 3) throw error("m must be 2 or 3 mod 4");
  NumericFieldElement alpha = numeric_element(m, x);
  auto c = conjugates(alpha);
  NumericFieldElement prod =
      NumericFieldElement::basis_mono(m, 0, 0);  // 1
  for (unsigned s = 0; s < 8; ++s)
    for (unsigned t = s + 1; t < 8; ++t) {
      NumericFieldElement d = c[s] - c[t];
      if (d.is_zero())
        throw not_primitive("conjugates " + std::to_string(s) + " and " +
                            std::to_string(t) + " coincide");
      prod *= d * d;
    }
  if (!prod.is_rational())
    throw not_rational("discriminant of element is not rational");
  Rat disc = prod.rational_part();
  if (disc.get_den() != 1)
    throw error("element discriminant is not an integer");
  Int d_alpha = abs(disc.get_num());
  Int dk = pow2(rem == 2 ? 18 : 16) * m * m * m * m * m * m;
  if (!mpz_divisible_p(d_alpha.get_mpz_t(), dk.get_mpz_t()))
    throw non_square_quotient("|D(alpha)| not divisible by |D_K|");
  Int quot;
  mpz_divexact(quot.get_mpz_t(), d_alpha.get_mpz_t(), dk.get_mpz_t());
  Int root, rest;
  mpz_sqrtrem(root.get_mpz_t(), rest.get_mpz_t(), quot.get_mpz_t());
  if (rest != 0)
    throw non_square_quotient("|D(alpha)|/|D_K| is not a perfect square");
  return root;
}

CrosscheckReport crosscheck(const QFactorSet& q, const Int& m, int samples,
                            int bound, std::uint64_t seed, int threads) {
  unsigned rem = mpz_fdiv_ui(m.get_mpz_t(), 4);
  if (static_cast<int>(rem) != case_residue(q.tag))
    throw case_mismatch("m does not match the case of the Q factors");
  CrosscheckReport rep;
  rep.m = m;
  rep.requested = samples;
  rep.bound = bound;
  rep.seed = seed;

  Int n0 = (m - case_residue(q.tag)) / 4;

  // Draw all coordinate vectors up front so the sampling sequence is
  // independent of the thread count.
  std::mt19937_64 rng(seed);
  auto draw = [&]() {
    // Uniform in [-bound, bound] without distribution objects, for
    // bit-reproducibility across standard libraries.
    return Int(static_cast<long>(rng() % (2 * bound + 1)) - bound);
  };
  std::vector<std::array<Int, 8>> xs(samples);
  for (auto& x : xs)
    for (auto& xi : x) xi = draw();

  std::vector<std::optional<Int>> results(samples);  // nullopt = skipped
  std::vector<std::string> errors(samples);

  auto worker = [&](int lo, int hi) {
    for (int s = lo; s < hi; ++s) {
      try {
        Int direct = direct_index(m, xs[s]);
        std::array<Int, 7> tail;
        for (int i = 0; i < 7; ++i) tail[i] = xs[s][i + 1];
        Int symbolic = index_value(q, n0, tail);
        if (direct != symbolic) {
          std::string dump = "crosscheck mismatch at m=" + m.get_str() + " x=(";
          for (int i = 0; i < 8; ++i)
            dump += xs[s][i].get_str() + (i < 7 ? "," : ")");
          dump += ": direct=" + direct.get_str() +
                  " symbolic=" + symbolic.get_str();
          errors[s] = dump;
        }
        results[s] = direct;
      } catch (const not_primitive&) {
        results[s] = std::nullopt;
      }
    }
  };

  if (threads <= 1 || samples < 2) {
    worker(0, samples);
  } else {
    int nt = std::min<int>(threads, samples);
    std::vector<std::thread> pool;
    int chunk = (samples + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
      int lo = t * chunk, hi = std::min(samples, (t + 1) * chunk);
      if (lo < hi) pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  for (int s = 0; s < samples; ++s) {
    if (!errors[s].empty()) throw mismatch_error(errors[s]);
    if (!results[s]) {
      ++rep.skipped;
      continue;
    }
    ++rep.evaluated;
    if (rep.min_index == 0 || *results[s] < rep.min_index)
      rep.min_index = *results[s];
    if (rep.examples.size() < 5)
      rep.examples.push_back(CrosscheckSample{xs[s], *results[s]});
  }
  return rep;
}

}  // namespace octic
