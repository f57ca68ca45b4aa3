#include <doctest.h>

#include "octic/polynomial.hpp"
#include "test_util.hpp"

using namespace octic;

namespace {

IntPolynomial nv() { return IntPolynomial::variable(vars::n()); }

}  // namespace

TEST_CASE("basic arithmetic identities") {
  IntPolynomial n = nv();
  CHECK((n + 1) * (n - 1) == n * n - 1);
  CHECK((n + 1) * (n - 1) == IntPolynomial::parse("n^2 - 1"));

  IntPolynomial p = IntPolynomial::parse("3*n^2 - 2*n + 7");
  CHECK(p * IntPolynomial(0) == IntPolynomial(0));
  CHECK(p * IntPolynomial(1) == p);

  IntPolynomial two_n1 = IntPolynomial(2) * n + 1;
  CHECK(two_n1 * two_n1 == IntPolynomial::parse("4*n^2 + 4*n + 1"));
}

TEST_CASE("canonical printing and parsing round-trip") {
  IntPolynomial p = IntPolynomial::parse("8*t5^2 + 8*t7^2 + 8*t7 + 9");
  CHECK(p.to_string() == "8*t5^2 + 8*t7^2 + 8*t7 + 9");
  CHECK(IntPolynomial::parse(p.to_string()) == p);

  IntPolynomial q = IntPolynomial::parse("-n + 2");
  CHECK(q.to_string() == "-n + 2");
  CHECK(IntPolynomial(0).to_string() == "0");
  CHECK(IntPolynomial::parse("0") == IntPolynomial(0));
  CHECK(IntPolynomial::parse("x2*x3 - x2") ==
        IntPolynomial::variable(vars::x(2)) * IntPolynomial::variable(vars::x(3)) -
            IntPolynomial::variable(vars::x(2)));
}

TEST_CASE("substitution") {
  VarId x5 = vars::x(5), t5 = vars::t(5), m = vars::m(), n = vars::n();

  IntPolynomial p = IntPolynomial::variable(x5, 2);
  IntPolynomial r = p.substitute({{x5, IntPolynomial(2) * IntPolynomial::variable(t5)}});
  CHECK(r == IntPolynomial::parse("4*t5^2"));

  // m |-> 4n+2 on a polynomial in m.
  IntPolynomial mp = IntPolynomial::variable(m, 6).scaled(pow2(24));
  IntPolynomial sub = mp.substitute({{m, IntPolynomial(4) * IntPolynomial::variable(n) + 2}});
  IntPolynomial expect = (IntPolynomial(4) * IntPolynomial::variable(n) + 2).pow(6).scaled(pow2(24));
  CHECK(sub == expect);

  // t5 |-> 4t5'+2 acts only on t5.
  IntPolynomial t = IntPolynomial::variable(t5);
  IntPolynomial rr = t.substitute(
      {{t5, IntPolynomial(4) * IntPolynomial::variable(vars::t(5, 1)) + 2}});
  CHECK(rr.to_string() == "4*t5' + 2");

  // Unbound variables pass through.
  IntPolynomial both = IntPolynomial::variable(x5) + nv();
  CHECK(both.substitute({{x5, IntPolynomial(7)}}) == nv() + 7);

  // Simultaneous semantics: swapping variables must not cascade.
  VarId x2 = vars::x(2), x3 = vars::x(3);
  IntPolynomial swap_src =
      IntPolynomial::variable(x2) + IntPolynomial::variable(x3, 2);
  IntPolynomial swapped = swap_src.substitute(
      {{x2, IntPolynomial::variable(x3)}, {x3, IntPolynomial::variable(x2)}});
  CHECK(swapped == IntPolynomial::variable(x3) + IntPolynomial::variable(x2, 2));
}

TEST_CASE("exact division") {
  IntPolynomial n = nv();
  IntPolynomial d = (IntPolynomial(2) * n + 1).pow(2).scaled(16);
  IntPolynomial x2 = IntPolynomial::variable(vars::x(2));
  IntPolynomial p = d * (x2 * x2 + 1);
  CHECK(exact_div(p, d) == x2 * x2 + 1);

  CHECK_THROWS_AS(exact_div(n * n + 1, n), not_divisible);
  try {
    exact_div(n * n + 1, n);
  } catch (const not_divisible& e) {
    CHECK(e.remainder == IntPolynomial(1));
  }
  // Constant divisor short-circuit.
  CHECK(exact_div(p.scaled(6), IntPolynomial(6)) == p);
}

TEST_CASE("ring axioms on random triples") {
  testutil::PolyGen gen(12345, {vars::x(2), vars::x(3), vars::n()});
  for (int iter = 0; iter < 1000; ++iter) {
    IntPolynomial p = gen(), q = gen(), r = gen();
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == IntPolynomial(0));
  }
}

TEST_CASE("exact_div recovers factor on random products") {
  testutil::PolyGen gen(777, {vars::x(2), vars::x(3), vars::n()});
  int done = 0;
  while (done < 300) {
    IntPolynomial p = gen(), d = gen();
    if (d.is_zero()) continue;
    CHECK(exact_div(p * d, d) == p);
    ++done;
  }
}

TEST_CASE("substitute is a ring homomorphism") {
  testutil::PolyGen gen(4242, {vars::x(2), vars::x(3)});
  std::map<VarId, IntPolynomial> bind{
      {vars::x(2), IntPolynomial::parse("2*t2 + 1")},
      {vars::x(3), IntPolynomial::parse("2*t3")}};
  for (int iter = 0; iter < 300; ++iter) {
    IntPolynomial p = gen(), q = gen();
    CHECK((p * q).substitute(bind) == p.substitute(bind) * q.substitute(bind));
    CHECK((p + q).substitute(bind) == p.substitute(bind) + q.substitute(bind));
  }
}

TEST_CASE("specialize") {
  IntPolynomial p = IntPolynomial::parse("n^2 + 3*n + 1");
  CHECK(p.specialize({{vars::n(), Int(5)}}) == 41);
  CHECK(IntPolynomial(0).specialize({}) == 0);
  CHECK_THROWS_AS(p.specialize({}), unbound_variable);

  // specialize(2^24 m^6, m=2) = 2^30
  IntPolynomial big = IntPolynomial::variable(vars::m(), 6).scaled(pow2(24));
  CHECK(big.specialize({{vars::m(), Int(2)}}) == pow2(30));
}

TEST_CASE("dyadic normalization") {
  IntPolynomial n = nv();
  DyadicPolynomial d(n.scaled(4) + 2, 3);  // (4n+2)/8 -> (2n+1)/4
  CHECK(d.denom_exp() == 2);
  CHECK(d.numerator() == n.scaled(2) + 1);

  DyadicPolynomial z(IntPolynomial(0), 5);
  CHECK(z.denom_exp() == 0);
  CHECK(z.is_zero());

  DyadicPolynomial one_half(IntPolynomial(1), 1);
  CHECK((one_half + one_half) == DyadicPolynomial(IntPolynomial(1)));
  CHECK((one_half * DyadicPolynomial(IntPolynomial(2))).is_integral());

  // Exact specialization with the integrality check.
  DyadicPolynomial half_sq(n * n + n, 1);  // n(n+1)/2 integer-valued
  CHECK(half_sq.specialize({{vars::n(), Int(5)}}) == 15);
  DyadicPolynomial bad(n, 1);
  CHECK_THROWS_AS(bad.specialize({{vars::n(), Int(5)}}), not_integral);
}

TEST_CASE("graded-lex ordering is canonical") {
  // Leading term has the highest total degree; ties break lexicographically
  // with lower variable ids more significant.
  IntPolynomial p = IntPolynomial::parse("x2*x3 + x2^2 + n^3 + x3 + 1");
  CHECK(p.to_string() == "n^3 + x2^2 + x2*x3 + x3 + 1");
  CHECK(p.leading_term().mono == Monomial(vars::n(), 3));
}
