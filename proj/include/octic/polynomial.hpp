#ifndef OCTIC_POLYNOMIAL_HPP
#define OCTIC_POLYNOMIAL_HPP

#include <boost/container/small_vector.hpp>

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "octic/common.hpp"
#include "octic/varset.hpp"

namespace octic {

// Power product over the declared variable universe.  Entries are sorted by
// variable id and never carry a zero exponent, so equal monomials are
// structurally equal.
class Monomial {
 public:
  struct VarExp {
    VarId var;
    std::uint8_t exp;
    friend bool operator==(const VarExp&, const VarExp&) = default;
  };

  Monomial() = default;
  explicit Monomial(VarId v, unsigned e = 1);

  bool is_unit() const { return ve_.empty(); }
  unsigned degree() const { return deg_; }
  unsigned exponent(VarId v) const;
  const auto& entries() const { return ve_; }

  Monomial operator*(const Monomial& o) const;
  // Exact quotient, or nullopt when some exponent would go negative.
  std::optional<Monomial> divide(const Monomial& o) const;
  Monomial pow(unsigned e) const;
  Monomial without(VarId v) const;

  bool operator==(const Monomial& o) const { return ve_ == o.ve_; }

  // Graded lexicographic: degree first, then exponent vectors compared in
  // variable-id order (id 0 most significant).
  std::strong_ordering operator<=>(const Monomial& o) const;

  std::string to_string() const;  // "" for the unit monomial

 private:
  boost::container::small_vector<VarExp, 8> ve_;
  std::uint16_t deg_ = 0;

  void bump(VarId v, unsigned e);  // builder helper, keeps order
  friend class IntPolynomial;
};

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients.  Terms are kept sorted in descending graded-lex order with no
// zero coefficients, so equality is structural and printing is canonical.
class IntPolynomial {
 public:
  struct Term {
    Monomial mono;
    Int coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  IntPolynomial() = default;
  IntPolynomial(long c);           // NOLINT: implicit by design
  IntPolynomial(const Int& c);     // NOLINT
  static IntPolynomial variable(VarId v, unsigned e = 1);
  static IntPolynomial term(const Int& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Int& constant_value() const;  // throws unless constant (0 ok)
  std::size_t term_count() const { return terms_.size(); }
  unsigned degree() const;
  unsigned degree_in(VarId v) const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const;

  bool contains_var(VarId v) const;
  std::set<VarId> variables() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial pow(unsigned e) const;

  bool operator==(const IntPolynomial& o) const { return terms_ == o.terms_; }

  // Simultaneous substitution; unbound variables pass through.  Binding
  // right-hand sides may freely use bound variables.
  IntPolynomial substitute(const std::map<VarId, IntPolynomial>& bindings) const;

  // Exact evaluation; throws unbound_variable if a variable has no binding.
  Int specialize(const std::map<VarId, Int>& bindings) const;

  // Coefficients reduced into [0, modulus).
  IntPolynomial reduce_mod(const Int& modulus) const;

  // Multiply every coefficient.
  IntPolynomial scaled(const Int& c) const;

  std::string to_string() const;
  static IntPolynomial parse(const std::string& text);

  // Build from an accumulator map (ascending); zeros are dropped.
  static IntPolynomial from_map(std::map<Monomial, Int>&& acc);

 private:
  std::vector<Term> terms_;  // descending graded-lex, no zero coefficients

  friend IntPolynomial exact_div(const IntPolynomial&, const IntPolynomial&);
};

// Exact division witness failure.
struct not_divisible : error {
  IntPolynomial remainder;
  not_divisible(const std::string& what, IntPolynomial rem)
      : error(what), remainder(std::move(rem)) {}
};

// Exact quotient p / d; throws not_divisible (with the offending remainder)
// when d does not divide p.
IntPolynomial exact_div(const IntPolynomial& p, const IntPolynomial& d);

// Value = num / 2^k, normalized so that k == 0 or some coefficient is odd.
class DyadicPolynomial {
 public:
  DyadicPolynomial() = default;
  DyadicPolynomial(IntPolynomial num);  // NOLINT: k = 0
  DyadicPolynomial(IntPolynomial num, unsigned denom_exp);
  DyadicPolynomial(long c) : DyadicPolynomial(IntPolynomial(c)) {}  // NOLINT

  static DyadicPolynomial half(IntPolynomial num) {
    return DyadicPolynomial(std::move(num), 1);
  }

  const IntPolynomial& numerator() const { return num_; }
  unsigned denom_exp() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return k_ == 0; }

  DyadicPolynomial operator-() const;
  friend DyadicPolynomial operator+(const DyadicPolynomial&, const DyadicPolynomial&);
  friend DyadicPolynomial operator-(const DyadicPolynomial&, const DyadicPolynomial&);
  friend DyadicPolynomial operator*(const DyadicPolynomial&, const DyadicPolynomial&);
  DyadicPolynomial& operator+=(const DyadicPolynomial& o);

  bool operator==(const DyadicPolynomial& o) const {
    return k_ == o.k_ && num_ == o.num_;
  }

  // Exact evaluation at integer points; throws not_integral when the value
  // is not an integer.
  Int specialize(const std::map<VarId, Int>& bindings) const;

  std::string to_string() const;

 private:
  IntPolynomial num_;
  unsigned k_ = 0;

  void normalize();
};

}  // namespace octic

#endif
