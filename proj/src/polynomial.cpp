#include "octic/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace octic {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(VarId v, unsigned e) {
  if (e > 0) bump(v, e);
}

void Monomial::bump(VarId v, unsigned e) {
  if (e == 0) return;
  auto it = std::lower_bound(
      ve_.begin(), ve_.end(), v,
      [](const VarExp& a, VarId b) { return a.var < b; });
  if (it != ve_.end() && it->var == v) {
    unsigned ne = it->exp + e;
    if (ne > 255) throw error("monomial exponent overflow");
    it->exp = static_cast<std::uint8_t>(ne);
  } else {
    if (e > 255) throw error("monomial exponent overflow");
    ve_.insert(it, VarExp{v, static_cast<std::uint8_t>(e)});
  }
  deg_ = static_cast<std::uint16_t>(deg_ + e);
}

unsigned Monomial::exponent(VarId v) const {
  for (const auto& p : ve_)
    if (p.var == v) return p.exp;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.ve_.reserve(ve_.size() + o.ve_.size());
  auto a = ve_.begin(), b = o.ve_.begin();
  unsigned deg = 0;
  while (a != ve_.end() || b != o.ve_.end()) {
    if (b == o.ve_.end() || (a != ve_.end() && a->var < b->var)) {
      r.ve_.push_back(*a++);
    } else if (a == ve_.end() || b->var < a->var) {
      r.ve_.push_back(*b++);
    } else {
      unsigned e = a->exp + b->exp;
      if (e > 255) throw error("monomial exponent overflow");
      r.ve_.push_back(VarExp{a->var, static_cast<std::uint8_t>(e)});
      ++a, ++b;
    }
    deg += r.ve_.back().exp;
  }
  r.deg_ = static_cast<std::uint16_t>(deg);
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial r;
  auto a = ve_.begin();
  unsigned deg = 0;
  for (const auto& q : o.ve_) {
    while (a != ve_.end() && a->var < q.var) {
      r.ve_.push_back(*a);
      deg += a->exp;
      ++a;
    }
    if (a == ve_.end() || a->var != q.var || a->exp < q.exp) return std::nullopt;
    if (a->exp > q.exp) {
      r.ve_.push_back(VarExp{a->var, static_cast<std::uint8_t>(a->exp - q.exp)});
      deg += a->exp - q.exp;
    }
    ++a;
  }
  for (; a != ve_.end(); ++a) {
    r.ve_.push_back(*a);
    deg += a->exp;
  }
  r.deg_ = static_cast<std::uint16_t>(deg);
  return r;
}

Monomial Monomial::pow(unsigned e) const {
  Monomial r;
  if (e == 0) return r;
  unsigned deg = 0;
  for (const auto& p : ve_) {
    unsigned ne = p.exp * e;
    if (ne > 255) throw error("monomial exponent overflow");
    r.ve_.push_back(VarExp{p.var, static_cast<std::uint8_t>(ne)});
    deg += ne;
  }
  r.deg_ = static_cast<std::uint16_t>(deg);
  return r;
}

Monomial Monomial::without(VarId v) const {
  Monomial r;
  unsigned deg = 0;
  for (const auto& p : ve_)
    if (p.var != v) {
      r.ve_.push_back(p);
      deg += p.exp;
    }
  r.deg_ = static_cast<std::uint16_t>(deg);
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (deg_ != o.deg_) return deg_ <=> o.deg_;
  // Equal degree: lexicographic, smaller variable id is more significant and
  // a higher exponent there makes the monomial larger.
  auto a = ve_.begin(), b = o.ve_.begin();
  while (a != ve_.end() && b != o.ve_.end()) {
    if (a->var != b->var)
      return a->var < b->var ? std::strong_ordering::greater
                             : std::strong_ordering::less;
    if (a->exp != b->exp) return a->exp <=> b->exp;
    ++a, ++b;
  }
  if (a != ve_.end()) return std::strong_ordering::greater;
  if (b != o.ve_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& p : ve_) {
    if (!s.empty()) s += "*";
    s += vars::name(p.var);
    if (p.exp > 1) s += "^" + std::to_string(p.exp);
  }
  return s;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(long c) {
  if (c != 0) terms_.push_back(Term{Monomial(), Int(c)});
}

IntPolynomial::IntPolynomial(const Int& c) {
  if (c != 0) terms_.push_back(Term{Monomial(), c});
}

IntPolynomial IntPolynomial::variable(VarId v, unsigned e) {
  IntPolynomial p;
  p.terms_.push_back(Term{Monomial(v, e), Int(1)});
  return p;
}

IntPolynomial IntPolynomial::term(const Int& c, const Monomial& m) {
  IntPolynomial p;
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

bool IntPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

const Int& IntPolynomial::constant_value() const {
  static const Int zero(0);
  if (terms_.empty()) return zero;
  if (!is_constant()) throw error("polynomial is not constant: " + to_string());
  return terms_[0].coeff;
}

unsigned IntPolynomial::degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

unsigned IntPolynomial::degree_in(VarId v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

const IntPolynomial::Term& IntPolynomial::leading_term() const {
  if (terms_.empty()) throw error("leading term of zero polynomial");
  return terms_.front();
}

bool IntPolynomial::contains_var(VarId v) const {
  for (const auto& t : terms_)
    if (t.mono.exponent(v) > 0) return true;
  return false;
}

std::set<VarId> IntPolynomial::variables() const {
  std::set<VarId> s;
  for (const auto& t : terms_)
    for (const auto& p : t.mono.entries()) s.insert(p.var);
  return s;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge two sorted term lists (descending), combining equal monomials.
std::vector<IntPolynomial::Term> merge_terms(
    const std::vector<IntPolynomial::Term>& a,
    const std::vector<IntPolynomial::Term>& b, bool negate_b) {
  std::vector<IntPolynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->mono > j->mono)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->mono > i->mono) {
      out.push_back(*j);
      if (negate_b) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Int c = negate_b ? Int(i->coeff - j->coeff) : Int(i->coeff + j->coeff);
      if (c != 0) out.push_back(IntPolynomial::Term{i->mono, std::move(c)});
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  r.terms_ = merge_terms(a.terms_, b.terms_, false);
  return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  r.terms_ = merge_terms(a.terms_, b.terms_, true);
  return r;
}

IntPolynomial IntPolynomial::from_map(std::map<Monomial, Int>&& acc) {
  IntPolynomial r;
  r.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0)
      r.terms_.push_back(Term{it->first, std::move(it->second)});
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  // Multiplying by a fixed monomial preserves graded-lex order, so the
  // single-term case needs no re-sort.
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& many = a.terms_.size() == 1 ? b.terms_ : a.terms_;
    r.terms_.reserve(many.size());
    for (const auto& t : many)
      r.terms_.push_back(
          IntPolynomial::Term{t.mono * single.mono, Int(t.coeff * single.coeff)});
    return r;
  }
  std::map<Monomial, Int> acc;
  const auto& outer = a.terms_.size() <= b.terms_.size() ? a.terms_ : b.terms_;
  const auto& inner = a.terms_.size() <= b.terms_.size() ? b.terms_ : a.terms_;
  for (const auto& ta : outer)
    for (const auto& tb : inner) acc[ta.mono * tb.mono] += ta.coeff * tb.coeff;
  return IntPolynomial::from_map(std::move(acc));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  *this = *this * o;
  return *this;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial r(1);
  IntPolynomial base(*this);
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

IntPolynomial IntPolynomial::substitute(
    const std::map<VarId, IntPolynomial>& bindings) const {
  if (bindings.empty()) return *this;
  // When no right-hand side mentions a bound variable, substitution one
  // variable at a time is equivalent to simultaneous substitution and far
  // cheaper; otherwise fall back to per-term expansion.
  bool disjoint = true;
  for (const auto& [v, rhs] : bindings) {
    for (const auto& [w, unused] : bindings)
      if (rhs.contains_var(w)) {
        disjoint = false;
        break;
      }
    if (!disjoint) break;
  }

  if (disjoint) {
    IntPolynomial cur(*this);
    for (const auto& [v, rhs] : bindings) {
      if (!cur.contains_var(v)) continue;
      unsigned dmax = cur.degree_in(v);
      std::vector<IntPolynomial> powers(dmax + 1);
      powers[0] = IntPolynomial(1);
      for (unsigned e = 1; e <= dmax; ++e) powers[e] = powers[e - 1] * rhs;
      std::vector<IntPolynomial> buckets(dmax + 1);
      for (const auto& t : cur.terms_) {
        unsigned e = t.mono.exponent(v);
        buckets[e].terms_.push_back(Term{t.mono.without(v), t.coeff});
      }
      IntPolynomial next;
      for (unsigned e = 0; e <= dmax; ++e) {
        if (buckets[e].terms_.empty()) continue;
        std::sort(buckets[e].terms_.begin(), buckets[e].terms_.end(),
                  [](const auto& x, const auto& y) { return x.mono > y.mono; });
        // Equal monomials may appear after dropping v; recombine.
        IntPolynomial bucket;
        for (auto& t : buckets[e].terms_) {
          if (!bucket.terms_.empty() && bucket.terms_.back().mono == t.mono)
            bucket.terms_.back().coeff += t.coeff;
          else
            bucket.terms_.push_back(std::move(t));
        }
        std::erase_if(bucket.terms_, [](const Term& t) { return t.coeff == 0; });
        next += bucket * powers[e];
      }
      cur = std::move(next);
    }
    return cur;
  }

  IntPolynomial out;
  for (const auto& t : terms_) {
    IntPolynomial prod(t.coeff);
    for (const auto& p : t.mono.entries()) {
      auto it = bindings.find(p.var);
      if (it == bindings.end())
        prod *= IntPolynomial::variable(p.var, p.exp);
      else
        prod *= it->second.pow(p.exp);
    }
    out += prod;
  }
  return out;
}

Int IntPolynomial::specialize(const std::map<VarId, Int>& bindings) const {
  // Per-variable power cache.
  std::map<VarId, std::vector<Int>> powers;
  Int total(0);
  for (const auto& t : terms_) {
    Int v = t.coeff;
    for (const auto& p : t.mono.entries()) {
      auto it = bindings.find(p.var);
      if (it == bindings.end())
        throw unbound_variable("specialize: no binding for " +
                               vars::name(p.var));
      auto& pw = powers[p.var];
      if (pw.empty()) pw.push_back(Int(1));
      while (pw.size() <= p.exp) pw.push_back(Int(pw.back() * it->second));
      v *= pw[p.exp];
    }
    total += v;
  }
  return total;
}

IntPolynomial IntPolynomial::reduce_mod(const Int& modulus) const {
  IntPolynomial r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Int c;
    mpz_mod(c.get_mpz_t(), t.coeff.get_mpz_t(), modulus.get_mpz_t());
    if (c != 0) r.terms_.push_back(Term{t.mono, std::move(c)});
  }
  return r;
}

IntPolynomial IntPolynomial::scaled(const Int& c) const {
  IntPolynomial r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, Int(t.coeff * c)});
  return r;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coeff < 0;
    Int a = abs(t.coeff);
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono = t.mono.to_string();
    if (mono.empty()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += mono;
    }
  }
  return s;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::optional<Int> integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) return std::nullopt;
    return Int(s.substr(start, pos - start));
  }

  std::optional<std::string> name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '\''))
      ++pos;
    if (pos == start) return std::nullopt;
    return s.substr(start, pos - start);
  }

  // factor := integer | var ('^' integer)?
  IntPolynomial factor() {
    skip_ws();
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      auto c = integer();
      return IntPolynomial(*c);
    }
    auto id = name();
    if (!id) throw error("parse error at offset " + std::to_string(pos));
    VarId v = vars::id(*id);
    unsigned e = 1;
    if (eat('^')) {
      auto c = integer();
      if (!c) throw error("parse error: exponent expected");
      e = static_cast<unsigned>(c->get_ui());
    }
    return IntPolynomial::variable(v, e);
  }

  IntPolynomial term() {
    IntPolynomial t = factor();
    while (eat('*')) t *= factor();
    return t;
  }

  IntPolynomial poly() {
    skip_ws();
    bool neg = eat('-');
    if (!neg) eat('+');
    IntPolynomial p = term();
    if (neg) p = -p;
    for (;;) {
      skip_ws();
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        break;
      }
    }
    skip_ws();
    if (pos != s.size())
      throw error("parse error: trailing input at offset " + std::to_string(pos));
    return p;
  }
};

}  // namespace

IntPolynomial IntPolynomial::parse(const std::string& text) {
  Parser p(text);
  return p.poly();
}

// ---------------------------------------------------------------------------
// exact division

namespace {

// Divide a polynomial, grouped as univariate in v over monomial "keys", by a
// univariate divisor in v.  Returns false (and fills rem) on failure.
bool div_univariate(const IntPolynomial& p, const IntPolynomial& d, VarId v,
                    IntPolynomial& quotient, IntPolynomial& rem) {
  // Group p by the monomial with v removed; each group is univariate in v.
  std::map<Monomial, std::map<unsigned, Int, std::greater<>>> groups;
  for (const auto& t : p.terms())
    groups[t.mono.without(v)][t.mono.exponent(v)] = t.coeff;

  std::vector<std::pair<unsigned, Int>> div;  // descending exponent
  for (const auto& t : d.terms()) div.emplace_back(t.mono.exponent(v), t.coeff);

  std::map<Monomial, Int> qacc, racc;
  for (auto& [key, num] : groups) {
    // Synthetic long division of num by div.
    while (!num.empty()) {
      auto lead = num.begin();  // highest exponent
      if (lead->first < div.front().first) break;
      Int c;
      if (!mpz_divisible_p(lead->second.get_mpz_t(),
                           div.front().second.get_mpz_t()))
        break;
      mpz_divexact(c.get_mpz_t(), lead->second.get_mpz_t(),
                   div.front().second.get_mpz_t());
      unsigned e = lead->first - div.front().first;
      qacc[key * Monomial(v, e)] += c;
      for (const auto& [de, dc] : div) {
        Int& slot = num[de + e];
        slot -= dc * c;
        if (slot == 0) num.erase(de + e);
      }
    }
    for (const auto& [e, c] : num) racc[key * Monomial(v, e)] += c;
  }
  rem = IntPolynomial::from_map(std::move(racc));
  if (!rem.is_zero()) return false;
  quotient = IntPolynomial::from_map(std::move(qacc));
  return true;
}

}  // namespace

IntPolynomial exact_div(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw error("exact_div: division by zero");
  if (p.is_zero()) return IntPolynomial();

  if (d.term_count() == 1) {
    const auto& dt = d.leading_term();
    IntPolynomial q;
    std::map<Monomial, Int> racc;
    q.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms()) {
      auto mono = t.mono.divide(dt.mono);
      if (mono && mpz_divisible_p(t.coeff.get_mpz_t(), dt.coeff.get_mpz_t())) {
        Int c;
        mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), dt.coeff.get_mpz_t());
        // Dividing by a fixed monomial preserves descending order.
        q.terms_.push_back(IntPolynomial::Term{*mono, std::move(c)});
      } else {
        racc[t.mono] += t.coeff;
      }
    }
    if (!racc.empty())
      throw not_divisible("exact_div: nonzero remainder",
                          IntPolynomial::from_map(std::move(racc)));
    return q;
  }

  auto dvars = d.variables();
  if (dvars.size() == 1) {
    IntPolynomial q, rem;
    if (div_univariate(p, d, *dvars.begin(), q, rem)) return q;
    throw not_divisible("exact_div: nonzero remainder", std::move(rem));
  }

  // General leading-term division; the graded order makes it terminate.
  IntPolynomial rem(p);
  IntPolynomial q;
  const auto& lt = d.leading_term();
  while (!rem.is_zero()) {
    const auto& rt = rem.leading_term();
    auto mono = rt.mono.divide(lt.mono);
    if (!mono || !mpz_divisible_p(rt.coeff.get_mpz_t(), lt.coeff.get_mpz_t()))
      throw not_divisible("exact_div: nonzero remainder", std::move(rem));
    Int c;
    mpz_divexact(c.get_mpz_t(), rt.coeff.get_mpz_t(), lt.coeff.get_mpz_t());
    IntPolynomial t = IntPolynomial::term(c, *mono);
    q += t;
    rem -= t * d;
  }
  return q;
}

// ---------------------------------------------------------------------------
// DyadicPolynomial

DyadicPolynomial::DyadicPolynomial(IntPolynomial num) : num_(std::move(num)) {}

DyadicPolynomial::DyadicPolynomial(IntPolynomial num, unsigned denom_exp)
    : num_(std::move(num)), k_(denom_exp) {
  normalize();
}

void DyadicPolynomial::normalize() {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  if (k_ == 0) return;
  unsigned v = k_;
  for (const auto& t : num_.terms()) {
    v = std::min(v, val2(t.coeff));
    if (v == 0) return;
  }
  Int d = pow2(v);
  num_ = exact_div(num_, IntPolynomial(d));
  k_ -= v;
}

DyadicPolynomial DyadicPolynomial::operator-() const {
  DyadicPolynomial r;
  r.num_ = -num_;
  r.k_ = k_;
  return r;
}

DyadicPolynomial operator+(const DyadicPolynomial& a, const DyadicPolynomial& b) {
  unsigned k = std::max(a.k_, b.k_);
  IntPolynomial num = a.num_.scaled(pow2(k - a.k_)) + b.num_.scaled(pow2(k - b.k_));
  return DyadicPolynomial(std::move(num), k);
}

DyadicPolynomial operator-(const DyadicPolynomial& a, const DyadicPolynomial& b) {
  return a + (-b);
}

DyadicPolynomial operator*(const DyadicPolynomial& a, const DyadicPolynomial& b) {
  return DyadicPolynomial(a.num_ * b.num_, a.k_ + b.k_);
}

DyadicPolynomial& DyadicPolynomial::operator+=(const DyadicPolynomial& o) {
  *this = *this + o;
  return *this;
}

Int DyadicPolynomial::specialize(const std::map<VarId, Int>& bindings) const {
  Int v = num_.specialize(bindings);
  if (k_ == 0) return v;
  Int d = pow2(k_);
  if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
    throw not_integral("dyadic value is not an integer: " + v.get_str() +
                       "/2^" + std::to_string(k_));
  Int q;
  mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::string DyadicPolynomial::to_string() const {
  if (k_ == 0) return num_.to_string();
  std::string denom = k_ == 1 ? "2" : "2^" + std::to_string(k_);
  return "(" + num_.to_string() + ")/" + denom;
}

}  // namespace octic
