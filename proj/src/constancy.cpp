#include "octic/constancy.hpp"

#include <algorithm>

namespace octic {

Int stirling2(unsigned d, unsigned j) {
  if (j > d) return 0;
  if (d == 0) return j == 0 ? 1 : 0;
  if (j == 0) return 0;
  // Row-by-row recurrence S(d,j) = j S(d-1,j) + S(d-1,j-1).
  std::vector<Int> row(d + 1);
  row[0] = 1;
  for (unsigned dd = 1; dd <= d; ++dd) {
    std::vector<Int> next(d + 1);
    for (unsigned jj = 1; jj <= dd; ++jj)
      next[jj] = Int(jj) * row[jj] + row[jj - 1];
    row = std::move(next);
  }
  return row[j];
}

namespace {

// Weights w(d, j) = S(d, j) * j! mod M for j = 0..d; trailing zeros mod M
// are dropped by the caller.
std::vector<Int> binomial_weights(unsigned d, const Int& modulus) {
  std::vector<Int> w(d + 1);
  Int fact(1);
  for (unsigned j = 0; j <= d; ++j) {
    if (j > 0) fact *= j;
    Int v = stirling2(d, j) * fact;
    mpz_mod(w[j].get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  }
  return w;
}

}  // namespace

ConstancyResult constancy_mod(const IntPolynomial& p, unsigned k) {
  if (k < 1 || k > 64) throw error("constancy_mod: k out of range");
  const Int M = pow2(k);

  // Coefficients of the multi-binomial expansion, indexed by the
  // multi-index J encoded as a monomial.
  std::map<Monomial, Int> mahler;
  // Weight cache per per-variable degree.
  std::map<unsigned, std::vector<Int>> weights;

  for (const auto& term : p.terms()) {
    Int c;
    mpz_mod(c.get_mpz_t(), term.coeff.get_mpz_t(), M.get_mpz_t());
    if (c == 0) continue;
    std::vector<std::pair<Monomial, Int>> cur{{Monomial(), c}};
    for (const auto& ve : term.mono.entries()) {
      auto it = weights.find(ve.exp);
      if (it == weights.end())
        it = weights.emplace(ve.exp, binomial_weights(ve.exp, M)).first;
      const auto& w = *it;
      std::vector<std::pair<Monomial, Int>> next;
      next.reserve(cur.size() * (ve.exp + 1));
      for (unsigned j = 0; j <= ve.exp; ++j) {
        if (w.second[j] == 0) continue;
        for (const auto& [mono, coef] : cur) {
          Int nc;
          mpz_mod(nc.get_mpz_t(), Int(coef * w.second[j]).get_mpz_t(),
                  M.get_mpz_t());
          if (nc != 0) next.emplace_back(mono * Monomial(ve.var, j), nc);
        }
      }
      cur = std::move(next);
    }
    for (auto& [mono, coef] : cur) {
      Int& slot = mahler[mono];
      slot += coef;
      mpz_mod(slot.get_mpz_t(), slot.get_mpz_t(), M.get_mpz_t());
    }
  }

  ConstancyResult res;
  std::vector<const Monomial*> nonzero;  // nontrivial indices with c_J != 0
  for (const auto& [mono, coef] : mahler) {
    if (mono.is_unit() || coef == 0) continue;
    nonzero.push_back(&mono);
    for (const auto& ve : mono.entries()) res.active_vars.insert(ve.var);
  }

  if (nonzero.empty()) {
    res.constant = true;
    auto it = mahler.find(Monomial());
    res.residue = it == mahler.end() ? Int(0) : it->second;
    return res;
  }

  // Non-constant: some finite difference over the box [0..J_v] is nonzero
  // mod 2^k, so the function already takes two residues on that box.  Pick
  // the smallest box and scan it.
  const Monomial* best = nonzero.front();
  auto volume = [](const Monomial& m) {
    unsigned long v = 1;
    for (const auto& ve : m.entries()) v *= ve.exp + 1;
    return v;
  };
  for (const auto* m : nonzero)
    if (volume(*m) < volume(*best)) best = m;

  std::map<VarId, Int> point;
  for (VarId v : p.variables()) point[v] = 0;

  std::vector<std::pair<VarId, unsigned>> box;
  for (const auto& ve : best->entries()) box.emplace_back(ve.var, ve.exp);

  auto eval = [&](const std::map<VarId, Int>& pt) {
    Int r = p.specialize(pt);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), M.get_mpz_t());
    return r;
  };

  bool have_first = false;
  std::vector<unsigned> idx(box.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < box.size(); ++i) point[box[i].first] = idx[i];
    Int r = eval(point);
    if (!have_first) {
      res.point_a = point;
      res.residue_a = r;
      have_first = true;
    } else if (r != res.residue_a) {
      res.point_b = point;
      res.residue_b = r;
      res.constant = false;
      return res;
    }
    // Advance the mixed-radix counter.
    std::size_t i = 0;
    while (i < box.size() && ++idx[i] > box[i].second) idx[i++] = 0;
    if (i == box.size()) break;
  }
  throw error("constancy_mod: witness search failed (internal)");
}

std::set<Int> allowed_residues(const std::vector<Int>& coeffs, unsigned k) {
  if (coeffs.empty()) throw error("allowed_residues: empty coefficient list");
  if (coeffs.size() > 24) throw error("allowed_residues: too many coefficients");
  const Int M = pow2(k);
  std::set<Int> out;
  for (unsigned long mask = 0; mask < (1ul << coeffs.size()); ++mask) {
    Int sum(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      sum += (mask >> i) & 1 ? coeffs[i] : Int(-coeffs[i]);
    mpz_mod(sum.get_mpz_t(), sum.get_mpz_t(), M.get_mpz_t());
    out.insert(sum);
  }
  return out;
}

}  // namespace octic
