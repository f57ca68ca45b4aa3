#ifndef OCTIC_CONSTANCY_HPP
#define OCTIC_CONSTANCY_HPP

#include <map>
#include <set>
#include <vector>

#include "octic/polynomial.hpp"

namespace octic {

// Outcome of deciding whether a polynomial induces a constant function
// Z^v -> Z/2^k.  For a non-constant function two explicit integer
// assignments with differing residues are produced.
struct ConstancyResult {
  bool constant = false;
  Int residue;  // in [0, 2^k) when constant

  std::map<VarId, Int> point_a, point_b;  // witness when non-constant
  Int residue_a, residue_b;

  // Variables the induced function actually depends on mod 2^k.
  std::set<VarId> active_vars;
};

// Decides constancy of the function induced by p on Z^v modulo 2^k by
// rewriting every power t^d in the binomial basis, t^d = sum_j S(d,j) j!
// C(t,j): the function is constant iff every coefficient of a nontrivial
// binomial product vanishes mod 2^k.  Never enumerates (Z/2^k)^v.
ConstancyResult constancy_mod(const IntPolynomial& p, unsigned k);

// { sum_i coeffs[i]*eps_i mod 2^k : eps in {+1,-1}^r } for the admissible
// combinations of unit factors.
std::set<Int> allowed_residues(const std::vector<Int>& coeffs, unsigned k);

// Stirling number of the second kind S(d, j).
Int stirling2(unsigned d, unsigned j);

}  // namespace octic

#endif
